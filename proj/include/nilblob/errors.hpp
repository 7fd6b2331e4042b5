#pragma once

#include <stdexcept>
#include <string>

namespace nb {

enum class Errc {
    NotPerfectMatching,
    NotPlanar,
    MarkNotLeftExposed,
    DuplicateMark,
    SizeMismatch,
    SingularParameter,
    ZeroQ,
    TableMiss,
    InvalidDiagram,
    InvalidWord,
    TooSmallN,
    ShapeMismatch,
    NotInOrbit,
    NotCentral,
    MixedInnerOuter,
    IndexOutOfRange,
    Parse,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc c, const std::string& what)
        : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace nb
