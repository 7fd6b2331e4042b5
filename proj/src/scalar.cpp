#include "nilblob/scalar.hpp"
#include "nilblob/errors.hpp"

#include <cctype>

namespace nb {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::NotPerfectMatching: return "NotPerfectMatching";
    case Errc::NotPlanar: return "NotPlanar";
    case Errc::MarkNotLeftExposed: return "MarkNotLeftExposed";
    case Errc::DuplicateMark: return "DuplicateMark";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::SingularParameter: return "SingularParameter";
    case Errc::ZeroQ: return "ZeroQ";
    case Errc::TableMiss: return "TableMiss";
    case Errc::InvalidDiagram: return "InvalidDiagram";
    case Errc::InvalidWord: return "InvalidWord";
    case Errc::TooSmallN: return "TooSmallN";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NotInOrbit: return "NotInOrbit";
    case Errc::NotCentral: return "NotCentral";
    case Errc::MixedInnerOuter: return "MixedInnerOuter";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::Parse: return "Parse";
    }
    return "Unknown";
}

Scalar parse_scalar(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw Error(Errc::Parse, "empty scalar");
    if (s[0] == '+') s.erase(0, 1);
    Scalar x;
    // mpq_class throws std::invalid_argument on junk
    try {
        x = Scalar(s, 10);
    } catch (const std::invalid_argument&) {
        throw Error(Errc::Parse, "bad scalar '" + text + "'");
    }
    if (x.get_den() == 0) throw Error(Errc::Parse, "zero denominator in '" + text + "'");
    x.canonicalize();
    return x;
}

std::string format_scalar(const Scalar& x) { return x.get_str(); }

Scalar power(const Scalar& q, long e) {
    if (e < 0) {
        if (q == 0) throw Error(Errc::ZeroQ, "negative power of zero");
        return power(Scalar(1) / q, -e);
    }
    Scalar r = 1, b = q;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Scalar gaussian_int(long k, const Scalar& q) {
    if (q == 0) throw Error(Errc::ZeroQ, "gaussian integer at q = 0");
    if (k == 0) return 0;
    if (k < 0) return -gaussian_int(-k, q);
    Scalar s = 0;
    for (long j = 0; j < k; ++j) s += power(q, k - 1 - 2 * j);
    return s;
}

}  // namespace nb
