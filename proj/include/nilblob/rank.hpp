#pragma once

#include "nilblob/algebra.hpp"

#include <cstddef>
#include <unordered_map>
#include <vector>

namespace nb {

std::size_t binomial(int n, int k);

// row rank over Q, fraction-free is not needed: mpq keeps entries exact
std::size_t exact_rank(std::vector<std::vector<Scalar>> rows);

// coordinates relative to enumerate_diagrams(n)
class BasisIndex {
public:
    explicit BasisIndex(int n);
    std::size_t size() const { return basis_.size(); }
    const std::vector<BlobDiagram>& basis() const { return basis_; }
    std::size_t index(const BlobDiagram& d) const;
    std::vector<Scalar> coordinates(const Element& x) const;
    // a0 then a1
    std::vector<Scalar> coordinates(const ExtElement& x) const;

private:
    std::vector<BlobDiagram> basis_;
    std::unordered_map<BlobDiagram, std::size_t, DiagramHash> pos_;
};

}  // namespace nb
