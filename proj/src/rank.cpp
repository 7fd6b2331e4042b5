#include "nilblob/rank.hpp"
#include "nilblob/errors.hpp"

#include <utility>

namespace nb {

std::size_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::size_t exact_rank(std::vector<std::vector<Scalar>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0) continue;
            Scalar f = rows[r][c] / rows[rank][c];
            for (std::size_t j = c; j < cols; ++j)
                if (rows[rank][j] != 0) rows[r][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

BasisIndex::BasisIndex(int n) : basis_(enumerate_diagrams(n)) {
    for (std::size_t i = 0; i < basis_.size(); ++i) pos_.emplace(basis_[i], i);
}

std::size_t BasisIndex::index(const BlobDiagram& d) const {
    auto it = pos_.find(d);
    if (it == pos_.end()) throw Error(Errc::TableMiss, "diagram not in the basis");
    return it->second;
}

std::vector<Scalar> BasisIndex::coordinates(const Element& x) const {
    std::vector<Scalar> v(basis_.size());
    for (auto& [d, c] : x.terms()) v[index(d)] = c;
    return v;
}

std::vector<Scalar> BasisIndex::coordinates(const ExtElement& x) const {
    auto v = coordinates(x.a0);
    auto w = coordinates(x.a1);
    v.insert(v.end(), w.begin(), w.end());
    return v;
}

}  // namespace nb
