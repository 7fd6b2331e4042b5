#pragma once
// Independent reference computations shared by the unit tests.

#include "nilblob/diagram.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace oracle {

// Walk the boundary of the face touching the left edge (between circle
// positions 2n-1 and 0); the chords met on the way are the exposed arcs.
inline std::set<nb::Arc> face_trace_exposed(const nb::BlobDiagram& d) {
    const int n = d.n(), N = 2 * n;
    std::vector<int> at(N);
    for (int p = 0; p < N; ++p) at[nb::circ_pos(n, p)] = p;
    std::set<nb::Arc> out;
    int seg = N - 1;  // segment (seg, seg+1 mod N)
    do {
        int p = at[(seg + 1) % N];
        int r = d.partner(p);
        out.insert({std::min(p, r), std::max(p, r)});
        seg = nb::circ_pos(n, r);
    } while (seg != N - 1);
    return out;
}

// Catalan-style count C(2n, n) by Pascal's triangle
inline std::size_t central_binomial(int n) {
    std::vector<std::vector<std::size_t>> c(2 * n + 1, std::vector<std::size_t>(2 * n + 1, 0));
    for (int i = 0; i <= 2 * n; ++i) {
        c[i][0] = 1;
        for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + (j < i ? c[i - 1][j] : 0);
    }
    return c[2 * n][n];
}

}  // namespace oracle
