#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace nb {

// Points are numbered 0..2n-1: bottom i -> i-1, top i -> n+i-1 (i is 1-based).
inline int bottom_pt(int n, int i) { (void)n; return i - 1; }
inline int top_pt(int n, int i) { return n + i - 1; }
inline bool is_top(int n, int p) { return p >= n; }
inline int pt_index(int n, int p) { return is_top(n, p) ? p - n + 1 : p + 1; }
// position on the boundary circle read from the left edge: b1..bn, tn..t1
inline int circ_pos(int n, int p) { return is_top(n, p) ? 3 * n - 1 - p : p; }

std::string point_label(int n, int p);
int parse_point_label(int n, const std::string& s);

struct Arc {
    int a, b;  // a < b
    auto operator<=>(const Arc&) const = default;
};

class BlobDiagram {
public:
    BlobDiagram() = default;
    // no checks; mark[p] must agree on both endpoints of an arc
    BlobDiagram(int n, std::vector<int> partner, std::vector<char> mark);

    static BlobDiagram identity(int n);

    int n() const { return n_; }
    int partner(int p) const { return partner_[p]; }
    bool marked(int p) const { return mark_[p] != 0; }
    const std::vector<int>& partners() const { return partner_; }
    const std::vector<char>& marks() const { return mark_; }

    std::vector<Arc> arcs() const;
    std::vector<Arc> marked_arcs() const;
    int through_count() const;
    int mark_count() const;
    bool is_through(int p) const { return is_top(n_, p) != is_top(n_, partner_[p]); }

    BlobDiagram with_mark(int p, bool on) const;
    BlobDiagram unmarked() const;

    auto operator<=>(const BlobDiagram&) const = default;
    bool operator==(const BlobDiagram&) const = default;

    std::size_t hash() const;

private:
    int n_ = 0;
    std::vector<int> partner_;
    std::vector<char> mark_;
};

struct DiagramHash {
    std::size_t operator()(const BlobDiagram& d) const { return d.hash(); }
};

// Checked construction; pairs/marks given as point indices. Throws nb::Error.
BlobDiagram validate(int n, const std::vector<std::pair<int, int>>& pairs,
                     const std::vector<std::pair<int, int>>& marks);
// re-checks an existing value
void check_valid(const BlobDiagram& d);

bool is_planar(const BlobDiagram& d);
bool arc_encloses(int n, const Arc& outer, const Arc& inner);
std::vector<Arc> left_exposed_arcs(const BlobDiagram& d);
bool is_left_exposed(const BlobDiagram& d, int p);

BlobDiagram involution(const BlobDiagram& d);

std::vector<BlobDiagram> enumerate_diagrams(int n);
std::vector<BlobDiagram> enumerate_tl_diagrams(int n);  // unmarked only

// One side of a diagram. Positions are 1-based.
struct HalfDiagram {
    int n = 0;
    int k = 0;  // |k| free points; k < 0 means the leftmost through arc was marked
    std::vector<std::pair<int, int>> arcs;
    std::vector<std::pair<int, int>> marked;
    std::vector<int> free_points;
    bool operator==(const HalfDiagram&) const = default;
};

struct Halves {
    HalfDiagram top, bottom;
    int k = 0;
};

Halves split_halves(const BlobDiagram& d);
BlobDiagram join_halves(const HalfDiagram& top, const HalfDiagram& bottom, int k);

// heights h(0..n); step i goes down iff i closes an arc
std::vector<int> walk_of_half(const HalfDiagram& h);
// inverse of walk_of_half for an unmarked half
HalfDiagram half_from_walk(const std::vector<int>& heights);

std::string render_ascii(const BlobDiagram& d);

}  // namespace nb
