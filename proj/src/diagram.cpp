#include "nilblob/diagram.hpp"
#include "nilblob/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace nb {

std::string point_label(int n, int p) {
    return (is_top(n, p) ? "t" : "b") + std::to_string(pt_index(n, p));
}

int parse_point_label(int n, const std::string& s) {
    if (s.size() < 2 || (s[0] != 'b' && s[0] != 't' && s[0] != 'B' && s[0] != 'T'))
        throw Error(Errc::Parse, "bad point label '" + s + "'");
    int i = 0;
    for (std::size_t j = 1; j < s.size(); ++j) {
        if (s[j] < '0' || s[j] > '9') throw Error(Errc::Parse, "bad point label '" + s + "'");
        i = i * 10 + (s[j] - '0');
        if (i > 1000000) throw Error(Errc::Parse, "point index too large");
    }
    if (i < 1 || i > n) throw Error(Errc::Parse, "point '" + s + "' out of range");
    return (s[0] == 't' || s[0] == 'T') ? top_pt(n, i) : bottom_pt(n, i);
}

BlobDiagram::BlobDiagram(int n, std::vector<int> partner, std::vector<char> mark)
    : n_(n), partner_(std::move(partner)), mark_(std::move(mark)) {}

BlobDiagram BlobDiagram::identity(int n) {
    std::vector<int> p(2 * n);
    for (int i = 1; i <= n; ++i) {
        p[bottom_pt(n, i)] = top_pt(n, i);
        p[top_pt(n, i)] = bottom_pt(n, i);
    }
    return BlobDiagram(n, std::move(p), std::vector<char>(2 * n, 0));
}

std::vector<Arc> BlobDiagram::arcs() const {
    std::vector<Arc> out;
    for (int p = 0; p < 2 * n_; ++p)
        if (p < partner_[p]) out.push_back({p, partner_[p]});
    return out;
}

std::vector<Arc> BlobDiagram::marked_arcs() const {
    std::vector<Arc> out;
    for (int p = 0; p < 2 * n_; ++p)
        if (p < partner_[p] && mark_[p]) out.push_back({p, partner_[p]});
    return out;
}

int BlobDiagram::through_count() const {
    int t = 0;
    for (int p = 0; p < n_; ++p) t += is_through(p);
    return t;
}

int BlobDiagram::mark_count() const {
    int c = 0;
    for (int p = 0; p < 2 * n_; ++p)
        if (p < partner_[p] && mark_[p]) ++c;
    return c;
}

BlobDiagram BlobDiagram::with_mark(int p, bool on) const {
    BlobDiagram d = *this;
    d.mark_[p] = d.mark_[partner_[p]] = on ? 1 : 0;
    return d;
}

BlobDiagram BlobDiagram::unmarked() const {
    return BlobDiagram(n_, partner_, std::vector<char>(2 * n_, 0));
}

std::size_t BlobDiagram::hash() const {
    std::size_t h = std::hash<int>()(n_);
    for (int p = 0; p < 2 * n_; ++p)
        h = h * 1000003u ^ static_cast<std::size_t>(partner_[p] * 2 + (mark_[p] ? 1 : 0));
    return h;
}

namespace {

std::pair<int, int> circ_span(int n, const Arc& a) {
    int x = circ_pos(n, a.a), y = circ_pos(n, a.b);
    if (x > y) std::swap(x, y);
    return {x, y};
}

}  // namespace

bool arc_encloses(int n, const Arc& outer, const Arc& inner) {
    auto [ox, oy] = circ_span(n, outer);
    auto [ix, iy] = circ_span(n, inner);
    return ox < ix && iy < oy;
}

bool is_planar(const BlobDiagram& d) {
    int n = d.n();
    auto arcs = d.arcs();
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        auto [x1, y1] = circ_span(n, arcs[i]);
        for (std::size_t j = i + 1; j < arcs.size(); ++j) {
            auto [x2, y2] = circ_span(n, arcs[j]);
            if ((x1 < x2 && x2 < y1 && y1 < y2) || (x2 < x1 && x1 < y2 && y2 < y1)) return false;
        }
    }
    return true;
}

std::vector<Arc> left_exposed_arcs(const BlobDiagram& d) {
    auto arcs = d.arcs();
    std::vector<Arc> out;
    for (const Arc& a : arcs) {
        bool inside = false;
        for (const Arc& b : arcs)
            if (arc_encloses(d.n(), b, a)) { inside = true; break; }
        if (!inside) out.push_back(a);
    }
    return out;
}

bool is_left_exposed(const BlobDiagram& d, int p) {
    Arc a{std::min(p, d.partner(p)), std::max(p, d.partner(p))};
    for (const Arc& b : d.arcs())
        if (arc_encloses(d.n(), b, a)) return false;
    return true;
}

void check_valid(const BlobDiagram& d) {
    int n = d.n();
    if (n < 1 || static_cast<int>(d.partners().size()) != 2 * n ||
        static_cast<int>(d.marks().size()) != 2 * n)
        throw Error(Errc::NotPerfectMatching, "wrong point count");
    for (int p = 0; p < 2 * n; ++p) {
        int q = d.partner(p);
        if (q < 0 || q >= 2 * n || q == p || d.partner(q) != p)
            throw Error(Errc::NotPerfectMatching, "point " + point_label(n, p) + " badly matched");
        if (d.marks()[p] != d.marks()[q])
            throw Error(Errc::InvalidDiagram, "mark flags disagree on an arc");
    }
    if (!is_planar(d)) throw Error(Errc::NotPlanar, "arcs interleave");
    for (const Arc& a : d.marked_arcs())
        if (!is_left_exposed(d, a.a))
            throw Error(Errc::MarkNotLeftExposed,
                        point_label(n, a.a) + "-" + point_label(n, a.b) + " is enclosed");
}

BlobDiagram validate(int n, const std::vector<std::pair<int, int>>& pairs,
                     const std::vector<std::pair<int, int>>& marks) {
    if (n < 1) throw Error(Errc::NotPerfectMatching, "n must be positive");
    std::vector<int> partner(2 * n, -1);
    for (auto [a, b] : pairs) {
        if (a < 0 || b < 0 || a >= 2 * n || b >= 2 * n || a == b)
            throw Error(Errc::NotPerfectMatching, "bad pair");
        if (partner[a] != -1 || partner[b] != -1)
            throw Error(Errc::NotPerfectMatching, "point used twice");
        partner[a] = b;
        partner[b] = a;
    }
    for (int p = 0; p < 2 * n; ++p)
        if (partner[p] == -1)
            throw Error(Errc::NotPerfectMatching, "point " + point_label(n, p) + " unmatched");
    std::vector<char> mark(2 * n, 0);
    for (auto [a, b] : marks) {
        if (a < 0 || b < 0 || a >= 2 * n || b >= 2 * n || partner[a] != b)
            throw Error(Errc::InvalidDiagram, "mark on a pair that is not in the matching");
        if (mark[a]) throw Error(Errc::DuplicateMark, point_label(n, a) + " marked twice");
        mark[a] = mark[b] = 1;
    }
    BlobDiagram d(n, std::move(partner), std::move(mark));
    check_valid(d);
    return d;
}

BlobDiagram involution(const BlobDiagram& d) {
    int n = d.n();
    auto flip = [n](int p) { return is_top(n, p) ? p - n : p + n; };
    std::vector<int> partner(2 * n);
    std::vector<char> mark(2 * n);
    for (int p = 0; p < 2 * n; ++p) {
        partner[flip(p)] = flip(d.partner(p));
        mark[flip(p)] = d.marks()[p];
    }
    return BlobDiagram(n, std::move(partner), std::move(mark));
}

namespace {

// noncrossing perfect matchings of circle positions [lo, hi)
void matchings(int lo, int hi, std::vector<int>& cur, const std::function<void()>& emit) {
    if (lo >= hi) { emit(); return; }
    for (int j = lo + 1; j < hi; j += 2) {
        cur[lo] = j;
        cur[j] = lo;
        matchings(lo + 1, j, cur, [&] { matchings(j + 1, hi, cur, emit); });
    }
}

}  // namespace

std::vector<BlobDiagram> enumerate_tl_diagrams(int n) {
    std::vector<BlobDiagram> out;
    std::vector<int> pos(2 * n, -1);
    // circle position -> point
    std::vector<int> point_at(2 * n);
    for (int p = 0; p < 2 * n; ++p) point_at[circ_pos(n, p)] = p;
    matchings(0, 2 * n, pos, [&] {
        std::vector<int> partner(2 * n);
        for (int x = 0; x < 2 * n; ++x) partner[point_at[x]] = point_at[pos[x]];
        out.emplace_back(n, std::move(partner), std::vector<char>(2 * n, 0));
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BlobDiagram> enumerate_diagrams(int n) {
    std::vector<BlobDiagram> out;
    for (const BlobDiagram& d : enumerate_tl_diagrams(n)) {
        auto ex = left_exposed_arcs(d);
        std::size_t s = ex.size();
        for (std::size_t mask = 0; mask < (std::size_t(1) << s); ++mask) {
            BlobDiagram e = d;
            for (std::size_t j = 0; j < s; ++j)
                if (mask >> j & 1) e = e.with_mark(ex[j].a, true);
            out.push_back(std::move(e));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Halves split_halves(const BlobDiagram& d) {
    int n = d.n();
    Halves h;
    h.top.n = h.bottom.n = n;
    int lead = -1;  // bottom point of the leftmost through arc
    for (int p = 0; p < 2 * n; ++p) {
        int q = d.partner(p);
        bool pt = is_top(n, p);
        HalfDiagram& side = pt ? h.top : h.bottom;
        if (is_top(n, q) == pt) {
            if (p < q) {
                side.arcs.push_back({pt_index(n, p), pt_index(n, q)});
                if (d.marked(p)) side.marked.push_back({pt_index(n, p), pt_index(n, q)});
            }
        } else {
            side.free_points.push_back(pt_index(n, p));
            if (!pt && lead == -1) lead = p;
        }
    }
    int t = static_cast<int>(h.bottom.free_points.size());
    h.k = (lead != -1 && d.marked(lead)) ? -t : t;
    h.top.k = h.bottom.k = h.k;
    return h;
}

BlobDiagram join_halves(const HalfDiagram& top, const HalfDiagram& bottom, int k) {
    int n = top.n;
    if (bottom.n != n) throw Error(Errc::SizeMismatch, "halves of different size");
    int t = k < 0 ? -k : k;
    if (static_cast<int>(top.free_points.size()) != t ||
        static_cast<int>(bottom.free_points.size()) != t)
        throw Error(Errc::InvalidDiagram, "free point count does not match k");
    std::vector<std::pair<int, int>> pairs, marks;
    for (auto [a, b] : top.arcs) pairs.push_back({top_pt(n, a), top_pt(n, b)});
    for (auto [a, b] : top.marked) marks.push_back({top_pt(n, a), top_pt(n, b)});
    for (auto [a, b] : bottom.arcs) pairs.push_back({bottom_pt(n, a), bottom_pt(n, b)});
    for (auto [a, b] : bottom.marked) marks.push_back({bottom_pt(n, a), bottom_pt(n, b)});
    for (int j = 0; j < t; ++j) {
        pairs.push_back({bottom_pt(n, bottom.free_points[j]), top_pt(n, top.free_points[j])});
        if (j == 0 && k < 0) marks.push_back(pairs.back());
    }
    return validate(n, pairs, marks);
}

std::vector<int> walk_of_half(const HalfDiagram& h) {
    std::vector<char> closes(h.n + 1, 0);
    for (auto [a, b] : h.arcs) closes[std::max(a, b)] = 1;
    std::vector<int> w(h.n + 1, 0);
    for (int i = 1; i <= h.n; ++i) w[i] = w[i - 1] + (closes[i] ? -1 : 1);
    return w;
}

HalfDiagram half_from_walk(const std::vector<int>& heights) {
    HalfDiagram h;
    h.n = static_cast<int>(heights.size()) - 1;
    std::vector<int> open;
    for (int i = 1; i <= h.n; ++i) {
        if (heights[i] > heights[i - 1]) {
            open.push_back(i);
        } else {
            if (open.empty()) throw Error(Errc::InvalidDiagram, "walk goes below zero");
            h.arcs.push_back({open.back(), i});
            open.pop_back();
        }
    }
    std::sort(h.arcs.begin(), h.arcs.end());
    h.free_points = open;
    h.k = static_cast<int>(open.size());
    return h;
}

std::string render_ascii(const BlobDiagram& d) {
    int n = d.n();
    const int W = 4;
    // depth of an arc within its own side: innermost = 1
    auto side_depths = [&](bool top) {
        std::map<int, int> depth;  // left endpoint -> depth
        std::vector<std::pair<int, int>> arcs;
        for (int i = 1; i <= n; ++i) {
            int p = top ? top_pt(n, i) : bottom_pt(n, i);
            int q = d.partner(p);
            if (is_top(n, q) == top && p < q) arcs.push_back({i, pt_index(n, q)});
        }
        std::sort(arcs.begin(), arcs.end(), [](auto x, auto y) { return x.second - x.first < y.second - y.first; });
        for (auto [a, b] : arcs) {
            int dd = 1;
            for (auto [c, e] : arcs)
                if (a < c && e < b) dd = std::max(dd, depth[c] + 1);
            depth[a] = dd;
        }
        return std::make_pair(arcs, depth);
    };
    auto [tarcs, tdepth] = side_depths(true);
    auto [barcs, bdepth] = side_depths(false);
    int dt = 0, db = 0;
    for (auto& [a, v] : tdepth) dt = std::max(dt, v);
    for (auto& [a, v] : bdepth) db = std::max(db, v);
    int rows = dt + db + 1, cols = (n - 1) * W + 1;
    std::vector<std::vector<std::string>> g(rows, std::vector<std::string>(cols, " "));
    auto col = [&](int i) { return (i - 1) * W; };
    auto draw_side = [&](const std::vector<std::pair<int, int>>& arcs, std::map<int, int>& depth, bool top) {
        for (auto [a, b] : arcs) {
            int dd = depth[a];
            for (int r = 0; r < dd; ++r) {
                int row = top ? r : rows - 1 - r;
                g[row][col(a)] = g[row][col(b)] = (r == dd - 1) ? "+" : "|";
            }
            int row = top ? dd - 1 : rows - dd;
            for (int c = col(a) + 1; c < col(b); ++c) g[row][c] = "-";
            int p = top ? top_pt(n, a) : bottom_pt(n, a);
            if (d.marked(p)) g[row][(col(a) + col(b)) / 2] = "●";
        }
    };
    draw_side(tarcs, tdepth, true);
    draw_side(barcs, bdepth, false);
    // through arcs: vertical at the top end, slanted joins avoided by a bend row
    for (int i = 1; i <= n; ++i) {
        int p = bottom_pt(n, i);
        if (!d.is_through(p)) continue;
        int j = pt_index(n, d.partner(p));
        int mid = dt;
        for (int r = 0; r < mid; ++r) g[r][col(j)] = "|";
        for (int r = mid + 1; r < rows; ++r) g[r][col(i)] = "|";
        int lo = std::min(col(i), col(j)), hi = std::max(col(i), col(j));
        for (int c = lo; c <= hi; ++c) g[mid][c] = (c == lo || c == hi) ? "+" : "-";
        if (i == j) g[mid][col(i)] = "|";
        if (d.marked(p)) g[mid][col(i)] = "●";
    }
    std::string out;
    std::string labels;
    for (int i = 1; i <= n; ++i) {
        std::string s = "t" + std::to_string(i);
        labels += s + std::string(std::max(1, W - static_cast<int>(s.size())), ' ');
    }
    out += labels + "\n";
    for (auto& row : g) {
        std::string line;
        for (auto& c : row) line += c;
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    labels.clear();
    for (int i = 1; i <= n; ++i) {
        std::string s = "b" + std::to_string(i);
        labels += s + std::string(std::max(1, W - static_cast<int>(s.size())), ' ');
    }
    out += labels + "\n";
    return out;
}

}  // namespace nb
