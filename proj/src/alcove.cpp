#include "nilblob/alcove.hpp"
#include "nilblob/errors.hpp"
#include "nilblob/jm.hpp"
#include "nilblob/rank.hpp"

#include <algorithm>
#include <deque>
#include <exception>
#include <functional>
#include <set>
#include <stdexcept>

namespace nb {

void check_params(const BlobParams& p) {
    if (p.n < 0) throw Error(Errc::TooSmallN, "n must be non-negative");
    if (p.e < 4 || p.m <= 1 || p.m >= p.e - 1)
        throw Error(Errc::SingularParameter, "need e >= 4 and 1 < m < e-1");
}

Classification classify(const BlobParams& p) {
    check_params(p);
    int lead = p.e - p.m;
    if (p.n < lead) throw Error(Errc::TooSmallN, "n < e - m: the orbit never reaches a wall");
    Classification c;
    c.K = (p.n - lead) / p.e;
    c.R = (p.n - lead) % p.e;
    c.singular = c.R == 0;
    return c;
}

Intervals path_intervals(const BlobParams& p) {
    auto c = classify(p);
    Intervals iv;
    iv.lead = {1, p.e - p.m};
    for (int i = 1; i <= c.K; ++i) iv.full.push_back({block_start(p, i) + 1, block_start(p, i + 1)});
    if (c.R) iv.last = std::make_pair(block_start(p, c.K + 1) + 1, p.n);
    return iv;
}

std::vector<int> PathTableau::heights() const {
    std::vector<int> h(steps.size() + 1, 0);
    for (std::size_t i = 0; i < steps.size(); ++i) h[i + 1] = h[i] + steps[i];
    return h;
}

Shape PathTableau::shape() const {
    Shape s;
    for (int x : steps) (x < 0 ? s.mu1 : s.mu2)++;
    return s;
}

std::pair<std::vector<int>, std::vector<int>> PathTableau::columns() const {
    std::pair<std::vector<int>, std::vector<int>> c;
    for (int i = 0; i < n(); ++i) (steps[i] < 0 ? c.first : c.second).push_back(i + 1);
    return c;
}

PathTableau PathTableau::from_heights(const std::vector<int>& h) {
    PathTableau t;
    for (std::size_t i = 1; i < h.size(); ++i) {
        int d = h[i] - h[i - 1];
        if (d != 1 && d != -1) throw Error(Errc::Parse, "heights must move by one");
        t.steps.push_back(d);
    }
    if (!h.empty() && h[0] != 0) throw Error(Errc::Parse, "heights must start at 0");
    return t;
}

PathTableau PathTableau::from_columns(int n, const std::vector<int>& second) {
    PathTableau t;
    t.steps.assign(n, -1);
    for (int x : second) {
        if (x < 1 || x > n) throw Error(Errc::Parse, "entry out of range");
        if (t.steps[x - 1] == 1) throw Error(Errc::Parse, "repeated entry");
        t.steps[x - 1] = 1;
    }
    return t;
}

PathTableau row_reading(const Shape& mu) {
    PathTableau t;
    int both = std::min(mu.mu1, mu.mu2);
    for (int r = 0; r < both; ++r) {
        t.steps.push_back(-1);
        t.steps.push_back(1);
    }
    for (int r = both; r < mu.mu1; ++r) t.steps.push_back(-1);
    for (int r = both; r < mu.mu2; ++r) t.steps.push_back(1);
    return t;
}

PathTableau lambda_tableau(int n) { return row_reading({n, 0}); }

PathTableau act(const PathTableau& t, int i) {
    if (i < 1 || i >= t.n()) throw Error(Errc::IndexOutOfRange, "s_i out of range");
    if (t.steps[i - 1] == t.steps[i]) throw Error(Errc::InvalidWord, "i and i+1 share a column");
    PathTableau r = t;
    std::swap(r.steps[i - 1], r.steps[i]);
    return r;
}

PathTableau act(const PathTableau& t, const std::vector<int>& word) {
    PathTableau r = t;
    for (int i : word) r = act(r, i);
    return r;
}

std::vector<int> residue_sequence(const PathTableau& t, const BlobParams& p) {
    // charge (0, m); a box in row r of column c has residue kappa_c - (r - 1)
    std::vector<int> res;
    int a = 0, b = 0;
    for (int s : t.steps) {
        int v = s < 0 ? -a++ : p.m - b++;
        res.push_back(((v % p.e) + p.e) % p.e);
    }
    return res;
}

namespace {

bool on_wall(const BlobParams& p, int x) { return ((x - p.m) % p.e + p.e) % p.e == 0; }

StdMap group(const std::set<PathTableau>& all) {
    StdMap m;
    for (auto& t : all) m[t.shape()].push_back(t);
    return m;
}

}  // namespace

StdMap enumerate_std(const BlobParams& p) {
    classify(p);
    std::set<PathTableau> seen;
    std::deque<PathTableau> todo{lambda_tableau(p.n)};
    seen.insert(todo.front());
    while (!todo.empty()) {
        PathTableau t = todo.front();
        todo.pop_front();
        auto h = t.heights();
        for (int k = 1; k < p.n; ++k) {
            if (!on_wall(p, h[k])) continue;
            PathTableau r = t;
            for (int i = k; i < p.n; ++i) r.steps[i] = -r.steps[i];
            if (seen.insert(r).second) todo.push_back(r);
        }
    }
    return group(seen);
}

StdMap enumerate_std_by_residue(const BlobParams& p) {
    classify(p);
    auto target = residue_sequence(lambda_tableau(p.n), p);
    std::set<PathTableau> found;
    PathTableau cur;
    std::function<void(int, int)> dfs = [&](int a, int b) {
        int k = cur.n();
        if (k == p.n) {
            found.insert(cur);
            return;
        }
        for (int s : {-1, 1}) {
            int v = s < 0 ? -a : p.m - b;
            if (((v % p.e) + p.e) % p.e != target[k]) continue;
            cur.steps.push_back(s);
            dfs(a + (s < 0), b + (s > 0));
            cur.steps.pop_back();
        }
    };
    dfs(0, 0);
    return group(found);
}

std::vector<int> reduced_expression(const PathTableau& t, const PathTableau& target) {
    if (t.shape() != target.shape()) throw Error(Errc::ShapeMismatch, "tableaux of different shapes");
    std::vector<int> w;
    PathTableau cur = t;
    auto goal = target.heights();
    auto h = cur.heights();
    while (true) {
        int pick = -1;
        for (int i = 1; i < cur.n(); ++i) {
            if (cur.steps[i - 1] == cur.steps[i]) continue;
            int moved = h[i] + cur.steps[i] - cur.steps[i - 1];
            if (std::abs(moved - goal[i]) < std::abs(h[i] - goal[i])) {
                pick = i;
                break;
            }
        }
        if (pick < 0) break;
        std::swap(cur.steps[pick - 1], cur.steps[pick]);
        h[pick] = h[pick - 1] + cur.steps[pick - 1];
        w.push_back(pick);
    }
    if (cur != target) throw std::logic_error("reduced_expression: no admissible swap");
    return w;
}

std::vector<int> one_line(const PathTableau& t) {
    auto base = row_reading(t.shape()).columns();
    auto cols = t.columns();
    std::vector<int> w(t.n());
    for (std::size_t r = 0; r < base.first.size(); ++r) w[base.first[r] - 1] = cols.first[r];
    for (std::size_t r = 0; r < base.second.size(); ++r) w[base.second[r] - 1] = cols.second[r];
    return w;
}

long inversion_count(const std::vector<int>& perm) {
    long c = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j) c += perm[i] > perm[j];
    return c;
}

std::vector<int> word_permutation(int n, const std::vector<int>& word) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    for (int s : word)
        for (int& v : w) {
            if (v == s) v = s + 1;
            else if (v == s + 1) v = s;
        }
    return w;
}

std::optional<Walk> decode_walk(const PathTableau& t, const BlobParams& p) {
    if (t.n() != p.n) return std::nullopt;
    auto c = classify(p);
    for (int i = 0; i < p.e - p.m; ++i)
        if (t.steps[i] != -1) return std::nullopt;
    Walk w;
    w.j.push_back(0);
    auto constant = [&](int lo, int hi) -> int {  // 1-based, inclusive
        int d = t.steps[lo - 1];
        for (int i = lo; i <= hi; ++i)
            if (t.steps[i - 1] != d) return 0;
        return d;
    };
    for (int i = 1; i <= c.K; ++i) {
        int d = constant(block_start(p, i) + 1, block_start(p, i + 1));
        if (!d) return std::nullopt;
        w.j.push_back(w.j.back() + d);
    }
    if (c.R) {
        w.last_dir = constant(block_start(p, c.K + 1) + 1, p.n);
        if (!w.last_dir) return std::nullopt;
    }
    return w;
}

PathTableau tableau_from_walk(const Walk& w, const BlobParams& p) {
    auto c = classify(p);
    if (static_cast<int>(w.j.size()) != c.K + 1 || w.j[0] != 0) throw Error(Errc::NotInOrbit, "walk length");
    if (c.R && w.last_dir == 0) throw Error(Errc::NotInOrbit, "walk needs a last direction");
    PathTableau t;
    t.steps.assign(p.e - p.m, -1);
    for (int i = 1; i <= c.K; ++i) {
        int d = w.j[i] - w.j[i - 1];
        if (d != 1 && d != -1) throw Error(Errc::NotInOrbit, "walk must move one wall at a time");
        t.steps.insert(t.steps.end(), p.e, d);
    }
    t.steps.insert(t.steps.end(), c.R, w.last_dir);
    return t;
}

namespace {

int level(int j) { return j >= 1 ? j - 1 : -j; }
bool in_A0(int j) { return j == 0 || j == 1; }
// the neighbour of wall a away from the fundamental strip
int outer_of(int a) { return a >= 1 ? a + 1 : a - 1; }

std::vector<int> bounce_walk(int K, int k) {
    std::vector<int> z(K + 1);
    for (int i = 0; i <= k; ++i) z[i] = i % 2;
    for (int i = k + 1; i <= K; ++i) z[i] = z[i - 1] + (z[k] == 1 ? 1 : -1);
    return z;
}

struct Singular {
    BlobParams p;
    PathTableau t;
};

// regular parameters act on the first n - R steps
Singular truncate(const PathTableau& t, const BlobParams& p) {
    auto c = classify(p);
    if (t.n() != p.n) throw Error(Errc::SizeMismatch, "tableau size differs from n");
    if (c.singular) return {p, t};
    BlobParams q{p.n - c.R, p.e, p.m};
    PathTableau s;
    s.steps.assign(t.steps.begin(), t.steps.begin() + q.n);
    return {q, s};
}

Walk walk_or_throw(const PathTableau& t, const BlobParams& p) {
    auto w = decode_walk(t, p);
    if (!w) throw Error(Errc::NotInOrbit, "tableau is not in the orbit of t^lambda");
    return *w;
}

PathTableau replace_steps(const PathTableau& cur, const PathTableau& src, int lo, int hi) {
    PathTableau r = cur;
    for (int i = lo; i < hi; ++i) r.steps[i] = src.steps[i];  // steps lo+1..hi
    return r;
}

}  // namespace

int shape_rank(const Walk& w, const Classification& c) { return c.K - level(w.j.back()); }

std::vector<int> RegionFactorization::word() const {
    std::vector<int> w;
    for (auto& f : theta) w.insert(w.end(), f.word.begin(), f.word.end());
    for (auto& f : u) w.insert(w.end(), f.word.begin(), f.word.end());
    return w;
}

RegionFactorization region_factorize(const PathTableau& t0, const BlobParams& p0) {
    auto [p, t] = truncate(t0, p0);
    auto c = classify(p);
    Walk w = walk_or_throw(t, p);
    const int K = c.K;
    const int k = shape_rank(w, c);

    // fold outward bumps towards the fundamental strip
    std::vector<int> cw = w.j;
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 1; i < K; ++i) {
            int a = cw[i - 1];
            if (a == cw[i + 1] && !in_A0(a) && cw[i] == outer_of(a)) {
                cw[i] = 2 * a - cw[i];
                changed = true;
                break;
            }
        }
    }

    auto z = bounce_walk(K, k);
    std::vector<bool> uprime(k, false);
    for (int i = 0; i <= K; ++i) {
        if (cw[i] == z[i]) continue;
        bool ok = i >= 1 && i <= k - 1 && cw[i - 1] == z[i - 1] && cw[i + 1] == z[i + 1] &&
                  cw[i] == 2 * z[i - 1] - z[i] && !uprime[i - 1];
        if (!ok) throw std::logic_error("region_factorize: folded walk is not central");
        uprime[i] = true;
    }

    RegionFactorization f;
    f.columns = k;
    f.central_walk = {cw, 0};
    Shape mu = t.shape();
    PathTableau P = row_reading(mu);
    PathTableau Z = tableau_from_walk({z, 0}, p);
    PathTableau T1 = tableau_from_walk(f.central_walk, p);
    auto hp = P.heights(), hz = Z.heights();

    // H_i: the disagreement interval of P and Z around the contact f(i+1)
    PathTableau cur = P;
    {
        std::vector<std::pair<int, int>> gaps;
        for (int a = 0; a < p.n;) {
            if (hp[a + 1] == hz[a + 1]) {
                ++a;
                continue;
            }
            int b = a + 1;
            while (hp[b] != hz[b]) ++b;
            gaps.push_back({a, b});
            a = b;
        }
        std::vector<int> owner(gaps.size(), -1);
        for (int i = 0; i < k; ++i) {
            int contact = block_start(p, i + 1);
            for (std::size_t g = 0; g < gaps.size(); ++g)
                if (gaps[g].first < contact && contact < gaps[g].second) {
                    if (owner[g] != -1) throw std::logic_error("two contacts in one region");
                    owner[g] = i;
                }
        }
        for (std::size_t g = 0; g < gaps.size(); ++g)
            if (owner[g] == -1) throw std::logic_error("region without a contact");
        for (std::size_t g = 0; g < gaps.size(); ++g) {
            int i = owner[g];
            if (uprime[i]) continue;
            PathTableau next = replace_steps(cur, Z, gaps[g].first, gaps[g].second);
            f.theta.push_back({RegionFactor::Kind::H, i, reduced_expression(cur, next)});
            cur = next;
        }
    }
    for (int i = 1; i < k; ++i) {
        if (!uprime[i]) continue;
        PathTableau next = replace_steps(cur, T1, block_start(p, i), block_start(p, i + 2));
        f.theta.push_back({RegionFactor::Kind::UPrime, i, reduced_expression(cur, next)});
        cur = next;
    }
    if (cur != T1) throw std::logic_error("region_factorize: theta part misses the central tableau");

    // unfold back to t, smallest diamond first
    std::vector<int> uw = cw;
    while (uw != w.j) {
        int pick = -1;
        for (int i = 1; i < K && pick < 0; ++i)
            if (uw[i] != w.j[i] && uw[i - 1] == uw[i + 1]) pick = i;
        if (pick < 0) throw std::logic_error("region_factorize: cannot unfold");
        uw[pick] = 2 * uw[pick - 1] - uw[pick];
        PathTableau next = tableau_from_walk({uw, 0}, p);
        f.u.push_back({RegionFactor::Kind::U, pick, reduced_expression(cur, next)});
        cur = next;
    }
    return f;
}

bool is_central(const PathTableau& t, const BlobParams& p) { return region_factorize(t, p).central(); }

CodMatrix codification_from_columns(const std::vector<bool>& uprime) {
    int k = static_cast<int>(uprime.size());
    CodMatrix c;
    c.rows.assign(2, std::vector<Symbol>(k));
    for (int i = 0; i < k; ++i) {
        if (uprime[i]) c.rows[1][i] = {Symbol::Kind::UPrime, i, false};
        else c.rows[0][i] = {Symbol::Kind::H, i, false};
    }
    return c;
}

CodMatrix codify(const PathTableau& t, const BlobParams& p) {
    auto f = region_factorize(t, p);
    std::vector<bool> up(f.columns, false);
    for (auto& x : f.theta)
        if (x.kind == RegionFactor::Kind::UPrime) up[x.index] = true;
    return codification_from_columns(up);
}

CodMatrix stack(const CodMatrix& cs, const CodMatrix& ct) {
    if (cs.cols() != ct.cols() || cs.rows.size() != 2 || ct.rows.size() != 2)
        throw Error(Errc::ShapeMismatch, "codifications of different widths");
    CodMatrix r;
    // c*(s): rows swapped and starred, so U' ends up outermost
    r.rows = {cs.rows[1], cs.rows[0], ct.rows[0], ct.rows[1]};
    for (int i = 0; i < 2; ++i)
        for (auto& s : r.rows[i]) s.star = s.kind != Symbol::Kind::Empty;
    return r;
}

CodMatrix codify(const PathTableau& s, const PathTableau& t, const BlobParams& p) {
    if (s.shape() != t.shape()) throw Error(Errc::ShapeMismatch, "s and t have different shapes");
    return stack(codify(s, p), codify(t, p));
}

std::string format_token(const Token& t) {
    switch (t.kind) {
        case Token::Kind::U: return "U" + std::to_string(t.index);
        case Token::Kind::Y: return "Y" + std::to_string(t.index);
        case Token::Kind::YDiff:
            return "(Y" + std::to_string(t.index) + " - Y" + std::to_string(t.index - 1) + ")";
    }
    return "?";
}

std::string format_truncated(const TruncatedWord& w) {
    std::string s = w.sign_undetermined ? "+-" : "";
    for (auto& t : w.tokens) {
        if (!s.empty()) s += ' ';
        s += format_token(t);
    }
    if (w.tokens.empty()) s += s.empty() ? "1" : " 1";
    return s;
}

TruncatedWord matrix_algorithm(const CodMatrix& cst) {
    if (cst.rows.size() != 4) throw Error(Errc::ShapeMismatch, "need the stacked 4-row codification");
    const int k = cst.cols();
    using K = Symbol::Kind;
    auto is = [&](int r, int i, K kind) { return cst.rows[r][i].kind == kind; };
    auto hh = [&](int i) { return is(1, i, K::H) && is(2, i, K::H); };

    // step 0: one empty column on the right
    std::vector<std::optional<Token>> top(k + 1), mid(k + 1), bottom(k + 1);
    // step 1
    for (int i = 0; i < k; ++i) {
        if (is(0, i, K::UPrime) && is(2, i, K::H)) top[i] = Token{Token::Kind::U, i};
        else if (is(1, i, K::H) && is(3, i, K::UPrime)) bottom[i] = Token{Token::Kind::U, i};
        else if (!hh(i) && !(is(0, i, K::UPrime) && is(3, i, K::UPrime)))
            throw Error(Errc::InvalidDiagram, "column " + std::to_string(i) + " is not a codification column");
    }
    // step 2, right to left
    for (int i = k - 1; i >= 0; --i)
        if (hh(i)) {
            if (mid[i + 1]) throw std::logic_error("middle slot taken");
            mid[i + 1] = Token{Token::Kind::Y, i + 1};
        }
    // step 3
    for (int i = 0; i < k; ++i)
        if (is(0, i, K::UPrime) && is(3, i, K::UPrime)) {
            if (!mid[i] || mid[i]->kind != Token::Kind::Y || mid[i]->index != i)
                throw Error(Errc::InvalidDiagram, "U' column without Y on its left");
            mid[i] = Token{Token::Kind::U, i};
        }
    // step 4
    TruncatedWord w;
    for (auto* row : {&top, &mid, &bottom})
        for (auto& x : *row)
            if (x) w.tokens.push_back(*x);
    return w;
}

TruncatedWord generator_word(const PathTableau& s, const PathTableau& t, const BlobParams& p) {
    if (!classify(p).singular) throw Error(Errc::SingularParameter, "generator_word needs singular parameters");
    if (s.shape() != t.shape()) throw Error(Errc::ShapeMismatch, "s and t have different shapes");
    auto fs = region_factorize(s, p), ft = region_factorize(t, p);
    if (!fs.central() || !ft.central()) throw Error(Errc::NotCentral, "generator_word needs central tableaux");
    return matrix_algorithm(codify(s, t, p));
}

namespace {

TruncatedWord sandwich(const RegionFactorization& fs, const RegionFactorization& ft, const TruncatedWord& core,
                       std::optional<Token> prefix) {
    TruncatedWord w;
    for (auto it = fs.u.rbegin(); it != fs.u.rend(); ++it) w.tokens.push_back({Token::Kind::U, it->index});
    if (prefix) w.tokens.push_back(*prefix);
    w.tokens.insert(w.tokens.end(), core.tokens.begin(), core.tokens.end());
    for (auto& x : ft.u) w.tokens.push_back({Token::Kind::U, x.index});
    return w;
}

}  // namespace

TruncatedWord basis_word(const PathTableau& s, const PathTableau& t, const BlobParams& p) {
    if (s.shape() != t.shape()) throw Error(Errc::ShapeMismatch, "s and t have different shapes");
    auto fs = region_factorize(s, p), ft = region_factorize(t, p);
    PathTableau s1 = tableau_from_walk(fs.central_walk, p), t1 = tableau_from_walk(ft.central_walk, p);
    return sandwich(fs, ft, generator_word(s1, t1, p), std::nullopt);
}

Side side_of(const PathTableau& t, const BlobParams& p) {
    auto c = classify(p);
    if (c.singular) throw Error(Errc::SingularParameter, "inner/outer only exists for regular parameters");
    Walk w = walk_or_throw(t, p);
    int j = w.j.back();
    bool inner = wall_x(p, j) > 0 ? w.last_dir < 0 : w.last_dir > 0;
    return inner ? Side::Inner : Side::Outer;
}

TruncatedWord generator_word_regular(const PathTableau& s, const PathTableau& t, const BlobParams& p) {
    auto c = classify(p);
    if (c.singular) throw Error(Errc::SingularParameter, "regular parameters expected");
    if (s.shape() != t.shape()) throw Error(Errc::ShapeMismatch, "s and t have different shapes");
    Side ss = side_of(s, p), st = side_of(t, p);
    if (ss != st) throw Error(Errc::MixedInnerOuter, "one tableau is inner, the other outer");
    auto [q, sb] = truncate(s, p);
    PathTableau tb = truncate(t, p).t;
    if (ss == Side::Outer) return basis_word(sb, tb, q);

    auto fs = region_factorize(sb, q), ft = region_factorize(tb, q);
    PathTableau s1 = tableau_from_walk(fs.central_walk, q), t1 = tableau_from_walk(ft.central_walk, q);
    int jK = walk_or_throw(t, p).j.back();
    Token pre = in_A0(jK) ? Token{Token::Kind::Y, c.K + 1} : Token{Token::Kind::YDiff, c.K + 1};
    return sandwich(fs, ft, generator_word(s1, t1, q), pre);
}

NilBlobImage::NilBlobImage(const BlobParams& p) {
    auto c = classify(p);
    if (c.K < 1) throw Error(Errc::TooSmallN, "the image algebra needs K >= 1");
    K_ = c.K;
    e_ = p.e;
    singular_ = c.singular;
    Y_ = Y_elements(K_, mul_);
}

ExtElement NilBlobImage::token_image(const Token& t) const {
    switch (t.kind) {
        case Token::Kind::U: {
            if (t.index < 1 || t.index >= K_) throw Error(Errc::IndexOutOfRange, "U index out of range");
            Element u = generator(K_, t.index);
            if (e_ % 2) u = -u;
            return {u, Element(K_)};
        }
        case Token::Kind::Y:
            if (t.index >= 1 && t.index <= K_) return {Y_[t.index - 1], Element(K_)};
            if (t.index == K_ + 1 && !singular_) return ExtElement::J(K_);
            throw Error(Errc::IndexOutOfRange, "Y index out of range");
        case Token::Kind::YDiff:
            if (singular_ || t.index != K_ + 1) throw Error(Errc::IndexOutOfRange, "Y difference out of range");
            return ExtElement::J(K_) - ExtElement{Y_[K_ - 1], Element(K_)};
    }
    throw std::logic_error("token kind");
}

ExtElement NilBlobImage::map(const TruncatedWord& w) {
    ExtElement x{Element::identity(K_), Element(K_)};
    for (auto& t : w.tokens) x = mul_extended(x, token_image(t), mul_);
    return x;
}

ExtElement map_to_nilblob(const TruncatedWord& w, const BlobParams& p) {
    NilBlobImage img(p);
    return img.map(w);
}

RankReport rank_of_images(const BlobParams& p, bool parallel) {
    auto c = classify(p);
    NilBlobImage img(p);
    auto std_sets = enumerate_std(p);
    std::vector<std::pair<PathTableau, PathTableau>> pairs;
    for (auto& [mu, ts] : std_sets)
        for (auto& s : ts)
            for (auto& t : ts) pairs.push_back({s, t});

    BasisIndex idx(c.K);
    std::vector<std::vector<Scalar>> rows(pairs.size());
    auto one = [&](std::size_t i) {
        auto& [s, t] = pairs[i];
        TruncatedWord w = c.singular ? basis_word(s, t, p) : generator_word_regular(s, t, p);
        rows[i] = idx.coordinates(img.map(w));
    };
    const long np = static_cast<long>(pairs.size());
    if (parallel) {
        std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < np; ++i) {
            try {
                one(i);
            } catch (...) {
#pragma omp critical
                err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
    } else {
        for (long i = 0; i < np; ++i) one(i);
    }
    RankReport r;
    r.pairs = pairs.size();
    r.rank = exact_rank(rows);
    r.expected = (c.singular ? 1 : 2) * binomial(2 * c.K, c.K);
    return r;
}

}  // namespace nb
