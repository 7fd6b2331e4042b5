#include "nilblob/presentation.hpp"
#include "nilblob/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace nb {

bool Word::has_j() const { return std::find(letters.begin(), letters.end(), kJ) != letters.end(); }

Word parse_word(const std::string& text, int n, bool allow_j) {
    Word w;
    w.n = n;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        char c = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
        if (c == 'J' && tok.size() == 1) {
            if (!allow_j) throw Error(Errc::InvalidWord, "J is only available in the extended algebra");
            w.letters.push_back(kJ);
            continue;
        }
        if ((c != 'U' && c != 'V') || tok.size() < 2) throw Error(Errc::InvalidWord, "bad token '" + tok + "'");
        long k = 0;
        for (std::size_t j = 1; j < tok.size(); ++j) {
            if (!std::isdigit(static_cast<unsigned char>(tok[j]))) throw Error(Errc::InvalidWord, "bad token '" + tok + "'");
            k = k * 10 + (tok[j] - '0');
            if (k > 1000000) throw Error(Errc::InvalidWord, "index too large");
        }
        if (k >= n) throw Error(Errc::IndexOutOfRange, "'" + tok + "' needs n > " + std::to_string(k));
        w.letters.push_back(static_cast<int>(k));
    }
    return w;
}

std::string format_word(const Word& w) {
    std::string s;
    for (int l : w.letters) {
        if (!s.empty()) s += ' ';
        s += l == kJ ? std::string("J") : "U" + std::to_string(l);
    }
    return s;
}

int degree(const Word& w) {
    int d = 0;
    for (int l : w.letters) d += (l == 0 || l == kJ) ? 2 : 0;
    return d;
}

namespace {

// running product of basis diagrams: always scalar * one diagram or zero
Element fold(const Word& w, Multiplier& mul, const std::function<Term(int)>& image) {
    if (w.n < 1) throw Error(Errc::InvalidWord, "word without n");
    Scalar c = 1;
    BlobDiagram d = BlobDiagram::identity(w.n);
    for (int l : w.letters) {
        if (l == kJ) throw Error(Errc::InvalidWord, "J in a J-free evaluation");
        if (l < 0 || l >= w.n) throw Error(Errc::IndexOutOfRange, "letter out of range");
        Term g = image(l);
        auto t = mul.basis(d, g.diagram);
        if (!t) return Element(w.n);
        c *= t->coeff * g.coeff;
        d = t->diagram;
    }
    return Element(d, c);
}

}  // namespace

Element evaluate(const Word& w, Multiplier& mul) {
    return fold(w, mul, [&](int l) { return Term{1, generator_diagram(w.n, l)}; });
}

Element evaluate(const Word& w) {
    static Multiplier m;
    return evaluate(w, m);
}

Element evaluate_blob(const Word& w, const Scalar& q, long m) {
    Multiplier mul(Rule::blob(q, m));
    Scalar v0 = -gaussian_int(m, q);
    return fold(w, mul, [&](int l) { return Term{l == 0 ? v0 : Scalar(1), generator_diagram(w.n, l)}; });
}

ExtElement evaluate_ext(const Word& w, Multiplier& mul) {
    Word rest;
    rest.n = w.n;
    int js = 0;
    for (int l : w.letters) {
        if (l == kJ) ++js;
        else rest.letters.push_back(l);
    }
    // J is central with J^2 = 0
    Element x = evaluate(rest, mul);
    if (js == 0) return {x, Element(w.n)};
    if (js == 1) return {Element(w.n), x};
    return ExtElement(w.n);
}

ExtElement evaluate_ext(const Word& w) {
    static Multiplier m;
    return evaluate_ext(w, m);
}

Word monomial_word(const NormalMonomial& nm, int n) {
    Word w;
    w.n = n;
    for (std::size_t s = 0; s < nm.I.size(); ++s)
        for (int x = nm.I[s]; x >= nm.J[s]; --x) w.letters.push_back(x);
    return w;
}

std::vector<NormalMonomial> enumerate_normal(int n) {
    std::vector<NormalMonomial> out;
    out.push_back({});
    NormalMonomial cur;
    std::function<void()> rec = [&] {
        int lastI = cur.I.empty() ? -1 : cur.I.back();
        int lastJ = cur.J.empty() ? -1 : cur.J.back();
        for (int i = lastI + 1; i < n; ++i)
            for (int j = 0; j <= i; ++j) {
                bool ok = cur.J.empty() || j > lastJ || (j == 0 && lastJ == 0);
                if (!ok) continue;
                cur.I.push_back(i);
                cur.J.push_back(j);
                out.push_back(cur);
                rec();
                cur.I.pop_back();
                cur.J.pop_back();
            }
    };
    rec();
    return out;
}

NormalFormTable::NormalFormTable(int n) : n_(n), monos_(enumerate_normal(n)) {
    Multiplier mul;
    for (std::size_t k = 0; k < monos_.size(); ++k) {
        Element x = evaluate(monomial_word(monos_[k], n), mul);
        if (x.size() != 1) {
            bijective_ = false;
            continue;
        }
        auto& [d, c] = *x.terms().begin();
        if (!table_.emplace(d, std::make_pair(k, c)).second) bijective_ = false;
    }
}

NormalForm NormalFormTable::normal_form(const Element& x) const {
    if (x.is_zero()) return {0, {}};
    if (x.size() != 1) throw Error(Errc::InvalidWord, "element is not a multiple of one diagram");
    auto& [d, c] = *x.terms().begin();
    auto it = table_.find(d);
    if (it == table_.end()) throw Error(Errc::TableMiss, "diagram missing from the normal-form table");
    return {c / it->second.second, monos_[it->second.first]};
}

NormalForm NormalFormTable::normal_form(const Word& w, Multiplier& mul) const {
    if (w.n != n_) throw Error(Errc::SizeMismatch, "word and table differ in n");
    return normal_form(evaluate(w, mul));
}

NormalForm normal_form(const Word& w) {
    NormalFormTable t(w.n);
    Multiplier mul;
    return t.normal_form(w, mul);
}

Word mark_insertion_word(int n, int i) {
    Word w;
    w.n = n;
    if (2 * i + 3 > n) throw Error(Errc::IndexOutOfRange, "mark insertion needs n >= 2i+3");
    auto odd = [&] { for (int x = 1; x <= 2 * i + 1; x += 2) w.letters.push_back(x); };
    odd();
    w.letters.push_back(0);
    for (int x = 2; x <= 2 * i + 2; x += 2) w.letters.push_back(x);
    odd();
    return w;
}

namespace {

// Raise `cur` to `target` on positions (lo, hi) by flipping valleys, smallest first.
// Each flip at i is one U_i multiplied on the outside of the half.
std::vector<int> fill_walk(std::vector<int>& cur, const std::vector<int>& target, int lo, int hi) {
    std::vector<int> flips;
    while (true) {
        int pick = -1;
        for (int i = lo + 1; i < hi; ++i)
            if (cur[i] < target[i] && cur[i - 1] == cur[i] + 1 && cur[i + 1] == cur[i] + 1) {
                pick = i;
                break;
            }
        if (pick == -1) break;
        cur[pick] += 2;
        flips.push_back(pick);
    }
    for (int i = lo; i <= hi; ++i)
        if (cur[i] != target[i]) throw Error(Errc::InvalidDiagram, "walk filling got stuck");
    return flips;
}

std::vector<int> contact_starts(const std::vector<int>& walk) {
    std::vector<int> s;
    int n = static_cast<int>(walk.size()) - 1;
    for (int a = 1; a <= n; ++a)
        if (walk[a - 1] == 0) s.push_back(a);
    return s;
}

}  // namespace

Factorization factorize_diagram(const BlobDiagram& d) {
    check_valid(d);
    const int n = d.n();
    Halves h = split_halves(d);
    const int t = h.k < 0 ? -h.k : h.k;
    const int cups = (n - t) / 2;

    std::vector<int> base(n + 1, 0);
    for (int i = 1; i <= n; ++i)
        base[i] = base[i - 1] + ((i <= 2 * cups && i % 2 == 0) ? -1 : 1);

    Scalar scalar = 1;
    std::vector<int> core;
    if (h.k < 0) {
        core = mark_insertion_word(n, cups - 1).letters;
    } else {
        for (int x = 1; x < 2 * cups; x += 2) core.push_back(x);
    }

    // one side at a time; blocks in emission order (outward from the core)
    auto side = [&](const HalfDiagram& half) {
        std::vector<int> target = walk_of_half(half);
        std::vector<int> cur = base;
        std::vector<int> starts = contact_starts(target);
        std::vector<std::vector<int>> out;
        for (std::size_t j = starts.size(); j-- > 0;) {
            int a = starts[j];
            int end = j + 1 < starts.size() ? starts[j + 1] - 1 : n;
            for (int f : fill_walk(cur, target, a - 1, end)) out.push_back({f});
            bool wants = false;
            for (auto [x, y] : half.marked)
                if (x == a) wants = true;
            if (wants) {
                // cups left of a close into loops against the inserted diagram
                Word m = mark_insertion_word(n, (a - 3) / 2);
                out.push_back(m.letters);
                for (int c = 0; c < (a - 1) / 2; ++c) scalar *= -2;
            }
        }
        return out;
    };

    auto below = side(h.bottom);
    auto above = side(h.top);

    Factorization f;
    f.word.n = n;
    // blocks emitted on top are prepended, so their order reverses; the
    // inserted mark diagram is fixed by the involution, so its word is reused as is
    for (auto it = above.rbegin(); it != above.rend(); ++it)
        f.word.letters.insert(f.word.letters.end(), it->begin(), it->end());
    f.word.letters.insert(f.word.letters.end(), core.begin(), core.end());
    for (auto& b : below) f.word.letters.insert(f.word.letters.end(), b.begin(), b.end());
    f.scalar = scalar;
    return f;
}

}  // namespace nb

namespace nb {

namespace {

struct Suite {
    std::function<Element(int)> gen;
    std::function<Element(const Element&, const Element&)> mul;
    RelationReport rep;

    void expect(const Element& lhs, const Element& rhs, const std::string& what) {
        ++rep.checked;
        if (!(lhs == rhs)) rep.failures.push_back(what);
    }

    // shared shape of both presentations; c2 = loop factor, c4/c5 the U0 relations
    void run(int n, const Scalar& c2, const Scalar& c4, const Scalar& c5) {
        auto name = [](const char* rel, int i, int j = -1) {
            std::string s = std::string(rel) + " i=" + std::to_string(i);
            if (j >= 0) s += " j=" + std::to_string(j);
            return s;
        };
        for (int i = 1; i < n; ++i) expect(mul(gen(i), gen(i)), c2 * gen(i), name("square", i));
        for (int i = 1; i < n; ++i)
            for (int j = 1; j < n; ++j) {
                if (std::abs(i - j) == 1) expect(mul(mul(gen(i), gen(j)), gen(i)), gen(i), name("braid", i, j));
                if (std::abs(i - j) > 1) expect(mul(gen(i), gen(j)), mul(gen(j), gen(i)), name("commute", i, j));
            }
        for (int j = 2; j < n; ++j) expect(mul(gen(0), gen(j)), mul(gen(j), gen(0)), name("commute", 0, j));
        if (n >= 2) expect(mul(mul(gen(1), gen(0)), gen(1)), c4 * gen(1), "U1 U0 U1");
        expect(mul(gen(0), gen(0)), c5 * gen(0), "U0 squared");
    }
};

}  // namespace

RelationReport check_nilblob_relations(int n, Multiplier& m) {
    Suite s;
    s.gen = [n](int i) { return generator(n, i); };
    s.mul = [&m](const Element& a, const Element& b) { return m.mul(a, b); };
    s.run(n, -2, 0, 0);
    return s.rep;
}

RelationReport check_blob_relations(int n, const Scalar& q, long m) {
    Multiplier mul(Rule::blob(q, m));
    Suite s;
    s.gen = [&](int i) { return blob_generator(n, i, q, m); };
    s.mul = [&mul](const Element& a, const Element& b) { return mul.mul(a, b); };
    s.run(n, -gaussian_int(2, q), gaussian_int(m - 1, q), -gaussian_int(m, q));
    return s.rep;
}

}  // namespace nb
