#include "nilblob/algebra.hpp"
#include "nilblob/errors.hpp"

namespace nb {

ConcatResult concatenate(const BlobDiagram& d1, const BlobDiagram& d2) {
    if (d1.n() != d2.n()) throw Error(Errc::SizeMismatch, "diagrams of different size");
    const int n = d1.n();
    // ids: d1 points 0..2n-1, d2 points 2n..4n-1
    auto chord = [&](int v, int& marks) {
        if (v < 2 * n) {
            marks += d1.marked(v);
            return d1.partner(v);
        }
        marks += d2.marked(v - 2 * n);
        return 2 * n + d2.partner(v - 2 * n);
    };
    auto outer = [n](int v) { return (v >= n && v < 2 * n) || (v >= 2 * n && v < 3 * n); };
    auto glue = [n](int v) { return v < n ? v + 3 * n : v - 3 * n; };
    auto result_pt = [n](int v) { return v < 2 * n ? v : v - 2 * n; };

    ConcatResult r;
    r.n = n;
    r.partner.assign(2 * n, -1);
    r.mark_count.assign(2 * n, 0);
    std::vector<char> seen(4 * n, 0);
    for (int v0 = n; v0 < 3 * n; ++v0) {
        if (r.partner[result_pt(v0)] != -1) continue;
        int marks = 0, v = v0;
        seen[v] = 1;
        while (true) {
            int w = chord(v, marks);
            seen[w] = 1;
            if (outer(w)) {
                r.partner[result_pt(v0)] = result_pt(w);
                r.partner[result_pt(w)] = result_pt(v0);
                r.mark_count[result_pt(v0)] = r.mark_count[result_pt(w)] = marks;
                break;
            }
            v = glue(w);
            seen[v] = 1;
        }
    }
    for (int v0 = 0; v0 < n; ++v0) {
        if (seen[v0]) continue;
        int marks = 0, v = v0;
        do {
            seen[v] = 1;
            int w = chord(v, marks);
            seen[w] = 1;
            v = glue(w);
        } while (v != v0);
        r.loops.push_back(marks);
    }
    return r;
}

Rule Rule::blob(const Scalar& q, long m) {
    if (q == 0 || q == 1 || q == -1)
        throw Error(Errc::SingularParameter, "q must avoid 0, 1, -1");
    if (gaussian_int(m, q) == 0) throw Error(Errc::SingularParameter, "[m] = 0");
    Rule r;
    r.kind = Kind::Blob;
    r.q = q;
    r.m = m;
    return r;
}

std::optional<Term> apply_rule(const ConcatResult& c, const Rule& r) {
    const int n = c.n;
    std::vector<char> mark(2 * n, 0);
    Scalar coeff = 1;
    if (r.kind == Rule::Kind::NilBlob) {
        for (int l : c.loops) {
            if (l > 0) return std::nullopt;
            coeff *= -2;
        }
        for (int p = 0; p < 2 * n; ++p) {
            if (c.mark_count[p] >= 2) return std::nullopt;
            mark[p] = c.mark_count[p] == 1;
        }
    } else {
        Scalar u = -gaussian_int(2, r.q);
        Scalar v = -gaussian_int(r.m - 1, r.q) / gaussian_int(r.m, r.q);
        for (int l : c.loops) coeff *= l > 0 ? v : u;
        for (int p = 0; p < 2 * n; ++p) mark[p] = c.mark_count[p] >= 1;
    }
    BlobDiagram d(n, c.partner, std::move(mark));
    for (const Arc& a : d.marked_arcs())
        if (!is_left_exposed(d, a.a))
            throw Error(Errc::MarkNotLeftExposed, "product left a mark on an enclosed arc");
    if (coeff == 0) return std::nullopt;
    return Term{coeff, std::move(d)};
}

std::optional<Term> multiply_diagrams(const BlobDiagram& d1, const BlobDiagram& d2, const Rule& r) {
    return apply_rule(concatenate(d1, d2), r);
}

Element::Element(const BlobDiagram& d, const Scalar& c) : n_(d.n()) {
    if (c != 0) terms_.emplace(d, c);
}

Scalar Element::coeff(const BlobDiagram& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void Element::add(const BlobDiagram& d, const Scalar& c) {
    if (c == 0) return;
    if (n_ == 0) n_ = d.n();
    if (d.n() != n_) throw Error(Errc::SizeMismatch, "term of different size");
    auto [it, fresh] = terms_.try_emplace(d, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Element& Element::operator+=(const Element& o) {
    if (n_ == 0) n_ = o.n_;
    if (o.n_ != 0 && o.n_ != n_) throw Error(Errc::SizeMismatch, "adding elements of different size");
    for (auto& [d, c] : o.terms_) add(d, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    if (n_ == 0) n_ = o.n_;
    if (o.n_ != 0 && o.n_ != n_) throw Error(Errc::SizeMismatch, "subtracting elements of different size");
    for (auto& [d, c] : o.terms_) add(d, -c);
    return *this;
}

Element& Element::operator*=(const Scalar& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [d, x] : terms_) x *= c;
    return *this;
}

Element operator+(Element a, const Element& b) { return a += b; }
Element operator-(Element a, const Element& b) { return a -= b; }
Element operator*(const Scalar& c, Element a) { return a *= c; }
Element operator-(Element a) { return a *= Scalar(-1); }

std::optional<Term> Multiplier::basis(const BlobDiagram& a, const BlobDiagram& b) {
    auto key = std::make_pair(a, b);
    {
        std::lock_guard<std::mutex> g(mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    auto t = multiply_diagrams(a, b, rule_);
    std::lock_guard<std::mutex> g(mu_);
    memo_.emplace(std::move(key), t);
    return t;
}

Element Multiplier::mul(const Element& x, const Element& y) {
    if (x.n() != 0 && y.n() != 0 && x.n() != y.n())
        throw Error(Errc::SizeMismatch, "multiplying elements of different size");
    Element out(x.n() ? x.n() : y.n());
    for (auto& [a, ca] : x.terms())
        for (auto& [b, cb] : y.terms()) {
            auto t = basis(a, b);
            if (t) out.add(t->diagram, ca * cb * t->coeff);
        }
    return out;
}

std::size_t Multiplier::memo_size() const {
    std::lock_guard<std::mutex> g(mu_);
    return memo_.size();
}

Element mul_nilblob(const Element& x, const Element& y) {
    static Multiplier m;
    return m.mul(x, y);
}

Element mul_blob(const Element& x, const Element& y, const Scalar& q, long m) {
    Multiplier mm(Rule::blob(q, m));
    return mm.mul(x, y);
}

ExtElement operator+(const ExtElement& a, const ExtElement& b) { return {a.a0 + b.a0, a.a1 + b.a1}; }
ExtElement operator-(const ExtElement& a, const ExtElement& b) { return {a.a0 - b.a0, a.a1 - b.a1}; }
ExtElement operator*(const Scalar& c, const ExtElement& a) { return {c * a.a0, c * a.a1}; }

ExtElement mul_extended(const ExtElement& x, const ExtElement& y, Multiplier& mul) {
    if (x.n() != y.n()) throw Error(Errc::SizeMismatch, "multiplying elements of different size");
    return {mul.mul(x.a0, y.a0), mul.mul(x.a0, y.a1) + mul.mul(x.a1, y.a0)};
}

ExtElement mul_extended(const ExtElement& x, const ExtElement& y) {
    static Multiplier m;
    return mul_extended(x, y, m);
}

BlobDiagram generator_diagram(int n, int i) {
    if (i < 0 || i >= n) throw Error(Errc::IndexOutOfRange, "generator U" + std::to_string(i) + " with n = " + std::to_string(n));
    BlobDiagram id = BlobDiagram::identity(n);
    if (i == 0) return id.with_mark(bottom_pt(n, 1), true);
    std::vector<int> p = id.partners();
    p[bottom_pt(n, i)] = bottom_pt(n, i + 1);
    p[bottom_pt(n, i + 1)] = bottom_pt(n, i);
    p[top_pt(n, i)] = top_pt(n, i + 1);
    p[top_pt(n, i + 1)] = top_pt(n, i);
    return BlobDiagram(n, std::move(p), std::vector<char>(2 * n, 0));
}

Element generator(int n, int i) { return Element(generator_diagram(n, i)); }

Element blob_generator(int n, int i, const Scalar& q, long m) {
    if (i == 0) return Element(generator_diagram(n, 0), -gaussian_int(m, q));
    return generator(n, i);
}

std::optional<int> degree(const Element& x) {
    std::optional<int> deg;
    for (auto& [d, c] : x.terms()) {
        int k = 2 * d.mark_count();
        if (deg && *deg != k) return std::nullopt;
        deg = k;
    }
    return deg;
}

std::optional<int> degree(const ExtElement& x) {
    auto d0 = degree(x.a0), d1 = degree(x.a1);
    if (x.a1.is_zero()) return d0;
    if (!d1) return std::nullopt;
    int k1 = *d1 + 2;
    if (x.a0.is_zero()) return k1;
    if (!d0 || *d0 != k1) return std::nullopt;
    return k1;
}

}  // namespace nb
