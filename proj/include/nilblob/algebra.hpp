#pragma once

#include "nilblob/diagram.hpp"
#include "nilblob/scalar.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

namespace nb {

// d1 stacked on top of d2, before any loop / mark rule is applied
struct ConcatResult {
    int n = 0;
    std::vector<int> partner;
    std::vector<int> mark_count;  // per point, same on both ends of an arc
    std::vector<int> loops;       // mark count of each closed loop
};

ConcatResult concatenate(const BlobDiagram& d1, const BlobDiagram& d2);

struct Rule {
    enum class Kind { NilBlob, Blob } kind = Kind::NilBlob;
    Scalar q = 0;
    long m = 0;

    static Rule nilblob() { return {}; }
    static Rule blob(const Scalar& q, long m);  // checks parameters
};

struct Term {
    Scalar coeff;
    BlobDiagram diagram;
};

// one basis product under a rule; nullopt means zero
std::optional<Term> apply_rule(const ConcatResult& c, const Rule& r);
std::optional<Term> multiply_diagrams(const BlobDiagram& d1, const BlobDiagram& d2, const Rule& r);

class Element {
public:
    Element() = default;
    explicit Element(int n) : n_(n) {}
    Element(const BlobDiagram& d, const Scalar& c = 1);

    static Element identity(int n) { return Element(BlobDiagram::identity(n)); }

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<BlobDiagram, Scalar>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    Scalar coeff(const BlobDiagram& d) const;

    void add(const BlobDiagram& d, const Scalar& c);
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const Scalar& c);

    bool operator==(const Element& o) const { return n_ == o.n_ && terms_ == o.terms_; }

private:
    int n_ = 0;
    std::map<BlobDiagram, Scalar> terms_;
};

Element operator+(Element a, const Element& b);
Element operator-(Element a, const Element& b);
Element operator*(const Scalar& c, Element a);
Element operator-(Element a);

// Memoized products of basis diagrams. One instance may be shared across threads.
class Multiplier {
public:
    explicit Multiplier(Rule r = Rule::nilblob()) : rule_(std::move(r)) {}
    const Rule& rule() const { return rule_; }

    std::optional<Term> basis(const BlobDiagram& a, const BlobDiagram& b);
    Element mul(const Element& x, const Element& y);
    std::size_t memo_size() const;

private:
    struct PairHash {
        std::size_t operator()(const std::pair<BlobDiagram, BlobDiagram>& p) const {
            return p.first.hash() * 31u ^ p.second.hash();
        }
    };
    Rule rule_;
    mutable std::mutex mu_;
    std::unordered_map<std::pair<BlobDiagram, BlobDiagram>, std::optional<Term>, PairHash> memo_;
};

Element mul_nilblob(const Element& x, const Element& y);
Element mul_blob(const Element& x, const Element& y, const Scalar& q, long m);

// a0 + a1*J with J central and J^2 = 0
struct ExtElement {
    Element a0, a1;
    ExtElement() = default;
    explicit ExtElement(int n) : a0(n), a1(n) {}
    ExtElement(Element x0, Element x1) : a0(std::move(x0)), a1(std::move(x1)) {}
    int n() const { return a0.n(); }
    bool is_zero() const { return a0.is_zero() && a1.is_zero(); }
    bool operator==(const ExtElement& o) const { return a0 == o.a0 && a1 == o.a1; }
    static ExtElement J(int n) { return {Element(n), Element::identity(n)}; }
};

ExtElement operator+(const ExtElement& a, const ExtElement& b);
ExtElement operator-(const ExtElement& a, const ExtElement& b);
ExtElement operator*(const Scalar& c, const ExtElement& a);
ExtElement mul_extended(const ExtElement& x, const ExtElement& y, Multiplier& mul);
ExtElement mul_extended(const ExtElement& x, const ExtElement& y);

// generator images: U_0 is the marked identity, U_i (i >= 1) a cap/cup at i, i+1
BlobDiagram generator_diagram(int n, int i);
Element generator(int n, int i);
// blob algebra: V_0 = -[m] * (marked identity), V_i as U_i
Element blob_generator(int n, int i, const Scalar& q, long m);

// 2 * (number of marks) for a homogeneous element, nullopt if mixed or zero
std::optional<int> degree(const Element& x);
std::optional<int> degree(const ExtElement& x);

}  // namespace nb
