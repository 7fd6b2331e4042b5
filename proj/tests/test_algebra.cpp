#include "nilblob/algebra.hpp"
#include "nilblob/errors.hpp"
#include "nilblob/presentation.hpp"

#include <doctest.h>

using namespace nb;

namespace {

// [k] as a plain sum, independent of gaussian_int
Scalar qint(long k, const Scalar& q) {
    Scalar s = 0;
    for (long j = 0; j < k; ++j) s += power(q, k - 1 - 2 * j);
    return s;
}

}  // namespace

TEST_CASE("scalars") {
    CHECK(format_scalar(parse_scalar(" -6/8 ")) == "-3/4");
    CHECK(format_scalar(Scalar(5)) == "5");
    CHECK_THROWS_AS(parse_scalar("1/0"), Error);
    CHECK_THROWS_AS(parse_scalar("abc"), Error);
    CHECK(gaussian_int(3, 2) == Scalar(21, 4));
    for (long k = 1; k <= 6; ++k)
        for (Scalar q : {Scalar(2), Scalar(1, 3), Scalar(-5, 2)}) CHECK(gaussian_int(k, q) == qint(k, q));
    CHECK(gaussian_int(0, 3) == 0);
    CHECK(gaussian_int(-2, 2) == -gaussian_int(2, 2));
}

TEST_CASE("concatenation traces loops and marks") {
    auto u1 = generator_diagram(2, 1);
    auto c = concatenate(u1, u1);
    CHECK(c.loops == std::vector<int>{0});
    auto u0 = generator_diagram(1, 0);
    auto c0 = concatenate(u0, u0);
    CHECK(c0.loops.empty());
    CHECK(c0.mark_count[0] == 2);
}

TEST_CASE("nil-blob products of generators") {
    Element U1 = generator(2, 1), U0 = generator(2, 0);
    CHECK(mul_nilblob(U1, U1) == Scalar(-2) * U1);
    CHECK(mul_nilblob(mul_nilblob(U1, U0), U1).is_zero());
    CHECK(mul_nilblob(U0, U0).is_zero());
    Element V2 = generator(3, 2), V1 = generator(3, 1);
    CHECK(mul_nilblob(mul_nilblob(V2, V1), V2) == V2);
}

TEST_CASE("blob products") {
    Element V0 = blob_generator(1, 0, 2, 3);
    CHECK(mul_blob(V0, V0, 2, 3) == Scalar(-21, 4) * V0);
    CHECK(mul_blob(V0, V0, 2, 3) == -qint(3, 2) * V0);
    // V1 V0 V1 = [m-1] V1
    for (auto [q, m] : std::vector<std::pair<Scalar, long>>{{2, 3}, {3, 2}, {Scalar(1, 2), 4}}) {
        Element a = blob_generator(2, 0, q, m), b = blob_generator(2, 1, q, m);
        CHECK(mul_blob(mul_blob(b, a, q, m), b, q, m) == qint(m - 1, q) * b);
        CHECK(mul_blob(b, b, q, m) == -qint(2, q) * b);
    }
}

TEST_CASE("blob parameters are checked") {
    for (Scalar q : {Scalar(0), Scalar(1), Scalar(-1)}) {
        CHECK_THROWS_AS(Rule::blob(q, 3), Error);
        try {
            Rule::blob(q, 3);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::SingularParameter);
        }
    }
    CHECK_THROWS_AS(Rule::blob(2, 0), Error);  // [0] = 0
}

TEST_CASE("element arithmetic") {
    Element a = generator(3, 1), b = generator(3, 2);
    Element s = a + b;
    CHECK(s.size() == 2);
    CHECK((s - b) == a);
    CHECK((Scalar(0) * s).is_zero());
    CHECK((s - s).is_zero());
    CHECK(-(-a) == a);
    CHECK_THROWS_AS(a + generator(2, 1), Error);
}

TEST_CASE("multiplier is associative on random-ish triples and matches the free functions") {
    Multiplier mul;
    auto basis = enumerate_diagrams(3);
    for (std::size_t i = 0; i < basis.size(); i += 3)
        for (std::size_t j = 0; j < basis.size(); j += 2)
            for (std::size_t k = 0; k < basis.size(); k += 5) {
                Element a(basis[i]), b(basis[j]), c(basis[k]);
                CHECK(mul.mul(mul.mul(a, b), c) == mul.mul(a, mul.mul(b, c)));
            }
    CHECK(mul.mul(Element(basis[4]), Element(basis[7])) == mul_nilblob(Element(basis[4]), Element(basis[7])));
    CHECK(mul.memo_size() > 0);
}

TEST_CASE("degree counts marks") {
    CHECK(degree(generator(3, 0)) == 2);
    CHECK(degree(generator(3, 1)) == 0);
    CHECK(!degree(generator(3, 0) + generator(3, 1)).has_value());
    CHECK(!degree(Element(3)).has_value());
    CHECK(degree(ExtElement::J(2)) == 2);
}

TEST_CASE("extended algebra: J central, J^2 = 0") {
    const int n = 3;
    Multiplier mul;
    ExtElement J = ExtElement::J(n);
    CHECK(mul_extended(J, J, mul).is_zero());
    for (int i = 0; i < n; ++i) {
        ExtElement u{generator(n, i), Element(n)};
        CHECK(mul_extended(u, J, mul) == mul_extended(J, u, mul));
    }
    auto w = parse_word("U1 J U1", n, true);
    CHECK(evaluate_ext(w, mul) == ExtElement{Element(n), Scalar(-2) * generator(n, 1)});
    CHECK(degree(w) == 2);
}

TEST_CASE("marks never land on enclosed arcs") {
    auto basis = enumerate_diagrams(4);
    for (auto& a : basis)
        for (auto& b : basis) {
            auto t = multiply_diagrams(a, b, Rule::nilblob());
            if (t) CHECK_NOTHROW(check_valid(t->diagram));
        }
}
