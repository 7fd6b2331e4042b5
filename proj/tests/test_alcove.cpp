#include "nilblob/alcove.hpp"
#include "nilblob/errors.hpp"
#include "nilblob/jm.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace nb;

namespace {

// every admissible (n, e, m) with e <= 6 and K <= maxK
std::vector<BlobParams> admissible(int maxK, int maxN = 1000) {
    std::vector<BlobParams> v;
    for (int e = 4; e <= 6; ++e)
        for (int m = 2; m <= e - 2; ++m)
            for (int n = e - m; n < e - m + (maxK + 1) * e && n <= maxN; ++n) v.push_back({n, e, m});
    return v;
}

PathTableau walk(const BlobParams& p, std::vector<int> j, int last = 0) { return tableau_from_walk({j, last}, p); }

// s_a s_{a+2} ... s_b
std::vector<int> stride(int a, int b) {
    std::vector<int> w;
    for (int i = a; i <= b; i += 2) w.push_back(i);
    return w;
}

std::vector<int> join(std::initializer_list<std::vector<int>> parts) {
    std::vector<int> r;
    for (auto& p : parts) r.insert(r.end(), p.begin(), p.end());
    return r;
}

PathTableau truncated(const PathTableau& t, const BlobParams& p) {
    auto c = classify(p);
    PathTableau r;
    r.steps.assign(t.steps.begin(), t.steps.end() - c.R);
    return r;
}

const RegionFactor* find_factor(const RegionFactorization& f, RegionFactor::Kind k, int i) {
    for (auto& x : f.theta)
        if (x.kind == k && x.index == i) return &x;
    return nullptr;
}

std::vector<Token> toks(std::initializer_list<std::pair<char, int>> list) {
    std::vector<Token> v;
    for (auto [c, i] : list) v.push_back({c == 'U' ? Token::Kind::U : c == 'Y' ? Token::Kind::Y : Token::Kind::YDiff, i});
    return v;
}

}  // namespace

TEST_CASE("classification") {
    auto c = classify({23, 5, 2});
    CHECK(c.K == 4);
    CHECK(c.R == 0);
    CHECK(c.singular);
    c = classify({25, 5, 2});
    CHECK(c.K == 4);
    CHECK(c.R == 2);
    CHECK(!c.singular);
    c = classify({3, 4, 2});
    CHECK(c.K == 0);
    CHECK(c.R == 1);
    CHECK_THROWS_AS(classify({2, 5, 2}), Error);
    CHECK_THROWS_AS(classify({10, 5, 1}), Error);
    CHECK_THROWS_AS(classify({10, 5, 4}), Error);
}

TEST_CASE("path intervals") {
    auto iv = path_intervals({23, 5, 2});
    CHECK(iv.lead == std::pair{1, 3});
    CHECK(iv.full == std::vector<std::pair<int, int>>{{4, 8}, {9, 13}, {14, 18}, {19, 23}});
    CHECK(!iv.last);
    iv = path_intervals({25, 5, 2});
    CHECK(iv.full.size() == 4);
    CHECK(iv.last == std::pair{24, 25});
    iv = path_intervals({10, 4, 2});
    CHECK(iv.full == std::vector<std::pair<int, int>>{{3, 6}, {7, 10}});
}

TEST_CASE("residue sequences") {
    BlobParams p{23, 5, 2};
    auto r = residue_sequence(lambda_tableau(23), p);
    for (int k = 0; k < 23; ++k) CHECK(r[k] == ((-k) % 5 + 5) % 5);
    CHECK(residue_sequence(lambda_tableau(1), {1, 5, 2}) == std::vector<int>{0});
    auto orbit = enumerate_std(p);
    Shape mu4{13, 10};
    REQUIRE(orbit.count(mu4));
    std::vector<int> want;
    for (int k = 0; k < 23; ++k) want.push_back(std::vector<int>{0, 4, 3, 2, 1}[k % 5]);
    for (auto& t : orbit[mu4]) CHECK(residue_sequence(t, p) == want);
}

TEST_CASE("reflection orbit equals the residue class, n <= 14") {
    for (auto& p : admissible(10, 14)) CHECK_MESSAGE(enumerate_std(p) == enumerate_std_by_residue(p), p.n << " " << p.e << " " << p.m);
}

TEST_CASE("orbit counts") {
    BlobParams p{23, 5, 2};
    auto orbit = enumerate_std(p);
    CHECK(orbit[Shape{13, 10}].size() == 6);
    for (auto& q : admissible(4)) {
        auto c = classify(q);
        std::size_t sq = 0;
        for (auto& [mu, ts] : enumerate_std(q)) sq += ts.size() * ts.size();
        CHECK(sq == (c.singular ? 1 : 2) * oracle::central_binomial(c.K));
    }
}

TEST_CASE("K = 0, regular: only t^lambda has shape lambda") {
    BlobParams p{3, 4, 2};
    auto orbit = enumerate_std(p);
    CHECK(orbit[lambda_tableau(3).shape()] == std::vector<PathTableau>{lambda_tableau(3)});
    std::size_t total = 0;
    for (auto& [mu, ts] : orbit) total += ts.size();
    CHECK(total == 2);
}

TEST_CASE("reduced expressions are reduced and correct") {
    PathTableau tm = row_reading({4, 3});
    CHECK(reduced_expression(tm, tm).empty());
    CHECK_THROWS_AS(reduced_expression(tm, row_reading({3, 4})), Error);
    for (auto& p : admissible(3))
        for (auto& [mu, ts] : enumerate_std(p))
            for (auto& t : ts) {
                auto w = reduced_expression(row_reading(mu), t);
                CHECK(static_cast<long>(w.size()) == inversion_count(one_line(t)));
                CHECK(word_permutation(p.n, w) == one_line(t));
                CHECK(act(row_reading(mu), w) == t);
            }
}

TEST_CASE("shape (1^5, 1^6) example") {
    std::vector<int> given{2, 4, 3, 7, 9, 8, 10, 9};
    PathTableau tl = row_reading({5, 6});
    PathTableau s = act(tl, given);
    auto w = reduced_expression(tl, s);
    CHECK(w.size() == 8);
    CHECK(word_permutation(11, w) == word_permutation(11, given));
    CHECK(inversion_count(one_line(s)) == 8);
}

TEST_CASE("region factorization reassembles d(t)") {
    for (auto& p : admissible(3))
        for (auto& [mu, ts] : enumerate_std(p))
            for (auto& t : ts) {
                auto f = region_factorize(t, p);
                PathTableau tb = truncated(t, p);
                auto w = f.word();
                CHECK(word_permutation(tb.n(), w) == one_line(tb));
                CHECK(static_cast<long>(w.size()) == inversion_count(one_line(tb)));
                // H_0 unless t is t^lambda, and one of H_i / U'_i per column
                if (f.columns > 0) CHECK(find_factor(f, RegionFactor::Kind::H, 0));
                for (int i = 0; i < f.columns; ++i)
                    CHECK((find_factor(f, RegionFactor::Kind::H, i) != nullptr) !=
                          (find_factor(f, RegionFactor::Kind::UPrime, i) != nullptr));
            }
}

TEST_CASE("centrality is the wall range test") {
    for (auto& p : admissible(4)) {
        if (!classify(p).singular) continue;
        auto c = classify(p);
        for (auto& [mu, ts] : enumerate_std(p))
            for (auto& t : ts) {
                auto w = *decode_walk(t, p);
                int k = shape_rank(w, c);
                bool inside = true;
                for (int i = 0; i <= k; ++i) inside = inside && w.j[i] >= -1 && w.j[i] <= 2;
                CHECK(is_central(t, p) == inside);
            }
    }
}

TEST_CASE("single reflection gives H_0") {
    BlobParams p{10, 6, 2};
    auto f = region_factorize(walk(p, {0, 1}), p);
    REQUIRE(f.theta.size() == 1);
    CHECK(f.theta[0].kind == RegionFactor::Kind::H);
    CHECK(f.theta[0].index == 0);
    CHECK(f.central());
}

TEST_CASE("e = 6, m = 2: the two long tableaux") {
    BlobParams p{64, 6, 2};
    auto s = walk(p, {0, 1, 0, 1, 2, 1, 0, -1, 0, -1, -2});
    auto t = walk(p, {0, -1, 0, 1, 2, 1, 0, -1, -2, -3, -2});
    using K = RegionFactor::Kind;
    auto fs = region_factorize(s, p);
    CHECK(fs.central());
    std::vector<std::pair<K, int>> got, want{{K::H, 0}, {K::H, 1}, {K::H, 2}, {K::H, 3}, {K::H, 5}, {K::H, 6}, {K::UPrime, 4}, {K::UPrime, 7}};
    for (auto& x : fs.theta) got.push_back({x.kind, x.index});
    CHECK(got == want);

    auto ft = region_factorize(t, p);
    CHECK(!ft.central());
    got.clear();
    want = {{K::H, 0}, {K::H, 2}, {K::H, 3}, {K::H, 5}, {K::H, 6}, {K::UPrime, 1}, {K::UPrime, 4}, {K::UPrime, 7}};
    for (auto& x : ft.theta) got.push_back({x.kind, x.index});
    CHECK(got == want);
    REQUIRE(ft.u.size() == 2);
    CHECK(ft.u[0].index == 8);
    CHECK(ft.u[1].index == 9);
    CHECK(ft.central_walk.j == std::vector<int>{0, -1, 0, 1, 2, 1, 0, -1, 0, -1, -2});
    for (auto& x : ft.u) CHECK(x.word.size() == 36);

    // region words as permutations
    auto h0 = find_factor(fs, K::H, 0), h1 = find_factor(fs, K::H, 1);
    REQUIRE(h0);
    REQUIRE(h1);
    CHECK(word_permutation(64, h0->word) == word_permutation(64, {2, 4, 6, 3, 5, 4}));
    CHECK(word_permutation(64, h1->word) == word_permutation(64, {9, 11, 10}));

    // m_st for s and the central version of t
    auto t1 = tableau_from_walk(ft.central_walk, p);
    auto w = generator_word(s, t1, p);
    CHECK(w.sign_undetermined);
    NilBlobImage img(p);
    ExtElement a = img.map(w), b = img.map({toks({{'Y', 1}, {'U', 1}, {'Y', 3}, {'U', 4}, {'Y', 6}, {'U', 7}}), true});
    CHECK(!a.is_zero());
    CHECK((a == b || a == Scalar(-1) * b));
}

TEST_CASE("U'_1 region, e = 6, m = 2") {
    BlobParams p{16, 6, 2};
    auto f = region_factorize(walk(p, {0, -1, 0}), p);
    auto u = find_factor(f, RegionFactor::Kind::UPrime, 1);
    REQUIRE(u);
    auto given = join({stride(8, 12), stride(7, 13), stride(6, 14), stride(5, 15), stride(6, 14), stride(7, 13),
                       stride(8, 12), stride(9, 11), stride(10, 10)});
    CHECK(given.size() == 33);
    CHECK(u->word.size() == 33);
    CHECK(word_permutation(16, u->word) == word_permutation(16, given));
}

TEST_CASE("codification") {
    BlobParams p{10, 6, 2};
    auto t = walk(p, {0, 1});
    auto c = codify(t, t, p);
    REQUIRE(c.rows.size() == 4);
    REQUIRE(c.cols() == 1);
    CHECK(c.rows[0][0].kind == Symbol::Kind::Empty);
    CHECK(c.rows[1][0] == Symbol{Symbol::Kind::H, 0, true});
    CHECK(c.rows[2][0] == Symbol{Symbol::Kind::H, 0, false});
    CHECK(c.rows[3][0].kind == Symbol::Kind::Empty);
    CHECK(generator_word(t, t, p).tokens == toks({{'Y', 1}}));

    BlobParams q{64, 6, 2};
    auto s = walk(q, {0, 1, 0, 1, 2, 1, 0, -1, 0, -1, -2});
    auto cs = codify(s, q);
    REQUIRE(cs.cols() == 8);
    for (int i : {0, 1, 2, 3, 5, 6}) CHECK(cs.rows[0][i].kind == Symbol::Kind::H);
    for (int i : {4, 7}) CHECK(cs.rows[1][i].kind == Symbol::Kind::UPrime);

    auto non_central = walk(q, {0, -1, 0, 1, 2, 1, 0, -1, -2, -3, -2});
    CHECK_THROWS_AS(generator_word(s, non_central, q), Error);
    CHECK_THROWS_AS(codify(s, walk(q, {0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0}), q), Error);
}

TEST_CASE("matrix algorithm on the nine column example") {
    // c(s): U' at 3, 6; c(t): U' at 1, 3, 8
    std::vector<bool> cs(9, false), ct(9, false);
    cs[3] = cs[6] = true;
    ct[1] = ct[3] = ct[8] = true;
    auto w = matrix_algorithm(stack(codification_from_columns(cs), codification_from_columns(ct)));
    CHECK(w.tokens == toks({{'U', 6}, {'Y', 1}, {'U', 3}, {'Y', 5}, {'Y', 6}, {'Y', 8}, {'U', 1}, {'U', 8}}));
    CHECK(format_truncated(w) == "+- U6 Y1 U3 Y5 Y6 Y8 U1 U8");

    // the same through tableaux, K = 9, e = 5, m = 2
    BlobParams p{48, 5, 2};
    std::vector<int> z(10);
    for (int i = 0; i < 10; ++i) z[i] = i % 2;
    auto flip = [&](std::vector<int> j, std::initializer_list<int> at) {
        for (int i : at) j[i] = 2 * j[i - 1] - j[i];
        return j;
    };
    auto s = walk(p, flip(z, {3, 6})), t = walk(p, flip(z, {1, 3, 8}));
    CHECK(codify(s, t, p) == stack(codification_from_columns(cs), codification_from_columns(ct)));
    CHECK(generator_word(s, t, p) == w);
}

TEST_CASE("regular words") {
    BlobParams p{15, 5, 2};  // K = 2, R = 2
    BlobParams bar{13, 5, 2};
    auto tl = lambda_tableau(15);
    CHECK(side_of(tl, p) == Side::Outer);
    CHECK(generator_word_regular(tl, tl, p) == basis_word(lambda_tableau(13), lambda_tableau(13), bar));

    auto inA0 = walk(p, {0, 1, 0}, 1);
    CHECK(side_of(inA0, p) == Side::Inner);
    auto w = generator_word_regular(inA0, inA0, p);
    REQUIRE(!w.tokens.empty());
    CHECK(w.tokens[0] == Token{Token::Kind::Y, 3});
    auto lifted = generator_word(walk(bar, {0, 1, 0}), walk(bar, {0, 1, 0}), bar);
    CHECK(std::vector<Token>(w.tokens.begin() + 1, w.tokens.end()) == lifted.tokens);

    auto far = walk(p, {0, -1, -2}, 1);
    CHECK(side_of(far, p) == Side::Inner);
    auto v = generator_word_regular(far, far, p);
    REQUIRE(!v.tokens.empty());
    CHECK(v.tokens[0] == Token{Token::Kind::YDiff, 3});

    CHECK_THROWS_AS(generator_word_regular(inA0, walk(p, {0, -1, 0}, -1), p), Error);
    CHECK_THROWS_AS(side_of(lambda_tableau(13), bar), Error);
}

TEST_CASE("images in the nil-blob algebra") {
    BlobParams even{16, 6, 2}, odd{13, 5, 2};  // K = 2 both
    CHECK(map_to_nilblob({toks({{'U', 1}}), true}, even).a0 == generator(2, 1));
    CHECK(map_to_nilblob({toks({{'U', 1}}), true}, odd).a0 == -generator(2, 1));
    CHECK(map_to_nilblob({toks({{'Y', 1}, {'Y', 1}}), true}, even).is_zero());
    CHECK(map_to_nilblob({toks({{'U', 1}, {'Y', 1}, {'U', 1}}), true}, even).is_zero());
    CHECK_THROWS_AS(map_to_nilblob({toks({{'Y', 3}}), true}, even), Error);
    CHECK(map_to_nilblob({toks({{'Y', 3}}), true}, {15, 5, 2}) == ExtElement::J(2));

    for (auto p : {BlobParams{22, 6, 2}, BlobParams{18, 5, 2}}) {  // K = 3
        NilBlobImage img(p);
        Multiplier& mul = img.multiplier();
        auto U = [&](int i) { return img.map({toks({{'U', i}}), true}).a0; };
        Element y = img.map({toks({{'Y', 1}}), true}).a0;
        Scalar tl = p.e % 2 ? 2 : -2;  // (-1)^(e-1) 2
        for (int i = 1; i < 3; ++i) CHECK(mul.mul(U(i), U(i)) == tl * U(i));
        CHECK(mul.mul(mul.mul(U(1), U(2)), U(1)) == U(1));
        CHECK(mul.mul(mul.mul(U(2), U(1)), U(2)) == U(2));
        CHECK(mul.mul(y, y).is_zero());
        CHECK(mul.mul(mul.mul(U(1), y), U(1)).is_zero());
        CHECK(mul.mul(y, U(2)) == mul.mul(U(2), y));
        // Y_2 U_1 = U_1 Y_1 + (-1)^e (Y_1 - Y_2) on the truncated side
        Element y2 = img.map({toks({{'Y', 2}}), true}).a0;
        Scalar sgn = p.e % 2 ? -1 : 1;
        CHECK(mul.mul(y2, U(1)) == mul.mul(U(1), y) + sgn * (y - y2));
    }
}

TEST_CASE("rank of the images") {
    struct Case {
        BlobParams p;
        std::size_t want;
    };
    for (auto [p, want] : std::vector<Case>{{{13, 5, 2}, 6}, {{18, 5, 2}, 20}, {{15, 5, 2}, 12}, {{10, 4, 2}, 6},
                                             {{11, 4, 2}, 12}, {{15, 6, 3}, 6}, {{23, 5, 2}, 70}}) {
        auto r = rank_of_images(p, true);
        CHECK_MESSAGE(r.rank == want, p.n << " " << p.e << " " << p.m);
        CHECK(r.expected == want);
        CHECK(rank_of_images(p, false).rank == r.rank);
    }
}
