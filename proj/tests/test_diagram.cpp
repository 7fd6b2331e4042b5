#include "nilblob/diagram.hpp"
#include "nilblob/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace nb;

namespace {

HalfDiagram half_from_second_column(int n, std::set<int> col2) {
    std::vector<int> h(n + 1, 0);
    for (int i = 1; i <= n; ++i) h[i] = h[i - 1] + (col2.count(i) ? -1 : 1);
    return half_from_walk(h);
}

BlobDiagram twenty_point_example() {
    const int n = 20;
    auto top = half_from_second_column(n, {3, 4, 7, 9, 10, 13, 15, 19, 20});
    auto bot = half_from_second_column(n, {3, 6, 8, 9, 10, 14, 16, 17, 18});
    return join_halves(top, bot, 2);
}

Arc arc(int n, const char* a, const char* b) {
    int p = parse_point_label(n, a), q = parse_point_label(n, b);
    return {std::min(p, q), std::max(p, q)};
}

}  // namespace

TEST_CASE("basis sizes are central binomials") {
    for (int n = 1; n <= 7; ++n) {
        CHECK(enumerate_diagrams(n).size() == oracle::central_binomial(n));
        // Catalan numbers for the unmarked part
        std::size_t cat = oracle::central_binomial(n) / (n + 1);
        CHECK(enumerate_tl_diagrams(n).size() == cat);
    }
}

TEST_CASE("enumeration is sorted, distinct and valid") {
    auto all = enumerate_diagrams(4);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    for (auto& d : all) CHECK_NOTHROW(check_valid(d));
}

TEST_CASE("left exposure agrees with the face trace") {
    for (int n = 1; n <= 6; ++n)
        for (auto& d : enumerate_tl_diagrams(n)) {
            auto got = left_exposed_arcs(d);
            std::set<Arc> s(got.begin(), got.end());
            CHECK(s == oracle::face_trace_exposed(d));
        }
}

TEST_CASE("twenty point example: exposed arcs") {
    auto d = twenty_point_example();
    const int n = 20;
    CHECK(d.through_count() == 2);
    auto got = left_exposed_arcs(d);
    std::set<Arc> s(got.begin(), got.end());
    std::set<Arc> want{arc(n, "b1", "b10"), arc(n, "b11", "b18"), arc(n, "t1", "t4"), arc(n, "t5", "t10"),
                       arc(n, "t11", "b19")};
    CHECK(s == want);
    CHECK(s == oracle::face_trace_exposed(d));
}

TEST_CASE("validation errors") {
    const int n = 2;
    auto P = [&](const char* a) { return parse_point_label(n, a); };
    auto code = [](auto f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::Parse;
    };
    // crossing through lines
    CHECK(code([&] { validate(n, {{P("b1"), P("t2")}, {P("b2"), P("t1")}}, {}); }) == Errc::NotPlanar);
    // a point used twice
    CHECK(code([&] { validate(n, {{P("b1"), P("t1")}, {P("b1"), P("t2")}}, {}); }) == Errc::NotPerfectMatching);
    // the cap inside the outer cup is enclosed
    const int m = 4;
    auto Q = [&](const char* a) { return parse_point_label(m, a); };
    std::vector<std::pair<int, int>> pairs{{Q("b1"), Q("b4")}, {Q("b2"), Q("b3")}, {Q("t1"), Q("t4")}, {Q("t2"), Q("t3")}};
    CHECK(code([&] { validate(m, pairs, {{Q("b2"), Q("b3")}}); }) == Errc::MarkNotLeftExposed);
    CHECK_NOTHROW(validate(m, pairs, {{Q("b1"), Q("b4")}, {Q("t1"), Q("t4")}}));
    CHECK(code([&] { validate(m, pairs, {{Q("b1"), Q("b4")}, {Q("b1"), Q("b4")}}); }) == Errc::DuplicateMark);
    CHECK(code([] { parse_point_label(3, "x2"); }) == Errc::Parse);
}

TEST_CASE("involution and halves round trip") {
    for (int n = 1; n <= 5; ++n)
        for (auto& d : enumerate_diagrams(n)) {
            CHECK(involution(involution(d)) == d);
            CHECK(involution(d).mark_count() == d.mark_count());
            auto h = split_halves(d);
            CHECK(join_halves(h.top, h.bottom, h.k) == d);
        }
}

TEST_CASE("walks of unmarked halves") {
    auto d = twenty_point_example();
    auto h = split_halves(d);
    auto w = walk_of_half(h.bottom);
    // contacts with height 0 sit just before the leftmost points 1, 11, 19
    std::vector<int> contacts;
    for (int i = 0; i < 20; ++i)
        if (w[i] == 0) contacts.push_back(i + 1);
    CHECK(contacts == std::vector<int>{1, 11, 19});
    CHECK(half_from_walk(w).arcs == h.bottom.arcs);
}

TEST_CASE("ascii rendering shows marks") {
    auto id = BlobDiagram::identity(3);
    CHECK(render_ascii(id).find("●") == std::string::npos);
    CHECK(render_ascii(id.with_mark(0, true)).find("●") != std::string::npos);
}
