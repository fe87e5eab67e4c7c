#include <doctest.h>

#include "helpers.hpp"

using namespace gq;

namespace {

Quiver pres1_quiver() {
    return gqtest::builtin_presentation("pres1").quiver();
}

}  // namespace

TEST_CASE("build_quiver validates and sorts") {
    Quiver q = Quiver::build({"b", "a"}, {{"y", "a", "b"}, {"x", "b", "a"}});
    CHECK(q.vertex_count() == 2);
    CHECK(q.vertex_name(0) == "a");
    CHECK(q.arrow_id(0) == "x");
    CHECK(q.source(q.arrow_of("y")) == q.vertex_of("a"));

    CHECK_NOTHROW(Quiver::build({"a"}, {}));
    CHECK_THROWS_AS(Quiver::build({"a", "a"}, {}), ParseError);
    CHECK_THROWS_AS(Quiver::build({"a"}, {{"x", "a", "a"}, {"x", "a", "a"}}), ParseError);
    CHECK_THROWS_WITH_AS(Quiver::build({"1", "2", "3"}, {{"e", "4", "1"}}),
                         doctest::Contains("dangling endpoint"), ParseError);
}

TEST_CASE("paths validate composability") {
    Quiver q = pres1_quiver();
    PathWord p = gqtest::path(q, "[1,2] [2,3]");
    CHECK(p.length() == 2);
    CHECK(path_source(p) == q.vertex_of("1"));
    CHECK(path_target(q, p) == q.vertex_of("3"));

    PathWord eps = gqtest::path(q, "eps:2");
    CHECK(eps.is_empty());
    CHECK(path_target(q, eps) == q.vertex_of("2"));

    CHECK_THROWS_WITH_AS(gqtest::path(q, "[1,2] [1,3]"), doctest::Contains("index 1"),
                         ParseError);
    CHECK_THROWS_AS(make_path(q, q.vertex_of("2"), {q.arrow_of("[1,2]")}), ParseError);
}

TEST_CASE("concat is associative with eps as unit") {
    Quiver q = pres1_quiver();
    PathWord a = gqtest::path(q, "[1,2]");
    PathWord b = gqtest::path(q, "[2,3]");
    PathWord c = gqtest::path(q, "[3,1]");
    CHECK(concat(q, concat(q, a, b), c) == concat(q, a, concat(q, b, c)));
    CHECK(concat(q, a, empty_path(path_target(q, a))) == a);
    CHECK(concat(q, empty_path(path_source(a)), a) == a);
    CHECK(concat(q, empty_path(q.vertex_of("2")), gqtest::path(q, "[2,1]")) ==
          gqtest::path(q, "[2,1]"));
    CHECK_THROWS_AS(concat(q, a, c), ParseError);
}

TEST_CASE("enumerate_paths is exhaustive, lexicographic, validated") {
    Quiver q = pres1_quiver();
    CHECK(enumerate_paths(q, std::nullopt, 1).size() == 6);

    auto from1 = enumerate_paths(q, q.vertex_of("1"), 2);
    REQUIRE(from1.size() == 4);
    CHECK(path_to_string(q, from1[0]) == "[1,2] [2,1]");
    CHECK(path_to_string(q, from1[1]) == "[1,2] [2,3]");
    CHECK(path_to_string(q, from1[2]) == "[1,3] [3,1]");
    CHECK(path_to_string(q, from1[3]) == "[1,3] [3,2]");

    auto empties = enumerate_paths(q, std::nullopt, 0);
    REQUIRE(empties.size() == 3);
    for (int v = 0; v < 3; ++v) {
        CHECK(empties[v].is_empty());
        CHECK(empties[v].base == v);
    }

    // recursive size law and validity
    for (int len = 1; len <= 3; ++len)
        for (int v = 0; v < q.vertex_count(); ++v) {
            size_t total = 0;
            for (int a : q.arrows_from(v))
                total += enumerate_paths(q, q.target(a), len - 1).size();
            CHECK(enumerate_paths(q, v, len).size() == total);
        }
    for (auto& p : enumerate_paths(q, std::nullopt, 3))
        CHECK(path_valid(q, p));
}

TEST_CASE("path round-trips through its string form") {
    Quiver q = pres1_quiver();
    for (auto& p : enumerate_paths(q, std::nullopt, 3))
        CHECK(gqtest::path(q, path_to_string(q, p)) == p);
    CHECK(gqtest::path(q, path_to_string(q, empty_path(1))) == empty_path(1));
}

TEST_CASE("inline eps tokens must sit at their vertex") {
    Quiver q = pres1_quiver();
    CHECK(gqtest::path(q, "eps:1 [1,2] eps:2 [2,3] eps:3") == gqtest::path(q, "[1,2] [2,3]"));
    CHECK(gqtest::path(q, "eps:2 eps:2") == empty_path(q.vertex_of("2")));
    CHECK_THROWS_WITH_AS(gqtest::path(q, "eps:2 [1,2]"), doctest::Contains("non-composable"),
                         ParseError);
    CHECK_THROWS_WITH_AS(gqtest::path(q, "[1,2] eps:1"), doctest::Contains("misplaced"),
                         ParseError);
    CHECK_THROWS_WITH_AS(gqtest::path(q, "eps:1 eps:2"), doctest::Contains("misplaced"),
                         ParseError);
}

TEST_CASE("unit loops extend a quiver without disturbing indices") {
    Quiver q = pres1_quiver();
    std::vector<int> units;
    Quiver ext = q.with_unit_loops("eps:", units);
    CHECK(ext.arrow_count() == q.arrow_count() + q.vertex_count());
    for (int a = 0; a < q.arrow_count(); ++a) {
        CHECK(ext.arrow_id(a) == q.arrow_id(a));
        CHECK(ext.source(a) == q.source(a));
    }
    for (int v = 0; v < q.vertex_count(); ++v) {
        CHECK(ext.source(units[v]) == v);
        CHECK(ext.target(units[v]) == v);
        CHECK(ext.arrow_id(units[v]) == "eps:" + q.vertex_name(v));
    }
    CHECK_THROWS_AS(ext.with_unit_loops("eps:", units), ParseError);
}
