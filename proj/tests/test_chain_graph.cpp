#include <doctest.h>

#include "chainloops/chain_graph.hpp"
#include "helpers.hpp"

using namespace chainloops;

TEST_CASE("construction rejects degenerate chains") {
    CHECK_THROWS_AS(ChainGraph({}), DomainError);
    CHECK_THROWS_AS(ChainGraph({{Rational(1), Rational(1)}}), DomainError);
    CHECK_THROWS_AS(ChainGraph({{Rational(0), Rational(1)}, {Rational(1), Rational(1)}}),
                    DomainError);
    CHECK_THROWS_AS(ChainGraph({{Rational(1), Rational(-1)}, {Rational(1), Rational(1)}}),
                    DomainError);
    CHECK_NOTHROW(ChainGraph({{Rational(1), Rational(1)}, {Rational(1), Rational(1)}}));
}

TEST_CASE("lengths are indexed 1..g") {
    ChainGraph graph = make_standard_generic(3);
    CHECK(graph.genus() == 3);
    CHECK(graph.ell(1) == Rational(4));
    CHECK(graph.m(3) == Rational(1));
    CHECK(graph.loop_length(2) == Rational(5));
    CHECK_THROWS_AS(graph.ell(0), DomainError);
    CHECK_THROWS_AS(graph.m(4), DomainError);
}

TEST_CASE("point_on_loop canonicalizes positions") {
    ChainGraph graph = make_standard_generic(2); // loops (2, 1), length 3
    CHECK(graph.point_on_loop(1, Rational(0)) == Point::vertex(0));
    CHECK(graph.point_on_loop(1, Rational(1)) == Point::vertex(1));
    CHECK(graph.point_on_loop(2, Rational(1)) == Point::vertex(2));
    CHECK(graph.point_on_loop(1, Rational(3)) == Point::vertex(0));
    CHECK(graph.point_on_loop(1, Rational(-1)) == graph.point_on_loop(1, Rational(2)));
    CHECK(graph.point_on_loop(1, Rational(7, 2)) == Point::interior(1, Rational(1, 2)));
    CHECK_THROWS_AS(graph.point_on_loop(3, Rational(1)), DomainError);
}

TEST_CASE("coordinate_on_loop inverts point_on_loop") {
    ChainGraph graph = make_standard_generic(3);
    CHECK(graph.coordinate_on_loop(Point::vertex(1), 2) == Rational(0));
    CHECK(graph.coordinate_on_loop(Point::vertex(2), 2) == Rational(1));
    CHECK(graph.coordinate_on_loop(Point::interior(2, Rational(5, 2)), 2) == Rational(5, 2));
    // v_0 is not on loop 2, nor are interior points of other loops.
    CHECK_THROWS_AS(graph.coordinate_on_loop(Point::vertex(0), 2), DomainError);
    CHECK_THROWS_AS(graph.coordinate_on_loop(Point::interior(1, Rational(1, 2)), 2), DomainError);
}

TEST_CASE("points order left to right along the chain") {
    Point v0 = Point::vertex(0);
    Point a = Point::interior(1, Rational(1, 2));
    Point b = Point::interior(1, Rational(5, 2));
    Point v1 = Point::vertex(1);
    Point c = Point::interior(2, Rational(1, 2));
    CHECK(v0 < a);
    CHECK(a < b);
    CHECK(b < v1);
    CHECK(v1 < c);
    CHECK(a == Point::interior(1, Rational(1, 2)));
    CHECK(a != b);
}

TEST_CASE("point constructors validate") {
    CHECK_THROWS_AS(Point::vertex(-1), DomainError);
    CHECK_THROWS_AS(Point::interior(0, Rational(1, 2)), DomainError);
    CHECK_THROWS_AS(Point::interior(1, Rational(0)), DomainError);
    CHECK_THROWS_AS(Point::interior(1, Rational(-1, 2)), DomainError);
    CHECK(Point::vertex(0).str() == "v0");
    CHECK(Point::interior(1, Rational(3, 2)).str() == "(loop 1, 3/2)");
}

TEST_CASE("genericity depends on the ratio in lowest terms") {
    // g = 2 requires p + q > 2.
    CHECK(is_generic(make_standard_generic(2)));
    CHECK_FALSE(is_generic(ChainGraph({{Rational(1), Rational(1)}, {Rational(1), Rational(1)}})));
    // ell/m = 4/2 = 2/1 in lowest terms: p + q = 3 > 2, generic despite
    // the common factor.
    CHECK(is_generic(ChainGraph({{Rational(4), Rational(2)}, {Rational(2), Rational(1)}})));
    // Boundary case p + q = 2g - 2 exactly is NOT generic.
    ChainGraph boundary({{Rational(3), Rational(1)},
                         {Rational(3), Rational(1)},
                         {Rational(3), Rational(1)}});
    CHECK_FALSE(is_generic(boundary));
    CHECK_THROWS_AS(require_generic(boundary), NonGenericError);
    // Fractional lengths: 7/2 over 2/3 is 21/4, and 25 > 2g - 2.
    ChainGraph fractional({{Rational(7, 2), Rational(2, 3)},
                           {Rational(9), Rational(1, 5)},
                           {Rational(11, 4), Rational(1, 2)}});
    CHECK(is_generic(fractional));
    CHECK_NOTHROW(require_generic(fractional));
}

TEST_CASE("standard generic chains satisfy the bound with margin") {
    for (int g = 2; g <= 12; ++g) {
        ChainGraph graph = make_standard_generic(g);
        CHECK(graph.genus() == g);
        CHECK(graph.ell(1) == Rational(2 * g - 2));
        CHECK(graph.m(g) == Rational(1));
        CHECK(is_generic(graph));
    }
}

TEST_CASE("random generic graphs from the test helper really are generic") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        ChainGraph graph = testutil::random_generic_graph(4, seed);
        CHECK(graph.genus() == 4);
        CHECK(is_generic(graph));
    }
}

TEST_CASE("vertex_position_on_loop folds the chain onto one loop") {
    ChainGraph graph = make_standard_generic(4);
    CHECK(vertex_position_on_loop(graph, 0, 2) == Rational(0));
    CHECK(vertex_position_on_loop(graph, 1, 2) == Rational(0));
    CHECK(vertex_position_on_loop(graph, 2, 2) == Rational(1));
    CHECK(vertex_position_on_loop(graph, 4, 2) == Rational(1));
    CHECK(vertex_position_on_loop(graph, 3, 1) == Rational(1));
    CHECK(vertex_position_on_loop(graph, 0, 1) == Rational(0));
}
