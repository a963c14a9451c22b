#include <doctest.h>

#include "chainloops/divisor.hpp"
#include "chainloops/oracle.hpp"
#include "helpers.hpp"

using namespace chainloops;
using testutil::chain_invariant;
using testutil::same_class_by_invariants;

namespace {

Divisor pt(int loop, long long num, long long den = 1) {
    return Divisor::at(Point::interior(loop, Rational(num, den)));
}

Divisor v(int n, long long coeff = 1) {
    return Divisor::at(Point::vertex(n), coeff);
}

} // namespace

TEST_CASE("divisor bookkeeping") {
    Divisor D;
    CHECK(D.is_zero());
    CHECK(D.degree() == 0);
    D.add(Point::vertex(0), 2);
    D.add(Point::interior(1, Rational(1, 2)), -1);
    CHECK(D.degree() == 1);
    CHECK_FALSE(D.is_effective());
    CHECK(D.coefficient(Point::vertex(0)) == 2);
    CHECK(D.coefficient(Point::vertex(1)) == 0);
    D.add(Point::interior(1, Rational(1, 2)), 1); // cancels to zero, entry dropped
    CHECK(D.entries().size() == 1);
    CHECK(D.is_effective());
    CHECK((D - D).is_zero());
    CHECK((-D).degree() == -2);
    CHECK(D.str() == "2*v0");
    CHECK((v(0) + pt(1, 3, 2) - v(3)).str() == "v0 + (loop 1, 3/2) - v3");
    CHECK(Divisor().str() == "0");
}

TEST_CASE("validate_on rejects points that are not canonical for the graph") {
    ChainGraph graph = make_standard_generic(2); // loops (2, 1), length 3
    CHECK_NOTHROW(validate_on(graph, v(2) + pt(2, 5, 2)));
    CHECK_THROWS_AS(validate_on(graph, v(3)), DomainError);
    CHECK_THROWS_AS(validate_on(graph, pt(3, 1, 2)), DomainError);
    CHECK_THROWS_AS(validate_on(graph, pt(1, 1)), DomainError);  // = v1, not interior
    CHECK_THROWS_AS(validate_on(graph, pt(1, 7, 2)), DomainError); // past the loop length
}

TEST_CASE("canonical divisor puts two chips on each interior vertex") {
    ChainGraph graph = make_standard_generic(4);
    Divisor K = canonical_divisor(graph);
    CHECK(K.degree() == 2 * 4 - 2);
    CHECK(K == v(1, 2) + v(2, 2) + v(3, 2));
}

TEST_CASE("loop_mu is the weighted coordinate sum mod the loop length") {
    ChainGraph graph = make_standard_generic(2); // L = 3 on each loop
    CHECK(loop_mu(graph, v(0, 2) + pt(1, 5, 2), 1) == Rational(5, 2));
    CHECK(loop_mu(graph, v(1, 4), 1) == Rational(1)); // 4*1 mod 3
    CHECK(loop_mu(graph, v(1, -1) + pt(1, 1, 2), 1) == Rational(5, 2));
    CHECK_THROWS_AS(loop_mu(graph, v(2), 1), DomainError); // v2 is not on loop 1
}

// Frozen single-loop reductions: chain with loops (2, 1), all mass on
// loop 1, reduced at v1. With k chips at v0 and at most one more point
// at counterclockwise distance x from v0, the v1-reduced form is
//   (k-1) v1 + point at -(k-1)m          when there is no extra point,
//   (k+1) v1                             when x = (k+1)m mod (l+m),
//   k v1 + point at x - km               otherwise.
TEST_CASE("single-loop reduction matches the three-case formula") {
    ChainGraph graph = make_standard_generic(2); // loop 1: l = 2, m = 1, L = 3

    SUBCASE("pile only: one chip stays behind") {
        CHECK(reduce(graph, v(0, 2), 1) == v(1, 1) + pt(1, 2));
    }
    SUBCASE("pile plus the distinguished point: the pile grows") {
        CHECK(reduce(graph, v(0, 1) + pt(1, 2), 1) == v(1, 2));
    }
    SUBCASE("pile plus a generic point: the pile moves intact") {
        CHECK(reduce(graph, v(0, 1) + pt(1, 3, 2), 1) == v(1, 1) + pt(1, 1, 2));
    }
}

TEST_CASE("reduction drags chips across the whole chain") {
    // Both loops (3, 1): 2 v0 plus the distinguished point at 3 on loop 1
    // merge into a pile of 3 at v1.
    ChainGraph graph({{Rational(3), Rational(1)}, {Rational(3), Rational(1)}});
    Divisor D = v(0, 2) + pt(1, 3);
    CHECK(reduce(graph, D, 1) == v(1, 3));
    CHECK(equivalent(graph, D, v(1, 3)));
    CHECK(same_class_by_invariants(graph, D, v(1, 3)));
    CHECK_FALSE(equivalent(graph, D, v(1, 2) + v(2, 1)));
    CHECK_FALSE(same_class_by_invariants(graph, D, v(1, 2) + v(2, 1)));
}

TEST_CASE("reduce validates its inputs") {
    ChainGraph graph = make_standard_generic(2);
    CHECK_THROWS_AS(reduce(graph, v(0), -1), DomainError);
    CHECK_THROWS_AS(reduce(graph, v(0), 3), DomainError);
    CHECK_THROWS_AS(reduce(graph, v(3), 0), DomainError);
}

TEST_CASE("reduced forms are canonical class representatives") {
    ChainGraph graph = make_standard_generic(3);
    std::uint64_t seed = 11;
    for (int trial = 0; trial < 40; ++trial) {
        for (long long d = -2; d <= 5; ++d) {
            Divisor D = sample_divisor(graph, d, seed++);
            for (int n = 0; n <= graph.genus(); ++n) {
                Divisor R = reduce(graph, D, n);
                CHECK(R.degree() == D.degree());
                CHECK(is_reduced(graph, R, n));
                CHECK(reduce(graph, R, n) == R);
                CHECK(same_class_by_invariants(graph, D, R));
            }
        }
    }
}

TEST_CASE("is_reduced checks effectivity and the cell condition") {
    ChainGraph graph = make_standard_generic(3);
    CHECK(is_reduced(graph, v(0, 5), 0));
    CHECK(is_reduced(graph, Divisor(), 0));
    CHECK(is_reduced(graph, v(0, -2), 0));       // any coefficient at the basepoint
    CHECK_FALSE(is_reduced(graph, v(1, -1), 0)); // negative away from it
    CHECK(is_reduced(graph, pt(1, 2), 0));       // one interior chip is fine
}

TEST_CASE("cells of the v0 decomposition each hold at most one chip") {
    ChainGraph graph = make_standard_generic(3);
    // gamma_1 = loop 1 minus v0 contains both interior points and v1.
    CHECK(is_reduced(graph, pt(1, 1, 2), 0));
    CHECK_FALSE(is_reduced(graph, pt(1, 1, 2) + pt(1, 3, 2), 0));
    CHECK_FALSE(is_reduced(graph, pt(1, 1, 2) + v(1), 0));
    CHECK_FALSE(is_reduced(graph, Divisor::at(Point::interior(1, Rational(1, 2)), 2), 0));
    CHECK_FALSE(is_reduced(graph, v(1, 2), 0));
    // Reducing at v1 splits loop 1 off into gamma'_1 = loop 1 minus v1;
    // a chip at v0 and a chip inside loop 1 are then two chips in one cell.
    CHECK_FALSE(is_reduced(graph, v(0) + pt(1, 1, 2), 1));
    CHECK(is_reduced(graph, v(0) + pt(2, 1, 2), 1));
}

TEST_CASE("reduced data round-trips") {
    ChainGraph graph = make_standard_generic(4); // loops (6, 1), L = 7
    Divisor D = v(0, 1) + pt(1, 2) + pt(2, 3);
    ReducedData data = to_reduced_data(graph, D);
    CHECK(data.d0 == 1);
    CHECK(data.x == std::vector<Rational>{Rational(2), Rational(3), Rational(0), Rational(0)});
    CHECK(from_reduced_data(graph, data) == D);

    // A chip at v_i is encoded as x_i = m_i, not as an empty cell.
    Divisor E = v(0, 2) + v(2, 1);
    ReducedData edata = to_reduced_data(graph, E);
    CHECK(edata.d0 == 2);
    CHECK(edata.x == std::vector<Rational>{Rational(0), Rational(1), Rational(0), Rational(0)});
    CHECK(from_reduced_data(graph, edata) == E);

    CHECK_THROWS_AS(to_reduced_data(graph, v(1, 2)), DomainError); // not v0-reduced
    ReducedData bad{1, {Rational(7), Rational(0), Rational(0), Rational(0)}};
    CHECK_THROWS_AS(from_reduced_data(graph, bad), DomainError); // x out of [0, L)
}
