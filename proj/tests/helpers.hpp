#pragma once

// Shared test utilities. The centerpiece is an equivalence check that is
// computed by a completely different route than Divisor::reduce: the
// per-loop weighted coordinate sum. Folding the whole chain onto one loop
// is invariant under every chip-firing move, and degree plus the g folds
// together separate inequivalent classes, so agreement between this check
// and reduce()-based equality is a meaningful cross-validation, not a
// tautology.

#include <cstdint>
#include <random>
#include <vector>

#include "chainloops/divisor.hpp"

namespace testutil {

using chainloops::ChainGraph;
using chainloops::Divisor;
using chainloops::Integer;
using chainloops::LoopLengths;
using chainloops::Point;
using chainloops::Rational;

/// Projection of an arbitrary point of the chain onto the closed loop i:
/// everything left of the loop folds to v_{i-1} (coordinate 0),
/// everything right of it folds to v_i (coordinate m_i).
inline Rational loop_projection(const ChainGraph& graph, const Point& point, int i) {
    if (point.is_vertex())
        return vertex_position_on_loop(graph, point.vertex_index(), i);
    if (point.loop() == i)
        return point.position();
    return point.loop() < i ? Rational(0) : graph.m(i);
}

/// Weighted coordinate sum of the projection of D onto loop i, mod L_i.
/// Unchanged by chip-firing moves, so it is a linear-equivalence
/// invariant of D.
inline Rational chain_invariant(const ChainGraph& graph, const Divisor& D, int i) {
    Rational sum(0);
    for (const auto& [point, coeff] : D.entries())
        sum += Rational(coeff) * loop_projection(graph, point, i);
    return sum.mod(graph.loop_length(i));
}

/// Complete invariant of the divisor class: degree plus the g per-loop
/// residues. Used as the independent route for equivalence tests.
inline bool same_class_by_invariants(const ChainGraph& graph, const Divisor& A,
                                     const Divisor& B) {
    if (A.degree() != B.degree())
        return false;
    for (int i = 1; i <= graph.genus(); ++i)
        if (chain_invariant(graph, A, i) != chain_invariant(graph, B, i))
            return false;
    return true;
}

/// Deterministic generic chain with non-integer edge lengths: draws small
/// random rationals and redraws any loop whose ratio in lowest terms
/// fails the genericity bound.
inline ChainGraph random_generic_graph(int g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto next = [&rng](std::uint64_t k) { return static_cast<long long>(rng() % k); };
    Integer bound = 2 * g - 2;
    std::vector<LoopLengths> loops;
    while (static_cast<int>(loops.size()) < g) {
        LoopLengths loop{Rational(1 + next(12 * g), 1 + next(5)),
                         Rational(1 + next(7), 1 + next(5))};
        Rational ratio = loop.ell / loop.m;
        if (ratio.numerator() + ratio.denominator() > bound)
            loops.push_back(std::move(loop));
    }
    return ChainGraph(std::move(loops));
}

/// Hook length formula for the count of standard Young tableaux on a
/// rows x cols rectangle; an arithmetic route independent of both
/// lambda() and the backtracking enumeration.
inline Integer hook_length_count(int rows, int cols) {
    Integer numerator = 1;
    for (int k = 1; k <= rows * cols; ++k)
        numerator *= k;
    Integer hooks = 1;
    for (int a = 0; a < rows; ++a)
        for (int b = 0; b < cols; ++b)
            hooks *= (rows - 1 - a) + (cols - 1 - b) + 1;
    return numerator / hooks; // exact: the hook product divides n!
}

} // namespace testutil
