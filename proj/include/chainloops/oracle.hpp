#pragma once

#include <cstdint>

#include "chainloops/divisor.hpp"

namespace chainloops {

struct OracleConfig {
    /// Stop scanning at this rank even if the degree allows more; hitting
    /// the cap below the true rank raises BudgetError rather than
    /// returning a silently truncated answer.
    int max_rank_to_test = 64;
    std::uint64_t seed = 0;
    /// Upper bound on v_0-reductions performed across one oracle call.
    std::uint64_t reduction_budget = 10'000'000;
    /// Worker threads for the E-sweep; results are identical to serial.
    int threads = 1;
};

/// Brute-force rank. The vertex set {v_0, ..., v_g} is rank-determining
/// on a chain of loops: D has rank >= r exactly when D - E reduces to an
/// effective divisor for every effective E of degree r supported on the
/// vertices. This scans r = 1, 2, ... over all C(g+r, r) such E and
/// needs no genericity; it is the independent check for the lattice-path
/// rank criterion.
long long oracle_rank(const ChainGraph& graph, const Divisor& D, const OracleConfig& config = {});

/// Checks rank(D) - rank(K - D) = deg(D) + 1 - g with both ranks computed
/// by the brute-force oracle. A false return means a bug somewhere.
bool verify_riemann_roch(const ChainGraph& graph, const Divisor& D, const OracleConfig& config = {});

enum class SampleStyle {
    mixed,         // vertices, distinguished congruence positions, generic positions
    vertices_only, // chips on vertices only
};

/// Deterministic pseudo-random divisor of exact degree d. Mixed style
/// weights the distinguished positions (p+1)*m_i mod L_i so that sampled
/// divisors exercise up steps, not just piles at vertices.
Divisor sample_divisor(const ChainGraph& graph, long long d, std::uint64_t seed,
                       SampleStyle style = SampleStyle::mixed);

} // namespace chainloops
