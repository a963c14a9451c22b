#pragma once

#include <vector>

#include "chainloops/divisor.hpp"

namespace chainloops {

/// Parameter triple (genus, target rank, degree).
struct BNParams {
    int g = 2;
    int r = 0;
    int d = 0;
};

/// rho = g - (r+1)(g-d+r). Negative rho predicts that no divisor of
/// degree d and rank r exists on a generic chain.
long long rho(const BNParams& params);

enum class StepKind { down, up, linger };

struct Step {
    StepKind kind = StepKind::linger;
    int direction = -1; // coordinate index, meaningful for up steps only

    static Step down() { return {StepKind::down, -1}; }
    static Step up(int j) { return {StepKind::up, j}; }
    static Step linger() { return {StepKind::linger, -1}; }

    bool operator==(const Step& rhs) const = default;
};

std::string step_str(const Step& step);

/// The walk p_0, ..., p_g in Z^r attached to v_0-reduced data
/// (d_0; x_1..x_g): p_0 = (d_0, d_0-1, ..., d_0-r+1), and step i moves
/// down by (1,...,1) when cell i is empty, up by e_j when x_i sits at the
/// distinguished position (p_{i-1}(j)+1)·m_i mod L_i and both p_{i-1} and
/// p_{i-1}+e_j lie in the open chamber, and lingers otherwise.
/// Coordinates are indexed 0..r-1.
struct LatticePath {
    int r = 1;
    std::vector<std::vector<long long>> points; // g+1 vectors of length r
    std::vector<Step> steps;                    // g entries
};

/// The open chamber {y : y(0) > y(1) > ... > y(r-1) > 0}. An empty vector
/// (r = 0) is vacuously inside.
bool in_chamber(const std::vector<long long>& p);

/// Builds the lingering lattice path of the given v_0-reduced data.
/// Requires r >= 1 and a generic graph (genericity makes the step choice
/// unambiguous; ambiguity is asserted against).
LatticePath build_path(const ChainGraph& graph, const ReducedData& data, int r);

/// Rank criterion: for r >= 1, D has rank >= r iff the lattice path of
/// its v_0-reduced form stays in the open chamber; for r = 0, iff the
/// v_0-reduced form is effective. Only valid for 0 <= degree <= 2g-2;
/// use rank() outside that range.
bool has_rank_at_least(const ChainGraph& graph, const Divisor& D, int r);

/// Exact rank: -1 when not equivalent to an effective divisor, deg - g
/// when deg > 2g-2, otherwise the largest r passing the path criterion.
long long rank(const ChainGraph& graph, const Divisor& D);

/// Whether some degree-d rank-r divisor class exists on a generic
/// genus-g chain, decided by exhaustive search over chamber-confined
/// paths (over d_0 in [r, d] with exactly g-d+d_0 down steps).
bool path_exists(const BNParams& params);

/// Largest v_0-coefficient among chamber-confined paths; always <= r + rho.
/// Errors when no path exists.
long long max_d0(const BNParams& params);

/// Largest number of lingering steps among chamber-confined paths; equals
/// min(rho, g), the dimension of the space of rank-r degree-d classes.
/// Errors when no path exists.
long long max_lingering(const BNParams& params);

} // namespace chainloops
