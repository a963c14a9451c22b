#include "chainloops/lattice_path.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>

namespace chainloops {

long long rho(const BNParams& params) {
    return static_cast<long long>(params.g) -
           static_cast<long long>(params.r + 1) *
               (static_cast<long long>(params.g) - params.d + params.r);
}

std::string step_str(const Step& step) {
    switch (step.kind) {
    case StepKind::down:
        return "down";
    case StepKind::up:
        return "up(" + std::to_string(step.direction) + ")";
    case StepKind::linger:
        return "linger";
    }
    return "?";
}

bool in_chamber(const std::vector<long long>& p) {
    for (std::size_t j = 1; j < p.size(); ++j)
        if (p[j - 1] <= p[j])
            return false;
    return p.empty() || p.back() > 0;
}

LatticePath build_path(const ChainGraph& graph, const ReducedData& data, int r) {
    if (r < 1)
        throw DomainError("lattice path dimension r must be >= 1");
    require_generic(graph);
    const int g = graph.genus();
    if (static_cast<int>(data.x.size()) != g)
        throw DomainError("reduced data has " + std::to_string(data.x.size()) +
                          " cell coordinates; expected g = " + std::to_string(g));

    long long d = data.d0;
    for (const Rational& x : data.x)
        if (!x.is_zero())
            ++d;

    LatticePath path;
    path.r = r;
    path.points.reserve(static_cast<std::size_t>(g) + 1);
    path.steps.reserve(static_cast<std::size_t>(g));

    std::vector<long long> p(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j)
        p[static_cast<std::size_t>(j)] = data.d0 - j;
    path.points.push_back(p);

    for (int i = 1; i <= g; ++i) {
        const Rational& x = data.x[static_cast<std::size_t>(i - 1)];
        if (x.sign() < 0 || x >= graph.loop_length(i))
            throw DomainError("cell coordinate x_" + std::to_string(i) + " = " + x.str() +
                              " out of range [0, " + graph.loop_length(i).str() + ")");

        Step step = Step::linger();
        if (x.is_zero()) {
            step = Step::down();
        } else if (in_chamber(p)) {
            const Rational L = graph.loop_length(i);
            int found = -1;
            for (int j = 0; j < r; ++j) {
                // p + e_j must stay strictly decreasing.
                if (j > 0 && p[static_cast<std::size_t>(j - 1)] == p[static_cast<std::size_t>(j)] + 1)
                    continue;
                Rational special = (Rational(p[static_cast<std::size_t>(j)] + 1) * graph.m(i)).mod(L);
                if (special == x) {
                    detail::internal_check(found < 0,
                                           "ambiguous up step; genericity check is broken");
                    found = j;
                }
            }
            if (found >= 0)
                step = Step::up(found);
        }

        switch (step.kind) {
        case StepKind::down:
            for (long long& coord : p)
                --coord;
            break;
        case StepKind::up:
            ++p[static_cast<std::size_t>(step.direction)];
            break;
        case StepKind::linger:
            break;
        }
        for (std::size_t j = 0; j < p.size(); ++j) {
            detail::internal_check(p[j] <= d, "path coordinate exceeded the degree");
            detail::internal_check(j == 0 || p[j - 1] > p[j],
                                   "path coordinates are not strictly decreasing");
        }
        path.points.push_back(p);
        path.steps.push_back(step);
    }
    return path;
}

bool has_rank_at_least(const ChainGraph& graph, const Divisor& D, int r) {
    require_generic(graph);
    if (r < 0)
        throw DomainError("rank threshold must be >= 0");
    validate_on(graph, D);
    const long long deg = D.degree();
    if (deg < 0 || deg > 2LL * graph.genus() - 2)
        throw DomainError("path criterion requires 0 <= degree <= 2g-2; use rank() instead");

    Divisor R = reduce(graph, D, 0);
    if (r == 0)
        return R.coefficient(Point::vertex(0)) >= 0;
    LatticePath path = build_path(graph, to_reduced_data(graph, R), r);
    return std::all_of(path.points.begin(), path.points.end(),
                       [](const std::vector<long long>& p) { return in_chamber(p); });
}

long long rank(const ChainGraph& graph, const Divisor& D) {
    require_generic(graph);
    validate_on(graph, D);
    const long long deg = D.degree();
    if (deg < 0)
        return -1;
    Divisor R = reduce(graph, D, 0);
    if (R.coefficient(Point::vertex(0)) < 0)
        return -1;
    const int g = graph.genus();
    if (deg > 2LL * g - 2)
        return deg - g;

    ReducedData data = to_reduced_data(graph, R);
    long long best = 0;
    // No monotonicity assumption: scan every candidate up to the degree.
    for (int r = 1; r <= deg; ++r) {
        LatticePath path = build_path(graph, data, r);
        bool confined = std::all_of(path.points.begin(), path.points.end(),
                                    [](const std::vector<long long>& p) { return in_chamber(p); });
        if (confined)
            best = r;
    }
    return best;
}

namespace {

// State key for the path search: the current point with the down-step
// count appended.
struct StateHash {
    std::size_t operator()(const std::vector<long long>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (long long x : v)
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
};

using Frontier = std::unordered_map<std::vector<long long>, int, StateHash>;

void relax(Frontier& frontier, std::vector<long long> key, int lingers) {
    auto [it, inserted] = frontier.try_emplace(std::move(key), lingers);
    if (!inserted && it->second < lingers)
        it->second = lingers;
}

// Searches all g-step walks from (d0, ..., d0-r+1) that stay in the open
// chamber and take exactly g-d+d0 down steps. Down realizes an empty
// cell, Linger a generic cell coordinate, and Up(j) the distinguished
// coordinate for direction j; on a generic graph each of these choices is
// realizable independently at every step, so reachability here matches
// divisor existence. Returns the best linger count, or nothing.
std::optional<int> best_linger_count(int g, int r, int d, int d0) {
    const int n_down = g - d + d0;
    if (n_down < 0 || n_down > g)
        return std::nullopt;

    std::vector<long long> start(static_cast<std::size_t>(r) + 1);
    for (int j = 0; j < r; ++j)
        start[static_cast<std::size_t>(j)] = d0 - j;
    start[static_cast<std::size_t>(r)] = 0; // down steps taken
    if (d0 - r + 1 <= 0)
        return std::nullopt; // start is already outside the chamber

    Frontier frontier;
    frontier.emplace(std::move(start), 0);

    for (int step = 1; step <= g; ++step) {
        const int steps_left_after = g - step;
        Frontier next;
        next.reserve(frontier.size() * 2);
        for (const auto& [state, lingers] : frontier) {
            const long long downs = state[static_cast<std::size_t>(r)];
            // Down: every coordinate falls by one; the walk must still be
            // able to reach n_down total downs but not overshoot.
            if (downs < n_down && n_down - downs - 1 <= steps_left_after &&
                state[static_cast<std::size_t>(r - 1)] > 1) {
                std::vector<long long> key = state;
                for (int j = 0; j < r; ++j)
                    --key[static_cast<std::size_t>(j)];
                ++key[static_cast<std::size_t>(r)];
                relax(next, std::move(key), lingers);
            }
            if (n_down - downs <= steps_left_after) {
                // Linger.
                relax(next, state, lingers + 1);
                // Up(j), provided the point stays strictly decreasing and
                // below the degree bound.
                for (int j = 0; j < r; ++j) {
                    const long long coord = state[static_cast<std::size_t>(j)];
                    if (coord + 1 > d)
                        continue;
                    if (j > 0 && state[static_cast<std::size_t>(j - 1)] == coord + 1)
                        continue;
                    std::vector<long long> key = state;
                    ++key[static_cast<std::size_t>(j)];
                    relax(next, std::move(key), lingers);
                }
            }
        }
        frontier = std::move(next);
        if (frontier.empty())
            return std::nullopt;
    }

    std::optional<int> best;
    for (const auto& [state, lingers] : frontier)
        if (state[static_cast<std::size_t>(r)] == n_down && (!best || lingers > *best))
            best = lingers;
    return best;
}

void check_search_params(const BNParams& params) {
    if (params.g < 2)
        throw DomainError("genus must be at least 2");
    if (params.r < 1)
        throw DomainError("path search requires r >= 1");
    if (params.d < 0 || params.d > 2 * params.g - 2)
        throw DomainError("path search requires 0 <= d <= 2g-2");
}

} // namespace

bool path_exists(const BNParams& params) {
    check_search_params(params);
    for (int d0 = params.r; d0 <= params.d; ++d0)
        if (best_linger_count(params.g, params.r, params.d, d0))
            return true;
    return false;
}

long long max_d0(const BNParams& params) {
    check_search_params(params);
    for (int d0 = params.d; d0 >= params.r; --d0)
        if (best_linger_count(params.g, params.r, params.d, d0))
            return d0;
    throw DomainError("no chamber-confined path exists for g=" + std::to_string(params.g) +
                      ", r=" + std::to_string(params.r) + ", d=" + std::to_string(params.d));
}

long long max_lingering(const BNParams& params) {
    check_search_params(params);
    std::optional<int> best;
    for (int d0 = params.r; d0 <= params.d; ++d0) {
        std::optional<int> got = best_linger_count(params.g, params.r, params.d, d0);
        if (got && (!best || *got > *best))
            best = got;
    }
    if (!best)
        throw DomainError("no chamber-confined path exists for g=" + std::to_string(params.g) +
                          ", r=" + std::to_string(params.r) + ", d=" + std::to_string(params.d));
    return *best;
}

} // namespace chainloops
