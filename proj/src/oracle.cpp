#include "chainloops/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace chainloops {

namespace {

struct Budget {
    std::uint64_t limit;
    std::atomic<std::uint64_t> used{0};

    void charge(std::uint64_t amount) {
        if (used.fetch_add(amount) + amount > limit)
            throw BudgetError("oracle work budget of " + std::to_string(limit) +
                              " reductions exhausted; raise --budget to continue");
    }
};

std::uint64_t count_compositions(int parts, int total) {
    // C(total + parts - 1, parts - 1), saturating at 2^64 - 1.
    unsigned __int128 value = 1;
    for (int i = 1; i < parts; ++i) {
        value = value * static_cast<unsigned>(total + i) / static_cast<unsigned>(i);
        if (value > ~static_cast<std::uint64_t>(0))
            return ~static_cast<std::uint64_t>(0);
    }
    return static_cast<std::uint64_t>(value);
}

// All effective divisors of degree `total` on v_0..v_g, in lexicographic
// order of the coefficient tuple starting from (total, 0, ..., 0).
std::vector<std::vector<long long>> vertex_compositions(int g, int total) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> c(static_cast<std::size_t>(g) + 1, 0);
    c[0] = total;
    for (;;) {
        out.push_back(c);
        if (c[static_cast<std::size_t>(g)] == total)
            return out;
        // Move one unit rightward from the last nonzero position before
        // the end, pulling everything after it back to that position.
        int k = g - 1;
        while (c[static_cast<std::size_t>(k)] == 0)
            --k;
        long long tail = c[static_cast<std::size_t>(g)];
        c[static_cast<std::size_t>(g)] = 0;
        --c[static_cast<std::size_t>(k)];
        c[static_cast<std::size_t>(k + 1)] = tail + 1;
    }
}

bool reduces_effective(const ChainGraph& graph, const Divisor& base,
                       const std::vector<long long>& chips, Budget& budget) {
    budget.charge(1);
    Divisor candidate = base;
    for (int n = 0; n < static_cast<int>(chips.size()); ++n)
        candidate.add(Point::vertex(n), -chips[static_cast<std::size_t>(n)]);
    return reduce(graph, candidate, 0).coefficient(Point::vertex(0)) >= 0;
}

// Conjunction over all E of degree r: D - E must reduce to an effective
// divisor for every one of them.
bool sweep_passes(const ChainGraph& graph, const Divisor& base, int r, Budget& budget,
                  int threads) {
    std::uint64_t needed = count_compositions(graph.genus() + 1, r);
    if (budget.used.load() + needed > budget.limit)
        throw BudgetError("rank sweep needs " + std::to_string(needed) +
                          " reductions, exceeding the budget of " + std::to_string(budget.limit));
    std::vector<std::vector<long long>> sweep = vertex_compositions(graph.genus(), r);

    if (threads <= 1) {
        for (const auto& chips : sweep)
            if (!reduces_effective(graph, base, chips, budget))
                return false;
        return true;
    }

    std::atomic<bool> failed{false};
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr error;
    std::mutex error_guard;
    auto worker = [&] {
        try {
            for (;;) {
                std::size_t index = cursor.fetch_add(1);
                if (index >= sweep.size() || failed.load())
                    return;
                if (!reduces_effective(graph, base, sweep[index], budget))
                    failed.store(true);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_guard);
            if (!error)
                error = std::current_exception();
            failed.store(true);
        }
    };
    std::vector<std::thread> pool;
    int n_workers = std::min<int>(threads, static_cast<int>(sweep.size()));
    pool.reserve(static_cast<std::size_t>(n_workers));
    for (int t = 0; t < n_workers; ++t)
        pool.emplace_back(worker);
    for (std::thread& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
    return !failed.load();
}

} // namespace

long long oracle_rank(const ChainGraph& graph, const Divisor& D, const OracleConfig& config) {
    validate_on(graph, D);
    const long long deg = D.degree();
    if (deg < 0)
        return -1;

    Budget budget{config.reduction_budget};
    budget.charge(1);
    Divisor R = reduce(graph, D, 0);
    if (R.coefficient(Point::vertex(0)) < 0)
        return -1;
    const int g = graph.genus();
    if (deg > 2LL * g - 2)
        return deg - g;

    long long rank = 0;
    const long long cap = std::min<long long>(deg, config.max_rank_to_test);
    for (int r = 1; r <= cap; ++r) {
        if (!sweep_passes(graph, R, r, budget, config.threads))
            return rank;
        rank = r;
    }
    if (rank == config.max_rank_to_test && rank < deg)
        throw BudgetError("rank exceeds max_rank_to_test = " +
                          std::to_string(config.max_rank_to_test));
    return rank;
}

bool verify_riemann_roch(const ChainGraph& graph, const Divisor& D, const OracleConfig& config) {
    Divisor K = canonical_divisor(graph);
    long long lhs = oracle_rank(graph, D, config) - oracle_rank(graph, K - D, config);
    return lhs == D.degree() + 1 - graph.genus();
}

Divisor sample_divisor(const ChainGraph& graph, long long d, std::uint64_t seed,
                       SampleStyle style) {
    std::mt19937_64 rng(seed);
    auto next = [&rng](std::uint64_t k) -> std::uint64_t { return k ? rng() % k : 0; };
    const int g = graph.genus();

    Divisor D;
    std::uint64_t chunks = next(static_cast<std::uint64_t>(g) + 2);
    for (std::uint64_t t = 0; t < chunks; ++t) {
        Point point = Point::vertex(static_cast<int>(next(static_cast<std::uint64_t>(g) + 1)));
        if (style == SampleStyle::mixed) {
            switch (next(3)) {
            case 0:
                break; // keep the vertex
            case 1: {
                // A distinguished position (p+1)*m_i; these trigger up
                // steps in lattice paths, so ranks above d - g appear.
                int i = 1 + static_cast<int>(next(static_cast<std::uint64_t>(g)));
                long long level = static_cast<long long>(next(2 * static_cast<std::uint64_t>(g)));
                point = graph.point_on_loop(i, Rational(level + 1) * graph.m(i));
                break;
            }
            default: {
                int i = 1 + static_cast<int>(next(static_cast<std::uint64_t>(g)));
                std::uint64_t den = 2 + next(7);
                std::uint64_t num = 1 + next(den - 1);
                point = graph.point_on_loop(
                    i, graph.loop_length(i) * Rational(Integer(num), Integer(den)));
                break;
            }
            }
        }
        long long coeff = 1 + static_cast<long long>(next(2));
        if (next(4) == 0)
            coeff = -coeff;
        D.add(point, coeff);
    }
    long long delta = d - D.degree();
    if (delta != 0)
        D.add(Point::vertex(static_cast<int>(next(static_cast<std::uint64_t>(g) + 1))), delta);
    return D;
}

} // namespace chainloops
