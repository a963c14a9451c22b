#include "chainloops/brill_noether.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace chainloops {

Tableau::Tableau(std::vector<std::vector<int>> cells) : cells_(std::move(cells)) {
    if (cells_.empty() || cells_.front().empty())
        throw DomainError("tableau must have at least one row and one column");
    const std::size_t width = cells_.front().size();
    std::size_t count = 0;
    for (const auto& row : cells_) {
        if (row.size() != width)
            throw DomainError("tableau rows have unequal lengths; the shape must be a rectangle");
        count += row.size();
    }
    std::vector<bool> seen(count + 1, false);
    for (const auto& row : cells_)
        for (int entry : row) {
            if (entry < 1 || entry > static_cast<int>(count))
                throw DomainError("tableau entry " + std::to_string(entry) +
                                  " out of range 1.." + std::to_string(count));
            if (seen[static_cast<std::size_t>(entry)])
                throw DomainError("tableau entry " + std::to_string(entry) + " repeats");
            seen[static_cast<std::size_t>(entry)] = true;
        }
    for (std::size_t i = 0; i < cells_.size(); ++i)
        for (std::size_t j = 0; j < width; ++j) {
            if (j + 1 < width && cells_[i][j] >= cells_[i][j + 1])
                throw DomainError("tableau is not standard: row " + std::to_string(i) +
                                  " is not strictly increasing");
            if (i + 1 < cells_.size() && cells_[i][j] >= cells_[i + 1][j])
                throw DomainError("tableau is not standard: column " + std::to_string(j) +
                                  " is not strictly increasing");
        }
}

int Tableau::at(int row, int col) const {
    if (row < 0 || row >= rows() || col < 0 || col >= cols())
        throw DomainError("tableau cell out of range");
    return cells_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
}

namespace {

Integer factorial(long long n) {
    Integer result(1);
    for (long long k = 2; k <= n; ++k)
        result *= k;
    return result;
}

void require_rho_zero(const BNParams& params) {
    long long value = rho(params);
    if (value != 0)
        throw DomainError("operation requires rho = 0, but rho(g=" + std::to_string(params.g) +
                          ", r=" + std::to_string(params.r) + ", d=" + std::to_string(params.d) +
                          ") = " + std::to_string(value));
}

bool chamber_confined(const LatticePath& path) {
    return std::all_of(path.points.begin(), path.points.end(),
                       [](const std::vector<long long>& p) { return in_chamber(p); });
}

} // namespace

Integer lambda(const BNParams& params) {
    if (params.g < 2 || params.r < 0)
        throw DomainError("lambda requires g >= 2 and r >= 0");
    require_rho_zero(params);
    Integer numerator = factorial(params.g);
    Integer denominator(1);
    for (int i = 0; i <= params.r; ++i) {
        numerator *= factorial(i);
        denominator *= factorial(static_cast<long long>(params.g) - params.d + params.r + i);
    }
    Integer quotient = numerator / denominator;
    detail::internal_check(quotient * denominator == numerator,
                           "lambda formula did not divide exactly");
    return quotient;
}

LatticePath tableau_to_path(const BNParams& params, const Tableau& t) {
    require_rho_zero(params);
    const int rows = params.g - params.d + params.r;
    const int cols = params.r + 1;
    if (t.rows() != rows || t.cols() != cols)
        throw DomainError("tableau shape " + std::to_string(t.rows()) + "x" +
                          std::to_string(t.cols()) + " does not match (g-d+r)x(r+1) = " +
                          std::to_string(rows) + "x" + std::to_string(cols));

    std::vector<int> column_of(static_cast<std::size_t>(params.g) + 1, -1);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            column_of[static_cast<std::size_t>(t.at(i, j))] = j;

    LatticePath path;
    path.r = params.r;
    std::vector<long long> p(static_cast<std::size_t>(params.r));
    for (int j = 0; j < params.r; ++j)
        p[static_cast<std::size_t>(j)] = params.r - j;
    const std::vector<long long> start = p;
    path.points.push_back(p);
    for (int i = 1; i <= params.g; ++i) {
        int col = column_of[static_cast<std::size_t>(i)];
        if (col == params.r) {
            for (long long& coord : p)
                --coord;
            path.steps.push_back(Step::down());
        } else {
            ++p[static_cast<std::size_t>(col)];
            path.steps.push_back(Step::up(col));
        }
        path.points.push_back(p);
        detail::internal_check(in_chamber(p), "tableau path left the chamber");
    }
    detail::internal_check(p == start, "tableau path did not return to its start");
    return path;
}

Tableau path_to_tableau(const BNParams& params, const LatticePath& path) {
    require_rho_zero(params);
    const int rows = params.g - params.d + params.r;
    const int cols = params.r + 1;
    if (path.r != params.r || static_cast<int>(path.steps.size()) != params.g)
        throw DomainError("path shape does not match the parameters");

    std::vector<long long> start(static_cast<std::size_t>(params.r));
    for (int j = 0; j < params.r; ++j)
        start[static_cast<std::size_t>(j)] = params.r - j;
    if (path.points.empty() || path.points.front() != start || path.points.back() != start)
        throw DomainError("path must start and end at (r, r-1, ..., 1)");
    if (!chamber_confined(path))
        throw DomainError("path leaves the open chamber");

    std::vector<std::vector<int>> cells(static_cast<std::size_t>(rows),
                                        std::vector<int>(static_cast<std::size_t>(cols), 0));
    std::vector<int> filled(static_cast<std::size_t>(cols), 0);
    for (int i = 1; i <= params.g; ++i) {
        const Step& step = path.steps[static_cast<std::size_t>(i - 1)];
        if (step.kind == StepKind::linger)
            throw DomainError("path lingers at step " + std::to_string(i) +
                              "; only linger-free paths correspond to tableaux");
        int col = step.kind == StepKind::down ? params.r : step.direction;
        if (filled[static_cast<std::size_t>(col)] >= rows)
            throw DomainError("path has too many steps in one direction");
        cells[static_cast<std::size_t>(filled[static_cast<std::size_t>(col)]++)]
             [static_cast<std::size_t>(col)] = i;
    }
    return Tableau(std::move(cells));
}

Divisor path_to_divisor(const ChainGraph& graph, const LatticePath& path) {
    require_generic(graph);
    const int g = graph.genus();
    if (path.r < 1)
        throw DomainError("path dimension r must be >= 1");
    if (static_cast<int>(path.points.size()) != g + 1 ||
        static_cast<int>(path.steps.size()) != g)
        throw DomainError("path length does not match the genus");
    for (const auto& p : path.points)
        if (static_cast<int>(p.size()) != path.r)
            throw DomainError("path point dimension does not match r");
    // Only walks whose start is a run of consecutive integers arise from
    // divisors, because p_0 = (d_0, d_0-1, ..., d_0-r+1).
    const std::vector<long long>& p0 = path.points.front();
    for (int j = 0; j < path.r; ++j)
        if (p0[static_cast<std::size_t>(j)] != p0[0] - j)
            throw DomainError("path start is not of the form (d0, d0-1, ..., d0-r+1)");
    if (!chamber_confined(path))
        throw DomainError("path leaves the open chamber");

    ReducedData data;
    data.d0 = p0[0];
    data.x.assign(static_cast<std::size_t>(g), Rational(0));
    for (int i = 1; i <= g; ++i) {
        const Step& step = path.steps[static_cast<std::size_t>(i - 1)];
        const std::vector<long long>& prev = path.points[static_cast<std::size_t>(i - 1)];
        const std::vector<long long>& cur = path.points[static_cast<std::size_t>(i)];
        switch (step.kind) {
        case StepKind::linger:
            throw DomainError("path lingers at step " + std::to_string(i) +
                              "; its cell coordinate is a free parameter, not determined");
        case StepKind::down:
            for (int j = 0; j < path.r; ++j)
                if (cur[static_cast<std::size_t>(j)] != prev[static_cast<std::size_t>(j)] - 1)
                    throw DomainError("step " + std::to_string(i) + " tag does not match points");
            break;
        case StepKind::up: {
            int dir = step.direction;
            if (dir < 0 || dir >= path.r)
                throw DomainError("up step direction out of range");
            for (int j = 0; j < path.r; ++j) {
                long long expected = prev[static_cast<std::size_t>(j)] + (j == dir ? 1 : 0);
                if (cur[static_cast<std::size_t>(j)] != expected)
                    throw DomainError("step " + std::to_string(i) + " tag does not match points");
            }
            Rational x = (Rational(prev[static_cast<std::size_t>(dir)] + 1) * graph.m(i))
                             .mod(graph.loop_length(i));
            detail::internal_check(!x.is_zero(),
                                   "distinguished cell coordinate hit the left vertex; "
                                   "genericity check is broken");
            data.x[static_cast<std::size_t>(i - 1)] = std::move(x);
            break;
        }
        }
    }
    return from_reduced_data(graph, data);
}

namespace {

void fill_tableaux(int rows, int cols, int value, std::vector<int>& filled,
                   std::vector<std::vector<int>>& cells, std::vector<Tableau>& out) {
    if (value > rows * cols) {
        out.push_back(Tableau(cells));
        return;
    }
    for (int col = 0; col < cols; ++col) {
        // Each value goes in the topmost free cell of some column; the
        // left neighbour must already be filled (strictly longer column).
        if (filled[static_cast<std::size_t>(col)] >= rows)
            continue;
        if (col > 0 && filled[static_cast<std::size_t>(col)] >= filled[static_cast<std::size_t>(col - 1)])
            continue;
        int row = filled[static_cast<std::size_t>(col)]++;
        cells[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = value;
        fill_tableaux(rows, cols, value + 1, filled, cells, out);
        --filled[static_cast<std::size_t>(col)];
    }
}

} // namespace

std::vector<Tableau> enumerate_tableaux(int rows, int cols) {
    if (rows < 1 || cols < 1)
        throw DomainError("tableau shape must have rows, cols >= 1");
    std::vector<Tableau> out;
    std::vector<int> filled(static_cast<std::size_t>(cols), 0);
    std::vector<std::vector<int>> cells(static_cast<std::size_t>(rows),
                                        std::vector<int>(static_cast<std::size_t>(cols), 0));
    fill_tableaux(rows, cols, 1, filled, cells, out);
    return out;
}

std::vector<Divisor> enumerate_classes(const ChainGraph& graph, const BNParams& params) {
    require_generic(graph);
    if (graph.genus() != params.g)
        throw DomainError("graph genus " + std::to_string(graph.genus()) +
                          " does not match parameter g = " + std::to_string(params.g));
    long long value = rho(params);
    if (value != 0)
        throw DomainError("enumeration requires rho = 0 (got rho = " + std::to_string(value) +
                          "); for rho > 0 the family is infinite — query its dimension instead");
    if (params.r == 0) {
        // rho = 0 with r = 0 forces d = 0: the zero class is the only one.
        return {Divisor()};
    }
    std::vector<Divisor> classes;
    for (const Tableau& t : enumerate_tableaux(params.g - params.d + params.r, params.r + 1))
        classes.push_back(path_to_divisor(graph, tableau_to_path(params, t)));
    return classes;
}

namespace {

// Degree-j effective divisor on {v_0..v_n} whose removal from D pins the
// v_n-reduced form's coefficient at v_n to exactly p_n(j): at each level
// give v_k as many chips as the longest run of consecutive entries of
// p_k ending at position j, then recurse on what is left of j.
Divisor equality_witness(const LatticePath& path, int n, int j) {
    Divisor E;
    int k = n;
    while (k > 0) {
        const std::vector<long long>& p = path.points[static_cast<std::size_t>(k)];
        int run = 0;
        while (run < j &&
               p[static_cast<std::size_t>(j - run - 1)] == p[static_cast<std::size_t>(j - run)] + 1)
            ++run;
        E.add(Point::vertex(k), run);
        j -= run;
        --k;
    }
    E.add(Point::vertex(0), j);
    return E;
}

} // namespace

Divisor noether_witness(const ChainGraph& graph, const Divisor& D, int r) {
    require_generic(graph);
    if (r < 1)
        throw DomainError("witness construction requires r >= 1");
    validate_on(graph, D);
    const long long deg = D.degree();
    if (deg < 0 || deg > 2LL * graph.genus() - 2)
        throw DomainError("witness construction requires 0 <= degree <= 2g-2");

    Divisor R = reduce(graph, D, 0);
    LatticePath path = build_path(graph, to_reduced_data(graph, R), r);

    int n = -1;
    for (std::size_t i = 0; i < path.points.size(); ++i)
        if (!in_chamber(path.points[i])) {
            n = static_cast<int>(i);
            break;
        }
    if (n < 0)
        throw DomainError("divisor has rank at least " + std::to_string(r) +
                          "; no witness exists");

    Divisor E = equality_witness(path, n, r - 1);
    E.add(Point::vertex(n), 1);

    detail::internal_check(E.is_effective() && E.degree() == r, "witness is not effective of degree r");
    detail::internal_check(reduce(graph, D - E, 0).coefficient(Point::vertex(0)) < 0,
                           "witness certificate failed verification");
    return E;
}

std::optional<Divisor> brill_response(const ChainGraph& graph, const Divisor& D,
                                      const Divisor& E) {
    validate_on(graph, D);
    validate_on(graph, E);
    if (!E.is_effective())
        throw DomainError("the challenge divisor E must be effective");
    Divisor R = reduce(graph, D - E, 0);
    if (R.is_effective())
        return R;
    return std::nullopt;
}

} // namespace chainloops
