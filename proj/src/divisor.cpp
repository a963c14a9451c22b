#include "chainloops/divisor.hpp"

#include <ostream>
#include <sstream>
#include <utility>

namespace chainloops {

Divisor Divisor::at(const Point& point, long long coeff) {
    Divisor D;
    D.add(point, coeff);
    return D;
}

long long Divisor::coefficient(const Point& point) const {
    auto it = entries_.find(point);
    return it == entries_.end() ? 0 : it->second;
}

void Divisor::add(const Point& point, long long coeff) {
    if (coeff == 0)
        return;
    auto [it, inserted] = entries_.try_emplace(point, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            entries_.erase(it);
    }
}

long long Divisor::degree() const {
    long long total = 0;
    for (const auto& [point, coeff] : entries_)
        total += coeff;
    return total;
}

bool Divisor::is_effective() const {
    for (const auto& [point, coeff] : entries_)
        if (coeff < 0)
            return false;
    return true;
}

Divisor Divisor::operator-() const {
    Divisor result;
    for (const auto& [point, coeff] : entries_)
        result.entries_.emplace(point, -coeff);
    return result;
}

Divisor& Divisor::operator+=(const Divisor& rhs) {
    for (const auto& [point, coeff] : rhs.entries_)
        add(point, coeff);
    return *this;
}

Divisor& Divisor::operator-=(const Divisor& rhs) {
    for (const auto& [point, coeff] : rhs.entries_)
        add(point, -coeff);
    return *this;
}

std::string Divisor::str() const {
    if (entries_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [point, coeff] : entries_) {
        if (first) {
            if (coeff < 0)
                os << "-";
            first = false;
        } else {
            os << (coeff < 0 ? " - " : " + ");
        }
        long long magnitude = coeff < 0 ? -coeff : coeff;
        if (magnitude != 1)
            os << magnitude << "*";
        os << point.str();
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Divisor& divisor) {
    return os << divisor.str();
}

void validate_on(const ChainGraph& graph, const Divisor& D) {
    for (const auto& [point, coeff] : D.entries()) {
        if (point.is_vertex()) {
            if (point.vertex_index() > graph.genus())
                throw DomainError("divisor mentions vertex v" +
                                  std::to_string(point.vertex_index()) + " beyond v" +
                                  std::to_string(graph.genus()));
            continue;
        }
        int i = point.loop();
        if (i > graph.genus())
            throw DomainError("divisor mentions loop " + std::to_string(i) + " beyond genus " +
                              std::to_string(graph.genus()));
        const Rational& pos = point.position();
        if (pos >= graph.loop_length(i) || pos == graph.m(i))
            throw DomainError("divisor point " + point.str() + " is not canonical on loop " +
                              std::to_string(i) + " (position must lie in (0, " +
                              graph.loop_length(i).str() + ") and differ from m = " +
                              graph.m(i).str() + ")");
    }
}

Divisor canonical_divisor(const ChainGraph& graph) {
    Divisor K;
    for (int k = 1; k < graph.genus(); ++k)
        K.add(Point::vertex(k), 2);
    return K;
}

namespace {

bool on_closed_loop(const Point& point, int i) {
    if (point.is_vertex())
        return point.vertex_index() == i - 1 || point.vertex_index() == i;
    return point.loop() == i;
}

} // namespace

Rational loop_mu(const ChainGraph& graph, const Divisor& D, int i) {
    validate_on(graph, D);
    Rational total(0);
    for (const auto& [point, coeff] : D.entries()) {
        if (!on_closed_loop(point, i))
            throw DomainError("loop_mu: point " + point.str() + " is not on closed loop " +
                              std::to_string(i));
        total += Rational(coeff) * graph.coordinate_on_loop(point, i);
    }
    return total.mod(graph.loop_length(i));
}

namespace {

// Replaces the chips on closed loop i, except those at the exit vertex,
// by the equivalent configuration with as much as possible at the exit
// vertex: delta chips there when the rotation invariant allows it, else
// delta - 1 chips plus one leftover point. The leftover point never lands
// on the exit vertex, so it belongs to the cell kept by this sweep step.
void sweep_loop(const ChainGraph& graph, Divisor& work, int i, bool exit_left) {
    const Point exit = Point::vertex(exit_left ? i - 1 : i);
    std::vector<std::pair<Point, long long>> gathered;
    for (const auto& [point, coeff] : work.entries())
        if (on_closed_loop(point, i) && !(point == exit))
            gathered.emplace_back(point, coeff);
    if (gathered.empty())
        return;

    const Rational L = graph.loop_length(i);
    long long delta = 0;
    Rational mu(0);
    for (const auto& [point, coeff] : gathered) {
        delta += coeff;
        mu += Rational(coeff) * graph.coordinate_on_loop(point, i);
        work.add(point, -coeff);
    }
    mu = mu.mod(L);

    const Rational beta = exit_left ? Rational(0) : graph.m(i);
    if (mu == (Rational(delta) * beta).mod(L)) {
        work.add(exit, delta);
        return;
    }
    Rational leftover = (mu - Rational(delta - 1) * beta).mod(L);
    Point w = graph.point_on_loop(i, leftover);
    detail::internal_check(!(w == exit), "loop sweep produced a point on the exit vertex");
    work.add(exit, delta - 1);
    work.add(w, 1);
}

// Cell of the basepoint-n decomposition containing a point other than
// v_n itself: gamma'_i = {v_{i-1}} + interior(i) for i <= n, indexed -i;
// gamma_j = interior(j) + {v_j} for j > n, indexed +j.
int cell_index(const Point& point, int n) {
    if (point.is_vertex()) {
        int k = point.vertex_index();
        detail::internal_check(k != n, "basepoint has no cell");
        return k < n ? -(k + 1) : k;
    }
    return point.loop() <= n ? -point.loop() : point.loop();
}

} // namespace

Divisor reduce(const ChainGraph& graph, const Divisor& D, int n) {
    if (n < 0 || n > graph.genus())
        throw DomainError("basepoint index " + std::to_string(n) + " out of range 0.." +
                          std::to_string(graph.genus()));
    validate_on(graph, D);

    Divisor work = D;
    // Everything right of the basepoint drains leftward, loop by loop;
    // everything left of it drains rightward. Each step leaves at most
    // one chip on the cell it owns and hands the rest to the next loop,
    // so slack of either sign ends up at v_n.
    for (int j = graph.genus(); j > n; --j)
        sweep_loop(graph, work, j, /*exit_left=*/true);
    for (int i = 1; i <= n; ++i)
        sweep_loop(graph, work, i, /*exit_left=*/false);

    detail::internal_check(work.degree() == D.degree(), "reduction changed the degree");
    detail::internal_check(is_reduced(graph, work, n), "reduction output is not reduced");
    return work;
}

bool is_reduced(const ChainGraph& graph, const Divisor& D, int n) {
    if (n < 0 || n > graph.genus())
        throw DomainError("basepoint index out of range");
    validate_on(graph, D);
    std::map<int, int> cell_count;
    for (const auto& [point, coeff] : D.entries()) {
        if (point.is_vertex() && point.vertex_index() == n)
            continue;
        if (coeff != 1)
            return false;
        if (++cell_count[cell_index(point, n)] > 1)
            return false;
    }
    return true;
}

bool equivalent(const ChainGraph& graph, const Divisor& D, const Divisor& E) {
    return reduce(graph, D, 0) == reduce(graph, E, 0);
}

ReducedData to_reduced_data(const ChainGraph& graph, const Divisor& D) {
    if (!is_reduced(graph, D, 0))
        throw DomainError("divisor is not v0-reduced; reduce it first");
    ReducedData data;
    data.d0 = D.coefficient(Point::vertex(0));
    data.x.assign(static_cast<std::size_t>(graph.genus()), Rational(0));
    for (const auto& [point, coeff] : D.entries()) {
        if (point.is_vertex()) {
            int k = point.vertex_index();
            if (k == 0)
                continue;
            data.x[static_cast<std::size_t>(k - 1)] = graph.m(k); // v_k sits on cell gamma_k
        } else {
            data.x[static_cast<std::size_t>(point.loop() - 1)] = point.position();
        }
    }
    return data;
}

Divisor from_reduced_data(const ChainGraph& graph, const ReducedData& data) {
    if (static_cast<int>(data.x.size()) != graph.genus())
        throw DomainError("reduced data has " + std::to_string(data.x.size()) +
                          " cell coordinates; expected g = " + std::to_string(graph.genus()));
    Divisor D = Divisor::at(Point::vertex(0), data.d0);
    for (int i = 1; i <= graph.genus(); ++i) {
        const Rational& x = data.x[static_cast<std::size_t>(i - 1)];
        if (x.is_zero())
            continue;
        if (x.sign() < 0 || x >= graph.loop_length(i))
            throw DomainError("cell coordinate x_" + std::to_string(i) + " = " + x.str() +
                              " out of range [0, " + graph.loop_length(i).str() + ")");
        D.add(graph.point_on_loop(i, x), 1);
    }
    detail::internal_check(is_reduced(graph, D, 0), "decoded divisor is not v0-reduced");
    return D;
}

} // namespace chainloops
