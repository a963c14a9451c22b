#pragma once

#include <map>
#include <string>
#include <vector>

#include "chainloops/chain_graph.hpp"

namespace chainloops {

/// Finite formal integer combination of points. Entries with coefficient
/// zero are never stored, so operator== is equality of divisors.
class Divisor {
public:
    Divisor() = default;

    static Divisor at(const Point& point, long long coeff = 1);

    long long coefficient(const Point& point) const;
    void add(const Point& point, long long coeff);

    long long degree() const;
    bool is_zero() const { return entries_.empty(); }
    bool is_effective() const;

    const std::map<Point, long long>& entries() const { return entries_; }

    Divisor operator-() const;
    Divisor& operator+=(const Divisor& rhs);
    Divisor& operator-=(const Divisor& rhs);
    friend Divisor operator+(Divisor lhs, const Divisor& rhs) { return lhs += rhs; }
    friend Divisor operator-(Divisor lhs, const Divisor& rhs) { return lhs -= rhs; }

    bool operator==(const Divisor& rhs) const = default;

    std::string str() const;

private:
    std::map<Point, long long> entries_;
};

std::ostream& operator<<(std::ostream& os, const Divisor& divisor);

inline long long degree(const Divisor& D) { return D.degree(); }
inline bool is_effective(const Divisor& D) { return D.is_effective(); }

/// Throws DomainError unless every point of D is a valid canonical point
/// of the graph (loop indices in range, vertex indices 0..g, interior
/// positions in (0, L_i) and distinct from m_i).
void validate_on(const ChainGraph& graph, const Divisor& D);

/// K = sum over vertices of (valence - 2): the g - 1 interior vertices
/// have valence 4, the two end vertices valence 2, so K = 2(v_1 + ... +
/// v_{g-1}) of degree 2g - 2.
Divisor canonical_divisor(const ChainGraph& graph);

/// Rotation invariant of a divisor supported on the closed loop i: the
/// weighted coordinate sum  sum_w D(w) * pos_i(w)  mod L_i, in [0, L_i).
/// Two divisors supported on loop i are equivalent by moves inside the
/// loop exactly when their degrees and these residues agree.
Rational loop_mu(const ChainGraph& graph, const Divisor& D, int i);

/// The unique v_n-reduced divisor equivalent to D: effective away from
/// v_n, with at most one point, of coefficient 1, on each cell of the
/// decomposition away from v_n (cells gamma'_i = loop i minus v_i for
/// i <= n, gamma_j = loop j minus v_{j-1} for j > n). Works for arbitrary
/// integer coefficients; any deficit accumulates at v_n.
Divisor reduce(const ChainGraph& graph, const Divisor& D, int n);

/// Whether D is already in v_n-reduced form.
bool is_reduced(const ChainGraph& graph, const Divisor& D, int n);

/// Linear equivalence, decided by comparing v_0-reduced forms.
bool equivalent(const ChainGraph& graph, const Divisor& D, const Divisor& E);

/// Coordinates of a v_0-reduced divisor: d0 chips at v_0 and, for each i
/// with x[i-1] != 0, a single chip on cell gamma_i at counterclockwise
/// distance x[i-1] from v_{i-1}. x[i-1] = 0 encodes an empty cell.
struct ReducedData {
    long long d0 = 0;
    std::vector<Rational> x;
};

/// Requires D to be v_0-reduced; use reduce(graph, D, 0) first otherwise.
ReducedData to_reduced_data(const ChainGraph& graph, const Divisor& D);

Divisor from_reduced_data(const ChainGraph& graph, const ReducedData& data);

} // namespace chainloops
