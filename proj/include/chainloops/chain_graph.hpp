#pragma once

#include <compare>
#include <string>
#include <vector>

#include "chainloops/rational.hpp"

namespace chainloops {

/// A point of a chain of loops: either a vertex v_n (0 <= n <= g) or a
/// point in the interior of one of the two edges of loop i, identified by
/// its counterclockwise distance `pos` from v_{i-1}. The vertices of loop i
/// sit at pos = 0 (v_{i-1}) and pos = m_i (v_i), so interior points always
/// have 0 < pos < m_i or m_i < pos < m_i + ell_i. Use
/// ChainGraph::point_on_loop to build points in canonical form.
class Point {
public:
    static Point vertex(int n);
    static Point interior(int loop, Rational pos);

    bool is_vertex() const { return vertex_ >= 0; }
    int vertex_index() const;
    int loop() const;
    const Rational& position() const;

    /// Points are ordered left to right along the chain:
    /// v_0 < (interior of loop 1) < v_1 < (interior of loop 2) < ...
    /// Interior points of one loop are ordered by position; this is a
    /// bookkeeping order for containers, not a metric statement.
    std::strong_ordering operator<=>(const Point& rhs) const;
    bool operator==(const Point& rhs) const;

    std::string str() const;

private:
    Point() = default;

    int vertex_ = -1; // >= 0 exactly for vertices
    int loop_ = 0;    // >= 1 exactly for interior points
    Rational pos_;
};

std::ostream& operator<<(std::ostream& os, const Point& point);

/// Edge lengths of one loop: `ell` on top, `m` on the bottom arc that
/// carries the two vertices.
struct LoopLengths {
    Rational ell;
    Rational m;
};

/// A chain of g loops. Loop i (1-based) joins v_{i-1} to v_i; its two
/// vertices split it into a bottom edge of length m_i and a top edge of
/// length ell_i. Total loop length is L_i = ell_i + m_i, and points on the
/// loop are parametrized counterclockwise from v_{i-1}, so v_i is at m_i.
class ChainGraph {
public:
    /// Requires at least two loops and positive edge lengths.
    explicit ChainGraph(std::vector<LoopLengths> loops);

    int genus() const { return static_cast<int>(loops_.size()); }
    const Rational& ell(int i) const;
    const Rational& m(int i) const;
    Rational loop_length(int i) const;

    /// Canonical point at counterclockwise distance `pos` from v_{i-1} on
    /// loop i. `pos` may be any rational; it is reduced mod the loop
    /// length, and positions 0 and m_i collapse to the vertices.
    Point point_on_loop(int i, const Rational& pos) const;

    /// Counterclockwise coordinate of `point` on the closed loop i.
    /// Defined for v_{i-1} (0), v_i (m_i) and interior points of loop i.
    Rational coordinate_on_loop(const Point& point, int i) const;

private:
    void check_loop_index(int i) const;

    std::vector<LoopLengths> loops_;
};

/// A chain is generic when, for every loop, writing ell_i / m_i = p / q in
/// lowest terms gives p + q > 2g - 2. Loops with irrational ratio cannot
/// occur here since all lengths are rational.
bool is_generic(const ChainGraph& graph);

/// Throws NonGenericError when the chain is not generic.
void require_generic(const ChainGraph& graph);

/// The genus-g chain with ell_i = 2g - 2 and m_i = 1 on every loop.
ChainGraph make_standard_generic(int g);

/// Counterclockwise distance from v_{i-1} to vertex v_n measured around
/// loop i: 0 for n <= i - 1 and m_i for n >= i (folding the rest of the
/// chain onto the nearer vertex of the loop).
Rational vertex_position_on_loop(const ChainGraph& graph, int n, int i);

} // namespace chainloops
