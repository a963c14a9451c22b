#include "chainloops/chain_graph.hpp"

#include <ostream>
#include <utility>

namespace chainloops {

Point Point::vertex(int n) {
    if (n < 0)
        throw DomainError("vertex index must be nonnegative");
    Point p;
    p.vertex_ = n;
    return p;
}

Point Point::interior(int loop, Rational pos) {
    if (loop < 1)
        throw DomainError("loop index must be positive");
    if (pos.sign() <= 0)
        throw DomainError("interior point position must be positive");
    Point p;
    p.loop_ = loop;
    p.pos_ = std::move(pos);
    return p;
}

int Point::vertex_index() const {
    if (!is_vertex())
        throw DomainError("not a vertex");
    return vertex_;
}

int Point::loop() const {
    if (is_vertex())
        throw DomainError("not an interior point");
    return loop_;
}

const Rational& Point::position() const {
    if (is_vertex())
        throw DomainError("not an interior point");
    return pos_;
}

namespace {

// Major key placing v_n between the interiors of loops n and n + 1:
// vertex v_n -> 2n, interior of loop i -> 2i - 1.
int order_major(const Point& p) {
    return p.is_vertex() ? 2 * p.vertex_index() : 2 * p.loop() - 1;
}

} // namespace

std::strong_ordering Point::operator<=>(const Point& rhs) const {
    int lhs_major = order_major(*this);
    int rhs_major = order_major(rhs);
    if (lhs_major != rhs_major)
        return lhs_major <=> rhs_major;
    if (is_vertex())
        return std::strong_ordering::equal;
    return pos_ <=> rhs.pos_;
}

bool Point::operator==(const Point& rhs) const {
    return (*this <=> rhs) == std::strong_ordering::equal;
}

std::string Point::str() const {
    if (is_vertex())
        return "v" + std::to_string(vertex_);
    return "(loop " + std::to_string(loop_) + ", " + pos_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const Point& point) {
    return os << point.str();
}

ChainGraph::ChainGraph(std::vector<LoopLengths> loops) : loops_(std::move(loops)) {
    if (loops_.size() < 2)
        throw DomainError("a chain of loops needs genus >= 2");
    for (const LoopLengths& loop : loops_)
        if (loop.ell.sign() <= 0 || loop.m.sign() <= 0)
            throw DomainError("loop edge lengths must be positive");
}

void ChainGraph::check_loop_index(int i) const {
    if (i < 1 || i > genus())
        throw DomainError("loop index " + std::to_string(i) + " out of range 1.." +
                          std::to_string(genus()));
}

const Rational& ChainGraph::ell(int i) const {
    check_loop_index(i);
    return loops_[static_cast<std::size_t>(i - 1)].ell;
}

const Rational& ChainGraph::m(int i) const {
    check_loop_index(i);
    return loops_[static_cast<std::size_t>(i - 1)].m;
}

Rational ChainGraph::loop_length(int i) const {
    check_loop_index(i);
    const LoopLengths& loop = loops_[static_cast<std::size_t>(i - 1)];
    return loop.ell + loop.m;
}

Point ChainGraph::point_on_loop(int i, const Rational& pos) const {
    check_loop_index(i);
    Rational reduced = pos.mod(loop_length(i));
    if (reduced.is_zero())
        return Point::vertex(i - 1);
    if (reduced == m(i))
        return Point::vertex(i);
    return Point::interior(i, std::move(reduced));
}

Rational ChainGraph::coordinate_on_loop(const Point& point, int i) const {
    check_loop_index(i);
    if (point.is_vertex()) {
        int n = point.vertex_index();
        if (n == i - 1)
            return Rational(0);
        if (n == i)
            return m(i);
        throw DomainError("point " + point.str() + " does not lie on loop " + std::to_string(i));
    }
    if (point.loop() != i)
        throw DomainError("point " + point.str() + " does not lie on loop " + std::to_string(i));
    return point.position();
}

bool is_generic(const ChainGraph& graph) {
    // ell_i / m_i = p / q in lowest terms must satisfy p + q > 2g - 2.
    Integer bound = 2 * graph.genus() - 2;
    for (int i = 1; i <= graph.genus(); ++i) {
        Rational ratio = graph.ell(i) / graph.m(i);
        if (ratio.numerator() + ratio.denominator() <= bound)
            return false;
    }
    return true;
}

void require_generic(const ChainGraph& graph) {
    if (!is_generic(graph))
        throw NonGenericError("chain is not generic: some ell_i/m_i = p/q in lowest terms "
                              "has p + q <= 2g - 2");
}

ChainGraph make_standard_generic(int g) {
    if (g < 2)
        throw DomainError("genus must be at least 2");
    std::vector<LoopLengths> loops(static_cast<std::size_t>(g),
                                   LoopLengths{Rational(2 * g - 2), Rational(1)});
    return ChainGraph(std::move(loops));
}

Rational vertex_position_on_loop(const ChainGraph& graph, int n, int i) {
    if (i < 1 || i > graph.genus())
        throw DomainError("loop index out of range");
    if (n < 0 || n > graph.genus())
        throw DomainError("vertex index out of range");
    return n <= i - 1 ? Rational(0) : graph.m(i);
}

} // namespace chainloops
