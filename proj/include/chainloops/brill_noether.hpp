#pragma once

#include <optional>
#include <vector>

#include "chainloops/lattice_path.hpp"

namespace chainloops {

/// Standard Young tableau on a full rows x cols rectangle: the entries
/// are a permutation of 1..rows*cols, strictly increasing along each row
/// and down each column. When a tableau encodes a lattice path, columns
/// are indexed 0..cols-1 and column j < cols-1 means "step up in
/// direction j" while the last column means "step down".
class Tableau {
public:
    explicit Tableau(std::vector<std::vector<int>> cells);

    int rows() const { return static_cast<int>(cells_.size()); }
    int cols() const { return cells_.empty() ? 0 : static_cast<int>(cells_.front().size()); }
    int at(int row, int col) const;
    const std::vector<std::vector<int>>& cells() const { return cells_; }

    bool operator==(const Tableau& rhs) const = default;

private:
    std::vector<std::vector<int>> cells_;
};

/// Number of degree-d rank-r divisor classes on a generic genus-g chain
/// when rho = 0:  lambda = g! * prod_{i=0}^{r} i! / (g-d+r+i)! , always an
/// integer; it also counts standard tableaux on the (g-d+r) x (r+1)
/// rectangle. Exact big-integer arithmetic throughout.
Integer lambda(const BNParams& params);

/// At rho = 0, turns a standard (g-d+r) x (r+1) tableau into the lattice
/// path from (r, r-1, ..., 1) back to itself: entry i in column j < r is
/// step i = up(j), entry i in column r is step i = down. The result stays
/// in the open chamber.
LatticePath tableau_to_path(const BNParams& params, const Tableau& t);

/// Inverse of tableau_to_path; rejects paths with lingering steps or the
/// wrong endpoints.
Tableau path_to_tableau(const BNParams& params, const LatticePath& path);

/// The unique v_0-reduced divisor whose lattice path is P: d_0 = p_0(0),
/// empty cell for each down step, and the distinguished coordinate
/// (p_{i-1}(j)+1)*m_i mod L_i for each up(j) step. Rejects lingering
/// steps (their cell coordinate is a free parameter, not determined).
Divisor path_to_divisor(const ChainGraph& graph, const LatticePath& path);

/// All standard tableaux on the rows x cols rectangle, deterministically
/// ordered (lexicographic in the column word read from entry 1 upward).
std::vector<Tableau> enumerate_tableaux(int rows, int cols);

/// The v_0-reduced representatives of all degree-d rank-r classes at
/// rho = 0, in enumerate_tableaux order; there are exactly
/// lambda(params) of them and they are pairwise inequivalent.
std::vector<Divisor> enumerate_classes(const ChainGraph& graph, const BNParams& params);

/// For a divisor of rank < r, an effective degree-r divisor E supported
/// on the vertices such that D - E is not equivalent to any effective
/// divisor. Built from the lattice path at the first step n leaving the
/// chamber: recursively pick the largest run of consecutive entries in
/// p_k to decide how many chips v_k receives, then add one final chip at
/// v_n. The certificate is verified before it is returned. Errors when D
/// actually has rank >= r.
Divisor noether_witness(const ChainGraph& graph, const Divisor& D, int r);

/// One round of the chip game: reduce D - E at v_0 and return the result
/// when it is effective; empty means no effective divisor is equivalent
/// to D - E. Requires E effective.
std::optional<Divisor> brill_response(const ChainGraph& graph, const Divisor& D,
                                      const Divisor& E);

} // namespace chainloops
