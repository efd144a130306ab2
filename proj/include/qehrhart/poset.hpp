#pragma once

#include <utility>
#include <vector>

#include "qehrhart/polytope.hpp"
#include "qehrhart/series.hpp"
#include "qehrhart/xpoly.hpp"

namespace qe {

/// Finite partial order on {0..n-1}, stored as the reflexive-transitive
/// closure of its cover relations.
class Poset {
  public:
    /// Builds the closure of the given relations i < j; rejects cycles.
    static Poset from_covers(int n, const std::vector<std::pair<int, int>>& covers);

    static Poset chain(int n);
    static Poset antichain(int n);
    /// Product of two chains A_m x A_n (componentwise order).
    static Poset chain_product(int m, int n);

    int size() const { return n_; }
    bool leq(int i, int j) const { return leq_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    bool less(int i, int j) const { return i != j && leq(i, j); }

    /// Cover pairs (i, j): i < j with nothing in between.
    std::vector<std::pair<int, int>> covers() const;
    std::vector<int> minimal_elements() const;
    std::vector<int> maximal_elements() const;

    /// Elements in topological order, smallest index first among the
    /// available minima.
    std::vector<int> topological_order() const;

    /// All linear extensions, each a sequence of elements, in
    /// lexicographic order of the chosen elements.
    std::vector<std::vector<int>> linear_extensions() const;

  private:
    int n_ = 0;
    std::vector<std::vector<bool>> leq_;
};

enum class PosetDerivation { Opposite, AddMin, AddMax };

/// Opposite reverses the order; AddMin/AddMax adjoin a global minimum or
/// maximum (as element index size()).
Poset derive_poset(const Poset& p, PosetDerivation kind);

/// The order polytope {0 <= z <= 1, z_x <= z_y for x <= y} with the
/// sum-of-coordinates form; vertices are the indicator vectors of
/// up-closed subsets, facets come from minimal/maximal elements and cover
/// relations.
std::pair<LatticePolytope, LinearForm> order_polytope(const Poset& p);

/// Weighted sum over order-preserving colourings: weak colourings by
/// {0..n} with weight q^{sum}, matching the lattice points of n Q_P;
/// strict colourings by {1..n-1} with weight q^{-sum}, matching
/// (-1)^{#P} L_P([-n]_q) by reciprocity.
QRat colouring_sum(const Poset& p, int n, bool strict);

/// q-Ehrhart series of the order polytope as sum over linear extensions of
/// q^{maj} t^{des} over the denominator exponents {0..#P}; the numerator
/// has nonnegative integer coefficients.
SeriesTQ descent_numerator(const Poset& p);

/// q-Ehrhart polynomial of the order polytope, recovered from the descent
/// numerator by partial fractions (scales past the range where direct
/// lattice-point interpolation is feasible).
XPoly poset_polynomial(const Poset& p);

/// Leading coefficient of the q-Ehrhart polynomial times [#P]!_q.
QRat q_volume(const Poset& p);

/// Product formula for the q-Ehrhart polynomial of the chain product
/// A_m x A_n.
XPoly macmahon_polynomial(int m, int n);

/// Maximum cardinality of a chain.
int longest_chain(const Poset& p);

}  // namespace qe
