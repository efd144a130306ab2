#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qehrhart/qrat.hpp"

namespace qe {

using Coord = long;
using Point = std::vector<Coord>;

/// Integer linear form on the ambient lattice.
struct LinearForm {
    std::vector<Coord> coefficients;

    int dim() const { return static_cast<int>(coefficients.size()); }
    Coord apply(const Point& p) const;
};

/// Inequality normal . x <= offset, valid on the polytope, supporting a
/// facet of it.
struct Facet {
    Point normal;
    Coord offset;
};

/// Equation normal . x = offset cutting out the affine hull.
struct HullEquation {
    Point normal;
    Coord offset;
};

/// Lattice polytope given by its vertices, with derived facets, affine-hull
/// equations, edges and affine dimension. Immutable after construction.
class LatticePolytope {
  public:
    /// Convex hull of the given integer points. Duplicate and non-extreme
    /// points are stripped and reported through stripped_points().
    static LatticePolytope from_points(int dim, std::vector<Point> points);

    /// Trusted construction from precomputed data (used by the geometric
    /// constructions that derive facets exactly from an existing polytope).
    static LatticePolytope from_derived(int dim, std::vector<Point> vertices, std::vector<Facet> facets,
                                        std::vector<HullEquation> equations,
                                        std::vector<std::pair<int, int>> edges);
    /// Same, with the edges recovered from the facet incidence ranks.
    static LatticePolytope from_derived(int dim, std::vector<Point> vertices, std::vector<Facet> facets,
                                        std::vector<HullEquation> equations);

    int ambient_dim() const { return dim_; }
    int affine_dim() const { return affine_dim_; }
    const std::vector<Point>& vertices() const { return vertices_; }
    const std::vector<Facet>& facets() const { return facets_; }
    const std::vector<HullEquation>& hull_equations() const { return equations_; }
    /// Vertex-index pairs (i < j).
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    /// Input points dropped by from_points (duplicates or non-extreme).
    const std::vector<Point>& stripped_points() const { return stripped_; }

  private:
    int dim_ = 0;
    int affine_dim_ = 0;
    std::vector<Point> vertices_;
    std::vector<Facet> facets_;
    std::vector<HullEquation> equations_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<Point> stripped_;
};

struct Violation {
    enum class Kind { Positivity, Genericity };
    Kind kind;
    std::string message;
};

std::string render_point(const Point& p);

/// Positivity: lambda >= 0 on every vertex. Genericity: lambda separates
/// the endpoints of every edge. Violations are data, not faults.
std::vector<Violation> validate_pair(const LatticePolytope& q, const LinearForm& lambda);
/// Throws ValidationError with the first violation's message.
void require_valid(const LatticePolytope& q, const LinearForm& lambda);

std::pair<Coord, Coord> lambda_range(const LatticePolytope& q, const LinearForm& lambda);

enum class Region { Closed, Interior };

/// Integer points of the dilate n Q: the closed region a.x <= n b, or its
/// relative interior (strict inequalities within the affine hull).
std::vector<Point> lattice_points(const LatticePolytope& q, int n, Region region);

/// Sum of q^{lambda(x)} over the points (q^{-lambda(x)} when inverse_q).
QRat weighted_sum(const std::vector<Point>& points, const LinearForm& lambda, bool inverse_q = false);

/// Translate by v; requires lambda(v) >= 0 so Positivity is preserved.
LatticePolytope translate(const LatticePolytope& q, const LinearForm& lambda, const Point& v);

/// The reversal v_max - Q, where v_max is the unique lambda-maximal vertex.
LatticePolytope reverse(const LatticePolytope& q, const LinearForm& lambda);

/// Pyramid with apex (1, 0) over (0, Q), with form (k, v) -> k m + lambda(v).
/// Requires m >= 0 strictly outside [min lambda, max lambda].
std::pair<LatticePolytope, LinearForm> pyramid(const LatticePolytope& q, const LinearForm& lambda, Coord m);

/// Convex hull of (0, 0) and {1} x Q, with form (k, v) -> k + lambda(v).
std::pair<LatticePolytope, LinearForm> bplus(const LatticePolytope& q, const LinearForm& lambda);

/// True iff Q has no lattice point in its relative interior.
bool is_empty(const LatticePolytope& q);

}  // namespace qe
