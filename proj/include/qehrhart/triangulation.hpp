#pragma once

#include <vector>

#include "qehrhart/polytope.hpp"
#include "qehrhart/series.hpp"

namespace qe {

/// Face of a triangulation: sorted indices into the polytope's vertex list.
struct Simplex {
    std::vector<int> vertex_indices;

    bool operator==(const Simplex& other) const = default;
    auto operator<=>(const Simplex& other) const = default;
};

struct Triangulation {
    std::vector<Simplex> maximal_simplices;
    /// Every nonempty face of every maximal simplex, each listed once,
    /// sorted.
    std::vector<Simplex> all_faces;
};

/// The unique triangulation using only vertices of Q in which every simplex
/// contained in a face F of Q contains the lambda-minimal vertex of F,
/// built by recursive pulling from the minimal vertex.
Triangulation lambda_triangulation(const LatticePolytope& q, const LinearForm& lambda);

enum class ParallelepipedMode { Lower, Upper };

/// Integer points of {sum t_i w_i} with w_i = (1, v_i) over the simplex
/// vertices v_i, for 0 <= t_i < 1 (Lower) or 0 < t_i <= 1 (Upper); the
/// coordinates t_i are solved exactly in the span of the generators.
std::vector<Point> parallelepiped_points(const std::vector<Point>& simplex_vertices, ParallelepipedMode mode);

/// q-Ehrhart series of a lattice simplex from its fundamental
/// parallelepiped: one denominator factor per vertex lambda-value. The
/// relative-interior series counts open dilates, so its t^0 coefficient
/// is 0.
SeriesTQ simplex_series(const std::vector<Point>& simplex_vertices, const LinearForm& lambda, Region region);

/// Geometric route to the q-Ehrhart series: the open-simplex series of all
/// faces of the lambda-triangulation partition every dilate, plus the
/// origin-only dilate at n = 0.
SeriesTQ series_via_triangulation(const LatticePolytope& q, const LinearForm& lambda);

}  // namespace qe
