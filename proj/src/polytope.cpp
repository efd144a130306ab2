#include "qehrhart/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "linalg.hpp"
#include "qehrhart/errors.hpp"

namespace qe {

Coord LinearForm::apply(const Point& p) const {
    Coord acc = 0;
    for (size_t i = 0; i < coefficients.size(); ++i) acc += coefficients[i] * p[i];
    return acc;
}

std::string render_point(const Point& p) {
    std::string out = "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(p[i]);
    }
    return out + ")";
}

namespace {

Coord dot(const Point& a, const Point& b) {
    Coord acc = 0;
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

linalg::Vec to_vec(const Point& p) { return linalg::Vec(p.begin(), p.end()); }

Point to_point(const linalg::Vec& v) {
    Point p(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (!v[i].fits_slong_p()) throw InternalError("coordinate overflow in exact geometry");
        p[i] = v[i].get_si();
    }
    return p;
}

linalg::Mat difference_matrix(const std::vector<Point>& points, const Point& base) {
    linalg::Mat m;
    m.reserve(points.size());
    for (const auto& p : points) {
        linalg::Vec row(p.size());
        for (size_t i = 0; i < p.size(); ++i) row[i] = mpz_class(p[i]) - base[i];
        m.push_back(std::move(row));
    }
    return m;
}

// Enumerate k-element subsets of {0..n-1}.
template <typename F>
void for_each_subset(int n, int k, F&& callback) {
    if (k > n || k < 0) return;
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        callback(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

struct FacetCandidate {
    Facet facet;
    std::vector<int> contact;  // sorted point indices on the hyperplane
};

// All (relative) facets of the hull of `points`, found by exhaustive search
// over hyperplanes spanned by affinely independent subsets of size k =
// affine dimension, deduplicated by contact set.
std::vector<FacetCandidate> search_facets(const std::vector<Point>& points, int affine_dim) {
    std::vector<FacetCandidate> out;
    if (affine_dim == 0) return out;
    int n = static_cast<int>(points.size());
    size_t dim = points[0].size();
    std::set<std::vector<int>> seen;
    for_each_subset(n, affine_dim, [&](const std::vector<int>& idx) {
        std::vector<Point> subset;
        subset.reserve(idx.size());
        for (int i : idx) subset.push_back(points[static_cast<size_t>(i)]);
        linalg::Mat diffs = difference_matrix(
            std::vector<Point>(subset.begin() + 1, subset.end()), subset[0]);
        auto normals = linalg::nullspace(diffs, dim);
        if (static_cast<int>(normals.size()) != static_cast<int>(dim) - affine_dim + 1)
            return;  // subset not affinely independent
        // Any normal not constant on the whole point set represents the
        // hyperplane within the affine hull; all choices agree up to sign.
        for (const auto& nv : normals) {
            Point normal = to_point(nv);
            Coord offset = dot(normal, subset[0]);
            bool has_pos = false, has_neg = false;
            std::vector<int> contact;
            for (int i = 0; i < n; ++i) {
                Coord v = dot(normal, points[static_cast<size_t>(i)]) - offset;
                if (v > 0) has_pos = true;
                else if (v < 0) has_neg = true;
                else contact.push_back(i);
            }
            if (has_pos && has_neg) return;   // subset spans no supporting hyperplane
            if (!has_pos && !has_neg) continue;  // normal constant on the hull; try next
            if (has_pos) {
                for (auto& c : normal) c = -c;
                offset = -offset;
            }
            if (seen.insert(contact).second)
                out.push_back({Facet{std::move(normal), offset}, std::move(contact)});
            return;
        }
    });
    return out;
}

std::vector<std::pair<int, int>> edges_by_rank(const std::vector<Point>& vertices,
                                               const std::vector<FacetCandidate>& facets,
                                               const std::vector<HullEquation>& equations, size_t dim) {
    // {u, v} is an edge iff the normals of the facets containing both,
    // together with the hull equations, span a space of rank dim - 1.
    std::vector<std::pair<int, int>> edges;
    int n = static_cast<int>(vertices.size());
    std::vector<std::vector<bool>> incident(facets.size(), std::vector<bool>(static_cast<size_t>(n), false));
    for (size_t f = 0; f < facets.size(); ++f)
        for (int i : facets[f].contact) incident[f][static_cast<size_t>(i)] = true;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            linalg::Mat m;
            for (const auto& eq : equations) m.push_back(to_vec(eq.normal));
            for (size_t f = 0; f < facets.size(); ++f)
                if (incident[f][static_cast<size_t>(u)] && incident[f][static_cast<size_t>(v)])
                    m.push_back(to_vec(facets[f].facet.normal));
            if (linalg::rank(std::move(m)) == static_cast<int>(dim) - 1) edges.emplace_back(u, v);
        }
    }
    return edges;
}

}  // namespace

LatticePolytope LatticePolytope::from_points(int dim, std::vector<Point> points) {
    if (dim < 0) throw PreconditionError("negative dimension");
    if (points.empty()) throw PreconditionError("empty vertex list");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != dim)
            throw PreconditionError("point dimension mismatch: expected " + std::to_string(dim) +
                                    ", got " + std::to_string(p.size()));
    LatticePolytope q;
    q.dim_ = dim;
    // Dedupe, keeping first-seen order.
    std::vector<Point> unique;
    std::set<Point> seen;
    for (auto& p : points) {
        if (seen.insert(p).second)
            unique.push_back(std::move(p));
        else
            q.stripped_.push_back(p);
    }
    // Affine hull.
    linalg::Mat diffs = difference_matrix(unique, unique[0]);
    q.affine_dim_ = linalg::rank(diffs);
    for (const auto& nv : linalg::nullspace(diffs, static_cast<size_t>(dim))) {
        Point normal = to_point(nv);
        Coord offset = dot(normal, unique[0]);
        q.equations_.push_back({std::move(normal), offset});
    }
    auto candidates = search_facets(unique, q.affine_dim_);
    // A point is extreme iff the facets through it, with the hull
    // equations, have full rank.
    std::vector<int> vertex_of(unique.size(), -1);
    for (size_t i = 0; i < unique.size(); ++i) {
        linalg::Mat m;
        for (const auto& eq : q.equations_) m.push_back(to_vec(eq.normal));
        for (const auto& c : candidates)
            if (std::binary_search(c.contact.begin(), c.contact.end(), static_cast<int>(i)))
                m.push_back(to_vec(c.facet.normal));
        if (q.affine_dim_ == 0 || linalg::rank(std::move(m)) == dim) {
            vertex_of[i] = static_cast<int>(q.vertices_.size());
            q.vertices_.push_back(unique[i]);
        } else {
            q.stripped_.push_back(unique[i]);
        }
    }
    // Re-express facet contact sets in vertex indices.
    std::vector<FacetCandidate> vertex_facets;
    vertex_facets.reserve(candidates.size());
    for (auto& c : candidates) {
        std::vector<int> contact;
        for (int i : c.contact)
            if (vertex_of[static_cast<size_t>(i)] >= 0) contact.push_back(vertex_of[static_cast<size_t>(i)]);
        vertex_facets.push_back({std::move(c.facet), std::move(contact)});
    }
    q.edges_ = edges_by_rank(q.vertices_, vertex_facets, q.equations_, static_cast<size_t>(dim));
    q.facets_.reserve(vertex_facets.size());
    for (auto& c : vertex_facets) q.facets_.push_back(std::move(c.facet));
    return q;
}

LatticePolytope LatticePolytope::from_derived(int dim, std::vector<Point> vertices, std::vector<Facet> facets,
                                              std::vector<HullEquation> equations,
                                              std::vector<std::pair<int, int>> edges) {
    LatticePolytope q;
    q.dim_ = dim;
    q.vertices_ = std::move(vertices);
    q.facets_ = std::move(facets);
    q.equations_ = std::move(equations);
    q.edges_ = std::move(edges);
    q.affine_dim_ = dim - static_cast<int>(q.equations_.size());
    for (const auto& v : q.vertices_) {
        for (const auto& f : q.facets_)
            if (dot(f.normal, v) > f.offset) throw InternalError("derived facet violated by a vertex");
        for (const auto& e : q.equations_)
            if (dot(e.normal, v) != e.offset) throw InternalError("derived hull equation violated by a vertex");
    }
    return q;
}

LatticePolytope LatticePolytope::from_derived(int dim, std::vector<Point> vertices, std::vector<Facet> facets,
                                              std::vector<HullEquation> equations) {
    std::vector<FacetCandidate> candidates;
    candidates.reserve(facets.size());
    for (const auto& f : facets) {
        std::vector<int> contact;
        for (size_t i = 0; i < vertices.size(); ++i)
            if (dot(f.normal, vertices[i]) == f.offset) contact.push_back(static_cast<int>(i));
        candidates.push_back({f, std::move(contact)});
    }
    auto edges = edges_by_rank(vertices, candidates, equations, static_cast<size_t>(dim));
    return from_derived(dim, std::move(vertices), std::move(facets), std::move(equations), std::move(edges));
}

std::vector<Violation> validate_pair(const LatticePolytope& q, const LinearForm& lambda) {
    std::vector<Violation> out;
    if (lambda.dim() != q.ambient_dim()) {
        out.push_back({Violation::Kind::Positivity, "linear form dimension mismatch"});
        return out;
    }
    for (const auto& v : q.vertices())
        if (lambda.apply(v) < 0)
            out.push_back({Violation::Kind::Positivity, "Positivity violated at vertex " + render_point(v)});
    for (const auto& [i, j] : q.edges()) {
        const Point& a = q.vertices()[static_cast<size_t>(i)];
        const Point& b = q.vertices()[static_cast<size_t>(j)];
        if (lambda.apply(a) == lambda.apply(b))
            out.push_back({Violation::Kind::Genericity,
                           "Genericity violated on edge " + render_point(a) + "-" + render_point(b)});
    }
    return out;
}

void require_valid(const LatticePolytope& q, const LinearForm& lambda) {
    auto violations = validate_pair(q, lambda);
    if (!violations.empty()) throw ValidationError(violations.front().message);
}

std::pair<Coord, Coord> lambda_range(const LatticePolytope& q, const LinearForm& lambda) {
    Coord lo = lambda.apply(q.vertices().front());
    Coord hi = lo;
    for (const auto& v : q.vertices()) {
        Coord val = lambda.apply(v);
        lo = std::min(lo, val);
        hi = std::max(hi, val);
    }
    return {lo, hi};
}

namespace {

struct Constraint {
    std::vector<Coord> coeffs;
    Coord rhs;  // coeffs . x <= rhs (strict inequalities pre-folded: rhs - 1)
};

Coord floor_div(Coord a, Coord b) {
    Coord d = a / b;
    return (a % b != 0 && ((a < 0) != (b < 0))) ? d - 1 : d;
}

// Depth-first enumeration of integer points in a box satisfying all
// constraints, pruning each coordinate range by interval arithmetic over
// the not-yet-fixed coordinates.
void enumerate(const std::vector<std::pair<Coord, Coord>>& box, const std::vector<Constraint>& constraints,
               std::vector<Point>& out) {
    size_t d = box.size();
    if (d == 0) {
        for (const auto& c : constraints)
            if (0 > c.rhs) return;
        out.push_back({});
        return;
    }
    // suffix_min[c][i] = minimal contribution of coordinates i..d-1.
    std::vector<std::vector<Coord>> suffix_min(constraints.size(), std::vector<Coord>(d + 1, 0));
    for (size_t c = 0; c < constraints.size(); ++c)
        for (size_t i = d; i-- > 0;) {
            Coord a = constraints[c].coeffs[i];
            Coord lo = a * box[i].first, hi = a * box[i].second;
            suffix_min[c][i] = suffix_min[c][i + 1] + std::min(lo, hi);
        }
    Point x(d, 0);
    std::vector<Coord> partial(constraints.size(), 0);
    auto recurse = [&](auto&& self, size_t depth) -> void {
        if (depth == d) {
            out.push_back(x);
            return;
        }
        Coord lo = box[depth].first, hi = box[depth].second;
        for (size_t c = 0; c < constraints.size() && lo <= hi; ++c) {
            Coord a = constraints[c].coeffs[depth];
            // Budget for a * x_depth given the best case for later coords.
            Coord budget = constraints[c].rhs - partial[c] - suffix_min[c][depth + 1];
            if (a == 0) {
                if (budget < 0) return;
                continue;
            }
            if (a > 0)
                hi = std::min(hi, floor_div(budget, a));
            else
                lo = std::max(lo, -floor_div(budget, -a));
        }
        for (Coord value = lo; value <= hi; ++value) {
            x[depth] = value;
            for (size_t c = 0; c < constraints.size(); ++c)
                partial[c] += constraints[c].coeffs[depth] * value;
            self(self, depth + 1);
            for (size_t c = 0; c < constraints.size(); ++c)
                partial[c] -= constraints[c].coeffs[depth] * value;
        }
    };
    recurse(recurse, 0);
}

}  // namespace

std::vector<Point> lattice_points(const LatticePolytope& q, int n, Region region) {
    if (n < 0) throw PreconditionError("negative dilation factor");
    size_t d = static_cast<size_t>(q.ambient_dim());
    std::vector<std::pair<Coord, Coord>> box(d);
    for (size_t i = 0; i < d; ++i) {
        Coord lo = q.vertices().front()[i], hi = lo;
        for (const auto& v : q.vertices()) {
            lo = std::min(lo, v[i]);
            hi = std::max(hi, v[i]);
        }
        box[i] = {lo * n, hi * n};
        if (box[i].first > box[i].second) std::swap(box[i].first, box[i].second);
    }
    Coord strict = region == Region::Interior ? 1 : 0;
    std::vector<Constraint> constraints;
    for (const auto& f : q.facets()) constraints.push_back({f.normal, f.offset * n - strict});
    for (const auto& e : q.hull_equations()) {
        constraints.push_back({e.normal, e.offset * n});
        std::vector<Coord> neg(e.normal.size());
        for (size_t i = 0; i < neg.size(); ++i) neg[i] = -e.normal[i];
        constraints.push_back({std::move(neg), -e.offset * n});
    }
    std::vector<Point> out;
    enumerate(box, constraints, out);
    return out;
}

QRat weighted_sum(const std::vector<Point>& points, const LinearForm& lambda, bool inverse_q) {
    // Accumulate exponent counts first; one QRat construction at the end.
    std::map<Coord, long> exponents;
    for (const auto& p : points) {
        Coord e = lambda.apply(p);
        exponents[inverse_q ? -e : e] += 1;
    }
    if (exponents.empty()) return QRat();
    Coord min_exp = std::min<Coord>(exponents.begin()->first, 0);
    std::vector<mpz_class> coeffs(static_cast<size_t>(exponents.rbegin()->first - min_exp) + 1);
    for (const auto& [e, count] : exponents) coeffs[static_cast<size_t>(e - min_exp)] = count;
    QRat poly{ZPoly(std::move(coeffs))};
    return min_exp < 0 ? poly * QRat::q_power(static_cast<int>(min_exp)) : poly;
}

LatticePolytope translate(const LatticePolytope& q, const LinearForm& lambda, const Point& v) {
    if (static_cast<int>(v.size()) != q.ambient_dim()) throw PreconditionError("translation dimension mismatch");
    if (lambda.apply(v) < 0) throw PreconditionError("translation must not decrease the linear form");
    std::vector<Point> vertices = q.vertices();
    for (auto& w : vertices)
        for (size_t i = 0; i < w.size(); ++i) w[i] += v[i];
    std::vector<Facet> facets = q.facets();
    for (auto& f : facets) f.offset += dot(f.normal, v);
    std::vector<HullEquation> equations = q.hull_equations();
    for (auto& e : equations) e.offset += dot(e.normal, v);
    return LatticePolytope::from_derived(q.ambient_dim(), std::move(vertices), std::move(facets),
                                         std::move(equations), q.edges());
}

LatticePolytope reverse(const LatticePolytope& q, const LinearForm& lambda) {
    Coord hi = lambda_range(q, lambda).second;
    const Point* vmax = nullptr;
    int count = 0;
    for (const auto& v : q.vertices())
        if (lambda.apply(v) == hi) {
            vmax = &v;
            ++count;
        }
    if (count != 1)
        throw ValidationError("Genericity violated: no unique vertex maximizes the linear form");
    Point m = *vmax;
    std::vector<Point> vertices = q.vertices();
    for (auto& w : vertices)
        for (size_t i = 0; i < w.size(); ++i) w[i] = m[i] - w[i];
    std::vector<Facet> facets = q.facets();
    for (auto& f : facets) {
        Coord shifted = f.offset - dot(f.normal, m);
        for (auto& c : f.normal) c = -c;
        f.offset = shifted;
    }
    std::vector<HullEquation> equations = q.hull_equations();
    for (auto& e : equations) e.offset = dot(e.normal, m) - e.offset;
    return LatticePolytope::from_derived(q.ambient_dim(), std::move(vertices), std::move(facets),
                                         std::move(equations), q.edges());
}

namespace {

// Shared cone construction: apex + lifted copy of Q in one more dimension.
// `base_at_one` selects between a base at x0 = 1 with apex at the origin
// (B+) and a base at x0 = 0 with apex at (1, 0) (Pyr).
LatticePolytope lift_to_cone(const LatticePolytope& q, bool base_at_one) {
    int dim = q.ambient_dim() + 1;
    std::vector<Point> vertices;
    vertices.reserve(q.vertices().size() + 1);
    Coord base = base_at_one ? 1 : 0;
    for (const auto& v : q.vertices()) {
        Point w(static_cast<size_t>(dim));
        w[0] = base;
        std::copy(v.begin(), v.end(), w.begin() + 1);
        vertices.push_back(std::move(w));
    }
    Point apex(static_cast<size_t>(dim), 0);
    apex[0] = base_at_one ? 0 : 1;
    int apex_index = static_cast<int>(vertices.size());
    vertices.push_back(std::move(apex));

    std::vector<Facet> facets;
    std::vector<HullEquation> equations;
    if (base_at_one) {
        // Points are (s, s y), y in Q: base x0 <= 1, cone facets a.y <= b x0.
        Point e0(static_cast<size_t>(dim), 0);
        e0[0] = 1;
        facets.push_back({e0, 1});
        for (const auto& f : q.facets()) {
            Point normal(static_cast<size_t>(dim));
            normal[0] = -f.offset;
            std::copy(f.normal.begin(), f.normal.end(), normal.begin() + 1);
            facets.push_back({std::move(normal), 0});
        }
        for (const auto& eq : q.hull_equations()) {
            Point normal(static_cast<size_t>(dim));
            normal[0] = -eq.offset;
            std::copy(eq.normal.begin(), eq.normal.end(), normal.begin() + 1);
            equations.push_back({std::move(normal), 0});
        }
        if (q.affine_dim() == 0) {
            Point neg(static_cast<size_t>(dim), 0);
            neg[0] = -1;
            facets.push_back({std::move(neg), 0});
        }
    } else {
        // Points are (u, (1-u) y): base -x0 <= 0, cone facets a.y + b x0 <= b.
        Point neg(static_cast<size_t>(dim), 0);
        neg[0] = -1;
        facets.push_back({neg, 0});
        for (const auto& f : q.facets()) {
            Point normal(static_cast<size_t>(dim));
            normal[0] = f.offset;
            std::copy(f.normal.begin(), f.normal.end(), normal.begin() + 1);
            facets.push_back({std::move(normal), f.offset});
        }
        for (const auto& eq : q.hull_equations()) {
            Point normal(static_cast<size_t>(dim));
            normal[0] = eq.offset;
            std::copy(eq.normal.begin(), eq.normal.end(), normal.begin() + 1);
            equations.push_back({std::move(normal), eq.offset});
        }
        if (q.affine_dim() == 0) {
            Point e0(static_cast<size_t>(dim), 0);
            e0[0] = 1;
            facets.push_back({std::move(e0), 1});
        }
    }
    // Pyramid edges: lifted base edges plus apex to every base vertex.
    std::vector<std::pair<int, int>> edges = q.edges();
    for (int i = 0; i < apex_index; ++i) edges.emplace_back(i, apex_index);
    return LatticePolytope::from_derived(dim, std::move(vertices), std::move(facets), std::move(equations),
                                         std::move(edges));
}

}  // namespace

std::pair<LatticePolytope, LinearForm> pyramid(const LatticePolytope& q, const LinearForm& lambda, Coord m) {
    auto [lo, hi] = lambda_range(q, lambda);
    if (m < 0) throw PreconditionError("pyramid weight must be nonnegative");
    if (m >= lo && m <= hi)
        throw PreconditionError("pyramid weight " + std::to_string(m) +
                                " lies in the value range [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "] of the linear form");
    LinearForm extended;
    extended.coefficients.reserve(lambda.coefficients.size() + 1);
    extended.coefficients.push_back(m);
    extended.coefficients.insert(extended.coefficients.end(), lambda.coefficients.begin(),
                                 lambda.coefficients.end());
    return {lift_to_cone(q, /*base_at_one=*/false), std::move(extended)};
}

std::pair<LatticePolytope, LinearForm> bplus(const LatticePolytope& q, const LinearForm& lambda) {
    LinearForm extended;
    extended.coefficients.reserve(lambda.coefficients.size() + 1);
    extended.coefficients.push_back(1);
    extended.coefficients.insert(extended.coefficients.end(), lambda.coefficients.begin(),
                                 lambda.coefficients.end());
    return {lift_to_cone(q, /*base_at_one=*/true), std::move(extended)};
}

bool is_empty(const LatticePolytope& q) { return lattice_points(q, 1, Region::Interior).empty(); }

}  // namespace qe
