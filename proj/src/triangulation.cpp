#include "qehrhart/triangulation.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "linalg.hpp"
#include "qehrhart/errors.hpp"

namespace qe {

namespace {

std::vector<Point> select(const std::vector<Point>& vertices, const std::vector<int>& indices) {
    std::vector<Point> out;
    out.reserve(indices.size());
    for (int i : indices) out.push_back(vertices[static_cast<size_t>(i)]);
    return out;
}

// Recursive pulling: cone the minimal vertex of the face over the pulled
// triangulations of the facets avoiding it.
void pull(const std::vector<Point>& all_vertices, const LinearForm& lambda, std::vector<int> face,
          std::vector<std::vector<int>>& out) {
    LatticePolytope sub = LatticePolytope::from_points(static_cast<int>(all_vertices[0].size()),
                                                       select(all_vertices, face));
    if (!sub.stripped_points().empty())
        throw InternalError("face vertex is not extreme in the pulling recursion");
    // from_points preserves the input order of extreme points, so position i
    // of sub corresponds to face[i].
    if (sub.affine_dim() == 0) {
        out.push_back(face);
        return;
    }
    int min_pos = 0;
    int min_count = 0;
    Coord min_val = 0;
    for (size_t i = 0; i < sub.vertices().size(); ++i) {
        Coord v = lambda.apply(sub.vertices()[i]);
        if (i == 0 || v < min_val) {
            min_val = v;
            min_pos = static_cast<int>(i);
            min_count = 1;
        } else if (v == min_val) {
            ++min_count;
        }
    }
    if (min_count != 1)
        throw ValidationError("Genericity violated: face has no unique minimal vertex");
    for (const auto& f : sub.facets()) {
        std::vector<int> contact;
        for (size_t i = 0; i < sub.vertices().size(); ++i) {
            Coord v = 0;
            for (size_t c = 0; c < f.normal.size(); ++c) v += f.normal[c] * sub.vertices()[i][c];
            if (v == f.offset) contact.push_back(static_cast<int>(i));
        }
        if (std::binary_search(contact.begin(), contact.end(), min_pos)) continue;
        std::vector<int> sub_face;
        sub_face.reserve(contact.size());
        for (int i : contact) sub_face.push_back(face[static_cast<size_t>(i)]);
        std::vector<std::vector<int>> facet_simplices;
        pull(all_vertices, lambda, std::move(sub_face), facet_simplices);
        for (auto& s : facet_simplices) {
            s.push_back(face[static_cast<size_t>(min_pos)]);
            std::sort(s.begin(), s.end());
            out.push_back(std::move(s));
        }
    }
}

}  // namespace

Triangulation lambda_triangulation(const LatticePolytope& q, const LinearForm& lambda) {
    require_valid(q, lambda);
    std::vector<int> all(q.vertices().size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    std::vector<std::vector<int>> maximal;
    pull(q.vertices(), lambda, std::move(all), maximal);
    std::sort(maximal.begin(), maximal.end());
    Triangulation tri;
    tri.maximal_simplices.reserve(maximal.size());
    std::set<std::vector<int>> faces;
    for (auto& s : maximal) {
        // All nonempty subsets of a simplex are faces of it.
        size_t count = s.size();
        for (unsigned mask = 1; mask < (1u << count); ++mask) {
            std::vector<int> sub;
            for (size_t i = 0; i < count; ++i)
                if ((mask >> i) & 1) sub.push_back(s[i]);
            faces.insert(std::move(sub));
        }
        tri.maximal_simplices.push_back(Simplex{std::move(s)});
    }
    tri.all_faces.reserve(faces.size());
    for (const auto& f : faces) tri.all_faces.push_back(Simplex{f});
    return tri;
}

std::vector<Point> parallelepiped_points(const std::vector<Point>& simplex_vertices, ParallelepipedMode mode) {
    if (simplex_vertices.empty()) throw PreconditionError("empty simplex");
    size_t d = simplex_vertices[0].size();
    size_t k = simplex_vertices.size();
    // Columns w_i = (1, v_i) in dimension d + 1.
    linalg::Mat w(d + 1, linalg::Vec(k));
    for (size_t i = 0; i < k; ++i) {
        w[0][i] = 1;
        for (size_t c = 0; c < d; ++c) w[c + 1][i] = simplex_vertices[i][c];
    }
    // Row-reduce [W | I]: pivot rows express t = T p, zero-left rows give
    // the consistency conditions C p = 0 for membership in the span.
    std::vector<std::vector<mpq_class>> aug(d + 1, std::vector<mpq_class>(k + d + 1));
    for (size_t r = 0; r <= d; ++r) {
        for (size_t c = 0; c < k; ++c) aug[r][c] = mpq_class(w[r][c]);
        aug[r][k + r] = 1;
    }
    size_t row = 0;
    std::vector<size_t> pivot_cols;
    for (size_t col = 0; col < k && row <= d; ++col) {
        size_t p = row;
        while (p <= d && aug[p][col] == 0) ++p;
        if (p > d) continue;
        std::swap(aug[row], aug[p]);
        mpq_class inv = 1 / aug[row][col];
        for (auto& e : aug[row]) e *= inv;
        for (size_t r = 0; r <= d; ++r) {
            if (r == row || aug[r][col] == 0) continue;
            mpq_class f = aug[r][col];
            for (size_t c2 = col; c2 < aug[r].size(); ++c2) aug[r][c2] -= f * aug[row][c2];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    if (pivot_cols.size() != k) throw PreconditionError("affinely dependent simplex vertices");

    std::vector<std::pair<Coord, Coord>> box(d + 1, {0, 0});
    for (size_t i = 0; i < k; ++i) {
        box[0].second += 1;
        for (size_t c = 0; c < d; ++c) {
            Coord v = simplex_vertices[i][c];
            if (v < 0)
                box[c + 1].first += v;
            else
                box[c + 1].second += v;
        }
    }
    bool lower = mode == ParallelepipedMode::Lower;
    std::vector<Point> out;
    Point p(d + 1, 0);
    std::vector<mpq_class> pq(d + 1);
    auto scan = [&](auto&& self, size_t depth) -> void {
        if (depth <= d) {
            for (Coord v = box[depth].first; v <= box[depth].second; ++v) {
                p[depth] = v;
                self(self, depth + 1);
            }
            return;
        }
        for (size_t c = 0; c <= d; ++c) pq[c] = mpq_class(static_cast<long>(p[c]));
        // Consistency rows (left block reduced to zero).
        for (size_t r = k; r <= d; ++r) {
            mpq_class acc = 0;
            for (size_t c = 0; c <= d; ++c) acc += aug[r][k + c] * pq[c];
            if (acc != 0) return;
        }
        for (size_t i = 0; i < k; ++i) {
            mpq_class t = 0;
            for (size_t c = 0; c <= d; ++c) t += aug[i][k + c] * pq[c];
            if (lower ? (t < 0 || t >= 1) : (t <= 0 || t > 1)) return;
        }
        out.push_back(p);
    };
    scan(scan, 0);
    return out;
}

SeriesTQ simplex_series(const std::vector<Point>& simplex_vertices, const LinearForm& lambda, Region region) {
    std::set<Coord> values;
    for (const auto& v : simplex_vertices) values.insert(lambda.apply(v));
    if (values.size() != simplex_vertices.size())
        throw PreconditionError("linear form does not separate the simplex vertices");
    auto pts = parallelepiped_points(simplex_vertices,
                                     region == Region::Closed ? ParallelepipedMode::Lower
                                                              : ParallelepipedMode::Upper);
    std::vector<QRat> numerator;
    for (const auto& p : pts) {
        Coord height = p[0];
        Coord weight = 0;
        for (size_t c = 1; c < p.size(); ++c) weight += lambda.coefficients[c - 1] * p[c];
        if (static_cast<size_t>(height) >= numerator.size())
            numerator.resize(static_cast<size_t>(height) + 1);
        numerator[static_cast<size_t>(height)] += QRat::q_power(static_cast<int>(weight));
    }
    std::vector<int> exps;
    exps.reserve(values.size());
    for (Coord v : values) exps.push_back(static_cast<int>(v));
    return SeriesTQ(std::move(numerator), std::move(exps));
}

SeriesTQ series_via_triangulation(const LatticePolytope& q, const LinearForm& lambda) {
    Triangulation tri = lambda_triangulation(q, lambda);
    // Relative interiors of all faces partition every dilate nQ for n >= 1;
    // the n = 0 dilate is the single origin point.
    SeriesTQ acc = SeriesTQ::one();
    for (const auto& face : tri.all_faces)
        acc = acc + simplex_series(select(q.vertices(), face.vertex_indices), lambda, Region::Interior);
    return acc;
}

}  // namespace qe
