#include "qehrhart/json_io.hpp"

#include <fstream>

#include "qehrhart/errors.hpp"
#include "qehrhart/render.hpp"

namespace qe {

namespace {

Coord integer_entry(const nlohmann::json& value, const char* where) {
    if (!value.is_number_integer())
        throw ParseError(std::string("expected an integer in ") + where + ", got " + value.dump());
    return value.get<Coord>();
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    return doc;
}

}  // namespace

std::pair<LatticePolytope, LinearForm> parse_polytope_doc(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("vertices") || !doc.contains("lambda"))
        throw ParseError("polytope document needs fields dim, vertices, lambda");
    int dim = static_cast<int>(integer_entry(doc["dim"], "dim"));
    if (dim < 0) throw ParseError("dim must be nonnegative");
    if (!doc["vertices"].is_array() || doc["vertices"].empty())
        throw ParseError("vertices must be a nonempty array");
    std::vector<Point> points;
    for (const auto& row : doc["vertices"]) {
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
            throw ParseError("each vertex must be an array of dim integers");
        Point p;
        p.reserve(row.size());
        for (const auto& e : row) p.push_back(integer_entry(e, "vertices"));
        points.push_back(std::move(p));
    }
    if (!doc["lambda"].is_array() || static_cast<int>(doc["lambda"].size()) != dim)
        throw ParseError("lambda must be an array of dim integers");
    LinearForm lambda;
    for (const auto& e : doc["lambda"]) lambda.coefficients.push_back(integer_entry(e, "lambda"));
    return {LatticePolytope::from_points(dim, std::move(points)), std::move(lambda)};
}

Poset parse_poset_doc(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("size") || !doc.contains("covers"))
        throw ParseError("poset document needs fields size, covers");
    int n = static_cast<int>(integer_entry(doc["size"], "size"));
    if (n < 0) throw ParseError("size must be nonnegative");
    if (!doc["covers"].is_array()) throw ParseError("covers must be an array of [i, j] pairs");
    std::vector<std::pair<int, int>> covers;
    for (const auto& row : doc["covers"]) {
        if (!row.is_array() || row.size() != 2) throw ParseError("each cover must be a pair [i, j]");
        int a = static_cast<int>(integer_entry(row[0], "covers"));
        int b = static_cast<int>(integer_entry(row[1], "covers"));
        if (a < 0 || a >= n || b < 0 || b >= n) throw ParseError("cover index out of range");
        covers.emplace_back(a, b);
    }
    return Poset::from_covers(n, covers);
}

std::pair<LatticePolytope, LinearForm> load_polytope_file(const std::string& path) {
    return parse_polytope_doc(load_json(path));
}

Poset load_poset_file(const std::string& path) { return parse_poset_doc(load_json(path)); }

nlohmann::json to_json(const QRat& r) {
    return nlohmann::json{{"num", render(r.num())}, {"den", render(r.den())}};
}

nlohmann::json to_json(const XPoly& f) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int k = 0; k <= f.degree(); ++k) coeffs.push_back(to_json(f.coeff(k)));
    return nlohmann::json{{"coefficients", coeffs}};
}

nlohmann::json to_json(const SeriesTQ& s) {
    nlohmann::json numerator = nlohmann::json::array();
    for (const auto& c : s.numerator()) numerator.push_back(to_json(c));
    return nlohmann::json{{"numerator", numerator},
                          {"denominator_exponents", s.denominator_exponents()}};
}

}  // namespace qe
