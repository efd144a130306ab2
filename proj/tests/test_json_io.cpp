#include <doctest.h>

#include "qehrhart/corpus.hpp"
#include "qehrhart/ehrhart.hpp"
#include "qehrhart/errors.hpp"
#include "qehrhart/json_io.hpp"
#include "qehrhart/render.hpp"

using namespace qe;
using nlohmann::json;

TEST_CASE("polytope documents") {
    json doc = {{"dim", 2}, {"vertices", {{0, 0}, {1, 0}, {1, 1}}}, {"lambda", {1, 1}}};
    auto [q, lambda] = parse_polytope_doc(doc);
    CHECK(q.vertices().size() == 3);
    CHECK(lambda.coefficients == std::vector<Coord>{1, 1});
    CHECK(qehrhart_series(q, lambda) == qehrhart_series(corpus::example_b().polytope,
                                                        corpus::example_b().lambda));
    SUBCASE("rejections") {
        CHECK_THROWS_AS(parse_polytope_doc(json{{"dim", 2}, {"vertices", json::array()}, {"lambda", {1, 1}}}),
                        ParseError);
        CHECK_THROWS_AS(parse_polytope_doc(json{{"dim", 2}, {"vertices", {{0}}}, {"lambda", {1, 1}}}),
                        ParseError);
        CHECK_THROWS_AS(parse_polytope_doc(json{{"dim", 1}, {"vertices", {{0.5}}}, {"lambda", {1}}}),
                        ParseError);
        CHECK_THROWS_AS(parse_polytope_doc(json{{"vertices", {{0}}}, {"lambda", {1}}}), ParseError);
        CHECK_THROWS_AS(parse_polytope_doc(json{{"dim", 1}, {"vertices", {{0}}}, {"lambda", {1, 2}}}),
                        ParseError);
    }
}

TEST_CASE("poset documents") {
    json doc = {{"size", 4}, {"covers", {{0, 1}, {0, 2}, {0, 3}}}};
    Poset p = parse_poset_doc(doc);
    CHECK(p.size() == 4);
    CHECK(p.leq(0, 3));
    SUBCASE("rejections") {
        CHECK_THROWS_AS(parse_poset_doc(json{{"size", 2}, {"covers", {{0, 1, 2}}}}), ParseError);
        CHECK_THROWS_AS(parse_poset_doc(json{{"size", 2}, {"covers", {{0, 5}}}}), ParseError);
        CHECK_THROWS_AS(parse_poset_doc(json{{"size", 2}, {"covers", {{0, 1}, {1, 0}}}}), ParseError);
        CHECK_THROWS_AS(parse_poset_doc(json{{"covers", json::array()}}), ParseError);
    }
}

TEST_CASE("value serialization round trips through the parser") {
    auto exc = corpus::example_c();
    SeriesTQ series = qehrhart_series(exc.polytope, exc.lambda);
    json doc = to_json(series);
    CHECK(doc["denominator_exponents"] == json({0, 1, 2, 3}));
    std::vector<QRat> numerator;
    for (const auto& entry : doc["numerator"]) {
        QRat num = parse_qrat(entry["num"].get<std::string>());
        QRat den = parse_qrat(entry["den"].get<std::string>());
        numerator.push_back(num / den);
    }
    CHECK(numerator == series.numerator());

    XPoly poly = qehrhart_polynomial(exc.polytope, exc.lambda);
    json pdoc = to_json(poly);
    std::vector<QRat> coeffs;
    for (const auto& entry : pdoc["coefficients"])
        coeffs.push_back(parse_qrat(entry["num"].get<std::string>()) /
                         parse_qrat(entry["den"].get<std::string>()));
    CHECK(XPoly(std::move(coeffs)) == poly);
}
