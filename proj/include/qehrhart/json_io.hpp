#pragma once

#include <string>
#include <utility>

#include <json.hpp>

#include "qehrhart/polytope.hpp"
#include "qehrhart/poset.hpp"
#include "qehrhart/series.hpp"
#include "qehrhart/xpoly.hpp"

namespace qe {

/// Parse {"dim": d, "vertices": [[...]...], "lambda": [...]} with integer
/// entries.
std::pair<LatticePolytope, LinearForm> parse_polytope_doc(const nlohmann::json& doc);
/// Parse {"size": n, "covers": [[i, j]...]}.
Poset parse_poset_doc(const nlohmann::json& doc);

std::pair<LatticePolytope, LinearForm> load_polytope_file(const std::string& path);
Poset load_poset_file(const std::string& path);

nlohmann::json to_json(const QRat& r);
nlohmann::json to_json(const XPoly& f);
nlohmann::json to_json(const SeriesTQ& s);

}  // namespace qe
