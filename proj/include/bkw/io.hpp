#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bkw/graphpoly.hpp"
#include "bkw/limitset.hpp"
#include "bkw/poly_core.hpp"
#include "bkw/recurrence.hpp"
#include "bkw/rootfind.hpp"
#include "bkw/verify.hpp"

namespace bkw {

using json = nlohmann::json;

// Complex coefficients are [re, im] pairs; polynomials list them x-ascending.
json poly_to_json(const ComplexPoly& p);
ComplexPoly poly_from_json(const json& j);

/// {"name": str, "index_offset": int, "terms": [{"alpha": [[[re,im],...] per n-power], "lambda": [[re,im],...]}]}
json family_to_json(const ExpSumFamily& family);
ExpSumFamily family_from_json(const json& j);

/// A built-in family name, or else the path of a family JSON file.
/// Throws std::invalid_argument if neither resolves.
ExpSumFamily load_family(const std::string& name_or_path);

json recurrence_to_json(const Recurrence& rec);

json rootsets_to_json(const std::vector<RootSet>& sets);
/// Header "n,re,im,residual" then one row per root.
std::string rootsets_to_csv(const std::vector<RootSet>& sets);

/// {"window": [re_min,re_max,im_min,im_max], "grid": N, "isolated": [{"point": [re,im], "term": i}],
///  "persistent": [[re,im],...], "curves": [{"pair": [i,j], "points": [[re,im],...]}]}
json limitset_to_json(const LimitSet& limits);
LimitSet limitset_from_json(const json& j);

json convergence_to_json(const ConvergenceReport& report);

/// {"n_vertices": int, "edges": [[u,v],...]}
Multigraph graph_from_json(const json& j);
json graph_to_json(const Multigraph& g);
Multigraph load_graph(const std::string& path);

/// {"terms": [{"x": a, "y": b, "coeff": c}, ...]}, coefficients as decimal strings.
json tutte_to_json(const BivarIntPoly& t);
/// {"coefficients": ["num/den", ...]} ascending degree.
json rational_poly_to_json(const RationalUniPoly& p);
std::string rational_to_string(const Rational& r);

/// "a..b" -> {a, b}; a single integer "a" means a..a.
std::pair<long, long> parse_index_range(const std::string& text);
/// "re_min,re_max,im_min,im_max"
Window parse_window(const std::string& text, int grid);

json read_json_file(const std::string& path);

}  // namespace bkw
