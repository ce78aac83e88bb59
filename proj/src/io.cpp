#include "bkw/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "bkw/families.hpp"

namespace bkw {

namespace {

json complex_to_json(cplx c) { return json::array({c.real(), c.imag()}); }

cplx complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [re, im] pair, got " + j.dump());
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

json points_to_json(const std::vector<cplx>& pts) {
  json arr = json::array();
  for (const cplx p : pts) arr.push_back(complex_to_json(p));
  return arr;
}

std::vector<cplx> points_from_json(const json& j) {
  std::vector<cplx> pts;
  for (const auto& e : j) pts.push_back(complex_from_json(e));
  return pts;
}

}  // namespace

json poly_to_json(const ComplexPoly& p) { return points_to_json(p.coeffs()); }

ComplexPoly poly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be an array of [re, im] pairs");
  return ComplexPoly(points_from_json(j));
}

json family_to_json(const ExpSumFamily& family) {
  json terms = json::array();
  for (const auto& t : family.terms()) {
    json alpha = json::array();
    for (const auto& p : t.alpha.n_coeffs()) alpha.push_back(poly_to_json(p));
    terms.push_back({{"alpha", alpha}, {"lambda", poly_to_json(t.lambda)}});
  }
  return {{"name", family.name()}, {"index_offset", family.index_offset()}, {"terms", terms}};
}

ExpSumFamily family_from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms")) throw std::invalid_argument("family JSON needs a \"terms\" array");
  std::vector<ExpTerm> terms;
  for (const auto& t : j.at("terms")) {
    std::vector<ComplexPoly> alpha;
    for (const auto& p : t.at("alpha")) alpha.push_back(poly_from_json(p));
    terms.push_back({NCoeffPoly(std::move(alpha)), poly_from_json(t.at("lambda"))});
  }
  return ExpSumFamily(j.value("name", std::string("custom")), std::move(terms), j.value("index_offset", 0));
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
  }
}

ExpSumFamily load_family(const std::string& name_or_path) {
  if (auto spec = find_family(name_or_path)) return spec->family;
  std::ifstream probe(name_or_path);
  if (!probe) {
    std::string names;
    for (const auto& n : builtin_family_names()) names += (names.empty() ? "" : ", ") + n;
    throw std::invalid_argument("unknown family '" + name_or_path + "' (built-ins: " + names + ")");
  }
  try {
    return family_from_json(read_json_file(name_or_path));
  } catch (const json::exception& e) {
    throw std::invalid_argument("malformed family file '" + name_or_path + "': " + e.what());
  }
}

json recurrence_to_json(const Recurrence& rec) {
  json f = json::array();
  for (const auto& p : rec.f) f.push_back(poly_to_json(p));
  json init = json::array();
  for (const auto& p : rec.initials) init.push_back(poly_to_json(p));
  return {{"order", rec.order}, {"f", f}, {"initials", init}};
}

json rootsets_to_json(const std::vector<RootSet>& sets) {
  json arr = json::array();
  for (const auto& rs : sets)
    arr.push_back({{"n", rs.n}, {"roots", points_to_json(rs.roots)}, {"residuals", rs.residuals}});
  return arr;
}

std::string rootsets_to_csv(const std::vector<RootSet>& sets) {
  std::ostringstream os;
  os << "n,re,im,residual\n" << std::setprecision(17);
  for (const auto& rs : sets)
    for (std::size_t k = 0; k < rs.roots.size(); ++k)
      os << rs.n << ',' << rs.roots[k].real() << ',' << rs.roots[k].imag() << ',' << rs.residuals[k] << '\n';
  return os.str();
}

json limitset_to_json(const LimitSet& limits) {
  const Window& w = limits.window;
  json isolated = json::array();
  for (const auto& ip : limits.isolated) isolated.push_back({{"point", complex_to_json(ip.point)}, {"term", ip.term}});
  json curves = json::array();
  for (const auto& c : limits.curves)
    curves.push_back({{"pair", json::array({c.pair.first, c.pair.second})}, {"points", points_to_json(c.points)}});
  return {{"window", json::array({w.re_min, w.re_max, w.im_min, w.im_max})},
          {"grid", w.grid},
          {"isolated", isolated},
          {"persistent", points_to_json(limits.persistent)},
          {"curves", curves}};
}

LimitSet limitset_from_json(const json& j) {
  LimitSet out;
  if (j.contains("window")) {
    const auto& w = j.at("window");
    out.window = {w.at(0).get<double>(), w.at(1).get<double>(), w.at(2).get<double>(), w.at(3).get<double>(),
                  j.value("grid", 512)};
  }
  for (const auto& ip : j.value("isolated", json::array()))
    out.isolated.push_back({complex_from_json(ip.at("point")), ip.at("term").get<int>()});
  out.persistent = points_from_json(j.value("persistent", json::array()));
  for (const auto& c : j.value("curves", json::array())) {
    const auto& pair = c.at("pair");
    out.curves.push_back({{pair.at(0).get<int>(), pair.at(1).get<int>()}, points_from_json(c.at("points"))});
  }
  return out;
}

json convergence_to_json(const ConvergenceReport& report) {
  json per_n = json::array();
  for (const auto& d : report.per_n) per_n.push_back({{"n", d.n}, {"max_dist", d.max_dist}, {"mean_dist", d.mean_dist}});
  return {{"per_n", per_n},
          {"trend", report.trend},
          {"coverage_points", report.coverage.size()},
          {"max_coverage_distance", report.max_coverage_distance()}};
}

Multigraph graph_from_json(const json& j) {
  Multigraph g;
  g.n_vertices = j.at("n_vertices").get<int>();
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("graph edge must be [u, v]");
    g.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  }
  g.validate();
  return g;
}

json graph_to_json(const Multigraph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges) edges.push_back(json::array({u, v}));
  return {{"n_vertices", g.n_vertices}, {"edges", edges}};
}

Multigraph load_graph(const std::string& path) {
  try {
    return graph_from_json(read_json_file(path));
  } catch (const json::exception& e) {
    throw std::invalid_argument("malformed graph file '" + path + "': " + e.what());
  }
}

json tutte_to_json(const BivarIntPoly& t) {
  json terms = json::array();
  for (const auto& [k, c] : t.terms()) terms.push_back({{"x", k.first}, {"y", k.second}, {"coeff", c.str()}});
  return {{"terms", terms}};
}

std::string rational_to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

json rational_poly_to_json(const RationalUniPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs) coeffs.push_back(rational_to_string(c));
  return {{"coefficients", coeffs}};
}

std::pair<long, long> parse_index_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const long v = std::stol(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    const long lo = std::stol(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    const long hi = std::stol(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad index range '" + text + "' (expected a..b)");
  }
}

Window parse_window(const std::string& text, int grid) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad window '" + text + "'");
    }
  }
  if (v.size() != 4) throw std::invalid_argument("window needs re_min,re_max,im_min,im_max");
  Window w{v[0], v[1], v[2], v[3], grid};
  w.validate();
  return w;
}

}  // namespace bkw
