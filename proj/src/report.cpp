#include "cstar/report.hpp"

#include <algorithm>
#include <sstream>

namespace cstar {

Json to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return Json(q.get_num().get_si());
  return Json(to_string(q));
}

Json to_json(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const std::vector<RationalVector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

Json to_json(const ActionReport& r) {
  Json comps = Json::array();
  for (const auto& c : r.components) {
    comps.push_back({{"level", c.level},
                     {"dim", c.dim},
                     {"nu_plus", c.nu_plus},
                     {"nu_minus", c.nu_minus},
                     {"size", c.weights.size()},
                     {"fixed_points", to_json(c.weights)},
                     {"internal_edge_degrees", c.internal_edge_degrees}});
  }
  return {{"bandwidth", r.bandwidth},
          {"criticality", r.criticality},
          {"equalized", r.equalized},
          {"isolated_extremes", r.isolated_extremes},
          {"variety_dimension", r.variety_dimension},
          {"component_model_verified", r.component_model_verified},
          {"notes", r.notes},
          {"level_multiplicities", r.level_multiplicities()},
          {"components", comps}};
}

Json to_json(const OrbitGraph& g, const ActionReport& r) {
  Json nodes = Json::array();
  for (std::size_t c = 0; c < r.components.size(); ++c)
    nodes.push_back({{"component", c},
                     {"level", r.components[c].level},
                     {"size", r.components[c].weights.size()},
                     {"dim", r.components[c].dim}});
  Json edges = Json::array();
  for (const auto& e : g.edges)
    edges.push_back(
        {{"from", e.from}, {"to", e.to}, {"degree", e.degree}, {"multiplicity", e.multiplicity}});
  return {{"nodes", nodes}, {"edges", edges}, {"curve_count", g.curves.size()}};
}

namespace {

Json chamber_json(const Chamber& c) {
  return {{"lower", to_json(c.lower)},
          {"upper", to_json(c.upper)},
          {"sample", to_json(c.sample)},
          {"vertex_count", c.vertex_count},
          {"ray_count", c.ray_count},
          {"extremal", c.extremal},
          {"slice_vertices", to_json(c.slice.polytope.vertices())}};
}

}  // namespace

Json to_json(const ChamberReport& c) {
  Json chambers = Json::array();
  Json counts = Json::array();
  for (const auto& ch : c.chambers) {
    chambers.push_back(chamber_json(ch));
    counts.push_back(ch.vertex_count);
  }
  Json levels = Json::array();
  for (const auto& l : c.critical_levels) levels.push_back(to_json(l));
  return {{"critical_levels", levels},
          {"offset", to_json(c.offset)},
          {"chambers", chambers},
          {"slice_vertex_counts", counts}};
}

Json to_json(const BirationalSummary& s) {
  return {{"sink_slice_vertices", to_json(s.sink_slice.polytope.vertices())},
          {"source_slice_vertices", to_json(s.source_slice.polytope.vertices())},
          {"sink_rays", s.sink_rays},
          {"source_rays", s.source_rays},
          {"isomorphic", s.combinatorially_isomorphic}};
}

Json to_json(const BispecialType& t) {
  return {{"m_minus", t.m_minus}, {"m_plus", t.m_plus},     {"r_minus", t.r_minus},
          {"r_plus", t.r_plus},   {"mu_minus", t.mu_minus()}, {"mu_plus", t.mu_plus()}};
}

Json to_json(const CurveClassTable& t) {
  Json rows = Json::object();
  for (const auto& [name, r] : t.rows) rows[name] = to_json(r);
  return {{"basis", {"H", "Y-", "Y+"}}, {"rows", rows}, {"mori_generators", t.mori_generators}};
}

Json to_json(const ConeBundle& b) {
  Json j = {{"nef", to_json(b.nef.generators())}, {"mori", to_json(b.mori.generators())}};
  if (b.mov) j["mov"] = to_json(b.mov->generators());
  return j;
}

Json to_json(const ChamberCheckReport& r) {
  Json j = {{"nef_in_mov", r.nef_in_mov},
            {"interiors_disjoint", r.interiors_disjoint},
            {"samples", r.samples},
            {"samples_covered", r.samples_covered},
            {"seed", r.seed},
            {"violations", r.violations},
            {"passed", r.passed()}};
  if (r.witness) j["witness"] = to_json(*r.witness);
  return j;
}

Json to_json(const ContractionVerdict& v) {
  Json j = {{"case", v.case_label},
            {"roles_swapped", v.roles_swapped},
            {"supporting_divisor", to_json(v.supporting_divisor)},
            {"contracted_rays", v.contracted_rays},
            {"target_picard_rank", v.target_picard_rank},
            {"smooth", v.smooth},
            {"bandwidth_L_gamma", to_json(v.bandwidth_L_gamma)},
            {"k_negativity_bounds",
             {{"minus_K_dot_ell_minus_at_least", v.k_negativity_bounds.first},
              {"minus_K_dot_ell_plus_at_least", v.k_negativity_bounds.second}}}};
  if (v.face_divisor) j["face_divisor"] = to_json(*v.face_divisor);
  return j;
}

Json envelope(const std::string& command, Json inputs, Json payload) {
  return {{"schema_version", kSchemaVersion},
          {"command", command},
          {"inputs", std::move(inputs)},
          {"payload", std::move(payload)}};
}

std::string to_dot(const OrbitGraph& g, const ActionReport& r, const std::string& title) {
  std::ostringstream os;
  os << "digraph \"" << title << "\" {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle];\n";
  // Higher levels first so the flow reads right to left, sink rightmost.
  std::vector<std::size_t> order(r.components.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return r.components[a].level > r.components[b].level;
  });
  for (std::size_t c : order) {
    const auto& comp = r.components[c];
    std::string label = std::to_string(comp.level) + ":" + std::to_string(comp.weights.size()) +
                        ":" + std::to_string(comp.dim);
    os << "  subgraph cluster_" << c << " {\n";
    os << "    label=\"" << label << "\";\n";
    for (std::size_t p = 0; p < g.points.size(); ++p)
      if (g.point_component[p] == c)
        os << "    p" << p << " [label=\"" << label << "\", tooltip=\"" << to_string(g.points[p])
           << "\"];\n";
    os << "  }\n";
  }
  for (const auto& curve : g.curves)
    os << "  p" << curve.upper << " -> p" << curve.lower << " [label=\"" << curve.degree
       << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace cstar
