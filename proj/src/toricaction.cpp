#include "cstar/toricaction.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <tuple>

namespace cstar {

namespace {

std::vector<Rational> vertex_pairings(const PolarizedToric& t, const RationalVector& lambda) {
  if (lambda.size() != t.polytope.ambient_dim())
    throw DomainError("cocharacter has " + std::to_string(lambda.size()) +
                      " coordinates, expected " + std::to_string(t.polytope.ambient_dim()));
  if (lambda.is_zero()) throw DomainError("trivial action");
  std::vector<Rational> val;
  for (const auto& v : t.polytope.vertices()) {
    Rational p = dot(lambda, v);
    if (p.get_den() != 1) throw DomainError("non-integral vertex pairings");
    val.push_back(p);
  }
  return val;
}

// Cayley polytope of P(O(a_0) + ... + O(a_{k-1})) over P^1: the segments
// [0, a_i] placed over the vertices of the standard (k-1)-simplex.
LatticePolytope cayley(const std::vector<long>& degrees) {
  const std::size_t k = degrees.size();
  std::vector<RationalVector> pts;
  for (std::size_t i = 0; i < k; ++i) {
    RationalVector base(k);  // (x, f_i)
    if (i > 0) base[i] = 1;
    pts.push_back(base);
    RationalVector top = base;
    top[0] = degrees[i];
    pts.push_back(top);
  }
  return LatticePolytope::hull(pts);
}

std::optional<int> bracket_arg(std::string_view name, std::string_view prefix) {
  if (name.substr(0, prefix.size()) != prefix || name.size() < prefix.size() + 2 ||
      name.back() != ']')
    return std::nullopt;
  std::string digits(name.substr(prefix.size(), name.size() - prefix.size() - 1));
  if (digits.empty() || digits.size() > 3 ||
      !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
    return std::nullopt;
  return std::stoi(digits);
}

struct Analysis {
  ActionReport report;
  std::vector<std::size_t> vertex_component;  // indices into report.components
};

Analysis run_analysis(const PolarizedToric& t, const RationalVector& lambda) {
  const auto val = vertex_pairings(t, lambda);
  const auto& poly = t.polytope.polytope();
  const auto& verts = poly.vertices();
  const auto faces = constant_faces(t.polytope, lambda);
  const auto edges = poly.edges();

  std::vector<std::size_t> face_of(verts.size(), faces.size());
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (auto v : faces[f].vertex_indices) {
      if (face_of[v] != faces.size())
        throw DomainError("non-smooth toric fixed geometry: vertex in two fixed faces");
      face_of[v] = f;
    }

  ActionReport report;
  report.variety_dimension = static_cast<int>(t.polytope.dimension());
  report.equalized = true;
  for (auto [a, b] : edges) {
    if (val[a] == val[b]) continue;
    Rational w = dot(lambda, primitive(verts[b] - verts[a]));
    if (abs(w) != 1) report.equalized = false;
  }

  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& face = faces[f];
    FixedComponent comp;
    comp.level = face.level.get_num().get_si();
    comp.dim = static_cast<int>(face.face.dimension());
    bool first = true;
    for (auto v : face.vertex_indices) {
      int up = 0, down = 0;
      for (auto [a, b] : edges) {
        if (a != v && b != v) continue;
        std::size_t other = a == v ? b : a;
        if (face_of[other] == f) continue;
        if (val[other] > val[v])
          ++up;
        else if (val[other] < val[v])
          ++down;
        else
          throw DomainError("non-smooth toric fixed geometry: constant edge leaves a fixed face");
      }
      if (first) {
        comp.nu_plus = up;
        comp.nu_minus = down;
        first = false;
      } else if (comp.nu_plus != up || comp.nu_minus != down) {
        throw DomainError("non-smooth toric fixed geometry");
      }
      comp.weights.push_back(verts[v]);
    }
    for (auto [a, b] : edges)
      if (face_of[a] == f && face_of[b] == f)
        comp.internal_edge_degrees.push_back(lattice_length(verts[a], verts[b]));
    std::sort(comp.weights.begin(), comp.weights.end());
    std::sort(comp.internal_edge_degrees.begin(), comp.internal_edge_degrees.end());
    report.components.push_back(std::move(comp));
  }
  finalize_report(report);

  std::map<RationalVector, std::size_t> comp_of_point;
  for (std::size_t c = 0; c < report.components.size(); ++c)
    for (const auto& w : report.components[c].weights) comp_of_point[w] = c;
  Analysis out{std::move(report), {}};
  for (const auto& v : verts) out.vertex_component.push_back(comp_of_point.at(v));
  return out;
}

}  // namespace

PolarizedToric make_toric(LatticePolytope polytope, std::string name) {
  if (polytope.dimension() != polytope.ambient_dim())
    throw DomainError("polytope is not full-dimensional in its lattice");
  return PolarizedToric{std::move(polytope), std::move(name)};
}

std::vector<std::string> toric_preset_names() {
  return {"cube", "square", "projbundle13[n]", "projbundle122[n]"};
}

PolarizedToric toric_preset(std::string_view name) {
  if (name == "cube") {
    std::vector<RationalVector> pts;
    for (long x : {0, 1})
      for (long y : {0, 1})
        for (long z : {0, 1}) pts.push_back(RationalVector::from_ints({x, y, z}));
    return make_toric(LatticePolytope::hull(pts), "cube");
  }
  if (name == "square") {
    std::vector<RationalVector> pts;
    for (long x : {0, 1})
      for (long y : {0, 1}) pts.push_back(RationalVector::from_ints({x, y}));
    return make_toric(LatticePolytope::hull(pts), "square");
  }
  for (auto [prefix, twos] : {std::pair<std::string_view, bool>{"projbundle13[", false},
                              std::pair<std::string_view, bool>{"projbundle122[", true}}) {
    auto n = bracket_arg(name, prefix);
    if (!n) continue;
    if (*n < 3 || *n > 8) throw DomainError("projective bundle presets need 3 <= n <= 8");
    std::vector<long> degrees(static_cast<std::size_t>(*n), 1);
    if (twos) {
      degrees[0] = 2;
      degrees[1] = 2;
    } else {
      degrees[0] = 3;
    }
    return make_toric(cayley(degrees), std::string(name));
  }
  std::string valid;
  for (const auto& n : toric_preset_names()) valid += (valid.empty() ? "" : ", ") + n;
  throw DomainError("unknown toric preset '" + std::string(name) + "'; valid names: " + valid);
}

ActionReport toric_analyze(const PolarizedToric& t, const RationalVector& lambda) {
  return run_analysis(t, lambda).report;
}

OrbitGraph toric_orbit_graph(const PolarizedToric& t, const RationalVector& lambda) {
  auto analysis = run_analysis(t, lambda);
  if (!analysis.report.equalized)
    throw DomainError("AM-FM degree formula requires equalized action");
  const auto& verts = t.polytope.vertices();
  OrbitGraph g;
  g.points = verts;
  g.point_component = analysis.vertex_component;
  for (const auto& c : analysis.report.components) g.component_level.push_back(c.level);
  std::map<std::tuple<std::size_t, std::size_t, long>, long> aggregated;
  for (auto [a, b] : t.polytope.polytope().edges()) {
    std::size_t ca = g.point_component[a], cb = g.point_component[b];
    if (ca == cb) continue;
    bool a_low = g.component_level[ca] < g.component_level[cb];
    OrbitCurve curve{a_low ? a : b, a_low ? b : a, lattice_length(verts[a], verts[b])};
    g.curves.push_back(curve);
    ++aggregated[{g.point_component[curve.lower], g.point_component[curve.upper], curve.degree}];
  }
  for (const auto& [key, mult] : aggregated) {
    auto [from, to, degree] = key;
    g.edges.push_back(OrbitEdge{from, to, degree, mult});
  }
  return g;
}

SlicePolytope quotient_slice(const PolarizedToric& t, const RationalVector& lambda,
                             const Rational& shifted_level) {
  const auto val = vertex_pairings(t, lambda);
  const Rational offset = *std::min_element(val.begin(), val.end());
  return slice_polytope(t.polytope, lambda, shifted_level + offset);
}

ChamberReport git_chambers(const PolarizedToric& t, const RationalVector& lambda) {
  const auto val = vertex_pairings(t, lambda);
  ActionReport report = toric_analyze(t, lambda);
  ChamberReport out;
  out.offset = *std::min_element(val.begin(), val.end());
  std::set<long> levels;
  for (const auto& c : report.components) levels.insert(c.level);
  for (long l : levels) out.critical_levels.emplace_back(l);
  for (std::size_t i = 0; i + 1 < out.critical_levels.size(); ++i) {
    Chamber ch;
    ch.lower = out.critical_levels[i];
    ch.upper = out.critical_levels[i + 1];
    ch.sample = (ch.lower + ch.upper) / 2;
    ch.slice = slice_polytope(t.polytope, lambda, ch.sample + out.offset);
    ch.vertex_count = ch.slice.polytope.vertex_count();
    ch.ray_count = normal_fan_rays(ch.slice).size();
    ch.extremal = i == 0 || i + 2 == out.critical_levels.size();
    out.chambers.push_back(std::move(ch));
  }
  return out;
}

BirationalSummary birational_summary(const PolarizedToric& t, const RationalVector& lambda) {
  ChamberReport chambers = git_chambers(t, lambda);
  if (chambers.chambers.empty()) throw DomainError("criticality must be at least 1");
  const Chamber& sink = chambers.chambers.front();
  const Chamber& source = chambers.chambers.back();
  BirationalSummary s{sink.slice, source.slice, sink.ray_count, source.ray_count, false};
  s.combinatorially_isomorphic =
      sink.ray_count == source.ray_count &&
      combinatorially_isomorphic(sink.slice.polytope, source.slice.polytope);
  return s;
}

}  // namespace cstar
