#include "cstar/rhaction.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace cstar {

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

RationalVector simple_coefficients(const RootSystem& rs, const RationalVector& v) {
  const std::size_t n = rs.simple_roots.size();
  std::vector<RationalVector> gram(n, RationalVector(n));
  RationalVector rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) gram[i][j] = dot(rs.simple_roots[i], rs.simple_roots[j]);
    rhs[i] = dot(rs.simple_roots[i], v);
  }
  return solve(gram, rhs);
}

// Each factor's highest weight must be zero or a single fundamental weight
// that is minuscule or cominuscule.
bool minuscule_or_cominuscule(const RootSystem& rs, const Weight& hw) {
  std::size_t start = 0;
  for (auto [family, r] : rs.factors) {
    const std::size_t end = start + static_cast<std::size_t>(r);
    std::vector<std::size_t> nonzero;
    for (std::size_t j = start; j < end; ++j) {
      Rational a = coroot_pairing(hw, rs.simple_roots[j]);
      if (a != 0) {
        if (a != 1) return false;
        nonzero.push_back(j);
      }
    }
    if (nonzero.size() > 1) return false;
    if (nonzero.size() == 1) {
      const std::size_t node = nonzero[0];
      bool minuscule = true;
      Rational best_height = -1;
      Rational theta_coeff = 0;
      for (const auto& alpha : rs.positive_roots) {
        auto c = simple_coefficients(rs, alpha);
        bool in_factor = true;
        for (std::size_t j = 0; j < c.size(); ++j)
          if ((j < start || j >= end) && c[j] != 0) in_factor = false;
        if (!in_factor) continue;
        if (abs(coroot_pairing(hw, alpha)) > 1) minuscule = false;
        Rational height = std::accumulate(c.begin(), c.end(), Rational(0));
        if (height > best_height) {
          best_height = height;
          theta_coeff = c[node];
        }
      }
      if (!minuscule && theta_coeff != 1) return false;
    }
    start = end;
  }
  return true;
}

std::string node_name(const RootSystem& rs, int i) {
  return rs.label() + "(" + std::to_string(i) + ")";
}

long to_long(const Rational& q) {
  if (q.get_den() != 1) throw DomainError("expected an integer, got " + to_string(q));
  return q.get_num().get_si();
}

bool component_less(const FixedComponent& a, const FixedComponent& b) {
  if (a.level != b.level) return a.level < b.level;
  if (a.weights.size() != b.weights.size()) return a.weights.size() < b.weights.size();
  return a.weights.front() < b.weights.front();
}

struct Levels {
  std::vector<long> level;
};

Levels compute_levels(const std::vector<Weight>& points, const Cocharacter& lambda) {
  std::vector<Rational> pairing;
  for (const auto& w : points) {
    if (w.size() != lambda.size())
      throw DomainError("cocharacter has " + std::to_string(lambda.size()) +
                        " coordinates, expected " + std::to_string(w.size()));
    pairing.push_back(dot(lambda, w));
  }
  auto [lo, hi] = std::minmax_element(pairing.begin(), pairing.end());
  if (*lo == *hi) throw DomainError("trivial action");
  Levels out;
  for (const auto& p : pairing) {
    Rational shifted = p - *lo;
    if (shifted.get_den() != 1) throw DomainError("cocharacter not adapted to orbit");
    out.level.push_back(shifted.get_num().get_si());
  }
  return out;
}

}  // namespace

std::vector<RationalVector> tangent_roots(const RootSystem& rs, const Weight& w) {
  std::vector<RationalVector> out;
  for (const auto& alpha : rs.roots())
    if (coroot_pairing(w, alpha) > 0) out.push_back(alpha);
  return out;
}

HomogeneousModel make_model(const RootSystem& rs, const Weight& highest_weight, std::string name) {
  HomogeneousModel m;
  m.root_system = rs;
  m.highest_weight = normalize_weight(rs, highest_weight);
  m.orbit = weyl_orbit(rs, m.highest_weight);
  m.name = std::move(name);
  const auto roots = rs.roots();
  auto count = [&](const Weight& w) {
    return static_cast<int>(std::count_if(roots.begin(), roots.end(), [&](const auto& a) {
      return coroot_pairing(w, a) > 0;
    }));
  };
  m.dimension = count(m.orbit.front());
  for (const auto& w : m.orbit)
    if (count(w) != m.dimension)
      throw DomainError("tangent-root count is not constant on the orbit of " + m.name);
  m.component_model_verified = minuscule_or_cominuscule(rs, m.highest_weight);
  return m;
}

HomogeneousModel make_model(const RootSystem& rs, int weight_index) {
  return make_model(rs, fundamental_weight(rs, weight_index), node_name(rs, weight_index));
}

std::vector<long> ActionReport::level_multiplicities() const {
  std::vector<long> mult(static_cast<std::size_t>(bandwidth + 1), 0);
  for (const auto& c : components) mult[static_cast<std::size_t>(c.level)] += static_cast<long>(c.weights.size());
  return mult;
}

std::vector<const FixedComponent*> ActionReport::at_level(long level) const {
  std::vector<const FixedComponent*> out;
  for (const auto& c : components)
    if (c.level == level) out.push_back(&c);
  return out;
}

void finalize_report(ActionReport& report) {
  std::sort(report.components.begin(), report.components.end(), component_less);
  std::set<long> levels;
  for (const auto& c : report.components) levels.insert(c.level);
  if (levels.empty()) throw DomainError("report without fixed components");
  report.bandwidth = *levels.rbegin() - *levels.begin();
  report.criticality = static_cast<long>(levels.size()) - 1;
  auto sinks = report.at_level(*levels.begin());
  auto sources = report.at_level(*levels.rbegin());
  auto isolated = [](const std::vector<const FixedComponent*>& cs) {
    return cs.size() == 1 && cs.front()->dim == 0 && cs.front()->weights.size() == 1;
  };
  report.isolated_extremes = isolated(sinks) && isolated(sources);
}

ActionReport analyze(const HomogeneousModel& model, const Cocharacter& lambda) {
  const auto& rs = model.root_system;
  const auto& pts = model.orbit;
  const Levels lv = compute_levels(pts, lambda);

  std::map<Weight, std::size_t> index;
  for (std::size_t i = 0; i < pts.size(); ++i) index.emplace(pts[i], i);

  std::vector<std::vector<RationalVector>> tangents;
  for (const auto& w : pts) tangents.push_back(tangent_roots(rs, w));

  DisjointSets sets(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (const auto& alpha : tangents[i])
      if (dot(lambda, alpha) == 0) sets.unite(i, index.at(reflect(pts[i], alpha)));

  ActionReport report;
  report.variety_dimension = model.dimension;
  report.component_model_verified = model.component_model_verified;
  if (!model.component_model_verified) report.notes.push_back("component model unverified");
  report.equalized = true;

  std::map<std::size_t, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < pts.size(); ++i) members[sets.find(i)].push_back(i);

  for (const auto& [root, idx] : members) {
    FixedComponent comp;
    comp.level = lv.level[idx.front()];
    std::set<std::pair<std::size_t, std::size_t>> internal;
    bool first = true;
    for (auto i : idx) {
      int zero = 0, up = 0, down = 0;
      for (const auto& alpha : tangents[i]) {
        Rational weight = dot(lambda, alpha);
        std::size_t j = index.at(reflect(pts[i], alpha));
        if (weight == 0) {
          ++zero;
          if (internal.insert({std::min(i, j), std::max(i, j)}).second)
            comp.internal_edge_degrees.push_back(to_long(coroot_pairing(pts[i], alpha)));
          continue;
        }
        if (abs(weight) != 1) report.equalized = false;
        if (lv.level[j] < lv.level[i])
          ++down;
        else
          ++up;
      }
      if (first) {
        comp.dim = zero;
        comp.nu_plus = up;
        comp.nu_minus = down;
        first = false;
      } else if (comp.dim != zero || comp.nu_plus != up || comp.nu_minus != down) {
        throw DomainError("tangent sign counts differ within a fixed component");
      }
      comp.weights.push_back(pts[i]);
    }
    std::sort(comp.weights.begin(), comp.weights.end());
    std::sort(comp.internal_edge_degrees.begin(), comp.internal_edge_degrees.end());
    report.components.push_back(std::move(comp));
  }
  finalize_report(report);
  return report;
}

OrbitGraph orbit_graph(const HomogeneousModel& model, const Cocharacter& lambda) {
  ActionReport report = analyze(model, lambda);
  if (!report.equalized) throw DomainError("AM-FM degree formula requires equalized action");

  OrbitGraph g;
  std::map<Weight, std::size_t> index;
  for (std::size_t c = 0; c < report.components.size(); ++c) {
    g.component_level.push_back(report.components[c].level);
    for (const auto& w : report.components[c].weights) {
      index.emplace(w, g.points.size());
      g.points.push_back(w);
      g.point_component.push_back(c);
    }
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::map<std::tuple<std::size_t, std::size_t, long>, long> aggregated;
  for (std::size_t i = 0; i < g.points.size(); ++i) {
    for (const auto& alpha : tangent_roots(model.root_system, g.points[i])) {
      if (dot(lambda, alpha) == 0) continue;
      std::size_t j = index.at(reflect(g.points[i], alpha));
      if (!seen.insert({std::min(i, j), std::max(i, j)}).second) continue;
      long li = g.component_level[g.point_component[i]];
      long lj = g.component_level[g.point_component[j]];
      OrbitCurve curve{li < lj ? i : j, li < lj ? j : i, to_long(coroot_pairing(g.points[i], alpha))};
      g.curves.push_back(curve);
      ++aggregated[{g.point_component[curve.lower], g.point_component[curve.upper], curve.degree}];
    }
  }
  for (const auto& [key, mult] : aggregated) {
    auto [from, to, degree] = key;
    g.edges.push_back(OrbitEdge{from, to, degree, mult});
  }
  return g;
}

ActionReport point_report() {
  ActionReport r;
  FixedComponent c;
  c.weights.push_back(RationalVector{});
  r.components.push_back(c);
  r.equalized = true;
  finalize_report(r);
  return r;
}

ActionReport product(const ActionReport& a, const ActionReport& b) {
  ActionReport out;
  out.variety_dimension = a.variety_dimension + b.variety_dimension;
  out.equalized = a.equalized && b.equalized;
  out.component_model_verified = a.component_model_verified && b.component_model_verified;
  out.notes = a.notes;
  for (const auto& n : b.notes)
    if (std::find(out.notes.begin(), out.notes.end(), n) == out.notes.end()) out.notes.push_back(n);
  for (const auto& ca : a.components) {
    for (const auto& cb : b.components) {
      FixedComponent c;
      c.level = ca.level + cb.level;
      c.dim = ca.dim + cb.dim;
      c.nu_plus = ca.nu_plus + cb.nu_plus;
      c.nu_minus = ca.nu_minus + cb.nu_minus;
      for (const auto& wa : ca.weights)
        for (const auto& wb : cb.weights) c.weights.push_back(direct_sum(wa, wb));
      std::sort(c.weights.begin(), c.weights.end());
      // an invariant curve of one factor times a fixed point of the other
      for (long d : ca.internal_edge_degrees)
        c.internal_edge_degrees.insert(c.internal_edge_degrees.end(), cb.weights.size(), d);
      for (long d : cb.internal_edge_degrees)
        c.internal_edge_degrees.insert(c.internal_edge_degrees.end(), ca.weights.size(), d);
      std::sort(c.internal_edge_degrees.begin(), c.internal_edge_degrees.end());
      out.components.push_back(std::move(c));
    }
  }
  finalize_report(out);
  return out;
}

std::pair<HomogeneousModel, Cocharacter> quadric_preset(int k) {
  if (k < 3) throw DomainError("quadric dimension must be at least 3");
  const bool odd = k % 2 == 1;
  const int rank = odd ? (k + 1) / 2 : (k + 2) / 2;
  RootSystem rs = build_root_system(odd ? Family::B : Family::D, rank);
  HomogeneousModel m = make_model(rs, 1);
  m.name = "Q" + std::to_string(k);
  return {m, RationalVector::unit(rs.ambient_dim, 0)};
}

std::pair<HomogeneousModel, Cocharacter> projective_line_preset() {
  RootSystem rs = build_root_system(Family::A, 1);
  HomogeneousModel m = make_model(rs, 1);
  m.name = "P1";
  return {m, RationalVector::from_ints({1, 0})};
}

std::vector<std::string> catalog_names() {
  return {"C3(3)", "A5(3)", "D6(6)", "E7(7)", "P1xQ[n]"};
}

CatalogEntry catalog(std::string_view name) {
  const Rational half(1, 2);
  if (name == "C3(3)") {
    RootSystem rs = build_root_system(Family::C, 3);
    return {make_model(rs, 3), RationalVector{half, half, half}, {}};
  }
  if (name == "A5(3)") {
    RootSystem rs = build_root_system(Family::A, 5);
    return {make_model(rs, 3), RationalVector::from_ints({1, 1, 1, 0, 0, 0}), {}};
  }
  if (name == "D6(6)") {
    RootSystem rs = build_root_system(Family::D, 6);
    return {make_model(rs, 6), RationalVector{half, half, half, half, half, half}, {}};
  }
  if (name == "E7(7)") {
    RootSystem rs = build_root_system(Family::E7, 7);
    return {make_model(rs, 7), fundamental_coweight(rs, 7), {}};
  }
  const std::string_view prefix = "P1xQ[";
  if (name.substr(0, prefix.size()) == prefix && name.size() > prefix.size() + 1 &&
      name.back() == ']') {
    std::string digits(name.substr(prefix.size(), name.size() - prefix.size() - 1));
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit) && digits.size() < 4) {
      int k = std::stoi(digits);
      if (k < 4) throw DomainError("P1xQ[n] requires n >= 4");
      auto line = projective_line_preset();
      auto quadric = quadric_preset(k);
      RootSystem rs = direct_sum(line.first.root_system, quadric.first.root_system);
      HomogeneousModel m = make_model(
          rs, direct_sum(line.first.highest_weight, quadric.first.highest_weight),
          std::string(name));
      return {m, direct_sum(line.second, quadric.second), {line, quadric}};
    }
  }
  std::string valid;
  for (const auto& n : catalog_names()) valid += (valid.empty() ? "" : ", ") + n;
  throw DomainError("unknown catalogue name '" + std::string(name) + "'; valid names: " + valid);
}

}  // namespace cstar
