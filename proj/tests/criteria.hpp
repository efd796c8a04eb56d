#pragma once

// The seven acceptance criteria as plain functions. Each returns whether it
// holds plus a short account of what was compared.

#include "cstar/realization.hpp"
#include "cstar/rhaction.hpp"
#include "cstar/toricaction.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace criteria {

using namespace cstar;

struct Result {
  bool ok = true;
  std::vector<std::string> failures;
  std::string summary;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }
};

inline RationalVector ones(std::size_t n) {
  RationalVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = 1;
  return v;
}

inline const std::vector<std::pair<long, long>>& table_types() {
  static const std::vector<std::pair<long, long>> t{{2, 2}, {2, 3}, {3, 2},
                                                    {4, 3}, {2, 1}, {3, 1}};
  return t;
}

struct ToricCase {
  std::string name;
  RationalVector lambda;
};

inline std::vector<ToricCase> toric_cases() {
  std::vector<ToricCase> out{{"cube", ones(3)}, {"square", ones(2)}};
  for (int n = 3; n <= 8; ++n) {
    out.push_back({"projbundle13[" + std::to_string(n) + "]", ones(n)});
    out.push_back({"projbundle122[" + std::to_string(n) + "]", ones(n)});
  }
  return out;
}

inline std::vector<std::string> catalogue_cases() {
  return {"C3(3)", "A5(3)", "D6(6)", "E7(7)", "P1xQ[4]", "P1xQ[5]", "P1xQ[6]"};
}

inline Result cremona_cube() {
  Result r;
  auto cube = toric_preset("cube");
  auto l = ones(3);
  auto rep = toric_analyze(cube, l);
  r.expect(rep.components.size() == 8, "8 fixed points");
  r.expect(rep.level_multiplicities() == std::vector<long>{1, 3, 3, 1}, "multiplicities (1,3,3,1)");
  r.expect(rep.bandwidth == 3, "bandwidth 3");
  r.expect(rep.criticality == 3, "criticality 3");
  r.expect(rep.equalized, "equalized");
  auto ch = git_chambers(cube, l);
  std::vector<std::size_t> counts;
  for (const auto& c : ch.chambers) counts.push_back(c.vertex_count);
  r.expect(counts == std::vector<std::size_t>{3, 6, 3}, "slice vertex counts [3,6,3]");
  r.expect(birational_summary(cube, l).combinatorially_isomorphic, "isomorphic extremal quotients");
  r.summary = "8 points (1,3,3,1), bandwidth 3, criticality 3, slices [3,6,3], triangles isomorphic";
  return r;
}

inline Result catalogue() {
  Result r;
  struct Expect {
    const char* name;
    long inner;
    int dim;
    int inner_dim;
    long degree;
  };
  for (auto e : {Expect{"C3(3)", 3, 6, 2, 2}, Expect{"A5(3)", 9, 9, 4, 1},
                 Expect{"D6(6)", 15, 15, 8, 1}, Expect{"E7(7)", 27, 27, 16, 1}}) {
    std::string n = e.name;
    auto entry = catalog(e.name);
    auto rep = analyze(entry.model, entry.lambda);
    r.expect(rep.bandwidth == 3, n + " bandwidth 3");
    r.expect(rep.equalized, n + " equalized");
    r.expect(rep.isolated_extremes, n + " isolated extremes");
    r.expect(rep.level_multiplicities() == std::vector<long>{1, e.inner, e.inner, 1},
             n + " inner multiplicities");
    r.expect(entry.model.dimension == e.dim && rep.variety_dimension == e.dim, n + " dimension");
    for (long lvl : {1L, 2L}) {
      auto comps = rep.at_level(lvl);
      r.expect(comps.size() == 1, n + " one component per inner level");
      for (const auto* c : comps) {
        r.expect(c->dim == e.inner_dim, n + " inner dimension");
        r.expect(!c->internal_edge_degrees.empty(), n + " inner curves present");
        for (long d : c->internal_edge_degrees) r.expect(d == e.degree, n + " inner curve degree");
      }
    }
  }
  r.summary = "C3(3) A5(3) D6(6) E7(7): (3,3) (9,9) (15,15) (27,27), dims 6 9 15 27, inner 2 4 8 16";
  return r;
}

inline Result product_case() {
  Result r;
  auto entry = catalog("P1xQ[4]");
  auto rep = analyze(entry.model, entry.lambda);
  r.expect(rep.bandwidth == 3, "bandwidth 3");
  for (long lvl : {1L, 2L}) {
    auto comps = rep.at_level(lvl);
    r.expect(comps.size() == 2, "two components at level " + std::to_string(lvl));
    if (comps.size() == 2) {
      int a = comps[0]->dim, b = comps[1]->dim;
      r.expect(std::min(a, b) == 0 && std::max(a, b) == 2, "a point and a 2-dimensional quadric");
    }
  }
  r.summary = "P1 x Q4: bandwidth 3, each inner level is a point plus a 2-dim component";
  return r;
}

inline Result table_reproduction() {
  Result r;
  for (auto [a, b] : table_types()) {
    auto t = make_type(a, b);
    auto bundle = cones(t);
    std::string tag = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    for (Variety v : kVarieties) {
      r.expect(bundle.at(v).nef.generators() == oracle::table_nef(t, v),
               "Nef(" + variety_name(v) + ") " + tag);
      r.expect(bundle.at(v).mori.generators() == oracle::table_mori(t, v),
               "Mori(" + variety_name(v) + ") " + tag);
    }
    r.expect(bundle.at(Variety::X).mov->generators() == oracle::listed_mov(t), "Mov(X) " + tag);
  }
  r.summary = "Nef/Mori of P, P-, P+, X and Mov(X) equal the listed generators for 6 types";
  return r;
}

inline Result chamber_decomposition() {
  Result r;
  for (auto [a, b] : table_types()) {
    auto rep = chamber_check(make_type(a, b), 1000, 20240601);
    std::string tag = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    r.expect(rep.nef_in_mov, "Nef cones inside Mov " + tag);
    r.expect(rep.interiors_disjoint, "disjoint interiors " + tag);
    r.expect(rep.samples == 1000 && rep.samples_covered == 1000, "1000 samples covered " + tag);
  }
  r.summary = "6 types x 1000 seeded Mov(X) samples covered; interiors pairwise disjoint";
  return r;
}

inline Result contraction() {
  Result r;
  auto v22 = contraction_analysis(make_type(2, 2));
  r.expect(v22.bandwidth_L_gamma == 3 && v22.smooth, "(2,2): L.gamma = 3, smooth");
  auto v32 = contraction_analysis(make_type(3, 2));
  r.expect(v32.bandwidth_L_gamma == 5 && !v32.smooth, "(3,2): L.gamma = 5, not smooth");
  auto v21 = contraction_analysis(make_type(2, 1));
  r.expect(v21.case_label == "mu_plus=0" && v21.target_picard_rank == 2 && v21.smooth,
           "(2,1): mu_plus=0 case, Picard rank 2, smooth");
  r.summary = "(2,2) -> 3 smooth; (3,2) -> 5 singular; (2,1) -> Picard rank 2 smooth";
  return r;
}

// Sub-suites of the property criterion.

inline Result double_duality(int count = 200, std::uint64_t seed = 7) {
  Result r;
  std::mt19937_64 rng(seed);
  int full = 0;
  for (int i = 0; i < count; ++i) {
    const std::size_t d = 2 + static_cast<std::size_t>(i % 3);
    const std::size_t n = 1 + rng() % (2 * d + 1);
    std::vector<RationalVector> gens;
    for (std::size_t k = 0; k < n; ++k) {
      RationalVector g(d);
      for (std::size_t j = 0; j < d; ++j) g[j] = static_cast<long>(rng() % 9) - 4;
      gens.push_back(g);
    }
    bool all_zero = std::all_of(gens.begin(), gens.end(), [](const auto& g) { return g.is_zero(); });
    if (all_zero) gens[0][0] = 1;
    auto c = RationalCone::from_generators(gens, d);
    auto dd = dual_cone(dual_cone(c));
    r.expect(dd == c, "dual(dual(C)) == C for cone " + std::to_string(i));
    for (const auto& g : gens) r.expect(c.contains(g), "generator inside cone " + std::to_string(i));
    for (const auto& f : c.facets())
      for (const auto& g : gens) r.expect(dot(f, g) >= 0, "facet valid on cone " + std::to_string(i));
    if (c.is_full_dimensional() && c.is_pointed()) {
      ++full;
      r.expect(c.facets() == oracle::brute_facets(gens, d),
               "facets match brute force for cone " + std::to_string(i));
    }
  }
  r.summary = std::to_string(count) + " random cones in dims 2-4, " + std::to_string(full) +
              " of them also checked against brute-force facets";
  return r;
}

inline std::vector<std::pair<std::string, ActionReport>> all_reports() {
  std::vector<std::pair<std::string, ActionReport>> out;
  for (const auto& n : catalogue_cases()) {
    auto e = catalog(n);
    out.emplace_back(n, analyze(e.model, e.lambda));
  }
  for (const auto& c : toric_cases())
    out.emplace_back(c.name, toric_analyze(toric_preset(c.name), c.lambda));
  return out;
}

inline Result tangent_balance() {
  Result r;
  for (const auto& [name, rep] : all_reports())
    for (const auto& c : rep.components) {
      r.expect(c.nu_plus + c.nu_minus + c.dim == rep.variety_dimension,
               name + ": nu+ + nu- + dim = dim X at level " + std::to_string(c.level));
      if (c.level != 0 && c.level != rep.bandwidth)
        r.expect(c.nu_plus >= 1 && c.nu_minus >= 1,
                 name + ": nu+- >= 1 at inner level " + std::to_string(c.level));
    }
  return r;
}

inline Result am_fm() {
  Result r;
  auto check = [&](const std::string& name, const OrbitGraph& g) {
    r.expect(!g.curves.empty(), name + ": has invariant curves");
    for (const auto& c : g.curves) {
      long diff = g.component_level[g.point_component[c.upper]] -
                  g.component_level[g.point_component[c.lower]];
      r.expect(c.degree == diff, name + ": curve degree equals level difference");
    }
  };
  for (const auto& n : catalogue_cases()) {
    auto e = catalog(n);
    check(n, orbit_graph(e.model, e.lambda));
  }
  for (const auto& c : toric_cases()) {
    auto t = toric_preset(c.name);
    if (toric_analyze(t, c.lambda).equalized) check(c.name, toric_orbit_graph(t, c.lambda));
  }
  return r;
}

inline Result slice_constancy() {
  Result r;
  auto cases = toric_cases();
  cases.push_back({"cube", RationalVector::from_ints({1, 1, 2})});
  cases.push_back({"cube", RationalVector::from_ints({1, 2, 3})});
  for (const auto& c : cases) {
    auto t = toric_preset(c.name);
    auto ch = git_chambers(t, c.lambda);
    for (const auto& chamber : ch.chambers) {
      Rational width = chamber.upper - chamber.lower;
      for (Rational s : {Rational(1, 3), Rational(2, 3)}) {
        auto slice = quotient_slice(t, c.lambda, chamber.lower + s * width);
        r.expect(slice.polytope.vertex_count() == chamber.vertex_count,
                 c.name + ": slice vertex count constant in chamber");
        r.expect(normal_fan_rays(slice).size() == chamber.ray_count,
                 c.name + ": normal fan constant in chamber");
      }
    }
  }
  return r;
}

inline Result properties() {
  Result r;
  std::ostringstream summary;
  for (auto [name, sub] : {std::pair<const char*, Result>{"double duality", double_duality()},
                           {"tangent balance", tangent_balance()},
                           {"AM-FM", am_fm()},
                           {"slice constancy", slice_constancy()}}) {
    for (const auto& f : sub.failures) r.expect(false, std::string(name) + ": " + f);
    if (summary.tellp() > 0) summary << "; ";
    summary << name << (sub.ok ? " ok" : " FAILED");
    if (!sub.summary.empty()) summary << " (" << sub.summary << ")";
  }
  r.summary = summary.str();
  return r;
}

}  // namespace criteria
