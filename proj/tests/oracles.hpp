#pragma once

// Independent reference computations shared by the unit tests and the
// acceptance binary. Nothing here calls the double description code.

#include "cstar/lattice.hpp"
#include "cstar/realization.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using cstar::Rational;
using cstar::RationalVector;

// Divisor a H + b Y- + c Y+.
inline RationalVector div(Rational a, Rational b, Rational c) { return RationalVector{a, b, c}; }

inline std::vector<RationalVector> canonical(std::vector<RationalVector> gens) {
  for (auto& g : gens) g = cstar::primitive(g);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

// Nef cone generators as printed in the table of Nef and Mori cones, with
// W+- written as Y+-.
inline std::vector<RationalVector> table_nef(const cstar::BispecialType& t, cstar::Variety v) {
  const Rational mm = t.mu_minus(), mp = t.mu_plus();
  const RationalVector H = div(1, 0, 0), Ym = div(0, 1, 0), Yp = div(0, 0, 1);
  switch (v) {
    case cstar::Variety::P:
      return canonical({H, H - Ym, H - Yp});
    case cstar::Variety::PMinus:
      if (mm > 0)
        return canonical({H, H - Yp, H + (1 / mm) * Ym, H + (1 / mm) * Ym - Yp});
      return canonical({H, H - Yp, Ym});
    case cstar::Variety::PPlus:
      if (mp > 0)
        return canonical({H, H - Ym, H + (1 / mp) * Yp, H + (1 / mp) * Yp - Ym});
      return canonical({H, H - Ym, Yp});
    case cstar::Variety::X:
      if (mm > 0 && mp > 0)
        return canonical({H, H + (1 / mm) * Ym, H + (1 / mp) * Yp,
                          H + (1 / mm) * Ym + (1 / mp) * Yp});
      if (mp == 0) return canonical({H, H + (1 / mm) * Ym, Yp});
      return canonical({H, H + (1 / mp) * Yp, Ym});
  }
  return {};
}

// Curve rows entered by hand: the intersection table of X plus the
// exceptional curves of the blowups and the lines in Y+-.
inline std::map<std::string, RationalVector> curve_rows(const cstar::BispecialType& t) {
  return {{"delta-", div(0, 1, 0)},  {"gamma-", div(1, 0, 1)}, {"delta+", div(0, 0, 1)},
          {"gamma+", div(1, 1, 0)},  {"epsilon", div(1, 0, 0)}, {"gamma", div(1, 1, 1)},
          {"e-", div(0, -1, 0)},     {"e+", div(0, 0, -1)},
          {"ell-", div(1, -t.mu_minus(), 0)}, {"ell+", div(1, 0, -t.mu_plus())}};
}

inline std::vector<std::string> table_mori_names(const cstar::BispecialType& t, cstar::Variety v) {
  const bool lm = t.mu_minus() > 0, lp = t.mu_plus() > 0;
  switch (v) {
    case cstar::Variety::P: return {"e-", "e+", "gamma"};
    case cstar::Variety::PMinus:
      return lm ? std::vector<std::string>{"delta-", "e+", "ell-", "gamma-"}
                : std::vector<std::string>{"e+", "delta-", "gamma-"};
    case cstar::Variety::PPlus:
      return lp ? std::vector<std::string>{"delta+", "e-", "ell+", "gamma+"}
                : std::vector<std::string>{"e-", "delta+", "gamma+"};
    case cstar::Variety::X:
      if (lm && lp) return {"delta-", "ell+", "ell-", "delta+"};
      if (!lp) return {"delta-", "ell-", "delta+"};
      return {"delta+", "ell+", "delta-"};
  }
  return {};
}

inline std::vector<RationalVector> table_mori(const cstar::BispecialType& t, cstar::Variety v) {
  auto rows = curve_rows(t);
  std::vector<RationalVector> out;
  for (const auto& n : table_mori_names(t, v)) out.push_back(rows.at(n));
  return canonical(out);
}

// Generators of Mov(X) as listed for the two cases (and the mirror case).
inline std::vector<RationalVector> listed_mov(const cstar::BispecialType& t) {
  const Rational mm = t.mu_minus(), mp = t.mu_plus();
  const RationalVector H = div(1, 0, 0), Ym = div(0, 1, 0), Yp = div(0, 0, 1);
  if (mm > 0 && mp > 0)
    return canonical({H - Ym, H - Yp, H + (1 / mm) * Ym - Yp, H + (1 / mm) * Ym + (1 / mp) * Yp,
                      H - Ym + (1 / mp) * Yp});
  if (mp == 0) return canonical({H - Ym, H - Yp, H + (1 / mm) * Ym - Yp, Yp});
  return canonical({H - Yp, H - Ym, H + (1 / mp) * Yp - Ym, Ym});
}

// Facet normals of the full-dimensional cone spanned by `gens`, found by
// trying every hyperplane through d-1 generators.
inline std::vector<RationalVector> brute_facets(const std::vector<RationalVector>& gens,
                                                std::size_t d) {
  std::set<RationalVector> out;
  const std::size_t n = gens.size();
  std::vector<std::size_t> idx(d - 1);
  auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
    if (depth == d - 1) {
      std::vector<RationalVector> rows;
      for (auto i : idx) rows.push_back(gens[i]);
      auto ns = cstar::nullspace(rows, d);
      if (ns.size() != 1) return;
      for (int sign : {1, -1}) {
        RationalVector a = Rational(sign) * ns[0];
        bool ok = std::all_of(gens.begin(), gens.end(),
                              [&](const RationalVector& g) { return cstar::dot(a, g) >= 0; });
        if (ok) out.insert(cstar::primitive(a));
      }
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      idx[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return {out.begin(), out.end()};
}

// Number of vertices of the slice <lambda, x> = tau of the polytope with
// the given vertices and edges: vertices at level tau plus one crossing
// point per edge passing strictly through tau.
inline std::size_t brute_slice_count(const std::vector<RationalVector>& verts,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                     const RationalVector& lambda, const Rational& tau) {
  std::set<RationalVector> pts;
  for (const auto& v : verts)
    if (cstar::dot(lambda, v) == tau) pts.insert(v);
  for (auto [a, b] : edges) {
    Rational la = cstar::dot(lambda, verts[a]), lb = cstar::dot(lambda, verts[b]);
    if ((la < tau && tau < lb) || (lb < tau && tau < la)) {
      Rational s = (tau - la) / (lb - la);
      pts.insert(verts[a] + s * (verts[b] - verts[a]));
    }
  }
  return pts.size();
}

// Edges of the unit cube [0,1]^n: vertex pairs differing in one coordinate.
inline std::vector<std::pair<std::size_t, std::size_t>> hypercube_edges(
    const std::vector<RationalVector>& verts) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      int diff = 0;
      for (std::size_t k = 0; k < verts[i].size(); ++k) diff += verts[i][k] != verts[j][k];
      if (diff == 1) out.emplace_back(i, j);
    }
  return out;
}

}  // namespace oracle
