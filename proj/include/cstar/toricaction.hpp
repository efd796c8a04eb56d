#pragma once

// C*-subactions of polarized toric varieties. The moment polytope carries
// everything: fixed components are the maximal faces on which lambda is
// constant, invariant curves are edges, and the geometric quotient for
// tau in (a_{i-1}, a_i) is the slice of the polytope at <lambda, x> = tau.

#include "cstar/lattice.hpp"
#include "cstar/rhaction.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cstar {

struct PolarizedToric {
  LatticePolytope polytope;
  std::string name;
};

/// Throws unless the polytope is full-dimensional.
PolarizedToric make_toric(LatticePolytope polytope, std::string name);

/// "cube", "square", "projbundle13[n]", "projbundle122[n]" (n >= 3).
PolarizedToric toric_preset(std::string_view name);
std::vector<std::string> toric_preset_names();

/// Fixed points in the returned report are polytope vertices; levels are
/// shifted so the sink sits at 0.
ActionReport toric_analyze(const PolarizedToric& t, const RationalVector& lambda);

/// Components and edges of the polytope between them. Curve degrees are
/// lattice lengths. Requires an equalized action.
OrbitGraph toric_orbit_graph(const PolarizedToric& t, const RationalVector& lambda);

struct Chamber {
  Rational lower;  // shifted levels
  Rational upper;
  Rational sample;  // midpoint, shifted
  SlicePolytope slice;
  std::size_t vertex_count = 0;
  std::size_t ray_count = 0;
  bool extremal = false;
};

struct ChamberReport {
  std::vector<Rational> critical_levels;  // a_0 = 0 < ... < a_r = bandwidth
  std::vector<Chamber> chambers;
  Rational offset;  // min of <lambda, v>; absolute tau = shifted + offset
};

ChamberReport git_chambers(const PolarizedToric& t, const RationalVector& lambda);

/// Slice at the given shifted level.
SlicePolytope quotient_slice(const PolarizedToric& t, const RationalVector& lambda,
                             const Rational& shifted_level);

struct BirationalSummary {
  SlicePolytope sink_slice;    // first chamber
  SlicePolytope source_slice;  // last chamber
  std::size_t sink_rays = 0;
  std::size_t source_rays = 0;
  bool combinatorially_isomorphic = false;
};

BirationalSummary birational_summary(const PolarizedToric& t, const RationalVector& lambda);

}  // namespace cstar
