#pragma once

// C*-actions on rational homogeneous varieties, modeled on the T-fixed
// points: the Weyl orbit of the highest weight. A cocharacter lambda gives
// each fixed point the level <lambda, w> (shifted so the sink sits at 0).
//
// Tangent directions at w are the roots alpha with <w, alpha^vee> > 0; the
// T-stable curve in direction alpha joins w to s_alpha(w) and has L-degree
// <w, alpha^vee>. Fixed components are the connectivity classes of the
// orbit under reflections in roots orthogonal to lambda.

#include "cstar/lattice.hpp"
#include "cstar/rootsys.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cstar {

using Cocharacter = RationalVector;

struct HomogeneousModel {
  RootSystem root_system;
  Weight highest_weight;
  std::vector<Weight> orbit;
  std::string name;
  int dimension = 0;
  /// False outside the minuscule/cominuscule cases, where the
  /// connectivity-class component model has not been validated.
  bool component_model_verified = true;
};

/// Builds the model and checks that the tangent-root count is the same at
/// every orbit point.
HomogeneousModel make_model(const RootSystem& rs, const Weight& highest_weight, std::string name);
/// Model of the closed orbit for the fundamental weight omega_i, named
/// like "E7(7)".
HomogeneousModel make_model(const RootSystem& rs, int weight_index);

/// Tangent roots at w: alpha with <w, alpha^vee> > 0.
std::vector<RationalVector> tangent_roots(const RootSystem& rs, const Weight& w);

struct FixedComponent {
  long level = 0;
  std::vector<RationalVector> weights;  // fixed points; sorted
  int dim = 0;
  int nu_plus = 0;   // tangent directions toward higher levels
  int nu_minus = 0;  // tangent directions toward lower levels
  std::vector<long> internal_edge_degrees;  // L-degrees of invariant curves inside; sorted
};

struct ActionReport {
  std::vector<FixedComponent> components;  // sorted by (level, size, first weight)
  long bandwidth = 0;
  long criticality = 0;
  bool equalized = false;
  bool isolated_extremes = false;
  int variety_dimension = 0;
  bool component_model_verified = true;
  std::vector<std::string> notes;

  /// Number of fixed points at each level 0..bandwidth.
  std::vector<long> level_multiplicities() const;
  /// Components with the given level.
  std::vector<const FixedComponent*> at_level(long level) const;
};

/// Fills bandwidth, criticality and isolated_extremes and sorts components.
void finalize_report(ActionReport& report);

ActionReport analyze(const HomogeneousModel& model, const Cocharacter& lambda);

struct OrbitCurve {
  std::size_t lower = 0;  // point indices into OrbitGraph::points
  std::size_t upper = 0;
  long degree = 0;        // L-degree of the invariant curve
};

struct OrbitEdge {
  std::size_t from = 0;   // component index, lower level
  std::size_t to = 0;     // component index, higher level
  long degree = 0;
  long multiplicity = 0;
};

struct OrbitGraph {
  std::vector<RationalVector> points;
  std::vector<std::size_t> point_component;
  std::vector<long> component_level;
  std::vector<OrbitCurve> curves;
  std::vector<OrbitEdge> edges;  // curves aggregated by (from, to, degree)
};

/// Requires an equalized action.
OrbitGraph orbit_graph(const HomogeneousModel& model, const Cocharacter& lambda);

/// Fixed components of a product action: pairs of factor components.
ActionReport product(const ActionReport& a, const ActionReport& b);

/// The one-point variety with its trivial action; unit for product().
ActionReport point_report();

struct CatalogEntry {
  HomogeneousModel model;
  Cocharacter lambda;
  /// Factor (model, cocharacter) pairs for product presets; empty otherwise.
  std::vector<std::pair<HomogeneousModel, Cocharacter>> factors;
};

/// "C3(3)", "A5(3)", "D6(6)", "E7(7)" or "P1xQ[n]" with n >= 4 the
/// dimension of the quadric.
CatalogEntry catalog(std::string_view name);
std::vector<std::string> catalog_names();

/// Smooth quadric Q^k as B_m(1) or D_m(1), with the cocharacter e_1.
std::pair<HomogeneousModel, Cocharacter> quadric_preset(int k);
/// P^1 = A_1(1) with levels {0, 1}.
std::pair<HomogeneousModel, Cocharacter> projective_line_preset();

}  // namespace cstar
