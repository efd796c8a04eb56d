#pragma once

// Root systems in orthogonal (epsilon) coordinates with Bourbaki numbering.
//
// A_n lives in the sum-zero hyperplane of Q^{n+1}; E6 and E7 live inside
// the E8 lattice in Q^8. Reducible systems are direct sums of irreducible
// ones, with coordinates concatenated.

#include "cstar/lattice.hpp"

#include <string>
#include <utility>
#include <vector>

namespace cstar {

enum class Family { A, B, C, D, E6, E7 };

std::string family_name(Family f);

/// Weights and cocharacters share the orthogonal coordinates of the roots.
using Weight = RationalVector;

struct RootSystem {
  std::vector<std::pair<Family, int>> factors;
  std::size_t ambient_dim = 0;
  std::vector<RationalVector> simple_roots;
  std::vector<RationalVector> positive_roots;

  int rank() const { return static_cast<int>(simple_roots.size()); }
  /// Positive roots followed by their negatives.
  std::vector<RationalVector> roots() const;
  /// "E7", "A1+D3", ...
  std::string label() const;
};

/// Supported: A_n (n <= 7), B_n (2 <= n <= 6), C_3, D_n (3 <= n <= 6), E6, E7.
RootSystem build_root_system(Family family, int rank);

RootSystem direct_sum(const RootSystem& a, const RootSystem& b);

/// <w, alpha^vee> = 2 (w, alpha) / (alpha, alpha).
Rational coroot_pairing(const Weight& w, const RationalVector& alpha);

/// s_alpha(w) = w - <w, alpha^vee> alpha.
Weight reflect(const Weight& w, const RationalVector& alpha);

/// omega_i with <omega_i, alpha_j^vee> = delta_ij, in the span of the roots.
/// Index is 1-based.
Weight fundamental_weight(const RootSystem& rs, int i);

/// Fundamental coweight: <c, alpha_j> = delta_ij under the standard form.
RationalVector fundamental_coweight(const RootSystem& rs, int i);

/// Orthogonal projection onto the span of the roots. For A_n this is the
/// sum-zero representative of a weight given by any lift.
Weight normalize_weight(const RootSystem& rs, const Weight& w);

/// True when every coroot pairing of w is integral.
bool in_weight_lattice(const RootSystem& rs, const Weight& w);

/// Full Weyl orbit, sorted lexicographically.
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w);

}  // namespace cstar
