#pragma once

// Numerical shadow of the geometric realization of a bispecial birational
// map of type (m-, m+). Classes of the four varieties P, P-, P+, X are
// written in the common divisor basis (H, Y-, Y+); each curve class is the
// row of its intersection numbers with that basis.

#include "cstar/lattice.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cstar {

struct BispecialType {
  long m_minus = 0;
  long m_plus = 0;
  long r_minus = 2;  // codimension of Z-
  long r_plus = 2;   // codimension of Z+

  long mu_minus() const { return m_minus - 1; }
  long mu_plus() const { return m_plus - 1; }
};

/// Validates m+- >= 1, m- m+ > 1 and r+- >= 2.
BispecialType make_type(long m_minus, long m_plus, long r_minus = 2, long r_plus = 2);

enum class Variety { P, PMinus, PPlus, X };
/// "P", "P-", "P+", "X".
std::string variety_name(Variety v);
inline constexpr Variety kVarieties[] = {Variety::P, Variety::PMinus, Variety::PPlus, Variety::X};

/// Curve names: "e-", "e+", "gamma", "delta-", "delta+", "gamma-", "gamma+",
/// "epsilon", "ell-", "ell+".
struct CurveClassTable {
  Variety variety = Variety::X;
  std::map<std::string, RationalVector> rows;
  /// Rows spanning the Mori cone (subset of `rows`).
  std::vector<std::string> mori_generators;
};

std::map<Variety, CurveClassTable> build_tables(const BispecialType& t);

struct ConeBundle {
  RationalCone nef;
  RationalCone mori;
  std::optional<RationalCone> mov;  // X only
};

std::map<Variety, ConeBundle> cones(const BispecialType& t);

/// Curve rows whose dual is Mov(X).
std::vector<std::string> movable_curves(const BispecialType& t);

struct ChamberCheckReport {
  bool nef_in_mov = true;
  bool interiors_disjoint = true;
  std::size_t samples = 0;
  std::size_t samples_covered = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> violations;
  std::optional<RationalVector> witness;  // first uncovered sample

  bool passed() const { return nef_in_mov && interiors_disjoint && samples_covered == samples; }
};

/// Samples are nonnegative integer combinations of the Mov(X) generators,
/// drawn from mt19937_64 seeded with `seed`.
ChamberCheckReport chamber_check(const BispecialType& t, std::size_t samples, std::uint64_t seed);

struct ContractionVerdict {
  std::string case_label;  // "mu_minus*mu_plus>0" or "mu_plus=0"
  bool roles_swapped = false;
  RationalVector supporting_divisor;              // H'
  std::optional<RationalVector> face_divisor;     // Y+ in the mu_plus=0 case
  std::vector<std::string> contracted_rays;
  int target_picard_rank = 0;
  bool smooth = false;
  Rational bandwidth_L_gamma;                     // H' . gamma
  /// Lower bounds only: -K_X . ell- >= first, -K_X . ell+ >= second.
  std::pair<long, long> k_negativity_bounds;
};

/// Divisors and curve names are reported in the caller's (unswapped) labels.
ContractionVerdict contraction_analysis(const BispecialType& t);

}  // namespace cstar
