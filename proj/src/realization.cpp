#include "cstar/realization.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace cstar {

namespace {

RationalVector row(long h, long ym, long yp) { return RationalVector::from_ints({h, ym, yp}); }

// Rows of P and P+- follow from the pullback relations of the two blowups
// and the normal bundles W-|W- ~ L- - L+, Y+-|Y+- ~ -mu+- H+-, with W+-
// identified with Y+- via strict transform. Frozen here as constants.
std::map<std::string, RationalVector> all_rows(const BispecialType& t) {
  const long mm = t.mu_minus(), mp = t.mu_plus();
  return {
      {"e-", row(0, -1, 0)},     {"e+", row(0, 0, -1)},     {"gamma", row(1, 1, 1)},
      {"delta-", row(0, 1, 0)},  {"delta+", row(0, 0, 1)},  {"gamma-", row(1, 0, 1)},
      {"gamma+", row(1, 1, 0)},  {"epsilon", row(1, 0, 0)}, {"ell-", row(1, -mm, 0)},
      {"ell+", row(1, 0, -mp)},
  };
}

std::vector<RationalVector> rows_of(const CurveClassTable& table,
                                    const std::vector<std::string>& names) {
  std::vector<RationalVector> out;
  for (const auto& n : names) out.push_back(table.rows.at(n));
  return out;
}

std::string swap_sign(std::string name) {
  if (!name.empty() && name.back() == '-')
    name.back() = '+';
  else if (!name.empty() && name.back() == '+')
    name.back() = '-';
  return name;
}

RationalVector swap_y(const RationalVector& v) { return RationalVector{v[0], v[2], v[1]}; }

}  // namespace

BispecialType make_type(long m_minus, long m_plus, long r_minus, long r_plus) {
  if (m_minus < 1 || m_plus < 1 || m_minus * m_plus <= 1)
    throw DomainError("not a bispecial type: need m-, m+ >= 1 and m- * m+ > 1");
  if (r_minus < 2 || r_plus < 2) throw DomainError("codimensions r-, r+ must be at least 2");
  return BispecialType{m_minus, m_plus, r_minus, r_plus};
}

std::string variety_name(Variety v) {
  switch (v) {
    case Variety::P: return "P";
    case Variety::PMinus: return "P-";
    case Variety::PPlus: return "P+";
    case Variety::X: return "X";
  }
  return "?";
}

std::map<Variety, CurveClassTable> build_tables(const BispecialType& t) {
  make_type(t.m_minus, t.m_plus, t.r_minus, t.r_plus);
  const auto rows = all_rows(t);
  auto pick = [&](Variety v, std::vector<std::string> names, std::vector<std::string> mori) {
    CurveClassTable table;
    table.variety = v;
    for (const auto& n : names) table.rows.emplace(n, rows.at(n));
    table.mori_generators = std::move(mori);
    return table;
  };
  const bool lm = t.mu_minus() > 0, lp = t.mu_plus() > 0;

  std::map<Variety, CurveClassTable> out;
  out.emplace(Variety::P, pick(Variety::P, {"e-", "e+", "gamma"}, {"e-", "e+", "gamma"}));

  std::vector<std::string> pm{"delta-", "e+", "gamma-"};
  if (lm) pm.push_back("ell-");
  out.emplace(Variety::PMinus, pick(Variety::PMinus, pm, pm));

  std::vector<std::string> pp{"delta+", "e-", "gamma+"};
  if (lp) pp.push_back("ell+");
  out.emplace(Variety::PPlus, pick(Variety::PPlus, pp, pp));

  // With mu = 0, ell has the class of epsilon and is not extremal.
  std::vector<std::string> xm{"delta-", "delta+"};
  if (lm) xm.push_back("ell-");
  if (lp) xm.push_back("ell+");
  out.emplace(Variety::X, pick(Variety::X,
                               {"delta-", "delta+", "gamma-", "gamma+", "epsilon", "gamma",
                                "ell-", "ell+"},
                               xm));
  return out;
}

std::vector<std::string> movable_curves(const BispecialType& t) {
  std::vector<std::string> names{"gamma", "gamma-", "gamma+"};
  if (t.mu_minus() > 0) names.push_back("ell-");
  if (t.mu_plus() > 0) names.push_back("ell+");
  return names;
}

std::map<Variety, ConeBundle> cones(const BispecialType& t) {
  const auto tables = build_tables(t);
  std::map<Variety, ConeBundle> out;
  for (const auto& [v, table] : tables) {
    RationalCone mori = RationalCone::from_generators(rows_of(table, table.mori_generators), 3);
    RationalCone nef = dual_cone(mori);
    std::optional<RationalCone> mov;
    if (v == Variety::X)
      mov = RationalCone::from_inequalities(rows_of(table, movable_curves(t)), 3);
    out.emplace(v, ConeBundle{std::move(nef), std::move(mori), std::move(mov)});
  }
  return out;
}

ChamberCheckReport chamber_check(const BispecialType& t, std::size_t samples, std::uint64_t seed) {
  const auto bundle = cones(t);
  const RationalCone& mov = *bundle.at(Variety::X).mov;
  ChamberCheckReport rep;
  rep.samples = samples;
  rep.seed = seed;

  for (Variety v : kVarieties) {
    for (const auto& g : bundle.at(v).nef.generators())
      if (!mov.contains(g)) {
        rep.nef_in_mov = false;
        rep.violations.push_back("Nef(" + variety_name(v) + ") generator " + to_string(g) +
                                 " outside Mov(X)");
      }
  }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      Variety a = kVarieties[i], b = kVarieties[j];
      RationalCone common = intersect(bundle.at(a).nef, bundle.at(b).nef);
      if (common.dimension() == 3) {
        rep.interiors_disjoint = false;
        rep.violations.push_back("Nef(" + variety_name(a) + ") and Nef(" + variety_name(b) +
                                 ") share interior points");
      }
    }

  std::mt19937_64 rng(seed);
  const auto& gens = mov.generators();
  for (std::size_t s = 0; s < samples; ++s) {
    RationalVector p(3);
    while (p.is_zero()) {
      p = RationalVector(3);
      for (const auto& g : gens) p += Rational(static_cast<long>(rng() % 97)) * g;
    }
    bool covered = std::any_of(std::begin(kVarieties), std::end(kVarieties),
                               [&](Variety v) { return bundle.at(v).nef.contains(p); });
    if (covered) {
      ++rep.samples_covered;
    } else if (!rep.witness) {
      rep.witness = p;
      rep.violations.push_back("sample " + to_string(p) + " lies in no Nef cone");
    }
  }
  return rep;
}

ContractionVerdict contraction_analysis(const BispecialType& t_in) {
  make_type(t_in.m_minus, t_in.m_plus, t_in.r_minus, t_in.r_plus);
  if (t_in.mu_minus() == 0 && t_in.mu_plus() == 0) throw DomainError("not bispecial");
  const bool swapped = t_in.mu_minus() == 0;
  const BispecialType t = swapped ? BispecialType{t_in.m_plus, t_in.m_minus, t_in.r_plus, t_in.r_minus}
                                  : t_in;
  const auto tables = build_tables(t);
  const auto& x = tables.at(Variety::X);
  const RationalCone nef = dual_cone(RationalCone::from_generators(rows_of(x, x.mori_generators), 3));
  const long mm = t.mu_minus(), mp = t.mu_plus();

  ContractionVerdict v;
  if (mp > 0) {
    const long mu = std::lcm(mm, mp);
    v.case_label = "mu_minus*mu_plus>0";
    v.supporting_divisor = row(mu, mu / mm, mu / mp);
    v.contracted_rays = {"ell-", "ell+"};
    v.target_picard_rank = 1;
    v.smooth = mm == 1 && mp == 1;
  } else {
    v.case_label = "mu_plus=0";
    v.supporting_divisor = row(mm, 1, 1);
    v.contracted_rays = {"ell-"};
    v.target_picard_rank = 2;
    v.smooth = mm == 1;
    const RationalVector yp = row(0, 0, 1);
    for (const auto& name : x.mori_generators) {
      Rational d = dot(yp, x.rows.at(name));
      if (name == "delta+" ? d != 1 : d != 0)
        throw std::logic_error("Y+ does not support the fiber-type face");
    }
    v.face_divisor = yp;
  }
  if (!nef.contains(v.supporting_divisor)) throw std::logic_error("H' is not nef");
  for (const auto& name : x.mori_generators) {
    Rational d = dot(v.supporting_divisor, x.rows.at(name));
    bool contracted = std::find(v.contracted_rays.begin(), v.contracted_rays.end(), name) !=
                      v.contracted_rays.end();
    if (contracted ? d != 0 : d <= 0)
      throw std::logic_error("H' does not cut out the contracted face exactly");
  }
  v.bandwidth_L_gamma = dot(v.supporting_divisor, x.rows.at("gamma"));
  v.k_negativity_bounds = {t.r_minus, t.r_plus};

  if (swapped) {
    v.roles_swapped = true;
    v.supporting_divisor = swap_y(v.supporting_divisor);
    if (v.face_divisor) v.face_divisor = swap_y(*v.face_divisor);
    for (auto& n : v.contracted_rays) n = swap_sign(n);
    std::sort(v.contracted_rays.begin(), v.contracted_rays.end());
    std::swap(v.k_negativity_bounds.first, v.k_negativity_bounds.second);
  }
  return v;
}

}  // namespace cstar
