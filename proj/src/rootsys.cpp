#include "cstar/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace cstar {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E6: return "E";
    case Family::E7: return "E";
  }
  return "?";
}

namespace {

RationalVector e_minus(std::size_t dim, std::size_t i, std::size_t j) {
  RationalVector v(dim);
  v[i] = 1;
  v[j] = -1;
  return v;
}

// Bourbaki simple roots of E8 in Q^8; E6/E7 take the first 6/7.
std::vector<RationalVector> e8_simple_roots() {
  std::vector<RationalVector> s;
  const Rational h(1, 2);
  s.push_back(RationalVector{h, -h, -h, -h, -h, -h, -h, h});
  {
    RationalVector a2(8);
    a2[0] = 1;
    a2[1] = 1;
    s.push_back(a2);
  }
  for (std::size_t i = 1; i <= 6; ++i) s.push_back(e_minus(8, i, i - 1));
  return s;
}

std::vector<RationalVector> all_roots_from_simple(const std::vector<RationalVector>& simple) {
  std::set<RationalVector> seen(simple.begin(), simple.end());
  std::deque<RationalVector> queue(simple.begin(), simple.end());
  while (!queue.empty()) {
    RationalVector r = queue.front();
    queue.pop_front();
    for (const auto& a : simple) {
      RationalVector s = reflect(r, a);
      if (seen.insert(s).second) queue.push_back(s);
    }
  }
  return {seen.begin(), seen.end()};
}

// Coefficients of v in the basis of simple roots (v must lie in their span).
RationalVector simple_coefficients(const std::vector<RationalVector>& simple,
                                   const RationalVector& v) {
  const std::size_t n = simple.size();
  std::vector<RationalVector> gram(n, RationalVector(n));
  RationalVector rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) gram[i][j] = dot(simple[i], simple[j]);
    rhs[i] = dot(simple[i], v);
  }
  return solve(gram, rhs);
}

void fill_positive(RootSystem& rs) {
  for (const auto& r : all_roots_from_simple(rs.simple_roots)) {
    auto c = simple_coefficients(rs.simple_roots, r);
    bool nonneg = std::all_of(c.begin(), c.end(), [](const Rational& x) { return x >= 0; });
    if (nonneg) rs.positive_roots.push_back(r);
  }
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end());
}

}  // namespace

std::vector<RationalVector> RootSystem::roots() const {
  std::vector<RationalVector> out = positive_roots;
  for (const auto& r : positive_roots) out.push_back(-r);
  return out;
}

std::string RootSystem::label() const {
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += "+";
    auto [f, n] = factors[i];
    s += family_name(f) + std::to_string(n);
  }
  return s;
}

RootSystem build_root_system(Family family, int rank) {
  auto unsupported = [&] {
    return DomainError("unsupported root system " + family_name(family) + std::to_string(rank));
  };
  RootSystem rs;
  rs.factors = {{family, rank}};
  if (rank < 1) throw unsupported();
  const auto n = static_cast<std::size_t>(rank);
  switch (family) {
    case Family::A:
      if (rank > 7) throw unsupported();
      rs.ambient_dim = n + 1;
      for (std::size_t i = 0; i < n; ++i) rs.simple_roots.push_back(e_minus(n + 1, i, i + 1));
      break;
    case Family::B:
    case Family::C:
    case Family::D: {
      if (family == Family::B && (rank < 2 || rank > 6)) throw unsupported();
      if (family == Family::C && rank != 3) throw unsupported();
      if (family == Family::D && (rank < 3 || rank > 6)) throw unsupported();
      rs.ambient_dim = n;
      for (std::size_t i = 0; i + 1 < n; ++i) rs.simple_roots.push_back(e_minus(n, i, i + 1));
      RationalVector last(n);
      if (family == Family::B) {
        last[n - 1] = 1;
      } else if (family == Family::C) {
        last[n - 1] = 2;
      } else {
        last[n - 2] = 1;
        last[n - 1] = 1;
      }
      rs.simple_roots.push_back(last);
      break;
    }
    case Family::E6:
    case Family::E7: {
      const std::size_t want = family == Family::E6 ? 6 : 7;
      if (n != want) throw unsupported();
      rs.ambient_dim = 8;
      auto e8 = e8_simple_roots();
      rs.simple_roots.assign(e8.begin(), e8.begin() + static_cast<long>(want));
      break;
    }
  }
  fill_positive(rs);
  return rs;
}

RootSystem direct_sum(const RootSystem& a, const RootSystem& b) {
  RootSystem out;
  out.factors = a.factors;
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  out.ambient_dim = a.ambient_dim + b.ambient_dim;
  RationalVector za(a.ambient_dim), zb(b.ambient_dim);
  for (const auto& r : a.simple_roots) out.simple_roots.push_back(direct_sum(r, zb));
  for (const auto& r : b.simple_roots) out.simple_roots.push_back(direct_sum(za, r));
  for (const auto& r : a.positive_roots) out.positive_roots.push_back(direct_sum(r, zb));
  for (const auto& r : b.positive_roots) out.positive_roots.push_back(direct_sum(za, r));
  std::sort(out.positive_roots.begin(), out.positive_roots.end());
  return out;
}

Rational coroot_pairing(const Weight& w, const RationalVector& alpha) {
  if (alpha.is_zero()) throw DomainError("coroot pairing with the zero vector");
  return 2 * dot(w, alpha) / dot(alpha, alpha);
}

Weight reflect(const Weight& w, const RationalVector& alpha) {
  return w - coroot_pairing(w, alpha) * alpha;
}

Weight fundamental_weight(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank())
    throw DomainError("fundamental weight index " + std::to_string(i) + " out of range 1.." +
                      std::to_string(rs.rank()));
  // omega_i = sum_k c_k alpha_k with sum_k c_k <alpha_k, alpha_j^vee> = delta_ij
  const std::size_t n = rs.simple_roots.size();
  std::vector<RationalVector> m(n, RationalVector(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      m[j][k] = coroot_pairing(rs.simple_roots[k], rs.simple_roots[j]);
  RationalVector rhs = RationalVector::unit(n, static_cast<std::size_t>(i - 1));
  RationalVector c = solve(m, rhs);
  Weight w(rs.ambient_dim);
  for (std::size_t k = 0; k < n; ++k) w += c[k] * rs.simple_roots[k];
  return w;
}

RationalVector fundamental_coweight(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank())
    throw DomainError("fundamental coweight index " + std::to_string(i) + " out of range 1.." +
                      std::to_string(rs.rank()));
  const std::size_t n = rs.simple_roots.size();
  std::vector<RationalVector> m(n, RationalVector(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m[j][k] = dot(rs.simple_roots[k], rs.simple_roots[j]);
  RationalVector c = solve(m, RationalVector::unit(n, static_cast<std::size_t>(i - 1)));
  RationalVector v(rs.ambient_dim);
  for (std::size_t k = 0; k < n; ++k) v += c[k] * rs.simple_roots[k];
  return v;
}

Weight normalize_weight(const RootSystem& rs, const Weight& w) {
  if (w.size() != rs.ambient_dim) throw DomainError("weight dimension does not match root system");
  auto c = simple_coefficients(rs.simple_roots, w);
  Weight out(rs.ambient_dim);
  for (std::size_t k = 0; k < rs.simple_roots.size(); ++k) out += c[k] * rs.simple_roots[k];
  return out;
}

bool in_weight_lattice(const RootSystem& rs, const Weight& w) {
  return std::all_of(rs.simple_roots.begin(), rs.simple_roots.end(), [&](const auto& a) {
    return coroot_pairing(w, a).get_den() == 1;
  });
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w) {
  if (w.size() != rs.ambient_dim) throw DomainError("weight dimension does not match root system");
  if (!in_weight_lattice(rs, w)) throw DomainError("weight " + to_string(w) + " is not in the weight lattice");
  std::set<Weight> seen{w};
  std::deque<Weight> queue{w};
  while (!queue.empty()) {
    Weight cur = queue.front();
    queue.pop_front();
    for (const auto& a : rs.simple_roots) {
      Weight next = reflect(cur, a);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace cstar
