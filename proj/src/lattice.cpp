#include "cstar/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

namespace cstar {

std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(const std::string& text) {
  std::string t = text;
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char ch) { return std::isspace(ch); }),
          t.end());
  if (t.empty()) throw std::invalid_argument("empty rational");
  if (t.front() == '+') t.erase(t.begin());
  auto dot_pos = t.find('.');
  try {
    if (dot_pos != std::string::npos) {
      if (t.find('/') != std::string::npos) throw std::invalid_argument(text);
      std::string whole = t.substr(0, dot_pos);
      std::string frac = t.substr(dot_pos + 1);
      bool negative = !whole.empty() && whole.front() == '-';
      if (negative) whole.erase(whole.begin());
      if (whole.empty() && frac.empty()) throw std::invalid_argument(text);
      auto digits = [](const std::string& s) {
        return std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); });
      };
      if (!digits(whole) || !digits(frac)) throw std::invalid_argument(text);
      mpz_class num(whole.empty() ? "0" : whole);
      mpz_class den = 1;
      for (char ch : frac) {
        num = num * 10 + (ch - '0');
        den *= 10;
      }
      Rational r(num, den);
      r.canonicalize();
      return negative ? Rational(-r) : r;
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
      char ch = t[i];
      if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || (ch == '-' && i == 0)))
        throw std::invalid_argument(text);
    }
    Rational r(t);
    if (r.get_den() == 0) throw std::invalid_argument(text);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
}

RationalVector RationalVector::from_ints(std::initializer_list<long> values) {
  RationalVector v;
  v.coords_.reserve(values.size());
  for (long x : values) v.coords_.emplace_back(x);
  return v;
}

RationalVector RationalVector::unit(std::size_t n, std::size_t i) {
  RationalVector v(n);
  v[i] = 1;
  return v;
}

bool RationalVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
}

bool RationalVector::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Rational& q) { return q.get_den() == 1; });
}

RationalVector& RationalVector::operator+=(const RationalVector& o) {
  if (o.size() != size()) throw DomainError("dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

RationalVector& RationalVector::operator-=(const RationalVector& o) {
  if (o.size() != size()) throw DomainError("dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

RationalVector& RationalVector::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

RationalVector direct_sum(const RationalVector& a, const RationalVector& b) {
  RationalVector out(a);
  out.coords_.insert(out.coords_.end(), b.coords_.begin(), b.coords_.end());
  return out;
}

std::string to_string(const RationalVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw DomainError("dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RationalVector primitive(const RationalVector& v) {
  if (v.is_zero()) return v;
  mpz_class den_lcm = 1;
  for (const auto& c : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> ints;
  ints.reserve(v.size());
  mpz_class g = 0;
  for (const auto& c : v) {
    mpz_class x = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    ints.push_back(std::move(x));
  }
  RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(ints[i] / g);
  return out;
}

namespace {

// Row-reduces in place; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<RationalVector>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rational inv = 1 / m[row][col];
    m[row] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

bool lex_less(const RationalVector& a, const RationalVector& b) { return a < b; }

std::vector<RationalVector> sorted_unique(std::vector<RationalVector> v) {
  std::sort(v.begin(), v.end(), lex_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::size_t rank(const std::vector<RationalVector>& rows) {
  if (rows.empty()) return 0;
  std::vector<RationalVector> m = rows;
  return row_reduce(m, rows.front().size()).size();
}

std::vector<RationalVector> nullspace(const std::vector<RationalVector>& rows, std::size_t dim) {
  std::vector<RationalVector> m = rows;
  for (const auto& r : m)
    if (r.size() != dim) throw DomainError("dimension mismatch");
  auto pivots = row_reduce(m, dim);
  std::vector<bool> is_pivot(dim, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(dim);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(primitive(v));
  }
  return basis;
}

RationalVector solve(const std::vector<RationalVector>& rows, const RationalVector& rhs) {
  const std::size_t n = rows.size();
  if (rhs.size() != n) throw DomainError("dimension mismatch");
  std::vector<RationalVector> aug;
  aug.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw DomainError("solve: matrix is not square");
    aug.push_back(direct_sum(rows[i], RationalVector{rhs[i]}));
  }
  auto pivots = row_reduce(aug, n + 1);
  if (pivots.size() != n || pivots.back() != n - 1) throw DomainError("solve: singular system");
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

ConeGenerators double_description(const std::vector<RationalVector>& normals,
                                  std::size_t ambient_dim) {
  ConeGenerators g;
  for (std::size_t i = 0; i < ambient_dim; ++i)
    g.lineality.push_back(RationalVector::unit(ambient_dim, i));

  std::vector<RationalVector> processed;
  for (const auto& a : normals) {
    if (a.size() != ambient_dim) throw DomainError("dimension mismatch");
    if (a.is_zero()) continue;

    auto lin_it = std::find_if(g.lineality.begin(), g.lineality.end(),
                               [&](const RationalVector& l) { return dot(a, l) != 0; });
    if (lin_it != g.lineality.end()) {
      RationalVector l = *lin_it;
      g.lineality.erase(lin_it);
      Rational al = dot(a, l);
      if (al < 0) {
        l *= Rational(-1);
        al = -al;
      }
      for (auto& other : g.lineality) other = primitive(other - (dot(a, other) / al) * l);
      for (auto& r : g.rays) r = primitive(r - (dot(a, r) / al) * l);
      g.rays.push_back(primitive(l));
      processed.push_back(a);
      continue;
    }

    std::vector<RationalVector> pos, zero, neg;
    for (auto& r : g.rays) {
      Rational s = dot(a, r);
      if (s > 0)
        pos.push_back(r);
      else if (s < 0)
        neg.push_back(r);
      else
        zero.push_back(r);
    }

    // Rays are adjacent when their common tight constraints have
    // corank two modulo the lineality space.
    const std::size_t pointed_dim = ambient_dim - g.lineality.size();
    auto tight = [&](const RationalVector& r) {
      std::vector<std::size_t> z;
      for (std::size_t j = 0; j < processed.size(); ++j)
        if (dot(processed[j], r) == 0) z.push_back(j);
      return z;
    };
    std::vector<std::vector<std::size_t>> pos_tight, neg_tight;
    for (auto& p : pos) pos_tight.push_back(tight(p));
    for (auto& n : neg) neg_tight.push_back(tight(n));
    std::vector<std::vector<std::size_t>> all_tight;
    for (auto& r : g.rays) all_tight.push_back(tight(r));

    std::vector<RationalVector> next = pos;
    next.insert(next.end(), zero.begin(), zero.end());
    for (std::size_t i = 0; i < pos.size(); ++i) {
      for (std::size_t k = 0; k < neg.size(); ++k) {
        std::vector<std::size_t> common;
        std::set_intersection(pos_tight[i].begin(), pos_tight[i].end(), neg_tight[k].begin(),
                              neg_tight[k].end(), std::back_inserter(common));
        if (pointed_dim < 2 || common.size() + 2 < pointed_dim) continue;
        // combinatorial test: no third ray is tight on all of `common`
        bool adjacent = true;
        for (std::size_t t = 0; t < g.rays.size() && adjacent; ++t) {
          if (g.rays[t] == pos[i] || g.rays[t] == neg[k]) continue;
          if (std::includes(all_tight[t].begin(), all_tight[t].end(), common.begin(),
                            common.end()))
            adjacent = false;
        }
        if (!adjacent) continue;
        std::vector<RationalVector> rows;
        for (auto j : common) rows.push_back(processed[j]);
        if (rank(rows) + 2 != pointed_dim) continue;
        Rational ap = dot(a, pos[i]);
        Rational an = dot(a, neg[k]);
        next.push_back(primitive(ap * neg[k] - an * pos[i]));
      }
    }
    g.rays = sorted_unique(std::move(next));
    processed.push_back(a);
  }
  return g;
}

namespace {

std::vector<RationalVector> canonical_lineality(const std::vector<RationalVector>& lin,
                                                std::size_t dim) {
  if (lin.empty()) return {};
  std::vector<RationalVector> m = lin;
  row_reduce(m, dim);
  for (auto& r : m) r = primitive(r);
  return m;
}

RationalVector project_off(const RationalVector& v, const std::vector<RationalVector>& basis) {
  if (basis.empty()) return v;
  std::vector<RationalVector> gram(basis.size(), RationalVector(basis.size()));
  RationalVector rhs(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) gram[i][j] = dot(basis[i], basis[j]);
    rhs[i] = dot(basis[i], v);
  }
  RationalVector c = solve(gram, rhs);
  RationalVector out = v;
  for (std::size_t i = 0; i < basis.size(); ++i) out -= c[i] * basis[i];
  return out;
}

std::pair<std::vector<RationalVector>, std::vector<RationalVector>> canonicalize(
    const std::vector<RationalVector>& rays, const std::vector<RationalVector>& lin,
    std::size_t dim) {
  auto clin = canonical_lineality(lin, dim);
  std::vector<RationalVector> crays;
  for (const auto& r : rays) {
    auto p = primitive(project_off(r, clin));
    if (!p.is_zero()) crays.push_back(std::move(p));
  }
  return {sorted_unique(std::move(crays)), std::move(clin)};
}

std::vector<RationalVector> with_negated(const std::vector<RationalVector>& rays,
                                         const std::vector<RationalVector>& lin) {
  std::vector<RationalVector> out = rays;
  for (const auto& l : lin) {
    out.push_back(l);
    out.push_back(-l);
  }
  return sorted_unique(std::move(out));
}

}  // namespace

RationalCone RationalCone::from_parts(std::vector<RationalVector> rays,
                                      std::vector<RationalVector> lineality,
                                      std::vector<RationalVector> dual_rays,
                                      std::vector<RationalVector> dual_lineality,
                                      std::size_t dim) {
  RationalCone c;
  c.ambient_dim_ = dim;
  std::tie(c.rays_, c.lineality_) = canonicalize(rays, lineality, dim);
  std::tie(c.dual_rays_, c.dual_lineality_) = canonicalize(dual_rays, dual_lineality, dim);
  c.generators_ = with_negated(c.rays_, c.lineality_);
  c.facets_ = with_negated(c.dual_rays_, c.dual_lineality_);
  return c;
}

RationalCone RationalCone::from_generators(const std::vector<RationalVector>& generators,
                                           std::size_t ambient_dim) {
  if (generators.empty()) throw DomainError("trivial cone input");
  if (ambient_dim == 0) throw DomainError("ambient dimension must be positive");
  for (const auto& g : generators)
    if (g.size() != ambient_dim) throw DomainError("dimension mismatch");
  ConeGenerators dual = double_description(generators, ambient_dim);
  ConeGenerators primal = double_description(with_negated(dual.rays, dual.lineality), ambient_dim);
  return from_parts(std::move(primal.rays), std::move(primal.lineality), std::move(dual.rays),
                    std::move(dual.lineality), ambient_dim);
}

RationalCone RationalCone::from_inequalities(const std::vector<RationalVector>& normals,
                                             std::size_t ambient_dim) {
  if (ambient_dim == 0) throw DomainError("ambient dimension must be positive");
  ConeGenerators primal = double_description(normals, ambient_dim);
  ConeGenerators dual =
      double_description(with_negated(primal.rays, primal.lineality), ambient_dim);
  return from_parts(std::move(primal.rays), std::move(primal.lineality), std::move(dual.rays),
                    std::move(dual.lineality), ambient_dim);
}

std::size_t RationalCone::dimension() const {
  return rank(generators_);
}

bool RationalCone::contains(const RationalVector& v, bool strict) const {
  if (v.size() != ambient_dim_) throw DomainError("dimension mismatch");
  for (const auto& f : facets_) {
    Rational s = dot(f, v);
    if (s < 0 || (strict && s == 0)) return false;
  }
  return true;
}

RationalCone dual_cone(const RationalCone& c) {
  return RationalCone::from_parts(c.dual_rays_, c.dual_lineality_, c.rays_, c.lineality_,
                                  c.ambient_dim_);
}

bool cone_contains(const RationalCone& c, const RationalVector& v, bool strict) {
  return c.contains(v, strict);
}

RationalCone intersect(const RationalCone& a, const RationalCone& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DomainError("dimension mismatch");
  std::vector<RationalVector> normals = a.facets();
  normals.insert(normals.end(), b.facets().begin(), b.facets().end());
  return RationalCone::from_inequalities(normals, a.ambient_dim());
}

// ---------------------------------------------------------------------------
// Polytopes

namespace {

RationalVector homogenize(const RationalVector& p) {
  return direct_sum(RationalVector{Rational(1)}, p);
}

std::size_t affine_rank(const std::vector<RationalVector>& pts) {
  if (pts.size() <= 1) return 0;
  std::vector<RationalVector> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - pts[0]);
  return rank(diffs);
}

}  // namespace

Polytope Polytope::hull(const std::vector<RationalVector>& points) {
  if (points.empty()) throw DomainError("empty point set");
  const std::size_t d = points.front().size();
  if (d == 0) throw DomainError("ambient dimension must be positive");
  for (const auto& p : points)
    if (p.size() != d) throw DomainError("dimension mismatch");

  auto pts = sorted_unique(points);
  std::vector<RationalVector> homog;
  for (const auto& p : pts) homog.push_back(homogenize(p));
  ConeGenerators dual = double_description(homog, d + 1);

  Polytope poly;
  poly.ambient_dim_ = d;
  poly.equations_ = canonical_lineality(dual.lineality, d + 1);
  const std::size_t needed = d - poly.equations_.size();  // rank of tight facets at a vertex

  std::vector<RationalVector> rows;
  for (const auto& r : dual.rays) rows.push_back(primitive(project_off(r, poly.equations_)));
  rows = sorted_unique(std::move(rows));

  for (std::size_t i = 0; i < homog.size(); ++i) {
    std::vector<RationalVector> tight;
    for (const auto& r : rows)
      if (dot(r, homog[i]) == 0) tight.push_back(r);
    if (rank(tight) == needed) poly.vertices_.push_back(pts[i]);
  }
  poly.dimension_ = affine_rank(poly.vertices_);

  for (const auto& r : rows) {
    std::vector<std::size_t> inc;
    for (std::size_t v = 0; v < poly.vertices_.size(); ++v)
      if (dot(r, homogenize(poly.vertices_[v])) == 0) inc.push_back(v);
    if (inc.empty()) continue;  // the trivial inequality of a point
    poly.facet_rows_.push_back(r);
    poly.facet_vertices_.push_back(std::move(inc));
  }
  return poly;
}

std::vector<std::vector<std::size_t>> Polytope::faces() const {
  std::vector<std::size_t> all(vertices_.size());
  std::iota(all.begin(), all.end(), 0);
  std::set<std::vector<std::size_t>> seen{all};
  std::vector<std::vector<std::size_t>> queue{all};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto face = queue[head];
    for (const auto& facet : facet_vertices_) {
      std::vector<std::size_t> sub;
      std::set_intersection(face.begin(), face.end(), facet.begin(), facet.end(),
                            std::back_inserter(sub));
      if (sub.empty() || sub.size() == face.size()) continue;
      if (seen.insert(sub).second) queue.push_back(std::move(sub));
    }
  }
  return {seen.begin(), seen.end()};
}

std::size_t Polytope::face_dimension(const std::vector<std::size_t>& face) const {
  std::vector<RationalVector> pts;
  for (auto i : face) pts.push_back(vertices_.at(i));
  return affine_rank(pts);
}

std::vector<std::pair<std::size_t, std::size_t>> Polytope::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (dimension_ == 1) return {{0, 1}};
  for (const auto& f : faces())
    if (f.size() == 2 && face_dimension(f) == 1) out.emplace_back(f[0], f[1]);
  return out;
}

Polytope Polytope::subpolytope(const std::vector<std::size_t>& face) const {
  std::vector<RationalVector> pts;
  for (auto i : face) pts.push_back(vertices_.at(i));
  return hull(pts);
}

LatticePolytope::LatticePolytope(Polytope p) : polytope_(std::move(p)) {
  for (const auto& v : polytope_.vertices())
    if (!v.is_integral()) throw DomainError("lattice polytope vertex " + to_string(v) + " is not integral");
}

LatticePolytope LatticePolytope::hull(const std::vector<RationalVector>& points) {
  return LatticePolytope(Polytope::hull(points));
}

SlicePolytope slice_polytope(const LatticePolytope& p, const RationalVector& lambda,
                             const Rational& tau) {
  if (lambda.size() != p.ambient_dim()) throw DomainError("dimension mismatch");
  const auto& verts = p.vertices();
  std::vector<Rational> val;
  for (const auto& v : verts) val.push_back(dot(lambda, v));
  auto [lo, hi] = std::minmax_element(val.begin(), val.end());
  if (tau < *lo || tau > *hi) throw DomainError("tau outside Δ(L)");

  std::vector<RationalVector> pts;
  for (std::size_t i = 0; i < verts.size(); ++i)
    if (val[i] == tau) pts.push_back(verts[i]);
  for (auto [a, b] : p.polytope().edges()) {
    Rational sa = val[a] - tau, sb = val[b] - tau;
    if ((sa < 0 && sb > 0) || (sa > 0 && sb < 0)) {
      Rational t = (tau - val[a]) / (val[b] - val[a]);
      pts.push_back(verts[a] + t * (verts[b] - verts[a]));
    }
  }
  return SlicePolytope{Polytope::hull(pts), lambda, tau};
}

std::vector<ConstantFace> constant_faces(const LatticePolytope& p, const RationalVector& lambda) {
  if (lambda.size() != p.ambient_dim()) throw DomainError("dimension mismatch");
  if (lambda.is_zero()) throw DomainError("trivial action");
  const auto& verts = p.vertices();
  std::vector<Rational> val;
  for (const auto& v : verts) val.push_back(dot(lambda, v));
  const Rational lo = *std::min_element(val.begin(), val.end());

  std::vector<std::vector<std::size_t>> constant;
  for (auto& f : p.polytope().faces()) {
    bool same = std::all_of(f.begin(), f.end(), [&](std::size_t i) { return val[i] == val[f[0]]; });
    if (same) constant.push_back(std::move(f));
  }
  std::vector<ConstantFace> out;
  for (const auto& f : constant) {
    bool maximal = std::none_of(constant.begin(), constant.end(), [&](const auto& g) {
      return g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end());
    });
    if (!maximal) continue;
    out.push_back(ConstantFace{LatticePolytope(p.polytope().subpolytope(f)), f, val[f[0]] - lo});
  }
  std::sort(out.begin(), out.end(), [](const ConstantFace& a, const ConstantFace& b) {
    if (a.level != b.level) return a.level < b.level;
    return a.face.vertices() < b.face.vertices();
  });
  return out;
}

long lattice_length(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw DomainError("dimension mismatch");
  if (!a.is_integral() || !b.is_integral()) throw DomainError("lattice_length: non-integral input");
  if (a == b) throw DomainError("lattice_length: coincident points");
  mpz_class g = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_class d = Rational(b[i] - a[i]).get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
  }
  return g.get_si();
}

std::vector<RationalVector> normal_fan_rays(const SlicePolytope& s) {
  const auto& poly = s.polytope;
  const std::size_t d = poly.ambient_dim();
  std::vector<RationalVector> eq;
  for (const auto& e : poly.equations()) {
    RationalVector n(d);
    for (std::size_t i = 0; i < d; ++i) n[i] = e[i + 1];
    if (!n.is_zero()) eq.push_back(n);
  }
  eq.push_back(s.lambda);
  std::vector<RationalVector> basis;
  {
    std::vector<RationalVector> m = eq;
    row_reduce(m, d);
    basis = m;
  }
  std::vector<RationalVector> rays;
  for (const auto& row : poly.facet_rows()) {
    RationalVector n(d);
    for (std::size_t i = 0; i < d; ++i) n[i] = row[i + 1];
    auto r = primitive(project_off(n, basis));
    if (!r.is_zero()) rays.push_back(std::move(r));
  }
  return sorted_unique(std::move(rays));
}

namespace {

struct Incidence {
  std::size_t vertices = 0;
  std::vector<std::vector<bool>> rows;  // facet x vertex
};

Incidence incidence_of(const Polytope& p) {
  Incidence inc;
  inc.vertices = p.vertex_count();
  for (const auto& f : p.facet_vertices()) {
    std::vector<bool> row(inc.vertices, false);
    for (auto v : f) row[v] = true;
    inc.rows.push_back(std::move(row));
  }
  return inc;
}

std::vector<std::size_t> signature(const Incidence& inc, std::size_t v) {
  std::vector<std::size_t> sizes;
  for (const auto& row : inc.rows)
    if (row[v]) sizes.push_back(static_cast<std::size_t>(std::count(row.begin(), row.end(), true)));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

bool facets_match(const Incidence& a, const Incidence& b, const std::vector<std::size_t>& perm) {
  std::set<std::vector<bool>> target(b.rows.begin(), b.rows.end());
  for (const auto& row : a.rows) {
    std::vector<bool> mapped(b.vertices, false);
    for (std::size_t v = 0; v < a.vertices; ++v)
      if (row[v]) mapped[perm[v]] = true;
    if (!target.count(mapped)) return false;
  }
  return true;
}

bool extend(const Incidence& a, const Incidence& b,
            const std::vector<std::vector<std::size_t>>& sig_a,
            const std::vector<std::vector<std::size_t>>& sig_b,
            const std::vector<std::vector<std::size_t>>& common_a,
            const std::vector<std::vector<std::size_t>>& common_b, std::vector<std::size_t>& perm,
            std::vector<bool>& used, std::size_t next) {
  if (next == a.vertices) return facets_match(a, b, perm);
  for (std::size_t cand = 0; cand < b.vertices; ++cand) {
    if (used[cand] || sig_a[next] != sig_b[cand]) continue;
    bool ok = true;
    for (std::size_t prev = 0; prev < next && ok; ++prev)
      ok = common_a[next][prev] == common_b[cand][perm[prev]];
    if (!ok) continue;
    perm[next] = cand;
    used[cand] = true;
    if (extend(a, b, sig_a, sig_b, common_a, common_b, perm, used, next + 1)) return true;
    used[cand] = false;
  }
  return false;
}

}  // namespace

bool combinatorially_isomorphic(const Polytope& a, const Polytope& b) {
  if (a.vertex_count() != b.vertex_count() || a.dimension() != b.dimension() ||
      a.facet_vertices().size() != b.facet_vertices().size())
    return false;
  Incidence ia = incidence_of(a), ib = incidence_of(b);
  const std::size_t n = ia.vertices;
  std::vector<std::vector<std::size_t>> sig_a(n), sig_b(n);
  for (std::size_t v = 0; v < n; ++v) {
    sig_a[v] = signature(ia, v);
    sig_b[v] = signature(ib, v);
  }
  {
    auto sa = sig_a, sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  auto common = [](const Incidence& inc) {
    std::vector<std::vector<std::size_t>> c(inc.vertices, std::vector<std::size_t>(inc.vertices, 0));
    for (const auto& row : inc.rows)
      for (std::size_t u = 0; u < inc.vertices; ++u)
        for (std::size_t v = 0; v < inc.vertices; ++v)
          if (row[u] && row[v]) ++c[u][v];
    return c;
  };
  auto ca = common(ia), cb = common(ib);
  std::vector<std::size_t> perm(n, 0);
  std::vector<bool> used(n, false);
  return extend(ia, ib, sig_a, sig_b, ca, cb, perm, used, 0);
}

}  // namespace cstar
