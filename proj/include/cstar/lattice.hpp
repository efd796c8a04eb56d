#pragma once

// Exact rational linear algebra and polyhedral geometry.
//
// Everything here is exact (GMP rationals). Cones are kept in a canonical
// form: lineality basis in reduced echelon form scaled to primitive integer
// rows, pointed rays projected onto the orthogonal complement of the
// lineality space and scaled to primitive integer vectors, all sorted
// lexicographically. Two cones are equal iff their canonical forms are.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cstar {

using Rational = mpq_class;

/// Raised for every violated precondition of a domain operation.
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// "p" or "p/q" with q > 0 and gcd(p, q) = 1.
std::string to_string(const Rational& q);

/// Parses "p", "p/q", or a finite decimal such as "0.5".
Rational parse_rational(const std::string& text);

class RationalVector {
public:
  RationalVector() = default;
  explicit RationalVector(std::size_t n) : coords_(n, Rational(0)) {}
  explicit RationalVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  RationalVector(std::initializer_list<Rational> coords) : coords_(coords) {}

  static RationalVector from_ints(std::initializer_list<long> values);
  static RationalVector unit(std::size_t n, std::size_t i);

  std::size_t size() const { return coords_.size(); }
  bool empty() const { return coords_.empty(); }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const;
  bool is_integral() const;

  RationalVector& operator+=(const RationalVector& o);
  RationalVector& operator-=(const RationalVector& o);
  RationalVector& operator*=(const Rational& s);

  friend RationalVector operator+(RationalVector a, const RationalVector& b) { return a += b; }
  friend RationalVector operator-(RationalVector a, const RationalVector& b) { return a -= b; }
  friend RationalVector operator*(const Rational& s, RationalVector a) { return a *= s; }
  friend RationalVector operator-(RationalVector a) { return a *= Rational(-1); }

  friend bool operator==(const RationalVector& a, const RationalVector& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator!=(const RationalVector& a, const RationalVector& b) { return !(a == b); }
  friend bool operator<(const RationalVector& a, const RationalVector& b) {
    return a.coords_ < b.coords_;
  }

  /// Concatenation, used for direct sums of weight lattices.
  friend RationalVector direct_sum(const RationalVector& a, const RationalVector& b);

private:
  std::vector<Rational> coords_;
};

std::string to_string(const RationalVector& v);

Rational dot(const RationalVector& a, const RationalVector& b);

/// Positive multiple of v with coprime integer entries. Zero stays zero.
RationalVector primitive(const RationalVector& v);

/// Rank of the row set.
std::size_t rank(const std::vector<RationalVector>& rows);

/// Basis of {x : <r, x> = 0 for all rows r}, in reduced echelon form,
/// each basis vector primitive.
std::vector<RationalVector> nullspace(const std::vector<RationalVector>& rows, std::size_t dim);

/// Solves M x = b for square invertible M given by rows. Throws otherwise.
RationalVector solve(const std::vector<RationalVector>& rows, const RationalVector& rhs);

/// Finitely generated convex cone in Q^n.
class RationalCone {
public:
  /// Cone spanned by `generators`. Throws "trivial cone input" if the list
  /// is empty.
  static RationalCone from_generators(const std::vector<RationalVector>& generators,
                                      std::size_t ambient_dim);
  /// {x : <a, x> >= 0 for all a in normals}.
  static RationalCone from_inequalities(const std::vector<RationalVector>& normals,
                                        std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  /// Dimension of the linear span.
  std::size_t dimension() const;
  bool is_full_dimensional() const { return dimension() == ambient_dim_; }
  bool is_pointed() const { return lineality_.empty(); }
  bool is_zero() const { return rays_.empty() && lineality_.empty(); }

  const std::vector<RationalVector>& rays() const { return rays_; }
  const std::vector<RationalVector>& lineality() const { return lineality_; }
  /// Rays together with +-l for every lineality basis vector l, sorted.
  const std::vector<RationalVector>& generators() const { return generators_; }
  /// Inner normals: canonical generators of the dual cone.
  const std::vector<RationalVector>& facets() const { return facets_; }

  bool contains(const RationalVector& v, bool strict = false) const;

  friend bool operator==(const RationalCone& a, const RationalCone& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.generators_ == b.generators_;
  }
  friend bool operator!=(const RationalCone& a, const RationalCone& b) { return !(a == b); }

private:
  RationalCone() = default;
  static RationalCone from_parts(std::vector<RationalVector> rays,
                                 std::vector<RationalVector> lineality,
                                 std::vector<RationalVector> dual_rays,
                                 std::vector<RationalVector> dual_lineality, std::size_t dim);

  std::size_t ambient_dim_ = 0;
  std::vector<RationalVector> rays_;
  std::vector<RationalVector> lineality_;
  std::vector<RationalVector> generators_;
  std::vector<RationalVector> dual_rays_;
  std::vector<RationalVector> dual_lineality_;
  std::vector<RationalVector> facets_;

  friend RationalCone dual_cone(const RationalCone& c);
};

/// {y : <y, g> >= 0 for every generator g of c}.
RationalCone dual_cone(const RationalCone& c);

bool cone_contains(const RationalCone& c, const RationalVector& v, bool strict);

RationalCone intersect(const RationalCone& a, const RationalCone& b);

/// Result of the H-to-V conversion: minimal rays plus a lineality basis.
/// Not canonicalized.
struct ConeGenerators {
  std::vector<RationalVector> rays;
  std::vector<RationalVector> lineality;
};

/// Double description: generators of {x : <a, x> >= 0 for a in normals}.
ConeGenerators double_description(const std::vector<RationalVector>& normals,
                                  std::size_t ambient_dim);

/// Convex polytope given by its vertices. Coordinates may be rational.
class Polytope {
public:
  /// Convex hull of `points`; redundant points are dropped.
  static Polytope hull(const std::vector<RationalVector>& points);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dimension() const { return dimension_; }
  const std::vector<RationalVector>& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }

  /// Facet inequalities as (offset, normal) rows: offset + <normal, x> >= 0.
  /// Only genuine facets; equations of the affine hull are in `equations()`.
  const std::vector<RationalVector>& facet_rows() const { return facet_rows_; }
  const std::vector<RationalVector>& equations() const { return equations_; }
  /// Vertex indices incident to each facet, parallel to facet_rows().
  const std::vector<std::vector<std::size_t>>& facet_vertices() const { return facet_vertices_; }

  /// All nonempty faces (including the polytope itself) as sorted vertex
  /// index sets.
  std::vector<std::vector<std::size_t>> faces() const;
  /// Vertex index pairs spanning edges.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  std::size_t face_dimension(const std::vector<std::size_t>& face) const;
  Polytope subpolytope(const std::vector<std::size_t>& face) const;

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.vertices_ == b.vertices_;
  }

private:
  std::size_t ambient_dim_ = 0;
  std::size_t dimension_ = 0;
  std::vector<RationalVector> vertices_;
  std::vector<RationalVector> facet_rows_;
  std::vector<RationalVector> equations_;
  std::vector<std::vector<std::size_t>> facet_vertices_;
};

/// Polytope with integral vertices; the moment polytope of a polarized
/// toric variety.
class LatticePolytope {
public:
  /// Throws if any vertex is non-integral.
  static LatticePolytope hull(const std::vector<RationalVector>& points);
  explicit LatticePolytope(Polytope p);

  const Polytope& polytope() const { return polytope_; }
  const std::vector<RationalVector>& vertices() const { return polytope_.vertices(); }
  std::size_t ambient_dim() const { return polytope_.ambient_dim(); }
  std::size_t dimension() const { return polytope_.dimension(); }

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.polytope_ == b.polytope_;
  }

private:
  Polytope polytope_;
};

/// Section of a polytope by the hyperplane <lambda, x> = level.
struct SlicePolytope {
  Polytope polytope;
  RationalVector lambda;
  Rational level;
};

SlicePolytope slice_polytope(const LatticePolytope& p, const RationalVector& lambda,
                             const Rational& tau);

struct ConstantFace {
  LatticePolytope face;
  std::vector<std::size_t> vertex_indices;  // into the parent's vertex list
  Rational level;                           // shifted so the minimum is 0
};

/// Maximal faces on which <lambda, .> is constant, sorted by (level, vertices).
std::vector<ConstantFace> constant_faces(const LatticePolytope& p, const RationalVector& lambda);

/// k such that b - a = k e with e primitive integral.
long lattice_length(const RationalVector& a, const RationalVector& b);

/// Primitive facet normals of a slice, projected onto the orthogonal
/// complement of lambda: the rays of the slice's normal fan inside its
/// hyperplane. Sorted.
std::vector<RationalVector> normal_fan_rays(const SlicePolytope& s);

/// True when the vertex-facet incidence structures agree up to relabeling.
bool combinatorially_isomorphic(const Polytope& a, const Polytope& b);

}  // namespace cstar
