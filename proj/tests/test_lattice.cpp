#include "cstar/lattice.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace cstar;

namespace {

RationalVector iv(std::initializer_list<long> v) { return RationalVector::from_ints(v); }

std::vector<RationalVector> ivs(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<RationalVector> out;
  for (auto r : rows) out.push_back(RationalVector::from_ints(r));
  return out;
}

LatticePolytope unit_cube() {
  std::vector<RationalVector> pts;
  for (long x : {0, 1})
    for (long y : {0, 1})
      for (long z : {0, 1}) pts.push_back(iv({x, y, z}));
  return LatticePolytope::hull(pts);
}

}  // namespace

TEST_CASE("rational rendering and parsing") {
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(-2, 4)) == "-1/2");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-0.25") == Rational(-1, 4));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("vector helpers") {
  CHECK(primitive(RationalVector{Rational(1, 2), Rational(3, 4), 0}) == iv({2, 3, 0}));
  CHECK(primitive(iv({-4, 6})) == iv({-2, 3}));
  CHECK(rank(ivs({{1, 2}, {2, 4}})) == 1);
  auto ns = nullspace(ivs({{1, 1, 1}}), 3);
  REQUIRE(ns.size() == 2);
  for (const auto& v : ns) CHECK(dot(v, iv({1, 1, 1})) == 0);
  CHECK(solve(ivs({{2, 1}, {1, 3}}), iv({3, 5})) == RationalVector{Rational(4, 5), Rational(7, 5)});
  CHECK_THROWS_AS(solve(ivs({{1, 2}, {2, 4}}), iv({1, 1})), DomainError);
}

TEST_CASE("dual cone examples") {
  SUBCASE("octant is self-dual") {
    auto c = RationalCone::from_generators(ivs({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 3);
    CHECK(dual_cone(c).generators() == ivs({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
  }
  SUBCASE("mori rows of X at mu = (1,1)") {
    auto c = RationalCone::from_generators(ivs({{0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {1, 0, -1}}), 3);
    CHECK(dual_cone(c).generators() == ivs({{1, 0, 0}, {1, 0, 1}, {1, 1, 0}, {1, 1, 1}}));
  }
  SUBCASE("mori rows of P") {
    auto c = RationalCone::from_generators(ivs({{0, -1, 0}, {0, 0, -1}, {1, 1, 1}}), 3);
    CHECK(dual_cone(c).generators() == ivs({{1, -1, 0}, {1, 0, -1}, {1, 0, 0}}));
  }
  CHECK_THROWS_WITH_AS(RationalCone::from_generators({}, 3), "trivial cone input", DomainError);
}

TEST_CASE("cone membership") {
  auto octant = RationalCone::from_generators(ivs({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 3);
  CHECK(cone_contains(octant, iv({1, 1, 1}), true));
  CHECK_FALSE(cone_contains(octant, iv({1, 0, 0}), true));
  CHECK(cone_contains(octant, iv({1, 0, 0}), false));
  CHECK_FALSE(octant.contains(iv({-1, 0, 0})));
  auto nef = RationalCone::from_generators(ivs({{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}}), 3);
  CHECK(nef.contains(iv({1, 1, 1}), true) == false);  // (1,1,1) is a ray
  CHECK(nef.contains(iv({4, 1, 1}), true));
}

TEST_CASE("cones with lineality") {
  auto half = RationalCone::from_inequalities(ivs({{1, 0}}), 2);
  CHECK(half.lineality().size() == 1);
  CHECK(half.rays() == ivs({{1, 0}}));
  CHECK_FALSE(half.is_pointed());
  CHECK(dual_cone(half).generators() == ivs({{1, 0}}));
  auto whole = RationalCone::from_inequalities({}, 3);
  CHECK(whole.dimension() == 3);
  CHECK(dual_cone(whole).is_zero());
  auto line = RationalCone::from_generators(ivs({{1, 1}, {-1, -1}}), 2);
  CHECK(line.dimension() == 1);
  CHECK(dual_cone(dual_cone(line)) == line);
}

TEST_CASE("intersection of cones") {
  auto a = RationalCone::from_generators(ivs({{1, 0}, {1, 1}}), 2);
  auto b = RationalCone::from_generators(ivs({{1, 1}, {0, 1}}), 2);
  auto i = intersect(a, b);
  CHECK(i.dimension() == 1);
  CHECK(i.rays() == ivs({{1, 1}}));
  auto c = RationalCone::from_generators(ivs({{2, 1}, {1, 2}}), 2);
  CHECK(intersect(a, c).dimension() == 2);
}

TEST_CASE("double description agrees with brute-force facets") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = 2 + trial % 3;
    std::vector<RationalVector> gens;
    const std::size_t n = d + 1 + rng() % 4;
    for (std::size_t i = 0; i < n; ++i) {
      RationalVector g(d);
      for (std::size_t k = 0; k < d; ++k) g[k] = static_cast<long>(rng() % 7) - 3;
      // keep the cone pointed by pushing into the positive first coordinate
      g[0] = static_cast<long>(rng() % 4) + 1;
      gens.push_back(g);
    }
    auto c = RationalCone::from_generators(gens, d);
    if (c.dimension() != d) continue;
    CHECK(c.facets() == oracle::brute_facets(gens, d));
  }
}

TEST_CASE("polytope hull and faces") {
  auto cube = unit_cube();
  CHECK(cube.vertices().size() == 8);
  CHECK(cube.polytope().facet_rows().size() == 6);
  CHECK(cube.polytope().edges().size() == 12);
  CHECK(cube.polytope().faces().size() == 8 + 12 + 6 + 1);
  auto redundant = Polytope::hull(ivs({{0, 0}, {2, 0}, {0, 2}, {1, 1}, {1, 0}}));
  CHECK(redundant.vertex_count() == 3);
  auto segment = Polytope::hull(ivs({{0, 0, 0}, {1, 1, 1}, {2, 2, 2}}));
  CHECK(segment.dimension() == 1);
  CHECK(segment.vertex_count() == 2);
  CHECK(segment.equations().size() == 2);
  CHECK_THROWS_AS(LatticePolytope::hull({RationalVector{Rational(1, 2), 0}, iv({1, 1})}),
                  DomainError);
}

TEST_CASE("slices of the cube") {
  auto cube = unit_cube();
  auto l = iv({1, 1, 1});
  CHECK(slice_polytope(cube, l, Rational(1, 2)).polytope.vertex_count() == 3);
  CHECK(slice_polytope(cube, l, Rational(3, 2)).polytope.vertex_count() == 6);
  auto pt = slice_polytope(cube, l, 0).polytope;
  CHECK(pt.vertices() == ivs({{0, 0, 0}}));
  CHECK_THROWS_WITH_AS(slice_polytope(cube, l, 4), "tau outside Δ(L)", DomainError);
}

TEST_CASE("slice vertex counts match edge crossings") {
  auto cube = unit_cube();
  const auto& verts = cube.vertices();
  auto edges = oracle::hypercube_edges(verts);
  for (auto l : {iv({1, 1, 1}), iv({1, 1, 2}), iv({1, 2, 3}), iv({1, -1, 2})}) {
    Rational lo = 0, hi = 0;
    for (const auto& v : verts) {
      lo = std::min(lo, dot(l, v));
      hi = std::max(hi, dot(l, v));
    }
    for (Rational tau = lo; tau <= hi; tau += Rational(1, 3))
      CHECK(slice_polytope(cube, l, tau).polytope.vertex_count() ==
            oracle::brute_slice_count(verts, edges, l, tau));
  }
}

TEST_CASE("constant faces") {
  auto cube = unit_cube();
  auto faces = constant_faces(cube, iv({1, 1, 1}));
  CHECK(faces.size() == 8);
  std::vector<long> per_level(4, 0);
  for (const auto& f : faces) {
    CHECK(f.face.dimension() == 0);
    ++per_level[f.level.get_num().get_si()];
  }
  CHECK(per_level == std::vector<long>{1, 3, 3, 1});

  auto square = LatticePolytope::hull(ivs({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  auto sq = constant_faces(square, iv({1, 0}));
  REQUIRE(sq.size() == 2);
  CHECK(sq[0].face.dimension() == 1);
  CHECK(sq[1].face.dimension() == 1);
  CHECK(sq[0].level == 0);
  CHECK(sq[1].level == 1);

  auto bundle = LatticePolytope::hull(
      ivs({{0, 0, 0}, {3, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 0, 1}}));
  auto bf = constant_faces(bundle, iv({1, 1, 1}));
  REQUIRE(bf.size() == 4);
  std::vector<std::size_t> dims;
  for (const auto& f : bf) dims.push_back(f.face.dimension());
  CHECK(dims == std::vector<std::size_t>{0, 1, 1, 0});
  CHECK(bf[3].level == 3);

  CHECK_THROWS_WITH_AS(constant_faces(cube, iv({0, 0, 0})), "trivial action", DomainError);
}

TEST_CASE("lattice length") {
  CHECK(lattice_length(iv({0, 0, 0}), iv({3, 0, 0})) == 3);
  CHECK(lattice_length(iv({0, 0}), iv({1, 1})) == 1);
  CHECK(lattice_length(iv({-1, 1, 1}), iv({1, -1, 1})) == 2);
  CHECK_THROWS_AS(lattice_length(iv({1, 1}), iv({1, 1})), DomainError);
}

TEST_CASE("normal fan rays and combinatorial type") {
  auto cube = unit_cube();
  auto l = iv({1, 1, 1});
  auto tri = slice_polytope(cube, l, Rational(1, 2));
  auto hex = slice_polytope(cube, l, Rational(3, 2));
  CHECK(normal_fan_rays(tri).size() == 3);
  CHECK(normal_fan_rays(hex).size() == 6);
  for (const auto& r : normal_fan_rays(hex)) CHECK(dot(r, l) == 0);
  auto tri2 = slice_polytope(cube, l, Rational(5, 2));
  CHECK(combinatorially_isomorphic(tri.polytope, tri2.polytope));
  CHECK_FALSE(combinatorially_isomorphic(tri.polytope, hex.polytope));
  auto square = Polytope::hull(ivs({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  auto kite = Polytope::hull(ivs({{0, 0}, {2, 1}, {1, 2}, {5, 5}}));
  CHECK(combinatorially_isomorphic(square, kite));
}
