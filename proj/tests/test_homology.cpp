#include <doctest.h>

#include "fuzzyhom/error.hpp"
#include "fuzzyhom/homology.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace fuzzyhom;
using fixtures::ints;

namespace {

const Ring Z = Ring::integers();

void check_reduction(const ReducedChainComplex& r) {
  const Ring& ring = r.ring();
  for (int d = 0; d <= r.top_degree(); ++d) {
    const DegreeReduction& deg = r.degree(d);
    CHECK(multiply(deg.from_delta, deg.to_delta, ring) == Matrix::identity(deg.size()));
    CHECK(deg.size() == r.complex().count(d));
    if (d > 0) {
      const Matrix back = multiply(multiply(r.degree(d - 1).from_delta, deg.boundary, ring), deg.to_delta, ring);
      CHECK(back == deg.reduced);
    }
    if (d < r.top_degree()) {
      CHECK(multiply(deg.reduced, r.degree(d + 1).reduced, ring).is_zero());
      // The first r_{d+1} columns of D_d are zero.
      const std::size_t r_above = deg.n_u + deg.n_t;
      CHECK(deg.reduced.column_block(0, r_above).is_zero());
    }
    for (std::size_t i = 0; i + 1 < deg.torsion.size(); ++i) CHECK(ring.divides(deg.torsion[i], deg.torsion[i + 1]));
    for (const Integer& a : deg.torsion) CHECK_FALSE(ring.is_unit(a));
    if (ring.is_field()) CHECK(deg.n_t == 0);
    // T and F columns are cycles.
    CHECK(multiply(deg.boundary, deg.T(), ring).is_zero());
    CHECK(multiply(deg.boundary, deg.F(), ring).is_zero());
    CHECK(multiply(deg.boundary, deg.U(), ring).is_zero());
  }
}

}  // namespace

TEST_CASE("bichromatic reduction") {
  const auto k = fixtures::bichromatic().complex();
  const ReducedChainComplex r(k, Z);
  check_reduction(r);
  const auto& d0 = r.degree(0);
  CHECK(d0.n_u == 3);
  CHECK(d0.n_t == 0);
  CHECK(d0.n_r == 0);
  CHECK(d0.n_f == 2);
  const auto& d1 = r.degree(1);
  CHECK(d1.n_u == 1);
  CHECK(d1.n_t == 0);
  CHECK(d1.n_r == 3);
  CHECK(d1.n_f == 1);
  CHECK(d1.reduced == Matrix::from_rows({{0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}}));
  CHECK(d1.to_delta == Matrix::from_rows({{0, 0, 1, 0, 1},
                                          {0, -1, -1, 0, -1},
                                          {1, 0, 0, 0, 0},
                                          {-1, 0, 0, 0, 1},
                                          {1, 0, 0, -1, 0}}));
  CHECK(d0.to_delta.row(3) == ints({-1, -1, -1, 1, 0}));
  CHECK(r.degree(2).n_u == 0);
  CHECK(r.degree(2).n_r == 1);

  const auto h = homology(r);
  CHECK(h.degrees[0].structure == ModuleStructure{2, {}});
  CHECK(h.degrees[0].free_generators == std::vector<Vector>{ints({0, 0, 0, 1, 0}), ints({0, 0, 0, 0, 1})});
  CHECK(h.degrees[1].structure == ModuleStructure{1, {}});
  CHECK(h.degrees[1].free_generators == std::vector<Vector>{ints({1, -1, 0, 1, 0})});
  CHECK(h.degrees[2].structure.is_zero());
}

TEST_CASE("small classical examples") {
  const auto point = homology(SimplicialComplex::from_maximal({{0}}), Z);
  REQUIRE(point.degrees.size() == 1);
  CHECK(point.degrees[0].structure == ModuleStructure{1, {}});

  const auto circle = homology(fixtures::hollow_triangle(), Z);
  CHECK(circle.degrees[0].structure.betti == 1);
  CHECK(circle.degrees[1].structure.betti == 1);

  const auto sphere = homology(fixtures::tetrahedron_boundary(), Z);
  CHECK(sphere.degrees[0].structure.betti == 1);
  CHECK(sphere.degrees[1].structure.is_zero());
  CHECK(sphere.degrees[2].structure.betti == 1);
}

TEST_CASE("projective plane torsion") {
  const auto k = fixtures::projective_plane();
  const ReducedChainComplex rz(k, Z);
  check_reduction(rz);
  const auto hz = homology(rz);
  CHECK(hz.degrees[0].structure == ModuleStructure{1, {}});
  CHECK(hz.degrees[1].structure == ModuleStructure{0, ints({2})});
  CHECK(hz.degrees[2].structure.is_zero());
  REQUIRE(hz.degrees[1].torsion_generators.size() == 1);

  const ReducedChainComplex r2(k, Ring::integers_mod(2));
  check_reduction(r2);
  const auto h2 = homology(r2);
  CHECK(h2.degrees[1].structure == ModuleStructure{1, {}});
  CHECK(h2.degrees[2].structure == ModuleStructure{1, {}});

  // Twice the torsion generator is a boundary.
  const Vector t = hz.degrees[1].torsion_generators[0];
  const auto c = class_of_cycle(rz, 1, scale(2, t, Z));
  CHECK(c.alpha == ints({0}));
  CHECK(class_of_cycle(rz, 1, t).alpha == ints({1}));
}

TEST_CASE("classes of cycles") {
  const auto k = fixtures::bichromatic().complex();
  const ReducedChainComplex r(k, Z);
  const Vector f = ints({1, -1, 0, 1, 0});
  auto c = class_of_cycle(r, 1, f);
  CHECK(c.phi == ints({1}));
  CHECK(c.alpha.empty());
  CHECK(class_of_cycle(r, 1, ints({0, 0, 0, 0, 0})).phi == ints({0}));
  // Adding the boundary of the triangle does not change the class.
  const Vector u = ints({0, 0, 1, -1, 1});
  CHECK(class_of_cycle(r, 1, add(f, u, Z)) == c);
  CHECK(cycle_of_class(r, c) == f);
  CHECK_THROWS_AS(class_of_cycle(r, 1, ints({1, 0, 0, 0, 0})), InvalidArgument);
  CHECK_THROWS_AS(class_of_cycle(r, 1, ints({1, 0})), InvalidArgument);
  CHECK_THROWS_AS(r.degree(3), InvalidArgument);
}

TEST_CASE("betti numbers match rank-nullity on random complexes") {
  fixtures::Rng rng(9);
  for (int trial = 0; trial < 120; ++trial) {
    const auto k = fixtures::random_complex(rng, 12, 3, 7);
    for (long p : {0L, 2L, 3L}) {
      const Ring ring = p ? Ring::integers_mod(p) : Z;
      const ReducedChainComplex r(k, ring);
      check_reduction(r);
      for (int d = 0; d <= k.dim(); ++d) {
        const std::size_t rank_d = d == 0 ? 0 : oracle::rank(fixtures::to_oracle(boundary_matrix(k, d)), p);
        const std::size_t rank_up =
            d == k.dim() ? 0 : oracle::rank(fixtures::to_oracle(boundary_matrix(k, d + 1)), p);
        CHECK(r.degree(d).n_f == k.count(d) - rank_d - rank_up);
      }
    }
  }
}

TEST_CASE("class coordinates round trip") {
  fixtures::Rng rng(10);
  std::vector<SimplicialComplex> ks{fixtures::projective_plane(), fixtures::bichromatic().complex()};
  for (int i = 0; i < 30; ++i) ks.push_back(fixtures::random_complex(rng));
  for (const auto& k : ks) {
    const ReducedChainComplex r(k, Z);
    for (int d = 0; d <= k.dim(); ++d) {
      const auto& deg = r.degree(d);
      for (int sample = 0; sample < 10; ++sample) {
        ClassCoordinates c;
        c.degree = d;
        for (std::size_t i = 0; i < deg.n_t; ++i) {
          Integer a = static_cast<long>(fixtures::uniform(rng, 0, 20));
          mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), deg.torsion[i].get_mpz_t());
          c.alpha.push_back(a);
        }
        for (std::size_t i = 0; i < deg.n_f; ++i) c.phi.emplace_back(static_cast<long>(fixtures::uniform(rng, 0, 6)) - 3);
        CHECK(class_of_cycle(r, d, cycle_of_class(r, c)) == c);
      }
    }
  }
}
