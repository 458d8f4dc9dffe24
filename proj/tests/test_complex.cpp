#include <doctest.h>

#include "fuzzyhom/complex.hpp"
#include "fuzzyhom/error.hpp"
#include "support.hpp"

using namespace fuzzyhom;

TEST_CASE("closure of maximal simplices") {
  const auto k = SimplicialComplex::from_maximal({{0, 1}, {0, 3}, {1, 2, 3}, {4}});
  CHECK(k.count(0) == 5);
  CHECK(k.count(1) == 5);
  CHECK(k.count(2) == 1);
  CHECK(k.dim() == 2);
  CHECK(k.simplex(1, 2) == Simplex{1, 2});

  const auto point = SimplicialComplex::from_maximal({{7}});
  CHECK(point.dim() == 0);
  CHECK(point.count(0) == 1);

  const auto tet = SimplicialComplex::from_maximal({{3, 1, 0, 2}});
  CHECK(tet.count(0) == 4);
  CHECK(tet.count(1) == 6);
  CHECK(tet.count(2) == 4);
  CHECK(tet.count(3) == 1);

  CHECK_THROWS_AS(SimplicialComplex::from_maximal({}), InvalidArgument);
  CHECK_THROWS_AS(SimplicialComplex::from_maximal({{1, 1}}), InvalidArgument);
  CHECK_THROWS_AS(SimplicialComplex::from_maximal({{}}), InvalidArgument);
}

TEST_CASE("faces of a simplex") {
  const auto f = faces(Simplex{1, 2, 3});
  CHECK(f == std::vector<Simplex>{{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}});
  CHECK(faces(Simplex{4}) == std::vector<Simplex>{{4}});
  CHECK(faces(Simplex{0, 1, 2, 3}).size() == 15);
}

TEST_CASE("boundary matrices of the bichromatic complex") {
  const auto k = SimplicialComplex::from_maximal({{0, 1}, {0, 3}, {1, 2, 3}, {4}});
  const Matrix m1 = boundary_matrix(k, 1);
  CHECK(m1 == Matrix::from_rows({{-1, -1, 0, 0, 0},
                                 {1, 0, -1, -1, 0},
                                 {0, 0, 1, 0, -1},
                                 {0, 1, 0, 1, 1},
                                 {0, 0, 0, 0, 0}}));
  CHECK(boundary_matrix(k, 2) == Matrix::from_rows({{0}, {0}, {1}, {-1}, {1}}));
  const Matrix m0 = boundary_matrix(k, 0);
  CHECK(m0.rows() == 1);
  CHECK(m0.cols() == 5);
  CHECK(m0.is_zero());
  const Matrix m3 = boundary_matrix(k, 3);
  CHECK(m3.rows() == 1);
  CHECK(m3.cols() == 1);
  CHECK(m3.is_zero());
  CHECK_THROWS_AS(boundary_matrix(k, 4), InvalidArgument);
  CHECK_THROWS_AS(boundary_matrix(k, -1), InvalidArgument);
}

TEST_CASE("boundary of boundary vanishes and columns alternate") {
  fixtures::Rng rng(5);
  const Ring z = Ring::integers();
  for (int trial = 0; trial < 200; ++trial) {
    const auto k = fixtures::random_complex(rng, 20, 4, 7);
    for (int d = 0; d <= k.dim(); ++d) {
      const Matrix a = boundary_matrix(k, d), b = boundary_matrix(k, d + 1);
      CHECK(multiply(a, b, z).is_zero());
      if (d == 0) continue;
      for (std::size_t c = 0; c < a.cols(); ++c) {
        std::vector<long> signs;
        for (std::size_t r = 0; r < a.rows(); ++r)
          if (a(r, c) != 0) signs.push_back(a(r, c).get_si());
        REQUIRE(signs.size() == static_cast<std::size_t>(d + 1));
        // Rows are in lexicographic order, so dropping the last vertex
        // comes first; signs alternate from there.
        for (std::size_t i = 1; i < signs.size(); ++i) CHECK(signs[i] == -signs[i - 1]);
      }
    }
  }
}

TEST_CASE("from_maximal is idempotent") {
  fixtures::Rng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const auto k = fixtures::random_complex(rng);
    std::vector<std::vector<Vertex>> maximal;
    for (const auto& s : k.maximal_simplices()) maximal.push_back(s.vertices());
    CHECK(SimplicialComplex::from_maximal(maximal) == k);
  }
}

TEST_CASE("subcomplexes and intersections") {
  const auto a = SimplicialComplex::from_maximal({{0, 1, 2}});
  const auto b = SimplicialComplex::from_maximal({{1, 2, 3}});
  const auto c = intersection(a, b);
  CHECK(c == SimplicialComplex::from_maximal({{1, 2}}));
  CHECK(c.is_subcomplex_of(a));
  CHECK_FALSE(a.is_subcomplex_of(b));
  CHECK(intersection(SimplicialComplex::from_maximal({{0}}), SimplicialComplex::from_maximal({{1}})).empty());
  const std::vector<Simplex> open{{0, 1}};
  CHECK_THROWS_AS(SimplicialComplex::from_closed(open), InvalidArgument);
}
