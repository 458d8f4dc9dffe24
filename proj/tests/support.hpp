#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "fuzzyhom/complex.hpp"
#include "fuzzyhom/fuzzy.hpp"
#include "fuzzyhom/lattice.hpp"
#include "fuzzyhom/matrix.hpp"
#include "oracles.hpp"

namespace fixtures {

using namespace fuzzyhom;

// Bichromatic worked example: v0, v1, v3 red (x), v2, v4 blue (y).
inline FuzzySubcomplex bichromatic() {
  const auto k = SimplicialComplex::from_maximal({{0, 1}, {0, 3}, {1, 2, 3}, {4}});
  return chromatic(k, {{0, "x"}, {1, "x"}, {2, "y"}, {3, "x"}, {4, "y"}}, {"x", "y"});
}

// Six-vertex triangulation of the real projective plane.
inline SimplicialComplex projective_plane() {
  return SimplicialComplex::from_maximal({{1, 2, 4}, {1, 2, 6}, {1, 3, 5}, {1, 3, 6}, {1, 4, 5},
                                          {2, 3, 4}, {2, 3, 5}, {2, 5, 6}, {3, 4, 6}, {4, 5, 6}});
}

inline SimplicialComplex hollow_triangle() { return SimplicialComplex::from_maximal({{0, 1}, {0, 2}, {1, 2}}); }

inline SimplicialComplex tetrahedron_boundary() {
  return SimplicialComplex::from_maximal({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

inline Vector ints(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline oracle::IntMatrix to_oracle(const Matrix& m) {
  oracle::IntMatrix out(m.rows(), std::vector<oracle::Int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

// --- random generators ------------------------------------------------------

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi, double zero_bias = 0.0) {
  Matrix m(rows, cols);
  std::uniform_int_distribution<long> entry(lo, hi);
  std::bernoulli_distribution zero(zero_bias);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = zero(rng) ? 0 : entry(rng);
  return m;
}

// Random complex with at most `per_dim` simplices in each dimension and
// dimension at most `max_dim`.
inline SimplicialComplex random_complex(Rng& rng, std::size_t per_dim = 12, int max_dim = 3,
                                        std::size_t max_vertices = 8) {
  for (;;) {
    const std::size_t nv = uniform(rng, 1, max_vertices);
    const std::size_t n_max = uniform(rng, 1, 6);
    std::vector<std::vector<Vertex>> maximal;
    for (std::size_t m = 0; m < n_max; ++m) {
      const std::size_t size = uniform(rng, 1, std::min<std::size_t>(nv, static_cast<std::size_t>(max_dim) + 1));
      std::vector<Vertex> all(nv);
      for (std::size_t v = 0; v < nv; ++v) all[v] = static_cast<Vertex>(v);
      std::shuffle(all.begin(), all.end(), rng);
      maximal.emplace_back(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size));
    }
    auto k = SimplicialComplex::from_maximal(maximal);
    bool small = true;
    for (int d = 0; d <= k.dim(); ++d) small = small && k.count(d) <= per_dim;
    if (small) return k;
  }
}

inline std::shared_ptr<const Lattice> random_poset_lattice(Rng& rng, std::size_t max_elements, bool need_meet_prime) {
  for (;;) {
    const std::size_t n = uniform(rng, 1, max_elements);
    Poset p;
    for (std::size_t i = 0; i < n; ++i) p.elements.push_back("p" + std::to_string(i));
    std::bernoulli_distribution edge(0.4);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (edge(rng)) p.covers.emplace_back(p.elements[i], p.elements[j]);
    auto l = Lattice::up_set(p);
    if (!need_meet_prime || l->is_zero_meet_prime()) return l;
  }
}

// One lattice per family, chosen at random; all have 0 meet-prime unless
// the up-set family is asked for without that requirement.
inline std::shared_ptr<const Lattice> random_lattice(Rng& rng, int family, bool need_meet_prime = true) {
  switch (family % 3) {
    case 0: {
      std::vector<std::string> levels;
      const std::size_t n = uniform(rng, 2, 6);
      for (std::size_t i = 0; i < n; ++i) levels.push_back("l" + std::to_string(i));
      return Lattice::total_order(levels);
    }
    case 1: {
      std::vector<std::string> gens;
      const std::size_t n = uniform(rng, 1, 3);
      for (std::size_t i = 0; i < n; ++i) gens.push_back(std::string(1, static_cast<char>('x' + i)));
      return Lattice::free_distributive(gens);
    }
    default:
      return random_poset_lattice(rng, 5, need_meet_prime);
  }
}

inline LatticeValue random_element(Rng& rng, const std::vector<LatticeValue>& elements) {
  return elements[uniform(rng, 0, elements.size() - 1)];
}

// Face-monotone mu: random non-zero values on maximal simplices, completed
// by joins, with some faces raised further.
inline FuzzySubcomplex random_mu(Rng& rng, const SimplicialComplex& k, std::shared_ptr<const Lattice> lattice,
                                 bool allow_zero = false) {
  const auto elements = lattice->elements();
  std::vector<LatticeValue> nonzero;
  for (const auto& e : elements)
    if (allow_zero || !(e == lattice->bottom())) nonzero.push_back(e);
  std::vector<std::pair<Simplex, LatticeValue>> given;
  for (const Simplex& s : k.maximal_simplices()) given.emplace_back(s, random_element(rng, nonzero));
  FuzzySubcomplex base = FuzzySubcomplex::complete(k, lattice, given);

  std::bernoulli_distribution raise(0.25);
  std::vector<std::vector<LatticeValue>> values;
  for (int d = k.dim(); d >= 0; --d) {
    std::vector<LatticeValue> row;
    for (std::size_t i = 0; i < k.count(d); ++i) {
      LatticeValue v = base.value(d, i);
      if (d < k.dim()) {
        // Re-join with the (possibly raised) cofaces.
        const Simplex& s = k.simplex(d, i);
        const auto& upper = values.back();
        for (std::size_t c = 0; c < k.count(d + 1); ++c)
          if (s.is_face_of(k.simplex(d + 1, c))) v = lattice->join(v, upper[c]);
      }
      if (raise(rng)) v = lattice->join(v, random_element(rng, nonzero));
      row.push_back(v);
    }
    values.push_back(std::move(row));
  }
  std::reverse(values.begin(), values.end());
  return FuzzySubcomplex(k, std::move(lattice), std::move(values));
}

}  // namespace fixtures
