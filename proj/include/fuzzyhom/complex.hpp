#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fuzzyhom/matrix.hpp"
#include "fuzzyhom/ring.hpp"

namespace fuzzyhom {

using Vertex = std::uint32_t;

/// Oriented simplex; the vertex list is strictly ascending, which fixes the
/// positive orientation.
class Simplex {
 public:
  Simplex() = default;
  /// Sorts the vertices; throws InvalidArgument on an empty list or a
  /// repeated vertex.
  explicit Simplex(std::vector<Vertex> vertices);
  Simplex(std::initializer_list<Vertex> vertices) : Simplex(std::vector<Vertex>(vertices)) {}

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t dim() const { return vertices_.size() - 1; }
  bool is_face_of(const Simplex& other) const;
  /// "[0,1,3]"
  std::string to_string() const;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend auto operator<=>(const Simplex&, const Simplex&) = default;

 private:
  std::vector<Vertex> vertices_;
};

/// Every non-empty face of s, s included; ordered by dimension, then
/// lexicographically.
std::vector<Simplex> faces(const Simplex& s);
/// The codimension-1 faces; entry j omits vertex j.
std::vector<Simplex> facets(const Simplex& s);

/// Finite abstract simplicial complex. E_d, the d-simplices, is kept in
/// lexicographic order and a simplex's basis index is its position there.
/// The default-constructed complex is empty (dim() == -1); it only arises
/// as an empty cut or intersection.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Downward closure. Throws InvalidArgument when `maximal` is empty.
  static SimplicialComplex from_maximal(const std::vector<std::vector<Vertex>>& maximal);
  /// Downward closure of arbitrary simplices; may be empty.
  static SimplicialComplex closure_of(std::span<const Simplex> simplices);
  /// The given simplices must already be face-closed; throws otherwise.
  static SimplicialComplex from_closed(std::span<const Simplex> simplices);

  bool empty() const { return by_dim_.empty(); }
  int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
  /// n_d; 0 outside [0, dim].
  std::size_t count(int d) const;
  std::size_t size() const;
  std::span<const Simplex> simplices(int d) const;
  const Simplex& simplex(int d, std::size_t i) const { return by_dim_.at(d).at(i); }
  std::optional<std::size_t> index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }
  /// All simplices by dimension, then lexicographically.
  std::vector<Simplex> all_simplices() const;
  std::vector<Simplex> maximal_simplices() const;
  bool is_subcomplex_of(const SimplicialComplex& other) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<std::vector<Simplex>> by_dim_;
};

SimplicialComplex intersection(const SimplicialComplex& a, const SimplicialComplex& b);

/// M_d, the n_{d-1} x n_d matrix of the boundary map in the simplex bases,
/// reduced into `ring`. M_0 is the 1 x n_0 zero matrix and M_{t+1} the
/// n_t x 1 zero matrix, t = dim(K). Throws InvalidArgument for d outside
/// [0, t+1] or an empty complex.
Matrix boundary_matrix(const SimplicialComplex& k, int d, const Ring& ring = Ring::integers());

}  // namespace fuzzyhom
