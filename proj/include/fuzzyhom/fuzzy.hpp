#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fuzzyhom/complex.hpp"
#include "fuzzyhom/lattice.hpp"

namespace fuzzyhom {

/// A map mu from the simplices of a complex into a lattice. Face
/// monotonicity (faces never get smaller values than their cofaces) is not
/// enforced on construction; see validate().
class FuzzySubcomplex {
 public:
  /// values[d][i] is mu of the i-th d-simplex.
  FuzzySubcomplex(SimplicialComplex complex, std::shared_ptr<const Lattice> lattice,
                  std::vector<std::vector<LatticeValue>> values);

  static FuzzySubcomplex constant(SimplicialComplex complex, std::shared_ptr<const Lattice> lattice,
                                  const LatticeValue& value);
  /// Simplices listed in `given` keep their value verbatim. Every other
  /// simplex gets the join of its cofaces' values, working down from the
  /// top dimension. A maximal simplex without a value is an error.
  static FuzzySubcomplex complete(SimplicialComplex complex, std::shared_ptr<const Lattice> lattice,
                                  const std::vector<std::pair<Simplex, LatticeValue>>& given);

  const SimplicialComplex& complex() const { return complex_; }
  const Lattice& lattice() const { return *lattice_; }
  const std::shared_ptr<const Lattice>& lattice_ptr() const { return lattice_; }

  std::span<const LatticeValue> values(int d) const;
  const LatticeValue& value(int d, std::size_t i) const { return values_.at(d).at(i); }
  /// Throws InvalidArgument for a simplex outside the complex.
  const LatticeValue& value(const Simplex& s) const;

 private:
  SimplicialComplex complex_;
  std::shared_ptr<const Lattice> lattice_;
  std::vector<std::vector<LatticeValue>> values_;
};

struct Violation {
  Simplex face;
  Simplex coface;
};

/// Codimension-1 pairs with mu(face) not >= mu(coface).
std::vector<Violation> validate(const FuzzySubcomplex& mu);

/// {s : mu(s) >= level}; empty when nothing qualifies.
SimplicialComplex cut(const FuzzySubcomplex& mu, const LatticeValue& level);
/// {s : mu(s) > 0}.
SimplicialComplex support(const FuzzySubcomplex& mu);
/// The cut at 1.
SimplicialComplex core(const FuzzySubcomplex& mu);
/// mu restricted to its support. Throws InvalidArgument if the support is
/// empty.
FuzzySubcomplex restrict_to_support(const FuzzySubcomplex& mu);

/// mu(s) = meet of the colours of its vertices, over FDL(palette).
FuzzySubcomplex chromatic(const SimplicialComplex& k, const std::map<Vertex, std::string>& labels,
                          const std::vector<std::string>& palette);
/// Same, into an existing free distributive lattice.
FuzzySubcomplex chromatic(const SimplicialComplex& k, const std::map<Vertex, std::string>& labels,
                          std::shared_ptr<const Lattice> fdl);

/// Labelled point cloud with exact rational coordinates.
struct ChromaticDataset {
  std::vector<std::vector<mpq_class>> points;
  std::vector<std::string> labels;

  /// Sorted distinct labels.
  std::vector<std::string> palette() const;
};

/// Vietoris-Rips complex at `radius` (closed: an edge exists when the
/// distance is <= radius), cliques up to dimension max_dim, coloured by
/// chromatic() over the dataset's palette. Vertex i is point i.
FuzzySubcomplex vietoris_rips(const ChromaticDataset& data, const mpq_class& radius, int max_dim);

/// mu_F(s) = {p : s in stages(p)} over the up-set lattice of `poset`.
/// Stages missing from the map are empty. Throws InvalidArgument when some
/// cover p < q has stages(p) not inside stages(q), or all stages are empty.
FuzzySubcomplex from_filtration(const Poset& poset, const std::map<std::string, SimplicialComplex>& stages);

/// Checks a lattice-indexed family of subcomplexes against the conditions
/// that make it the cut family of a fuzzy subcomplex: decreasing in the
/// level, M(a | b) = M(a) & M(b) whenever a | b is among the levels, and
/// M(0) = union of all. Returns one message per failure.
std::vector<std::string> filtration_violations(
    const Lattice& lattice, const std::vector<std::pair<LatticeValue, SimplicialComplex>>& levels);

}  // namespace fuzzyhom
