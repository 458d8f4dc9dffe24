#pragma once

#include <cstddef>
#include <vector>

#include "fuzzyhom/complex.hpp"
#include "fuzzyhom/execution.hpp"
#include "fuzzyhom/matrix.hpp"
#include "fuzzyhom/ring.hpp"
#include "fuzzyhom/submodule.hpp"

namespace fuzzyhom {

/// One degree of the reduced chain complex. The columns of to_delta are the
/// reduced basis E^H_d written in simplex coordinates, grouped as
///   U: boundaries with a unit factor, T: torsion cycles (factor a_i),
///   R: chains that are not cycles, F: free cycle generators,
/// in that order.
struct DegreeReduction {
  Matrix boundary;    // M_d
  Matrix reduced;     // D_d = from_delta(d-1) * M_d * to_delta(d)
  Matrix to_delta;    // M^{Delta,H}_d
  Matrix from_delta;  // M^{H,Delta}_d, the inverse of to_delta
  std::size_t n_u = 0, n_t = 0, n_r = 0, n_f = 0;
  std::vector<Integer> torsion;  // a_1 | ... | a_{n_t}

  std::size_t size() const { return n_u + n_t + n_r + n_f; }
  Matrix U() const { return to_delta.column_block(0, n_u); }
  Matrix T() const { return to_delta.column_block(n_u, n_t); }
  Matrix R() const { return to_delta.column_block(n_u + n_t, n_r); }
  Matrix F() const { return to_delta.column_block(n_u + n_t + n_r, n_f); }
};

/// The reduction runs from the top degree down, each step taking a Smith
/// form of the boundary matrix expressed in the basis fixed by the step
/// above, so consecutive D_d share their bases and D_d * D_{d+1} = 0.
class ReducedChainComplex {
 public:
  ReducedChainComplex(SimplicialComplex complex, Ring ring, Execution exec = Execution::Parallel);

  const SimplicialComplex& complex() const { return complex_; }
  const Ring& ring() const { return ring_; }
  int top_degree() const { return complex_.dim(); }
  /// d in [0, top_degree()].
  const DegreeReduction& degree(int d) const;
  HomologyAmbient ambient(int d) const;

 private:
  SimplicialComplex complex_;
  Ring ring_;
  std::vector<DegreeReduction> degrees_;
};

inline ReducedChainComplex reduce(const SimplicialComplex& k, const Ring& ring,
                                  Execution exec = Execution::Parallel) {
  return ReducedChainComplex(k, ring, exec);
}

struct DegreeHomology {
  ModuleStructure structure;
  std::vector<Vector> free_generators;     // columns of F_d
  std::vector<Vector> torsion_generators;  // columns of T_d
};

struct HomologyStructure {
  Ring ring;
  std::vector<DegreeHomology> degrees;
};

HomologyStructure homology(const ReducedChainComplex& r);
HomologyStructure homology(const SimplicialComplex& k, const Ring& ring, Execution exec = Execution::Parallel);

/// A class of H_d = (+) D/(a_i) (+) D^{n_F}: alpha reduced modulo a_i,
/// phi the free part.
struct ClassCoordinates {
  int degree = 0;
  Vector alpha;
  Vector phi;

  /// alpha followed by phi, the layout SubmoduleOfHomology uses.
  Vector flat() const;
  friend bool operator==(const ClassCoordinates&, const ClassCoordinates&) = default;
};

/// Throws InvalidArgument when M_d z != 0.
ClassCoordinates class_of_cycle(const ReducedChainComplex& r, int d, const Vector& z);
/// T_d alpha + F_d phi.
Vector cycle_of_class(const ReducedChainComplex& r, const ClassCoordinates& c);
/// Splits a flat (alpha, phi) vector of degree d.
ClassCoordinates class_from_flat(const ReducedChainComplex& r, int d, const Vector& flat);

}  // namespace fuzzyhom
