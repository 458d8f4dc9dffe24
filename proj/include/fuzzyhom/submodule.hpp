#pragma once

#include <cstddef>
#include <vector>

#include "fuzzyhom/execution.hpp"
#include "fuzzyhom/matrix.hpp"
#include "fuzzyhom/ring.hpp"

namespace fuzzyhom {

/// Isomorphism type of a finitely generated module: betti number plus the
/// non-zero, non-unit invariant factors a_1 | ... | a_m.
struct ModuleStructure {
  std::size_t betti = 0;
  std::vector<Integer> torsion;

  bool is_zero() const { return betti == 0 && torsion.empty(); }
  friend bool operator==(const ModuleStructure&, const ModuleStructure&) = default;
};

/// The module (+)_i D/(a_i) (+) D^free_rank in which homology classes live.
/// Coordinates are (alpha_1..alpha_nT, phi_1..phi_nF).
struct HomologyAmbient {
  Ring ring;
  std::vector<Integer> torsion;
  std::size_t free_rank = 0;

  std::size_t size() const { return torsion.size() + free_rank; }
  /// Reduces alpha components into [0, a_i) and everything into the ring.
  Vector normalize(Vector v) const;
  friend bool operator==(const HomologyAmbient&, const HomologyAmbient&) = default;
};

/// A submodule of a HomologyAmbient, kept as a (possibly redundant)
/// generator list. Equality of two submodules is mutual containment.
struct SubmoduleOfHomology {
  HomologyAmbient ambient;
  std::vector<Vector> generators;

  static SubmoduleOfHomology zero(HomologyAmbient ambient);
  static SubmoduleOfHomology full(HomologyAmbient ambient);
};

/// Structure of S: lift the generators to D^n, take the lattice they span
/// together with the relations a_i e_i, and compute its quotient by the
/// relation lattice through a Smith form.
ModuleStructure module_structure(const SubmoduleOfHomology& s,
                                 Execution exec = Execution::Parallel);

bool submodule_member(const SubmoduleOfHomology& s, const Vector& v,
                      Execution exec = Execution::Parallel);
/// inner ⊆ outer.
bool submodule_contains(const SubmoduleOfHomology& outer, const SubmoduleOfHomology& inner,
                        Execution exec = Execution::Parallel);
bool submodule_equal(const SubmoduleOfHomology& a, const SubmoduleOfHomology& b,
                     Execution exec = Execution::Parallel);

SubmoduleOfHomology submodule_intersect(const SubmoduleOfHomology& a, const SubmoduleOfHomology& b,
                                        Execution exec = Execution::Parallel);
SubmoduleOfHomology submodule_sum(const SubmoduleOfHomology& a, const SubmoduleOfHomology& b);

}  // namespace fuzzyhom
