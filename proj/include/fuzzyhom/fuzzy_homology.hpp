#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "fuzzyhom/execution.hpp"
#include "fuzzyhom/fuzzy.hpp"
#include "fuzzyhom/homology.hpp"
#include "fuzzyhom/submodule.hpp"

namespace fuzzyhom {

/// Everything the fuzzy homology queries share: mu restricted to its
/// support, the reduced chain complex of that support, and per degree the
/// value sets L(delta_d) and L(kappa_d). Chain coordinates in every query
/// refer to the simplices of mu().complex(), i.e. of the support.
class FuzzyHomologyContext {
 public:
  /// Throws CapabilityError when 0 is not meet-prime in the lattice and
  /// InvalidArgument when mu is not face-monotone or has empty support.
  FuzzyHomologyContext(const FuzzySubcomplex& mu, Ring ring, Execution exec = Execution::Parallel);

  const FuzzySubcomplex& mu() const { return mu_; }
  const Lattice& lattice() const { return mu_.lattice(); }
  const ReducedChainComplex& reduced() const { return reduced_; }
  const Ring& ring() const { return reduced_.ring(); }
  Execution execution() const { return exec_; }
  int top_degree() const { return reduced_.top_degree(); }

  /// Distinct simplex values in degree d, in lattice order.
  const std::vector<LatticeValue>& delta_values(int d) const;
  /// Meet-closure of delta_values(d) together with 1, in lattice order.
  const std::vector<LatticeValue>& kappa_values(int d) const;

 private:
  FuzzySubcomplex mu_;
  ReducedChainComplex reduced_;
  Execution exec_;
  std::vector<std::vector<LatticeValue>> delta_;
  std::vector<std::vector<LatticeValue>> kappa_;
};

/// Meet of mu over the simplices with a non-zero coefficient; 1 for c = 0.
LatticeValue kappa(const FuzzyHomologyContext& ctx, int d, const Vector& c);

/// Indices i (0-based) with mu(sigma_i) not >= level.
std::vector<std::size_t> index_set(const FuzzyHomologyContext& ctx, int d, const LatticeValue& level);

/// (U_d | T_d A_d) restricted to `rows`, right-hand side -c restricted to
/// `rows`. Solvable iff c plus some boundary vanishes on those rows.
struct ConstraintSystem {
  int degree = 0;
  std::vector<std::size_t> rows;
  Matrix matrix;
  Vector rhs;
};

ConstraintSystem constraint_system(const FuzzyHomologyContext& ctx, int d, const Vector& c,
                                   std::vector<std::size_t> rows);
bool is_solvable(const FuzzyHomologyContext& ctx, const ConstraintSystem& system);

/// H_d(level): the classes with a representative supported on simplices of
/// value >= level, as the projection of ker (U | T | F) restricted to
/// I(level).
SubmoduleOfHomology hdl_submodule(const FuzzyHomologyContext& ctx, int d, const LatticeValue& level);

struct EtaTrace {
  LatticeValue value;
  /// The levels of L(kappa_d) whose constraint system is solvable, in the
  /// order of kappa_values(d).
  std::vector<LatticeValue> solvable_levels;
};

/// eta_d of the class: the join of the levels l in L(kappa_d) with
/// [h] in H_d(l).
EtaTrace eta_trace(const FuzzyHomologyContext& ctx, const ClassCoordinates& h);
LatticeValue eta_value(const FuzzyHomologyContext& ctx, const ClassCoordinates& h);

enum class CutStrategy {
  /// ChainFastPath when L(kappa_d) is a chain, else MinimalCovers.
  Auto,
  /// H_d(min {s in L(kappa_d) : s >= level}), or {0}. Requires a chain.
  ChainFastPath,
  /// Sum, over the subsets S of L(kappa_d) with join(S) >= level and no
  /// proper subset doing the same, of the intersection of the H_d(s). Such
  /// S are antichains, and every other S only shrinks the intersection.
  MinimalCovers,
  /// Same over all subsets; the unpruned reference.
  AllSubsets,
};

/// AllSubsets is refused (CapabilityError) beyond this many levels.
inline constexpr std::size_t kMaxCutLevels = 16;
/// MinimalCovers is refused once its search visits this many nodes.
inline constexpr std::size_t kMaxCoverSearch = std::size_t{1} << 22;

/// The cut eta_d^{>= level}.
SubmoduleOfHomology eta_cut(const FuzzyHomologyContext& ctx, int d, const LatticeValue& level,
                            CutStrategy strategy = CutStrategy::Auto);

/// Join-closure of L(kappa_d): the levels at which the rank of the cut can
/// change.
std::vector<LatticeValue> default_rank_levels(const FuzzyHomologyContext& ctx, int d);
/// Betti number of eta_cut at each level.
std::vector<std::pair<LatticeValue, std::size_t>> rank_cut_table(const FuzzyHomologyContext& ctx, int d,
                                                                 const std::vector<LatticeValue>& levels);

/// Reference eta over Z/p: join of kappa(z + b) over every boundary b.
/// Refuses (CapabilityError) when the boundary group has more than `cap`
/// elements. z must be a cycle of degree d.
inline constexpr std::size_t kBruteForceCap = std::size_t{1} << 20;
LatticeValue brute_force_eta(const FuzzyHomologyContext& ctx, int d, const Vector& z,
                             std::size_t cap = kBruteForceCap);

struct GeneratorEta {
  Vector chain;
  ClassCoordinates coordinates;
  EtaTrace eta;
};

/// eta_d on the generators of H_d (torsion first, then free), the family
/// H_d(l) over L(kappa_d), and the cuts at `cut_levels` (L(kappa_d) when
/// absent).
struct EtaReport {
  int degree = 0;
  ModuleStructure structure;
  std::vector<GeneratorEta> generators;
  std::vector<std::pair<LatticeValue, ModuleStructure>> hdl;
  std::vector<std::pair<LatticeValue, ModuleStructure>> cuts;
};

EtaReport eta_report(const FuzzyHomologyContext& ctx, int d,
                     const std::optional<std::vector<LatticeValue>>& cut_levels = std::nullopt);

}  // namespace fuzzyhom
