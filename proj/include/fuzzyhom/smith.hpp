#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fuzzyhom/execution.hpp"
#include "fuzzyhom/matrix.hpp"
#include "fuzzyhom/ring.hpp"

namespace fuzzyhom {

/// P * A * Q = D with P, Q invertible over the ring and
/// D = diag(d_1, ..., d_r, 0, ...), d_i | d_{i+1}, each d_i the canonical
/// associate (positive over Z, 1 over F_p). The inverses of P and Q are
/// accumulated alongside so callers never invert a matrix.
struct SmithDecomposition {
  Matrix P;
  Matrix P_inv;
  Matrix Q;
  Matrix Q_inv;
  Matrix D;
  std::size_t rank = 0;
  std::vector<Integer> invariant_factors;
};

/// Pivot rule: the non-zero entry of least absolute value in the remaining
/// submatrix, ties broken by smallest (row, col); over F_p, the first
/// non-zero entry in (row, col) order. The pivot is moved onto the diagonal
/// by one row swap and one column swap, and its sign is normalized by a
/// column scaling. Deterministic for a given input.
SmithDecomposition smith_normal_form(const Matrix& a, const Ring& ring,
                                     Execution exec = Execution::Parallel);

struct DiophantineSolution {
  bool solvable = false;
  std::optional<Vector> particular;
  /// Basis of the solution lattice of A x = 0.
  std::vector<Vector> homogeneous_basis;
  /// When unsolvable: the row i of D y = P b whose equation fails.
  std::optional<std::size_t> certificate_row;
};

/// Solves A x = b over the ring via the Smith form: y_i = (Pb)_i / d_i,
/// x = Q y.
DiophantineSolution solve(const Matrix& a, const Vector& b, const Ring& ring,
                          Execution exec = Execution::Parallel);
DiophantineSolution solve(const SmithDecomposition& smith, const Vector& b, const Ring& ring);

/// Basis of {x : A x = 0}, the columns of Q past the rank.
std::vector<Vector> kernel(const Matrix& a, const Ring& ring,
                           Execution exec = Execution::Parallel);

}  // namespace fuzzyhom
