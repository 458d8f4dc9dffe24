#include "fuzzyhom/smith.hpp"

#include <cassert>
#include <optional>
#include <utility>

#include "fuzzyhom/error.hpp"

namespace fuzzyhom {

namespace {

// Carries A together with P, P^-1, Q, Q^-1 so that P * A0 * Q = A holds
// after every elementary operation.
class SmithWorker {
 public:
  SmithWorker(const Matrix& a, const Ring& ring, Execution exec)
      : ring_(ring),
        exec_(exec),
        a_(a),
        p_(Matrix::identity(a.rows())),
        p_inv_(Matrix::identity(a.rows())),
        q_(Matrix::identity(a.cols())),
        q_inv_(Matrix::identity(a.cols())) {
    a_.reduce(ring_);
  }

  SmithDecomposition run() {
    const std::size_t m = a_.rows();
    const std::size_t n = a_.cols();
    std::size_t rank = 0;
    for (std::size_t k = 0; k < std::min(m, n); ++k) {
      if (!reduce_step(k)) break;
      normalize_sign(k);
      ++rank;
    }

    SmithDecomposition out;
    out.rank = rank;
    for (std::size_t k = 0; k < rank; ++k) out.invariant_factors.push_back(a_(k, k));
    out.D = std::move(a_);
    out.P = std::move(p_);
    out.P_inv = std::move(p_inv_);
    out.Q = std::move(q_);
    out.Q_inv = std::move(q_inv_);
    return out;
  }

 private:
  // Clears row and column k and establishes d_k | every remaining entry.
  // Returns false when the remaining submatrix is zero.
  bool reduce_step(std::size_t k) {
    for (;;) {
      auto pivot = find_pivot(k);
      if (!pivot) return false;
      a_.swap_rows(k, pivot->first);
      p_.swap_rows(k, pivot->first);
      p_inv_.swap_cols(k, pivot->first);
      a_.swap_cols(k, pivot->second);
      q_.swap_cols(k, pivot->second);
      q_inv_.swap_rows(k, pivot->second);

      eliminate_column(k);
      eliminate_row(k);
      if (!row_and_column_clear(k)) continue;

      if (auto bad = non_divisible_row(k)) {
        add_row_to_pivot(k, *bad);
        continue;
      }
      return true;
    }
  }

  std::optional<std::pair<std::size_t, std::size_t>> find_pivot(std::size_t k) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = k; i < a_.rows(); ++i) {
      for (std::size_t j = k; j < a_.cols(); ++j) {
        const Integer& x = a_(i, j);
        if (x == 0) continue;
        if (ring_.is_field()) return std::pair{i, j};
        const Integer& cur = best ? a_(best->first, best->second) : x;
        if (!best || mpz_cmpabs(x.get_mpz_t(), cur.get_mpz_t()) < 0) best = std::pair{i, j};
      }
    }
    return best;
  }

  // Row ops: row_i -= q_i * row_k for i > k.
  void eliminate_column(std::size_t k) {
    const std::size_t m = a_.rows();
    const std::size_t n = a_.cols();
    std::vector<Integer> q(m);
    bool any = false;
    for (std::size_t i = k + 1; i < m; ++i) {
      if (a_(i, k) != 0) {
        q[i] = ring_.euclid_quotient(a_(i, k), a_(k, k));
        any = any || q[i] != 0;
      }
    }
    if (!any) return;

    const auto rows = static_cast<std::ptrdiff_t>(m);
#pragma omp parallel for schedule(dynamic) if (run_parallel(exec_, m - k))
    for (std::ptrdiff_t si = static_cast<std::ptrdiff_t>(k) + 1; si < rows; ++si) {
      const auto i = static_cast<std::size_t>(si);
      if (q[i] == 0) continue;
      for (std::size_t j = k; j < n; ++j) {
        if (a_(k, j) == 0) continue;
        a_(i, j) -= q[i] * a_(k, j);
        ring_.reduce_in_place(a_(i, j));
      }
      for (std::size_t j = 0; j < m; ++j) {
        if (p_(k, j) == 0) continue;
        p_(i, j) -= q[i] * p_(k, j);
        ring_.reduce_in_place(p_(i, j));
      }
    }
    // P^-1 absorbs the inverse column operations: col_k += q_i * col_i.
#pragma omp parallel for schedule(dynamic) if (run_parallel(exec_, m))
    for (std::ptrdiff_t sr = 0; sr < rows; ++sr) {
      const auto r = static_cast<std::size_t>(sr);
      Integer acc = p_inv_(r, k);
      for (std::size_t i = k + 1; i < m; ++i)
        if (q[i] != 0 && p_inv_(r, i) != 0) acc += q[i] * p_inv_(r, i);
      ring_.reduce_in_place(acc);
      p_inv_(r, k) = std::move(acc);
    }
  }

  // Column ops: col_j -= q_j * col_k for j > k.
  void eliminate_row(std::size_t k) {
    const std::size_t m = a_.rows();
    const std::size_t n = a_.cols();
    std::vector<Integer> q(n);
    bool any = false;
    for (std::size_t j = k + 1; j < n; ++j) {
      if (a_(k, j) != 0) {
        q[j] = ring_.euclid_quotient(a_(k, j), a_(k, k));
        any = any || q[j] != 0;
      }
    }
    if (!any) return;

    const auto cols = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic) if (run_parallel(exec_, n - k))
    for (std::ptrdiff_t sj = static_cast<std::ptrdiff_t>(k) + 1; sj < cols; ++sj) {
      const auto j = static_cast<std::size_t>(sj);
      if (q[j] == 0) continue;
      for (std::size_t i = k; i < m; ++i) {
        if (a_(i, k) == 0) continue;
        a_(i, j) -= q[j] * a_(i, k);
        ring_.reduce_in_place(a_(i, j));
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (q_(i, k) == 0) continue;
        q_(i, j) -= q[j] * q_(i, k);
        ring_.reduce_in_place(q_(i, j));
      }
    }
    // Q^-1 absorbs the inverse row operations: row_k += q_j * row_j.
#pragma omp parallel for schedule(dynamic) if (run_parallel(exec_, n))
    for (std::ptrdiff_t sc = 0; sc < cols; ++sc) {
      const auto c = static_cast<std::size_t>(sc);
      Integer acc = q_inv_(k, c);
      for (std::size_t j = k + 1; j < n; ++j)
        if (q[j] != 0 && q_inv_(j, c) != 0) acc += q[j] * q_inv_(j, c);
      ring_.reduce_in_place(acc);
      q_inv_(k, c) = std::move(acc);
    }
  }

  bool row_and_column_clear(std::size_t k) const {
    for (std::size_t i = k + 1; i < a_.rows(); ++i)
      if (a_(i, k) != 0) return false;
    for (std::size_t j = k + 1; j < a_.cols(); ++j)
      if (a_(k, j) != 0) return false;
    return true;
  }

  std::optional<std::size_t> non_divisible_row(std::size_t k) const {
    if (ring_.is_field()) return std::nullopt;
    for (std::size_t i = k + 1; i < a_.rows(); ++i)
      for (std::size_t j = k + 1; j < a_.cols(); ++j)
        if (a_(i, j) != 0 && !ring_.divides(a_(k, k), a_(i, j))) return i;
    return std::nullopt;
  }

  // row_k += row_i; P^-1: col_i -= col_k.
  void add_row_to_pivot(std::size_t k, std::size_t i) {
    for (std::size_t j = 0; j < a_.cols(); ++j) {
      a_(k, j) += a_(i, j);
      ring_.reduce_in_place(a_(k, j));
    }
    for (std::size_t j = 0; j < p_.cols(); ++j) {
      p_(k, j) += p_(i, j);
      ring_.reduce_in_place(p_(k, j));
    }
    for (std::size_t r = 0; r < p_inv_.rows(); ++r) {
      p_inv_(r, i) -= p_inv_(r, k);
      ring_.reduce_in_place(p_inv_(r, i));
    }
  }

  void normalize_sign(std::size_t k) {
    const Integer u = ring_.unit_normalizer(a_(k, k));
    if (u == 1) return;
    const Integer u_inv = ring_.inverse(u);
    a_(k, k) = ring_.reduce(a_(k, k) * u);
    for (std::size_t i = 0; i < q_.rows(); ++i) q_(i, k) = ring_.reduce(q_(i, k) * u);
    for (std::size_t j = 0; j < q_inv_.cols(); ++j) q_inv_(k, j) = ring_.reduce(q_inv_(k, j) * u_inv);
  }

  const Ring& ring_;
  Execution exec_;
  Matrix a_;
  Matrix p_;
  Matrix p_inv_;
  Matrix q_;
  Matrix q_inv_;
};

}  // namespace

SmithDecomposition smith_normal_form(const Matrix& a, const Ring& ring, Execution exec) {
  SmithDecomposition s = SmithWorker(a, ring, exec).run();
#ifndef NDEBUG
  Matrix reduced = a;
  reduced.reduce(ring);
  assert(multiply(multiply(s.P, reduced, ring, exec), s.Q, ring, exec) == s.D);
#endif
  return s;
}

DiophantineSolution solve(const SmithDecomposition& smith, const Vector& b, const Ring& ring) {
  const Matrix& d = smith.D;
  if (b.size() != d.rows()) throw InvalidArgument("solve: right-hand side has wrong length");
  const Vector pb = multiply(smith.P, b, ring);

  DiophantineSolution out;
  for (std::size_t j = smith.rank; j < d.cols(); ++j) out.homogeneous_basis.push_back(smith.Q.column(j));

  Vector y(d.cols());
  for (std::size_t i = 0; i < d.rows(); ++i) {
    if (i < smith.rank) {
      if (!ring.divides(d(i, i), pb[i])) {
        out.certificate_row = i;
        return out;
      }
      y[i] = ring.exact_quotient(pb[i], d(i, i));
    } else if (ring.reduce(pb[i]) != 0) {
      out.certificate_row = i;
      return out;
    }
  }
  out.solvable = true;
  out.particular = multiply(smith.Q, y, ring);
  return out;
}

DiophantineSolution solve(const Matrix& a, const Vector& b, const Ring& ring, Execution exec) {
  if (b.size() != a.rows()) throw InvalidArgument("solve: right-hand side has wrong length");
  return solve(smith_normal_form(a, ring, exec), b, ring);
}

std::vector<Vector> kernel(const Matrix& a, const Ring& ring, Execution exec) {
  const SmithDecomposition s = smith_normal_form(a, ring, exec);
  std::vector<Vector> basis;
  for (std::size_t j = s.rank; j < a.cols(); ++j) basis.push_back(s.Q.column(j));
  return basis;
}

}  // namespace fuzzyhom
