#include "fuzzyhom/homology.hpp"

#include "fuzzyhom/error.hpp"
#include "fuzzyhom/smith.hpp"

namespace fuzzyhom {

namespace {

// diag(I_k, b)
Matrix block_identity(std::size_t k, const Matrix& b) {
  Matrix out(k + b.rows(), k + b.cols());
  for (std::size_t i = 0; i < k; ++i) out(i, i) = 1;
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(k + i, k + j) = b(i, j);
  return out;
}

void check_degree(const ReducedChainComplex& r, int d) {
  if (d < 0 || d > r.top_degree())
    throw InvalidArgument("degree " + std::to_string(d) + " outside [0, " + std::to_string(r.top_degree()) + "]");
}

}  // namespace

ReducedChainComplex::ReducedChainComplex(SimplicialComplex complex, Ring ring, Execution exec)
    : complex_(std::move(complex)), ring_(ring) {
  if (complex_.empty()) throw InvalidArgument("cannot reduce an empty complex");
  const int t = complex_.dim();
  degrees_.resize(static_cast<std::size_t>(t + 1));

  // State handed down from degree d+1: P_d, its inverse, r_{d+1} and the
  // invariant factors of the step above.
  Matrix p = Matrix::identity(complex_.count(t));
  Matrix p_inv = p;
  std::size_t r_above = 0;
  std::vector<Integer> factors_above;

  for (int d = t; d >= 0; --d) {
    DegreeReduction& deg = degrees_[static_cast<std::size_t>(d)];
    const std::size_t n = complex_.count(d);
    deg.boundary = boundary_matrix(complex_, d, ring_);

    const Matrix n_full = multiply(deg.boundary, p_inv, ring_, exec);
    const Matrix n_rest = n_full.column_block(r_above, n - r_above);
    const SmithDecomposition s = smith_normal_form(n_rest, ring_, exec);

    const Matrix q = block_identity(r_above, s.Q);
    const Matrix q_inv = block_identity(r_above, s.Q_inv);
    deg.reduced = Matrix(s.D.rows(), n);
    for (std::size_t i = 0; i < s.D.rows(); ++i)
      for (std::size_t j = 0; j < s.D.cols(); ++j) deg.reduced(i, r_above + j) = s.D(i, j);
    deg.to_delta = multiply(p_inv, q, ring_, exec);
    deg.from_delta = multiply(q_inv, p, ring_, exec);

    for (const Integer& a : factors_above) {
      if (ring_.is_unit(a))
        ++deg.n_u;
      else
        deg.torsion.push_back(a);
    }
    deg.n_t = deg.torsion.size();
    deg.n_r = s.rank;
    deg.n_f = n - r_above - s.rank;

    p = s.P;
    p_inv = s.P_inv;
    r_above = s.rank;
    factors_above = s.invariant_factors;
  }
}

const DegreeReduction& ReducedChainComplex::degree(int d) const {
  check_degree(*this, d);
  return degrees_[static_cast<std::size_t>(d)];
}

HomologyAmbient ReducedChainComplex::ambient(int d) const {
  const DegreeReduction& deg = degree(d);
  return HomologyAmbient{ring_, deg.torsion, deg.n_f};
}

HomologyStructure homology(const ReducedChainComplex& r) {
  HomologyStructure out{r.ring(), {}};
  for (int d = 0; d <= r.top_degree(); ++d) {
    const DegreeReduction& deg = r.degree(d);
    DegreeHomology h;
    h.structure = ModuleStructure{deg.n_f, deg.torsion};
    h.free_generators = deg.F().columns();
    h.torsion_generators = deg.T().columns();
    out.degrees.push_back(std::move(h));
  }
  return out;
}

HomologyStructure homology(const SimplicialComplex& k, const Ring& ring, Execution exec) {
  return homology(ReducedChainComplex(k, ring, exec));
}

Vector ClassCoordinates::flat() const {
  Vector out = alpha;
  out.insert(out.end(), phi.begin(), phi.end());
  return out;
}

ClassCoordinates class_of_cycle(const ReducedChainComplex& r, int d, const Vector& z) {
  const DegreeReduction& deg = r.degree(d);
  const Ring& ring = r.ring();
  if (z.size() != deg.size()) throw InvalidArgument("chain has wrong length for degree " + std::to_string(d));
  Vector zr = z;
  for (auto& x : zr) ring.reduce_in_place(x);
  const Vector bz = multiply(deg.boundary, zr, ring);
  if (!is_zero(bz)) {
    std::string msg = "chain is not a cycle; boundary = (";
    for (std::size_t i = 0; i < bz.size(); ++i) msg += (i ? "," : "") + bz[i].get_str();
    throw InvalidArgument(msg + ")");
  }
  const Vector zh = multiply(deg.from_delta, zr, ring);
  for (std::size_t i = 0; i < deg.n_r; ++i)
    if (zh[deg.n_u + deg.n_t + i] != 0) throw Error("internal: cycle has a non-zero R coordinate");

  ClassCoordinates c;
  c.degree = d;
  for (std::size_t i = 0; i < deg.n_t; ++i) {
    Integer a;
    mpz_fdiv_r(a.get_mpz_t(), zh[deg.n_u + i].get_mpz_t(), deg.torsion[i].get_mpz_t());
    c.alpha.push_back(a);
  }
  for (std::size_t i = 0; i < deg.n_f; ++i) c.phi.push_back(zh[deg.n_u + deg.n_t + deg.n_r + i]);
  return c;
}

Vector cycle_of_class(const ReducedChainComplex& r, const ClassCoordinates& c) {
  const DegreeReduction& deg = r.degree(c.degree);
  if (c.alpha.size() != deg.n_t || c.phi.size() != deg.n_f)
    throw InvalidArgument("class coordinates have the wrong shape for degree " + std::to_string(c.degree));
  Vector h(deg.size());
  const Ring& ring = r.ring();
  for (std::size_t i = 0; i < deg.n_t; ++i)
    if (c.alpha[i] != 0) h = add(h, scale(c.alpha[i], deg.to_delta.column(deg.n_u + i), ring), ring);
  for (std::size_t i = 0; i < deg.n_f; ++i)
    if (c.phi[i] != 0) h = add(h, scale(c.phi[i], deg.to_delta.column(deg.n_u + deg.n_t + deg.n_r + i), ring), ring);
  return h;
}

ClassCoordinates class_from_flat(const ReducedChainComplex& r, int d, const Vector& flat) {
  const DegreeReduction& deg = r.degree(d);
  if (flat.size() != deg.n_t + deg.n_f)
    throw InvalidArgument("class has " + std::to_string(flat.size()) + " coordinates; degree " + std::to_string(d) +
                          " needs " + std::to_string(deg.n_t + deg.n_f));
  ClassCoordinates c;
  c.degree = d;
  c.alpha.assign(flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(deg.n_t));
  c.phi.assign(flat.begin() + static_cast<std::ptrdiff_t>(deg.n_t), flat.end());
  for (std::size_t i = 0; i < deg.n_t; ++i)
    mpz_fdiv_r(c.alpha[i].get_mpz_t(), c.alpha[i].get_mpz_t(), deg.torsion[i].get_mpz_t());
  for (auto& x : c.phi) r.ring().reduce_in_place(x);
  return c;
}

}  // namespace fuzzyhom
