#include "fuzzyhom/submodule.hpp"

#include <algorithm>

#include "fuzzyhom/error.hpp"
#include "fuzzyhom/smith.hpp"

namespace fuzzyhom {

namespace {

void require_same_ambient(const SubmoduleOfHomology& a, const SubmoduleOfHomology& b) {
  if (!(a.ambient == b.ambient)) throw InvalidArgument("submodules live in different ambient modules");
}

// Columns: the generators followed by the torsion relations a_i e_i.
Matrix lifted_generators(const SubmoduleOfHomology& s) {
  const HomologyAmbient& amb = s.ambient;
  const std::size_t n = amb.size();
  Matrix g(n, s.generators.size() + amb.torsion.size());
  for (std::size_t j = 0; j < s.generators.size(); ++j) {
    if (s.generators[j].size() != n) throw InvalidArgument("generator has wrong length");
    for (std::size_t i = 0; i < n; ++i) g(i, j) = s.generators[j][i];
  }
  for (std::size_t t = 0; t < amb.torsion.size(); ++t) g(t, s.generators.size() + t) = amb.torsion[t];
  g.reduce(amb.ring);
  return g;
}

}  // namespace

Vector HomologyAmbient::normalize(Vector v) const {
  if (v.size() != size()) throw InvalidArgument("coordinate vector has wrong length");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i < torsion.size())
      mpz_fdiv_r(v[i].get_mpz_t(), v[i].get_mpz_t(), torsion[i].get_mpz_t());
    else
      ring.reduce_in_place(v[i]);
  }
  return v;
}

SubmoduleOfHomology SubmoduleOfHomology::zero(HomologyAmbient ambient) {
  return SubmoduleOfHomology{std::move(ambient), {}};
}

SubmoduleOfHomology SubmoduleOfHomology::full(HomologyAmbient ambient) {
  SubmoduleOfHomology s{std::move(ambient), {}};
  const std::size_t n = s.ambient.size();
  for (std::size_t i = 0; i < n; ++i) {
    Vector e(n);
    e[i] = 1;
    s.generators.push_back(std::move(e));
  }
  return s;
}

ModuleStructure module_structure(const SubmoduleOfHomology& s, Execution exec) {
  const HomologyAmbient& amb = s.ambient;
  const Ring& ring = amb.ring;
  const Matrix g = lifted_generators(s);
  const SmithDecomposition lattice = smith_normal_form(g, ring, exec);
  const std::size_t r = lattice.rank;

  // A basis of the lifted lattice is P^-1 diag(d) restricted to r columns, so
  // v in the lattice has coordinates (P v)_j / d_j.
  Matrix relations(r, amb.torsion.size());
  for (std::size_t t = 0; t < amb.torsion.size(); ++t) {
    for (std::size_t j = 0; j < r; ++j) {
      const Integer pv = ring.reduce(lattice.P(j, t) * amb.torsion[t]);
      relations(j, t) = ring.exact_quotient(pv, lattice.D(j, j));
    }
  }
  const SmithDecomposition quotient = smith_normal_form(relations, ring, exec);

  ModuleStructure out;
  out.betti = r - quotient.rank;
  for (const Integer& e : quotient.invariant_factors)
    if (!ring.is_unit(e)) out.torsion.push_back(e);
  return out;
}

bool submodule_member(const SubmoduleOfHomology& s, const Vector& v, Execution exec) {
  const Vector target = s.ambient.normalize(v);
  if (is_zero(target)) return true;
  return solve(lifted_generators(s), target, s.ambient.ring, exec).solvable;
}

bool submodule_contains(const SubmoduleOfHomology& outer, const SubmoduleOfHomology& inner,
                        Execution exec) {
  require_same_ambient(outer, inner);
  const Matrix g = lifted_generators(outer);
  const SmithDecomposition smith = smith_normal_form(g, outer.ambient.ring, exec);
  return std::all_of(inner.generators.begin(), inner.generators.end(), [&](const Vector& v) {
    const Vector target = outer.ambient.normalize(v);
    return is_zero(target) || solve(smith, target, outer.ambient.ring).solvable;
  });
}

bool submodule_equal(const SubmoduleOfHomology& a, const SubmoduleOfHomology& b, Execution exec) {
  return submodule_contains(a, b, exec) && submodule_contains(b, a, exec);
}

SubmoduleOfHomology submodule_intersect(const SubmoduleOfHomology& a, const SubmoduleOfHomology& b,
                                        Execution exec) {
  require_same_ambient(a, b);
  const Ring& ring = a.ambient.ring;
  const Matrix ga = lifted_generators(a);
  const Matrix gb = lifted_generators(b);

  // [Ga | -Gb] w = 0  <=>  Ga w_a = Gb w_b lies in both lifted lattices.
  Matrix neg_gb = gb;
  for (std::size_t i = 0; i < neg_gb.rows(); ++i)
    for (std::size_t j = 0; j < neg_gb.cols(); ++j) neg_gb(i, j) = ring.reduce(-neg_gb(i, j));
  const std::vector<Vector> null = kernel(ga.hcat(neg_gb), ring, exec);

  SubmoduleOfHomology out = SubmoduleOfHomology::zero(a.ambient);
  for (const Vector& w : null) {
    const Vector wa(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(ga.cols()));
    Vector x = a.ambient.normalize(multiply(ga, wa, ring));
    if (is_zero(x)) continue;
    if (std::find(out.generators.begin(), out.generators.end(), x) == out.generators.end())
      out.generators.push_back(std::move(x));
  }
  return out;
}

SubmoduleOfHomology submodule_sum(const SubmoduleOfHomology& a, const SubmoduleOfHomology& b) {
  require_same_ambient(a, b);
  SubmoduleOfHomology out = a;
  for (const Vector& v : b.generators) out.generators.push_back(v);
  return out;
}

}  // namespace fuzzyhom
