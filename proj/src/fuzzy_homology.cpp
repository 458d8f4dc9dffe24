#include "fuzzyhom/fuzzy_homology.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "fuzzyhom/error.hpp"
#include "fuzzyhom/smith.hpp"

namespace fuzzyhom {

namespace {

FuzzySubcomplex checked_support(const FuzzySubcomplex& mu) {
  if (!mu.lattice().is_zero_meet_prime())
    throw CapabilityError("0 is not meet-prime in this lattice; fuzzy homology is only computed when it is");
  const auto violations = validate(mu);
  if (!violations.empty())
    throw InvalidArgument("mu is not face-monotone: " + violations[0].face.to_string() + " has a smaller value than " +
                          violations[0].coface.to_string() + " (" + std::to_string(violations.size()) +
                          " violation(s))");
  return restrict_to_support(mu);
}

void check_degree(const FuzzyHomologyContext& ctx, int d) {
  if (d < 0 || d > ctx.top_degree())
    throw InvalidArgument("degree " + std::to_string(d) + " outside [0, " + std::to_string(ctx.top_degree()) + "]");
}

// (U | T A) as columns of E^Delta coordinates.
Matrix boundary_generators(const FuzzyHomologyContext& ctx, int d) {
  const DegreeReduction& deg = ctx.reduced().degree(d);
  Matrix g = deg.to_delta.column_block(0, deg.n_u + deg.n_t);
  for (std::size_t i = 0; i < deg.n_t; ++i)
    for (std::size_t r = 0; r < g.rows(); ++r) g(r, deg.n_u + i) *= deg.torsion[i];
  g.reduce(ctx.ring());
  return g;
}

// (U | T | F): every cycle is a combination of these columns.
Matrix cycle_generators(const FuzzyHomologyContext& ctx, int d) {
  const DegreeReduction& deg = ctx.reduced().degree(d);
  return deg.to_delta.column_block(0, deg.n_u + deg.n_t).hcat(deg.F());
}

SubmoduleOfHomology sum_all(const HomologyAmbient& ambient, const std::vector<std::optional<SubmoduleOfHomology>>& parts) {
  SubmoduleOfHomology out = SubmoduleOfHomology::zero(ambient);
  std::set<Vector> seen;
  for (const auto& part : parts) {
    if (!part) continue;
    for (const Vector& v : part->generators)
      if (seen.insert(v).second) out.generators.push_back(v);
  }
  return out;
}

// Every subset of levels whose join is >= level, as bitmasks in increasing order.
std::vector<std::uint64_t> all_covers(const Lattice& l, const std::vector<LatticeValue>& levels,
                                      const LatticeValue& level, int d) {
  const std::size_t n = levels.size();
  if (n > kMaxCutLevels)
    throw CapabilityError("L(kappa_" + std::to_string(d) + ") has " + std::to_string(n) +
                          " levels; enumerating all subsets is capped at " + std::to_string(kMaxCutLevels));
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    LatticeValue join = l.bottom();
    for (std::size_t i = 0; i < n; ++i)
      if (m >> i & 1) join = l.join(join, levels[i]);
    if (l.leq(level, join)) out.push_back(m);
  }
  return out;
}

// Inclusion-minimal subsets with join >= level, found by depth-first search
// in index order. A branch stops as soon as its join reaches the level.
std::vector<std::uint64_t> minimal_covers(const Lattice& l, const std::vector<LatticeValue>& levels,
                                          const LatticeValue& level, int d) {
  const std::size_t n = levels.size();
  if (n > 64) throw CapabilityError("L(kappa_" + std::to_string(d) + ") has more than 64 levels");
  std::vector<std::uint64_t> out;
  std::size_t visited = 0;

  auto is_minimal = [&](std::uint64_t m) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!(m >> i & 1)) continue;
      LatticeValue join = l.bottom();
      for (std::size_t j = 0; j < n; ++j)
        if (j != i && (m >> j & 1)) join = l.join(join, levels[j]);
      if (l.leq(level, join)) return false;
    }
    return true;
  };

  std::function<void(std::size_t, std::uint64_t, const LatticeValue&)> search =
      [&](std::size_t next, std::uint64_t m, const LatticeValue& join) {
        for (std::size_t i = next; i < n; ++i) {
          if (++visited > kMaxCoverSearch)
            throw CapabilityError("cut search in degree " + std::to_string(d) + " exceeded " +
                                  std::to_string(kMaxCoverSearch) + " steps");
          if (l.leq(levels[i], join)) continue;  // adds nothing
          const LatticeValue grown = l.join(join, levels[i]);
          const std::uint64_t with = m | (std::uint64_t{1} << i);
          if (l.leq(level, grown)) {
            if (is_minimal(with)) out.push_back(with);
          } else {
            search(i + 1, with, grown);
          }
        }
      };
  if (l.leq(level, l.bottom())) return {0};
  search(0, 0, l.bottom());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

FuzzyHomologyContext::FuzzyHomologyContext(const FuzzySubcomplex& mu, Ring ring, Execution exec)
    : mu_(checked_support(mu)), reduced_(mu_.complex(), ring, exec), exec_(exec) {
  const Lattice& l = mu_.lattice();
  for (int d = 0; d <= top_degree(); ++d) {
    std::set<LatticeValue> distinct(mu_.values(d).begin(), mu_.values(d).end());
    std::vector<LatticeValue> delta(distinct.begin(), distinct.end());
    sort_by_lattice_order(l, delta);
    std::vector<LatticeValue> seed = delta;
    seed.push_back(l.top());
    kappa_.push_back(meet_closure(l, std::move(seed)));
    delta_.push_back(std::move(delta));
  }
}

const std::vector<LatticeValue>& FuzzyHomologyContext::delta_values(int d) const {
  check_degree(*this, d);
  return delta_[static_cast<std::size_t>(d)];
}

const std::vector<LatticeValue>& FuzzyHomologyContext::kappa_values(int d) const {
  check_degree(*this, d);
  return kappa_[static_cast<std::size_t>(d)];
}

LatticeValue kappa(const FuzzyHomologyContext& ctx, int d, const Vector& c) {
  check_degree(ctx, d);
  const auto values = ctx.mu().values(d);
  if (c.size() != values.size()) throw InvalidArgument("chain has wrong length for degree " + std::to_string(d));
  const Lattice& l = ctx.lattice();
  LatticeValue acc = l.top();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (ctx.ring().reduce(c[i]) != 0) acc = l.meet(acc, values[i]);
  return acc;
}

std::vector<std::size_t> index_set(const FuzzyHomologyContext& ctx, int d, const LatticeValue& level) {
  check_degree(ctx, d);
  const Lattice& l = ctx.lattice();
  l.check(level);
  const auto values = ctx.mu().values(d);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!l.leq(level, values[i])) out.push_back(i);
  return out;
}

ConstraintSystem constraint_system(const FuzzyHomologyContext& ctx, int d, const Vector& c,
                                   std::vector<std::size_t> rows) {
  check_degree(ctx, d);
  const std::size_t n = ctx.reduced().degree(d).size();
  if (c.size() != n) throw InvalidArgument("chain has wrong length for degree " + std::to_string(d));
  for (std::size_t r : rows)
    if (r >= n) throw InvalidArgument("constraint row out of range");
  ConstraintSystem s;
  s.degree = d;
  s.matrix = boundary_generators(ctx, d).select_rows(rows);
  for (std::size_t r : rows) s.rhs.push_back(ctx.ring().reduce(-c[r]));
  s.rows = std::move(rows);
  return s;
}

bool is_solvable(const FuzzyHomologyContext& ctx, const ConstraintSystem& system) {
  if (is_zero(system.rhs)) return true;
  return solve(system.matrix, system.rhs, ctx.ring(), Execution::Serial).solvable;
}

SubmoduleOfHomology hdl_submodule(const FuzzyHomologyContext& ctx, int d, const LatticeValue& level) {
  const auto rows = index_set(ctx, d, level);
  const DegreeReduction& deg = ctx.reduced().degree(d);
  const HomologyAmbient ambient = ctx.reduced().ambient(d);
  if (rows.empty()) return SubmoduleOfHomology::full(ambient);

  const Matrix g = cycle_generators(ctx, d).select_rows(rows);
  SubmoduleOfHomology out = SubmoduleOfHomology::zero(ambient);
  std::set<Vector> seen;
  for (const Vector& w : kernel(g, ctx.ring(), ctx.execution())) {
    // w = (upsilon, tau, phi); the class is (tau mod a, phi).
    Vector cls(w.begin() + static_cast<std::ptrdiff_t>(deg.n_u), w.end());
    cls = ambient.normalize(std::move(cls));
    if (is_zero(cls)) continue;
    if (seen.insert(cls).second) out.generators.push_back(std::move(cls));
  }
  return out;
}

EtaTrace eta_trace(const FuzzyHomologyContext& ctx, const ClassCoordinates& h) {
  const int d = h.degree;
  check_degree(ctx, d);
  const Vector cycle = cycle_of_class(ctx.reduced(), h);
  const auto& levels = ctx.kappa_values(d);
  const Matrix gens = boundary_generators(ctx, d);

  std::vector<char> ok(levels.size(), 0);
  const auto count = static_cast<std::ptrdiff_t>(levels.size());
#pragma omp parallel for schedule(dynamic) if (run_parallel(ctx.execution(), levels.size()))
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    const auto rows = index_set(ctx, d, levels[static_cast<std::size_t>(k)]);
    Vector rhs;
    for (std::size_t r : rows) rhs.push_back(ctx.ring().reduce(-cycle[r]));
    ok[static_cast<std::size_t>(k)] =
        is_zero(rhs) || solve(gens.select_rows(rows), rhs, ctx.ring(), Execution::Serial).solvable;
  }

  EtaTrace out{ctx.lattice().bottom(), {}};
  for (std::size_t k = 0; k < levels.size(); ++k)
    if (ok[k]) {
      out.solvable_levels.push_back(levels[k]);
      out.value = ctx.lattice().join(out.value, levels[k]);
    }
  return out;
}

LatticeValue eta_value(const FuzzyHomologyContext& ctx, const ClassCoordinates& h) {
  return eta_trace(ctx, h).value;
}

SubmoduleOfHomology eta_cut(const FuzzyHomologyContext& ctx, int d, const LatticeValue& level, CutStrategy strategy) {
  check_degree(ctx, d);
  const Lattice& l = ctx.lattice();
  l.check(level);
  const auto& levels = ctx.kappa_values(d);
  const HomologyAmbient ambient = ctx.reduced().ambient(d);

  if (strategy == CutStrategy::Auto)
    strategy = is_chain(l, levels) ? CutStrategy::ChainFastPath : CutStrategy::MinimalCovers;

  if (strategy == CutStrategy::ChainFastPath) {
    if (!is_chain(l, levels)) throw InvalidArgument("chain fast path needs L(kappa_d) to be a chain");
    // levels is sorted along the order, so the first one above `level` is the minimum.
    for (const LatticeValue& s : levels)
      if (l.leq(level, s)) return hdl_submodule(ctx, d, s);
    return SubmoduleOfHomology::zero(ambient);
  }

  const std::size_t n = levels.size();
  const std::vector<std::uint64_t> covers = strategy == CutStrategy::AllSubsets
                                                ? all_covers(l, levels, level, d)
                                                : minimal_covers(l, levels, level, d);

  std::vector<char> needed(n, 0);
  for (const auto& cover : covers)
    for (std::size_t i = 0; i < n; ++i)
      if (cover >> i & 1) needed[i] = 1;

  std::vector<std::optional<SubmoduleOfHomology>> per_level(n);
  const auto ln = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic) if (run_parallel(ctx.execution(), n))
  for (std::ptrdiff_t i = 0; i < ln; ++i)
    if (needed[static_cast<std::size_t>(i)])
      per_level[static_cast<std::size_t>(i)] = hdl_submodule(ctx, d, levels[static_cast<std::size_t>(i)]);

  std::vector<std::optional<SubmoduleOfHomology>> parts(covers.size());
  const auto cn = static_cast<std::ptrdiff_t>(covers.size());
#pragma omp parallel for schedule(dynamic) if (run_parallel(ctx.execution(), covers.size()))
  for (std::ptrdiff_t c = 0; c < cn; ++c) {
    const std::uint64_t m = covers[static_cast<std::size_t>(c)];
    SubmoduleOfHomology acc = SubmoduleOfHomology::full(ambient);
    for (std::size_t i = 0; i < n; ++i)
      if (m >> i & 1) acc = submodule_intersect(acc, *per_level[i], Execution::Serial);
    parts[static_cast<std::size_t>(c)] = std::move(acc);
  }
  return sum_all(ambient, parts);
}

std::vector<LatticeValue> default_rank_levels(const FuzzyHomologyContext& ctx, int d) {
  return join_closure(ctx.lattice(), ctx.kappa_values(d));
}

std::vector<std::pair<LatticeValue, std::size_t>> rank_cut_table(const FuzzyHomologyContext& ctx, int d,
                                                                 const std::vector<LatticeValue>& levels) {
  std::vector<std::pair<LatticeValue, std::size_t>> out;
  for (const LatticeValue& level : levels)
    out.emplace_back(level, module_structure(eta_cut(ctx, d, level), ctx.execution()).betti);
  return out;
}

namespace {

// Columns of m forming a basis of its column space over F_p, by plain
// Gaussian elimination. Kept apart from the Smith machinery on purpose.
std::vector<std::vector<long>> column_basis_mod_p(const Matrix& m, long p) {
  std::vector<std::vector<long>> basis;
  std::vector<std::vector<long>> echelon;  // reduced copies, each with a pivot row
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::vector<long> col(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Integer x;
      mpz_fdiv_r_ui(x.get_mpz_t(), m(r, c).get_mpz_t(), static_cast<unsigned long>(p));
      col[r] = x.get_si();
    }
    std::vector<long> red = col;
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      const long f = red[pivots[e]];
      if (f == 0) continue;
      for (std::size_t r = 0; r < red.size(); ++r) red[r] = ((red[r] - f * echelon[e][r]) % p + p) % p;
    }
    auto it = std::find_if(red.begin(), red.end(), [](long x) { return x != 0; });
    if (it == red.end()) continue;
    const std::size_t pr = static_cast<std::size_t>(it - red.begin());
    // Scale so the pivot is 1.
    long inv = 1;
    for (long k = 1; k < p; ++k)
      if ((*it * k) % p == 1) inv = k;
    for (long& x : red) x = (x * inv) % p;
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      const long f = echelon[e][pr];
      if (f == 0) continue;
      for (std::size_t r = 0; r < red.size(); ++r) echelon[e][r] = ((echelon[e][r] - f * red[r]) % p + p) % p;
    }
    echelon.push_back(std::move(red));
    pivots.push_back(pr);
    basis.push_back(std::move(col));
  }
  return basis;
}

}  // namespace

LatticeValue brute_force_eta(const FuzzyHomologyContext& ctx, int d, const Vector& z, std::size_t cap) {
  check_degree(ctx, d);
  const Ring& ring = ctx.ring();
  if (!ring.is_field()) throw InvalidArgument("brute_force_eta needs Z/p coefficients");
  const long p = ring.modulus();
  const SimplicialComplex& k = ctx.mu().complex();
  const std::size_t n = k.count(d);
  if (z.size() != n) throw InvalidArgument("chain has wrong length for degree " + std::to_string(d));
  if (!is_zero(multiply(boundary_matrix(k, d, ring), z, ring))) throw InvalidArgument("chain is not a cycle");

  std::vector<std::vector<long>> basis;
  if (d < k.dim()) basis = column_basis_mod_p(boundary_matrix(k, d + 1, ring), p);

  std::size_t total = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (total > cap / static_cast<std::size_t>(p))
      throw CapabilityError("boundary group has more than " + std::to_string(cap) + " elements");
    total *= static_cast<std::size_t>(p);
  }

  std::vector<long> base(n);
  for (std::size_t i = 0; i < n; ++i) {
    Integer x;
    mpz_fdiv_r_ui(x.get_mpz_t(), z[i].get_mpz_t(), static_cast<unsigned long>(p));
    base[i] = x.get_si();
  }
  const Lattice& l = ctx.lattice();
  const auto values = ctx.mu().values(d);
  LatticeValue result = l.bottom();
  const auto count = static_cast<std::ptrdiff_t>(total);

#pragma omp parallel if (run_parallel(ctx.execution(), total))
  {
    LatticeValue local = l.bottom();
    std::vector<long> chain(n);
#pragma omp for schedule(static)
    for (std::ptrdiff_t idx = 0; idx < count; ++idx) {
      chain = base;
      auto rest = static_cast<std::size_t>(idx);
      for (const auto& b : basis) {
        const long coef = static_cast<long>(rest % static_cast<std::size_t>(p));
        rest /= static_cast<std::size_t>(p);
        if (coef == 0) continue;
        for (std::size_t i = 0; i < n; ++i) chain[i] = (chain[i] + coef * b[i]) % p;
      }
      LatticeValue kv = l.top();
      for (std::size_t i = 0; i < n; ++i)
        if (chain[i] != 0) kv = l.meet(kv, values[i]);
      local = l.join(local, kv);
    }
#pragma omp critical(fuzzyhom_brute_force_join)
    result = l.join(result, local);
  }
  return result;
}

EtaReport eta_report(const FuzzyHomologyContext& ctx, int d, const std::optional<std::vector<LatticeValue>>& cut_levels) {
  check_degree(ctx, d);
  const ReducedChainComplex& r = ctx.reduced();
  const DegreeReduction& deg = r.degree(d);
  EtaReport out;
  out.degree = d;
  out.structure = ModuleStructure{deg.n_f, deg.torsion};

  const std::size_t n_gens = deg.n_t + deg.n_f;
  for (std::size_t g = 0; g < n_gens; ++g) {
    Vector flat(n_gens);
    flat[g] = 1;
    ClassCoordinates c = class_from_flat(r, d, flat);
    GeneratorEta ge{cycle_of_class(r, c), c, eta_trace(ctx, c)};
    out.generators.push_back(std::move(ge));
  }
  for (const LatticeValue& level : ctx.kappa_values(d))
    out.hdl.emplace_back(level, module_structure(hdl_submodule(ctx, d, level), ctx.execution()));
  for (const LatticeValue& level : cut_levels ? *cut_levels : ctx.kappa_values(d))
    out.cuts.emplace_back(level, module_structure(eta_cut(ctx, d, level), ctx.execution()));
  return out;
}

}  // namespace fuzzyhom
