#include <doctest.h>

#include "fuzzyhom/error.hpp"
#include "fuzzyhom/fuzzy_homology.hpp"
#include "fuzzyhom/smith.hpp"
#include "support.hpp"

using namespace fuzzyhom;
using fixtures::ints;

namespace {

const Ring Z = Ring::integers();

std::vector<std::string> formatted(const Lattice& l, const std::vector<LatticeValue>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(l.format(v));
  return out;
}

ClassCoordinates free_class(int d, std::initializer_list<long> phi) { return ClassCoordinates{d, {}, ints(phi)}; }

}  // namespace

TEST_CASE("kappa and value sets") {
  const FuzzyHomologyContext ctx(fixtures::bichromatic(), Z);
  const Lattice& l = ctx.lattice();
  CHECK(l.format(kappa(ctx, 1, ints({1, -1, 0, 1, 0}))) == "x");
  CHECK(kappa(ctx, 1, ints({0, 0, 0, 0, 0})) == l.top());
  CHECK(l.format(kappa(ctx, 1, ints({0, 0, 1, 0, 0}))) == "x & y");
  CHECK(formatted(l, ctx.delta_values(1)) == std::vector<std::string>{"x & y", "x"});
  CHECK(formatted(l, ctx.kappa_values(1)) == std::vector<std::string>{"x & y", "x", "1"});
  CHECK(formatted(l, ctx.kappa_values(0)) == std::vector<std::string>{"x & y", "x", "y", "1"});

  const auto one = FuzzySubcomplex::constant(fixtures::hollow_triangle(), ctx.mu().lattice_ptr(), l.top());
  const FuzzyHomologyContext ctx1(one, Z);
  CHECK(formatted(l, ctx1.kappa_values(1)) == std::vector<std::string>{"1"});
}

TEST_CASE("index sets") {
  const FuzzyHomologyContext ctx(fixtures::bichromatic(), Z);
  const Lattice& l = ctx.lattice();
  CHECK(index_set(ctx, 1, l.named("x")) == std::vector<std::size_t>{2, 4});
  CHECK(index_set(ctx, 1, l.parse("x & y")).empty());
  CHECK(index_set(ctx, 1, l.bottom()).empty());
}

TEST_CASE("the restricted G matrix in degree 0") {
  const FuzzyHomologyContext ctx(fixtures::bichromatic(), Z);
  const auto& deg = ctx.reduced().degree(0);
  const auto rows = index_set(ctx, 0, ctx.lattice().named("x"));
  CHECK(rows == std::vector<std::size_t>{2, 4});
  const Matrix g = deg.to_delta.select_rows(rows);
  const auto k = kernel(g, Z);
  CHECK(k.size() == 3);
  // Same lattice as span{e1, e2, e4}.
  const Matrix kb = Matrix::from_columns(5, k);
  for (const auto& e : {ints({1, 0, 0, 0, 0}), ints({0, 1, 0, 0, 0}), ints({0, 0, 0, 1, 0})})
    CHECK(solve(kb, e, Z).solvable);
  for (const auto& v : k) CHECK(v[2] == 0);
  for (const auto& v : k) CHECK(v[4] == 0);
}

TEST_CASE("hdl family in degree 0") {
  const FuzzyHomologyContext ctx(fixtures::bichromatic(), Z);
  const Lattice& l = ctx.lattice();
  auto structure = [&](const char* level) { return module_structure(hdl_submodule(ctx, 0, l.parse(level))); };
  CHECK(structure("x & y") == ModuleStructure{2, {}});
  CHECK(structure("x") == ModuleStructure{1, {}});
  CHECK(structure("y") == ModuleStructure{2, {}});
  CHECK(structure("1").is_zero());
  CHECK(structure("x | y").is_zero());
  const auto hx = hdl_submodule(ctx, 0, l.named("x"));
  CHECK(submodule_equal(hx, SubmoduleOfHomology{ctx.reduced().ambient(0), {ints({1, 0})}}));
  CHECK(submodule_equal(submodule_intersect(hx, hdl_submodule(ctx, 0, l.named("y"))), hx));
}

TEST_CASE("eta values") {
  const FuzzyHomologyContext ctx(fixtures::bichromatic(), Z);
  const Lattice& l = ctx.lattice();
  const auto t = eta_trace(ctx, free_class(1, {1}));
  CHECK(l.format(t.value) == "x");
  CHECK(formatted(l, t.solvable_levels) == std::vector<std::string>{"x & y", "x"});
  CHECK(l.format(eta_value(ctx, free_class(0, {1, 0}))) == "x | y");
  CHECK(l.format(eta_value(ctx, free_class(0, {0, 1}))) == "y");
  CHECK(eta_value(ctx, free_class(0, {0, 0})) == l.top());
  CHECK(eta_value(ctx, free_class(1, {0})) == l.top());
  // Case formula: x | y when phi_2 = 0, y otherwise (non-zero class).
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b) {
      const auto v = eta_value(ctx, free_class(0, {a, b}));
      if (a == 0 && b == 0) CHECK(v == l.top());
      else if (b == 0) CHECK(l.format(v) == "x | y");
      else CHECK(l.format(v) == "y");
    }
}

TEST_CASE("cuts in degree 0") {
  const FuzzyHomologyContext ctx(fixtures::bichromatic(), Z);
  const Lattice& l = ctx.lattice();
  auto cut_of = [&](const char* level, CutStrategy s = CutStrategy::Auto) {
    return module_structure(eta_cut(ctx, 0, l.parse(level), s));
  };
  for (auto s : {CutStrategy::Auto, CutStrategy::MinimalCovers, CutStrategy::AllSubsets}) {
    CHECK(cut_of("x & y", s) == ModuleStructure{2, {}});
    CHECK(cut_of("x", s) == ModuleStructure{1, {}});
    CHECK(cut_of("y", s) == ModuleStructure{2, {}});
    CHECK(cut_of("x | y", s) == ModuleStructure{1, {}});
    CHECK(cut_of("1", s).is_zero());
    CHECK(cut_of("0", s) == ModuleStructure{2, {}});
  }
  CHECK_THROWS_AS(eta_cut(ctx, 0, l.named("x"), CutStrategy::ChainFastPath), InvalidArgument);
  const auto strict_small = hdl_submodule(ctx, 0, l.parse("x | y"));
  const auto strict_big = eta_cut(ctx, 0, l.parse("x | y"));
  CHECK(submodule_contains(strict_big, strict_small));
  CHECK_FALSE(submodule_contains(strict_small, strict_big));

  const auto table = rank_cut_table(ctx, 0, default_rank_levels(ctx, 0));
  std::vector<std::pair<std::string, std::size_t>> got;
  for (const auto& [level, rank] : table) got.emplace_back(l.format(level), rank);
  CHECK(got == std::vector<std::pair<std::string, std::size_t>>{{"x & y", 2}, {"x", 1}, {"y", 2}, {"x | y", 1}, {"1", 0}});
  CHECK(rank_cut_table(ctx, 0, {l.bottom()})[0].second == 2);
}

TEST_CASE("constraint systems") {
  const FuzzyHomologyContext ctx(fixtures::bichromatic(), Z);
  const Vector f = ints({1, -1, 0, 1, 0});
  const auto full = constraint_system(ctx, 1, f, {0, 1, 2, 3, 4});
  CHECK(full.matrix == Matrix::from_rows({{0}, {0}, {1}, {-1}, {1}}));
  CHECK(full.rhs == ints({-1, 1, 0, -1, 0}));
  CHECK_FALSE(is_solvable(ctx, full));
  const auto restricted = constraint_system(ctx, 1, f, {2, 4});
  CHECK(is_solvable(ctx, restricted));
}

TEST_CASE("refusals") {
  auto anti = Lattice::up_set(Poset{{"a", "b"}, {}});
  const auto k = SimplicialComplex::from_maximal({{0, 1}});
  const auto mu = FuzzySubcomplex::constant(k, anti, anti->top());
  CHECK_THROWS_AS(FuzzyHomologyContext(mu, Z), CapabilityError);

  auto l = Lattice::free_distributive({"x", "y"});
  const auto bad = FuzzySubcomplex::complete(k, l, {{Simplex{0}, l->parse("x & y")}, {Simplex{0, 1}, l->named("x")}});
  CHECK_THROWS_AS(FuzzyHomologyContext(bad, Z), InvalidArgument);

  const FuzzyHomologyContext ctx(fixtures::bichromatic(), Z);
  CHECK_THROWS_AS(brute_force_eta(ctx, 1, ints({1, -1, 0, 1, 0})), InvalidArgument);
}

TEST_CASE("degenerate lattice gives eta identically 1") {
  auto bool_lattice = Lattice::total_order({"0", "1"});
  for (const auto& k : {fixtures::projective_plane(), fixtures::bichromatic().complex(), fixtures::tetrahedron_boundary()}) {
    const FuzzyHomologyContext ctx(FuzzySubcomplex::constant(k, bool_lattice, bool_lattice->top()), Z);
    for (int d = 0; d <= k.dim(); ++d) {
      const auto report = eta_report(ctx, d);
      for (const auto& g : report.generators) CHECK(g.eta.value == bool_lattice->top());
    }
  }
}

TEST_CASE("support restriction leaves eta unchanged") {
  const auto base = fixtures::bichromatic();
  auto l = base.lattice_ptr();
  // Add a vertex with value 0.
  const auto k = SimplicialComplex::from_maximal({{0, 1}, {0, 3}, {1, 2, 3}, {4}, {9}});
  std::vector<std::pair<Simplex, LatticeValue>> given;
  for (const auto& s : base.complex().all_simplices()) given.emplace_back(s, base.value(s));
  given.emplace_back(Simplex{9}, l->bottom());
  const auto extended = FuzzySubcomplex::complete(k, l, given);
  const FuzzyHomologyContext a(base, Z), b(extended, Z);
  CHECK(b.mu().complex() == base.complex());
  for (int d = 0; d <= 1; ++d) {
    const auto ra = eta_report(a, d), rb = eta_report(b, d);
    REQUIRE(ra.generators.size() == rb.generators.size());
    for (std::size_t i = 0; i < ra.generators.size(); ++i) CHECK(ra.generators[i].eta.value == rb.generators[i].eta.value);
  }
}

TEST_CASE("brute force agrees on the bichromatic fixture over Z/2") {
  const FuzzyHomologyContext ctx(fixtures::bichromatic(), Ring::integers_mod(2));
  const Lattice& l = ctx.lattice();
  CHECK(l.format(brute_force_eta(ctx, 1, ints({1, 1, 0, 1, 0}))) == "x");
  CHECK(brute_force_eta(ctx, 1, ints({0, 0, 0, 0, 0})) == l.top());
  const FuzzyHomologyContext zctx(fixtures::bichromatic(), Z);
  for (int d = 0; d <= 1; ++d) {
    const auto report = eta_report(ctx, d);
    const auto zreport = eta_report(zctx, d);
    REQUIRE(report.generators.size() == zreport.generators.size());
    for (std::size_t i = 0; i < report.generators.size(); ++i) {
      CHECK(brute_force_eta(ctx, d, report.generators[i].chain) == report.generators[i].eta.value);
      CHECK(l.format(report.generators[i].eta.value) == zctx.lattice().format(zreport.generators[i].eta.value));
    }
  }
  CHECK_THROWS_AS(brute_force_eta(ctx, 0, ints({1, 0, 0, 0, 0}), 2), CapabilityError);
}

TEST_CASE("random: representative independence and cut consistency") {
  fixtures::Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    auto l = fixtures::random_lattice(rng, trial);
    const auto k = fixtures::random_complex(rng, 10, 2, 6);
    const FuzzyHomologyContext ctx(fixtures::random_mu(rng, k, l), Z);
    const auto& kk = ctx.mu().complex();
    for (int d = 0; d <= ctx.top_degree(); ++d) {
      const auto report = eta_report(ctx, d);
      for (const auto& g : report.generators) {
        // Add a random boundary.
        Vector z = g.chain;
        if (d < kk.dim()) {
          const Matrix up = boundary_matrix(kk, d + 1);
          Vector coef(up.cols());
          for (auto& c : coef) c = static_cast<long>(fixtures::uniform(rng, 0, 4)) - 2;
          z = add(z, multiply(up, coef, Z), Z);
        }
        const auto c = class_of_cycle(ctx.reduced(), d, z);
        CHECK(c == g.coordinates);
        CHECK(l->format(eta_value(ctx, c)) == l->format(g.eta.value));
        CHECK(l->leq(kappa(ctx, d, g.chain), g.eta.value));
        CHECK(l->leq(kappa(ctx, d, z), g.eta.value));
        for (const auto& level : ctx.kappa_values(d)) {
          const bool in_cut = submodule_member(eta_cut(ctx, d, level), g.coordinates.flat());
          CHECK(in_cut == l->leq(level, g.eta.value));
        }
      }
    }
  }
}

TEST_CASE("pruned and unpruned subset enumeration agree") {
  fixtures::Rng rng(41);
  int compared = 0;
  for (int trial = 0; trial < 60 && compared < 25; ++trial) {
    auto l = Lattice::free_distributive({"x", "y", "z"});
    const auto k = fixtures::random_complex(rng, 10, 2, 6);
    const FuzzyHomologyContext ctx(fixtures::random_mu(rng, k, l), Z);
    for (int d = 0; d <= ctx.top_degree(); ++d) {
      if (ctx.kappa_values(d).size() > 10) continue;
      for (const auto& level : join_closure(*l, ctx.kappa_values(d))) {
        const auto pruned = eta_cut(ctx, d, level, CutStrategy::MinimalCovers);
        const auto full = eta_cut(ctx, d, level, CutStrategy::AllSubsets);
        CHECK(submodule_equal(pruned, full));
        ++compared;
      }
    }
  }
  CHECK(compared >= 25);
}

TEST_CASE("chain fast path agrees with subset enumeration on total orders") {
  fixtures::Rng rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    auto l = fixtures::random_lattice(rng, 0);
    const auto k = fixtures::random_complex(rng, 10, 2, 6);
    const FuzzyHomologyContext ctx(fixtures::random_mu(rng, k, l), Z);
    for (int d = 0; d <= ctx.top_degree(); ++d)
      for (const auto& level : l->elements())
        CHECK(submodule_equal(eta_cut(ctx, d, level, CutStrategy::ChainFastPath),
                              eta_cut(ctx, d, level, CutStrategy::MinimalCovers)));
  }
}

TEST_CASE("minimal covers handle more levels than the subset cap") {
  std::vector<std::string> names;
  for (int i = 0; i <= 20; ++i) names.push_back("l" + std::to_string(i));
  auto l = Lattice::total_order(names);
  // A 20-cycle whose edges carry the 20 non-zero levels; vertices take joins.
  std::vector<std::vector<Vertex>> edges;
  std::vector<std::pair<Simplex, LatticeValue>> given;
  for (Vertex v = 0; v < 20; ++v) {
    edges.push_back({v, (v + 1) % 20});
    given.emplace_back(Simplex{v, (v + 1) % 20}, l->named(names[1 + (v * 7) % 20]));
  }
  const auto k = SimplicialComplex::from_maximal(edges);
  const FuzzyHomologyContext ctx(FuzzySubcomplex::complete(k, l, given), Z);
  REQUIRE(ctx.kappa_values(1).size() > kMaxCutLevels);
  for (int d = 0; d <= 1; ++d)
    for (const auto& level : l->elements())
      CHECK(submodule_equal(eta_cut(ctx, d, level, CutStrategy::MinimalCovers),
                            eta_cut(ctx, d, level, CutStrategy::ChainFastPath)));
  CHECK(module_structure(eta_cut(ctx, 1, l->named("l1"))) == ModuleStructure{1, {}});
  CHECK(module_structure(eta_cut(ctx, 1, l->named("l2"))).is_zero());
  CHECK_THROWS_AS(eta_cut(ctx, 1, l->named("l3"), CutStrategy::AllSubsets), CapabilityError);
}
