#include "fuzzyhom/fuzzy.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "fuzzyhom/error.hpp"

namespace fuzzyhom {

FuzzySubcomplex::FuzzySubcomplex(SimplicialComplex complex, std::shared_ptr<const Lattice> lattice,
                                 std::vector<std::vector<LatticeValue>> values)
    : complex_(std::move(complex)), lattice_(std::move(lattice)), values_(std::move(values)) {
  if (!lattice_) throw InvalidArgument("fuzzy subcomplex needs a lattice");
  if (values_.size() != static_cast<std::size_t>(complex_.dim() + 1))
    throw InvalidArgument("fuzzy subcomplex: value table has the wrong number of dimensions");
  for (int d = 0; d <= complex_.dim(); ++d) {
    const auto& row = values_[static_cast<std::size_t>(d)];
    if (row.size() != complex_.count(d))
      throw InvalidArgument("fuzzy subcomplex: wrong number of values in dimension " + std::to_string(d));
    for (const auto& v : row) lattice_->check(v);
  }
}

FuzzySubcomplex FuzzySubcomplex::constant(SimplicialComplex complex, std::shared_ptr<const Lattice> lattice,
                                          const LatticeValue& value) {
  std::vector<std::vector<LatticeValue>> values;
  for (int d = 0; d <= complex.dim(); ++d) values.emplace_back(complex.count(d), value);
  return FuzzySubcomplex(std::move(complex), std::move(lattice), std::move(values));
}

FuzzySubcomplex FuzzySubcomplex::complete(SimplicialComplex complex, std::shared_ptr<const Lattice> lattice,
                                          const std::vector<std::pair<Simplex, LatticeValue>>& given) {
  if (!lattice) throw InvalidArgument("fuzzy subcomplex needs a lattice");
  const int t = complex.dim();
  std::vector<std::vector<std::optional<LatticeValue>>> slots(static_cast<std::size_t>(t + 1));
  for (int d = 0; d <= t; ++d) slots[static_cast<std::size_t>(d)].resize(complex.count(d));

  for (const auto& [s, v] : given) {
    lattice->check(v);
    auto idx = complex.index_of(s);
    if (!idx) throw InvalidArgument("value given for " + s.to_string() + ", which is not in the complex");
    auto& slot = slots[s.dim()][*idx];
    if (slot && !(*slot == v)) throw InvalidArgument("conflicting values given for " + s.to_string());
    slot = v;
  }

  std::vector<std::vector<LatticeValue>> values(static_cast<std::size_t>(t + 1));
  std::vector<std::optional<LatticeValue>> coface_join;
  for (int d = t; d >= 0; --d) {
    const auto ds = static_cast<std::size_t>(d);
    coface_join.assign(complex.count(d), std::nullopt);
    if (d < t) {
      const auto upper = complex.simplices(d + 1);
      for (std::size_t c = 0; c < upper.size(); ++c)
        for (const Simplex& f : facets(upper[c])) {
          auto& acc = coface_join[*complex.index_of(f)];
          const LatticeValue& up = values[ds + 1][c];
          acc = acc ? lattice->join(*acc, up) : up;
        }
    }
    values[ds].reserve(complex.count(d));
    for (std::size_t i = 0; i < complex.count(d); ++i) {
      if (slots[ds][i])
        values[ds].push_back(*slots[ds][i]);
      else if (coface_join[i])
        values[ds].push_back(*coface_join[i]);
      else
        throw InvalidArgument("maximal simplex " + complex.simplex(d, i).to_string() + " has no value");
    }
  }
  return FuzzySubcomplex(std::move(complex), std::move(lattice), std::move(values));
}

std::span<const LatticeValue> FuzzySubcomplex::values(int d) const {
  if (d < 0 || d > complex_.dim()) return {};
  return values_[static_cast<std::size_t>(d)];
}

const LatticeValue& FuzzySubcomplex::value(const Simplex& s) const {
  auto idx = complex_.index_of(s);
  if (!idx) throw InvalidArgument(s.to_string() + " is not in the complex");
  return values_[s.dim()][*idx];
}

std::vector<Violation> validate(const FuzzySubcomplex& mu) {
  std::vector<Violation> out;
  const SimplicialComplex& k = mu.complex();
  const Lattice& l = mu.lattice();
  for (int d = 1; d <= k.dim(); ++d) {
    const auto simplices = k.simplices(d);
    for (std::size_t i = 0; i < simplices.size(); ++i)
      for (const Simplex& f : facets(simplices[i]))
        if (!l.leq(mu.value(d, i), mu.value(f))) out.push_back({f, simplices[i]});
  }
  return out;
}

namespace {

template <class Keep>
SimplicialComplex select(const FuzzySubcomplex& mu, Keep keep) {
  std::vector<Simplex> kept;
  const SimplicialComplex& k = mu.complex();
  for (int d = 0; d <= k.dim(); ++d)
    for (std::size_t i = 0; i < k.count(d); ++i)
      if (keep(mu.value(d, i))) kept.push_back(k.simplex(d, i));
  return SimplicialComplex::closure_of(kept);
}

}  // namespace

SimplicialComplex cut(const FuzzySubcomplex& mu, const LatticeValue& level) {
  mu.lattice().check(level);
  return select(mu, [&](const LatticeValue& v) { return mu.lattice().leq(level, v); });
}

SimplicialComplex support(const FuzzySubcomplex& mu) {
  const LatticeValue zero = mu.lattice().bottom();
  return select(mu, [&](const LatticeValue& v) { return !(v == zero); });
}

SimplicialComplex core(const FuzzySubcomplex& mu) { return cut(mu, mu.lattice().top()); }

FuzzySubcomplex restrict_to_support(const FuzzySubcomplex& mu) {
  SimplicialComplex supp = support(mu);
  if (supp.empty()) throw InvalidArgument("fuzzy subcomplex has empty support");
  if (supp == mu.complex()) return mu;
  std::vector<std::vector<LatticeValue>> values;
  for (int d = 0; d <= supp.dim(); ++d) {
    auto& row = values.emplace_back();
    for (const Simplex& s : supp.simplices(d)) row.push_back(mu.value(s));
  }
  return FuzzySubcomplex(std::move(supp), mu.lattice_ptr(), std::move(values));
}

FuzzySubcomplex chromatic(const SimplicialComplex& k, const std::map<Vertex, std::string>& labels,
                          const std::vector<std::string>& palette) {
  return chromatic(k, labels, Lattice::free_distributive(palette));
}

FuzzySubcomplex chromatic(const SimplicialComplex& k, const std::map<Vertex, std::string>& labels,
                          std::shared_ptr<const Lattice> fdl) {
  if (!fdl || fdl->kind() != LatticeKind::FreeDistributive)
    throw InvalidArgument("chromatic subcomplexes take values in a free distributive lattice");
  std::map<Vertex, LatticeValue> colour;
  for (const Simplex& v : k.simplices(0)) {
    auto it = labels.find(v.vertices()[0]);
    if (it == labels.end()) throw InvalidArgument("vertex " + std::to_string(v.vertices()[0]) + " has no label");
    const auto& palette = fdl->names();
    if (std::find(palette.begin(), palette.end(), it->second) == palette.end())
      throw InvalidArgument("label '" + it->second + "' is not in the palette");
    colour.emplace(v.vertices()[0], fdl->named(it->second));
  }
  std::vector<std::vector<LatticeValue>> values;
  for (int d = 0; d <= k.dim(); ++d) {
    auto& row = values.emplace_back();
    for (const Simplex& s : k.simplices(d)) {
      LatticeValue acc = fdl->top();
      for (Vertex v : s.vertices()) acc = fdl->meet(acc, colour.at(v));
      row.push_back(std::move(acc));
    }
  }
  return FuzzySubcomplex(k, std::move(fdl), std::move(values));
}

std::vector<std::string> ChromaticDataset::palette() const {
  std::set<std::string> s(labels.begin(), labels.end());
  return {s.begin(), s.end()};
}

FuzzySubcomplex vietoris_rips(const ChromaticDataset& data, const mpq_class& radius, int max_dim) {
  const std::size_t n = data.points.size();
  if (n == 0) throw InvalidArgument("vietoris_rips: no points");
  if (data.labels.size() != n) throw InvalidArgument("vietoris_rips: one label per point is required");
  if (radius < 0) throw InvalidArgument("vietoris_rips: negative radius");
  if (max_dim < 0) throw InvalidArgument("vietoris_rips: negative max_dim");
  const std::size_t m = data.points[0].size();
  for (const auto& p : data.points)
    if (p.size() != m) throw InvalidArgument("vietoris_rips: points have different dimensions");

  const mpq_class r2 = radius * radius;
  std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      mpq_class d2 = 0;
      for (std::size_t c = 0; c < m; ++c) {
        const mpq_class diff = data.points[i][c] - data.points[j][c];
        d2 += diff * diff;
      }
      adjacent[i][j] = adjacent[j][i] = d2 <= r2;
    }

  // Grow cliques one vertex at a time, always appending a larger index.
  std::vector<Simplex> cliques;
  std::vector<std::vector<Vertex>> layer;
  for (std::size_t i = 0; i < n; ++i) layer.push_back({static_cast<Vertex>(i)});
  for (int d = 0; d <= max_dim && !layer.empty(); ++d) {
    std::vector<std::vector<Vertex>> next;
    for (auto& c : layer) {
      if (d < max_dim)
        for (std::size_t v = c.back() + 1; v < n; ++v)
          if (std::all_of(c.begin(), c.end(), [&](Vertex u) { return adjacent[u][v]; })) {
            auto grown = c;
            grown.push_back(static_cast<Vertex>(v));
            next.push_back(std::move(grown));
          }
      cliques.emplace_back(std::move(c));
    }
    layer = std::move(next);
  }

  std::map<Vertex, std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.emplace(static_cast<Vertex>(i), data.labels[i]);
  return chromatic(SimplicialComplex::from_closed(cliques), labels, data.palette());
}

FuzzySubcomplex from_filtration(const Poset& poset, const std::map<std::string, SimplicialComplex>& stages) {
  auto lattice = Lattice::up_set(poset);
  const auto& names = lattice->names();
  for (const auto& [name, stage] : stages)
    if (std::find(names.begin(), names.end(), name) == names.end())
      throw InvalidArgument("stage given for unknown poset element '" + name + "'");

  const SimplicialComplex empty;
  auto stage_of = [&](const std::string& p) -> const SimplicialComplex& {
    auto it = stages.find(p);
    return it == stages.end() ? empty : it->second;
  };
  for (const auto& [lo, hi] : poset.covers)
    if (!stage_of(lo).is_subcomplex_of(stage_of(hi)))
      throw InvalidArgument("filtration is not monotone: stage '" + lo + "' is not contained in stage '" + hi + "'");

  std::vector<Simplex> all;
  for (const auto& [name, stage] : stages)
    for (const Simplex& s : stage.all_simplices()) all.push_back(s);
  SimplicialComplex sigma = SimplicialComplex::closure_of(all);
  if (sigma.empty()) throw InvalidArgument("filtration has only empty stages");

  std::vector<std::vector<LatticeValue>> values;
  for (int d = 0; d <= sigma.dim(); ++d) {
    auto& row = values.emplace_back();
    for (const Simplex& s : sigma.simplices(d)) {
      std::uint64_t mask = 0;
      for (std::size_t p = 0; p < names.size(); ++p)
        if (stage_of(names[p]).contains(s)) mask |= std::uint64_t{1} << p;
      row.push_back(lattice->up_set_from_mask(mask));
    }
  }
  return FuzzySubcomplex(std::move(sigma), std::move(lattice), std::move(values));
}

std::vector<std::string> filtration_violations(
    const Lattice& lattice, const std::vector<std::pair<LatticeValue, SimplicialComplex>>& levels) {
  std::vector<std::string> out;
  auto find = [&](const LatticeValue& v) -> const SimplicialComplex* {
    for (const auto& [l, k] : levels)
      if (l == v) return &k;
    return nullptr;
  };
  if (const SimplicialComplex* whole = find(lattice.bottom())) {
    for (const auto& [l, k] : levels)
      if (!k.is_subcomplex_of(*whole))
        out.push_back("level " + lattice.format(l) + " is not contained in the level-0 complex");
  }
  for (std::size_t i = 0; i < levels.size(); ++i)
    for (std::size_t j = 0; j < levels.size(); ++j) {
      const auto& [a, ka] = levels[i];
      const auto& [b, kb] = levels[j];
      if (i != j && lattice.leq(a, b) && !kb.is_subcomplex_of(ka))
        out.push_back("levels " + lattice.format(a) + " <= " + lattice.format(b) + " but M(" + lattice.format(b) +
                      ") is not inside M(" + lattice.format(a) + ")");
      if (i < j) {
        if (const SimplicialComplex* kj = find(lattice.join(a, b)); kj && !(*kj == intersection(ka, kb)))
          out.push_back("M(" + lattice.format(a) + " | " + lattice.format(b) + ") differs from M(" +
                        lattice.format(a) + ") & M(" + lattice.format(b) + ")");
      }
    }
  return out;
}

}  // namespace fuzzyhom
