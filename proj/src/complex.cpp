#include "fuzzyhom/complex.hpp"

#include <algorithm>
#include <set>

#include "fuzzyhom/error.hpp"

namespace fuzzyhom {

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw InvalidArgument("simplex needs at least one vertex");
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw InvalidArgument("simplex " + to_string() + " repeats a vertex");
}

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end());
}

std::string Simplex::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < vertices_.size(); ++i) out += (i ? "," : "") + std::to_string(vertices_[i]);
  return out + "]";
}

std::vector<Simplex> faces(const Simplex& s) {
  const auto& v = s.vertices();
  if (v.size() > 24) throw CapabilityError("faces: simplex dimension too large to enumerate");
  std::vector<Simplex> out;
  const std::uint32_t subsets = std::uint32_t{1} << v.size();
  for (std::uint32_t m = 1; m < subsets; ++m) {
    std::vector<Vertex> f;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (m >> i & 1) f.push_back(v[i]);
    out.emplace_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const Simplex& a, const Simplex& b) {
    return a.dim() != b.dim() ? a.dim() < b.dim() : a < b;
  });
  return out;
}

std::vector<Simplex> facets(const Simplex& s) {
  std::vector<Simplex> out;
  if (s.dim() == 0) return out;
  const auto& v = s.vertices();
  for (std::size_t j = 0; j < v.size(); ++j) {
    std::vector<Vertex> f;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (i != j) f.push_back(v[i]);
    out.emplace_back(std::move(f));
  }
  return out;
}

SimplicialComplex SimplicialComplex::from_maximal(const std::vector<std::vector<Vertex>>& maximal) {
  if (maximal.empty()) throw InvalidArgument("complex needs at least one simplex");
  std::vector<Simplex> simplices;
  simplices.reserve(maximal.size());
  for (const auto& m : maximal) simplices.emplace_back(m);
  return closure_of(simplices);
}

SimplicialComplex SimplicialComplex::closure_of(std::span<const Simplex> simplices) {
  std::vector<std::set<Simplex>> sets;
  for (const Simplex& s : simplices) {
    // Walk down through facets; a face already present has all its faces too.
    std::vector<Simplex> stack{s};
    while (!stack.empty()) {
      Simplex cur = std::move(stack.back());
      stack.pop_back();
      const std::size_t d = cur.dim();
      if (sets.size() <= d) sets.resize(d + 1);
      if (!sets[d].insert(cur).second) continue;
      for (Simplex& f : facets(cur)) stack.push_back(std::move(f));
    }
  }
  SimplicialComplex k;
  for (auto& set : sets) k.by_dim_.emplace_back(set.begin(), set.end());
  return k;
}

SimplicialComplex SimplicialComplex::from_closed(std::span<const Simplex> simplices) {
  SimplicialComplex k = closure_of(simplices);
  if (k.size() != std::set<Simplex>(simplices.begin(), simplices.end()).size())
    throw InvalidArgument("simplex list is not closed under faces");
  return k;
}

std::size_t SimplicialComplex::count(int d) const {
  return d < 0 || d > dim() ? 0 : by_dim_[static_cast<std::size_t>(d)].size();
}

std::size_t SimplicialComplex::size() const {
  std::size_t n = 0;
  for (const auto& v : by_dim_) n += v.size();
  return n;
}

std::span<const Simplex> SimplicialComplex::simplices(int d) const {
  if (d < 0 || d > dim()) return {};
  return by_dim_[static_cast<std::size_t>(d)];
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  const int d = static_cast<int>(s.dim());
  if (d > dim()) return std::nullopt;
  const auto& list = by_dim_[static_cast<std::size_t>(d)];
  auto it = std::lower_bound(list.begin(), list.end(), s);
  if (it == list.end() || !(*it == s)) return std::nullopt;
  return static_cast<std::size_t>(it - list.begin());
}

std::vector<Simplex> SimplicialComplex::all_simplices() const {
  std::vector<Simplex> out;
  out.reserve(size());
  for (const auto& v : by_dim_) out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::set<Simplex> covered;
  for (int d = 1; d <= dim(); ++d)
    for (const Simplex& s : simplices(d))
      for (Simplex& f : facets(s)) covered.insert(std::move(f));
  std::vector<Simplex> out;
  for (const Simplex& s : all_simplices())
    if (!covered.count(s)) out.push_back(s);
  return out;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  for (const auto& v : by_dim_)
    for (const Simplex& s : v)
      if (!other.contains(s)) return false;
  return true;
}

SimplicialComplex intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<Simplex> common;
  for (const Simplex& s : a.all_simplices())
    if (b.contains(s)) common.push_back(s);
  return SimplicialComplex::closure_of(common);
}

Matrix boundary_matrix(const SimplicialComplex& k, int d, const Ring& ring) {
  if (k.empty()) throw InvalidArgument("boundary_matrix: empty complex");
  const int t = k.dim();
  if (d < 0 || d > t + 1)
    throw InvalidArgument("boundary_matrix: degree " + std::to_string(d) + " outside [0, " +
                          std::to_string(t + 1) + "]");
  if (d == 0) return Matrix(1, k.count(0));
  if (d == t + 1) return Matrix(k.count(t), 1);

  Matrix m(k.count(d - 1), k.count(d));
  const auto cols = k.simplices(d);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto fs = facets(cols[c]);
    for (std::size_t j = 0; j < fs.size(); ++j) m(*k.index_of(fs[j]), c) = (j % 2 == 0) ? 1 : -1;
  }
  m.reduce(ring);
  return m;
}

}  // namespace fuzzyhom
