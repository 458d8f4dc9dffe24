#include "fuzzyhom/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cctype>
#include <map>
#include <set>

#include "fuzzyhom/error.hpp"

namespace fuzzyhom {

namespace {

std::atomic<std::uint64_t> next_lattice_id{1};

constexpr std::size_t kMaxNames = 64;

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == ':' || c == '-' ||
         c == '+';
}

void check_names(const std::vector<std::string>& names, std::string_view what) {
  if (names.size() > kMaxNames)
    throw InvalidArgument(std::string(what) + ": at most 64 names are supported");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty() || !std::all_of(n.begin(), n.end(), is_name_char))
      throw InvalidArgument(std::string(what) + ": invalid name '" + n + "'");
    if (!seen.insert(n).second) throw InvalidArgument(std::string(what) + ": duplicate name '" + n + "'");
  }
}

bool subset_of(std::uint64_t a, std::uint64_t b) { return (a & b) == a; }

// Keeps only the minimal masks; output sorted ascending.
std::vector<std::uint64_t> minimize(std::vector<std::uint64_t> terms) {
  std::sort(terms.begin(), terms.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  std::vector<std::uint64_t> kept;
  for (std::uint64_t t : terms)
    if (std::none_of(kept.begin(), kept.end(), [t](std::uint64_t k) { return subset_of(k, t); }))
      kept.push_back(t);
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::uint64_t low_mask(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

}  // namespace

Lattice::Lattice(LatticeKind kind, std::vector<std::string> names)
    : kind_(kind), id_(next_lattice_id.fetch_add(1)), names_(std::move(names)) {}

std::shared_ptr<const Lattice> Lattice::total_order(std::vector<std::string> levels) {
  if (levels.size() < 2) throw InvalidArgument("total order needs at least two levels");
  check_names(levels, "total order");
  return std::shared_ptr<const Lattice>(new Lattice(LatticeKind::TotalOrder, std::move(levels)));
}

std::shared_ptr<const Lattice> Lattice::free_distributive(std::vector<std::string> generators) {
  if (generators.empty()) throw InvalidArgument("free distributive lattice needs a generator");
  check_names(generators, "free distributive lattice");
  auto* l = new Lattice(LatticeKind::FreeDistributive, std::move(generators));
  l->full_mask_ = low_mask(l->names_.size());
  return std::shared_ptr<const Lattice>(l);
}

std::shared_ptr<const Lattice> Lattice::up_set(Poset poset) {
  if (poset.elements.empty()) throw InvalidArgument("up-set lattice needs a non-empty poset");
  check_names(poset.elements, "poset");
  auto lattice = std::unique_ptr<Lattice>(new Lattice(LatticeKind::UpSet, poset.elements));
  const std::size_t n = poset.elements.size();

  std::vector<std::uint64_t> upper(n, 0);
  for (const auto& [lo, hi] : poset.covers) {
    const std::size_t a = lattice->index_of(lo);
    const std::size_t b = lattice->index_of(hi);
    if (a == b) throw InvalidArgument("poset cover relates '" + lo + "' to itself");
    upper[a] |= std::uint64_t{1} << b;
  }
  // Transitive closure by fixpoint.
  std::vector<std::uint64_t> up(n);
  for (std::size_t p = 0; p < n; ++p) up[p] = (std::uint64_t{1} << p) | upper[p];
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t p = 0; p < n; ++p) {
      std::uint64_t acc = up[p];
      for (std::size_t q = 0; q < n; ++q)
        if (q != p && (up[p] >> q & 1)) acc |= up[q];
      if (acc != up[p]) {
        up[p] = acc;
        changed = true;
      }
    }
  }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q)
      if ((up[p] >> q & 1) && (up[q] >> p & 1))
        throw InvalidArgument("poset covers contain a cycle through '" + poset.elements[p] + "' and '" +
                              poset.elements[q] + "'");

  lattice->principal_ = up;
  lattice->full_mask_ = low_mask(n);
  lattice->poset_ = std::move(poset);
  // 0 is meet-prime iff any two principal filters meet.
  for (std::size_t p = 0; p < n && lattice->zero_is_meet_prime_; ++p)
    for (std::size_t q = p + 1; q < n; ++q)
      if ((up[p] & up[q]) == 0) {
        lattice->zero_is_meet_prime_ = false;
        break;
      }
  return std::shared_ptr<const Lattice>(lattice.release());
}

std::size_t Lattice::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw ParseError("unknown name '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

LatticeValue Lattice::bottom() const {
  switch (kind_) {
    case LatticeKind::TotalOrder: return make({0});
    case LatticeKind::FreeDistributive: return make({});
    case LatticeKind::UpSet: return make({0});
  }
  return {};
}

LatticeValue Lattice::top() const {
  switch (kind_) {
    case LatticeKind::TotalOrder: return make({names_.size() - 1});
    case LatticeKind::FreeDistributive: return make({0});
    case LatticeKind::UpSet: return make({full_mask_});
  }
  return {};
}

LatticeValue Lattice::named(std::string_view name) const {
  const std::size_t i = index_of(name);
  switch (kind_) {
    case LatticeKind::TotalOrder: return make({i});
    case LatticeKind::FreeDistributive: return make({std::uint64_t{1} << i});
    case LatticeKind::UpSet: return make({principal_[i]});
  }
  return {};
}

LatticeValue Lattice::up_closure(std::uint64_t mask) const {
  if (kind_ != LatticeKind::UpSet) throw InvalidArgument("up_closure needs an up-set lattice");
  std::uint64_t closed = 0;
  for (std::size_t p = 0; p < names_.size(); ++p)
    if (mask >> p & 1) closed |= principal_[p];
  return make({closed});
}

LatticeValue Lattice::up_set_from_mask(std::uint64_t mask) const {
  if (kind_ != LatticeKind::UpSet) throw InvalidArgument("up_set_from_mask needs an up-set lattice");
  if ((mask & ~full_mask_) != 0) throw InvalidArgument("mask has bits outside the poset");
  LatticeValue v = up_closure(mask);
  if (v.payload()[0] != mask) throw InvalidArgument("element set is not upward closed");
  return v;
}

void Lattice::check(const LatticeValue& v) const {
  if (v.lattice_id() != id_) throw LatticeMismatch();
}

bool Lattice::leq(const LatticeValue& a, const LatticeValue& b) const {
  check(a);
  check(b);
  switch (kind_) {
    case LatticeKind::TotalOrder: return a.payload_[0] <= b.payload_[0];
    case LatticeKind::UpSet: return subset_of(a.payload_[0], b.payload_[0]);
    case LatticeKind::FreeDistributive:
      // Every meet-term of a lies below some meet-term of b.
      return std::all_of(a.payload_.begin(), a.payload_.end(), [&](std::uint64_t ta) {
        return std::any_of(b.payload_.begin(), b.payload_.end(),
                           [ta](std::uint64_t tb) { return subset_of(tb, ta); });
      });
  }
  return false;
}

LatticeValue Lattice::join(const LatticeValue& a, const LatticeValue& b) const {
  check(a);
  check(b);
  switch (kind_) {
    case LatticeKind::TotalOrder: return make({std::max(a.payload_[0], b.payload_[0])});
    case LatticeKind::UpSet: return make({a.payload_[0] | b.payload_[0]});
    case LatticeKind::FreeDistributive: {
      std::vector<std::uint64_t> terms = a.payload_;
      terms.insert(terms.end(), b.payload_.begin(), b.payload_.end());
      return make(minimize(std::move(terms)));
    }
  }
  return {};
}

LatticeValue Lattice::meet(const LatticeValue& a, const LatticeValue& b) const {
  check(a);
  check(b);
  switch (kind_) {
    case LatticeKind::TotalOrder: return make({std::min(a.payload_[0], b.payload_[0])});
    case LatticeKind::UpSet: return make({a.payload_[0] & b.payload_[0]});
    case LatticeKind::FreeDistributive: {
      std::vector<std::uint64_t> terms;
      terms.reserve(a.payload_.size() * b.payload_.size());
      for (std::uint64_t ta : a.payload_)
        for (std::uint64_t tb : b.payload_) terms.push_back(ta | tb);
      return make(minimize(std::move(terms)));
    }
  }
  return {};
}

LatticeValue Lattice::join(std::span<const LatticeValue> values) const {
  LatticeValue acc = bottom();
  for (const auto& v : values) acc = join(acc, v);
  return acc;
}

LatticeValue Lattice::meet(std::span<const LatticeValue> values) const {
  LatticeValue acc = top();
  for (const auto& v : values) acc = meet(acc, v);
  return acc;
}

std::vector<LatticeValue> Lattice::elements(std::size_t cap) const {
  std::vector<LatticeValue> out;
  auto push = [&](LatticeValue v) {
    if (out.size() >= cap) throw CapabilityError("lattice has more than " + std::to_string(cap) + " elements");
    out.push_back(std::move(v));
  };
  switch (kind_) {
    case LatticeKind::TotalOrder:
      for (std::size_t i = 0; i < names_.size(); ++i) push(make({i}));
      break;
    case LatticeKind::UpSet: {
      if (names_.size() > 24) throw CapabilityError("up-set enumeration limited to 24 poset elements");
      for (std::uint64_t m = 0; m <= full_mask_; ++m)
        if (up_closure(m).payload_[0] == m) push(make({m}));
      break;
    }
    case LatticeKind::FreeDistributive: {
      if (names_.size() > 5) throw CapabilityError("free distributive enumeration limited to 5 generators");
      // Antichains of the subset lattice, by include/exclude backtracking.
      const std::uint64_t subsets = std::uint64_t{1} << names_.size();
      std::vector<std::uint64_t> chosen;
      auto rec = [&](auto&& self, std::uint64_t next) -> void {
        if (next == subsets) {
          push(make(minimize(chosen)));
          return;
        }
        self(self, next + 1);
        const bool comparable = std::any_of(chosen.begin(), chosen.end(), [next](std::uint64_t c) {
          return subset_of(c, next) || subset_of(next, c);
        });
        if (!comparable) {
          chosen.push_back(next);
          self(self, next + 1);
          chosen.pop_back();
        }
      };
      rec(rec, 0);
      break;
    }
  }
  return out;
}

std::vector<LatticeValue> enumerate_fdl(const Lattice& fdl, std::size_t cap) {
  if (fdl.kind() != LatticeKind::FreeDistributive) throw InvalidArgument("enumerate_fdl needs a free distributive lattice");
  if (fdl.names().size() > cap)
    throw CapabilityError("free distributive lattice on " + std::to_string(fdl.names().size()) +
                          " generators exceeds the enumeration cap of " + std::to_string(cap));
  return fdl.elements();
}

// ---------------------------------------------------------------------------
// Expression syntax

namespace {

struct Token {
  enum Kind { Name, Meet, Join, LParen, RParen, LBrace, RBrace, Comma, End } kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Token::Kind k;
    switch (c) {
      case '&': k = Token::Meet; break;
      case '|': k = Token::Join; break;
      case '(': k = Token::LParen; break;
      case ')': k = Token::RParen; break;
      case '{': k = Token::LBrace; break;
      case '}': k = Token::RBrace; break;
      case ',': k = Token::Comma; break;
      default:
        if (!is_name_char(c))
          throw ParseError("unexpected character '" + std::string(1, c) + "' at offset " + std::to_string(i));
        {
          const std::size_t start = i;
          while (i < s.size() && is_name_char(s[i])) ++i;
          out.push_back({Token::Name, std::string(s.substr(start, i - start)), start});
        }
        continue;
    }
    out.push_back({k, std::string(1, c), i});
    ++i;
  }
  out.push_back({Token::End, "", s.size()});
  return out;
}

class ExpressionParser {
 public:
  ExpressionParser(const Lattice& lattice, std::string_view text) : lattice_(lattice), tokens_(tokenize(text)) {}

  LatticeValue parse() {
    LatticeValue v = expr();
    if (peek().kind != Token::End) fail("trailing input");
    return v;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(peek().pos));
  }
  void expect(Token::Kind k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    ++pos_;
  }

  LatticeValue expr() {
    LatticeValue v = term();
    while (peek().kind == Token::Join) {
      ++pos_;
      v = lattice_.join(v, term());
    }
    return v;
  }

  LatticeValue term() {
    LatticeValue v = factor();
    while (peek().kind == Token::Meet) {
      ++pos_;
      v = lattice_.meet(v, factor());
    }
    return v;
  }

  LatticeValue factor() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Name: {
        ++pos_;
        const auto& names = lattice_.names();
        if (std::find(names.begin(), names.end(), t.text) != names.end()) return lattice_.named(t.text);
        if (t.text == "0") return lattice_.bottom();
        if (t.text == "1") return lattice_.top();
        throw ParseError("unknown name '" + t.text + "' at offset " + std::to_string(t.pos));
      }
      case Token::LParen: {
        ++pos_;
        LatticeValue v = expr();
        expect(Token::RParen, "')'");
        return v;
      }
      case Token::LBrace: return set_literal();
      default: fail("expected a name, '(' or '{'");
    }
  }

  LatticeValue set_literal() {
    if (lattice_.kind() != LatticeKind::UpSet) fail("set syntax is only valid in up-set lattices");
    ++pos_;
    std::uint64_t mask = 0;
    if (peek().kind != Token::RBrace) {
      for (;;) {
        if (peek().kind != Token::Name) fail("expected a poset element");
        const Token& t = take();
        const auto& names = lattice_.names();
        auto it = std::find(names.begin(), names.end(), t.text);
        if (it == names.end()) throw ParseError("unknown poset element '" + t.text + "'");
        mask |= std::uint64_t{1} << (it - names.begin());
        if (peek().kind == Token::Comma) {
          ++pos_;
          continue;
        }
        break;
      }
    }
    const std::size_t at = peek().pos;
    expect(Token::RBrace, "'}'");
    try {
      return lattice_.up_set_from_mask(mask);
    } catch (const InvalidArgument&) {
      throw ParseError("set literal ending at offset " + std::to_string(at) + " is not upward closed");
    }
  }

  const Lattice& lattice_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

LatticeValue Lattice::parse(std::string_view text) const { return ExpressionParser(*this, text).parse(); }

std::string Lattice::format(const LatticeValue& v) const {
  check(v);
  switch (kind_) {
    case LatticeKind::TotalOrder: return names_[v.payload_[0]];
    case LatticeKind::UpSet: {
      std::vector<std::string> members;
      for (std::size_t p = 0; p < names_.size(); ++p)
        if (v.payload_[0] >> p & 1) members.push_back(names_[p]);
      std::sort(members.begin(), members.end());
      std::string out = "{";
      for (std::size_t i = 0; i < members.size(); ++i) out += (i ? "," : "") + members[i];
      return out + "}";
    }
    case LatticeKind::FreeDistributive: {
      if (v.payload_.empty()) return "0";
      if (v.payload_.size() == 1 && v.payload_[0] == 0) return "1";
      std::vector<std::string> terms;
      for (std::uint64_t mask : v.payload_) {
        std::vector<std::string> gens;
        for (std::size_t g = 0; g < names_.size(); ++g)
          if (mask >> g & 1) gens.push_back(names_[g]);
        std::sort(gens.begin(), gens.end());
        std::string term;
        for (std::size_t i = 0; i < gens.size(); ++i) term += (i ? " & " : "") + gens[i];
        terms.push_back(std::move(term));
      }
      std::sort(terms.begin(), terms.end());
      std::string out;
      for (std::size_t i = 0; i < terms.size(); ++i) out += (i ? " | " : "") + terms[i];
      return out;
    }
  }
  return {};
}

// ---------------------------------------------------------------------------

namespace {

std::vector<LatticeValue> binary_closure(std::vector<LatticeValue> values,
                                         const std::function<LatticeValue(const LatticeValue&, const LatticeValue&)>& op) {
  std::set<LatticeValue> seen(values.begin(), values.end());
  std::vector<LatticeValue> all(seen.begin(), seen.end());
  for (std::size_t frontier = 0; frontier < all.size();) {
    const std::size_t end = all.size();
    for (std::size_t i = frontier; i < end; ++i)
      for (std::size_t j = 0; j < end; ++j) {
        LatticeValue m = op(all[i], all[j]);
        if (seen.insert(m).second) all.push_back(std::move(m));
      }
    frontier = end;
  }
  return all;
}

}  // namespace

std::vector<LatticeValue> meet_closure(const Lattice& lattice, std::vector<LatticeValue> values) {
  auto out = binary_closure(std::move(values), [&](const LatticeValue& a, const LatticeValue& b) {
    return lattice.meet(a, b);
  });
  sort_by_lattice_order(lattice, out);
  return out;
}

std::vector<LatticeValue> join_closure(const Lattice& lattice, std::vector<LatticeValue> values) {
  auto out = binary_closure(std::move(values), [&](const LatticeValue& a, const LatticeValue& b) {
    return lattice.join(a, b);
  });
  sort_by_lattice_order(lattice, out);
  return out;
}

void sort_by_lattice_order(const Lattice& lattice, std::vector<LatticeValue>& values) {
  std::vector<std::pair<std::pair<std::size_t, std::string>, LatticeValue>> keyed;
  keyed.reserve(values.size());
  for (const auto& v : values) {
    std::size_t below = 0;
    for (const auto& w : values)
      if (lattice.leq(w, v)) ++below;
    keyed.push_back({{below, lattice.format(v)}, v});
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = std::move(keyed[i].second);
}

bool is_chain(const Lattice& lattice, std::span<const LatticeValue> values) {
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (!lattice.leq(values[i], values[j]) && !lattice.leq(values[j], values[i])) return false;
  return true;
}

}  // namespace fuzzyhom
