#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fuzzyhom {

/// Finite poset given by its Hasse diagram. covers holds (lower, upper)
/// pairs; the order is their reflexive-transitive closure.
struct Poset {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
};

enum class LatticeKind { TotalOrder, FreeDistributive, UpSet };

/// An element of a specific Lattice, in canonical form:
///   TotalOrder:       { level index }
///   FreeDistributive: sorted antichain of generator bitmasks, each mask a
///                     meet-term; the value is the join of those meets
///   UpSet:            { bitmask of poset elements }, upward closed
/// Equality is payload equality, which is lattice equality because the
/// representation is canonical. The ordering operators are a storage order
/// for containers only, not the lattice order.
class LatticeValue {
 public:
  LatticeValue() = default;

  std::uint64_t lattice_id() const { return lattice_id_; }
  std::span<const std::uint64_t> payload() const { return payload_; }

  friend bool operator==(const LatticeValue&, const LatticeValue&) = default;
  friend auto operator<=>(const LatticeValue&, const LatticeValue&) = default;

 private:
  friend class Lattice;
  LatticeValue(std::uint64_t id, std::vector<std::uint64_t> payload)
      : lattice_id_(id), payload_(std::move(payload)) {}

  std::uint64_t lattice_id_ = 0;
  std::vector<std::uint64_t> payload_;
};

/// A finite completely distributive lattice: a chain of named levels, the
/// free distributive lattice on named generators, or the up-sets of a poset.
/// Immutable; share it through std::shared_ptr.
class Lattice {
 public:
  /// At least two levels, listed bottom first.
  static std::shared_ptr<const Lattice> total_order(std::vector<std::string> levels);
  /// 1..64 generators.
  static std::shared_ptr<const Lattice> free_distributive(std::vector<std::string> generators);
  /// 1..64 elements, acyclic covers.
  static std::shared_ptr<const Lattice> up_set(Poset poset);

  LatticeKind kind() const { return kind_; }
  std::uint64_t id() const { return id_; }
  /// Level names, generator names, or poset element names.
  const std::vector<std::string>& names() const { return names_; }
  const Poset& poset() const { return poset_; }

  LatticeValue bottom() const;
  LatticeValue top() const;
  /// A level, a generator, or the principal up-set of a poset element.
  LatticeValue named(std::string_view name) const;
  /// UpSet only: the up-set with the given element bitmask; throws unless
  /// upward closed.
  LatticeValue up_set_from_mask(std::uint64_t mask) const;
  /// UpSet only: up-closure of an element set.
  LatticeValue up_closure(std::uint64_t mask) const;

  bool leq(const LatticeValue& a, const LatticeValue& b) const;
  bool less(const LatticeValue& a, const LatticeValue& b) const { return leq(a, b) && !(a == b); }
  LatticeValue join(const LatticeValue& a, const LatticeValue& b) const;
  LatticeValue meet(const LatticeValue& a, const LatticeValue& b) const;
  /// join of the empty set is bottom.
  LatticeValue join(std::span<const LatticeValue> values) const;
  /// meet of the empty set is top.
  LatticeValue meet(std::span<const LatticeValue> values) const;

  /// Whether a ∧ b = 0 forces a = 0 or b = 0.
  bool is_zero_meet_prime() const { return zero_is_meet_prime_; }
  bool is_total_order() const { return kind_ == LatticeKind::TotalOrder; }

  /// Every element of the lattice. Throws CapabilityError when the lattice
  /// has more than `cap` elements or the enumeration would be infeasible.
  std::vector<LatticeValue> elements(std::size_t cap = 1u << 16) const;

  /// Grammar: names, literals 0 and 1, '&' (meet) binding tighter than '|'
  /// (join), parentheses; UpSet lattices also accept "{a,b}" (must be
  /// upward closed). A declared name shadows the literals.
  LatticeValue parse(std::string_view text) const;
  /// Canonical text: level name; join-of-meets with sorted terms; or "{a,b}".
  std::string format(const LatticeValue& v) const;

  /// Throws LatticeMismatch unless v belongs to this lattice.
  void check(const LatticeValue& v) const;
  bool owns(const LatticeValue& v) const { return v.lattice_id() == id_; }

 private:
  Lattice(LatticeKind kind, std::vector<std::string> names);
  LatticeValue make(std::vector<std::uint64_t> payload) const { return LatticeValue(id_, std::move(payload)); }
  std::size_t index_of(std::string_view name) const;

  LatticeKind kind_;
  std::uint64_t id_;
  std::vector<std::string> names_;
  Poset poset_;
  std::vector<std::uint64_t> principal_;  // UpSet: ↑p as a mask
  std::uint64_t full_mask_ = 0;
  bool zero_is_meet_prime_ = true;
};

/// The whole carrier of FDL(generators): every antichain of generator
/// subsets, bottom and top included. Refuses more than `cap` generators.
std::vector<LatticeValue> enumerate_fdl(const Lattice& fdl, std::size_t cap = 4);

/// Free-standing form of the meet-prime test.
inline bool is_zero_meet_prime(const Lattice& lattice) { return lattice.is_zero_meet_prime(); }

/// Smallest set containing `values` closed under binary meets (resp. joins).
std::vector<LatticeValue> meet_closure(const Lattice& lattice, std::vector<LatticeValue> values);
std::vector<LatticeValue> join_closure(const Lattice& lattice, std::vector<LatticeValue> values);

/// Sorts `values` along a linear extension of the lattice order (ties by
/// formatted text), giving reports a stable order.
void sort_by_lattice_order(const Lattice& lattice, std::vector<LatticeValue>& values);

/// Whether the values form a chain under the lattice order.
bool is_chain(const Lattice& lattice, std::span<const LatticeValue> values);

}  // namespace fuzzyhom
