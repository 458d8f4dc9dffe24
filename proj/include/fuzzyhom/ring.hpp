#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fuzzyhom {

using Integer = mpz_class;

/// Coefficient ring: the integers, or the integers modulo a prime p.
/// Elements of both are carried as Integer; modular elements are kept
/// reduced into [0, p).
class Ring {
 public:
  Ring() = default;

  static Ring integers() { return Ring{}; }
  /// Throws InvalidArgument unless p is prime.
  static Ring integers_mod(long p);
  /// Accepts "z" or "zmod:<p>".
  static Ring parse(std::string_view text);

  bool is_field() const { return modulus_ != 0; }
  long modulus() const { return modulus_; }
  std::string name() const;

  Integer reduce(const Integer& a) const;
  void reduce_in_place(Integer& a) const;

  bool is_unit(const Integer& a) const;
  /// a | b.
  bool divides(const Integer& a, const Integer& b) const;
  /// b / a, assuming a | b.
  Integer exact_quotient(const Integer& b, const Integer& a) const;
  /// Euclidean quotient: floor(b / a) over Z, the exact quotient over F_p.
  Integer euclid_quotient(const Integer& b, const Integer& a) const;
  /// A unit u with u * a the canonical associate of a (|a| over Z, 1 over F_p).
  Integer unit_normalizer(const Integer& a) const;
  /// Inverse of a unit.
  Integer inverse(const Integer& unit) const;
  /// Canonical associate: |a| over Z, 1 for non-zero a over F_p.
  Integer associate(const Integer& a) const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  explicit Ring(long p) : modulus_(p) {}
  long modulus_ = 0;
};

}  // namespace fuzzyhom
