#include "fuzzyhom/ring.hpp"

#include <charconv>

#include "fuzzyhom/error.hpp"

namespace fuzzyhom {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

}  // namespace

Ring Ring::integers_mod(long p) {
  if (!is_prime(p))
    throw InvalidArgument("modulus " + std::to_string(p) + " is not prime");
  return Ring{p};
}

Ring Ring::parse(std::string_view text) {
  if (text == "z" || text == "Z") return integers();
  constexpr std::string_view prefix = "zmod:";
  if (text.starts_with(prefix)) {
    auto digits = text.substr(prefix.size());
    long p = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || end != digits.data() + digits.size())
      throw ParseError("bad ring modulus in '" + std::string(text) + "'");
    if (!is_prime(p)) throw ParseError("ring modulus " + std::to_string(p) + " is not prime");
    return Ring{p};
  }
  throw ParseError("unknown ring '" + std::string(text) + "' (expected z or zmod:<p>)");
}

std::string Ring::name() const {
  return is_field() ? "zmod:" + std::to_string(modulus_) : "z";
}

Integer Ring::reduce(const Integer& a) const {
  if (!is_field()) return a;
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(modulus_));
  return r;
}

void Ring::reduce_in_place(Integer& a) const {
  if (is_field()) mpz_fdiv_r_ui(a.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(modulus_));
}

bool Ring::is_unit(const Integer& a) const {
  if (is_field()) return reduce(a) != 0;
  return a == 1 || a == -1;
}

bool Ring::divides(const Integer& a, const Integer& b) const {
  if (is_field()) return reduce(a) != 0 || reduce(b) == 0;
  if (a == 0) return b == 0;
  return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

Integer Ring::exact_quotient(const Integer& b, const Integer& a) const {
  if (is_field()) return reduce(b * inverse(a));
  Integer q;
  mpz_divexact(q.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
  return q;
}

Integer Ring::euclid_quotient(const Integer& b, const Integer& a) const {
  if (is_field()) return exact_quotient(b, a);
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
  return q;
}

Integer Ring::unit_normalizer(const Integer& a) const {
  if (is_field()) return reduce(a) == 0 ? Integer(1) : inverse(a);
  return a < 0 ? Integer(-1) : Integer(1);
}

Integer Ring::inverse(const Integer& unit) const {
  if (!is_unit(unit)) throw InvalidArgument("element is not a unit");
  if (!is_field()) return unit;
  Integer inv;
  Integer p = modulus_;
  mpz_invert(inv.get_mpz_t(), reduce(unit).get_mpz_t(), p.get_mpz_t());
  return inv;
}

Integer Ring::associate(const Integer& a) const {
  if (is_field()) return reduce(a) == 0 ? Integer(0) : Integer(1);
  return abs(a);
}

}  // namespace fuzzyhom
