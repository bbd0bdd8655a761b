#ifndef APERY_INTEGER_HPP
#define APERY_INTEGER_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace apery {

// Every coefficient and congruence value in this library is an exact
// arbitrary-precision integer.
using Integer = mpz_class;

class arithmetic_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Quotient a/b; throws arithmetic_error unless b divides a exactly.
Integer exact_div(const Integer& a, const Integer& b);

// Canonical residue of a modulo m, in [0, m). Requires m > 0.
Integer mod_canonical(const Integer& a, const Integer& m);

// base^e for e >= 0.
Integer pow_int(const Integer& base, unsigned long e);

Integer factorial(unsigned long n);

// Floor division toward negative infinity; b > 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
Integer floor_div(const Integer& a, const Integer& b);

// p-adic valuation with a tagged infinite value for x = 0 (the valuation of
// zero is not a number; callers compare against finite thresholds).
class Valuation {
public:
  static Valuation infinite() { return Valuation(true, 0); }
  static Valuation finite(unsigned long v) { return Valuation(false, v); }

  bool is_infinite() const { return infinite_; }
  unsigned long value() const {
    if (infinite_) throw arithmetic_error("valuation is infinite");
    return v_;
  }
  bool at_least(unsigned long bound) const { return infinite_ || v_ >= bound; }
  bool operator==(const Valuation& o) const = default;
  std::string to_string() const { return infinite_ ? "inf" : std::to_string(v_); }

private:
  Valuation(bool inf, unsigned long v) : infinite_(inf), v_(v) {}
  bool infinite_;
  unsigned long v_;
};

// Largest e with p^e | x, or the infinite valuation when x = 0. p must be > 1
// (primality is the caller's concern).
Valuation padic_valuation(const Integer& x, const Integer& p);

}  // namespace apery

#endif
