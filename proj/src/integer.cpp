#include "apery/integer.hpp"

namespace apery {

Integer exact_div(const Integer& a, const Integer& b) {
  if (b == 0) throw arithmetic_error("exact_div: division by zero");
  Integer q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0)
    throw arithmetic_error("exact_div: " + b.get_str() + " does not divide " +
                           a.get_str());
  return q;
}

Integer mod_canonical(const Integer& a, const Integer& m) {
  if (m <= 0) throw arithmetic_error("mod_canonical: modulus must be positive");
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer pow_int(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  if (b <= 0) throw arithmetic_error("floor_div: divisor must be positive");
  std::int64_t q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b <= 0) throw arithmetic_error("floor_div: divisor must be positive");
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Valuation padic_valuation(const Integer& x, const Integer& p) {
  if (p <= 1) throw arithmetic_error("padic_valuation: p must exceed 1");
  if (x == 0) return Valuation::infinite();
  Integer reduced;
  mp_bitcnt_t e =
      mpz_remove(reduced.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
  return Valuation::finite(static_cast<unsigned long>(e));
}

}  // namespace apery
