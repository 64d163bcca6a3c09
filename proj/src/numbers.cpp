#include "brumer/numbers.hpp"

#include <limits>

#include "brumer/errors.hpp"

namespace brumer {

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

long valuation(const Integer& a, const Integer& p, long cap) {
  if (a == 0) return cap;
  Integer q = a;
  long v = 0;
  while (mpz_divisible_p(q.get_mpz_t(), p.get_mpz_t()) != 0) {
    mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    ++v;
    if (v >= cap) return cap;
  }
  return v;
}

long valuation(const Rational& a, const Integer& p, long cap) {
  if (a == 0) return cap;
  return valuation(a.get_num(), p, cap) - valuation(a.get_den(), p, cap);
}

bool is_prime(const Integer& n) {
  return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Integer reduce_rational(const Rational& a, const Integer& modulus) {
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_den().get_mpz_t(), modulus.get_mpz_t()) == 0) {
    if (modulus == 1) return 0;
    fail(ErrorCode::kNotIntegral, "denominator of " + to_string(a) + " is not a unit mod " +
                                      to_string(modulus));
  }
  return mod_floor(a.get_num() * inv, modulus);
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) fail(ErrorCode::kSchemaError, "not a rational: '" + text + "'");
  if (r.get_den() == 0) fail(ErrorCode::kSchemaError, "zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& a) { return a.get_str(); }
std::string to_string(const Integer& a) { return a.get_str(); }

long to_long(const Integer& a) {
  if (!a.fits_slong_p()) fail(ErrorCode::kInvalidArgument, "integer out of range: " + a.get_str());
  return a.get_si();
}

}  // namespace brumer
