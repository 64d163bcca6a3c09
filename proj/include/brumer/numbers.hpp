#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace brumer {

using Integer = mpz_class;
using Rational = mpq_class;

// Non-negative residue of a modulo m (m > 0).
Integer mod_floor(const Integer& a, const Integer& m);
Integer ipow(const Integer& base, unsigned long exp);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

// v_p(a); returns `cap` for a == 0.
long valuation(const Integer& a, const Integer& p, long cap = 1L << 30);
long valuation(const Rational& a, const Integer& p, long cap = 1L << 30);

bool is_prime(const Integer& n);
std::vector<long> prime_factors(long n);  // distinct, ascending

// Image of a p-integral rational in Z/modulus. Throws NotIntegral otherwise.
Integer reduce_rational(const Rational& a, const Integer& modulus);

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& a);
std::string to_string(const Integer& a);

long to_long(const Integer& a);

}  // namespace brumer
