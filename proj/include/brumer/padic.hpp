#pragma once

#include <memory>
#include <vector>

#include "brumer/cyclotomic.hpp"
#include "brumer/numbers.hpp"

namespace brumer {

inline constexpr long kDefaultPrecision = 64;
inline constexpr long kDefaultGuard = 8;

// (Z/p^N)[x]/(g) where g is the Hensel lift of the lexicographically least
// monic irreducible factor of Phi_{m'} mod p, and x is the image of zeta_{m'}.
class UnramifiedRing {
 public:
  // Cached per (p, m', N); m' must be prime to p.
  static std::shared_ptr<const UnramifiedRing> get(const Integer& p, long prime_to_p_order, long precision);

  const Integer& prime() const { return p_; }
  long precision() const { return precision_; }
  const Integer& modulus() const { return modulus_; }
  long root_order() const { return m_; }
  std::size_t degree() const { return g_.size() - 1; }
  const std::vector<Integer>& defining_polynomial() const { return g_; }
  const std::vector<Integer>& residue_factor() const { return g_mod_p_; }

  std::vector<Integer> reduce(std::vector<Integer> poly) const;
  std::vector<Integer> multiply(const std::vector<Integer>& a, const std::vector<Integer>& b) const;

  UnramifiedRing(Integer p, long m, long precision);

 private:
  Integer p_;
  long m_;
  long precision_;
  Integer modulus_;
  std::vector<Integer> g_;
  std::vector<Integer> g_mod_p_;
};

using RingHandle = std::shared_ptr<const UnramifiedRing>;

class PAdicElement {
 public:
  PAdicElement(RingHandle ring, std::vector<Integer> coeffs);
  static PAdicElement constant(RingHandle ring, const Integer& a);
  static PAdicElement from_rational(RingHandle ring, const Rational& a);

  const RingHandle& ring() const { return ring_; }
  const std::vector<Integer>& coefficients() const { return c_; }
  bool is_zero() const;
  // Minimum p-adic valuation of the coefficients; precision() when zero.
  long valuation() const;
  bool is_unit() const { return valuation() == 0; }
  PAdicElement pow(unsigned long k) const;

  friend PAdicElement operator+(const PAdicElement& a, const PAdicElement& b);
  friend PAdicElement operator-(const PAdicElement& a, const PAdicElement& b);
  friend PAdicElement operator*(const PAdicElement& a, const PAdicElement& b);
  friend bool operator==(const PAdicElement& a, const PAdicElement& b);

 private:
  RingHandle ring_;
  std::vector<Integer> c_;
};

// Factorisation of Phi_m over F_p (p not dividing m), monic factors sorted
// lexicographically by coefficient vector (constant term first).
std::vector<std::vector<Integer>> factor_cyclotomic_mod_p(long m, const Integer& p);

// The embedding Q(zeta_m) ∩ Z_(p) -> O. For p | m only the prime-to-p part is
// unramified; x must lie in that subfield (p = 2 also allows zeta_2 = -1).
PAdicElement embed_padic(const CyclotomicRational& x, const Integer& p, long precision = kDefaultPrecision);
PAdicElement embed_padic(const CyclotomicInteger& x, const Integer& p, long precision = kDefaultPrecision);

// Exponents a in (Z/m)^* with sigma_a in the decomposition group at p of Q(zeta_m)/Q.
std::vector<long> decomposition_exponents(long m, const Integer& p);

}  // namespace brumer
