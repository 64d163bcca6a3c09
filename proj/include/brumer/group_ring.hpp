#pragma once

#include <string>
#include <vector>

#include "brumer/cyclotomic.hpp"
#include "brumer/group.hpp"
#include "brumer/numbers.hpp"
#include "brumer/padic.hpp"

namespace brumer {

enum class BaseKind { kIntegers, kRationals, kPAdic };

struct BaseRing {
  BaseKind kind = BaseKind::kIntegers;
  Integer prime = 0;
  long precision = 0;

  static BaseRing integers() { return {}; }
  static BaseRing rationals() { return {BaseKind::kRationals, 0, 0}; }
  static BaseRing padic(const Integer& p, long precision = kDefaultPrecision) {
    return {BaseKind::kPAdic, p, precision};
  }
  Integer modulus() const { return ipow(prime, static_cast<unsigned long>(precision)); }
  // Canonical representative of a coefficient; throws NotIntegral.
  Rational normalize(const Rational& a) const;
  std::string describe() const;
  bool operator==(const BaseRing& o) const {
    return kind == o.kind && prime == o.prime && precision == o.precision;
  }
};

class GroupRingElement {
 public:
  GroupRingElement(GroupPtr group, BaseRing ring, std::vector<Rational> coeffs);

  static GroupRingElement zero(GroupPtr group, BaseRing ring = BaseRing::integers());
  static GroupRingElement scalar(GroupPtr group, const Rational& a, BaseRing ring = BaseRing::integers());
  static GroupRingElement basis(GroupPtr group, long element, BaseRing ring = BaseRing::integers());
  // Sum of all elements of a subgroup.
  static GroupRingElement norm(GroupPtr group, const Subgroup& h, BaseRing ring = BaseRing::integers());

  const GroupPtr& group() const { return group_; }
  const BaseRing& ring() const { return ring_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& coefficient(long g) const { return coeffs_[static_cast<std::size_t>(g)]; }
  bool is_zero() const;

  GroupRingElement sharp() const;
  GroupRingElement with_ring(const BaseRing& ring) const;
  GroupRingElement push_forward(const QuotientMap& q) const;
  // Augmentation: sum of coefficients.
  Rational augmentation() const;

  // Ring-element interface shared with MinusElement.
  GroupRingElement zero_like() const { return zero(group_, ring_); }
  GroupRingElement one_like() const { return scalar(group_, 1, ring_); }
  std::vector<GroupRingElement> basis_elements() const;
  const std::vector<Rational>& coordinates() const { return coeffs_; }
  GroupRingElement from_coordinates(std::vector<Rational> coords) const {
    return GroupRingElement(group_, ring_, std::move(coords));
  }

  std::string to_string() const;

  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator-(const GroupRingElement& a);
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator*(const Rational& k, const GroupRingElement& a);
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b);

 private:
  GroupPtr group_;
  BaseRing ring_;
  std::vector<Rational> coeffs_;
};

GroupRingElement multiply(const GroupRingElement& a, const GroupRingElement& b);

// Orbit representatives of G/<c>: for each orbit {g, gc} the element whose
// exponent vector is lexicographically smaller; sorted lexicographically.
struct MinusBasis {
  std::vector<long> reps;
  std::vector<long> orbit_of;  // ambient element -> basis position
  std::vector<int> sign_of;    // +1 if the element is a representative, -1 otherwise
};
const MinusBasis& minus_basis(const FiniteAbelianGroup& g);

// Element of Z[G]/(1+c) (or its base-changed versions) in the representative basis.
class MinusElement {
 public:
  MinusElement(GroupPtr group, BaseRing ring, std::vector<Rational> coeffs);

  static MinusElement project(const GroupRingElement& a);
  static MinusElement zero(GroupPtr group, BaseRing ring = BaseRing::integers());
  static MinusElement scalar(GroupPtr group, const Rational& a, BaseRing ring = BaseRing::integers());

  const GroupPtr& group() const { return group_; }
  const BaseRing& ring() const { return ring_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const;
  GroupRingElement lift() const;
  MinusElement sharp() const { return project(lift().sharp()); }
  MinusElement with_ring(const BaseRing& ring) const;

  MinusElement zero_like() const { return zero(group_, ring_); }
  MinusElement one_like() const { return scalar(group_, 1, ring_); }
  std::vector<MinusElement> basis_elements() const;
  const std::vector<Rational>& coordinates() const { return coeffs_; }
  MinusElement from_coordinates(std::vector<Rational> coords) const {
    return MinusElement(group_, ring_, std::move(coords));
  }

  std::string to_string() const;

  friend MinusElement operator+(const MinusElement& a, const MinusElement& b);
  friend MinusElement operator-(const MinusElement& a, const MinusElement& b);
  friend MinusElement operator-(const MinusElement& a);
  friend MinusElement operator*(const MinusElement& a, const MinusElement& b);
  friend MinusElement operator*(const Rational& k, const MinusElement& a);
  friend bool operator==(const MinusElement& a, const MinusElement& b);

 private:
  GroupPtr group_;
  BaseRing ring_;
  std::vector<Rational> coeffs_;
};

// Throws TrivialConjugation when c is the identity.
MinusElement minus_project(const GroupRingElement& a);

// The unique x with 2^t x = minus_project(a). Integer base: exact division in
// Z; p-adic base at p = 2: precision drops by t; otherwise 2 is a unit.
MinusElement divide_by_2t(const GroupRingElement& a, long t);

// chi(a) exactly, as an element of Q(zeta_m), m = exponent(G).
CyclotomicRational evaluate(const Character& chi, const GroupRingElement& a);
CyclotomicRational evaluate(const Character& chi, const MinusElement& a);

// Orbits of Gal(Qbar_p/Q_p) acting on characters by chi -> chi^a.
std::vector<std::vector<Character>> padic_galois_orbits(const std::vector<Character>& psi, const Integer& p);
bool is_padic_galois_stable(const std::vector<Character>& psi, const Integer& p);

// Image of Z_p[G] in the product of O over a Galois-stable character set.
class CharTuple {
 public:
  const std::vector<Character>& characters() const { return psi_; }
  const std::vector<PAdicElement>& values() const { return values_; }
  bool nonzerodivisor() const { return nonzerodivisor_; }
  // Sub-tuple on a Galois-stable subset (an orbit block).
  CharTuple restrict_to(const std::vector<Character>& block) const;

  friend CharTuple char_image(const GroupRingElement& a, const std::vector<Character>& psi, const Integer& p,
                              long precision);
  friend CharTuple operator+(const CharTuple& a, const CharTuple& b);
  friend CharTuple operator-(const CharTuple& a, const CharTuple& b);
  friend CharTuple operator*(const CharTuple& a, const CharTuple& b);
  friend bool operator==(const CharTuple& a, const CharTuple& b);

 private:
  CharTuple(std::vector<Character> psi, std::vector<PAdicElement> values);
  std::vector<Character> psi_;
  std::vector<PAdicElement> values_;
  bool nonzerodivisor_ = false;
};

CharTuple char_image(const GroupRingElement& a, const std::vector<Character>& psi, const Integer& p,
                     long precision = kDefaultPrecision);

}  // namespace brumer
