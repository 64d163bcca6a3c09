#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "brumer/errors.hpp"
#include "brumer/numbers.hpp"

namespace brumer {

// Coefficients of the m-th cyclotomic polynomial, constant term first.
const std::vector<Integer>& cyclotomic_polynomial(long m);
long euler_phi(long m);

// Element of Q(zeta_m) or Z[zeta_m] in the power basis 1, zeta, ..., zeta^{phi(m)-1}.
template <class Coeff>
class CyclotomicElement {
 public:
  CyclotomicElement() : CyclotomicElement(1) {}
  explicit CyclotomicElement(long m) : m_(m), c_(static_cast<std::size_t>(euler_phi(m))) {}

  static CyclotomicElement constant(long m, const Coeff& a) {
    CyclotomicElement x(m);
    x.c_[0] = a;
    return x;
  }
  static CyclotomicElement root_of_unity(long m, long k) {
    std::vector<Coeff> sums(static_cast<std::size_t>(m));
    sums[static_cast<std::size_t>(((k % m) + m) % m)] = 1;
    return from_power_sums(m, std::move(sums));
  }
  // sum_k sums[k] * zeta^k, exponents taken mod m.
  static CyclotomicElement from_power_sums(long m, std::vector<Coeff> sums) {
    CyclotomicElement x(m);
    x.c_ = reduce(m, std::move(sums));
    return x;
  }

  long conductor() const { return m_; }
  const std::vector<Coeff>& coefficients() const { return c_; }

  bool is_zero() const {
    for (const auto& a : c_)
      if (a != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  const Coeff& rational_value() const {
    if (!is_rational()) fail(ErrorCode::kInvalidArgument, "cyclotomic value is not rational");
    return c_[0];
  }

  CyclotomicElement lift_to(long big_m) const {
    if (big_m % m_ != 0) fail(ErrorCode::kInvalidArgument, "lift_to: conductor does not divide target");
    if (big_m == m_) return *this;
    const long step = big_m / m_;
    std::vector<Coeff> sums(static_cast<std::size_t>(big_m));
    for (std::size_t k = 0; k < c_.size(); ++k) sums[static_cast<std::size_t>(static_cast<long>(k) * step % big_m)] += c_[k];
    return from_power_sums(big_m, std::move(sums));
  }

  // sigma_a : zeta -> zeta^a, gcd(a, m) = 1.
  CyclotomicElement galois(long a) const {
    std::vector<Coeff> sums(static_cast<std::size_t>(m_));
    const long am = ((a % m_) + m_) % m_;
    for (std::size_t k = 0; k < c_.size(); ++k) sums[static_cast<std::size_t>(static_cast<long>(k) * am % m_)] += c_[k];
    return from_power_sums(m_, std::move(sums));
  }
  CyclotomicElement conj() const { return galois(-1); }

  CyclotomicElement& operator+=(const CyclotomicElement& o) {
    align(o, [this](const CyclotomicElement& b) {
      for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
    });
    return *this;
  }
  CyclotomicElement& operator-=(const CyclotomicElement& o) {
    align(o, [this](const CyclotomicElement& b) {
      for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
    });
    return *this;
  }
  CyclotomicElement& operator*=(const Coeff& k) {
    for (auto& a : c_) a *= k;
    return *this;
  }
  friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) { return a += b; }
  friend CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b) { return a -= b; }
  friend CyclotomicElement operator-(CyclotomicElement a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend CyclotomicElement operator*(CyclotomicElement a, const Coeff& k) { return a *= k; }
  friend CyclotomicElement operator*(const Coeff& k, CyclotomicElement a) { return a *= k; }
  friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
    if (a.m_ != b.m_) {
      const long big = std::lcm(a.m_, b.m_);
      return a.lift_to(big) * b.lift_to(big);
    }
    std::vector<Coeff> sums(static_cast<std::size_t>(a.m_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j] == 0) continue;
        sums[(i + j) % static_cast<std::size_t>(a.m_)] += a.c_[i] * b.c_[j];
      }
    }
    return from_power_sums(a.m_, std::move(sums));
  }
  friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
    if (a.m_ == b.m_) return a.c_ == b.c_;
    const long big = std::lcm(a.m_, b.m_);
    return a.lift_to(big).c_ == b.lift_to(big).c_;
  }

  // Field norm to Q; only meaningful for Coeff = Rational or Integer.
  Coeff norm() const {
    CyclotomicElement acc = constant(m_, Coeff(1));
    for (long a = 1; a <= m_; ++a)
      if (std::gcd(a, m_) == 1) acc = acc * galois(a);
    return acc.rational_value();
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      if (!s.empty()) s += " + ";
      s += c_[k].get_str();
      if (k > 0) s += "*z" + std::to_string(m_) + (k > 1 ? "^" + std::to_string(k) : "");
    }
    return s.empty() ? "0" : s;
  }

 private:
  long m_;
  std::vector<Coeff> c_;

  template <class F>
  void align(const CyclotomicElement& o, F&& f) {
    if (o.m_ == m_) {
      f(o);
      return;
    }
    const long big = std::lcm(m_, o.m_);
    *this = lift_to(big);
    f(o.lift_to(big));
  }

  static std::vector<Coeff> reduce(long m, std::vector<Coeff> sums) {
    // Fold exponents mod m, then divide by the monic Phi_m.
    std::vector<Coeff> folded(static_cast<std::size_t>(m));
    for (std::size_t k = 0; k < sums.size(); ++k) folded[k % static_cast<std::size_t>(m)] += sums[k];
    const auto& phi = cyclotomic_polynomial(m);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t top = folded.size(); top-- > deg;) {
      if (folded[top] == 0) continue;
      Coeff lead = folded[top];
      for (std::size_t j = 0; j <= deg; ++j) folded[top - deg + j] -= lead * Coeff(phi[j]);
    }
    folded.resize(deg);
    return folded;
  }
};

using CyclotomicInteger = CyclotomicElement<Integer>;
using CyclotomicRational = CyclotomicElement<Rational>;

CyclotomicRational to_rational(const CyclotomicInteger& x);

}  // namespace brumer
