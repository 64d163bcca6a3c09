#include "brumer/padic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

#include "brumer/errors.hpp"

namespace brumer {

namespace {

using Poly = std::vector<Integer>;  // constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long deg(const Poly& a) { return static_cast<long>(a.size()) - 1; }

Poly mod_coeffs(Poly a, const Integer& m) {
  for (auto& x : a) x = mod_floor(x, m);
  trim(a);
  return a;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    fail(ErrorCode::kInvalidArgument, "no inverse mod " + m.get_str());
  return inv;
}

Poly sub_p(const Poly& a, const Poly& b, const Integer& p) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return mod_coeffs(r, p);
}

Poly mul_p(const Poly& a, const Poly& b, const Integer& p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return mod_coeffs(r, p);
}

// Division with remainder over Z/p for a field modulus p, or over Z/p^N when
// the divisor is monic.
std::pair<Poly, Poly> divmod_p(Poly a, const Poly& b, const Integer& p) {
  a = mod_coeffs(a, p);
  if (b.empty()) fail(ErrorCode::kInvalidArgument, "polynomial division by zero");
  Integer lead_inv = inverse_mod(b.back(), p);
  if (deg(a) < deg(b)) return {{}, a};
  Poly q(a.size() - b.size() + 1);
  for (long top = deg(a); top >= deg(b); --top) {
    Integer c = mod_floor(a[static_cast<std::size_t>(top)] * lead_inv, p);
    if (c == 0) continue;
    q[static_cast<std::size_t>(top - deg(b))] = c;
    for (std::size_t j = 0; j < b.size(); ++j) {
      auto& t = a[static_cast<std::size_t>(top - deg(b)) + j];
      t = mod_floor(t - c * b[j], p);
    }
  }
  trim(q);
  trim(a);
  return {q, a};
}

Poly monic_p(Poly a, const Integer& p) {
  if (a.empty()) return a;
  Integer inv = inverse_mod(a.back(), p);
  for (auto& x : a) x = mod_floor(x * inv, p);
  return a;
}

Poly gcd_p(Poly a, Poly b, const Integer& p) {
  a = mod_coeffs(a, p);
  b = mod_coeffs(b, p);
  while (!b.empty()) {
    Poly r = divmod_p(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic_p(a, p);
}

// s*a + t*b = 1 mod p for coprime a, b.
std::pair<Poly, Poly> ext_gcd_p(const Poly& a, const Poly& b, const Integer& p) {
  Poly r0 = mod_coeffs(a, p), r1 = mod_coeffs(b, p);
  Poly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod_p(r0, r1, p);
    Poly s2 = sub_p(s0, mul_p(q, s1, p), p);
    Poly t2 = sub_p(t0, mul_p(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (deg(r0) != 0) fail(ErrorCode::kInvalidArgument, "ext_gcd: polynomials are not coprime");
  Integer inv = inverse_mod(r0[0], p);
  for (auto& x : s0) x = mod_floor(x * inv, p);
  for (auto& x : t0) x = mod_floor(x * inv, p);
  return {s0, t0};
}

Poly powmod_p(Poly base, Integer e, const Poly& f, const Integer& p) {
  Poly result{1};
  base = divmod_p(base, f, p).second;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = divmod_p(mul_p(result, base, p), f, p).second;
    base = divmod_p(mul_p(base, base, p), f, p).second;
    e >>= 1;
  }
  return result;
}

// Null space of the n x n matrix (rows) acting on row vectors: v * M = 0.
std::vector<Poly> left_null_space_p(const std::vector<Poly>& rows, std::size_t n, const Integer& p) {
  // Solve M^T v^T = 0.
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[j][i] = j < rows[i].size() ? rows[i][j] : Integer(0);
  std::vector<long> pivot_col_of_row;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = r; i < n; ++i)
      if (mod_floor(a[i][c], p) != 0) {
        piv = i;
        break;
      }
    if (piv == n) continue;
    std::swap(a[r], a[piv]);
    Integer inv = inverse_mod(a[r][c], p);
    for (auto& x : a[r]) x = mod_floor(x * inv, p);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r) continue;
      Integer f = mod_floor(a[i][c], p);
      if (f == 0) continue;
      for (std::size_t j = 0; j < n; ++j) a[i][j] = mod_floor(a[i][j] - f * a[r][j], p);
    }
    pivot_col_of_row.push_back(static_cast<long>(c));
    ++r;
  }
  std::vector<bool> is_pivot(n, false);
  for (long c : pivot_col_of_row) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Poly> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Poly v(n);
    v[free] = 1;
    for (std::size_t row = 0; row < pivot_col_of_row.size(); ++row)
      v[static_cast<std::size_t>(pivot_col_of_row[row])] = mod_floor(-a[row][free], p);
    trim(v);
    basis.push_back(v);
  }
  return basis;
}

std::vector<Poly> berlekamp(const Poly& f, const Integer& p) {
  const std::size_t n = static_cast<std::size_t>(deg(f));
  if (n <= 1) return {f};
  Poly xp = powmod_p(Poly{0, 1}, p, f, p);
  std::vector<Poly> q_minus_i;
  Poly row{1};
  for (std::size_t i = 0; i < n; ++i) {
    Poly r = row;
    r.resize(n);
    r[i] -= 1;
    q_minus_i.push_back(mod_coeffs(r, p));
    row = divmod_p(mul_p(row, xp, p), f, p).second;
  }
  std::vector<Poly> kernel = left_null_space_p(q_minus_i, n, p);
  const std::size_t k = kernel.size();
  std::vector<Poly> factors{f};
  for (const Poly& v : kernel) {
    if (factors.size() == k) break;
    if (deg(v) < 1) continue;
    std::vector<Poly> next;
    for (const Poly& u : factors) {
      if (deg(u) == 1) {
        next.push_back(u);
        continue;
      }
      Poly rest = u;
      for (Integer s = 0; s < p && deg(rest) > 0; ++s) {
        Poly shifted = v;
        shifted[0] -= s;
        Poly g = gcd_p(rest, shifted, p);
        if (deg(g) >= 1) {
          next.push_back(g);
          rest = divmod_p(rest, g, p).first;
        }
      }
      if (deg(rest) > 0) next.push_back(monic_p(rest, p));
    }
    factors = std::move(next);
  }
  return factors;
}

}  // namespace

std::vector<std::vector<Integer>> factor_cyclotomic_mod_p(long m, const Integer& p) {
  if (m > 1 && Integer(Integer(m) % p) == 0)
    fail(ErrorCode::kInvalidArgument, "p divides the cyclotomic conductor");
  Poly f = mod_coeffs(cyclotomic_polynomial(m), p);
  auto factors = berlekamp(f, p);
  for (auto& g : factors) g = monic_p(g, p);
  std::sort(factors.begin(), factors.end(), [](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return factors;
}

UnramifiedRing::UnramifiedRing(Integer p, long m, long precision)
    : p_(std::move(p)), m_(m), precision_(precision) {
  if (precision < 1) fail(ErrorCode::kInvalidArgument, "precision must be positive");
  if (!is_prime(p_)) fail(ErrorCode::kInvalidArgument, "p must be prime");
  modulus_ = ipow(p_, static_cast<unsigned long>(precision));
  auto factors = factor_cyclotomic_mod_p(m, p_);
  g_mod_p_ = factors.front();
  const Poly& phi = cyclotomic_polynomial(m);
  Poly g = g_mod_p_;
  Poly h = divmod_p(phi, g, p_).first;
  auto [s, t] = ext_gcd_p(g, h, p_);
  Integer pk = p_;
  for (long k = 1; k < precision; ++k) {
    // e = (phi - g h) / p^k mod p
    Poly gh(g.size() + h.size() - 1);
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < h.size(); ++j) gh[i + j] += g[i] * h[j];
    Poly e(std::max(phi.size(), gh.size()));
    for (std::size_t i = 0; i < phi.size(); ++i) e[i] += phi[i];
    for (std::size_t i = 0; i < gh.size(); ++i) e[i] -= gh[i];
    for (auto& x : e) {
      if (mpz_divisible_p(x.get_mpz_t(), pk.get_mpz_t()) == 0)
        fail(ErrorCode::kPrecisionExhausted, "Hensel step lost divisibility");
      x = mod_floor(x / pk, p_);
    }
    trim(e);
    if (e.empty()) {
      pk *= p_;
      continue;
    }
    auto [quot, dg] = divmod_p(mul_p(t, e, p_), g, p_);
    Poly dh = mod_coeffs(mul_p(e, s, p_), p_);
    Poly qh = mul_p(quot, h, p_);
    dh.resize(std::max(dh.size(), qh.size()));
    for (std::size_t i = 0; i < qh.size(); ++i) dh[i] += qh[i];
    dh = mod_coeffs(dh, p_);
    for (std::size_t i = 0; i < dg.size(); ++i) g[i] += pk * dg[i];
    if (h.size() < dh.size()) h.resize(dh.size());
    for (std::size_t i = 0; i < dh.size(); ++i) h[i] += pk * dh[i];
    pk *= p_;
  }
  g_ = g;
  for (auto& x : g_) x = mod_floor(x, modulus_);
  g_.back() = 1;
}

std::shared_ptr<const UnramifiedRing> UnramifiedRing::get(const Integer& p, long prime_to_p_order, long precision) {
  static std::mutex mu;
  static std::map<std::tuple<std::string, long, long>, std::shared_ptr<const UnramifiedRing>> cache;
  auto key = std::make_tuple(p.get_str(), prime_to_p_order, precision);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto ring = std::make_shared<const UnramifiedRing>(p, prime_to_p_order, precision);
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, ring);
  return it->second;
}

std::vector<Integer> UnramifiedRing::reduce(std::vector<Integer> poly) const {
  for (auto& x : poly) x = mod_floor(x, modulus_);
  const std::size_t d = degree();
  for (std::size_t top = poly.size(); top-- > d;) {
    if (poly[top] == 0) continue;
    Integer lead = poly[top];
    for (std::size_t j = 0; j <= d; ++j) poly[top - d + j] = mod_floor(poly[top - d + j] - lead * g_[j], modulus_);
  }
  poly.resize(d);
  return poly;
}

std::vector<Integer> UnramifiedRing::multiply(const std::vector<Integer>& a, const std::vector<Integer>& b) const {
  std::vector<Integer> r(a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return reduce(std::move(r));
}

PAdicElement::PAdicElement(RingHandle ring, std::vector<Integer> coeffs) : ring_(std::move(ring)) {
  c_ = ring_->reduce(std::move(coeffs));
}

PAdicElement PAdicElement::constant(RingHandle ring, const Integer& a) { return PAdicElement(std::move(ring), {a}); }

PAdicElement PAdicElement::from_rational(RingHandle ring, const Rational& a) {
  Integer r = reduce_rational(a, ring->modulus());
  return PAdicElement(std::move(ring), {r});
}

bool PAdicElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Integer& x) { return x == 0; });
}

long PAdicElement::valuation() const {
  long v = ring_->precision();
  for (const auto& x : c_) v = std::min(v, brumer::valuation(x, ring_->prime(), ring_->precision()));
  return v;
}

PAdicElement PAdicElement::pow(unsigned long k) const {
  PAdicElement result = constant(ring_, 1);
  PAdicElement base = *this;
  while (k > 0) {
    if (k & 1UL) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

namespace {

void check_same_ring(const PAdicElement& a, const PAdicElement& b) {
  if (a.ring() != b.ring()) fail(ErrorCode::kRingMismatch, "p-adic elements live in different rings");
}

}  // namespace

PAdicElement operator+(const PAdicElement& a, const PAdicElement& b) {
  check_same_ring(a, b);
  std::vector<Integer> c = a.c_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
  return PAdicElement(a.ring_, std::move(c));
}

PAdicElement operator-(const PAdicElement& a, const PAdicElement& b) {
  check_same_ring(a, b);
  std::vector<Integer> c = a.c_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.c_[i];
  return PAdicElement(a.ring_, std::move(c));
}

PAdicElement operator*(const PAdicElement& a, const PAdicElement& b) {
  check_same_ring(a, b);
  return PAdicElement(a.ring_, a.ring_->multiply(a.c_, b.c_));
}

bool operator==(const PAdicElement& a, const PAdicElement& b) { return a.ring_ == b.ring_ && a.c_ == b.c_; }

std::vector<long> decomposition_exponents(long m, const Integer& p) {
  long prime_part = 1;
  long rest = m;
  const long pl = to_long(p);
  while (rest % pl == 0) {
    rest /= pl;
    prime_part *= pl;
  }
  std::vector<bool> frob_power(static_cast<std::size_t>(rest), false);
  long x = 1 % rest;
  const long pr = to_long(mod_floor(p, Integer(rest)));
  do {
    frob_power[static_cast<std::size_t>(x)] = true;
    x = x * pr % rest;
  } while (x != 1 % rest);
  std::vector<long> out;
  for (long a = 1; a <= m; ++a) {
    if (std::gcd(a, m) != 1) continue;
    if (frob_power[static_cast<std::size_t>(a % rest)]) out.push_back(a % m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PAdicElement embed_padic(const CyclotomicRational& x, const Integer& p, long precision) {
  const long m = x.conductor();
  const long pl = to_long(p);
  long big_p = 1;
  long q = m;
  while (q % pl == 0) {
    q /= pl;
    big_p *= pl;
  }
  RingHandle ring = UnramifiedRing::get(p, q, precision);
  const auto& coeffs = x.coefficients();

  // Split zeta_m = zeta_P^a zeta_Q^b with a*Q + b*P = 1.
  std::vector<std::vector<Rational>> table(static_cast<std::size_t>(big_p), std::vector<Rational>(static_cast<std::size_t>(q)));
  Integer ga, gb, gg;
  mpz_gcdext(gg.get_mpz_t(), ga.get_mpz_t(), gb.get_mpz_t(), Integer(q).get_mpz_t(), Integer(big_p).get_mpz_t());
  const long a = to_long(mod_floor(ga, Integer(big_p)));
  const long b = to_long(mod_floor(gb, Integer(q)));
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    const long jl = static_cast<long>(j);
    table[static_cast<std::size_t>(jl * a % big_p)][static_cast<std::size_t>(jl * b % q)] += coeffs[j];
  }
  // Reduce the P-axis modulo Phi_P, column by column.
  const auto& phi_p = cyclotomic_polynomial(big_p);
  const std::size_t dp = phi_p.size() - 1;
  for (std::size_t top = table.size(); top-- > dp;) {
    for (std::size_t v = 0; v < static_cast<std::size_t>(q); ++v) {
      Rational lead = table[top][v];
      if (lead == 0) continue;
      for (std::size_t k = 0; k <= dp; ++k) table[top - dp + k][v] -= lead * Rational(phi_p[k]);
    }
  }
  for (std::size_t u = 1; u < dp; ++u)
    for (const auto& r : table[u])
      if (r != 0) fail(ErrorCode::kRamifiedEmbedding, "value generates a ramified extension of Q_" + p.get_str());

  std::vector<Integer> poly(static_cast<std::size_t>(q));
  for (std::size_t v = 0; v < static_cast<std::size_t>(q); ++v) {
    if (table[0][v] != 0) poly[v] = reduce_rational(table[0][v], ring->modulus());
  }
  return PAdicElement(ring, std::move(poly));
}

PAdicElement embed_padic(const CyclotomicInteger& x, const Integer& p, long precision) {
  return embed_padic(to_rational(x), p, precision);
}

}  // namespace brumer
