#include "brumer/stickelberger.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "brumer/errors.hpp"

namespace brumer {

void check_disjoint(const std::vector<PlaceSpec>& places) {
  for (const auto& v : places)
    if (v.in_s && v.in_t) fail(ErrorCode::kSetsOverlap, "place " + v.label + " is in both S and T");
}

bool deligne_ribet_condition(const std::vector<PlaceSpec>& places, long degree_n) {
  std::set<long> chars;
  for (const auto& v : places) {
    if (!v.in_t || v.archimedean) continue;
    if (v.residue_characteristic > degree_n + 1) return true;
    chars.insert(v.residue_characteristic);
  }
  return chars.size() >= 2;
}

long archimedean_in_t(const std::vector<PlaceSpec>& places) {
  return static_cast<long>(std::count_if(places.begin(), places.end(),
                                         [](const PlaceSpec& v) { return v.archimedean && v.in_t; }));
}

namespace {

long power_mod(long b, long e, long m) {
  long r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

long primitive_root(long p, long q) {
  // Generator of (Z/q)^* for q = p^e, p odd.
  const long phi = q / p * (p - 1);
  const auto factors = prime_factors(phi);
  for (long g = 2; g < q; ++g) {
    if (g % p == 0) continue;
    bool ok = true;
    for (long r : factors)
      if (power_mod(g, phi / r, q) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  return 1;
}

struct CyclicPiece {
  long modulus;                   // prime power q
  long order;                     // cyclic order
  std::vector<long> log;          // log[a mod q], -1 for non-units
};

std::vector<CyclicPiece> unit_group_pieces(long f) {
  std::vector<CyclicPiece> pieces;
  long rest = f;
  for (long p : prime_factors(f)) {
    long q = 1;
    while (rest % p == 0) {
      rest /= p;
      q *= p;
    }
    if (p != 2) {
      long g = primitive_root(p, q);
      CyclicPiece c{q, q / p * (p - 1), std::vector<long>(static_cast<std::size_t>(q), -1)};
      long x = 1;
      for (long k = 0; k < c.order; ++k) {
        c.log[static_cast<std::size_t>(x)] = k;
        x = x * g % q;
      }
      pieces.push_back(std::move(c));
    } else if (q >= 4) {
      CyclicPiece sign{q, 2, std::vector<long>(static_cast<std::size_t>(q), -1)};
      for (long a = 1; a < q; a += 2) sign.log[static_cast<std::size_t>(a)] = (a % 4 == 1) ? 0 : 1;
      pieces.push_back(sign);
      if (q >= 8) {
        CyclicPiece five{q, q / 4, std::vector<long>(static_cast<std::size_t>(q), -1)};
        long x = 1;
        for (long k = 0; k < q / 4; ++k) {
          five.log[static_cast<std::size_t>(x)] = k;
          five.log[static_cast<std::size_t>((q - x) % q)] = k;
          x = x * 5 % q;
        }
        pieces.push_back(std::move(five));
      }
    }
  }
  return pieces;
}

}  // namespace

DirichletGroup DirichletGroup::full(long f) {
  if (f < 1) fail(ErrorCode::kBadConductor, "conductor must be a positive integer");
  DirichletGroup d;
  d.f_ = f;
  auto pieces = unit_group_pieces(f);
  std::vector<long> inv;
  for (const auto& c : pieces) inv.push_back(c.order);
  if (inv.empty()) inv.push_back(1);
  auto exps_of = [&](long a) {
    Exponents e;
    for (const auto& c : pieces) e.push_back(c.log[static_cast<std::size_t>(a % c.modulus)]);
    if (e.empty()) e.push_back(0);
    return e;
  };
  d.group_ = build_group(inv, exps_of(f == 1 ? 0 : f - 1));
  d.residue_to_element_.assign(static_cast<std::size_t>(f), -1);
  for (long a = 0; a < f; ++a) {
    if (std::gcd(a, f) != 1) continue;
    d.residue_to_element_[static_cast<std::size_t>(a)] = d.group_->index(exps_of(a));
  }
  return d;
}

DirichletGroup DirichletGroup::quotient(const Subgroup& kernel) const {
  QuotientMap q = quotient_group(group_, kernel);
  DirichletGroup d;
  d.f_ = f_;
  d.group_ = q.target;
  d.residue_to_element_ = residue_to_element_;
  for (auto& x : d.residue_to_element_)
    if (x >= 0) x = q.image[static_cast<std::size_t>(x)];
  return d;
}

long DirichletGroup::element_of(long a) const {
  long r = ((a % f_) + f_) % f_;
  return residue_to_element_[static_cast<std::size_t>(r)];
}

long DirichletGroup::character_conductor(const Character& chi) const {
  for (long d = 1; d <= f_; ++d) {
    if (f_ % d != 0) continue;
    bool trivial = true;
    for (long a = 1; a <= f_ && trivial; a += d) {
      long g = element_of(a);
      if (g >= 0 && chi.value_exponent(g) != 0) trivial = false;
    }
    if (trivial) return d;
  }
  return f_;
}

namespace {

// Exponent k with chi_prim(a) = zeta_m^k, or -1 when gcd(a, fc) > 1; fc is the conductor of chi.
long primitive_exponent(const DirichletGroup& d, const Character& chi, long a, long fc) {
  long r = ((a % fc) + fc) % fc;
  if (std::gcd(r, fc) != 1) return -1;
  for (long lift = r;; lift += fc)
    if (std::gcd(lift, d.modulus()) == 1) return chi.value_exponent(d.element_of(lift));
}

}  // namespace

CyclotomicRational DirichletGroup::primitive_value(const Character& chi, long a) const {
  const long k = primitive_exponent(*this, chi, a, character_conductor(chi));
  if (k < 0) return CyclotomicRational(chi.modulus());
  return CyclotomicRational::root_of_unity(chi.modulus(), k);
}

PlaceSpec DirichletGroup::prime_place(long q, bool in_s, bool in_t) const {
  PlaceSpec v;
  v.label = std::to_string(q);
  v.norm = q;
  v.residue_characteristic = q;
  v.ramified = f_ % q == 0;
  v.frobenius = std::gcd(q, f_) == 1 ? element_of(q) : -1;
  v.in_s = in_s;
  v.in_t = in_t;
  return v;
}

PlaceSpec DirichletGroup::infinite_place(bool in_s, bool in_t) {
  PlaceSpec v;
  v.label = "inf";
  v.archimedean = true;
  v.in_s = in_s;
  v.in_t = in_t;
  return v;
}

CyclotomicRational l_value_bernoulli(const DirichletGroup& d, const Character& chi) {
  if (!chi.is_odd()) fail(ErrorCode::kEvenCharacter, "L(chi, 0) vanishes identically for even chi");
  const long fc = d.character_conductor(chi);
  const long m = chi.modulus();
  std::vector<Rational> sums(static_cast<std::size_t>(m));
  for (long a = 1; a <= fc; ++a) {
    const long k = primitive_exponent(d, chi, a, fc);
    if (k >= 0) sums[static_cast<std::size_t>(k)] += a;
  }
  return CyclotomicRational::from_power_sums(m, std::move(sums)) * Rational(-1, fc);
}

CyclotomicRational smooth_l_value(const DirichletGroup& d, const CyclotomicRational& l_value, const Character& chi,
                                  const std::vector<PlaceSpec>& places) {
  check_disjoint(places);
  const long fc = d.character_conductor(chi);
  for (long ell : prime_factors(fc)) {
    bool present = std::any_of(places.begin(), places.end(), [&](const PlaceSpec& v) {
      return !v.archimedean && v.in_s && v.residue_characteristic == ell;
    });
    if (!present) fail(ErrorCode::kMissingRamified, "S omits the ramified prime " + std::to_string(ell));
  }
  const long m = chi.modulus();
  CyclotomicRational one = CyclotomicRational::constant(m, 1);
  CyclotomicRational value = l_value;
  for (const auto& v : places) {
    if (v.archimedean) continue;
    const long ell = v.residue_characteristic;
    if (v.in_s && fc % ell != 0) value = value * (one - d.primitive_value(chi, ell));
    if (v.in_t) value = value * (one - d.primitive_value(chi, ell) * Rational(v.norm));
  }
  return value;
}

LValueTable compute_l_value_table(const DirichletGroup& d, const std::vector<PlaceSpec>& places) {
  LValueTable table;
  for (const auto& chi : list_characters(d.group())) {
    if (!chi.is_odd()) continue;
    Character inv = chi.inverse();
    table.values.emplace(chi.index(), smooth_l_value(d, l_value_bernoulli(d, inv), inv, places));
  }
  return table;
}

namespace {

void finalize_flags(ThetaElement& t) {
  t.t = archimedean_in_t(t.places);
  t.deligne_ribet = deligne_ribet_condition(t.places, t.degree_n);
  t.integral = std::all_of(t.theta.coefficients().begin(), t.theta.coefficients().end(),
                           [](const Rational& a) { return a.get_den() == 1; });
}

}  // namespace

ThetaElement assemble_theta(const GroupPtr& g, const std::vector<PlaceSpec>& places, const LValueTable& table,
                            long degree_n) {
  check_disjoint(places);
  const long m = g->exponent();
  std::vector<Character> odd;
  for (const auto& chi : list_characters(g))
    if (chi.is_odd()) odd.push_back(chi);

  std::map<long, CyclotomicRational> values;
  for (const auto& chi : odd) {
    auto it = table.values.find(chi.index());
    if (it == table.values.end())
      fail(ErrorCode::kIncompleteTable, "no L-value for odd character #" + std::to_string(chi.index()));
    if (m % it->second.conductor() != 0)
      fail(ErrorCode::kNonEquivariantTable, "value at character #" + std::to_string(chi.index()) +
                                                " is not given in Q(zeta_" + std::to_string(m) + ")");
    values.emplace(chi.index(), it->second.lift_to(m));
  }
  // sigma_a for a in a generating set of (Z/m)^* suffices: the relations compose.
  std::vector<long> galois_gens;
  {
    std::vector<bool> reached(static_cast<std::size_t>(m), false);
    reached[1 % static_cast<std::size_t>(m)] = true;
    for (long a = 2; a < m; ++a) {
      if (std::gcd(a, m) != 1 || reached[static_cast<std::size_t>(a)]) continue;
      galois_gens.push_back(a);
      for (bool grew = true; grew;) {
        grew = false;
        for (long x = 0; x < m; ++x) {
          if (!reached[static_cast<std::size_t>(x)]) continue;
          const auto y = static_cast<std::size_t>(x * a % m);
          if (!reached[y]) reached[y] = grew = true;
        }
      }
    }
  }
  for (const auto& chi : odd) {
    const auto& v = values.at(chi.index());
    for (long a : galois_gens) {
      if (!(values.at(chi.power(a).index()) == v.galois(a)))
        fail(ErrorCode::kNonEquivariantTable,
             "value at character #" + std::to_string(chi.power(a).index()) + " is not sigma_" + std::to_string(a) +
                 " of the value at #" + std::to_string(chi.index()));
    }
  }

  std::vector<Rational> coeffs(static_cast<std::size_t>(g->order()));
  for (long x = 0; x < g->order(); ++x) {
    // sum over odd chi of value(chi) * zeta^{-chi(x)}, accumulated as power sums and reduced once.
    std::vector<Rational> sums(static_cast<std::size_t>(m));
    for (const auto& chi : odd) {
      const auto& c = values.at(chi.index()).coefficients();
      const long shift = ((-chi.value_exponent(x)) % m + m) % m;
      for (std::size_t j = 0; j < c.size(); ++j)
        if (c[j] != 0) sums[(j + static_cast<std::size_t>(shift)) % static_cast<std::size_t>(m)] += c[j];
    }
    const CyclotomicRational acc = CyclotomicRational::from_power_sums(m, std::move(sums));
    if (!acc.is_rational())
      fail(ErrorCode::kNonEquivariantTable, "Fourier coefficient at element #" + std::to_string(x) + " is irrational");
    coeffs[static_cast<std::size_t>(x)] = acc.rational_value() / g->order();
  }
  ThetaElement out{GroupRingElement(g, BaseRing::rationals(), std::move(coeffs)), places, 0, degree_n, false, false};
  finalize_flags(out);
  return out;
}

ThetaElement kubota_oracle_theta(const DirichletGroup& d, const std::vector<PlaceSpec>& places) {
  check_disjoint(places);
  const long f = d.modulus();
  const GroupPtr& g = d.group();
  for (long ell : prime_factors(f)) {
    bool present = std::any_of(places.begin(), places.end(), [&](const PlaceSpec& v) {
      return !v.archimedean && v.in_s && v.residue_characteristic == ell;
    });
    if (!present) fail(ErrorCode::kMissingRamified, "S omits the prime " + std::to_string(ell) + " dividing f");
  }
  std::vector<Rational> coeffs(static_cast<std::size_t>(g->order()));
  if (f > 1) {
    for (long a = 1; a <= f; ++a) {
      if (std::gcd(a, f) != 1) continue;
      long x = g->neg(d.element_of(a));
      coeffs[static_cast<std::size_t>(x)] += Rational(1, 2) - Rational(a, f);
    }
  }
  GroupRingElement theta(g, BaseRing::rationals(), std::move(coeffs));
  const auto one = GroupRingElement::scalar(g, 1, BaseRing::rationals());
  for (const auto& v : places) {
    if (v.archimedean) continue;
    const long ell = v.residue_characteristic;
    if (f % ell == 0) {
      if (v.in_t) fail(ErrorCode::kInvalidArgument, "T contains a prime dividing the conductor");
      continue;
    }
    auto frob_inv = GroupRingElement::basis(g, g->neg(d.element_of(ell)), BaseRing::rationals());
    if (v.in_s) theta = theta * (one - frob_inv);
    if (v.in_t) theta = theta * (one - Rational(v.norm) * frob_inv);
  }
  ThetaElement out{theta, places, 0, 1, false, false};
  finalize_flags(out);
  return out;
}

ThetaElement kubota_oracle_theta(long f, const std::vector<PlaceSpec>& places) {
  return kubota_oracle_theta(DirichletGroup::full(f), places);
}

ThetaElement euler_shift(const ThetaElement& theta, const PlaceSpec& q, ShiftMode mode) {
  if (q.archimedean) fail(ErrorCode::kInvalidArgument, "Euler shifts need a finite place");
  for (const auto& v : theta.places)
    if (v.label == q.label && (v.in_s || v.in_t)) fail(ErrorCode::kAlreadyInSets, "place " + q.label + " is already in S or T");
  if (q.ramified) fail(ErrorCode::kRamifiedShift, "place " + q.label + " is ramified");
  if (q.frobenius < 0) fail(ErrorCode::kInvalidArgument, "place " + q.label + " has no Frobenius");
  const GroupPtr& g = theta.theta.group();
  const BaseRing& ring = theta.theta.ring();
  auto frob_inv = GroupRingElement::basis(g, g->neg(q.frobenius), ring);
  auto one = GroupRingElement::scalar(g, 1, ring);
  ThetaElement out = theta;
  PlaceSpec added = q;
  if (mode == ShiftMode::kDeplete) {
    out.theta = (one - frob_inv) * theta.theta;
    added.in_s = true;
    added.in_t = false;
  } else {
    out.theta = (one - Rational(q.norm) * frob_inv) * theta.theta;
    added.in_s = false;
    added.in_t = true;
  }
  out.places.push_back(added);
  finalize_flags(out);
  return out;
}

LValueTable shift_table(const LValueTable& table, const GroupPtr& g, const PlaceSpec& q, ShiftMode mode) {
  if (q.frobenius < 0) fail(ErrorCode::kInvalidArgument, "place " + q.label + " has no Frobenius");
  LValueTable out;
  out.provenance = table.provenance;
  const long m = g->exponent();
  for (const auto& [idx, value] : table.values) {
    Character chi(g, g->element(idx));
    CyclotomicRational root_inv = CyclotomicRational::root_of_unity(m, -chi.value_exponent(q.frobenius));
    CyclotomicRational one = CyclotomicRational::constant(m, 1);
    CyclotomicRational factor = mode == ShiftMode::kDeplete ? one - root_inv : one - root_inv * Rational(q.norm);
    out.values.emplace(idx, value * factor);
  }
  return out;
}

}  // namespace brumer
