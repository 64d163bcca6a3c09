#include "brumer/group_ring.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>

#include "brumer/errors.hpp"

namespace brumer {

Rational BaseRing::normalize(const Rational& a) const {
  switch (kind) {
    case BaseKind::kIntegers:
      if (a.get_den() != 1) fail(ErrorCode::kNotIntegral, "coefficient " + to_string(a) + " is not an integer");
      return a;
    case BaseKind::kRationals:
      return a;
    case BaseKind::kPAdic:
      return Rational(reduce_rational(a, modulus()));
  }
  return a;
}

std::string BaseRing::describe() const {
  switch (kind) {
    case BaseKind::kIntegers: return "Z";
    case BaseKind::kRationals: return "Q";
    case BaseKind::kPAdic: return "Z_" + prime.get_str() + "/p^" + std::to_string(precision);
  }
  return "?";
}

namespace {

void check_compatible(const GroupPtr& ga, const BaseRing& ra, const GroupPtr& gb, const BaseRing& rb) {
  if (!(*ga == *gb)) fail(ErrorCode::kRingMismatch, "group ring elements over different groups");
  if (!(ra == rb)) fail(ErrorCode::kRingMismatch, "base rings differ: " + ra.describe() + " vs " + rb.describe());
}

std::string format_terms(const std::vector<Rational>& coeffs, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += coeffs[i].get_str() + "*" + names[i];
  }
  return s.empty() ? "0" : s;
}

std::string element_name(const FiniteAbelianGroup& g, long x) {
  std::string s = "[";
  Exponents e = g.element(x);
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + "]";
}

}  // namespace

GroupRingElement::GroupRingElement(GroupPtr group, BaseRing ring, std::vector<Rational> coeffs)
    : group_(std::move(group)), ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != static_cast<std::size_t>(group_->order()))
    fail(ErrorCode::kInvalidArgument, "coefficient vector length differs from group order");
  for (auto& a : coeffs_) a = ring_.normalize(a);
}

GroupRingElement GroupRingElement::zero(GroupPtr group, BaseRing ring) {
  std::vector<Rational> c(static_cast<std::size_t>(group->order()));
  return GroupRingElement(std::move(group), std::move(ring), std::move(c));
}

GroupRingElement GroupRingElement::scalar(GroupPtr group, const Rational& a, BaseRing ring) {
  std::vector<Rational> c(static_cast<std::size_t>(group->order()));
  c[0] = a;
  return GroupRingElement(std::move(group), std::move(ring), std::move(c));
}

GroupRingElement GroupRingElement::basis(GroupPtr group, long element, BaseRing ring) {
  std::vector<Rational> c(static_cast<std::size_t>(group->order()));
  c.at(static_cast<std::size_t>(element)) = 1;
  return GroupRingElement(std::move(group), std::move(ring), std::move(c));
}

GroupRingElement GroupRingElement::norm(GroupPtr group, const Subgroup& h, BaseRing ring) {
  std::vector<Rational> c(static_cast<std::size_t>(group->order()));
  for (long x : h.elements) c[static_cast<std::size_t>(x)] = 1;
  return GroupRingElement(std::move(group), std::move(ring), std::move(c));
}

bool GroupRingElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& a) { return a == 0; });
}

GroupRingElement GroupRingElement::sharp() const {
  std::vector<Rational> c(coeffs_.size());
  for (long g = 0; g < group_->order(); ++g) c[static_cast<std::size_t>(group_->neg(g))] = coeffs_[static_cast<std::size_t>(g)];
  return GroupRingElement(group_, ring_, std::move(c));
}

GroupRingElement GroupRingElement::with_ring(const BaseRing& ring) const {
  return GroupRingElement(group_, ring, coeffs_);
}

GroupRingElement GroupRingElement::push_forward(const QuotientMap& q) const {
  std::vector<Rational> c(static_cast<std::size_t>(q.target->order()));
  for (std::size_t g = 0; g < coeffs_.size(); ++g) c[static_cast<std::size_t>(q.image[g])] += coeffs_[g];
  return GroupRingElement(q.target, ring_, std::move(c));
}

Rational GroupRingElement::augmentation() const {
  Rational s = 0;
  for (const auto& a : coeffs_) s += a;
  return ring_.normalize(s);
}

std::vector<GroupRingElement> GroupRingElement::basis_elements() const {
  std::vector<GroupRingElement> out;
  for (long g = 0; g < group_->order(); ++g) out.push_back(basis(group_, g, ring_));
  return out;
}

std::string GroupRingElement::to_string() const {
  std::vector<std::string> names;
  for (long g = 0; g < group_->order(); ++g) names.push_back(element_name(*group_, g));
  return format_terms(coeffs_, names);
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  check_compatible(group_, ring_, o.group_, o.ring_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = ring_.normalize(coeffs_[i] + o.coeffs_[i]);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  check_compatible(group_, ring_, o.group_, o.ring_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = ring_.normalize(coeffs_[i] - o.coeffs_[i]);
  return *this;
}

GroupRingElement operator-(const GroupRingElement& a) {
  std::vector<Rational> c = a.coeffs_;
  for (auto& x : c) x = -x;
  return GroupRingElement(a.group_, a.ring_, std::move(c));
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  check_compatible(a.group_, a.ring_, b.group_, b.ring_);
  const long n = a.group_->order();
  std::vector<Rational> c(static_cast<std::size_t>(n));
  for (long g = 0; g < n; ++g) {
    const Rational& ag = a.coeffs_[static_cast<std::size_t>(g)];
    if (ag == 0) continue;
    for (long h = 0; h < n; ++h) {
      const Rational& bh = b.coeffs_[static_cast<std::size_t>(h)];
      if (bh == 0) continue;
      c[static_cast<std::size_t>(a.group_->add(g, h))] += ag * bh;
    }
  }
  return GroupRingElement(a.group_, a.ring_, std::move(c));
}

GroupRingElement operator*(const Rational& k, const GroupRingElement& a) {
  std::vector<Rational> c = a.coeffs_;
  for (auto& x : c) x *= k;
  return GroupRingElement(a.group_, a.ring_, std::move(c));
}

bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
  return *a.group_ == *b.group_ && a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
}

GroupRingElement multiply(const GroupRingElement& a, const GroupRingElement& b) { return a * b; }

const MinusBasis& minus_basis(const FiniteAbelianGroup& g) {
  static std::mutex mu;
  static std::map<std::pair<std::vector<long>, long>, std::unique_ptr<MinusBasis>> cache;
  if (!g.has_conjugation()) fail(ErrorCode::kTrivialConjugation, "c is the identity");
  auto key = std::make_pair(g.invariants(), g.conjugation());
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  auto basis = std::make_unique<MinusBasis>();
  std::vector<long> reps;
  for (long x = 0; x < g.order(); ++x) {
    long y = g.add(x, g.conjugation());
    if (g.element(x) < g.element(y)) reps.push_back(x);
  }
  std::sort(reps.begin(), reps.end(), [&](long a, long b) { return g.element(a) < g.element(b); });
  basis->reps = reps;
  basis->orbit_of.assign(static_cast<std::size_t>(g.order()), 0);
  basis->sign_of.assign(static_cast<std::size_t>(g.order()), 1);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    basis->orbit_of[static_cast<std::size_t>(reps[i])] = static_cast<long>(i);
    long partner = g.add(reps[i], g.conjugation());
    basis->orbit_of[static_cast<std::size_t>(partner)] = static_cast<long>(i);
    basis->sign_of[static_cast<std::size_t>(partner)] = -1;
  }
  auto [pos, inserted] = cache.emplace(key, std::move(basis));
  return *pos->second;
}

MinusElement::MinusElement(GroupPtr group, BaseRing ring, std::vector<Rational> coeffs)
    : group_(std::move(group)), ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  const auto& basis = minus_basis(*group_);
  if (coeffs_.size() != basis.reps.size()) fail(ErrorCode::kInvalidArgument, "minus coefficient length mismatch");
  for (auto& a : coeffs_) a = ring_.normalize(a);
}

MinusElement MinusElement::project(const GroupRingElement& a) {
  const auto& basis = minus_basis(*a.group());
  std::vector<Rational> c(basis.reps.size());
  for (long g = 0; g < a.group()->order(); ++g) {
    const Rational& x = a.coefficient(g);
    if (x == 0) continue;
    c[static_cast<std::size_t>(basis.orbit_of[static_cast<std::size_t>(g)])] += basis.sign_of[static_cast<std::size_t>(g)] * x;
  }
  return MinusElement(a.group(), a.ring(), std::move(c));
}

MinusElement MinusElement::zero(GroupPtr group, BaseRing ring) {
  const auto& basis = minus_basis(*group);
  return MinusElement(std::move(group), std::move(ring), std::vector<Rational>(basis.reps.size()));
}

MinusElement MinusElement::scalar(GroupPtr group, const Rational& a, BaseRing ring) {
  return project(GroupRingElement::scalar(std::move(group), a, std::move(ring)));
}

bool MinusElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& a) { return a == 0; });
}

GroupRingElement MinusElement::lift() const {
  const auto& basis = minus_basis(*group_);
  std::vector<Rational> c(static_cast<std::size_t>(group_->order()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[static_cast<std::size_t>(basis.reps[i])] = coeffs_[i];
  return GroupRingElement(group_, ring_, std::move(c));
}

MinusElement MinusElement::with_ring(const BaseRing& ring) const { return MinusElement(group_, ring, coeffs_); }

std::vector<MinusElement> MinusElement::basis_elements() const {
  std::vector<MinusElement> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    std::vector<Rational> c(coeffs_.size());
    c[i] = 1;
    out.emplace_back(group_, ring_, std::move(c));
  }
  return out;
}

std::string MinusElement::to_string() const {
  const auto& basis = minus_basis(*group_);
  std::vector<std::string> names;
  for (long r : basis.reps) names.push_back(element_name(*group_, r));
  return format_terms(coeffs_, names);
}

MinusElement operator+(const MinusElement& a, const MinusElement& b) {
  check_compatible(a.group_, a.ring_, b.group_, b.ring_);
  std::vector<Rational> c = a.coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
  return MinusElement(a.group_, a.ring_, std::move(c));
}

MinusElement operator-(const MinusElement& a, const MinusElement& b) {
  check_compatible(a.group_, a.ring_, b.group_, b.ring_);
  std::vector<Rational> c = a.coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs_[i];
  return MinusElement(a.group_, a.ring_, std::move(c));
}

MinusElement operator-(const MinusElement& a) {
  std::vector<Rational> c = a.coeffs_;
  for (auto& x : c) x = -x;
  return MinusElement(a.group_, a.ring_, std::move(c));
}

MinusElement operator*(const MinusElement& a, const MinusElement& b) {
  return MinusElement::project(a.lift() * b.lift());
}

MinusElement operator*(const Rational& k, const MinusElement& a) {
  std::vector<Rational> c = a.coeffs_;
  for (auto& x : c) x *= k;
  return MinusElement(a.group_, a.ring_, std::move(c));
}

bool operator==(const MinusElement& a, const MinusElement& b) {
  return *a.group_ == *b.group_ && a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
}

MinusElement minus_project(const GroupRingElement& a) {
  if (!a.group()->has_conjugation()) fail(ErrorCode::kTrivialConjugation, "minus part needs c != identity");
  return MinusElement::project(a);
}

MinusElement divide_by_2t(const GroupRingElement& a, long t) {
  if (t < 0) fail(ErrorCode::kInvalidArgument, "t must be non-negative");
  MinusElement x = minus_project(a);
  const Integer two_t = ipow(2, static_cast<unsigned long>(t));
  const auto& basis = minus_basis(*a.group());
  std::vector<Rational> out(x.coefficients().size());
  BaseRing target = a.ring();
  auto obstruction = [&](std::size_t i, const Rational& v) {
    fail(ErrorCode::kNotDivisible, "coefficient at representative " + element_name(*a.group(), basis.reps[i]) +
                                       " equals " + v.get_str() + " and is not divisible by 2^" +
                                       std::to_string(t));
  };
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Rational& v = x.coefficients()[i];
    switch (a.ring().kind) {
      case BaseKind::kRationals:
        out[i] = v / two_t;
        break;
      case BaseKind::kIntegers:
        if (mpz_divisible_p(v.get_num().get_mpz_t(), two_t.get_mpz_t()) == 0) obstruction(i, v);
        out[i] = v / two_t;
        break;
      case BaseKind::kPAdic:
        if (a.ring().prime == 2) {
          if (mpz_divisible_p(v.get_num().get_mpz_t(), two_t.get_mpz_t()) == 0) obstruction(i, v);
          out[i] = v / two_t;
        } else {
          out[i] = v / two_t;
        }
        break;
    }
  }
  if (a.ring().kind == BaseKind::kPAdic && a.ring().prime == 2) {
    if (t >= a.ring().precision) fail(ErrorCode::kPrecisionExhausted, "division by 2^t exhausts precision");
    target = BaseRing::padic(2, a.ring().precision - t);
  }
  return MinusElement(a.group(), target, std::move(out));
}

CyclotomicRational evaluate(const Character& chi, const GroupRingElement& a) {
  const long m = chi.modulus();
  std::vector<Rational> sums(static_cast<std::size_t>(m));
  for (long g = 0; g < a.group()->order(); ++g) {
    const Rational& x = a.coefficient(g);
    if (x != 0) sums[static_cast<std::size_t>(chi.value_exponent(g))] += x;
  }
  return CyclotomicRational::from_power_sums(m, std::move(sums));
}

CyclotomicRational evaluate(const Character& chi, const MinusElement& a) {
  if (!chi.is_odd()) fail(ErrorCode::kInvalidArgument, "minus elements can only be evaluated at odd characters");
  return evaluate(chi, a.lift());
}

std::vector<std::vector<Character>> padic_galois_orbits(const std::vector<Character>& psi, const Integer& p) {
  std::vector<std::vector<Character>> orbits;
  if (psi.empty()) return orbits;
  const long m = psi.front().modulus();
  const auto exps = decomposition_exponents(m, p);
  std::set<long> done;
  for (const auto& chi : psi) {
    if (done.count(chi.index())) continue;
    std::vector<Character> orbit;
    std::set<long> seen;
    for (long a : exps) {
      Character c = chi.power(a);
      if (seen.insert(c.index()).second) orbit.push_back(c);
    }
    std::sort(orbit.begin(), orbit.end(), [](const Character& x, const Character& y) { return x.index() < y.index(); });
    for (const auto& c : orbit) done.insert(c.index());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

bool is_padic_galois_stable(const std::vector<Character>& psi, const Integer& p) {
  std::set<long> members;
  for (const auto& c : psi) members.insert(c.index());
  for (const auto& orbit : padic_galois_orbits(psi, p))
    for (const auto& c : orbit)
      if (!members.count(c.index())) return false;
  return true;
}

CharTuple::CharTuple(std::vector<Character> psi, std::vector<PAdicElement> values)
    : psi_(std::move(psi)), values_(std::move(values)) {
  nonzerodivisor_ = std::none_of(values_.begin(), values_.end(), [](const PAdicElement& v) { return v.is_zero(); });
}

CharTuple char_image(const GroupRingElement& a, const std::vector<Character>& psi, const Integer& p, long precision) {
  if (!is_padic_galois_stable(psi, p))
    fail(ErrorCode::kInvalidArgument, "character set is not stable under the Galois group of Q_" + p.get_str());
  std::vector<PAdicElement> values;
  for (const auto& chi : psi) {
    CyclotomicRational exact = evaluate(chi, a);
    PAdicElement v = embed_padic(exact, p, precision);
    if (v.is_zero() && !exact.is_zero() && a.ring().kind != BaseKind::kPAdic) {
      fail(ErrorCode::kPrecisionExhausted, "character value is nonzero but vanishes mod p^" + std::to_string(precision));
    }
    values.push_back(std::move(v));
  }
  return CharTuple(psi, std::move(values));
}

CharTuple CharTuple::restrict_to(const std::vector<Character>& block) const {
  std::vector<Character> psi;
  std::vector<PAdicElement> values;
  for (const auto& c : block) {
    auto it = std::find(psi_.begin(), psi_.end(), c);
    if (it == psi_.end()) fail(ErrorCode::kInvalidArgument, "restrict_to: character not in the tuple");
    psi.push_back(c);
    values.push_back(values_[static_cast<std::size_t>(it - psi_.begin())]);
  }
  return CharTuple(std::move(psi), std::move(values));
}

namespace {

void check_same_characters(const CharTuple& a, const CharTuple& b) {
  if (a.characters() != b.characters()) fail(ErrorCode::kRingMismatch, "character tuples over different sets");
}

}  // namespace

CharTuple operator+(const CharTuple& a, const CharTuple& b) {
  check_same_characters(a, b);
  std::vector<PAdicElement> v;
  for (std::size_t i = 0; i < a.values_.size(); ++i) v.push_back(a.values_[i] + b.values_[i]);
  return CharTuple(a.psi_, std::move(v));
}

CharTuple operator-(const CharTuple& a, const CharTuple& b) {
  check_same_characters(a, b);
  std::vector<PAdicElement> v;
  for (std::size_t i = 0; i < a.values_.size(); ++i) v.push_back(a.values_[i] - b.values_[i]);
  return CharTuple(a.psi_, std::move(v));
}

CharTuple operator*(const CharTuple& a, const CharTuple& b) {
  check_same_characters(a, b);
  std::vector<PAdicElement> v;
  for (std::size_t i = 0; i < a.values_.size(); ++i) v.push_back(a.values_[i] * b.values_[i]);
  return CharTuple(a.psi_, std::move(v));
}

bool operator==(const CharTuple& a, const CharTuple& b) { return a.psi_ == b.psi_ && a.values_ == b.values_; }

}  // namespace brumer
