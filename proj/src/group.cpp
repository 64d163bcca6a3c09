#include "brumer/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "brumer/errors.hpp"
#include "brumer/linalg.hpp"

namespace brumer {

namespace {

long pos_mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<long> invariants, const Exponents& c)
    : invariants_(std::move(invariants)) {
  if (invariants_.empty()) fail(ErrorCode::kEmptyGroup, "no invariants given");
  for (long d : invariants_) {
    if (d < 1) fail(ErrorCode::kInvalidArgument, "invariants must be positive");
    radix_.push_back(order_);
    order_ *= d;
    exponent_ = std::lcm(exponent_, d);
  }
  if (c.size() != invariants_.size()) fail(ErrorCode::kInvalidArgument, "c has wrong length");
  c_ = index(c);
  if (add(c_, c_) != 0) fail(ErrorCode::kNonInvolution, "c^2 is not the identity");
}

long FiniteAbelianGroup::index(std::span<const long> e) const {
  if (e.size() != invariants_.size()) fail(ErrorCode::kUnknownElement, "exponent vector has wrong length");
  long idx = 0;
  for (std::size_t i = 0; i < e.size(); ++i) idx += pos_mod(e[i], invariants_[i]) * radix_[i];
  return idx;
}

Exponents FiniteAbelianGroup::element(long idx) const {
  Exponents e(invariants_.size());
  for (std::size_t i = 0; i < invariants_.size(); ++i) {
    e[i] = idx % invariants_[i];
    idx /= invariants_[i];
  }
  return e;
}

long FiniteAbelianGroup::add(long a, long b) const {
  long idx = 0;
  for (std::size_t i = 0; i < invariants_.size(); ++i) {
    const long d = invariants_[i];
    idx += ((a % d + b % d) % d) * radix_[i];
    a /= d;
    b /= d;
  }
  return idx;
}

long FiniteAbelianGroup::neg(long a) const {
  long idx = 0;
  for (std::size_t i = 0; i < invariants_.size(); ++i) {
    const long d = invariants_[i];
    idx += ((d - a % d) % d) * radix_[i];
    a /= d;
  }
  return idx;
}

long FiniteAbelianGroup::multiple(long a, long k) const {
  Exponents e = element(a);
  for (auto& x : e) x *= k;
  return index(e);
}

long FiniteAbelianGroup::element_order(long a) const {
  long o = 1;
  Exponents e = element(a);
  for (std::size_t i = 0; i < e.size(); ++i) {
    const long d = invariants_[i];
    o = std::lcm(o, d / std::gcd(d, e[i]));
  }
  return o;
}

long FiniteAbelianGroup::generator(std::size_t i) const {
  Exponents e(invariants_.size());
  e.at(i) = 1;
  return index(e);
}

GroupPtr build_group(const std::vector<long>& invariants, const Exponents& c_spec) {
  return std::make_shared<const FiniteAbelianGroup>(invariants, c_spec);
}

bool Subgroup::contains(long g) const { return std::binary_search(elements.begin(), elements.end(), g); }

Subgroup subgroup_generated_by(const FiniteAbelianGroup& g, std::span<const long> gens) {
  std::set<long> seen{0};
  std::deque<long> queue{0};
  while (!queue.empty()) {
    long x = queue.front();
    queue.pop_front();
    for (long s : gens) {
      long y = g.add(x, s);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  Subgroup h;
  h.elements.assign(seen.begin(), seen.end());
  for (long s : gens)
    if (s != 0) h.generators.push_back(s);
  return h;
}

Subgroup as_subgroup(const FiniteAbelianGroup& g, std::span<const long> elements) {
  std::vector<long> sorted(elements.begin(), elements.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Subgroup h = subgroup_generated_by(g, sorted);
  if (h.elements != sorted) fail(ErrorCode::kNotSubgroup, "element set is not closed under the group law");
  return h;
}

std::vector<Subgroup> all_subgroups(const FiniteAbelianGroup& g) {
  std::set<std::vector<long>> seen;
  std::vector<Subgroup> out;
  std::deque<Subgroup> queue;
  Subgroup trivial = subgroup_generated_by(g, std::vector<long>{});
  seen.insert(trivial.elements);
  queue.push_back(trivial);
  while (!queue.empty()) {
    Subgroup h = queue.front();
    queue.pop_front();
    out.push_back(h);
    for (long x = 1; x < g.order(); ++x) {
      if (h.contains(x)) continue;
      std::vector<long> gens = h.generators;
      gens.push_back(x);
      Subgroup k = subgroup_generated_by(g, gens);
      if (seen.insert(k.elements).second) queue.push_back(k);
    }
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return out;
}

QuotientMap quotient_group(const GroupPtr& g, const Subgroup& h) {
  const std::size_t k = g->rank();
  IntMatrix rel(0, k);
  std::vector<Integer> d;
  for (long x : g->invariants()) d.emplace_back(x);
  rel = IntMatrix::diagonal(d);
  for (long s : h.generators) {
    Exponents e = g->element(s);
    IntVector row(e.begin(), e.end());
    rel.append_row(row);
  }
  SmithResult snf = smith(rel, true);
  std::vector<std::size_t> kept;
  std::vector<long> inv;
  for (std::size_t i = 0; i < snf.diagonal.size(); ++i) {
    if (snf.diagonal[i] != 1) {
      kept.push_back(i);
      inv.push_back(to_long(snf.diagonal[i]));
    }
  }
  if (inv.empty()) {
    kept.clear();
    inv.push_back(1);
  }
  auto reduce = [&](long x) {
    Exponents e = g->element(x);
    IntVector v(e.begin(), e.end());
    IntVector z = row_times(v, snf.right);
    Exponents out(inv.size(), 0);
    for (std::size_t i = 0; i < kept.size(); ++i) out[i] = to_long(mod_floor(z[kept[i]], Integer(inv[i])));
    return out;
  };
  QuotientMap q;
  q.target = build_group(inv, reduce(g->conjugation()));
  q.image.resize(static_cast<std::size_t>(g->order()));
  for (long x = 0; x < g->order(); ++x) q.image[static_cast<std::size_t>(x)] = q.target->index(reduce(x));
  return q;
}

SubgroupEmbedding subgroup_structure(const GroupPtr& g, const Subgroup& h) {
  const std::size_t s = h.generators.size();
  const std::size_t k = g->rank();
  SubgroupEmbedding out;
  if (s == 0) {
    out.source = build_group({1}, {0});
    out.embedding = {0};
    return out;
  }
  IntMatrix map(s, k);
  for (std::size_t i = 0; i < s; ++i) {
    Exponents e = g->element(h.generators[i]);
    for (std::size_t j = 0; j < k; ++j) map(i, j) = e[j];
  }
  std::vector<Integer> d;
  for (long x : g->invariants()) d.emplace_back(x);
  IntMatrix ker = left_kernel(map.stacked(IntMatrix::diagonal(d)));
  IntMatrix rel = ker.block(0, 0, ker.rows(), s);
  Subquotient abstract = Subquotient::cokernel(rel, s);
  std::vector<long> inv;
  for (const auto& x : abstract.invariants()) inv.push_back(to_long(x));
  std::vector<IntVector> lifts = abstract.generators();
  std::vector<long> lift_image;
  for (const auto& l : lifts) {
    long acc = 0;
    for (std::size_t i = 0; i < s; ++i) acc = g->add(acc, g->multiple(h.generators[i], to_long(mod_floor(l[i], Integer(g->order())))));
    lift_image.push_back(acc);
  }
  if (inv.empty()) {
    inv.push_back(1);
    lift_image.push_back(0);
  }
  auto tmp = build_group(inv, Exponents(inv.size(), 0));
  std::vector<long> emb(static_cast<std::size_t>(tmp->order()));
  for (long a = 0; a < tmp->order(); ++a) {
    Exponents e = tmp->element(a);
    long acc = 0;
    for (std::size_t i = 0; i < e.size(); ++i) acc = g->add(acc, g->multiple(lift_image[i], e[i]));
    emb[static_cast<std::size_t>(a)] = acc;
  }
  Exponents c_abs(inv.size(), 0);
  if (h.contains(g->conjugation())) {
    auto it = std::find(emb.begin(), emb.end(), g->conjugation());
    c_abs = tmp->element(static_cast<long>(it - emb.begin()));
  }
  out.source = build_group(inv, c_abs);
  out.embedding = std::move(emb);
  return out;
}

Character::Character(GroupPtr group, Exponents exps) : group_(std::move(group)), exps_(std::move(exps)) {
  if (exps_.size() != group_->rank()) fail(ErrorCode::kInvalidArgument, "character exponent length mismatch");
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] = pos_mod(exps_[i], group_->invariants()[i]);
}

long Character::value_exponent(long g) const {
  const long m = group_->exponent();
  Exponents e = group_->element(g);
  long acc = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    acc = (acc + exps_[i] * e[i] % m * (m / group_->invariants()[i])) % m;
  }
  return acc;
}

bool Character::is_odd() const {
  if (!group_->has_conjugation()) return false;
  return 2 * value_exponent(group_->conjugation()) == group_->exponent();
}

bool Character::is_trivial() const {
  return std::all_of(exps_.begin(), exps_.end(), [](long x) { return x == 0; });
}

long Character::order() const {
  long o = 1;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    const long d = group_->invariants()[i];
    o = std::lcm(o, d / std::gcd(d, exps_[i]));
  }
  return o;
}

Character Character::power(long k) const {
  Exponents e = exps_;
  for (auto& x : e) x *= k;
  return Character(group_, e);
}

bool Character::trivial_on(std::span<const long> elements) const {
  return std::all_of(elements.begin(), elements.end(), [this](long g) { return value_exponent(g) == 0; });
}

long Character::index() const { return group_->index(exps_); }

std::vector<Character> list_characters(const GroupPtr& g) {
  std::vector<Character> out;
  out.reserve(static_cast<std::size_t>(g->order()));
  for (long a = 0; a < g->order(); ++a) out.emplace_back(g, g->element(a));
  return out;
}

}  // namespace brumer
