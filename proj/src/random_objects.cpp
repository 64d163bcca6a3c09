#include "brumer/random_objects.hpp"

#include <map>

#include "brumer/errors.hpp"

namespace brumer {

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

void chains(long max_order, long product, std::vector<long>& current, std::vector<std::vector<long>>& out) {
  if (!current.empty()) out.push_back(current);
  const long last = current.empty() ? 1 : current.back();
  for (long d = current.empty() ? 2 : last; product * d <= max_order; d += last)
    if (d % last == 0) {
      current.push_back(d);
      chains(max_order, product * d, current, out);
      current.pop_back();
    }
}

long power_mod(long a, long e, long n) {
  long r = 1 % n;
  a %= n;
  for (; e > 0; --e) r = r * a % n;
  return r;
}

// Multipliers u_i with u_i^{d_i} = 1 mod n for every generator order d_i.
std::vector<long> random_multipliers(const FiniteAbelianGroup& g, long n, Rng& rng) {
  std::vector<long> units;
  if (n == 0) {
    units = {1, -1};
  } else {
    for (long u = 1; u < std::max(n, 2L); ++u)
      if (std::gcd(u, n) == 1) units.push_back(u);
  }
  std::vector<long> out;
  for (long d : g.invariants()) {
    std::vector<long> ok;
    for (long u : units)
      if (n == 0 ? (d % 2 == 0 || u == 1) : power_mod(((u % n) + n) % n, d, n) == 1 % n) ok.push_back(u);
    out.push_back(ok[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(ok.size()) - 1))]);
  }
  return out;
}

Subgroup random_subgroup(const std::vector<Subgroup>& all, Rng& rng) {
  return all[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(all.size()) - 1))];
}

LocalPlace finite_place(const GroupPtr& g, const std::vector<Subgroup>& subgroups, Rng& rng, std::string label,
                        bool force_ramified) {
  LocalPlace v;
  v.label = std::move(label);
  Subgroup inertia = random_subgroup(subgroups, rng);
  if (force_ramified)
    while (inertia.order() == 1) inertia = random_subgroup(subgroups, rng);
  const long sigma = uniform(rng, 0, g->order() - 1);
  std::vector<long> gens = inertia.generators;
  gens.push_back(sigma);
  v.decomposition = subgroup_generated_by(*g, gens);
  v.inertia = inertia;
  v.frobenius = sigma;
  return v;
}

}  // namespace

long two_height(const FiniteAbelianGroup& g, long x) {
  std::vector<bool> in_image(static_cast<std::size_t>(g.order()), true);
  long k = 0;
  while (k < 30) {
    std::vector<bool> next(static_cast<std::size_t>(g.order()), false);
    for (long y = 0; y < g.order(); ++y)
      if (in_image[static_cast<std::size_t>(y)]) next[static_cast<std::size_t>(g.add(y, y))] = true;
    if (!next[static_cast<std::size_t>(x)]) return k;
    if (next == in_image) return 30;
    in_image = std::move(next);
    ++k;
  }
  return k;
}

std::vector<GroupPtr> involution_groups(long max_order) {
  std::vector<std::vector<long>> all;
  std::vector<long> current;
  chains(max_order, 1, current, all);
  std::vector<GroupPtr> out;
  for (const auto& inv : all) {
    GroupPtr plain = build_group(inv, std::vector<long>(inv.size(), 0));
    std::map<long, long> by_height;
    for (long x = 1; x < plain->order(); ++x)
      if (plain->element_order(x) == 2) by_height.emplace(two_height(*plain, x), x);
    for (const auto& [height, x] : by_height) out.push_back(build_group(inv, plain->element(x)));
  }
  return out;
}

GModule random_finite_module(const GroupPtr& g, Rng& rng) {
  static const long kOrders[] = {2, 3, 4, 6, 8, 9, 12, 16};
  auto order = [&] { return kOrders[uniform(rng, 0, 7)]; };
  switch (uniform(rng, 0, 2)) {
    case 0: {
      const long n = order();
      const auto mult = random_multipliers(*g, n, rng);
      return GModule::twisted(g, {Integer(n)}, mult);
    }
    case 1: {
      const long n1 = order();
      const long n2 = order();
      const auto m1 = random_multipliers(*g, n1, rng);
      const auto m2 = random_multipliers(*g, n2, rng);
      return direct_sum(GModule::twisted(g, {Integer(n1)}, m1), GModule::twisted(g, {Integer(n2)}, m2));
    }
    default: {
      const long n = kOrders[uniform(rng, 0, 4)];
      const std::size_t d = static_cast<std::size_t>(g->order());
      IntMatrix extra = Integer(n) * IntMatrix::identity(d);
      const long rows = uniform(rng, 0, 2);
      for (long r = 0; r < rows; ++r) {
        IntVector row(d);
        for (auto& x : row) x = uniform(rng, -2, 2);
        extra.append_row(row);
      }
      return GModule::regular(g).quotient(extra);
    }
  }
}

GroupRingElement random_group_ring_element(const GroupPtr& g, Rng& rng, long bound) {
  std::vector<Rational> c(static_cast<std::size_t>(g->order()));
  for (auto& x : c) x = uniform(rng, -bound, bound);
  return GroupRingElement(g, BaseRing::integers(), std::move(c));
}

MinusElement random_minus_element(const GroupPtr& g, Rng& rng, long bound) {
  std::vector<Rational> c(static_cast<std::size_t>(g->order() / 2));
  for (auto& x : c) x = uniform(rng, -bound, bound);
  return MinusElement(g, BaseRing::integers(), std::move(c));
}

Presentation<MinusElement> random_minus_presentation(const GroupPtr& g, Rng& rng, std::size_t size, long bound) {
  Matrix<MinusElement> rel(size);
  for (auto& row : rel)
    for (std::size_t j = 0; j < size; ++j) row.push_back(random_minus_element(g, rng, bound));
  return Presentation<MinusElement>(MinusElement::zero(g), size, std::move(rel));
}

std::vector<LocalPlace> random_place_configuration(const GroupPtr& g, Rng& rng, bool ramified_outside) {
  const auto subgroups = all_subgroups(*g);
  const Subgroup complex_conj = subgroup_generated_by(*g, std::vector<long>{g->conjugation()});
  std::vector<LocalPlace> places;
  const long s_count = uniform(rng, 1, 3);
  for (long i = 0; i < s_count; ++i) {
    LocalPlace v;
    if (uniform(rng, 0, 3) == 0) {
      v.label = "inf" + std::to_string(i);
      v.archimedean = true;
      v.decomposition = v.inertia = complex_conj;
      v.frobenius = 0;
    } else {
      v = finite_place(g, subgroups, rng, "s" + std::to_string(i), false);
    }
    v.in_s = true;
    places.push_back(std::move(v));
  }
  const long t_count = uniform(rng, 0, 2);
  for (long i = 0; i < t_count; ++i) {
    LocalPlace v;
    if (uniform(rng, 0, 2) == 0) {
      v.label = "tinf" + std::to_string(i);
      v.archimedean = true;
      v.decomposition = v.inertia = complex_conj;
    } else {
      v = finite_place(g, subgroups, rng, "t" + std::to_string(i), false);
    }
    v.in_t = true;
    places.push_back(std::move(v));
  }
  if (ramified_outside) {
    const long r_count = uniform(rng, 0, 1);
    for (long i = 0; i < r_count; ++i) places.push_back(finite_place(g, subgroups, rng, "r" + std::to_string(i), true));
  }
  return places;
}

}  // namespace brumer
