#include <doctest.h>

#include "brumer/errors.hpp"
#include "brumer/fitting.hpp"
#include "brumer/random_objects.hpp"

using namespace brumer;

namespace {

MinusElement minus_scalar(const GroupPtr& g, long a, BaseRing ring = BaseRing::integers()) {
  return MinusElement::scalar(g, a, ring);
}

Integer p_part(Integer n, const Integer& p) {
  Integer out = 1;
  while (n != 0 && n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

std::vector<Character> odd_characters(const GroupPtr& g) {
  std::vector<Character> out;
  for (const auto& chi : list_characters(g))
    if (chi.is_odd()) out.push_back(chi);
  return out;
}

}  // namespace

TEST_CASE("Berkowitz determinant agrees with Laplace expansion") {
  Rng rng(10);
  for (const auto& g : involution_groups(8)) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto p = random_minus_presentation(g, rng, n, 3);
      CHECK(determinant(p.relations(), p.prototype()) == determinant_by_expansion(p.relations(), p.prototype()));
      Matrix<GroupRingElement> full(n);
      for (auto& row : full)
        for (std::size_t j = 0; j < n; ++j) row.push_back(random_group_ring_element(g, rng, 2));
      const auto zero = GroupRingElement::zero(g);
      CHECK(determinant(full, zero) == determinant_by_expansion(full, zero));
    }
  }
}

TEST_CASE("Fitting ideals of non-square presentations") {
  auto g = build_group({2}, {1});
  const auto two = minus_scalar(g, 2);
  const auto three = minus_scalar(g, 3);
  // Two relations on one generator: ideal (2, 3) = (1).
  Presentation<MinusElement> tall(two, 1, {{two}, {three}});
  const auto ideal = fitting_ideal(tall);
  CHECK(ideal.gens.size() == 2);
  // Three relations on two generators: three 2 x 2 minors.
  Presentation<MinusElement> wide(two, 2, {{two, three}, {three, two}, {two, two}});
  CHECK(fitting_ideal(wide).gens.size() == 3);
  // Fewer relations than generators: the zero ideal.
  Presentation<MinusElement> short_one(two, 2, {{two, three}});
  CHECK(fitting_ideal(short_one).is_zero());
  // No generators: the unit ideal.
  Presentation<MinusElement> empty(two, 0, {});
  CHECK(fitting_ideal(empty).gens.front() == minus_scalar(g, 1));
}

TEST_CASE("block multiplicativity and transpose") {
  Rng rng(20);
  for (const auto& g : involution_groups(8)) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto a = random_minus_presentation(g, rng, 2, 3);
      const auto b = random_minus_presentation(g, rng, 1 + trial % 2, 3);
      const auto fa = fitting_ideal(a).gens.front();
      const auto fb = fitting_ideal(b).gens.front();
      CHECK(fitting_ideal(direct_sum(a, b)).gens.front() == fa * fb);
      CHECK(fitting_ideal(append_identity_block(a, 2)).gens.front() == fa);
      CHECK(jannsen_transpose(jannsen_transpose(a)).relations() == a.relations());
      CHECK(fitting_ideal(jannsen_transpose(a)).gens.front() == fa.sharp());
    }
  }
}

TEST_CASE("ideal comparison on the minus quotient of Z_2[Z/2]") {
  auto g = build_group({2}, {1});
  const auto ring = BaseRing::padic(2, 32);
  const auto one_minus_c = MinusElement::project(GroupRingElement(g, ring, {Rational(1), Rational(-1)}));
  const IdealGens<MinusElement> generated_by_1_minus_c{one_minus_c, {one_minus_c}};
  const IdealGens<MinusElement> unit{one_minus_c, {minus_scalar(g, 1, ring)}};
  const IdealGens<MinusElement> two{one_minus_c, {minus_scalar(g, 2, ring)}};
  CHECK(ideal_compare(generated_by_1_minus_c, unit, 2) == IdealRelation::kFirstInSecond);
  CHECK(ideal_compare(unit, generated_by_1_minus_c, 2) == IdealRelation::kSecondInFirst);
  CHECK(ideal_compare(two, generated_by_1_minus_c, 2) == IdealRelation::kEqual);
  // 3 is a 2-adic unit.
  const IdealGens<MinusElement> three{one_minus_c, {minus_scalar(g, 3, ring)}};
  CHECK(ideal_compare(three, unit, 2) == IdealRelation::kEqual);
}

TEST_CASE("incomparable ideals in Z_5[Z/4]_-") {
  // Z_5[Z/4]_- = Z_5[i] = Z_5 x Z_5; (2 + i) and (2 - i) each vanish at one factor mod 5.
  auto g = build_group({4}, {2});
  const auto ring = BaseRing::padic(5, 16);
  auto elt = [&](long a, long b) { return MinusElement::project(GroupRingElement(g, ring, {Rational(a), Rational(b), 0, 0})); };
  const IdealGens<MinusElement> first{elt(0, 0), {elt(2, 1)}};
  const IdealGens<MinusElement> second{elt(0, 0), {elt(2, -1)}};
  CHECK(ideal_compare(first, second, 5) == IdealRelation::kIncomparable);
}

TEST_CASE("comparison runs out of precision on deep valuations") {
  auto g = build_group({2}, {1});
  const auto ring = BaseRing::padic(2, 64);
  const IdealGens<MinusElement> deep{minus_scalar(g, 0, ring), {MinusElement::scalar(g, Rational(ipow(2, 60)), ring)}};
  const IdealGens<MinusElement> unit{minus_scalar(g, 0, ring), {minus_scalar(g, 1, ring)}};
  try {
    ideal_compare(deep, unit, 2, 64, 8);
    FAIL("expected PrecisionExhausted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kPrecisionExhausted);
  }
}

TEST_CASE("module sizes from characters match Smith-form counts") {
  Rng rng(30);
  for (const auto& g : involution_groups(8)) {
    for (int trial = 0; trial < 6; ++trial) {
      const auto p = random_minus_presentation(g, rng, 1 + static_cast<std::size_t>(trial % 3), 3);
      const auto det = fitting_ideal(p).gens.front();
      const auto order = presented_module(p).order();
      for (long prime : {2L, 3L}) {
        const auto size = module_size(det, odd_characters(g), prime, 64, 8);
        if (order == 0) {
          CHECK_FALSE(size.finite);
        } else {
          REQUIRE(size.finite);
          CHECK(size.size == p_part(order, prime));
        }
      }
    }
  }
}

TEST_CASE("coinvariants push presentations to the quotient") {
  auto g = build_group({4}, {2});
  const auto h = subgroup_generated_by(*g, std::vector<long>{2});
  const auto sigma = GroupRingElement::basis(g, 1);
  const auto one = GroupRingElement::scalar(g, 1);
  Presentation<GroupRingElement> p(one, 1, {{sigma - one + sigma * sigma}});
  const auto q = coinvariants(p, h);
  REQUIRE(q.relations().size() == 1);
  CHECK(q.entry(0, 0).group()->order() == 2);
  // sigma - 1 + sigma^2 maps to sigma' - 1 + 1 = sigma'.
  CHECK(q.entry(0, 0) == GroupRingElement::basis(q.entry(0, 0).group(), 1));
}
