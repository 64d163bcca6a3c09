#include <doctest.h>

#include "brumer/errors.hpp"
#include "brumer/group_ring.hpp"
#include "brumer/random_objects.hpp"

using namespace brumer;

namespace {

GroupRingElement element(const GroupPtr& g, std::vector<long> coeffs, BaseRing ring = BaseRing::integers()) {
  return GroupRingElement(g, ring, std::vector<Rational>(coeffs.begin(), coeffs.end()));
}

// Oracle: Fourier inversion written out directly,
// a_g = |G|^{-1} sum_chi chi(a) chi(g)^{-1}.
Rational fourier_coefficient(const GroupRingElement& a, long g_index) {
  const auto& g = a.group();
  const long m = g->exponent();
  CyclotomicRational acc(m);
  for (const auto& chi : list_characters(g))
    acc += evaluate(chi, a) * CyclotomicRational::root_of_unity(m, -chi.value_exponent(g_index));
  return acc.rational_value() / Rational(g->order());
}

}  // namespace

TEST_CASE("(1 - c)^2 = 2(1 - c) in Z[Z/2]") {
  auto g = build_group({2}, {1});
  const auto x = element(g, {1, -1});
  CHECK(x * x == element(g, {2, -2}));
  CHECK(x.sharp() == element(g, {1, -1}));
  CHECK(x.augmentation() == 0);
}

TEST_CASE("sharp is an involutive ring automorphism and inverts characters") {
  Rng rng(1);
  for (const auto& g : involution_groups(12)) {
    const auto a = random_group_ring_element(g, rng, 4);
    const auto b = random_group_ring_element(g, rng, 4);
    CHECK(a.sharp().sharp() == a);
    CHECK((a * b).sharp() == a.sharp() * b.sharp());
    for (const auto& chi : list_characters(g)) CHECK(evaluate(chi, a.sharp()) == evaluate(chi.inverse(), a));
  }
}

TEST_CASE("character evaluation is a ring homomorphism") {
  Rng rng(2);
  for (const auto& g : involution_groups(12)) {
    const auto a = random_group_ring_element(g, rng, 5);
    const auto b = random_group_ring_element(g, rng, 5);
    for (const auto& chi : list_characters(g)) {
      CHECK(evaluate(chi, a * b) == evaluate(chi, a) * evaluate(chi, b));
      CHECK(evaluate(chi, a + b) == evaluate(chi, a) + evaluate(chi, b));
    }
  }
}

TEST_CASE("Fourier inversion recovers coefficients") {
  Rng rng(3);
  for (const auto& g : involution_groups(12)) {
    const auto a = random_group_ring_element(g, rng, 7);
    for (long x = 0; x < g->order(); ++x) CHECK(fourier_coefficient(a, x) == a.coefficient(x));
  }
}

TEST_CASE("minus projection kills 1 + c and splits the lift") {
  Rng rng(4);
  for (const auto& g : involution_groups(16)) {
    const auto one_plus_c = GroupRingElement::scalar(g, 1) + GroupRingElement::basis(g, g->conjugation());
    CHECK(minus_project(one_plus_c).is_zero());
    const auto x = random_minus_element(g, rng, 5);
    CHECK(minus_project(x.lift()) == x);
    const auto a = random_group_ring_element(g, rng, 5);
    const auto b = random_group_ring_element(g, rng, 5);
    CHECK(minus_project(a * b) == minus_project(a) * minus_project(b));
    // Odd characters factor through the minus quotient.
    for (const auto& chi : list_characters(g))
      if (chi.is_odd()) CHECK(evaluate(chi, minus_project(a)) == evaluate(chi, a));
  }
}

TEST_CASE("divide_by_2t") {
  auto g = build_group({2}, {1});
  const auto x = element(g, {1, -1});
  // 1 - c maps to 2 in Z[G]_- = Z.
  CHECK(divide_by_2t(x, 1) == MinusElement::scalar(g, 1));
  CHECK_THROWS_AS(divide_by_2t(x, 2), Error);
  try {
    divide_by_2t(x, 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotDivisible);
  }
  // At p = 3, 2 is a unit.
  const auto at3 = divide_by_2t(x.with_ring(BaseRing::padic(3, 20)), 3);
  CHECK(Rational(8) * at3 == MinusElement::scalar(g, 2, BaseRing::padic(3, 20)));
  try {
    minus_project(element(build_group({3}, {0}), {1, 0, 0}));
    FAIL("expected TrivialConjugation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kTrivialConjugation);
  }
}

TEST_CASE("rational coefficients in an integral ring are rejected") {
  auto g = build_group({2}, {1});
  CHECK_THROWS_AS(GroupRingElement(g, BaseRing::integers(), {Rational(1, 2), Rational(0)}), Error);
  // 1/3 is a 2-adic integer.
  CHECK_NOTHROW(GroupRingElement(g, BaseRing::padic(2, 16), {Rational(1, 3), Rational(0)}));
}

TEST_CASE("char_image detects zero divisors") {
  auto g = build_group({4}, {2});
  std::vector<Character> odd;
  for (const auto& chi : list_characters(g))
    if (chi.is_odd()) odd.push_back(chi);
  REQUIRE(is_padic_galois_stable(odd, 5));
  const auto one_minus_c = element(g, {1, 0, -1, 0});
  CHECK(char_image(one_minus_c, odd, 5).nonzerodivisor());
  // Odd characters send the generator to +-i, so they all kill 1 + c.
  const auto one_plus_c = element(g, {1, 0, 1, 0});
  CHECK_FALSE(char_image(one_plus_c, odd, 5).nonzerodivisor());
}
