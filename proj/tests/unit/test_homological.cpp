#include <doctest.h>

#include "brumer/class_module.hpp"
#include "brumer/cohomology.hpp"
#include "brumer/errors.hpp"
#include "brumer/random_objects.hpp"
#include "brumer/tor.hpp"

using namespace brumer;

namespace {

using Invariants = std::vector<Integer>;

GroupPtr cyclic(long n, bool with_c = false) { return build_group({n}, {with_c ? n / 2 : 0}); }

}  // namespace

TEST_CASE("cohomology of Z/n with trivial coefficients") {
  for (long n = 2; n <= 6; ++n) {
    const auto z = GModule::trivial(cyclic(n), {Integer(0)});
    CHECK(cohomology_group(z, 0).invariants() == Invariants{0});
    CHECK(cohomology_group(z, 1).is_trivial());
    CHECK(cohomology_group(z, 2).invariants() == Invariants{Integer(n)});
    CHECK(homology_group(z, 1).invariants() == Invariants{Integer(n)});
    CHECK(tate_group(z, 0).invariants() == Invariants{Integer(n)});
    CHECK(tate_group(z, -1).is_trivial());
    CHECK(tate_group(z, -2).invariants() == Invariants{Integer(n)});
  }
}

TEST_CASE("bar and product resolutions agree") {
  // Bar cochains grow like |G|^degree, so this stays with small groups.
  Rng rng(40);
  for (const auto& g : involution_groups(4)) {
    for (int trial = 0; trial < 3; ++trial) {
      const auto m = random_finite_module(g, rng);
      for (int degree = 0; degree <= 2; ++degree)
        CHECK(cohomology_group(m, degree, Resolution::kBar).invariants() ==
              cohomology_group(m, degree, Resolution::kProduct).invariants());
    }
  }
}

TEST_CASE("Tate cohomology: periodicity for cyclic groups, vanishing on induced modules") {
  Rng rng(41);
  for (long n : {2L, 3L, 4L, 6L}) {
    const auto g = cyclic(n, n % 2 == 0);
    const auto m = random_finite_module(g, rng);
    for (int degree = -2; degree <= 1; ++degree)
      CHECK(tate_group(m, degree).invariants() == tate_group(m, degree + 2).invariants());
    const auto regular = GModule::regular(g);
    for (int degree = -2; degree <= 2; ++degree) CHECK(tate_group(regular, degree).is_trivial());
  }
  // H_1(G, Z) = G for a non-cyclic group.
  const auto g = build_group({2, 2}, {1, 0});
  CHECK(homology_group(GModule::trivial(g, {Integer(0)}), 1).invariants() == Invariants{2, 2});
}

TEST_CASE("Tor with Z[G]_- for trivial coefficients") {
  const auto g = cyclic(2, true);
  const auto z = GModule::trivial(g, {Integer(0)});
  CHECK(tor_sign(z, Sign::kMinus, 2).invariants() == Invariants{2});
  CHECK(tor_sign(z, Sign::kMinus, 2, TorRoute::kFreeResolution).invariants() == Invariants{2});
  CHECK(tor_sign(z, Sign::kMinus, 1).is_trivial());
  CHECK(tor_sign(z, Sign::kPlus, 1).invariants() == Invariants{2});
  try {
    tor_sign(GModule::trivial(cyclic(3), {Integer(0)}), Sign::kMinus, 1);
    FAIL("expected TrivialConjugation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kTrivialConjugation);
  }
}

TEST_CASE("Tor_1 against sign-part torsion when c acts by +-1") {
  for (const auto& g : involution_groups(8)) {
    for (long n : {2L, 4L, 6L, 8L}) {
      for (long sign : {1L, -1L}) {
        // Generators of even order act by `sign`; keep the cases where c then acts by `sign`.
        std::vector<long> mult(g->rank(), 1);
        for (std::size_t i = 0; i < g->rank(); ++i)
          if (g->invariants()[i] % 2 == 0) mult[i] = sign;
        const auto m = GModule::twisted(g, {Integer(n)}, mult);
        const auto c_action = m.action(g->conjugation())(0, 0);
        if (mod_floor(c_action - sign, n) != 0) continue;
        CHECK(tor_sign(m, Sign::kMinus, 1).invariants() == sign_part_torsion(m, Sign::kPlus).invariants());
        CHECK(tor_sign(m, Sign::kPlus, 1).invariants() == sign_part_torsion(m, Sign::kMinus).invariants());
      }
    }
  }
}

TEST_CASE("Z/8 with c acting by 3: Tor_1 vanishes but M_+[2] does not") {
  const auto g = cyclic(2, true);
  const auto m = GModule::twisted(g, {Integer(8)}, std::vector<long>{3});
  CHECK(tor_sign(m, Sign::kMinus, 1).is_trivial());
  CHECK(sign_part_torsion(m, Sign::kPlus).invariants() == Invariants{2});
  // The degree shift still holds.
  CHECK(tor_sign(m, Sign::kMinus, 2).invariants() == tor_sign(m, Sign::kPlus, 1).invariants());
}

TEST_CASE("Tor degree shift and route agreement on random modules") {
  Rng rng(42);
  for (const auto& g : involution_groups(12)) {
    for (int trial = 0; trial < 4; ++trial) {
      const auto m = random_finite_module(g, rng);
      const auto t1p = tor_sign(m, Sign::kPlus, 1).invariants();
      CHECK(tor_sign(m, Sign::kMinus, 2).invariants() == t1p);
      CHECK(tor_sign(m, Sign::kPlus, 1, TorRoute::kFreeResolution).invariants() == t1p);
      CHECK(tor_sign(m, Sign::kMinus, 1, TorRoute::kFreeResolution).invariants() ==
            tor_sign(m, Sign::kMinus, 1).invariants());
    }
  }
}

TEST_CASE("carry cocycle makes Z a class module for Z/n") {
  for (long n = 1; n <= 8; ++n) {
    const auto g = cyclic(n);
    const auto z = GModule::trivial(g, {Integer(0)});
    const auto ext = build_class_module_extension(z, Cocycle::carry(g));
    CHECK(ext.extension.is_exact());
    CHECK(ext.verdict.h1_vanishes);
    CHECK(ext.verdict.h2_invariants == (n == 1 ? Invariants{} : Invariants{Integer(n)}));
    CHECK(ext.verdict.is_class_module());
    if (n > 1) {
      CHECK(reciprocity(ext, IntVector{1}) == g->generator(0));
      const auto report = reciprocity_report(ext);
      CHECK(report.bijective_on_h0());
      for (const auto& cup : cup_product_check(ext)) CHECK(cup.ok());
      const auto zero = build_class_module_extension(z, Cocycle::zero(g, 1));
      CHECK_FALSE(zero.verdict.is_class_module());
    }
  }
}

TEST_CASE("cocycle validation") {
  const auto g = cyclic(3);
  const auto z = GModule::trivial(g, {Integer(0)});
  std::vector<IntVector> values(9, IntVector{0});
  values[1 * 3 + 1] = IntVector{1};  // f(1, 1) = 1 only: not a cocycle
  try {
    check_cocycle(z, Cocycle(g, 1, values));
    FAIL("expected NotCocycle");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotCocycle);
  }
  const auto normalized = normalize(z, Cocycle::carry(g));
  for (long a = 0; a < 3; ++a) {
    CHECK(normalized(0, a) == IntVector{0});
    CHECK(normalized(a, 0) == IntVector{0});
  }
}

TEST_CASE("restriction to subgroups keeps the class module") {
  const auto g = cyclic(8);
  const auto ext = build_class_module_extension(GModule::trivial(g, {Integer(0)}), Cocycle::carry(g));
  for (const auto& h : all_subgroups(*g)) {
    const auto restricted = restrict_class_module(ext, h);
    CHECK(restricted.verdict.is_class_module());
    CHECK(restricted.verdict.gamma_order == h.order());
  }
}

TEST_CASE("duality for Z/4 and all subgroups") {
  const auto g = cyclic(4);
  const auto ext = build_class_module_extension(GModule::trivial(g, {Integer(0)}), Cocycle::carry(g));
  for (const auto& h : all_subgroups(*g)) {
    const auto q = quotient_group(g, h);
    for (long n : {2L, 3L}) {
      const auto a = GModule::trivial(q.target, {Integer(n)});
      CHECK(duality_check(ext, h, a).passed());
    }
  }
}
