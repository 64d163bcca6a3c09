#include <doctest.h>

#include <random>

#include "brumer/errors.hpp"
#include "brumer/gmodule.hpp"
#include "brumer/group.hpp"
#include "brumer/group_ring.hpp"

using namespace brumer;

namespace {

// Subgroups by exhausting all subsets that contain 0 and are closed under addition.
long count_subgroups_brute_force(const FiniteAbelianGroup& g) {
  const long n = g.order();
  long count = 0;
  for (unsigned long mask = 1; mask < (1UL << n); mask += 2) {
    bool closed = true;
    for (long a = 0; a < n && closed; ++a)
      for (long b = 0; b < n && closed; ++b)
        if ((mask >> a & 1) && (mask >> b & 1) && !(mask >> g.add(a, b) & 1)) closed = false;
    count += closed;
  }
  return count;
}

template <class E>
void check_error(ErrorCode code, E&& expr) {
  try {
    expr();
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

}  // namespace

TEST_CASE("group indexing is mixed radix with the identity at 0") {
  auto g = build_group({4, 2}, {2, 0});
  CHECK(g->order() == 8);
  CHECK(g->exponent() == 4);
  CHECK(g->conjugation() == 2);
  CHECK(g->element(0) == Exponents{0, 0});
  CHECK(g->index(std::vector<long>{3, 1}) == 7);
  CHECK(g->generator(1) == 4);
  CHECK(g->element_order(1) == 4);
  CHECK(g->element_order(4) == 2);
  for (long a = 0; a < 8; ++a) {
    CHECK(g->add(a, g->neg(a)) == 0);
    CHECK(g->multiple(a, 4) == 0);
  }
}

TEST_CASE("build_group rejects bad input") {
  check_error(ErrorCode::kEmptyGroup, [] { build_group({}, {}); });
  check_error(ErrorCode::kNonInvolution, [] { build_group({4}, {1}); });
}

TEST_CASE("subgroup enumeration matches brute force") {
  for (const auto& inv : std::vector<std::vector<long>>{{2}, {4}, {6}, {2, 2}, {4, 2}, {2, 2, 2}, {8}, {3, 3}}) {
    auto g = build_group(inv, std::vector<long>(inv.size(), 0));
    CHECK(static_cast<long>(all_subgroups(*g).size()) == count_subgroups_brute_force(*g));
  }
  auto g = build_group({4, 2}, {0, 0});
  CHECK(all_subgroups(*g).size() == 8);
}

TEST_CASE("subgroups, quotients and embeddings") {
  auto g = build_group({4, 2}, {2, 0});
  const auto h = subgroup_generated_by(*g, std::vector<long>{2});
  CHECK(h.order() == 2);
  CHECK(h.contains(2));
  const auto q = quotient_group(g, h);
  CHECK(q.target->order() == 4);
  CHECK(q.image[2] == 0);
  CHECK_FALSE(q.target->has_conjugation());  // c lies in H
  const auto e = subgroup_structure(g, h);
  CHECK(e.source->order() == 2);
  CHECK(e.source->has_conjugation());
  check_error(ErrorCode::kNotSubgroup, [&] { as_subgroup(*g, std::vector<long>{0, 1}); });
}

TEST_CASE("characters satisfy orthogonality") {
  for (const auto& inv : std::vector<std::vector<long>>{{2}, {6}, {4, 2}, {3, 3}}) {
    std::vector<long> c(inv.size(), 0);
    if (inv[0] % 2 == 0) c[0] = inv[0] / 2;
    auto g = build_group(inv, c);
    const auto chars = list_characters(g);
    REQUIRE(static_cast<long>(chars.size()) == g->order());
    const auto norm = GroupRingElement::norm(g, subgroup_generated_by(*g, std::vector<long>{}), BaseRing::integers());
    const auto sum_all = GroupRingElement::norm(g, as_subgroup(*g, [&] {
      std::vector<long> all(static_cast<std::size_t>(g->order()));
      for (long i = 0; i < g->order(); ++i) all[static_cast<std::size_t>(i)] = i;
      return all;
    }()));
    long odd = 0;
    for (std::size_t i = 0; i < chars.size(); ++i) {
      CHECK(chars[i].index() == static_cast<long>(i));
      const auto s = evaluate(chars[i], sum_all);
      CHECK(s == CyclotomicRational::constant(g->exponent(), chars[i].is_trivial() ? g->order() : 0));
      CHECK(evaluate(chars[i], norm) == CyclotomicRational::constant(g->exponent(), 1));
      odd += chars[i].is_odd();
      CHECK(chars[i].power(chars[i].order()).is_trivial());
    }
    CHECK(odd == (g->has_conjugation() ? g->order() / 2 : 0));
  }
}

TEST_CASE("module actions are checked") {
  auto g = build_group({2}, {1});
  // Z/8 with c acting by 3 is a module; by 2 it is not (2 is not invertible mod 8).
  CHECK_NOTHROW(GModule(g, 1, IntMatrix::from_rows({{8}}, 1), {IntMatrix::from_rows({{3}}, 1)}));
  check_error(ErrorCode::kActionMismatch,
              [&] { GModule(g, 1, IntMatrix::from_rows({{8}}, 1), {IntMatrix::from_rows({{2}}, 1)}); });
  // c acting by 5 on Z/8 has order 2; by 3 on Z/7 has order 6, not dividing 2.
  check_error(ErrorCode::kActionMismatch,
              [&] { GModule(g, 1, IntMatrix::from_rows({{7}}, 1), {IntMatrix::from_rows({{3}}, 1)}); });
}

TEST_CASE("regular module: traces, fixed points, sign parts") {
  auto g = build_group({4, 2}, {2, 0});
  auto r = GModule::regular(g);
  CHECK(r.rational_trace(0) == 8);
  for (long a = 1; a < 8; ++a) CHECK(r.rational_trace(a) == 0);
  CHECK(r.fixed_points().invariants() == std::vector<Integer>{0});
  CHECK(r.minus_part().underlying().invariants() == std::vector<Integer>(4, 0));
  CHECK(r.plus_part().underlying().invariants() == std::vector<Integer>(4, 0));
  auto z2 = GModule::regular(build_group({2}, {1}));
  CHECK(z2.minus_part().underlying().invariants() == std::vector<Integer>{0});
  // Z with c = -1: M_- = Z/2, M_+ = Z.
  auto sign = GModule::twisted(build_group({2}, {1}), {Integer(0)}, std::vector<long>{-1});
  CHECK(sign.minus_part().underlying().invariants() == std::vector<Integer>{0});
  CHECK(sign.plus_part().underlying().invariants() == std::vector<Integer>{2});
}

TEST_CASE("direct sums, induction and permutation modules") {
  auto g = build_group({6}, {3});
  auto a = GModule::trivial(g, {Integer(4)});
  auto b = GModule::twisted(g, {Integer(9)}, std::vector<long>{-1});
  CHECK(direct_sum(a, b).order() == 36);
  const auto trivial_sub = subgroup_generated_by(*g, std::vector<long>{});
  const auto ind = induce(GModule::trivial(subgroup_structure(g, trivial_sub).source, {Integer(0)}), g,
                          subgroup_structure(g, trivial_sub));
  CHECK(ind.dim() == 6);
  CHECK(ind.rational_trace(0) == 6);
  CHECK(ind.rational_trace(1) == 0);
  const auto h = subgroup_generated_by(*g, std::vector<long>{2});
  const auto perm = GModule::permutation(g, h);
  CHECK(perm.dim() == 2);
  CHECK(perm.rational_trace(2) == 2);
  CHECK(perm.rational_trace(3) == 0);
}

TEST_CASE("coinvariants and inflation") {
  auto g = build_group({4}, {2});
  const auto h = subgroup_generated_by(*g, std::vector<long>{2});
  const auto q = quotient_group(g, h);
  const auto coinv = GModule::regular(g).coinvariants(h, q);
  CHECK(coinv.underlying().invariants() == std::vector<Integer>(2, 0));
  const auto inflated = GModule::regular(q.target).inflate(q, g);
  CHECK(inflated.rational_trace(2) == 2);
}

TEST_CASE("minus presentation of a module recovers its order") {
  auto g = build_group({4}, {2});
  for (long n : {3L, 5L, 8L}) {
    auto m = GModule::twisted(g, {Integer(n)}, std::vector<long>{n - 1});
    const auto p = module_presentation(m);
    CHECK(presented_module(p).order() == m.order());
    const auto pm = minus_presentation(m);
    CHECK(presented_module(pm).order() == m.minus_part().order());
  }
}
