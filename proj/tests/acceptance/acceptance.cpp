// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any line fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "brumer/class_module.hpp"
#include "brumer/cohomology.hpp"
#include "brumer/errors.hpp"
#include "brumer/fitting.hpp"
#include "brumer/random_objects.hpp"
#include "brumer/ritter_weiss.hpp"
#include "brumer/stickelberger.hpp"
#include "brumer/tor.hpp"
#include "brumer/verifier.hpp"

using namespace brumer;

namespace {

// Wall-clock limits in seconds, one per criterion.
constexpr double kLimitLValues = 1.0;
constexpr double kLimitAssembly = 1.0;
constexpr double kLimitIntegrality = 60.0;
constexpr double kLimitShifts = 30.0;
constexpr double kLimitTor = 120.0;
constexpr double kLimitClassModule = 60.0;
constexpr double kLimitDuality = 120.0;
constexpr double kLimitDivisors = 60.0;
constexpr double kLimitFitting = 120.0;
constexpr double kLimitFixture = 5.0;

constexpr long kFittingPrecision = 64;
constexpr long kFittingGuard = 8;

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void run(int number, const char* name, double limit, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const Error& e) {
    out = {false, std::string("unexpected error ") + std::string(to_string(e.code())) + ": " + e.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = seconds < limit;
  const bool passed = out.ok && in_time;
  if (!passed) ++failures;
  std::printf("C%-2d %s %-22s %.2fs (limit %.0fs)%s  %s\n", number, passed ? "PASS" : "FAIL", name, seconds, limit,
              in_time ? "" : " TIMEOUT", out.detail.c_str());
  std::fflush(stdout);
}

long gcd_long(long a, long b) { return std::gcd(a, b); }

bool is_conductor_of_cm_field(long f) { return f >= 3 && f % 4 != 2; }

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

// Partial-zeta oracle: L(chi, 0) = sum_{a mod f, (a, f) = 1} (1/2 - a/f) chi(a), for chi primitive mod f.
CyclotomicRational partial_zeta_l_value(const DirichletGroup& d, const Character& chi) {
  const long f = d.modulus();
  const long m = d.group()->exponent();
  CyclotomicRational acc(m);
  for (long a = 1; a < f; ++a)
    if (gcd_long(a, f) == 1)
      acc += CyclotomicRational::root_of_unity(m, chi.value_exponent(d.element_of(a))) * (Rational(1, 2) - Rational(a, f));
  return acc;
}

// chi is primitive mod f iff it is nontrivial on {a = 1 mod f/p} for every p | f.
bool primitive_by_definition(const DirichletGroup& d, const Character& chi) {
  const long f = d.modulus();
  for (long p : prime_factors(f)) {
    bool trivial = true;
    for (long a = 1; a < f && trivial; ++a)
      if (gcd_long(a, f) == 1 && (a - 1) % (f / p) == 0 && chi.value_exponent(d.element_of(a)) != 0) trivial = false;
    if (trivial) return false;
  }
  return true;
}

const Character* odd_quadratic(const std::vector<Character>& chars) {
  for (const auto& chi : chars)
    if (chi.is_odd() && chi.order() == 2) return &chi;
  return nullptr;
}

std::vector<PlaceSpec> base_places(const DirichletGroup& d) {
  std::vector<PlaceSpec> places{DirichletGroup::infinite_place(true, false)};
  for (long q : prime_factors(d.modulus())) places.push_back(d.prime_place(q, true, false));
  return places;
}

bool has_integral_coefficients(const GroupRingElement& x) {
  for (long g = 0; g < x.group()->order(); ++g)
    if (x.coefficient(g).get_den() != 1) return false;
  return true;
}

const std::vector<long> kSmallPrimes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59};

Outcome l_values() {
  Outcome out;
  const auto d3 = DirichletGroup::full(3);
  const auto d4 = DirichletGroup::full(4);
  const auto c3 = list_characters(d3.group());
  const auto c4 = list_characters(d4.group());
  const Character* chi3 = odd_quadratic(c3);
  const Character* chi4 = odd_quadratic(c4);
  if (!chi3 || !chi4) return {false, "no odd quadratic character"};
  out.ok = l_value_bernoulli(d3, *chi3) == CyclotomicRational::constant(2, Rational(1, 3)) &&
           l_value_bernoulli(d4, *chi4) == CyclotomicRational::constant(2, Rational(1, 2));
  long compared = 0, mismatches = 0;
  for (long f = 3; f <= 40; ++f) {
    const auto d = DirichletGroup::full(f);
    for (const auto& chi : list_characters(d.group())) {
      if (!chi.is_odd() || !primitive_by_definition(d, chi)) continue;
      ++compared;
      if (!(l_value_bernoulli(d, chi) == partial_zeta_l_value(d, chi))) ++mismatches;
    }
  }
  out.ok = out.ok && mismatches == 0 && compared > 0;
  out.detail = "L(chi_3,0)=1/3, L(chi_4,0)=1/2; oracle compared " + std::to_string(compared) + " primitive odd characters, " +
               std::to_string(mismatches) + " mismatches";
  return out;
}

Outcome assembly() {
  const auto d = DirichletGroup::full(3);
  auto places = base_places(d);
  places.push_back(d.prime_place(5, false, true));
  const auto assembled = assemble_theta(d.group(), places, compute_l_value_table(d, places));
  const auto oracle = kubota_oracle_theta(d, places);
  const auto& g = d.group();
  const auto expected = GroupRingElement::scalar(g, 1, BaseRing::rationals()) -
                        GroupRingElement::basis(g, g->conjugation(), BaseRing::rationals());
  const bool ok = assembled.theta.with_ring(BaseRing::rationals()) == expected &&
                  oracle.theta.with_ring(BaseRing::rationals()) == expected && assembled.deligne_ribet;
  return {ok, "Theta = " + assembled.theta.to_string() + " (oracle " + oracle.theta.to_string() + "), DR flag " +
                  (assembled.deligne_ribet ? "true" : "false")};
}

Outcome integrality() {
  std::mt19937_64 rng(2024);
  long cases = 0, dr_cases = 0, violations = 0, route_mismatches = 0;
  for (long f = 3; f <= 60; ++f) {
    if (!is_conductor_of_cm_field(f)) continue;
    const auto d = DirichletGroup::full(f);
    const auto base = base_places(d);
    const auto base_table = compute_l_value_table(d, base);
    std::vector<long> admissible;
    for (long q : kSmallPrimes)
      if (f % q != 0) admissible.push_back(q);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<long> pool = admissible;
      std::shuffle(pool.begin(), pool.end(), rng);
      const std::size_t size = 1 + rng() % 3;
      auto places = base;
      auto table = base_table;
      for (std::size_t k = 0; k < size && k < pool.size(); ++k) {
        const PlaceSpec q = d.prime_place(pool[k], false, true);
        table = shift_table(table, d.group(), q, ShiftMode::kSmooth);
        places.push_back(q);
      }
      const auto theta = assemble_theta(d.group(), places, table);
      ++cases;
      if (!(theta.theta == kubota_oracle_theta(d, places).theta)) ++route_mismatches;
      if (!deligne_ribet_condition(places, 1)) continue;
      ++dr_cases;
      if (!has_integral_coefficients(theta.theta.with_ring(BaseRing::rationals()))) ++violations;
    }
  }
  return {violations == 0 && route_mismatches == 0 && dr_cases > 0,
          std::to_string(cases) + " (f, T) pairs, " + std::to_string(dr_cases) + " under the condition, " +
              std::to_string(violations) + " non-integral, " + std::to_string(route_mismatches) + " route mismatches"};
}

Outcome shifts() {
  std::mt19937_64 rng(77);
  long theta_mismatches = 0;
  for (int trial = 0; trial < 200; ++trial) {
    long f = 3 + static_cast<long>(rng() % 43);
    while (!is_conductor_of_cm_field(f)) ++f;
    const auto d = DirichletGroup::full(f);
    std::vector<long> free_primes;
    for (long q : kSmallPrimes)
      if (f % q != 0) free_primes.push_back(q);
    std::shuffle(free_primes.begin(), free_primes.end(), rng);
    auto places = base_places(d);
    places.push_back(d.prime_place(free_primes[0], false, true));
    const auto table = compute_l_value_table(d, places);
    const auto theta = assemble_theta(d.group(), places, table);
    const ShiftMode mode = rng() % 2 ? ShiftMode::kDeplete : ShiftMode::kSmooth;
    const PlaceSpec added = d.prime_place(free_primes[1], mode == ShiftMode::kDeplete, mode == ShiftMode::kSmooth);
    const auto at_theta = euler_shift(theta, added, mode);
    const auto at_table = assemble_theta(d.group(), at_theta.places, shift_table(table, d.group(), added, mode));
    if (!(at_theta.theta == at_table.theta)) ++theta_mismatches;
  }

  Rng prng(78);
  const auto groups = involution_groups(8);
  long block_mismatches = 0, blocks = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto& g = groups[static_cast<std::size_t>(trial) % groups.size()];
    const auto p = random_minus_presentation(g, prng, 1 + static_cast<std::size_t>(trial % 3), 3);
    const long sigma = static_cast<long>(prng() % static_cast<std::uint64_t>(g->order()));
    const long norm = kSmallPrimes[prng() % kSmallPrimes.size()];
    const SetChange change = std::array{SetChange::kArchimedeanToT, SetChange::kDeplete, SetChange::kSmooth}[trial % 3];
    const auto factor = minus_project(shift_factor(g, change, sigma, norm));
    ++blocks;
    if (!(fitting_ideal(shift_presentation(p, factor)).gens.front() == fitting_ideal(p).gens.front() * factor))
      ++block_mismatches;
  }
  return {theta_mismatches == 0 && block_mismatches == 0,
          "200 Theta/table shifts: " + std::to_string(theta_mismatches) + " mismatches; " + std::to_string(blocks) +
              " Fitting blocks: " + std::to_string(block_mismatches) + " mismatches"};
}

Outcome tor_sign_parts() {
  Rng rng(12345);
  const auto groups = involution_groups(16);
  long modules = 0, lemma_mismatches = 0, shift_mismatches = 0, route_mismatches = 0, instance_failures = 0;
  for (const auto& g : groups) {
    const auto z = GModule::trivial(g, {Integer(0)});
    for (auto route : {TorRoute::kPeriodic, TorRoute::kFreeResolution})
      if (tor_sign(z, Sign::kMinus, 2, route).invariants() != std::vector<Integer>{2}) ++instance_failures;
    for (int trial = 0; trial < 50; ++trial) {
      const auto m = random_finite_module(g, rng);
      ++modules;
      const auto minus1 = tor_sign(m, Sign::kMinus, 1).invariants();
      const auto plus1 = tor_sign(m, Sign::kPlus, 1).invariants();
      const auto minus2 = tor_sign(m, Sign::kMinus, 2).invariants();
      if (minus1 != sign_part_torsion(m, Sign::kPlus).invariants() || plus1 != sign_part_torsion(m, Sign::kMinus).invariants())
        ++lemma_mismatches;
      if (minus2 != plus1) ++shift_mismatches;
      if (tor_sign(m, Sign::kMinus, 1, TorRoute::kFreeResolution).invariants() != minus1 ||
          tor_sign(m, Sign::kPlus, 1, TorRoute::kFreeResolution).invariants() != plus1 ||
          tor_sign(m, Sign::kMinus, 2, TorRoute::kFreeResolution).invariants() != minus2)
        ++route_mismatches;
    }
  }
  std::ostringstream s;
  s << groups.size() << " groups, " << modules << " modules: Tor_1 vs sign-part 2-torsion " << lemma_mismatches
    << " mismatches; degree shift " << shift_mismatches << "; routes " << route_mismatches
    << "; Tor_2(Z, Z[G]_-) = Z/2 failures " << instance_failures;
  return {lemma_mismatches == 0 && shift_mismatches == 0 && route_mismatches == 0 && instance_failures == 0, s.str()};
}

Outcome class_modules() {
  long bad = 0;
  std::string first;
  for (long n = 1; n <= 8; ++n) {
    const auto g = build_group({n}, {0});
    const auto ext = build_class_module_extension(GModule::trivial(g, {Integer(0)}), Cocycle::carry(g));
    const auto& v = ext.verdict;
    const std::vector<Integer> cyclic_n = n == 1 ? std::vector<Integer>{} : std::vector<Integer>{Integer(n)};
    bool cup_ok = true;
    for (const auto& cup : cup_product_check(ext)) cup_ok = cup_ok && cup.ok();
    const bool ok = v.h1_vanishes && v.h2_invariants == cyclic_n && v.cohomologically_trivial() && v.gamma_generates && cup_ok;
    if (!ok) {
      ++bad;
      if (first.empty()) first = " (first failure n = " + std::to_string(n) + ")";
    }
  }
  return {bad == 0, "Z/n for n = 1..8 with the carry cocycle: " + std::to_string(bad) + " failures" + first};
}

Outcome duality() {
  long checked = 0, bad = 0;
  for (long n : {2L, 4L, 6L, 8L}) {
    const auto g = build_group({n}, {0});
    const auto ext = build_class_module_extension(GModule::trivial(g, {Integer(0)}), Cocycle::carry(g));
    for (const auto& h : all_subgroups(*g)) {
      const auto q = quotient_group(g, h);
      for (long a : {2L, 3L, 4L}) {
        for (long sign : {1L, -1L}) {
          // The generator of G/H acts by `sign`; that is an action only when |G/H| is even or the sign is +1.
          if (sign == -1 && q.target->order() % 2 != 0) continue;
          const auto coeffs = GModule::twisted(q.target, {Integer(a)}, std::vector<long>(q.target->rank(), sign));
          ++checked;
          if (!duality_check(ext, h, coeffs).passed()) ++bad;
        }
      }
    }
  }
  return {bad == 0 && checked > 0, std::to_string(checked) + " (G, H, A) triples: " + std::to_string(bad) + " failures"};
}

Outcome divisor_modules() {
  Rng rng(777);
  const auto groups = involution_groups(16);
  long exact = 0, tor_cases = 0, tor_ok = 0, size_cases = 0, size_ok = 0;
  constexpr long kConfigurations = 500;
  for (long i = 0; i < kConfigurations; ++i) {
    const auto& g = groups[rng() % groups.size()];
    const auto places = random_place_configuration(g, rng, true);
    const auto dm = build_XY(g, places);
    const auto r = exactness_and_size_check(dm, places);
    exact += r.exact;
    if (r.hypothesis && r.assumption_a) {
      ++tor_cases;
      tor_ok += r.tor1_minus.empty() && r.minus_sequence_exact;
    }
    if (r.size_formula_applies) {
      ++size_cases;
      size_ok += r.x_minus_order == r.predicted_order && r.presented_order == r.predicted_order;
    }
  }
  std::ostringstream s;
  s << kConfigurations << " configurations: exact " << exact << "; Tor_1 vanishing " << tor_ok << "/" << tor_cases
    << "; size formula " << size_ok << "/" << size_cases;
  return {exact == kConfigurations && tor_ok == tor_cases && size_ok == size_cases && tor_cases > 0 && size_cases > 0,
          s.str()};
}

Outcome fitting_toolkit() {
  Rng rng(9);
  const auto groups = involution_groups(8);
  long block = 0, transpose = 0, size = 0;
  constexpr long kPresentations = 300;
  for (long i = 0; i < kPresentations; ++i) {
    const auto& g = groups[static_cast<std::size_t>(i) % groups.size()];
    const Integer prime = i % 2 == 0 ? 2 : 3;
    const auto a = random_minus_presentation(g, rng, 1 + static_cast<std::size_t>(i % 3), 3);
    const auto b = random_minus_presentation(g, rng, 1 + static_cast<std::size_t>((i / 3) % 2), 3);
    const auto fa = fitting_ideal(a).gens.front();
    if (!(fitting_ideal(direct_sum(a, b)).gens.front() == fa * fitting_ideal(b).gens.front())) ++block;
    const auto t = jannsen_transpose(a);
    if (!(jannsen_transpose(t).relations() == a.relations()) || !(fitting_ideal(t).gens.front() == fa.sharp())) ++transpose;
    const Integer order = presented_module(a).order();
    const auto predicted = module_size(fa, odd_characters(g), prime, kFittingPrecision, kFittingGuard);
    const bool agree = order == 0 ? !predicted.finite : predicted.finite && predicted.size == p_part(order, prime);
    if (!agree) ++size;
  }
  std::ostringstream s;
  s << kPresentations << " presentations, p in {2, 3}: block " << block << ", transpose " << transpose << ", size " << size
    << " mismatches";
  return {block == 0 && transpose == 0 && size == 0, s.str()};
}

Outcome fixture() {
  const std::string dir = BRUMER_FIXTURE_DIR;
  const Report good = verify_case(load_case(dir + "/q_zeta3_T5.case"));
  const Report bad = verify_case(load_case(dir + "/q_zeta3_T5_zeroed.case"));
  const auto* bs = good.find("brumer_stark");
  const auto* ann = good.find("annihilation");
  const auto* neg = bad.find("brumer_stark");
  const bool ok = bs && ann && neg && bs->verdict == Verdict::kPass && ann->verdict == Verdict::kPass &&
                  neg->verdict == Verdict::kFail && neg->error == ErrorCode::kCharacterIdentityFails;
  return {ok, std::string("brumer_stark ") + (bs ? std::string(to_string(bs->verdict)) : "missing") + ", annihilation " +
                  (ann ? std::string(to_string(ann->verdict)) : "missing") + ", negative control " +
                  (neg && neg->error ? std::string(to_string(*neg->error)) : "no error")};
}

}  // namespace

int main() {
  run(1, "l-values", kLimitLValues, l_values);
  run(2, "stickelberger-f3", kLimitAssembly, assembly);
  run(3, "integrality-sweep", kLimitIntegrality, integrality);
  run(4, "euler-shifts", kLimitShifts, shifts);
  run(5, "tor-sign-parts", kLimitTor, tor_sign_parts);
  run(6, "class-modules", kLimitClassModule, class_modules);
  run(7, "duality", kLimitDuality, duality);
  run(8, "divisor-modules", kLimitDivisors, divisor_modules);
  run(9, "fitting-toolkit", kLimitFitting, fitting_toolkit);
  run(10, "fixture", kLimitFixture, fixture);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
