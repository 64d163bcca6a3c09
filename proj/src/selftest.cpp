#include "brumer/selftest.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "brumer/class_module.hpp"
#include "brumer/errors.hpp"
#include "brumer/fitting.hpp"
#include "brumer/random_objects.hpp"
#include "brumer/ritter_weiss.hpp"
#include "brumer/stickelberger.hpp"
#include "brumer/tor.hpp"

namespace brumer {

namespace {

long pick(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

// S = {inf} u {q | f}, T = one random prime not dividing f.
std::vector<PlaceSpec> random_q_places(const DirichletGroup& d, Rng& rng) {
  std::vector<PlaceSpec> places{DirichletGroup::infinite_place(true, false)};
  for (long q : prime_factors(d.modulus())) places.push_back(d.prime_place(q, true, false));
  static const long kPrimes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43};
  long q = 0;
  do q = kPrimes[pick(rng, 0, 12)];
  while (d.modulus() % q == 0);
  places.push_back(d.prime_place(q, false, true));
  return places;
}

PropertyOutcome property(const std::string& name, long rounds, Rng& rng,
                         const std::function<std::string(Rng&)>& body) {
  PropertyOutcome out;
  out.name = name;
  const auto start = std::chrono::steady_clock::now();
  for (long i = 0; i < rounds; ++i) {
    ++out.cases;
    std::string problem;
    try {
      problem = body(rng);
    } catch (const Error& e) {
      problem = std::string(to_string(e.code())) + ": " + e.what();
    }
    if (!problem.empty()) {
      if (out.failures++ == 0) out.first_failure = problem;
    }
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::string describe(const FiniteAbelianGroup& g) {
  std::ostringstream s;
  s << "G=";
  for (long d : g.invariants()) s << "Z/" << d << ' ';
  s << "c=" << g.conjugation();
  return s.str();
}

}  // namespace

std::vector<PropertyOutcome> run_selftest(std::uint64_t seed, long rounds) {
  Rng rng(seed);
  const auto groups = involution_groups(8);
  auto any_group = [&](Rng& r) { return groups[static_cast<std::size_t>(pick(r, 0, static_cast<long>(groups.size()) - 1))]; };
  std::vector<PropertyOutcome> out;

  out.push_back(property("theta_routes_agree", rounds, rng, [](Rng& r) -> std::string {
    const long f = pick(r, 3, 40);
    if (f % 4 == 2) return {};
    const auto d = DirichletGroup::full(f);
    const auto places = random_q_places(d, r);
    const auto assembled = assemble_theta(d.group(), places, compute_l_value_table(d, places));
    const auto oracle = kubota_oracle_theta(d, places);
    if (assembled.theta == oracle.theta) return {};
    return "f=" + std::to_string(f) + " assembled " + assembled.theta.to_string() + " oracle " + oracle.theta.to_string();
  }));

  out.push_back(property("euler_shift_coherent", rounds, rng, [](Rng& r) -> std::string {
    const long f = pick(r, 3, 40);
    if (f % 4 == 2) return {};
    const auto d = DirichletGroup::full(f);
    auto places = random_q_places(d, r);
    long q = 0;
    do q = pick(r, 2, 60);
    while (!is_prime(q) || f % q == 0 || q == places.back().residue_characteristic);
    const auto mode = pick(r, 0, 1) == 0 ? ShiftMode::kDeplete : ShiftMode::kSmooth;
    const auto added = d.prime_place(q, mode == ShiftMode::kDeplete, mode == ShiftMode::kSmooth);
    const auto table = compute_l_value_table(d, places);
    const auto by_theta = euler_shift(assemble_theta(d.group(), places, table), added, mode);
    const auto by_table = assemble_theta(d.group(), by_theta.places, shift_table(table, d.group(), added, mode));
    if (by_theta.theta == by_table.theta) return {};
    return "f=" + std::to_string(f) + " q=" + std::to_string(q);
  }));

  out.push_back(property("sharp_inverts_characters", rounds, rng, [&](Rng& r) -> std::string {
    const auto g = any_group(r);
    const auto a = random_group_ring_element(g, r, 5);
    for (const auto& chi : list_characters(g))
      if (!(evaluate(chi, a.sharp()) == evaluate(chi.inverse(), a))) return describe(*g) + " a=" + a.to_string();
    return {};
  }));

  out.push_back(property("tor_shift_and_routes", rounds, rng, [&](Rng& r) -> std::string {
    const auto g = any_group(r);
    const auto m = random_finite_module(g, r);
    const auto t1_plus = tor_sign(m, Sign::kPlus, 1).invariants();
    const auto t2_minus = tor_sign(m, Sign::kMinus, 2).invariants();
    if (t1_plus != t2_minus) return describe(*g) + ": Tor_2(-) differs from Tor_1(+)";
    if (tor_sign(m, Sign::kMinus, 2, TorRoute::kFreeResolution).invariants() != t2_minus)
      return describe(*g) + ": resolutions disagree";
    return {};
  }));

  out.push_back(property("class_module_cyclic", std::min(rounds, 4L), rng, [](Rng& r) -> std::string {
    const long n = pick(r, 1, 4);
    const auto g = build_group({n}, {0});
    const auto ext = build_class_module_extension(GModule::trivial(g, {Integer(0)}), Cocycle::carry(g));
    if (!ext.extension.is_exact()) return "n=" + std::to_string(n) + ": extension not exact";
    if (!ext.verdict.is_class_module()) return "n=" + std::to_string(n) + ": not a class module";
    return {};
  }));

  out.push_back(property("divisor_sequence_exact", rounds, rng, [&](Rng& r) -> std::string {
    const auto g = any_group(r);
    const auto places = random_place_configuration(g, r, true);
    const auto report = exactness_and_size_check(build_XY(g, places), places);
    return report.passed() ? std::string{} : describe(*g) + ": X -> Y -> Z check failed";
  }));

  out.push_back(property("fitting_blocks", rounds, rng, [&](Rng& r) -> std::string {
    const auto g = any_group(r);
    const auto a = random_minus_presentation(g, r, static_cast<std::size_t>(pick(r, 1, 3)), 3);
    const auto b = random_minus_presentation(g, r, static_cast<std::size_t>(pick(r, 1, 2)), 3);
    const auto det_a = fitting_ideal(a).gens.front();
    const auto det_b = fitting_ideal(b).gens.front();
    if (!(fitting_ideal(direct_sum(a, b)).gens.front() == det_a * det_b)) return describe(*g) + ": block product";
    const auto tt = jannsen_transpose(jannsen_transpose(a));
    if (tt.relations() != a.relations()) return describe(*g) + ": transpose is not an involution";
    if (!(fitting_ideal(jannsen_transpose(a)).gens.front() == det_a.sharp())) return describe(*g) + ": transpose ideal";
    return {};
  }));

  return out;
}

}  // namespace brumer
