#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "brumer/cohomology.hpp"
#include "brumer/errors.hpp"
#include "brumer/gmodule.hpp"
#include "brumer/selftest.hpp"
#include "brumer/stickelberger.hpp"
#include "brumer/verifier.hpp"

using namespace brumer;

namespace {

struct Outcome {
  int exit_code = kExitPass;
  std::string text;
};

std::string validation_failure(const std::string& path, const Error& e, bool json) {
  if (json) {
    nlohmann::json j;
    j["case"] = path;
    j["exit_code"] = kExitValidation;
    j["error"] = std::string(to_string(e.code()));
    j["message"] = e.what();
    return j.dump(2) + "\n";
  }
  return "case " + path + "\n  validation error [" + std::string(to_string(e.code())) + "] " + e.what() +
         "\n  exit code " + std::to_string(kExitValidation) + "\n";
}

Outcome verify_one(const std::string& path, const VerifyOptions& opts, bool strict, bool json) {
  CaseFile c;
  try {
    c = load_case(path, strict);
  } catch (const Error& e) {
    return {kExitValidation, validation_failure(path, e, json)};
  } catch (const std::exception& e) {
    return {kExitValidation, validation_failure(path, Error(ErrorCode::kSchemaError, e.what()), json)};
  }
  const Report r = verify_case(c, opts);
  return {r.exit_code(), json ? r.to_json() : r.to_text()};
}

int run_verify(const std::vector<std::string>& files, const std::string& format, std::optional<long> prime,
               std::optional<long> precision, bool strict) {
  VerifyOptions opts;
  if (prime) opts.prime = Integer(*prime);
  opts.precision = precision;
  const bool json = format == "json";
  // Each file is verified on its own thread; output keeps the command-line order.
  std::vector<std::future<Outcome>> jobs;
  for (const auto& f : files) jobs.push_back(std::async(std::launch::async, verify_one, f, opts, strict, json));
  int worst = kExitPass;
  if (json && files.size() > 1) std::cout << "[\n";
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    Outcome o = jobs[i].get();
    worst = std::max(worst, o.exit_code);
    if (json && files.size() > 1) {
      while (!o.text.empty() && o.text.back() == '\n') o.text.pop_back();
      std::cout << o.text << (i + 1 < jobs.size() ? ",\n" : "\n");
    } else {
      std::cout << o.text;
    }
  }
  if (json && files.size() > 1) std::cout << "]\n";
  return worst;
}

int run_theta(long conductor, const std::vector<long>& deplete, const std::vector<long>& smooth) {
  const auto d = DirichletGroup::full(conductor);
  std::vector<PlaceSpec> places{DirichletGroup::infinite_place(true, false)};
  for (long q : prime_factors(conductor)) places.push_back(d.prime_place(q, true, false));
  for (long q : deplete)
    if (conductor % q != 0) places.push_back(d.prime_place(q, true, false));
  for (long q : smooth) places.push_back(d.prime_place(q, false, true));
  check_disjoint(places);

  const auto assembled = assemble_theta(d.group(), places, compute_l_value_table(d, places));
  const auto oracle = kubota_oracle_theta(d, places);
  std::cout << "conductor " << conductor << ", G = (Z/" << conductor << ")^* with invariants [";
  for (std::size_t i = 0; i < d.group()->invariants().size(); ++i)
    std::cout << (i ? "," : "") << d.group()->invariants()[i];
  std::cout << "]\n";
  std::cout << "S =";
  for (const auto& v : places)
    if (v.in_s) std::cout << ' ' << v.label;
  std::cout << "\nT =";
  for (const auto& v : places)
    if (v.in_t) std::cout << ' ' << v.label;
  std::cout << "\nelement basis: index -> residue\n";
  for (long a = 1; a < conductor; ++a)
    if (d.element_of(a) >= 0) std::cout << "  " << d.element_of(a) << " -> " << a << "\n";
  std::cout << "theta (character assembly) = " << assembled.theta.to_string() << "\n";
  std::cout << "theta (partial zeta)       = " << oracle.theta.to_string() << "\n";
  const bool agree = assembled.theta == oracle.theta;
  std::cout << "routes agree: " << (agree ? "yes" : "no") << "\n";
  std::cout << "Deligne-Ribet condition: " << (assembled.deligne_ribet ? "holds" : "does not hold") << "\n";
  std::cout << "integral: " << (assembled.integral ? "yes" : "no") << "\n";
  return agree ? kExitPass : kExitFail;
}

std::vector<long> parse_longs(const std::string& text) {
  std::vector<long> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(std::stol(item));
  return out;
}

// trivial:d | regular | twisted:d:m1,m2,...  (d = 0 means Z)
GModule parse_module(const GroupPtr& g, const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ':')) parts.push_back(item);
  if (parts.empty()) fail(ErrorCode::kInvalidArgument, "empty module description");
  if (parts[0] == "regular" && parts.size() == 1) return GModule::regular(g);
  if (parts[0] == "trivial" && parts.size() == 2) return GModule::trivial(g, {Integer(std::stol(parts[1]))});
  if (parts[0] == "twisted" && parts.size() == 3) {
    const auto mult = parse_longs(parts[2]);
    if (mult.size() != g->rank()) fail(ErrorCode::kInvalidArgument, "need one multiplier per cyclic factor");
    return GModule::twisted(g, {Integer(std::stol(parts[1]))}, mult);
  }
  fail(ErrorCode::kInvalidArgument, "unknown module description '" + spec + "'");
}

int run_cohomology(const std::string& group_text, const std::string& c_text, const std::string& module_text,
                   int degree, const std::string& kind) {
  const auto invariants = parse_longs(group_text);
  auto c = parse_longs(c_text);
  if (c.empty()) c.assign(invariants.size(), 0);
  const GroupPtr g = build_group(invariants, c);
  const GModule m = parse_module(g, module_text);
  Subquotient result = kind == "tate"       ? tate_group(m, degree)
                       : kind == "homology" ? homology_group(m, degree)
                                            : cohomology_group(m, degree, Resolution::kProduct);
  std::cout << kind << " degree " << degree << ": ";
  if (result.is_trivial()) {
    std::cout << "0\n";
    return kExitPass;
  }
  for (std::size_t i = 0; i < result.invariants().size(); ++i) {
    const auto& d = result.invariants()[i];
    std::cout << (i ? " + " : "") << (d == 0 ? std::string("Z") : "Z/" + d.get_str());
  }
  std::cout << "\n";
  return kExitPass;
}

int run_selftest_command(std::uint64_t seed, long rounds) {
  bool ok = true;
  for (const auto& p : run_selftest(seed, rounds)) {
    ok = ok && p.passed();
    std::cout << (p.passed() ? "PASS " : "FAIL ") << p.name << " (" << p.cases << " cases, " << p.seconds << " s)";
    if (!p.passed()) std::cout << ": " << p.failures << " failures, first: " << p.first_failure;
    std::cout << "\n";
  }
  return ok ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for Stickelberger elements, Fitting ideals and class groups"};
  app.require_subcommand(1);

  std::vector<std::string> files;
  std::string report = "text";
  std::optional<long> prime;
  std::optional<long> precision;
  bool strict = false;
  auto* verify = app.add_subcommand("verify", "run every applicable check on case files");
  verify->add_option("files", files, "case files")->required()->check(CLI::ExistingFile);
  verify->add_option("--report", report, "output format")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--prime", prime, "prime for the Fitting comparison");
  verify->add_option("--precision", precision, "p-adic precision for the Fitting comparison");
  verify->add_flag("--strict-provenance", strict, "reject case files with unprovenanced numbers");

  long conductor = 0;
  std::vector<long> deplete;
  std::vector<long> smooth;
  auto* theta = app.add_subcommand("theta", "Stickelberger element over Q for (Z/f)^*");
  theta->add_option("--conductor", conductor, "conductor f")->required()->check(CLI::Range(1L, 100000L));
  theta->add_option("--deplete", deplete, "extra primes in S")->delimiter(',');
  theta->add_option("--smooth", smooth, "primes in T")->delimiter(',');

  std::string group_text;
  std::string c_text;
  std::string module_text = "trivial:0";
  int degree = 0;
  std::string kind = "tate";
  auto* coh = app.add_subcommand("cohomology", "group (co)homology of a small module");
  coh->add_option("--group", group_text, "cyclic orders, e.g. 4,2")->required();
  coh->add_option("--c", c_text, "exponent vector of the involution");
  coh->add_option("--module", module_text, "trivial:d | regular | twisted:d:m1,m2,...");
  coh->add_option("--degree", degree, "degree")->required();
  coh->add_option("--kind", kind, "tate, cohomology or homology")->check(CLI::IsMember({"tate", "cohomology", "homology"}));

  std::uint64_t seed = 1;
  long rounds = 25;
  auto* self = app.add_subcommand("selftest", "randomized invariant suite");
  self->add_option("--seed", seed, "random seed");
  self->add_option("--rounds", rounds, "cases per property")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return run_verify(files, report, prime, precision, strict);
    if (*theta) return run_theta(conductor, deplete, smooth);
    if (*coh) return run_cohomology(group_text, c_text, module_text, degree, kind);
    if (*self) return run_selftest_command(seed, rounds);
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitPass;
}
