#include "brumer/verifier.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "brumer/fitting.hpp"
#include "brumer/gmodule.hpp"
#include "brumer/group_ring.hpp"

namespace brumer {

namespace {

CheckResult skipped(std::string name, std::string reason) {
  return {std::move(name), Verdict::kSkipped, std::move(reason), std::nullopt, {}};
}

CheckResult failed(CheckResult r, ErrorCode code, std::string reason) {
  r.verdict = Verdict::kFail;
  r.error = code;
  r.reason = std::move(reason);
  return r;
}

std::string join(const std::vector<Integer>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + "]";
}

std::string exponents_text(const std::vector<long>& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

Rational power_of_two(long e) {
  const Integer p = ipow(2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(1, 1) / Rational(p) : Rational(p);
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
  std::vector<Character> odd;
  for (const auto& chi : list_characters(g))
    if (chi.is_odd()) odd.push_back(chi);
  return odd;
}

template <class Fn>
CheckResult guarded(const std::string& name, Fn&& body) {
  try {
    return body();
  } catch (const Error& e) {
    CheckResult r{name, Verdict::kFail, e.what(), e.code(), {}};
    return r;
  }
}

GModule class_group_module(const GroupPtr& g, const ClassGroupData& cg) {
  return GModule(g, cg.invariants.size(), IntMatrix::diagonal(cg.invariants), cg.actions);
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kSkipped:
      return "skipped";
  }
  return "unknown";
}

LValueTable case_l_values(const CaseFile& c) {
  if (c.conductor) {
    LValueTable t = compute_l_value_table(DirichletGroup::full(*c.conductor), c.places);
    t.provenance = "computed-internally";
    return t;
  }
  if (c.l_values) return *c.l_values;
  fail(ErrorCode::kMissingLValues, "case has neither a conductor nor an l_values block");
}

ThetaElement case_theta(const CaseFile& c) { return assemble_theta(c.group, c.places, case_l_values(c), c.degree_n); }

CheckResult check_l_values(const CaseFile& c) {
  const std::string name = "l_values";
  if (!c.conductor && !c.l_values) return skipped(name, "no conductor and no l_values block");
  return guarded(name, [&] {
    CheckResult r{name, Verdict::kPass, "", std::nullopt, {}};
    const ThetaElement theta = case_theta(c);  // validates completeness and Galois equivariance
    r.witnesses["theta"] = theta.theta.to_string();
    r.witnesses["deligne_ribet_condition"] = theta.deligne_ribet ? "true" : "false";
    r.witnesses["theta_integral"] = theta.integral ? "true" : "false";
    if (c.conductor && c.l_values) {
      const LValueTable computed = case_l_values(c);
      for (const auto& [index, value] : computed.values) {
        auto it = c.l_values->values.find(index);
        if (it == c.l_values->values.end() || !(it->second == value))
          return failed(std::move(r), ErrorCode::kCharacterIdentityFails,
                        "supplied L-value at character #" + std::to_string(index) + " differs from " +
                            value.to_string());
      }
      r.reason = "supplied table agrees with the internal computation";
      r.witnesses["provenance"] = c.l_values->provenance;
    } else {
      r.reason = c.conductor ? "computed internally" : "file-supplied, Galois-equivariant";
      r.witnesses["provenance"] = c.conductor ? "computed-internally" : c.l_values->provenance;
    }
    return r;
  });
}

CheckResult check_brumer_stark(const CaseFile& c) {
  const std::string name = "brumer_stark";
  if (!c.bs_unit) return skipped(name, "no bs_unit block");
  const BrumerStarkUnit& u = *c.bs_unit;
  return guarded(name, [&] {
    CheckResult r{name, Verdict::kPass, "", std::nullopt, {}};
    r.witnesses["exponent"] = std::to_string(u.exponent);
    r.witnesses["t_congruence"] = u.t_congruence_attested ? "attested" : "not attested";
    for (const auto& [label, ok] : u.absolute_value_attested)
      r.witnesses["absolute_value_one." + label] = ok ? "attested" : "not attested";
    const GroupPtr& g = c.group;
    if (!g->has_conjugation()) {
      r.reason = "no odd characters; vacuous";
      return r;
    }
    const LValueTable table = case_l_values(c);
    const ThetaElement theta = assemble_theta(g, c.places, table, c.degree_n);
    const GroupRingElement valuations(g, BaseRing::rationals(), std::vector<Rational>(u.valuations.begin(), u.valuations.end()));
    const Rational scale = power_of_two(u.exponent);
    r.witnesses["theta"] = theta.theta.to_string();
    r.witnesses["valuations"] = valuations.to_string();

    // Route 1: sum_sigma chi(sigma) ord_{sigma^{-1} P}(u) against L_{S,T}(chi, 0) / 2^e, character by character.
    for (const auto& chi : list_characters(g)) {
      const CyclotomicRational lhs = evaluate(chi, valuations);
      CyclotomicRational rhs(g->exponent());
      if (chi.is_odd()) {
        auto it = table.values.find(chi.inverse().index());
        if (it == table.values.end())
          fail(ErrorCode::kMissingLValues, "no L-value for character #" + std::to_string(chi.inverse().index()));
        rhs = it->second * CyclotomicRational::constant(it->second.conductor(), Rational(1) / scale);
      }
      if (!(lhs == rhs)) {
        r.witnesses["character"] = exponents_text(chi.exponents());
        r.witnesses["lhs"] = lhs.to_string().empty() ? "0" : lhs.to_string();
        r.witnesses["rhs"] = rhs.to_string().empty() ? "0" : rhs.to_string();
        return failed(std::move(r), ErrorCode::kCharacterIdentityFails,
                      "character identity fails at chi = " + exponents_text(chi.exponents()));
      }
    }
    // Route 2: the valuation vector is the coefficient vector of Theta^# / 2^e.
    const GroupRingElement target = (Rational(1) / scale) * theta.theta.sharp();
    r.witnesses["target"] = target.to_string();
    if (!(target == valuations))
      return failed(std::move(r), ErrorCode::kCharacterIdentityFails,
                    "valuation vector differs from the coefficients of Theta^# / 2^e");
    r.reason = "character identity verified for all characters; unit conditions attested";
    return r;
  });
}

CheckResult check_annihilation(const CaseFile& c) {
  const std::string name = "annihilation";
  if (!c.class_group) return skipped(name, "no class_group block");
  if (!c.group->has_conjugation()) return skipped(name, "c is trivial, the minus part is not defined");
  return guarded(name, [&] {
    CheckResult r{name, Verdict::kPass, "", std::nullopt, {}};
    const long exponent = c.degree_n - 1;
    const GModule cl = class_group_module(c.group, *c.class_group);
    const GModule minus = cl.minus_part();
    const ThetaElement theta = case_theta(c);
    const MinusElement x = divide_by_2t(theta.theta.with_ring(BaseRing::integers()), exponent);
    const IntMatrix act = minus.action_of(x.lift());
    r.witnesses["cl_minus"] = join(minus.underlying().invariants());
    r.witnesses["element"] = x.to_string();
    r.witnesses["exponent"] = std::to_string(exponent);
    std::vector<Integer> bad;
    for (std::size_t i = 0; i < minus.dim(); ++i)
      if (!minus.is_zero(act.row(i))) bad.push_back(Integer(static_cast<long>(i)));
    if (!bad.empty()) {
      r.witnesses["generators_not_killed"] = join(bad);
      r.verdict = Verdict::kFail;
      r.reason = "Theta / 2^" + std::to_string(exponent) + " does not annihilate Cl^T(H)_-";
      return r;
    }
    r.reason = "Theta / 2^" + std::to_string(exponent) + " kills every generator of Cl^T(H)_-";
    return r;
  });
}

CheckResult check_fitting_equality(const CaseFile& c, const VerifyOptions& opts) {
  const std::string name = "fitting_equality";
  if (!c.nabla) return skipped(name, "no nabla block");
  if (!c.group->has_conjugation()) return skipped(name, "c is trivial, Z_p[G]_- is zero");
  const NablaData& n = *c.nabla;
  const Integer p = opts.prime.value_or(n.prime);
  const long precision = opts.precision.value_or(n.precision);
  return guarded(name, [&] {
    CheckResult r{name, Verdict::kPass, "", std::nullopt, {}};
    if (n.relations.size() != n.generators) fail(ErrorCode::kNotQuadratic, "presentation is not square");
    const MinusElement proto = MinusElement::zero(c.group);
    Matrix<MinusElement> rel;
    for (const auto& row : n.relations) {
      std::vector<MinusElement> out;
      for (const auto& e : row) out.push_back(minus_project(e));
      rel.push_back(std::move(out));
    }
    const Presentation<MinusElement> pres(proto, n.generators, rel);
    const IdealGens<MinusElement> fitt = fitting_ideal(pres);

    const ThetaElement theta = case_theta(c);
    const MinusElement target = divide_by_2t(theta.theta.with_ring(BaseRing::padic(p, precision)), n.t);
    const IdealGens<MinusElement> principal{target.zero_like(), {target}};
    r.witnesses["fitting_generator"] = fitt.gens.front().to_string();
    r.witnesses["theta_over_2t"] = target.to_string();
    r.witnesses["t"] = std::to_string(n.t);

    if (fitt.is_zero() != principal.is_zero())
      return failed(std::move(r), ErrorCode::kInvalidArgument,
                    fitt.is_zero() ? "Fitting ideal is zero but Theta / 2^t is not"
                                   : "Theta / 2^t is zero but the Fitting ideal is not");
    const IdealRelation rel_ab = ideal_compare(fitt, principal, p, precision, opts.guard);
    r.witnesses["relation"] = to_string(rel_ab);

    const ModuleSize predicted = module_size(target, odd_characters(c.group), p, precision, opts.guard);
    const Integer presented = presented_module(pres).order();
    r.witnesses["size_from_theta"] = predicted.finite ? predicted.size.get_str() : "infinite";
    r.witnesses["size_from_presentation"] = presented == 0 ? "infinite" : p_part(presented, p).get_str();

    if (rel_ab != IdealRelation::kEqual) {
      r.verdict = Verdict::kFail;
      r.reason = "Fitt(nabla_-) vs (Theta/2^t): " + to_string(rel_ab);
      return r;
    }
    const bool sizes_agree = predicted.finite ? presented != 0 && p_part(presented, p) == predicted.size : presented == 0;
    if (!sizes_agree) return failed(std::move(r), ErrorCode::kSizeMismatch, "module sizes disagree");
    r.reason = "Fitting ideal equals (Theta / 2^t) over Z_" + p.get_str() + "[G]_-";
    return r;
  });
}

CheckResult check_class_number_ratio(const CaseFile& c) {
  const std::string name = "class_number_ratio";
  if (!c.class_group || !c.class_group->plus_invariants) return skipped(name, "needs both class groups");
  if (!c.group->has_conjugation()) return skipped(name, "c is trivial");
  return guarded(name, [&] {
    CheckResult r{name, Verdict::kPass, "", std::nullopt, {}};
    const GModule cl = class_group_module(c.group, *c.class_group);
    const Integer full = cl.order();
    Integer plus = 1;
    for (const auto& d : *c.class_group->plus_invariants) plus *= d;
    const Integer minus = cl.minus_part().order();
    r.witnesses["cl"] = full.get_str();
    r.witnesses["cl_plus"] = plus.get_str();
    r.witnesses["cl_minus"] = minus.get_str();
    if (full == 0 || plus == 0 || minus == 0) fail(ErrorCode::kInvalidArgument, "class groups must be finite");
    if (full != minus * plus) {
      r.verdict = Verdict::kFail;
      r.reason = "#Cl != #Cl_- * #Cl^+";
      return r;
    }
    r.reason = "#Cl / #Cl^+ = #Cl_-";
    return r;
  });
}

Report verify_case(const CaseFile& c, const VerifyOptions& opts) {
  Report report;
  report.case_label = c.label;
  report.unprovenanced = c.unprovenanced;
  report.checks.push_back(check_l_values(c));
  report.checks.push_back(check_brumer_stark(c));
  report.checks.push_back(check_annihilation(c));
  report.checks.push_back(check_fitting_equality(c, opts));
  report.checks.push_back(check_class_number_ratio(c));
  report.precision.prime = opts.prime.value_or(c.nabla ? c.nabla->prime : c.prime);
  report.precision.precision = opts.precision.value_or(c.nabla ? c.nabla->precision : kDefaultPrecision);
  report.precision.guard = opts.guard;
  report.precision.exhausted = std::any_of(report.checks.begin(), report.checks.end(), [](const CheckResult& r) {
    return r.error == ErrorCode::kPrecisionExhausted;
  });
  return report;
}

const CheckResult* Report::find(const std::string& name) const {
  auto it = std::find_if(checks.begin(), checks.end(), [&](const CheckResult& r) { return r.name == name; });
  return it == checks.end() ? nullptr : &*it;
}

int Report::exit_code() const {
  if (precision.exhausted) return kExitPrecision;
  for (const auto& r : checks)
    if (r.verdict == Verdict::kFail) return kExitFail;
  return kExitPass;
}

std::string Report::to_json() const {
  nlohmann::json j;
  j["case"] = case_label;
  j["exit_code"] = exit_code();
  j["precision"] = {{"prime", precision.prime.get_str()},
                    {"precision", precision.precision},
                    {"guard", precision.guard},
                    {"exhausted", precision.exhausted}};
  j["unprovenanced"] = unprovenanced;
  j["checks"] = nlohmann::json::array();
  for (const auto& r : checks) {
    nlohmann::json cj;
    cj["name"] = r.name;
    cj["verdict"] = std::string(to_string(r.verdict));
    cj["reason"] = r.reason;
    cj["error"] = r.error ? nlohmann::json(std::string(to_string(*r.error))) : nlohmann::json(nullptr);
    cj["witnesses"] = r.witnesses;
    j["checks"].push_back(std::move(cj));
  }
  return j.dump(2) + "\n";
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "case " << case_label << "\n";
  for (const auto& r : checks) {
    out << "  " << r.name << ": " << to_string(r.verdict);
    if (r.error) out << " [" << to_string(*r.error) << "]";
    if (!r.reason.empty()) out << " - " << r.reason;
    out << "\n";
    for (const auto& [k, v] : r.witnesses) out << "      " << k << " = " << v << "\n";
  }
  out << "  precision: p = " << precision.prime << ", N = " << precision.precision << ", guard = " << precision.guard
      << (precision.exhausted ? " (exhausted)" : "") << "\n";
  for (const auto& u : unprovenanced) out << "  warning: no provenance for " << u << "\n";
  out << "  exit code " << exit_code() << "\n";
  return out.str();
}

}  // namespace brumer
