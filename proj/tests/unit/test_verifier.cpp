#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "brumer/case_file.hpp"
#include "brumer/errors.hpp"
#include "brumer/verifier.hpp"

using namespace brumer;
using nlohmann::json;

namespace {

json fixture(const std::string& name) {
  std::ifstream in(std::string(BRUMER_FIXTURE_DIR) + "/" + name);
  REQUIRE(in);
  return json::parse(in);
}

CaseFile parse(const json& j, bool strict = false) { return parse_case(j.dump(), strict); }

Verdict verdict_of(const Report& r, const std::string& check) {
  const CheckResult* c = r.find(check);
  REQUIRE(c != nullptr);
  return c->verdict;
}

ErrorCode parse_error(const json& j, bool strict = false) {
  try {
    parse(j, strict);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a parse error");
  return ErrorCode::kInvalidArgument;
}

json group_ring_entry(std::vector<std::pair<long, std::string>> terms) {
  json out = json::array();
  for (auto& [exp, coeff] : terms) out.push_back({{"g", {exp}}, {"c", coeff}});
  return out;
}

// The quadratic-field case without the unit and class group: f = 3, S = {inf, 3}, T = {5}.
json bare_zeta3() {
  json j = fixture("q_zeta3_T5.case");
  j.erase("bs_unit");
  j.erase("class_group");
  return j;
}

json nabla(const json& rows, long t, long prime = 2) {
  return {{"provenance", "hand-written"}, {"prime", prime}, {"precision", 32}, {"t", t},
          {"generators", rows.size()}, {"relations", rows}};
}

}  // namespace

TEST_CASE("the fixture passes and its zeroed copy fails") {
  const CaseFile c = load_case(std::string(BRUMER_FIXTURE_DIR) + "/q_zeta3_T5.case");
  CHECK(c.group->order() == 2);
  CHECK(c.conductor == 3);
  const Report good = verify_case(c);
  CHECK(verdict_of(good, "l_values") == Verdict::kPass);
  CHECK(verdict_of(good, "brumer_stark") == Verdict::kPass);
  CHECK(verdict_of(good, "annihilation") == Verdict::kPass);
  CHECK(verdict_of(good, "class_number_ratio") == Verdict::kPass);
  CHECK(good.exit_code() == kExitPass);

  const Report bad = verify_case(load_case(std::string(BRUMER_FIXTURE_DIR) + "/q_zeta3_T5_zeroed.case"));
  const CheckResult* bs = bad.find("brumer_stark");
  REQUIRE(bs != nullptr);
  CHECK(bs->verdict == Verdict::kFail);
  CHECK(bs->error == ErrorCode::kCharacterIdentityFails);
  CHECK(bad.exit_code() == kExitFail);
}

TEST_CASE("trivial group: the unit check is vacuous") {
  json j = {{"schema_version", 1},
            {"group", {{"invariants", {1}}, {"c", {0}}}},
            {"places",
             {{{"label", "inf"}, {"archimedean", true}, {"in_s", true}},
              {{"label", "7"}, {"prime", 7}, {"frobenius", {0}}}}},
            {"bs_unit",
             {{"provenance", "hand-written"},
              {"prime_label", "7"},
              {"valuations", {{{"sigma", {0}}, {"ord", "0"}}}}}}};
  const Report r = verify_case(parse(j));
  CHECK(verdict_of(r, "brumer_stark") == Verdict::kPass);
  CHECK(verdict_of(r, "annihilation") == Verdict::kSkipped);
  CHECK(r.exit_code() == kExitPass);
}

TEST_CASE("schema and set errors") {
  json both = fixture("q_zeta3_T5.case");
  both["places"][2]["in_s"] = true;
  CHECK(parse_error(both) == ErrorCode::kInconsistentSets);

  json wrong_frobenius = fixture("q_zeta3_T5.case");
  wrong_frobenius["places"][2]["frobenius"] = {0};  // 5 = -1 mod 3
  CHECK(parse_error(wrong_frobenius) == ErrorCode::kInconsistentSets);

  json bad_version = fixture("q_zeta3_T5.case");
  bad_version["schema_version"] = 9;
  CHECK(parse_error(bad_version) == ErrorCode::kSchemaError);

  json bad_element = fixture("q_zeta3_T5.case");
  bad_element["bs_unit"]["valuations"][1]["sigma"] = {2};
  CHECK(parse_error(bad_element) == ErrorCode::kUnknownElement);

  CHECK(parse_error(json("not an object")) == ErrorCode::kSchemaError);
}

TEST_CASE("Cl_- = Z/3 with c = -1 is not killed by 1 - c") {
  json j = bare_zeta3();
  j["class_group"] = {{"provenance", "hand-written"}, {"invariants", {"3"}}, {"actions", {{{"-1"}}}}};
  const Report r = verify_case(parse(j));
  const CheckResult* ann = r.find("annihilation");
  REQUIRE(ann != nullptr);
  CHECK(ann->verdict == Verdict::kFail);
  CHECK(ann->witnesses.at("cl_minus") == "[3]");
  CHECK(r.exit_code() == kExitFail);
}

TEST_CASE("Fitting check: equality, strict inclusion, zero ideal") {
  // Theta = 1 - c, which is 2 in Z_2[G]_- = Z_2.
  json equal = bare_zeta3();
  equal["nabla"] = nabla(json::array({json::array({group_ring_entry({{0, "2"}})})}), 0);
  const Report ok = verify_case(parse(equal));
  CHECK(verdict_of(ok, "fitting_equality") == Verdict::kPass);
  CHECK(ok.find("fitting_equality")->witnesses.at("relation") == "equal");

  // Fitt = (2) sits strictly inside (Theta / 2) = (1).
  json strict = bare_zeta3();
  strict["nabla"] = nabla(json::array({json::array({group_ring_entry({{0, "1"}, {1, "-1"}})})}), 1);
  const Report smaller = verify_case(parse(strict));
  CHECK(verdict_of(smaller, "fitting_equality") == Verdict::kFail);
  CHECK(smaller.find("fitting_equality")->witnesses.at("relation") == to_string(IdealRelation::kFirstInSecond));

  json zero = bare_zeta3();
  zero["nabla"] = nabla(json::array({json::array({group_ring_entry({{0, "0"}})})}), 0);
  const CheckResult* z = verify_case(parse(zero)).find("fitting_equality");
  CHECK(z->verdict == Verdict::kFail);
  CHECK(z->reason.find("zero") != std::string::npos);
}

TEST_CASE("moving a split prime into S multiplies both sides by the same factor") {
  // 11 = -1 mod 3, so its Frobenius is c and Theta picks up 1 - c, which is 2 on the minus side.
  json base = bare_zeta3();
  base["nabla"] = nabla(json::array({json::array({group_ring_entry({{0, "2"}})})}), 0);
  json shifted = base;
  shifted["places"].push_back({{"label", "11"}, {"prime", 11}, {"frobenius", {1}}, {"in_s", true}});
  shifted["nabla"] = nabla(json::array({json::array({group_ring_entry({{0, "2"}}), group_ring_entry({{0, "0"}})}),
                                        json::array({group_ring_entry({{0, "0"}}), group_ring_entry({{0, "1"}, {1, "-1"}})})}),
                           0);
  const Report before = verify_case(parse(base));
  const Report after = verify_case(parse(shifted));
  CHECK(verdict_of(before, "fitting_equality") == Verdict::kPass);
  CHECK(verdict_of(after, "fitting_equality") == verdict_of(before, "fitting_equality"));
  CHECK(after.find("l_values")->witnesses.at("theta") != before.find("l_values")->witnesses.at("theta"));
}

TEST_CASE("reports do not depend on place order and are byte-identical across runs") {
  json j = fixture("q_zeta3_T5.case");
  json reversed = j;
  std::reverse(reversed["places"].begin(), reversed["places"].end());
  const Report a = verify_case(parse(j));
  const Report b = verify_case(parse(reversed));
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].verdict == b.checks[i].verdict);
    CHECK(a.checks[i].witnesses == b.checks[i].witnesses);
  }
  CHECK(verify_case(parse(j)).to_json() == a.to_json());
  CHECK(verify_case(parse(j)).to_text() == a.to_text());
}

TEST_CASE("strict provenance") {
  json j = fixture("q_zeta3_T5.case");
  j["class_group"].erase("provenance");
  CHECK(parse_error(j, true) == ErrorCode::kSchemaError);
  const CaseFile lenient = parse(j);
  CHECK(std::find(lenient.unprovenanced.begin(), lenient.unprovenanced.end(), "/class_group") !=
        lenient.unprovenanced.end());
  const Report r = verify_case(lenient);
  CHECK(r.to_json().find("/class_group") != std::string::npos);
  CHECK(r.exit_code() == kExitPass);
}

TEST_CASE("a prime override reaches the precision audit") {
  json j = bare_zeta3();
  j["nabla"] = nabla(json::array({json::array({group_ring_entry({{0, "2"}})})}), 0);
  VerifyOptions opts;
  opts.prime = Integer(3);
  const Report r = verify_case(parse(j), opts);
  CHECK(r.precision.prime == 3);
  // 2 and 1 - c are both units at 3.
  CHECK(verdict_of(r, "fitting_equality") == Verdict::kPass);
}
