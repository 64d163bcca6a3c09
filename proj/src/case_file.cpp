#include "brumer/case_file.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "brumer/errors.hpp"

namespace brumer {

namespace {

using json = nlohmann::json;

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  fail(ErrorCode::kSchemaError, where + ": " + what);
}

const json& field(const json& obj, const std::string& where, const char* key) {
  if (!obj.is_object()) schema(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema(where + "/" + key, "missing");
  return *it;
}

const json* optional_field(const json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

bool as_bool(const json& j, const std::string& where) {
  if (!j.is_boolean()) schema(where, "expected a boolean");
  return j.get<bool>();
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) schema(where, "expected a string");
  return j.get<std::string>();
}

// Integers may be JSON numbers or decimal strings; no floating point.
Integer as_integer(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) schema(where, "not an integer: '" + j.get<std::string>() + "'");
    return v;
  }
  schema(where, "expected an integer or a decimal string");
}

long as_long(const json& j, const std::string& where) {
  Integer v = as_integer(j, where);
  if (!v.fits_slong_p()) schema(where, "integer out of range");
  return v.get_si();
}

Rational as_rational(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(as_integer(j, where));
  if (!j.is_string()) schema(where, "expected a rational string 'a/b'");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error&) {
    schema(where, "not a rational: '" + j.get<std::string>() + "'");
  }
}

const json& as_array(const json& j, const std::string& where) {
  if (!j.is_array()) schema(where, "expected an array");
  return j;
}

std::vector<long> as_long_list(const json& j, const std::string& where) {
  std::vector<long> out;
  for (std::size_t i = 0; i < as_array(j, where).size(); ++i) out.push_back(as_long(j[i], where + "/" + std::to_string(i)));
  return out;
}

std::vector<Integer> as_integer_list(const json& j, const std::string& where) {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < as_array(j, where).size(); ++i)
    out.push_back(as_integer(j[i], where + "/" + std::to_string(i)));
  return out;
}

long element_at(const FiniteAbelianGroup& g, const json& j, const std::string& where) {
  try {
    return element_from_exponents(g, as_long_list(j, where));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kUnknownElement) fail(ErrorCode::kUnknownElement, where + ": " + e.what());
    throw;
  }
}

std::string provenance_of(const json& block, const std::string& where, CaseFile& c) {
  const json* p = optional_field(block, "provenance");
  std::string text = p ? as_string(*p, where + "/provenance") : "";
  if (text.empty()) c.unprovenanced.push_back(where);
  return text;
}

// [{"g": [exponents], "c": "a/b"}, ...]
GroupRingElement as_group_ring(const GroupPtr& g, const json& j, const std::string& where) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(g->order()));
  for (std::size_t i = 0; i < as_array(j, where).size(); ++i) {
    const std::string w = where + "/" + std::to_string(i);
    const long x = element_at(*g, field(j[i], w, "g"), w + "/g");
    coeffs[static_cast<std::size_t>(x)] += as_rational(field(j[i], w, "c"), w + "/c");
  }
  for (const auto& a : coeffs)
    if (a.get_den() != 1) schema(where, "group ring entries must have integer coefficients");
  return GroupRingElement(g, BaseRing::integers(), std::move(coeffs));
}

GroupPtr parse_group(const json& j) {
  auto invariants = as_long_list(field(j, "/group", "invariants"), "/group/invariants");
  std::vector<long> c;
  if (const json* cj = optional_field(j, "c")) c = as_long_list(*cj, "/group/c");
  else c.assign(invariants.size(), 0);
  for (long d : invariants)
    if (d < 1) schema("/group/invariants", "cyclic orders must be positive");
  if (c.size() != invariants.size()) schema("/group/c", "length differs from /group/invariants");
  try {
    return build_group(invariants, c);
  } catch (const Error& e) {
    schema("/group", e.what());
  }
}

PlaceSpec parse_place(const GroupPtr& g, const json& j, const std::string& where) {
  PlaceSpec v;
  v.label = as_string(field(j, where, "label"), where + "/label");
  if (const json* a = optional_field(j, "archimedean")) v.archimedean = as_bool(*a, where + "/archimedean");
  if (const json* s = optional_field(j, "in_s")) v.in_s = as_bool(*s, where + "/in_s");
  if (const json* t = optional_field(j, "in_t")) v.in_t = as_bool(*t, where + "/in_t");
  if (const json* r = optional_field(j, "ramified")) v.ramified = as_bool(*r, where + "/ramified");
  if (v.archimedean) return v;
  v.residue_characteristic = as_long(field(j, where, "prime"), where + "/prime");
  if (!is_prime(Integer(v.residue_characteristic))) schema(where + "/prime", "not a prime");
  v.norm = v.residue_characteristic;
  if (const json* n = optional_field(j, "norm")) v.norm = as_integer(*n, where + "/norm");
  if (const json* f = optional_field(j, "frobenius")) {
    if (v.ramified) fail(ErrorCode::kInconsistentSets, where + ": ramified places carry no Frobenius");
    v.frobenius = element_at(*g, *f, where + "/frobenius");
  }
  return v;
}

void attach_conductor(CaseFile& c, const json& places_json) {
  const DirichletGroup d = DirichletGroup::full(*c.conductor);
  if (!(*d.group() == *c.group))
    schema("/conductor", "the group block must be (Z/" + std::to_string(*c.conductor) + ")^* in its standard form");
  for (std::size_t i = 0; i < c.places.size(); ++i) {
    PlaceSpec& v = c.places[i];
    const std::string where = "/places/" + std::to_string(i);
    if (v.archimedean) continue;
    PlaceSpec derived = d.prime_place(v.residue_characteristic, v.in_s, v.in_t);
    if (v.frobenius >= 0 && v.frobenius != derived.frobenius)
      fail(ErrorCode::kInconsistentSets, where + "/frobenius: disagrees with the residue of the prime mod f");
    if (optional_field(places_json[i], "ramified") && v.ramified != derived.ramified)
      fail(ErrorCode::kInconsistentSets, where + "/ramified: disagrees with the conductor");
    if (derived.norm != v.norm) fail(ErrorCode::kInconsistentSets, where + "/norm: primes of Q have norm q");
    derived.label = v.label;
    v = derived;
  }
}

LValueTable parse_l_values(const GroupPtr& g, const json& j, CaseFile& c) {
  LValueTable table;
  table.provenance = provenance_of(j, "/l_values", c);
  const long m = g->exponent();
  const json& values = as_array(field(j, "/l_values", "values"), "/l_values/values");
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::string w = "/l_values/values/" + std::to_string(i);
    auto exps = as_long_list(field(values[i], w, "character"), w + "/character");
    if (exps.size() != g->rank()) fail(ErrorCode::kUnknownElement, w + "/character: wrong length");
    for (std::size_t k = 0; k < exps.size(); ++k)
      if (exps[k] < 0 || exps[k] >= g->invariants()[k]) fail(ErrorCode::kUnknownElement, w + "/character: out of range");
    Character chi(g, exps);
    const json& sums = as_array(field(values[i], w, "power_sums"), w + "/power_sums");
    if (static_cast<long>(sums.size()) > m) schema(w + "/power_sums", "more entries than the exponent of G");
    std::vector<Rational> s(static_cast<std::size_t>(m));
    for (std::size_t k = 0; k < sums.size(); ++k) s[k] = as_rational(sums[k], w + "/power_sums/" + std::to_string(k));
    if (!table.values.emplace(chi.index(), CyclotomicRational::from_power_sums(m, std::move(s))).second)
      schema(w + "/character", "listed twice");
  }
  return table;
}

ClassGroupData parse_class_group(const GroupPtr& g, const json& j, CaseFile& c) {
  ClassGroupData cg;
  cg.provenance = provenance_of(j, "/class_group", c);
  cg.invariants = as_integer_list(field(j, "/class_group", "invariants"), "/class_group/invariants");
  const std::size_t k = cg.invariants.size();
  const json& actions = as_array(field(j, "/class_group", "actions"), "/class_group/actions");
  if (actions.size() != g->rank()) schema("/class_group/actions", "need one matrix per cyclic generator of G");
  for (std::size_t a = 0; a < actions.size(); ++a) {
    const std::string w = "/class_group/actions/" + std::to_string(a);
    if (as_array(actions[a], w).size() != k) schema(w, "expected a square matrix of size " + std::to_string(k));
    IntMatrix mat(k, k);
    for (std::size_t r = 0; r < k; ++r) {
      auto row = as_integer_list(actions[a][r], w + "/" + std::to_string(r));
      if (row.size() != k) schema(w + "/" + std::to_string(r), "wrong row length");
      for (std::size_t col = 0; col < k; ++col) mat(r, col) = row[col];
    }
    cg.actions.push_back(std::move(mat));
  }
  if (const json* p = optional_field(j, "plus_invariants"))
    cg.plus_invariants = as_integer_list(*p, "/class_group/plus_invariants");
  return cg;
}

NablaData parse_nabla(const GroupPtr& g, const json& j, CaseFile& c) {
  NablaData n;
  n.provenance = provenance_of(j, "/nabla", c);
  n.prime = as_integer(field(j, "/nabla", "prime"), "/nabla/prime");
  if (!is_prime(n.prime)) schema("/nabla/prime", "not a prime");
  if (const json* p = optional_field(j, "precision")) n.precision = as_long(*p, "/nabla/precision");
  if (n.precision < 1) schema("/nabla/precision", "must be positive");
  if (const json* t = optional_field(j, "t")) n.t = as_long(*t, "/nabla/t");
  else n.t = c.t;
  n.generators = static_cast<std::size_t>(as_long(field(j, "/nabla", "generators"), "/nabla/generators"));
  const json& rel = as_array(field(j, "/nabla", "relations"), "/nabla/relations");
  for (std::size_t r = 0; r < rel.size(); ++r) {
    const std::string w = "/nabla/relations/" + std::to_string(r);
    if (as_array(rel[r], w).size() != n.generators) schema(w, "row length differs from /nabla/generators");
    std::vector<GroupRingElement> row;
    for (std::size_t col = 0; col < n.generators; ++col)
      row.push_back(as_group_ring(g, rel[r][col], w + "/" + std::to_string(col)));
    n.relations.push_back(std::move(row));
  }
  return n;
}

BrumerStarkUnit parse_bs_unit(const GroupPtr& g, const json& j, CaseFile& c) {
  BrumerStarkUnit u;
  u.provenance = provenance_of(j, "/bs_unit", c);
  u.prime_label = as_string(field(j, "/bs_unit", "prime_label"), "/bs_unit/prime_label");
  auto place = std::find_if(c.places.begin(), c.places.end(), [&](const PlaceSpec& v) { return v.label == u.prime_label; });
  if (place == c.places.end()) fail(ErrorCode::kUnknownElement, "/bs_unit/prime_label: no place '" + u.prime_label + "'");
  if (place->archimedean || place->ramified || place->frobenius != 0)
    fail(ErrorCode::kInconsistentSets, "/bs_unit/prime_label: '" + u.prime_label + "' does not split completely");

  const json& vals = as_array(field(j, "/bs_unit", "valuations"), "/bs_unit/valuations");
  u.valuations.assign(static_cast<std::size_t>(g->order()), Integer(0));
  std::set<long> seen;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    const std::string w = "/bs_unit/valuations/" + std::to_string(i);
    const long sigma = element_at(*g, field(vals[i], w, "sigma"), w + "/sigma");
    if (!seen.insert(sigma).second) schema(w + "/sigma", "listed twice");
    u.valuations[static_cast<std::size_t>(sigma)] = as_integer(field(vals[i], w, "ord"), w + "/ord");
  }
  if (static_cast<long>(seen.size()) != g->order()) schema("/bs_unit/valuations", "need one entry per element of G");

  if (const json* e = optional_field(j, "exponent")) u.exponent = as_long(*e, "/bs_unit/exponent");
  else if (const json* s = optional_field(j, "strengthened"); s && as_bool(*s, "/bs_unit/strengthened"))
    u.exponent = c.degree_n - 2;
  if (const json* a = optional_field(j, "absolute_value_attested")) {
    if (!a->is_object()) schema("/bs_unit/absolute_value_attested", "expected an object keyed by place label");
    for (auto it = a->begin(); it != a->end(); ++it) {
      if (std::none_of(c.places.begin(), c.places.end(), [&](const PlaceSpec& v) { return v.label == it.key(); }))
        fail(ErrorCode::kUnknownElement, "/bs_unit/absolute_value_attested/" + it.key() + ": no such place");
      u.absolute_value_attested[it.key()] = as_bool(it.value(), "/bs_unit/absolute_value_attested/" + it.key());
    }
  }
  if (const json* t = optional_field(j, "t_congruence_attested"))
    u.t_congruence_attested = as_bool(*t, "/bs_unit/t_congruence_attested");
  return u;
}

}  // namespace

long element_from_exponents(const FiniteAbelianGroup& g, const std::vector<long>& exps) {
  if (exps.size() != g.rank())
    fail(ErrorCode::kUnknownElement, "exponent vector has length " + std::to_string(exps.size()) + ", group rank is " +
                                         std::to_string(g.rank()));
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] < 0 || exps[i] >= g.invariants()[i])
      fail(ErrorCode::kUnknownElement, "exponent " + std::to_string(exps[i]) + " outside [0, " +
                                           std::to_string(g.invariants()[i]) + ")");
  return g.index(exps);
}

CaseFile parse_case(const std::string& text, bool strict_provenance) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    schema("", std::string("not valid JSON: ") + e.what());
  }
  if (!root.is_object()) schema("", "expected an object");

  CaseFile c;
  c.schema_version = static_cast<int>(as_long(field(root, "", "schema_version"), "/schema_version"));
  if (c.schema_version != kCaseSchemaVersion)
    schema("/schema_version", "unsupported version " + std::to_string(c.schema_version));
  if (const json* l = optional_field(root, "label")) c.label = as_string(*l, "/label");
  c.group = parse_group(field(root, "", "group"));

  if (const json* p = optional_field(root, "parameters")) {
    if (const json* x = optional_field(*p, "p")) c.prime = as_integer(*x, "/parameters/p");
    if (const json* x = optional_field(*p, "t")) c.t = as_long(*x, "/parameters/t");
    if (const json* x = optional_field(*p, "n")) c.degree_n = as_long(*x, "/parameters/n");
    if (!is_prime(c.prime)) schema("/parameters/p", "not a prime");
    if (c.t < 0) schema("/parameters/t", "must be non-negative");
    if (c.degree_n < 1) schema("/parameters/n", "must be positive");
  }

  static const json kEmpty = json::array();
  const json* places = optional_field(root, "places");
  if (!places) places = &kEmpty;
  std::set<std::string> labels;
  for (std::size_t i = 0; i < as_array(*places, "/places").size(); ++i) {
    const std::string where = "/places/" + std::to_string(i);
    PlaceSpec v = parse_place(c.group, (*places)[i], where);
    if (!labels.insert(v.label).second) schema(where + "/label", "duplicate label '" + v.label + "'");
    if (v.in_s && v.in_t) fail(ErrorCode::kInconsistentSets, where + ": place '" + v.label + "' is in both S and T");
    c.places.push_back(std::move(v));
  }

  if (const json* f = optional_field(root, "conductor")) {
    c.conductor = as_long(*f, "/conductor");
    if (*c.conductor < 1) schema("/conductor", "must be positive");
    attach_conductor(c, *places);
  }
  if (const json* l = optional_field(root, "l_values")) c.l_values = parse_l_values(c.group, *l, c);
  if (const json* cg = optional_field(root, "class_group")) c.class_group = parse_class_group(c.group, *cg, c);
  if (const json* n = optional_field(root, "nabla")) c.nabla = parse_nabla(c.group, *n, c);
  if (const json* u = optional_field(root, "bs_unit")) c.bs_unit = parse_bs_unit(c.group, *u, c);

  if (strict_provenance && !c.unprovenanced.empty())
    schema(c.unprovenanced.front(), "no provenance string (rejected under strict provenance)");
  return c;
}

CaseFile load_case(const std::filesystem::path& path, bool strict_provenance) {
  std::ifstream in(path, std::ios::binary);
  if (!in) schema("", "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  CaseFile c = parse_case(buf.str(), strict_provenance);
  if (c.label.empty()) c.label = path.filename().string();
  return c;
}

}  // namespace brumer
