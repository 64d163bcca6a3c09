#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "brumer/fitting.hpp"
#include "brumer/group.hpp"
#include "brumer/group_ring.hpp"
#include "brumer/linalg.hpp"
#include "brumer/stickelberger.hpp"

namespace brumer {

inline constexpr int kCaseSchemaVersion = 1;

// Cl^T(H) as Z^k / diag(invariants) with one action matrix per cyclic generator of G.
struct ClassGroupData {
  std::vector<Integer> invariants;
  std::vector<IntMatrix> actions;
  std::optional<std::vector<Integer>> plus_invariants;  // the class group of the maximal real subfield
  std::string provenance;
};

// A square presentation over Z_p[G]_-, entries given in Z[G].
struct NablaData {
  Integer prime = 2;
  long precision = kDefaultPrecision;
  long t = 0;
  std::size_t generators = 0;
  Matrix<GroupRingElement> relations;
  std::string provenance;
};

struct BrumerStarkUnit {
  std::string prime_label;
  std::vector<Integer> valuations;  // ord_{sigma^{-1} P}(u), indexed by the element sigma
  long exponent = 0;                // the unit realizes Theta / 2^exponent
  std::map<std::string, bool> absolute_value_attested;
  bool t_congruence_attested = false;
  std::string provenance;
};

struct CaseFile {
  int schema_version = kCaseSchemaVersion;
  std::string label;
  GroupPtr group;
  std::optional<long> conductor;  // F = Q and G = (Z/f)^*: L-values are computed internally
  std::vector<PlaceSpec> places;
  std::optional<LValueTable> l_values;
  std::optional<ClassGroupData> class_group;
  std::optional<NablaData> nabla;
  std::optional<BrumerStarkUnit> bs_unit;
  Integer prime = 2;
  long t = 0;
  long degree_n = 1;
  // Pointer paths of data blocks that carry no provenance string.
  std::vector<std::string> unprovenanced;
};

// Throws SchemaError (message starts with the JSON pointer), InconsistentSets, UnknownElement.
CaseFile parse_case(const std::string& text, bool strict_provenance = false);
CaseFile load_case(const std::filesystem::path& path, bool strict_provenance = false);
// Group element from an exponent vector; throws UnknownElement.
long element_from_exponents(const FiniteAbelianGroup& g, const std::vector<long>& exps);

}  // namespace brumer
