#pragma once

#include <map>
#include <string>
#include <vector>

#include "brumer/cyclotomic.hpp"
#include "brumer/group.hpp"
#include "brumer/group_ring.hpp"

namespace brumer {

struct PlaceSpec {
  std::string label;
  bool archimedean = false;
  Integer norm = 0;                 // residue field size (finite places)
  long residue_characteristic = 0;  // finite places
  long frobenius = -1;              // element of G; -1 when undefined
  bool ramified = false;
  bool in_s = false;
  bool in_t = false;
};

// Throws SetsOverlap when a place is in both S and T.
void check_disjoint(const std::vector<PlaceSpec>& places);
// T contains two primes of different residue characteristic, or one prime of
// residue characteristic > n + 1.
bool deligne_ribet_condition(const std::vector<PlaceSpec>& places, long degree_n);
// Number of archimedean places in T.
long archimedean_in_t(const std::vector<PlaceSpec>& places);

// (Z/f)^* or a quotient of it, with the residue -> element map.
class DirichletGroup {
 public:
  static DirichletGroup full(long f);
  DirichletGroup quotient(const Subgroup& kernel) const;

  long modulus() const { return f_; }
  const GroupPtr& group() const { return group_; }
  // Element of G for a unit residue a mod f; -1 if gcd(a, f) > 1.
  long element_of(long a) const;
  long character_conductor(const Character& chi) const;
  // chi_prim(a) for the primitive character inducing chi; zero if gcd(a, cond) > 1.
  CyclotomicRational primitive_value(const Character& chi, long a) const;

  PlaceSpec prime_place(long q, bool in_s, bool in_t) const;
  static PlaceSpec infinite_place(bool in_s, bool in_t);

 private:
  long f_ = 1;
  GroupPtr group_;
  std::vector<long> residue_to_element_;
};

// L(chi, 0) = -B_{1,chi} for the primitive character attached to chi.
// Throws EvenCharacter.
CyclotomicRational l_value_bernoulli(const DirichletGroup& d, const Character& chi);

// L_{S,T}(chi, 0) from L(chi, 0).
CyclotomicRational smooth_l_value(const DirichletGroup& d, const CyclotomicRational& l_value, const Character& chi,
                                  const std::vector<PlaceSpec>& places);

// Keyed by the character index of chi; the value is L_{S,T}(chi^{-1}, 0).
struct LValueTable {
  std::map<long, CyclotomicRational> values;
  std::string provenance = "computed-internally";
};

LValueTable compute_l_value_table(const DirichletGroup& d, const std::vector<PlaceSpec>& places);

struct ThetaElement {
  GroupRingElement theta;
  std::vector<PlaceSpec> places;
  long t = 0;
  long degree_n = 1;
  bool deligne_ribet = false;
  bool integral = false;
};

// Fourier inversion of the odd-character values; even components are zero.
ThetaElement assemble_theta(const GroupPtr& g, const std::vector<PlaceSpec>& places, const LValueTable& table,
                            long degree_n = 1);
// Partial-zeta formula for F = Q; S must contain every prime dividing f.
ThetaElement kubota_oracle_theta(const DirichletGroup& d, const std::vector<PlaceSpec>& places);
ThetaElement kubota_oracle_theta(long f, const std::vector<PlaceSpec>& places);

enum class ShiftMode { kDeplete, kSmooth };

ThetaElement euler_shift(const ThetaElement& theta, const PlaceSpec& q, ShiftMode mode);
// The same shift applied to table values.
LValueTable shift_table(const LValueTable& table, const GroupPtr& g, const PlaceSpec& q, ShiftMode mode);

}  // namespace brumer
