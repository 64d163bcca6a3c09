#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brumer/fitting.hpp"
#include "brumer/gmodule.hpp"
#include "brumer/group.hpp"
#include "brumer/group_ring.hpp"
#include "brumer/linalg.hpp"

namespace brumer {

struct LocalPlace {
  std::string label;
  bool archimedean = false;
  Subgroup decomposition;  // G_w
  Subgroup inertia;        // I_w, inside G_w
  long frobenius = 0;      // a lift of sigma_w to G_w
  bool in_s = false;
  bool in_t = false;
};

// Throws MissingDecompositionData / InvalidArgument on malformed subgroup data.
void validate_place(const FiniteAbelianGroup& g, const LocalPlace& v);

// W_w in Z[G_w] x Z[G_w/I_w], as a module over the abstract group G_w.
struct LocalW {
  SubgroupEmbedding decomposition;
  QuotientMap residue;  // G_w -> G_w/I_w
  GModule lattice;      // W_w in the coordinates of `basis`
  IntMatrix basis;      // rows (x, y) with x in Z[G_w], y in Z[G_w/I_w]
  IntMatrix pi1;        // W_w -> Z[G_w], (x, y) -> x
  IntMatrix pi2;        // W_w -> Z[G_w], (x, y) -> N(I_w) y
  GModule dual;         // Hom(W_w, Z) with the contragredient action
  GModule cokernel;     // Z[G_w]^2 / (pi1, pi2)(W_w), the model of W_w^* used in Y
};
// Throws PlaceInSorT for places in S or T.
LocalW build_local_W(const GroupPtr& g, const LocalPlace& v);

struct DivisorModules {
  GModule y;
  IntMatrix degree;  // Y -> Z
  GModule x;         // ker(degree)
  IntMatrix x_basis; // X inside Y
  std::vector<std::string> components;  // label of each Y block, in order
  std::size_t s_places = 0;
  std::size_t ramified_places = 0;

  GModule x_minus() const { return x.minus_part(); }
  GModule y_minus() const { return y.minus_part(); }
  bool is_exact() const;
};

// Y = (+)_{v in S} Z[G/G_v] (+) (+)_{ramified v outside S and T} Ind W_v^*. Requires S != {}.
DivisorModules build_XY(const GroupPtr& g, const std::vector<LocalPlace>& places);

struct ExactnessReport {
  bool exact = false;
  bool hypothesis = false;    // some v in S with c in G_v
  bool assumption_a = false;  // no ramified places outside S and T, so Y has no W blocks
  std::vector<Integer> tor1_minus;
  // Vanishing of Tor_1 and exactness of the minus sequence are asserted under hypothesis and (A).
  bool minus_sequence_exact = false;  // 0 -> X_- -> Y_- -> Z_- -> 0
  bool size_formula_applies = false;  // every place in S has c in G_v and there are no W blocks
  Integer x_minus_order = 0;
  Integer presented_order = 0;  // via the Z[G]_- presentation of X
  Integer predicted_order = 0;  // 2^{sum [G : G_v] - 1}
  bool passed() const;
};
// Throws TrivialConjugation.
ExactnessReport exactness_and_size_check(const DivisorModules& dm, const std::vector<LocalPlace>& places);

struct RankProfile {
  long divisor_side = 0;  // dim (X_{S,H} tensor C)^chi
  long unit_side = 0;     // dim (X_{S u T_inf,H} tensor C)^chi
};
// Combinatorial count #{v : chi|G_v = 1} - [chi = 1].
RankProfile character_rank_profile(const std::vector<LocalPlace>& places, const Character& chi);
// The same count from traces on the constructed X.
long isotypic_rank(const GModule& m, const Character& chi);

// X for G, then H'-coinvariants, against X for G/H' with the images of the decomposition
// groups. Only meaningful when H' is generated by the subgroups H' n G_v, v in S.
struct CoinvarianceReport {
  bool applicable = false;
  std::vector<Integer> coinvariants_invariants;
  std::vector<Integer> quotient_invariants;
  std::vector<Integer> coinvariants_fixed;
  std::vector<Integer> quotient_fixed;
  bool agree() const { return coinvariants_invariants == quotient_invariants && coinvariants_fixed == quotient_fixed; }
};
CoinvarianceReport coinvariance_check(const GroupPtr& g, const std::vector<LocalPlace>& s_places, const Subgroup& h);

enum class SetChange {
  kArchimedeanToT,  // moving a real place into T doubles the Fitting ideal
  kDeplete,         // adding an unramified v to S: factor sigma_v - 1
  kSmooth,          // adding an unramified v to T: factor sigma_v - Nv
};
GroupRingElement shift_factor(const GroupPtr& g, SetChange change, long frobenius, long norm);

template <RingElement E>
Presentation<E> shift_presentation(const Presentation<E>& p, const E& factor) {
  return direct_sum(p, Presentation<E>(p.prototype(), 1, Matrix<E>{{factor}}));
}

}  // namespace brumer
