#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "brumer/fitting.hpp"
#include "brumer/group.hpp"
#include "brumer/group_ring.hpp"
#include "brumer/linalg.hpp"

namespace brumer {

// A finitely generated G-module Z^n / L. Group elements act on row vectors from
// the right: g.x = x * action(g). L is stored in Hermite form.
class GModule {
 public:
  // generator_actions[i] is the matrix of the i-th cyclic generator of G.
  // Throws ActionMismatch when the matrices do not define a G-action on Z^n/L.
  GModule(GroupPtr group, std::size_t dim, const IntMatrix& relations, std::vector<IntMatrix> generator_actions);

  // Direct sum of Z/d (d = 0 for Z) with trivial action.
  static GModule trivial(GroupPtr group, const std::vector<Integer>& cyclic_orders);
  // Z/d summands on which generator i acts by multipliers[i].
  static GModule twisted(GroupPtr group, const std::vector<Integer>& cyclic_orders, std::span<const long> multipliers);
  static GModule regular(GroupPtr group);
  // Z[G/H] with basis the cosets.
  static GModule permutation(GroupPtr group, const Subgroup& h);

  const GroupPtr& group() const { return group_; }
  std::size_t dim() const { return dim_; }
  const IntMatrix& relations() const { return hnf_; }
  const IntMatrix& action(long g) const { return actions_[static_cast<std::size_t>(g)]; }
  IntMatrix action_of(const GroupRingElement& x) const;
  IntMatrix norm_action(const Subgroup& h) const;

  IntVector reduce(std::span<const Integer> v) const;
  bool is_zero(std::span<const Integer> v) const;
  Subquotient underlying() const { return Subquotient::cokernel(hnf_, dim_); }
  Integer order() const { return underlying().order(); }

  GModule restrict_to(const SubgroupEmbedding& e) const;
  // Quotient by the G-submodule generated by the rows of `extra`.
  GModule quotient(const IntMatrix& extra) const;
  GModule minus_part() const;  // M / (1 + c)M
  GModule plus_part() const;   // M / (1 - c)M
  // M_H as a module over G/H (the group of `q`).
  GModule coinvariants(const Subgroup& h, const QuotientMap& q) const;
  // A G/H-module viewed as a G-module.
  GModule inflate(const QuotientMap& q, const GroupPtr& big) const;
  // Contragredient action on Hom(M, Z); requires M free (L = 0).
  GModule dual() const;
  // Trace of g on M tensor Q.
  Rational rational_trace(long g) const;

  Subquotient fixed_points() const;           // M^G
  Subquotient torsion(const Integer& k) const;  // M[k]

 private:
  GroupPtr group_;
  std::size_t dim_ = 0;
  IntMatrix hnf_;
  std::vector<std::size_t> pivots_;
  std::vector<IntMatrix> actions_;

  IntMatrix reduce_rows(const IntMatrix& a) const;
};

GModule direct_sum(const GModule& a, const GModule& b);

// The G-submodule generated by `gens` (plus L), in coordinates of a lattice basis.
struct Submodule {
  GModule module;
  IntMatrix basis;  // rows in the ambient Z^n
};
Submodule submodule(const GModule& m, const IntMatrix& gens);

// Ind_H^G of a module over the abstract group of `e`.
GModule induce(const GModule& m, const GroupPtr& big, const SubgroupEmbedding& e);

// Coset representatives of G/H, the identity first.
std::vector<long> coset_representatives(const FiniteAbelianGroup& g, const Subgroup& h);

// Block-diagonal copy of `rel` repeated k times.
IntMatrix repeat_relations(const IntMatrix& rel, std::size_t k);

// Z[G]-presentation: generators e_i, relations from L and g.e_i - e_i A_g.
Presentation<GroupRingElement> module_presentation(const GModule& m);
Presentation<MinusElement> minus_presentation(const GModule& m);

}  // namespace brumer
