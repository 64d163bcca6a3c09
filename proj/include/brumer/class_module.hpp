#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "brumer/gmodule.hpp"
#include "brumer/group.hpp"
#include "brumer/linalg.hpp"

namespace brumer {

// Inhomogeneous 2-cochain G x G -> C as a dense table, entry (a, b) at a * |G| + b.
class Cocycle {
 public:
  Cocycle(GroupPtr group, std::size_t dim, std::vector<IntVector> values);
  static Cocycle zero(GroupPtr group, std::size_t dim);
  // Z/n with values in Z: f(a, b) = 1 if a + b >= n else 0.
  static Cocycle carry(GroupPtr cyclic_group);

  const GroupPtr& group() const { return group_; }
  std::size_t dim() const { return dim_; }
  const IntVector& operator()(long a, long b) const;
  Cocycle restrict_to(const SubgroupEmbedding& e) const;

 private:
  GroupPtr group_;
  std::size_t dim_ = 0;
  std::vector<IntVector> values_;
};

// Throws NotCocycle when g f(h,k) - f(gh,k) + f(g,hk) - f(g,h) != 0 in C for some triple.
void check_cocycle(const GModule& c, const Cocycle& f);
// f - d(phi) with phi the constant cochain f(1, 1); the result vanishes on (1, *) and (*, 1).
Cocycle normalize(const GModule& c, const Cocycle& f);

// 0 -> C -> C(gamma) -> Z[G] -> Z -> 0. C(gamma) has coordinates (C, [g] for g != 1).
struct TwoExtension {
  GModule c;
  GModule c_gamma;
  GModule group_ring;
  IntMatrix inclusion;      // C -> C(gamma)
  IntMatrix to_group_ring;  // [h] -> h - 1
  IntMatrix augmentation;   // Z[G] -> Z

  std::size_t symbol(long g) const { return c.dim() + static_cast<std::size_t>(g) - 1; }
  bool is_exact() const;
};

struct ClassModuleVerdict {
  bool h1_vanishes = false;
  std::vector<Integer> h2_invariants;
  bool h2_cyclic_of_group_order = false;
  Integer gamma_order = 0;
  bool gamma_generates = false;
  // Subgroups (by element list) and degrees where C(gamma) has nonzero Tate cohomology.
  std::vector<std::pair<std::vector<long>, int>> nontrivial_tate;

  bool cohomologically_trivial() const { return nontrivial_tate.empty(); }
  bool is_class_module() const {
    return h1_vanishes && h2_cyclic_of_group_order && gamma_generates && cohomologically_trivial();
  }
};

struct ClassModuleExtension {
  Cocycle cocycle;  // normalized
  TwoExtension extension;
  ClassModuleVerdict verdict;
};

TwoExtension build_two_extension(const GModule& c, const Cocycle& normalized);
ClassModuleExtension build_class_module_extension(const GModule& c, const Cocycle& f);

// rec: C^G -> G^ab = G through C^G = C(gamma)^G <-N- C(gamma)_G -> (I_G)_G.
// Throws NotClassModule for a negative verdict, InvalidArgument if x is not fixed by G.
long reciprocity(const ClassModuleExtension& ext, std::span<const Integer> x);

struct ReciprocityReport {
  std::vector<long> images;  // rec of the generators of C^G
  bool surjective = false;
  bool kills_norms = false;
  Integer h0_order = 0;  // #C^G / N_G C
  bool bijective_on_h0() const;
  long group_order = 0;
};
ReciprocityReport reciprocity_report(const ClassModuleExtension& ext);

// The class module (H', C, res gamma).
ClassModuleExtension restrict_class_module(const ClassModuleExtension& ext, const Subgroup& h);

// Cup product with res gamma: compares Tate groups in degrees (-2, 0) and checks that
// reciprocity is a bijection Ĥ^0(H', C) -> H' for every subgroup H'.
struct CupProductReport {
  std::vector<long> subgroup;
  std::vector<Integer> tate_z_minus2;
  std::vector<Integer> tate_c_zero;
  bool reciprocity_bijective = false;
  bool ok() const { return tate_z_minus2 == tate_c_zero && reciprocity_bijective; }
};
std::vector<CupProductReport> cup_product_check(const ClassModuleExtension& ext);

// Hom(X, A) as the lattice of matrices phi (row-major, X.dim() x A.dim()) with relations of X
// mapping into the relations of A. With `equivariant`, phi must also commute with the actions.
IntMatrix hom_lattice(const GModule& x, const GModule& a, bool equivariant);
// Homomorphisms with image in the relations of A (the zero class).
IntMatrix zero_homs(std::size_t x_dim, const GModule& a);

struct DualityReport {
  // Part 1: tau<=1 C*(H, A) against Hom(Z[G/H], A) -> Hom(E(G/H), A).
  std::vector<Integer> h0_cochains, h0_extension, h1_cochains, h1_extension;
  bool h1_map_injective = false;
  bool reciprocity_compatible = false;
  // Part 2: the G-equivariant version.
  std::vector<Integer> h0_cochains_g, h0_extension_g, h1_cochains_g, h1_extension_g;
  // Part 3: g -> [g] spans E(G/H), and the [h] span the kernel of E(G/H) -> Z[G/H].
  bool kappa_surjective = false;
  bool kernel_matches_subgroup = false;

  bool passed() const;
};

// E(G/H) = C(G)_H / C as a module over G/H, with its map to Z[G/H].
struct QuotientExtension {
  QuotientMap quotient;
  GModule e;
  IntMatrix to_group_ring;  // E -> Z[G/H]
};
QuotientExtension build_quotient_extension(const ClassModuleExtension& ext, const Subgroup& h);

// `a` is a module over the target group of quotient_group(G, H).
DualityReport duality_check(const ClassModuleExtension& ext, const Subgroup& h, const GModule& a);

}  // namespace brumer
