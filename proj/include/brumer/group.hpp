#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace brumer {

using Exponents = std::vector<long>;

// Product of cyclic groups Z/d_1 x ... x Z/d_k with a designated element c of
// order dividing 2. Elements are indexed 0..order-1 in mixed radix (first
// coordinate fastest); index 0 is the identity.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup(std::vector<long> invariants, const Exponents& c);

  const std::vector<long>& invariants() const { return invariants_; }
  std::size_t rank() const { return invariants_.size(); }
  long order() const { return order_; }
  long exponent() const { return exponent_; }
  long conjugation() const { return c_; }
  bool has_conjugation() const { return c_ != 0; }

  long index(std::span<const long> e) const;
  Exponents element(long idx) const;
  long add(long a, long b) const;
  long neg(long a) const;
  long sub(long a, long b) const { return add(a, neg(b)); }
  long multiple(long a, long k) const;
  long element_order(long a) const;
  long generator(std::size_t i) const;  // index of the i-th unit vector

  bool operator==(const FiniteAbelianGroup& other) const {
    return invariants_ == other.invariants_ && c_ == other.c_;
  }

 private:
  std::vector<long> invariants_;
  std::vector<long> radix_;
  long order_ = 1;
  long exponent_ = 1;
  long c_ = 0;
};

using GroupPtr = std::shared_ptr<const FiniteAbelianGroup>;

// Throws EmptyGroup / NonInvolution.
GroupPtr build_group(const std::vector<long>& invariants, const Exponents& c_spec);

struct Subgroup {
  std::vector<long> elements;    // sorted indices in the ambient group
  std::vector<long> generators;  // a generating set
  bool contains(long g) const;
  long order() const { return static_cast<long>(elements.size()); }
};

Subgroup subgroup_generated_by(const FiniteAbelianGroup& g, std::span<const long> gens);
std::vector<Subgroup> all_subgroups(const FiniteAbelianGroup& g);
// Throws NotSubgroup if the elements are not closed under the group law.
Subgroup as_subgroup(const FiniteAbelianGroup& g, std::span<const long> elements);

// G -> G/H with the image of c as designated element.
struct QuotientMap {
  GroupPtr target;
  std::vector<long> image;  // indexed by ambient element
};
QuotientMap quotient_group(const GroupPtr& g, const Subgroup& h);

// H as an abstract group; embedding maps its element indices into G. The
// designated element is c if c lies in H, else the identity.
struct SubgroupEmbedding {
  GroupPtr source;
  std::vector<long> embedding;
};
SubgroupEmbedding subgroup_structure(const GroupPtr& g, const Subgroup& h);

// chi(g) = zeta_m^{value_exponent(g)} with m = exponent(G).
class Character {
 public:
  Character(GroupPtr group, Exponents exps);

  const GroupPtr& group() const { return group_; }
  const Exponents& exponents() const { return exps_; }
  long modulus() const { return group_->exponent(); }
  long value_exponent(long g) const;
  bool is_odd() const;
  bool is_trivial() const;
  long order() const;
  Character power(long k) const;
  Character inverse() const { return power(-1); }
  bool trivial_on(std::span<const long> elements) const;
  long index() const;  // position in list_characters

  bool operator==(const Character& o) const { return exps_ == o.exps_ && *group_ == *o.group_; }

 private:
  GroupPtr group_;
  Exponents exps_;
};

// |G| characters, ordered by exponent-vector index.
std::vector<Character> list_characters(const GroupPtr& g);

}  // namespace brumer
