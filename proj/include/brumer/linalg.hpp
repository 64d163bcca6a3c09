#pragma once

// Exact integer and rational linear algebra. Row-vector convention: a matrix
// F acts by x -> xF, and lattices are spanned by rows.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "brumer/numbers.hpp"

namespace brumer {

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix diagonal(std::span<const Integer> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  void set_row(std::size_t i, std::span<const Integer> values);
  void append_row(std::span<const Integer> values);
  void swap_rows(std::size_t a, std::size_t b);
  // row a += k * row b
  void add_row_multiple(std::size_t a, std::size_t b, const Integer& k);

  IntMatrix transpose() const;
  IntMatrix stacked(const IntMatrix& below) const;
  IntMatrix beside(const IntMatrix& right) const;
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  IntMatrix select_rows(std::span<const std::size_t> idx) const;
  IntMatrix without_zero_rows() const;
  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Integer& k, const IntMatrix& a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntVector row_times(std::span<const Integer> x, const IntMatrix& a);
IntVector direct_sum(std::span<const Integer> a, std::span<const Integer> b);
bool is_zero(std::span<const Integer> v);

struct HermiteResult {
  IntMatrix form;       // transform * input, echelon with positive reduced pivots
  IntMatrix transform;  // unimodular; empty if not requested
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

HermiteResult hermite(const IntMatrix& a, bool with_transform = false);
// Z-basis (HNF rows) of the row lattice.
IntMatrix row_lattice_basis(const IntMatrix& a);
// Z-basis of {x : xA = 0}, in Hermite form.
IntMatrix left_kernel(const IntMatrix& a);
// Some integral x with xA = b, if one exists.
std::optional<IntVector> solve_left(const IntMatrix& a, std::span<const Integer> b);

struct SmithResult {
  IntMatrix left;         // U
  IntMatrix right;        // V, with U * A * V = D
  IntMatrix right_inverse;
  std::vector<Integer> diagonal;  // d_1 | d_2 | ... (positive), length = rank
};

SmithResult smith(const IntMatrix& a, bool with_transforms = true);

// Finitely generated abelian group K/L for lattices L ⊆ K ⊆ Z^n given by
// spanning rows. Elements of K are mapped to canonical coordinates.
class Subquotient {
 public:
  Subquotient(const IntMatrix& k_gens, const IntMatrix& l_gens);
  // Z^n / L
  static Subquotient cokernel(const IntMatrix& l_gens, std::size_t n);

  // Nontrivial invariant factors in divisor-chain order; 0 marks a free summand.
  const std::vector<Integer>& invariants() const& { return invariants_; }
  // Temporaries hand out a copy, so `for (auto& d : tate_group(m, 2).invariants())` is safe.
  std::vector<Integer> invariants() && { return std::move(invariants_); }
  Integer order() const;  // 0 if infinite
  bool is_trivial() const { return invariants_.empty(); }
  std::size_t ambient_dim() const { return dim_; }

  bool contains(std::span<const Integer> v) const;
  IntVector coordinates(std::span<const Integer> v) const;
  bool is_zero_class(std::span<const Integer> v) const;
  Integer element_order(std::span<const Integer> v) const;  // 0 if infinite
  IntVector lift(std::span<const Integer> coords) const;
  // Lifts of the canonical generators.
  std::vector<IntVector> generators() const;

 private:
  std::size_t dim_ = 0;
  IntMatrix k_basis_;
  std::vector<std::size_t> k_pivots_;
  IntMatrix v_;
  IntMatrix v_inv_;
  std::vector<std::size_t> kept_;       // SNF coordinates with d != 1
  std::vector<Integer> kept_modulus_;   // d (0 = free)
  std::vector<Integer> invariants_;

  std::optional<IntVector> basis_coordinates(std::span<const Integer> v) const;
};

// Homology at the middle term of  Z^a/R_a --d_in--> Z^b/R_b --d_out--> Z^c/R_c.
Subquotient homology(const IntMatrix& d_in, const IntMatrix& d_out, const IntMatrix& rel_mid,
                     const IntMatrix& rel_out);
// Rows x of Z^b with x*d_out ∈ rowspan(rel_out), as a lattice basis.
IntMatrix preimage_lattice(const IntMatrix& d_out, const IntMatrix& rel_out);

// Rational elimination helpers.
std::size_t rational_rank(const std::vector<RatVector>& rows);
// Whether v lies in the Q-span of rows.
bool in_rational_span(const std::vector<RatVector>& rows, const RatVector& v);
std::optional<RatVector> solve_left_rational(const std::vector<RatVector>& rows, const RatVector& b);
Rational rational_determinant(std::vector<RatVector> m);

std::vector<Integer> sorted_invariants(std::vector<Integer> invariants);
// Canonical divisor-chain form of ⊕ Z/d_i (d_i = 0 free, 1 dropped).
std::vector<Integer> normalize_invariants(const std::vector<Integer>& cyclic_orders);

}  // namespace brumer
