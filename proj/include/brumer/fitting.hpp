#pragma once

#include <concepts>
#include <cstddef>
#include <string>
#include <vector>

#include "brumer/errors.hpp"
#include "brumer/group_ring.hpp"
#include "brumer/linalg.hpp"
#include "brumer/padic.hpp"

namespace brumer {

template <class E>
concept RingElement = requires(const E& a, const E& b) {
  { a + b } -> std::convertible_to<E>;
  { a - b } -> std::convertible_to<E>;
  { a * b } -> std::convertible_to<E>;
  { a.zero_like() } -> std::convertible_to<E>;
  { a.one_like() } -> std::convertible_to<E>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.sharp() } -> std::convertible_to<E>;
  a.basis_elements();
  a.coordinates();
};

template <RingElement E>
using Matrix = std::vector<std::vector<E>>;

// Module generated by `generators` elements subject to the rows of `relations`.
template <RingElement E>
class Presentation {
 public:
  Presentation(E prototype, std::size_t generators, Matrix<E> relations)
      : prototype_(prototype.zero_like()), generators_(generators), relations_(std::move(relations)) {
    for (const auto& row : relations_)
      if (row.size() != generators_) fail(ErrorCode::kInvalidArgument, "relation row has wrong length");
  }

  std::size_t generators() const { return generators_; }
  std::size_t relation_count() const { return relations_.size(); }
  const Matrix<E>& relations() const { return relations_; }
  const E& entry(std::size_t i, std::size_t j) const { return relations_[i][j]; }
  const E& prototype() const { return prototype_; }
  bool is_quadratic() const { return relations_.size() == generators_; }

 private:
  E prototype_;
  std::size_t generators_;
  Matrix<E> relations_;
};

template <RingElement E>
struct IdealGens {
  E prototype;
  std::vector<E> gens;
  bool is_zero() const {
    for (const auto& g : gens)
      if (!g.is_zero()) return false;
    return true;
  }
};

// Division-free determinant (Berkowitz): valid over any commutative ring.
template <RingElement E>
E determinant(const Matrix<E>& a, const E& prototype) {
  const std::size_t n = a.size();
  const E zero = prototype.zero_like();
  const E one = prototype.one_like();
  if (n == 0) return one;
  std::vector<E> c{one, zero - a[0][0]};
  for (std::size_t r = 1; r < n; ++r) {
    // Leading r x r block A_r, column S = a[0..r-1][r], row R = a[r][0..r-1].
    std::vector<E> t{one, zero - a[r][r]};
    std::vector<E> v(r, zero);
    for (std::size_t i = 0; i < r; ++i) v[i] = a[i][r];
    for (std::size_t k = 0; k < r; ++k) {
      E dot = zero;
      for (std::size_t j = 0; j < r; ++j) dot = dot + a[r][j] * v[j];
      t.push_back(zero - dot);
      if (k + 1 < r) {
        std::vector<E> w(r, zero);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) w[i] = w[i] + a[i][j] * v[j];
        v = std::move(w);
      }
    }
    std::vector<E> next(r + 2, zero);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= i && j < c.size(); ++j) next[i] = next[i] + t[i - j] * c[j];
    c = std::move(next);
  }
  return n % 2 == 0 ? c[n] : zero - c[n];
}

// Laplace expansion along the first row.
template <RingElement E>
E determinant_by_expansion(const Matrix<E>& a, const E& prototype) {
  const std::size_t n = a.size();
  if (n == 0) return prototype.one_like();
  if (n == 1) return a[0][0];
  E acc = prototype.zero_like();
  for (std::size_t j = 0; j < n; ++j) {
    Matrix<E> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<E> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(std::move(row));
    }
    E term = a[0][j] * determinant_by_expansion(minor, prototype);
    acc = j % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

template <RingElement E>
IdealGens<E> fitting_ideal(const Presentation<E>& p) {
  const std::size_t r = p.generators();
  const std::size_t s = p.relation_count();
  IdealGens<E> out{p.prototype(), {}};
  if (r == 0) {
    out.gens.push_back(p.prototype().one_like());
    return out;
  }
  if (s < r) {
    out.gens.push_back(p.prototype().zero_like());
    return out;
  }
  std::vector<std::size_t> pick(r);
  for (std::size_t i = 0; i < r; ++i) pick[i] = i;
  while (true) {
    Matrix<E> m;
    for (std::size_t i : pick) m.push_back(p.relations()[i]);
    out.gens.push_back(determinant(m, p.prototype()));
    std::size_t k = r;
    while (k > 0 && pick[k - 1] == s - r + (k - 1)) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t j = k; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

template <RingElement E>
Presentation<E> jannsen_transpose(const Presentation<E>& p) {
  Matrix<E> t(p.generators(), std::vector<E>(p.relation_count(), p.prototype()));
  for (std::size_t i = 0; i < p.relation_count(); ++i)
    for (std::size_t j = 0; j < p.generators(); ++j) t[j][i] = p.entry(i, j).sharp();
  return Presentation<E>(p.prototype(), p.relation_count(), std::move(t));
}

template <RingElement E>
Presentation<E> direct_sum(const Presentation<E>& a, const Presentation<E>& b) {
  const E zero = a.prototype().zero_like();
  const std::size_t r = a.generators() + b.generators();
  Matrix<E> rel;
  for (const auto& row : a.relations()) {
    std::vector<E> full(row);
    full.resize(r, zero);
    rel.push_back(std::move(full));
  }
  for (const auto& row : b.relations()) {
    std::vector<E> full(a.generators(), zero);
    full.insert(full.end(), row.begin(), row.end());
    rel.push_back(std::move(full));
  }
  return Presentation<E>(a.prototype(), r, std::move(rel));
}

template <RingElement E>
Presentation<E> append_identity_block(const Presentation<E>& p, std::size_t k) {
  const E zero = p.prototype().zero_like();
  Matrix<E> id(k, std::vector<E>(k, zero));
  for (std::size_t i = 0; i < k; ++i) id[i][i] = p.prototype().one_like();
  return direct_sum(p, Presentation<E>(p.prototype(), k, std::move(id)));
}

// Pushes entries along Z[G] -> Z[G/H']. The relations (h - 1) e_i map to zero
// rows and are omitted.
Presentation<GroupRingElement> coinvariants(const Presentation<GroupRingElement>& p, const Subgroup& h);
Presentation<GroupRingElement> coinvariants(const Presentation<GroupRingElement>& p, std::span<const long> subgroup_elements);

// Integer matrix of the presented module over the Z-basis of the ring:
// M = Z^{r d} / rowspan. Entries must have integral coordinates.
template <RingElement E>
IntMatrix integer_relation_matrix(const Presentation<E>& p) {
  const auto basis = p.prototype().basis_elements();
  const std::size_t d = basis.size();
  IntMatrix out(0, p.generators() * d);
  for (const auto& row : p.relations()) {
    for (const auto& b : basis) {
      IntVector v(p.generators() * d);
      for (std::size_t j = 0; j < p.generators(); ++j) {
        if (row[j].is_zero()) continue;
        const auto prod = b * row[j];
        const auto& coords = prod.coordinates();
        for (std::size_t k = 0; k < d; ++k) {
          if (coords[k].get_den() != 1) fail(ErrorCode::kNotIntegral, "integer_relation_matrix needs integral entries");
          v[j * d + k] = coords[k].get_num();
        }
      }
      out.append_row(v);
    }
  }
  return out;
}

template <RingElement E>
Subquotient presented_module(const Presentation<E>& p) {
  const std::size_t n = p.generators() * p.prototype().basis_elements().size();
  return Subquotient::cokernel(integer_relation_matrix(p), n);
}

enum class IdealRelation { kEqual, kFirstInSecond, kSecondInFirst, kIncomparable };
std::string to_string(IdealRelation r);

// Rows coords(gen * basis) for the Z_p-span of an ideal.
template <RingElement E>
std::vector<RatVector> ideal_span_rows(const IdealGens<E>& ideal) {
  std::vector<RatVector> rows;
  const auto basis = ideal.prototype.basis_elements();
  for (const auto& g : ideal.gens)
    for (const auto& b : basis) rows.push_back((g * b).coordinates());
  return rows;
}

// p-adic comparison of the Z_p-spans; throws PrecisionExhausted when a pivot
// valuation reaches precision - guard or the p-adic rank falls short of the
// exact rank.
IdealRelation compare_spans(const std::vector<RatVector>& a, const std::vector<RatVector>& b, const Integer& p,
                            long precision, long guard);

template <RingElement E>
IdealRelation ideal_compare(const IdealGens<E>& a, const IdealGens<E>& b, const Integer& p,
                            long precision = kDefaultPrecision, long guard = kDefaultGuard) {
  return compare_spans(ideal_span_rows(a), ideal_span_rows(b), p, precision, guard);
}

struct ModuleSize {
  bool finite = false;
  Integer size = 0;  // a power of p when finite
};

// #(Z_p / prod_{psi} psi(x)), or infinite when some psi(x) = 0.
ModuleSize module_size(const GroupRingElement& x, const std::vector<Character>& psi, const Integer& p,
                       long precision = kDefaultPrecision, long guard = kDefaultGuard);
ModuleSize module_size(const MinusElement& x, const std::vector<Character>& psi, const Integer& p,
                       long precision = kDefaultPrecision, long guard = kDefaultGuard);

}  // namespace brumer
