#include "brumer/fitting.hpp"

#include <algorithm>

namespace brumer {

Presentation<GroupRingElement> coinvariants(const Presentation<GroupRingElement>& p, const Subgroup& h) {
  const GroupPtr& g = p.prototype().group();
  QuotientMap q = quotient_group(g, h);
  const GroupRingElement proto = p.prototype().push_forward(q);
  Matrix<GroupRingElement> rel;
  for (const auto& row : p.relations()) {
    std::vector<GroupRingElement> pushed;
    for (const auto& a : row) pushed.push_back(a.push_forward(q));
    rel.push_back(std::move(pushed));
  }
  return Presentation<GroupRingElement>(proto, p.generators(), std::move(rel));
}

Presentation<GroupRingElement> coinvariants(const Presentation<GroupRingElement>& p,
                                            std::span<const long> subgroup_elements) {
  return coinvariants(p, as_subgroup(*p.prototype().group(), subgroup_elements));
}

std::string to_string(IdealRelation r) {
  switch (r) {
    case IdealRelation::kEqual: return "equal";
    case IdealRelation::kFirstInSecond: return "first-in-second";
    case IdealRelation::kSecondInFirst: return "second-in-first";
    case IdealRelation::kIncomparable: return "incomparable";
  }
  return "?";
}

namespace {

struct Pivot {
  IntVector row;
  std::size_t col;
  long val;
  Integer unit_inverse;
};

struct PadicEchelon {
  std::vector<Pivot> pivots;
  long max_val = 0;
};

PadicEchelon padic_echelon(std::vector<IntVector> rows, const Integer& p, const Integer& modulus, long precision) {
  PadicEchelon e;
  if (rows.empty()) return e;
  const std::size_t d = rows[0].size();
  std::vector<bool> used(rows.size(), false);
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t best = rows.size();
    long best_v = precision;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (used[i] || rows[i][col] == 0) continue;
      long v = valuation(rows[i][col], p, precision);
      if (v < best_v) {
        best_v = v;
        best = i;
      }
    }
    if (best == rows.size()) continue;
    used[best] = true;
    const Integer pv = ipow(p, static_cast<unsigned long>(best_v));
    Integer unit = rows[best][col] / pv;
    Integer inv;
    mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), modulus.get_mpz_t());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (used[i] || rows[i][col] == 0) continue;
      Integer coef = mod_floor(rows[i][col] / pv * inv, modulus);
      for (std::size_t j = 0; j < d; ++j) rows[i][j] = mod_floor(rows[i][j] - coef * rows[best][j], modulus);
    }
    e.pivots.push_back({rows[best], col, best_v, inv});
    e.max_val = std::max(e.max_val, best_v);
  }
  return e;
}

// Whether v lies in the Z_p-span, given its echelon form.
bool reduces_to_zero(IntVector v, const PadicEchelon& e, const Integer& p, const Integer& modulus, long precision) {
  for (const auto& piv : e.pivots) {
    const Integer& y = v[piv.col];
    if (y == 0) continue;
    if (valuation(y, p, precision) < piv.val) return false;
    const Integer pv = ipow(p, static_cast<unsigned long>(piv.val));
    Integer coef = mod_floor(y / pv * piv.unit_inverse, modulus);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = mod_floor(v[j] - coef * piv.row[j], modulus);
  }
  long residual = precision;
  for (const auto& x : v) residual = std::min(residual, valuation(x, p, precision));
  return residual >= precision - e.max_val;
}

std::vector<IntVector> residues(const std::vector<RatVector>& rows, const Integer& modulus) {
  std::vector<IntVector> out;
  for (const auto& r : rows) {
    IntVector v;
    for (const auto& x : r) v.push_back(reduce_rational(x, modulus));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

IdealRelation compare_spans(const std::vector<RatVector>& a, const std::vector<RatVector>& b, const Integer& p,
                            long precision, long guard) {
  const Integer modulus = ipow(p, static_cast<unsigned long>(precision));
  auto ra = residues(a, modulus);
  auto rb = residues(b, modulus);
  PadicEchelon ea = padic_echelon(ra, p, modulus, precision);
  PadicEchelon eb = padic_echelon(rb, p, modulus, precision);
  for (const auto* e : {&ea, &eb}) {
    if (e->max_val >= precision - guard)
      fail(ErrorCode::kPrecisionExhausted, "pivot valuation " + std::to_string(e->max_val) + " touches the guard band");
  }
  if (ea.pivots.size() < rational_rank(a) || eb.pivots.size() < rational_rank(b))
    fail(ErrorCode::kPrecisionExhausted, "p-adic rank below exact rank");

  auto contained = [&](const std::vector<RatVector>& rows, const std::vector<IntVector>& res, const std::vector<RatVector>& big,
                       const PadicEchelon& e) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!in_rational_span(big, rows[i])) return false;
      if (!reduces_to_zero(res[i], e, p, modulus, precision)) return false;
    }
    return true;
  };
  const bool a_in_b = contained(a, ra, b, eb);
  const bool b_in_a = contained(b, rb, a, ea);
  if (a_in_b && b_in_a) return IdealRelation::kEqual;
  if (a_in_b) return IdealRelation::kFirstInSecond;
  if (b_in_a) return IdealRelation::kSecondInFirst;
  return IdealRelation::kIncomparable;
}

namespace {

ModuleSize size_from_values(const std::vector<CyclotomicRational>& values, const Integer& p, long precision, long guard,
                            bool padic_input) {
  ModuleSize out;
  if (values.empty()) {
    out.finite = true;
    out.size = 1;
    return out;
  }
  CyclotomicRational prod = CyclotomicRational::constant(values.front().conductor(), 1);
  for (const auto& v : values) {
    if (v.is_zero()) return out;
    prod = prod * v;
  }
  long v;
  if (prod.is_rational()) {
    v = valuation(prod.rational_value(), p);
  } else {
    PAdicElement e = embed_padic(prod, p, precision);
    if (e.is_zero()) fail(ErrorCode::kPrecisionExhausted, "product of character values vanishes at working precision");
    v = e.valuation();
  }
  if (v < 0) fail(ErrorCode::kNotIntegral, "character values are not p-integral");
  if (padic_input && v >= precision - guard)
    fail(ErrorCode::kPrecisionExhausted, "module size valuation touches the guard band");
  out.finite = true;
  out.size = ipow(p, static_cast<unsigned long>(v));
  return out;
}

}  // namespace

ModuleSize module_size(const GroupRingElement& x, const std::vector<Character>& psi, const Integer& p, long precision,
                       long guard) {
  if (!is_padic_galois_stable(psi, p)) fail(ErrorCode::kInvalidArgument, "character set is not Galois stable");
  std::vector<CyclotomicRational> values;
  for (const auto& chi : psi) values.push_back(evaluate(chi, x));
  return size_from_values(values, p, precision, guard, x.ring().kind == BaseKind::kPAdic);
}

ModuleSize module_size(const MinusElement& x, const std::vector<Character>& psi, const Integer& p, long precision,
                       long guard) {
  if (!is_padic_galois_stable(psi, p)) fail(ErrorCode::kInvalidArgument, "character set is not Galois stable");
  std::vector<CyclotomicRational> values;
  for (const auto& chi : psi) values.push_back(evaluate(chi, x));
  return size_from_values(values, p, precision, guard, x.ring().kind == BaseKind::kPAdic);
}

}  // namespace brumer
