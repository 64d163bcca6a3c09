#include "brumer/ritter_weiss.hpp"

#include <algorithm>

#include "brumer/cyclotomic.hpp"
#include "brumer/errors.hpp"
#include "brumer/tor.hpp"

namespace brumer {

namespace {

bool contains_all(const Subgroup& big, const Subgroup& small) {
  return std::all_of(small.elements.begin(), small.elements.end(), [&](long x) { return big.contains(x); });
}

long index_in(const SubgroupEmbedding& e, long ambient) {
  auto it = std::find(e.embedding.begin(), e.embedding.end(), ambient);
  if (it == e.embedding.end()) fail(ErrorCode::kInvalidArgument, "element outside the decomposition group");
  return static_cast<long>(it - e.embedding.begin());
}

GModule sum_of(const std::vector<GModule>& parts) {
  GModule acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = direct_sum(acc, parts[i]);
  return acc;
}

bool c_in_decomposition(const FiniteAbelianGroup& g, const LocalPlace& v) {
  return g.has_conjugation() && v.decomposition.contains(g.conjugation());
}

long index_of_subgroup(const FiniteAbelianGroup& g, const Subgroup& h) { return g.order() / h.order(); }

}  // namespace

void validate_place(const FiniteAbelianGroup& g, const LocalPlace& v) {
  if (v.decomposition.elements.empty())
    fail(ErrorCode::kMissingDecompositionData, "place " + v.label + " has no decomposition group");
  as_subgroup(g, v.decomposition.elements);
  if (v.inertia.elements.empty()) fail(ErrorCode::kMissingDecompositionData, "place " + v.label + " has no inertia group");
  as_subgroup(g, v.inertia.elements);
  if (!contains_all(v.decomposition, v.inertia))
    fail(ErrorCode::kInvalidArgument, "place " + v.label + ": inertia is not inside the decomposition group");
  if (!v.decomposition.contains(v.frobenius))
    fail(ErrorCode::kInvalidArgument, "place " + v.label + ": Frobenius outside the decomposition group");
  if (v.archimedean && (v.inertia.elements != v.decomposition.elements || v.decomposition.order() > 2))
    fail(ErrorCode::kInvalidArgument, "place " + v.label + ": archimedean places need I_w = G_w of order <= 2");
  if (v.in_s && v.in_t) fail(ErrorCode::kSetsOverlap, "place " + v.label + " is in both S and T");
}

LocalW build_local_W(const GroupPtr& g, const LocalPlace& v) {
  validate_place(*g, v);
  if (v.in_s || v.in_t) fail(ErrorCode::kPlaceInSorT, "W_w is defined for places outside S and T: " + v.label);
  SubgroupEmbedding dec = subgroup_structure(g, v.decomposition);
  const GroupPtr& d = dec.source;
  std::vector<long> inertia_local;
  for (long x : v.inertia.elements) inertia_local.push_back(index_in(dec, x));
  std::sort(inertia_local.begin(), inertia_local.end());
  QuotientMap q = quotient_group(d, as_subgroup(*d, inertia_local));
  const long sigma = q.image[static_cast<std::size_t>(index_in(dec, v.frobenius))];

  const std::size_t gw = static_cast<std::size_t>(d->order());
  const std::size_t fw = static_cast<std::size_t>(q.target->order());
  // Columns: aug(x), then the coordinates of xbar - (1 - sigma^{-1}) y.
  IntMatrix conditions(gw + fw, 1 + fw);
  for (std::size_t x = 0; x < gw; ++x) {
    conditions(x, 0) = 1;
    conditions(x, 1 + static_cast<std::size_t>(q.image[x])) += 1;
  }
  for (long t = 0; t < q.target->order(); ++t) {
    const std::size_t row = gw + static_cast<std::size_t>(t);
    conditions(row, 1 + static_cast<std::size_t>(t)) -= 1;
    conditions(row, 1 + static_cast<std::size_t>(q.target->sub(t, sigma))) += 1;
  }
  IntMatrix kernel = left_kernel(conditions);

  GModule ambient = direct_sum(GModule::regular(d), GModule::regular(q.target).inflate(q, d));
  Submodule w = submodule(ambient, kernel);
  const std::size_t rank = w.basis.rows();

  IntMatrix pi1(rank, gw);
  IntMatrix pi2(rank, gw);
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t x = 0; x < gw; ++x) pi1(i, x) = w.basis(i, x);
    for (std::size_t x = 0; x < gw; ++x) pi2(i, x) = w.basis(i, gw + static_cast<std::size_t>(q.image[x]));
  }
  GModule dual = w.module.dual();
  GModule cokernel = direct_sum(GModule::regular(d), GModule::regular(d)).quotient(pi1.beside(pi2));
  return {std::move(dec), std::move(q), std::move(w.module), std::move(w.basis), std::move(pi1), std::move(pi2),
          std::move(dual), std::move(cokernel)};
}

bool DivisorModules::is_exact() const {
  const bool at_x = homology(IntMatrix(0, x.dim()), x_basis, x.relations(), y.relations()).is_trivial();
  const bool at_y = homology(x_basis, degree, y.relations(), IntMatrix(0, 1)).is_trivial();
  const bool at_z = homology(degree, IntMatrix(1, 0), IntMatrix(0, 1), IntMatrix(0, 0)).is_trivial();
  return at_x && at_y && at_z;
}

DivisorModules build_XY(const GroupPtr& g, const std::vector<LocalPlace>& places) {
  std::vector<GModule> parts;
  std::vector<IntVector> degrees;
  DivisorModules dm{GModule::trivial(g, {}), IntMatrix(), GModule::trivial(g, {}), IntMatrix(), {}, 0, 0};
  for (const auto& v : places) {
    validate_place(*g, v);
    if (v.in_s) {
      GModule block = GModule::permutation(g, v.decomposition);
      degrees.emplace_back(block.dim(), Integer(1));
      parts.push_back(std::move(block));
      dm.components.push_back(v.label);
      ++dm.s_places;
    }
  }
  if (dm.s_places == 0) fail(ErrorCode::kInvalidArgument, "S must be nonempty");
  for (const auto& v : places) {
    if (v.in_s || v.in_t || v.archimedean || v.inertia.order() == 1) continue;
    LocalW w = build_local_W(g, v);
    GModule block = induce(w.cokernel, g, w.decomposition);
    const std::size_t gw = w.decomposition.embedding.size();
    IntVector deg(block.dim());
    for (std::size_t start = 0; start < block.dim(); start += 2 * gw)
      for (std::size_t x = 0; x < gw; ++x) deg[start + x] = 1;
    degrees.push_back(std::move(deg));
    parts.push_back(std::move(block));
    dm.components.push_back(v.label);
    ++dm.ramified_places;
  }
  dm.y = sum_of(parts);
  dm.degree = IntMatrix(dm.y.dim(), 1);
  std::size_t row = 0;
  for (const auto& deg : degrees)
    for (const auto& e : deg) dm.degree(row++, 0) = e;
  IntMatrix kernel = preimage_lattice(dm.degree, IntMatrix(0, 1));
  Submodule x = submodule(dm.y, kernel);
  dm.x = std::move(x.module);
  dm.x_basis = std::move(x.basis);
  return dm;
}

bool ExactnessReport::passed() const {
  if (!exact || x_minus_order != presented_order) return false;
  if (hypothesis && assumption_a && (!tor1_minus.empty() || !minus_sequence_exact)) return false;
  if (size_formula_applies && x_minus_order != predicted_order) return false;
  return true;
}

ExactnessReport exactness_and_size_check(const DivisorModules& dm, const std::vector<LocalPlace>& places) {
  const GroupPtr& g = dm.y.group();
  if (!g->has_conjugation()) fail(ErrorCode::kTrivialConjugation, "exactness check needs c != 1");
  ExactnessReport r;
  r.exact = dm.is_exact();
  bool all_c = true;
  long cosets = 0;
  for (const auto& v : places) {
    if (!v.in_s) continue;
    if (c_in_decomposition(*g, v))
      r.hypothesis = true;
    else
      all_c = false;
    cosets += index_of_subgroup(*g, v.decomposition);
  }
  r.assumption_a = dm.ramified_places == 0;
  r.tor1_minus = tor_sign(dm.x, Sign::kMinus, 1).invariants();

  GModule x_minus = dm.x_minus();
  GModule y_minus = dm.y_minus();
  const IntMatrix z_minus = IntMatrix::diagonal(std::vector<Integer>{Integer(2)});
  const bool injective = homology(IntMatrix(0, dm.x.dim()), dm.x_basis, x_minus.relations(), y_minus.relations()).is_trivial();
  const bool middle = homology(dm.x_basis, dm.degree, y_minus.relations(), z_minus).is_trivial();
  r.minus_sequence_exact = injective && middle;

  r.size_formula_applies = all_c && dm.ramified_places == 0;
  r.x_minus_order = x_minus.order();
  r.presented_order = presented_module(minus_presentation(dm.x)).order();
  Integer predicted;
  mpz_ui_pow_ui(predicted.get_mpz_t(), 2, static_cast<unsigned long>(cosets - 1));
  r.predicted_order = predicted;
  return r;
}

RankProfile character_rank_profile(const std::vector<LocalPlace>& places, const Character& chi) {
  RankProfile p;
  const long correction = chi.is_trivial() ? 1 : 0;
  for (const auto& v : places) {
    if (v.decomposition.elements.empty())
      fail(ErrorCode::kMissingDecompositionData, "place " + v.label + " has no decomposition group");
    const bool fixed = chi.trivial_on(v.decomposition.elements);
    if (v.in_s && fixed) ++p.divisor_side;
    if ((v.in_s || (v.in_t && v.archimedean)) && fixed) ++p.unit_side;
  }
  p.divisor_side -= correction;
  p.unit_side -= correction;
  return p;
}

long isotypic_rank(const GModule& m, const Character& chi) {
  const auto& g = *m.group();
  const long modulus = chi.modulus();
  CyclotomicRational acc(modulus);
  for (long x = 0; x < g.order(); ++x)
    acc += CyclotomicRational::root_of_unity(modulus, -chi.value_exponent(x)) * m.rational_trace(x);
  if (!acc.is_rational()) fail(ErrorCode::kInvalidArgument, "character multiplicity is not rational");
  Rational mult = acc.rational_value() / Rational(g.order());
  if (mult.get_den() != 1) fail(ErrorCode::kInvalidArgument, "character multiplicity is not integral");
  return mult.get_num().get_si();
}

CoinvarianceReport coinvariance_check(const GroupPtr& g, const std::vector<LocalPlace>& s_places, const Subgroup& h) {
  CoinvarianceReport r;
  std::vector<long> gens;
  for (const auto& v : s_places)
    for (long x : v.decomposition.elements)
      if (h.contains(x)) gens.push_back(x);
  r.applicable = subgroup_generated_by(*g, gens).order() == h.order();

  QuotientMap q = quotient_group(g, h);
  DivisorModules top = build_XY(g, s_places);
  GModule pushed = top.x.coinvariants(h, q);

  std::vector<LocalPlace> images;
  for (const auto& v : s_places) {
    LocalPlace w = v;
    auto image_of = [&](const Subgroup& s) {
      std::vector<long> img;
      for (long x : s.elements) img.push_back(q.image[static_cast<std::size_t>(x)]);
      return subgroup_generated_by(*q.target, img);
    };
    w.decomposition = image_of(v.decomposition);
    w.inertia = image_of(v.inertia);
    w.frobenius = q.image[static_cast<std::size_t>(v.frobenius)];
    images.push_back(std::move(w));
  }
  DivisorModules bottom = build_XY(q.target, images);
  r.coinvariants_invariants = pushed.underlying().invariants();
  r.quotient_invariants = bottom.x.underlying().invariants();
  r.coinvariants_fixed = pushed.fixed_points().invariants();
  r.quotient_fixed = bottom.x.fixed_points().invariants();
  return r;
}

GroupRingElement shift_factor(const GroupPtr& g, SetChange change, long frobenius, long norm) {
  switch (change) {
    case SetChange::kArchimedeanToT:
      return GroupRingElement::scalar(g, Rational(2));
    case SetChange::kDeplete:
      return GroupRingElement::basis(g, frobenius) - GroupRingElement::scalar(g, Rational(1));
    case SetChange::kSmooth:
      return GroupRingElement::basis(g, frobenius) - GroupRingElement::scalar(g, Rational(norm));
  }
  fail(ErrorCode::kInvalidArgument, "unknown set change");
}

}  // namespace brumer
