#include "brumer/class_module.hpp"

#include <algorithm>

#include "brumer/cohomology.hpp"
#include "brumer/errors.hpp"

namespace brumer {

namespace {

std::size_t order_of(const FiniteAbelianGroup& g) { return static_cast<std::size_t>(g.order()); }

Subgroup whole_group(const FiniteAbelianGroup& g) {
  std::vector<long> gens;
  for (std::size_t i = 0; i < g.rank(); ++i) gens.push_back(g.generator(i));
  return subgroup_generated_by(g, gens);
}

IntVector unit_vector(std::size_t n, std::size_t i) {
  IntVector e(n);
  e[i] = 1;
  return e;
}

IntVector add(IntVector a, std::span<const Integer> b, long sign = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sign > 0)
      a[i] += b[i];
    else
      a[i] -= b[i];
  }
  return a;
}

// Some y with y * norm = target in m, or nullopt.
std::optional<IntVector> norm_preimage(const GModule& m, const IntMatrix& norm, std::span<const Integer> target) {
  IntMatrix stacked = m.relations().rows() == 0 ? norm : norm.stacked(m.relations());
  auto y = solve_left(stacked, target);
  if (!y) return std::nullopt;
  return IntVector(y->begin(), y->begin() + static_cast<std::ptrdiff_t>(m.dim()));
}

bool rows_vanish(const GModule& m, const IntMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (!m.is_zero(a.row(i))) return false;
  return true;
}

bool is_fixed(const GModule& m, std::span<const Integer> x) {
  const auto& g = *m.group();
  for (std::size_t i = 0; i < g.rank(); ++i)
    if (!m.is_zero(add(row_times(x, m.action(g.generator(i))), x, -1))) return false;
  return true;
}

// Image of sum a_h (h - 1) in (I_G)_G = G.
long symbols_to_group(const TwoExtension& x, std::span<const Integer> y) {
  const auto& g = *x.c.group();
  long out = 0;
  for (long h = 1; h < g.order(); ++h) {
    Integer a = y[x.symbol(h)];
    const long k = mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(g.order()));
    out = g.add(out, g.multiple(h, k));
  }
  return out;
}

}  // namespace

Cocycle::Cocycle(GroupPtr group, std::size_t dim, std::vector<IntVector> values)
    : group_(std::move(group)), dim_(dim), values_(std::move(values)) {
  const std::size_t n = order_of(*group_);
  if (values_.size() != n * n) fail(ErrorCode::kInvalidArgument, "cocycle table must have |G|^2 entries");
  for (const auto& v : values_)
    if (v.size() != dim_) fail(ErrorCode::kInvalidArgument, "cocycle value of the wrong length");
}

Cocycle Cocycle::zero(GroupPtr group, std::size_t dim) {
  const std::size_t n = order_of(*group);
  return Cocycle(std::move(group), dim, std::vector<IntVector>(n * n, IntVector(dim)));
}

Cocycle Cocycle::carry(GroupPtr cyclic_group) {
  const auto& g = *cyclic_group;
  if (g.rank() > 1) fail(ErrorCode::kInvalidArgument, "carry cocycle needs a cyclic group");
  const long n = g.order();
  std::vector<IntVector> values;
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) values.push_back(IntVector{Integer(a + b >= n ? 1 : 0)});
  return Cocycle(std::move(cyclic_group), 1, std::move(values));
}

const IntVector& Cocycle::operator()(long a, long b) const {
  return values_[static_cast<std::size_t>(a) * order_of(*group_) + static_cast<std::size_t>(b)];
}

Cocycle Cocycle::restrict_to(const SubgroupEmbedding& e) const {
  std::vector<IntVector> values;
  for (long a = 0; a < e.source->order(); ++a)
    for (long b = 0; b < e.source->order(); ++b)
      values.push_back((*this)(e.embedding[static_cast<std::size_t>(a)], e.embedding[static_cast<std::size_t>(b)]));
  return Cocycle(e.source, dim_, std::move(values));
}

void check_cocycle(const GModule& c, const Cocycle& f) {
  const auto& g = *c.group();
  if (!(g == *f.group()) || f.dim() != c.dim()) fail(ErrorCode::kActionMismatch, "cocycle and module disagree");
  for (long a = 0; a < g.order(); ++a)
    for (long b = 0; b < g.order(); ++b)
      for (long k = 0; k < g.order(); ++k) {
        IntVector v = row_times(f(b, k), c.action(a));
        v = add(v, f(g.add(a, b), k), -1);
        v = add(v, f(a, g.add(b, k)));
        v = add(v, f(a, b), -1);
        if (!c.is_zero(v))
          fail(ErrorCode::kNotCocycle, "cocycle identity fails at (" + std::to_string(a) + ", " + std::to_string(b) +
                                            ", " + std::to_string(k) + ")");
      }
}

Cocycle normalize(const GModule& c, const Cocycle& f) {
  const auto& g = *c.group();
  const IntVector base = f(0, 0);
  std::vector<IntVector> values;
  for (long a = 0; a < g.order(); ++a)
    for (long b = 0; b < g.order(); ++b) values.push_back(c.reduce(add(f(a, b), row_times(base, c.action(a)), -1)));
  return Cocycle(c.group(), c.dim(), std::move(values));
}

TwoExtension build_two_extension(const GModule& c, const Cocycle& f) {
  const auto& g = *c.group();
  const std::size_t n = c.dim();
  const std::size_t order = order_of(g);
  const std::size_t dim = n + order - 1;
  auto symbol = [&](long h) { return n + static_cast<std::size_t>(h) - 1; };

  IntMatrix rel(0, dim);
  for (std::size_t i = 0; i < c.relations().rows(); ++i) rel.append_row(direct_sum(c.relations().row(i), IntVector(order - 1)));

  std::vector<IntMatrix> acts;
  for (std::size_t k = 0; k < g.rank(); ++k) {
    const long t = g.generator(k);
    IntMatrix a(dim, dim);
    const IntMatrix& at = c.action(t);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = at(i, j);
    // t.[h] = [th] - [t] + f(t, h)
    for (long h = 1; h < g.order(); ++h) {
      const std::size_t r = symbol(h);
      const long th = g.add(t, h);
      if (th != 0) a(r, symbol(th)) += 1;
      if (t != 0) a(r, symbol(t)) -= 1;
      for (std::size_t j = 0; j < n; ++j) a(r, j) += f(t, h)[j];
    }
    acts.push_back(std::move(a));
  }

  TwoExtension x{c, GModule(c.group(), dim, rel, std::move(acts)), GModule::regular(c.group()), IntMatrix(n, dim),
                 IntMatrix(dim, order), IntMatrix(order, 1)};
  for (std::size_t i = 0; i < n; ++i) x.inclusion(i, i) = 1;
  for (long h = 1; h < g.order(); ++h) {
    x.to_group_ring(symbol(h), static_cast<std::size_t>(h)) = 1;
    x.to_group_ring(symbol(h), 0) = -1;
  }
  for (std::size_t i = 0; i < order; ++i) x.augmentation(i, 0) = 1;
  return x;
}

bool TwoExtension::is_exact() const {
  const std::size_t order = group_ring.dim();
  const IntMatrix none(0, 0);
  // Maps must be equivariant and compose to zero.
  const auto& g = *c.group();
  for (std::size_t k = 0; k < g.rank(); ++k) {
    const long t = g.generator(k);
    if (!rows_vanish(c_gamma, c.action(t) * inclusion - inclusion * c_gamma.action(t))) return false;
    if (!(c_gamma.action(t) * to_group_ring == to_group_ring * group_ring.action(t))) return false;
  }
  if (!rows_vanish(group_ring, inclusion * to_group_ring)) return false;
  if (!(to_group_ring * augmentation).is_zero()) return false;
  // Homology at each term.
  const bool at_c = homology(IntMatrix(0, c.dim()), inclusion, c.relations(), c_gamma.relations()).is_trivial();
  const bool at_middle = homology(inclusion, to_group_ring, c_gamma.relations(), IntMatrix(0, order)).is_trivial();
  const bool at_ring = homology(to_group_ring, augmentation, IntMatrix(0, order), IntMatrix(0, 1)).is_trivial();
  const bool at_z = homology(augmentation, IntMatrix(1, 0), IntMatrix(0, 1), none).is_trivial();
  return at_c && at_middle && at_ring && at_z;
}

ClassModuleExtension build_class_module_extension(const GModule& c, const Cocycle& f) {
  check_cocycle(c, f);
  Cocycle normalized = normalize(c, f);
  TwoExtension x = build_two_extension(c, normalized);
  const auto& g = *c.group();

  ClassModuleVerdict v;
  v.h1_vanishes = cohomology_group(c, 1, Resolution::kBar).is_trivial();
  Subquotient h2 = cohomology_group(c, 2, Resolution::kBar);
  v.h2_invariants = h2.invariants();
  v.h2_cyclic_of_group_order =
      g.order() == 1 ? h2.is_trivial() : (h2.invariants().size() == 1 && h2.invariants()[0] == g.order());
  IntVector flat;
  for (long a = 0; a < g.order(); ++a)
    for (long b = 0; b < g.order(); ++b)
      for (const auto& e : normalized(a, b)) flat.push_back(e);
  v.gamma_order = h2.element_order(flat);
  v.gamma_generates = v.h2_cyclic_of_group_order && v.gamma_order == h2.order();

  for (const auto& sub : all_subgroups(g)) {
    GModule res = x.c_gamma.restrict_to(subgroup_structure(c.group(), sub));
    for (int i = -2; i <= 2; ++i)
      if (!tate_group(res, i).is_trivial()) v.nontrivial_tate.emplace_back(sub.elements, i);
  }
  return {std::move(normalized), std::move(x), std::move(v)};
}

long reciprocity(const ClassModuleExtension& ext, std::span<const Integer> x) {
  if (!ext.verdict.is_class_module()) fail(ErrorCode::kNotClassModule, "reciprocity needs a class module with fundamental class");
  const TwoExtension& t = ext.extension;
  if (x.size() != t.c.dim() || !is_fixed(t.c, x)) fail(ErrorCode::kInvalidArgument, "reciprocity needs an element of C^G");
  const IntMatrix norm = t.c_gamma.norm_action(whole_group(*t.c.group()));
  auto y = norm_preimage(t.c_gamma, norm, row_times(x, t.inclusion));
  if (!y) fail(ErrorCode::kNotClassModule, "norm is not onto C(gamma)^G");
  return symbols_to_group(t, *y);
}

bool ReciprocityReport::bijective_on_h0() const { return surjective && kills_norms && h0_order == group_order; }

ReciprocityReport reciprocity_report(const ClassModuleExtension& ext) {
  const TwoExtension& t = ext.extension;
  const auto& g = *t.c.group();
  ReciprocityReport r;
  r.group_order = g.order();
  for (const auto& x : t.c.fixed_points().generators()) r.images.push_back(reciprocity(ext, x));
  r.surjective = subgroup_generated_by(g, r.images).order() == g.order();
  const IntMatrix norm = t.c.norm_action(whole_group(g));
  r.kills_norms = true;
  for (std::size_t i = 0; i < t.c.dim(); ++i)
    if (reciprocity(ext, norm.row(i)) != 0) r.kills_norms = false;
  r.h0_order = tate_group(t.c, 0).order();
  return r;
}

ClassModuleExtension restrict_class_module(const ClassModuleExtension& ext, const Subgroup& h) {
  SubgroupEmbedding e = subgroup_structure(ext.extension.c.group(), h);
  return build_class_module_extension(ext.extension.c.restrict_to(e), ext.cocycle.restrict_to(e));
}

std::vector<CupProductReport> cup_product_check(const ClassModuleExtension& ext) {
  std::vector<CupProductReport> out;
  const GroupPtr& g = ext.extension.c.group();
  for (const auto& sub : all_subgroups(*g)) {
    ClassModuleExtension res = restrict_class_module(ext, sub);
    CupProductReport r;
    r.subgroup = sub.elements;
    r.tate_z_minus2 = tate_group(GModule::trivial(res.extension.c.group(), {0}), -2).invariants();
    r.tate_c_zero = tate_group(res.extension.c, 0).invariants();
    r.reciprocity_bijective = res.verdict.is_class_module() && reciprocity_report(res).bijective_on_h0();
    out.push_back(std::move(r));
  }
  return out;
}

IntMatrix hom_lattice(const GModule& x, const GModule& a, bool equivariant) {
  const std::size_t k = x.dim();
  const std::size_t n = a.dim();
  // Linear conditions on vec(phi), each required to land in the relations of A.
  IntMatrix conditions(k * n, 0);
  std::size_t blocks = 0;
  auto add_block = [&](const IntMatrix& block) {
    conditions = conditions.beside(block);
    ++blocks;
  };
  for (std::size_t r = 0; r < x.relations().rows(); ++r) {
    IntMatrix block(k * n, n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) block(i * n + j, j) = x.relations()(r, i);
    add_block(block);
  }
  if (equivariant) {
    const auto& g = *x.group();
    for (std::size_t s = 0; s < g.rank(); ++s) {
      const IntMatrix& ax = x.action(g.generator(s));
      const IntMatrix& aa = a.action(g.generator(s));
      // rows i of ax * phi - phi * aa
      for (std::size_t i = 0; i < k; ++i) {
        IntMatrix block(k * n, n);
        for (std::size_t l = 0; l < k; ++l)
          for (std::size_t j = 0; j < n; ++j) block(l * n + j, j) += ax(i, l);
        for (std::size_t m = 0; m < n; ++m)
          for (std::size_t j = 0; j < n; ++j) block(i * n + m, j) -= aa(m, j);
        add_block(block);
      }
    }
  }
  if (blocks == 0) return IntMatrix::identity(k * n);
  return preimage_lattice(conditions, repeat_relations(a.relations(), blocks));
}

IntMatrix zero_homs(std::size_t x_dim, const GModule& a) {
  IntMatrix out(0, x_dim * a.dim());
  for (std::size_t i = 0; i < x_dim; ++i)
    for (std::size_t r = 0; r < a.relations().rows(); ++r) {
      IntVector v(x_dim * a.dim());
      for (std::size_t j = 0; j < a.dim(); ++j) v[i * a.dim() + j] = a.relations()(r, j);
      out.append_row(v);
    }
  return out;
}

QuotientExtension build_quotient_extension(const ClassModuleExtension& ext, const Subgroup& h) {
  const TwoExtension& t = ext.extension;
  const GroupPtr& g = t.c.group();
  QuotientMap q = quotient_group(g, h);
  IntMatrix c_rows(0, t.c_gamma.dim());
  for (std::size_t i = 0; i < t.c.dim(); ++i) c_rows.append_row(t.inclusion.row(i));
  GModule e = t.c_gamma.quotient(c_rows).coinvariants(h, q);
  const std::size_t qo = order_of(*q.target);
  IntMatrix to_ring(e.dim(), qo);
  for (long x = 1; x < g->order(); ++x) {
    const long image = q.image[static_cast<std::size_t>(x)];
    to_ring(t.symbol(x), static_cast<std::size_t>(image)) += 1;
    to_ring(t.symbol(x), 0) -= 1;
  }
  return {std::move(q), std::move(e), std::move(to_ring)};
}

namespace {

// Precomposition phi -> pi * phi on vec(phi), for pi: X (rows) -> Y.
IntMatrix precompose(const IntMatrix& pi, std::size_t a_dim) {
  IntMatrix out(pi.cols() * a_dim, pi.rows() * a_dim);
  for (std::size_t i = 0; i < pi.rows(); ++i)
    for (std::size_t l = 0; l < pi.cols(); ++l) {
      if (pi(i, l) == 0) continue;
      for (std::size_t j = 0; j < a_dim; ++j) out(l * a_dim + j, i * a_dim + j) = pi(i, l);
    }
  return out;
}

struct TruncatedHom {
  Subquotient h0;
  Subquotient h1;
  IntMatrix cocycles;  // Hom(E, A)
};

TruncatedHom truncated_hom(const GModule& ring, const GModule& e, const IntMatrix& pi, const GModule& a, bool equivariant) {
  const std::size_t n = a.dim();
  IntMatrix hom_ring = hom_lattice(ring, a, equivariant);
  IntMatrix hom_e = hom_lattice(e, a, equivariant);
  IntMatrix d = precompose(pi, n);
  IntMatrix zero_ring = zero_homs(ring.dim(), a);
  IntMatrix zero_e = zero_homs(e.dim(), a);
  // H^0: phi on Z[G/H] with pi * phi = 0.
  IntMatrix sources = hom_ring * d;
  IntMatrix kernel = preimage_lattice(sources, zero_e.rows() == 0 ? IntMatrix(0, sources.cols()) : zero_e);
  IntMatrix k0 = kernel.rows() == 0 ? IntMatrix(0, hom_ring.cols()) : kernel * hom_ring;
  Subquotient h0(k0.rows() == 0 ? IntMatrix(0, hom_ring.cols()) : k0,
                 zero_ring.rows() == 0 ? IntMatrix(0, hom_ring.cols()) : zero_ring);
  IntMatrix boundaries = zero_e.rows() == 0 ? IntMatrix(0, hom_e.cols()) : zero_e;
  if (sources.rows() > 0) boundaries = boundaries.stacked(sources);
  Subquotient h1(hom_e, boundaries);
  return {std::move(h0), std::move(h1), std::move(hom_e)};
}

}  // namespace

bool DualityReport::passed() const {
  return h0_cochains == h0_extension && h1_cochains == h1_extension && h1_map_injective && reciprocity_compatible &&
         h0_cochains_g == h0_extension_g && h1_cochains_g == h1_extension_g && kappa_surjective &&
         kernel_matches_subgroup;
}

DualityReport duality_check(const ClassModuleExtension& ext, const Subgroup& h, const GModule& a) {
  if (!ext.verdict.is_class_module()) fail(ErrorCode::kNotClassModule, "duality needs a class module with fundamental class");
  const TwoExtension& t = ext.extension;
  const GroupPtr& g = t.c.group();
  as_subgroup(*g, h.elements);
  QuotientExtension qe = build_quotient_extension(ext, h);
  if (!(*a.group() == *qe.quotient.target)) fail(ErrorCode::kActionMismatch, "A must be a module over G/H");
  const GModule ring = GModule::regular(qe.quotient.target);
  const GModule& e = qe.e;
  DualityReport r;

  // Part 1.
  SubgroupEmbedding emb = subgroup_structure(g, h);
  GModule a_on_g = a.inflate(qe.quotient, g);
  GModule a_on_h = a_on_g.restrict_to(emb);
  r.h0_cochains = cohomology_group(a_on_h, 0).invariants();
  r.h1_cochains = cohomology_group(a_on_h, 1).invariants();
  TruncatedHom plain = truncated_hom(ring, e, qe.to_group_ring, a, false);
  r.h0_extension = plain.h0.invariants();
  r.h1_extension = plain.h1.invariants();

  // phi -> (h -> phi([h])) from Hom(E, A) to Hom(H, A); injective on H^1.
  const std::size_t n = a.dim();
  IntMatrix psi(e.dim() * n, h.elements.size() * n);
  for (std::size_t s = 0; s < h.elements.size(); ++s) {
    const long x = h.elements[s];
    if (x == 0) continue;
    for (std::size_t j = 0; j < n; ++j) psi(t.symbol(x) * n + j, s * n + j) = 1;
  }
  IntMatrix on_lattice = plain.cocycles * psi;
  IntMatrix kernel_coords = preimage_lattice(on_lattice, repeat_relations(a.relations(), h.elements.size()));
  r.h1_map_injective = true;
  if (kernel_coords.rows() > 0) {
    IntMatrix kernel = kernel_coords * plain.cocycles;
    for (std::size_t i = 0; i < kernel.rows(); ++i)
      if (!plain.h1.is_zero_class(kernel.row(i))) r.h1_map_injective = false;
  }

  // The class of N_H^{-1} x in E(G/H) is the symbol of rec_H(x).
  ClassModuleExtension res = restrict_class_module(ext, h);
  r.reciprocity_compatible = res.verdict.is_class_module();
  if (r.reciprocity_compatible) {
    const IntMatrix norm_h = t.c_gamma.norm_action(h);
    GModule c_on_h = t.c.restrict_to(emb);
    for (const auto& x : c_on_h.fixed_points().generators()) {
      auto y = norm_preimage(t.c_gamma, norm_h, row_times(x, t.inclusion));
      if (!y) {
        r.reciprocity_compatible = false;
        break;
      }
      const long rec = emb.embedding[static_cast<std::size_t>(reciprocity(res, x))];
      IntVector diff = *y;
      if (rec != 0) diff[t.symbol(rec)] -= 1;
      if (!e.is_zero(diff)) r.reciprocity_compatible = false;
    }
  }

  // Part 2.
  r.h0_cochains_g = cohomology_group(a_on_g, 0).invariants();
  r.h1_cochains_g = cohomology_group(a_on_g, 1).invariants();
  TruncatedHom equi = truncated_hom(ring, e, qe.to_group_ring, a, true);
  r.h0_extension_g = equi.h0.invariants();
  r.h1_extension_g = equi.h1.invariants();

  // Part 3.
  IntMatrix symbols(0, e.dim());
  IntMatrix h_symbols(0, e.dim());
  for (long x = 1; x < g->order(); ++x) {
    IntVector v = unit_vector(e.dim(), t.symbol(x));
    symbols.append_row(v);
    if (h.contains(x)) h_symbols.append_row(v);
  }
  auto span_quotient = [&](const IntMatrix& gens) {
    IntMatrix rows = e.relations().rows() == 0 ? IntMatrix(0, e.dim()) : e.relations();
    if (gens.rows() > 0) rows = rows.stacked(gens);
    return rows;
  };
  r.kappa_surjective = Subquotient(IntMatrix::identity(e.dim()), span_quotient(symbols)).is_trivial();
  IntMatrix kernel_of_pi = preimage_lattice(qe.to_group_ring, IntMatrix(0, qe.to_group_ring.cols()));
  IntMatrix kernel_all = span_quotient(kernel_of_pi);
  Subquotient h_part(kernel_all, span_quotient(h_symbols));
  Subquotient kernel_mod_relations(kernel_all, span_quotient(IntMatrix(0, e.dim())));
  r.kernel_matches_subgroup = h_part.is_trivial() && kernel_mod_relations.order() == h.order();
  return r;
}

}  // namespace brumer
