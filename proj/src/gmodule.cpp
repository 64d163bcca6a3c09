#include "brumer/gmodule.hpp"

#include <algorithm>
#include <deque>

#include "brumer/errors.hpp"

namespace brumer {

namespace {

IntMatrix power(const IntMatrix& a, long k) {
  IntMatrix out = IntMatrix::identity(a.rows());
  for (long i = 0; i < k; ++i) out = out * a;
  return out;
}

bool rows_in_lattice(const GModule& m, const IntMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (!m.is_zero(a.row(i))) return false;
  return true;
}

}  // namespace

GModule::GModule(GroupPtr group, std::size_t dim, const IntMatrix& relations, std::vector<IntMatrix> generator_actions)
    : group_(std::move(group)), dim_(dim) {
  if (relations.rows() > 0 && relations.cols() != dim) fail(ErrorCode::kActionMismatch, "relation width differs from module rank");
  HermiteResult h = hermite(relations.rows() == 0 ? IntMatrix(0, dim) : relations, false);
  hnf_ = h.form.block(0, 0, h.rank, dim);
  pivots_ = h.pivots;

  const auto& inv = group_->invariants();
  if (generator_actions.size() != inv.size())
    fail(ErrorCode::kActionMismatch, "need one action matrix per cyclic generator");
  for (auto& a : generator_actions) {
    if (a.rows() != dim || a.cols() != dim) fail(ErrorCode::kActionMismatch, "action matrix has wrong shape");
    a = reduce_rows(a);
  }
  for (std::size_t i = 0; i < inv.size(); ++i) {
    const IntMatrix& a = generator_actions[i];
    if (!rows_in_lattice(*this, hnf_ * a)) fail(ErrorCode::kActionMismatch, "action does not preserve the relations");
    if (!rows_in_lattice(*this, power(a, inv[i]) - IntMatrix::identity(dim)))
      fail(ErrorCode::kActionMismatch, "generator " + std::to_string(i) + " does not act with the right order");
    for (std::size_t j = 0; j < i; ++j) {
      const IntMatrix& b = generator_actions[j];
      if (!rows_in_lattice(*this, a * b - b * a)) fail(ErrorCode::kActionMismatch, "generator actions do not commute");
    }
  }

  // Fill the action table breadth-first along the generators.
  const long n = group_->order();
  actions_.assign(static_cast<std::size_t>(n), IntMatrix());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  actions_[0] = IntMatrix::identity(dim);
  seen[0] = true;
  std::deque<long> queue{0};
  while (!queue.empty()) {
    long g = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < inv.size(); ++i) {
      long h = group_->add(g, group_->generator(i));
      if (seen[static_cast<std::size_t>(h)]) continue;
      seen[static_cast<std::size_t>(h)] = true;
      actions_[static_cast<std::size_t>(h)] = reduce_rows(actions_[static_cast<std::size_t>(g)] * generator_actions[i]);
      queue.push_back(h);
    }
  }
}

GModule GModule::trivial(GroupPtr group, const std::vector<Integer>& cyclic_orders) {
  std::vector<long> ones(group->rank(), 1);
  return twisted(std::move(group), cyclic_orders, ones);
}

GModule GModule::twisted(GroupPtr group, const std::vector<Integer>& cyclic_orders, std::span<const long> multipliers) {
  const std::size_t n = cyclic_orders.size();
  IntMatrix rel(0, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (cyclic_orders[i] == 0) continue;
    IntVector r(n);
    r[i] = cyclic_orders[i];
    rel.append_row(r);
  }
  std::vector<IntMatrix> acts;
  for (long u : multipliers) acts.push_back(Integer(u) * IntMatrix::identity(n));
  return GModule(std::move(group), n, rel, std::move(acts));
}

GModule GModule::regular(GroupPtr group) { return permutation(group, Subgroup{{0}, {}}); }

GModule GModule::permutation(GroupPtr group, const Subgroup& h) {
  const auto reps = coset_representatives(*group, h);
  const std::size_t k = reps.size();
  auto coset_of = [&](long g) {
    for (std::size_t i = 0; i < k; ++i)
      if (h.contains(group->sub(g, reps[i]))) return i;
    return k;
  };
  std::vector<IntMatrix> acts;
  for (std::size_t gi = 0; gi < group->rank(); ++gi) {
    IntMatrix a(k, k);
    for (std::size_t i = 0; i < k; ++i) a(i, coset_of(group->add(reps[i], group->generator(gi)))) = 1;
    acts.push_back(std::move(a));
  }
  return GModule(group, k, IntMatrix(0, k), std::move(acts));
}

IntMatrix GModule::reduce_rows(const IntMatrix& a) const {
  IntMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) out.set_row(i, reduce(a.row(i)));
  return out;
}

IntVector GModule::reduce(std::span<const Integer> v) const {
  IntVector out(v.begin(), v.end());
  for (std::size_t k = 0; k < hnf_.rows(); ++k) {
    const std::size_t p = pivots_[k];
    const Integer& h = hnf_(k, p);
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), out[p].get_mpz_t(), h.get_mpz_t());
    if (q == 0) continue;
    for (std::size_t j = p; j < dim_; ++j)
      if (hnf_(k, j) != 0) mpz_submul(out[j].get_mpz_t(), q.get_mpz_t(), hnf_(k, j).get_mpz_t());
  }
  return out;
}

bool GModule::is_zero(std::span<const Integer> v) const { return brumer::is_zero(reduce(v)); }

IntMatrix GModule::action_of(const GroupRingElement& x) const {
  IntMatrix out(dim_, dim_);
  for (long g = 0; g < group_->order(); ++g) {
    const Rational& a = x.coefficient(g);
    if (a == 0) continue;
    if (a.get_den() != 1) fail(ErrorCode::kNotIntegral, "group ring element must be integral to act");
    out = out + a.get_num() * action(g);
  }
  return reduce_rows(out);
}

IntMatrix GModule::norm_action(const Subgroup& h) const {
  IntMatrix out(dim_, dim_);
  for (long g : h.elements) out = out + action(g);
  return reduce_rows(out);
}

GModule GModule::restrict_to(const SubgroupEmbedding& e) const {
  std::vector<IntMatrix> acts;
  for (std::size_t i = 0; i < e.source->rank(); ++i)
    acts.push_back(action(e.embedding[static_cast<std::size_t>(e.source->generator(i))]));
  return GModule(e.source, dim_, hnf_, std::move(acts));
}

GModule GModule::quotient(const IntMatrix& extra) const {
  IntMatrix rel = hnf_;
  for (std::size_t i = 0; i < extra.rows(); ++i)
    for (long g = 0; g < group_->order(); ++g) rel.append_row(row_times(extra.row(i), action(g)));
  std::vector<IntMatrix> acts;
  for (std::size_t i = 0; i < group_->rank(); ++i) acts.push_back(action(group_->generator(i)));
  return GModule(group_, dim_, rel, std::move(acts));
}

GModule GModule::minus_part() const {
  if (!group_->has_conjugation()) fail(ErrorCode::kTrivialConjugation, "minus part needs c != 1");
  return quotient(IntMatrix::identity(dim_) + action(group_->conjugation()));
}

GModule GModule::plus_part() const {
  if (!group_->has_conjugation()) fail(ErrorCode::kTrivialConjugation, "plus part needs c != 1");
  return quotient(IntMatrix::identity(dim_) - action(group_->conjugation()));
}

GModule GModule::coinvariants(const Subgroup& h, const QuotientMap& q) const {
  IntMatrix rel = hnf_;
  const IntMatrix id = IntMatrix::identity(dim_);
  for (long g : h.generators) {
    IntMatrix d = action(g) - id;
    for (std::size_t i = 0; i < dim_; ++i) rel.append_row(d.row(i));
  }
  std::vector<IntMatrix> acts;
  for (std::size_t i = 0; i < q.target->rank(); ++i) {
    const long target = q.target->generator(i);
    long lift = -1;
    for (long g = 0; g < group_->order() && lift < 0; ++g)
      if (q.image[static_cast<std::size_t>(g)] == target) lift = g;
    acts.push_back(action(lift));
  }
  return GModule(q.target, dim_, rel, std::move(acts));
}

GModule GModule::inflate(const QuotientMap& q, const GroupPtr& big) const {
  if (!(*q.target == *group_)) fail(ErrorCode::kActionMismatch, "inflation from a different quotient group");
  std::vector<IntMatrix> acts;
  for (std::size_t i = 0; i < big->rank(); ++i)
    acts.push_back(action(q.image[static_cast<std::size_t>(big->generator(i))]));
  return GModule(big, dim_, hnf_, std::move(acts));
}

GModule GModule::dual() const {
  if (hnf_.rows() != 0) fail(ErrorCode::kInvalidArgument, "dual needs a free module");
  std::vector<IntMatrix> acts;
  for (std::size_t i = 0; i < group_->rank(); ++i)
    acts.push_back(action(group_->neg(group_->generator(i))).transpose());
  return GModule(group_, dim_, IntMatrix(0, dim_), std::move(acts));
}

Rational GModule::rational_trace(long g) const {
  const IntMatrix& a = action(g);
  Rational tr = 0;
  for (std::size_t i = 0; i < dim_; ++i) tr += a(i, i);
  // Subtract the trace on the invariant subspace spanned by L.
  std::vector<RatVector> basis;
  for (std::size_t i = 0; i < hnf_.rows(); ++i) {
    RatVector r;
    for (std::size_t j = 0; j < dim_; ++j) r.push_back(hnf_(i, j));
    basis.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    RatVector image(dim_);
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) image[k] += basis[i][j] * a(j, k);
    auto coords = solve_left_rational(basis, image);
    if (!coords) fail(ErrorCode::kActionMismatch, "relation span is not stable");
    tr -= (*coords)[i];
  }
  return tr;
}

Subquotient GModule::fixed_points() const {
  IntMatrix d(dim_, 0);
  const IntMatrix id = IntMatrix::identity(dim_);
  for (std::size_t i = 0; i < group_->rank(); ++i) {
    d = d.beside(action(group_->generator(i)) - id);
  }
  IntMatrix rel_out = repeat_relations(hnf_, group_->rank());
  return homology(IntMatrix(0, dim_), d, hnf_, rel_out);
}

Subquotient GModule::torsion(const Integer& k) const {
  return homology(IntMatrix(0, dim_), k * IntMatrix::identity(dim_), hnf_, hnf_);
}

GModule direct_sum(const GModule& a, const GModule& b) {
  if (!(*a.group() == *b.group())) fail(ErrorCode::kActionMismatch, "direct sum over different groups");
  const std::size_t n = a.dim() + b.dim();
  IntMatrix rel(0, n);
  for (std::size_t i = 0; i < a.relations().rows(); ++i) rel.append_row(direct_sum(a.relations().row(i), IntVector(b.dim())));
  for (std::size_t i = 0; i < b.relations().rows(); ++i) rel.append_row(direct_sum(IntVector(a.dim()), b.relations().row(i)));
  std::vector<IntMatrix> acts;
  for (std::size_t i = 0; i < a.group()->rank(); ++i) {
    const long g = a.group()->generator(i);
    IntMatrix m(n, n);
    for (std::size_t r = 0; r < a.dim(); ++r)
      for (std::size_t c = 0; c < a.dim(); ++c) m(r, c) = a.action(g)(r, c);
    for (std::size_t r = 0; r < b.dim(); ++r)
      for (std::size_t c = 0; c < b.dim(); ++c) m(a.dim() + r, a.dim() + c) = b.action(g)(r, c);
    acts.push_back(std::move(m));
  }
  return GModule(a.group(), n, rel, std::move(acts));
}

Submodule submodule(const GModule& m, const IntMatrix& gens) {
  const auto& g = *m.group();
  IntMatrix span = m.relations();
  for (std::size_t i = 0; i < gens.rows(); ++i)
    for (long h = 0; h < g.order(); ++h) span.append_row(row_times(gens.row(i), m.action(h)));
  IntMatrix basis = row_lattice_basis(span);
  auto coords = [&](const IntVector& v) {
    auto x = solve_left(basis, v);
    if (!x) fail(ErrorCode::kActionMismatch, "submodule is not G-stable");
    return *x;
  };
  const std::size_t r = basis.rows();
  IntMatrix rel(0, r);
  for (std::size_t i = 0; i < m.relations().rows(); ++i) rel.append_row(coords(m.relations().row(i)));
  std::vector<IntMatrix> acts;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const IntMatrix& a = m.action(g.generator(i));
    IntMatrix t(r, r);
    for (std::size_t k = 0; k < r; ++k) t.set_row(k, coords(row_times(basis.row(k), a)));
    acts.push_back(std::move(t));
  }
  return {GModule(m.group(), r, rel, std::move(acts)), basis};
}

std::vector<long> coset_representatives(const FiniteAbelianGroup& g, const Subgroup& h) {
  std::vector<long> reps;
  std::vector<bool> covered(static_cast<std::size_t>(g.order()), false);
  for (long x = 0; x < g.order(); ++x) {
    if (covered[static_cast<std::size_t>(x)]) continue;
    reps.push_back(x);
    for (long y : h.elements) covered[static_cast<std::size_t>(g.add(x, y))] = true;
  }
  return reps;
}

GModule induce(const GModule& m, const GroupPtr& big, const SubgroupEmbedding& e) {
  std::vector<long> elems(e.embedding.begin(), e.embedding.end());
  std::sort(elems.begin(), elems.end());
  Subgroup h{elems, {}};
  std::vector<long> local_index(static_cast<std::size_t>(big->order()), -1);
  for (std::size_t i = 0; i < e.embedding.size(); ++i) local_index[static_cast<std::size_t>(e.embedding[i])] = static_cast<long>(i);

  const auto reps = coset_representatives(*big, h);
  const std::size_t k = reps.size();
  const std::size_t n = m.dim();
  IntMatrix rel = repeat_relations(m.relations(), k);
  std::vector<IntMatrix> acts;
  for (std::size_t gi = 0; gi < big->rank(); ++gi) {
    const long g = big->generator(gi);
    IntMatrix a(k * n, k * n);
    for (std::size_t i = 0; i < k; ++i) {
      const long moved = big->add(g, reps[i]);
      for (std::size_t j = 0; j < k; ++j) {
        const long hh = big->sub(moved, reps[j]);
        const long li = local_index[static_cast<std::size_t>(hh)];
        if (li < 0) continue;
        const IntMatrix& b = m.action(li);
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c) a(i * n + r, j * n + c) = b(r, c);
        break;
      }
    }
    acts.push_back(std::move(a));
  }
  return GModule(big, k * n, rel, std::move(acts));
}

IntMatrix repeat_relations(const IntMatrix& rel, std::size_t k) {
  const std::size_t n = rel.cols();
  IntMatrix out(0, n * k);
  for (std::size_t b = 0; b < k; ++b)
    for (std::size_t i = 0; i < rel.rows(); ++i) {
      IntVector v(n * k);
      for (std::size_t j = 0; j < n; ++j) v[b * n + j] = rel(i, j);
      out.append_row(v);
    }
  return out;
}

Presentation<GroupRingElement> module_presentation(const GModule& m) {
  const GroupPtr& g = m.group();
  const std::size_t n = m.dim();
  const GroupRingElement zero = GroupRingElement::zero(g);
  Matrix<GroupRingElement> rel;
  for (std::size_t i = 0; i < m.relations().rows(); ++i) {
    std::vector<GroupRingElement> row;
    for (std::size_t j = 0; j < n; ++j) row.push_back(GroupRingElement::scalar(g, Rational(m.relations()(i, j))));
    rel.push_back(std::move(row));
  }
  for (std::size_t gi = 0; gi < g->rank(); ++gi) {
    const long h = g->generator(gi);
    const IntMatrix& a = m.action(h);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<GroupRingElement> row(n, zero);
      row[i] = GroupRingElement::basis(g, h);
      for (std::size_t j = 0; j < n; ++j)
        if (a(i, j) != 0) row[j] = row[j] - GroupRingElement::scalar(g, Rational(a(i, j)));
      rel.push_back(std::move(row));
    }
  }
  return Presentation<GroupRingElement>(zero, n, std::move(rel));
}

Presentation<MinusElement> minus_presentation(const GModule& m) {
  auto p = module_presentation(m);
  Matrix<MinusElement> rel;
  for (const auto& row : p.relations()) {
    std::vector<MinusElement> r;
    for (const auto& x : row) r.push_back(minus_project(x));
    rel.push_back(std::move(r));
  }
  return Presentation<MinusElement>(MinusElement::zero(m.group()), m.dim(), std::move(rel));
}

}  // namespace brumer
