#include "brumer/tor.hpp"

#include "brumer/errors.hpp"

namespace brumer {

namespace {

void require_conjugation(const GModule& m) {
  if (!m.group()->has_conjugation()) fail(ErrorCode::kTrivialConjugation, "Tor against Z[G]_+- needs c != 1");
}

// 1 + s c with s = +-1.
IntMatrix one_plus(const GModule& m, long s) {
  const IntMatrix& c = m.action(m.group()->conjugation());
  return s > 0 ? IntMatrix::identity(m.dim()) + c : IntMatrix::identity(m.dim()) - c;
}

// Sign of c in the j-th differential of the periodic resolution of Z[G]_sign.
long periodic_sign(Sign sign, int j) {
  const long first = sign == Sign::kMinus ? 1 : -1;
  return j % 2 == 1 ? first : -first;
}

Subquotient tor_periodic(const GModule& m, Sign sign, int i) {
  IntMatrix d_in = one_plus(m, periodic_sign(sign, i + 1));
  IntMatrix d_out = one_plus(m, periodic_sign(sign, i));
  return homology(d_in, d_out, m.relations(), m.relations());
}

// Free module Z[G]^k with basis (block j, element g) at j * |G| + g.
IntVector translate(const FiniteAbelianGroup& g, std::span<const Integer> v, long by) {
  const std::size_t order = static_cast<std::size_t>(g.order());
  IntVector out(v.size());
  for (std::size_t j = 0; j < v.size() / order; ++j)
    for (long h = 0; h < g.order(); ++h)
      out[j * order + static_cast<std::size_t>(g.add(h, by))] = v[j * order + static_cast<std::size_t>(h)];
  return out;
}

// Z[G]-generators of a G-stable sublattice of Z[G]^k, chosen greedily from its Hermite basis.
std::vector<IntVector> module_generators(const FiniteAbelianGroup& g, const IntMatrix& lattice) {
  const IntMatrix target = row_lattice_basis(lattice);
  std::vector<IntVector> gens;
  IntMatrix cover(0, lattice.cols());
  IntMatrix span(0, lattice.cols());
  for (std::size_t i = 0; i < target.rows() && span != target; ++i) {
    IntVector v = target.row(i);
    if (span.rows() > 0 && solve_left(span, v)) continue;
    for (long h = 0; h < g.order(); ++h) cover.append_row(translate(g, v, h));
    gens.push_back(std::move(v));
    span = row_lattice_basis(cover);
  }
  return gens;
}

IntMatrix translates(const FiniteAbelianGroup& g, const std::vector<IntVector>& gens, std::size_t cols) {
  IntMatrix out(0, cols);
  for (const auto& v : gens)
    for (long h = 0; h < g.order(); ++h) out.append_row(translate(g, v, h));
  return out;
}

// Generic free resolution F_* -> Z[G]_sign with F_0 = Z[G]: entry i holds the
// generators of the image of F_{i+1} in F_i, as vectors in Z[G]^{rank F_i}.
std::vector<std::vector<IntVector>> resolve_sign_module(const FiniteAbelianGroup& g, Sign sign, int length) {
  const std::size_t order = static_cast<std::size_t>(g.order());
  const long s = sign == Sign::kMinus ? 1 : -1;
  IntMatrix kernel(0, order);
  for (long h = 0; h < g.order(); ++h) {
    IntVector r(order);
    r[static_cast<std::size_t>(h)] += 1;
    r[static_cast<std::size_t>(g.add(h, g.conjugation()))] += s;
    kernel.append_row(r);
  }
  std::vector<std::vector<IntVector>> out;
  std::size_t rank = 1;
  for (int i = 0; i < length; ++i) {
    auto gens = module_generators(g, kernel);
    out.push_back(gens);
    if (gens.empty()) break;
    IntMatrix cover = translates(g, gens, rank * order);
    rank = gens.size();
    kernel = left_kernel(cover);
  }
  return out;
}

// M tensor_{Z[G]} of the map Z[G]^{gens.size()} -> Z[G]^{rank} given by `gens`.
IntMatrix tensor_map(const GModule& m, const std::vector<IntVector>& gens, std::size_t rank) {
  const auto& g = *m.group();
  const std::size_t n = m.dim();
  const std::size_t order = static_cast<std::size_t>(g.order());
  IntMatrix d(gens.size() * n, rank * n);
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t l = 0; l < rank; ++l)
      for (std::size_t h = 0; h < order; ++h) {
        const Integer& a = gens[j][l * order + h];
        if (a == 0) continue;
        const IntMatrix& act = m.action(static_cast<long>(h));
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c) d(j * n + r, l * n + c) += a * act(r, c);
      }
  return d;
}

Subquotient tor_free(const GModule& m, Sign sign, int i) {
  auto res = resolve_sign_module(*m.group(), sign, i + 1);
  const std::size_t n = m.dim();
  // ranks[k] = rank of F_k
  std::vector<std::size_t> ranks{1};
  for (const auto& gens : res) ranks.push_back(gens.size());
  while (ranks.size() < static_cast<std::size_t>(i) + 2) ranks.push_back(0);
  auto differential = [&](int k) {  // F_k -> F_{k-1}
    const std::size_t kk = static_cast<std::size_t>(k);
    if (kk - 1 < res.size()) return tensor_map(m, res[kk - 1], ranks[kk - 1]);
    return IntMatrix(ranks[kk] * n, ranks[kk - 1] * n);
  };
  const std::size_t ii = static_cast<std::size_t>(i);
  return homology(differential(i + 1), differential(i), repeat_relations(m.relations(), ranks[ii]),
                  repeat_relations(m.relations(), ranks[ii - 1]));
}

}  // namespace

Subquotient tor_sign(const GModule& m, Sign sign, int degree, TorRoute route) {
  require_conjugation(m);
  if (degree < 1) fail(ErrorCode::kInvalidArgument, "Tor degree must be at least 1");
  return route == TorRoute::kPeriodic ? tor_periodic(m, sign, degree) : tor_free(m, sign, degree);
}

Subquotient sign_part_torsion(const GModule& m, Sign sign, const Integer& k) {
  require_conjugation(m);
  GModule part = sign == Sign::kMinus ? m.minus_part() : m.plus_part();
  return part.torsion(k);
}

}  // namespace brumer
