#include "brumer/cohomology.hpp"

#include <functional>

#include "brumer/errors.hpp"

namespace brumer {

namespace {

std::size_t ipow_size(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

void add_block(IntMatrix& d, std::size_t row0, std::size_t col0, const IntMatrix& block, long sign) {
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) {
      if (block(i, j) == 0) continue;
      if (sign > 0)
        d(row0 + i, col0 + j) += block(i, j);
      else
        d(row0 + i, col0 + j) -= block(i, j);
    }
}

void add_identity(IntMatrix& d, std::size_t row0, std::size_t col0, std::size_t n, long sign) {
  for (std::size_t i = 0; i < n; ++i) d(row0 + i, col0 + i) += sign;
}

// Multi-indices (j_1, ..., j_r) with sum `degree`, in a fixed order.
std::vector<std::vector<long>> compositions(std::size_t parts, int degree) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur(parts, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == parts) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[i] = v;
      rec(i + 1, left - v);
    }
  };
  if (parts == 0) {
    if (degree == 0) out.push_back({});
    return out;
  }
  rec(0, degree);
  return out;
}

long position(const std::vector<std::vector<long>>& list, const std::vector<long>& key) {
  for (std::size_t i = 0; i < list.size(); ++i)
    if (list[i] == key) return static_cast<long>(i);
  return -1;
}

// Action of t - 1 or of the norm of the k-th cyclic factor.
IntMatrix factor_operator(const GModule& m, std::size_t k, long j, bool antipode) {
  const auto& g = *m.group();
  const long gen = g.generator(k);
  const long d = g.invariants()[k];
  if (j % 2 == 1) {
    const long t = antipode ? g.neg(gen) : gen;
    return m.action(t) - IntMatrix::identity(m.dim());
  }
  IntMatrix n(m.dim(), m.dim());
  long x = 0;
  for (long i = 0; i < d; ++i) {
    n = n + m.action(x);
    x = g.add(x, gen);
  }
  return n;
}

long koszul_sign(const std::vector<long>& j, std::size_t k) {
  long s = 0;
  for (std::size_t i = 0; i < k; ++i) s += j[i];
  return s % 2 == 0 ? 1 : -1;
}

}  // namespace

std::size_t bar_index(const FiniteAbelianGroup& g, std::span<const long> tuple, std::size_t dim, std::size_t coord) {
  std::size_t idx = 0;
  std::size_t scale = 1;
  for (long x : tuple) {
    idx += static_cast<std::size_t>(x) * scale;
    scale *= static_cast<std::size_t>(g.order());
  }
  return idx * dim + coord;
}

CochainComplex bar_cochains(const GModule& m, int top_degree) {
  const auto& g = *m.group();
  const std::size_t n = m.dim();
  const std::size_t order = static_cast<std::size_t>(g.order());
  CochainComplex out;
  out.module_relations = m.relations();
  for (int i = 0; i <= top_degree + 1; ++i) out.copies.push_back(ipow_size(order, i));

  for (int i = 0; i <= top_degree; ++i) {
    const std::size_t src = out.copies[static_cast<std::size_t>(i)];
    const std::size_t dst = out.copies[static_cast<std::size_t>(i) + 1];
    IntMatrix d(src * n, dst * n);
    std::vector<long> tup(static_cast<std::size_t>(i) + 1);
    for (std::size_t t = 0; t < dst; ++t) {
      std::size_t rest = t;
      for (auto& x : tup) {
        x = static_cast<long>(rest % order);
        rest /= order;
      }
      const std::size_t col0 = t * n;
      // g_1 f(g_2, ..., g_{i+1})
      std::vector<long> tail(tup.begin() + 1, tup.end());
      add_block(d, bar_index(g, tail, n, 0), col0, m.action(tup[0]), 1);
      // (-1)^j f(..., g_j g_{j+1}, ...)
      for (int j = 1; j <= i; ++j) {
        std::vector<long> merged;
        for (int k = 0; k < i + 1; ++k) {
          if (k == j - 1) {
            merged.push_back(g.add(tup[static_cast<std::size_t>(k)], tup[static_cast<std::size_t>(k) + 1]));
            ++k;
          } else {
            merged.push_back(tup[static_cast<std::size_t>(k)]);
          }
        }
        add_identity(d, bar_index(g, merged, n, 0), col0, n, j % 2 == 0 ? 1 : -1);
      }
      // (-1)^{i+1} f(g_1, ..., g_i)
      std::vector<long> head(tup.begin(), tup.end() - 1);
      add_identity(d, bar_index(g, head, n, 0), col0, n, (i + 1) % 2 == 0 ? 1 : -1);
    }
    out.differentials.push_back(std::move(d));
  }
  return out;
}

CochainComplex product_cochains(const GModule& m, int top_degree) {
  const auto& g = *m.group();
  const std::size_t n = m.dim();
  const std::size_t r = g.rank();
  CochainComplex out;
  out.module_relations = m.relations();
  std::vector<std::vector<std::vector<long>>> idx;
  for (int i = 0; i <= top_degree + 1; ++i) {
    idx.push_back(compositions(r, i));
    out.copies.push_back(idx.back().size());
  }
  for (int i = 0; i <= top_degree; ++i) {
    const auto& src = idx[static_cast<std::size_t>(i)];
    const auto& dst = idx[static_cast<std::size_t>(i) + 1];
    IntMatrix d(src.size() * n, dst.size() * n);
    for (std::size_t b = 0; b < dst.size(); ++b) {
      for (std::size_t k = 0; k < r; ++k) {
        if (dst[b][k] == 0) continue;
        auto j = dst[b];
        j[k] -= 1;
        const long a = position(src, j);
        add_block(d, static_cast<std::size_t>(a) * n, b * n, factor_operator(m, k, dst[b][k], false), koszul_sign(dst[b], k));
      }
    }
    out.differentials.push_back(std::move(d));
  }
  return out;
}

ChainComplex product_chains(const GModule& m, int top_degree) {
  const auto& g = *m.group();
  const std::size_t n = m.dim();
  const std::size_t r = g.rank();
  ChainComplex out;
  out.module_relations = m.relations();
  std::vector<std::vector<std::vector<long>>> idx;
  for (int i = 0; i <= top_degree + 1; ++i) {
    idx.push_back(compositions(r, i));
    out.copies.push_back(idx.back().size());
  }
  for (int i = 0; i <= top_degree; ++i) {
    const auto& src = idx[static_cast<std::size_t>(i) + 1];
    const auto& dst = idx[static_cast<std::size_t>(i)];
    IntMatrix d(src.size() * n, dst.size() * n);
    for (std::size_t a = 0; a < src.size(); ++a) {
      for (std::size_t k = 0; k < r; ++k) {
        if (src[a][k] == 0) continue;
        auto j = src[a];
        j[k] -= 1;
        const long b = position(dst, j);
        add_block(d, a * n, static_cast<std::size_t>(b) * n, factor_operator(m, k, src[a][k], true), koszul_sign(src[a], k));
      }
    }
    out.differentials.push_back(std::move(d));
  }
  return out;
}

Subquotient cohomology_group(const GModule& m, int degree, Resolution r) {
  if (degree < 0) fail(ErrorCode::kInvalidArgument, "cohomology degree must be nonnegative");
  CochainComplex c = r == Resolution::kBar ? bar_cochains(m, degree) : product_cochains(m, degree);
  const std::size_t i = static_cast<std::size_t>(degree);
  IntMatrix d_in = degree == 0 ? IntMatrix(0, c.copies[0] * m.dim()) : c.differentials[i - 1];
  return homology(d_in, c.differentials[i], c.relations(i), c.relations(i + 1));
}

Subquotient homology_group(const GModule& m, int degree) {
  if (degree < 0) fail(ErrorCode::kInvalidArgument, "homology degree must be nonnegative");
  ChainComplex c = product_chains(m, degree);
  const std::size_t i = static_cast<std::size_t>(degree);
  IntMatrix d_out = degree == 0 ? IntMatrix(c.copies[0] * m.dim(), 0) : c.differentials[i - 1];
  IntMatrix rel_out = degree == 0 ? IntMatrix(0, 0) : c.relations(i - 1);
  return homology(c.differentials[i], d_out, c.relations(i), rel_out);
}

Subquotient tate_group(const GModule& m, int degree) {
  if (degree >= 1) return cohomology_group(m, degree, Resolution::kProduct);
  if (degree <= -2) return homology_group(m, -degree - 1);
  const auto& g = *m.group();
  const std::size_t n = m.dim();
  Subgroup all{{}, {}};
  for (long x = 0; x < g.order(); ++x) all.elements.push_back(x);
  const IntMatrix norm = m.norm_action(all);
  if (degree == 0) {
    // M^G / N M
    IntMatrix d(n, 0);
    for (std::size_t i = 0; i < g.rank(); ++i) d = d.beside(m.action(g.generator(i)) - IntMatrix::identity(n));
    return homology(norm, d, m.relations(), repeat_relations(m.relations(), g.rank()));
  }
  // ker N / I_G M
  IntMatrix aug(0, n);
  for (std::size_t i = 0; i < g.rank(); ++i) {
    IntMatrix a = m.action(g.generator(i)) - IntMatrix::identity(n);
    for (std::size_t r = 0; r < n; ++r) aug.append_row(a.row(r));
  }
  return homology(aug, norm, m.relations(), m.relations());
}

}  // namespace brumer
