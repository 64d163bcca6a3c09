#include "brumer/linalg.hpp"

#include <algorithm>
#include <cassert>

#include "brumer/errors.hpp"

namespace brumer {

namespace {

void submul_row(IntMatrix& m, std::size_t target, std::size_t source, const Integer& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (m(source, j) != 0) mpz_submul(m(target, j).get_mpz_t(), q.get_mpz_t(), m(source, j).get_mpz_t());
  }
}

void submul_col(IntMatrix& m, std::size_t target, std::size_t source, const Integer& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m(i, source) != 0) mpz_submul(m(i, target).get_mpz_t(), q.get_mpz_t(), m(i, source).get_mpz_t());
  }
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

Integer tdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer fdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const Integer> entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void IntMatrix::set_row(std::size_t i, std::span<const Integer> values) {
  if (values.size() != cols_) fail(ErrorCode::kInvalidArgument, "row length mismatch");
  std::copy(values.begin(), values.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
}

void IntMatrix::append_row(std::span<const Integer> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) fail(ErrorCode::kInvalidArgument, "row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::add_row_multiple(std::size_t a, std::size_t b, const Integer& k) {
  for (std::size_t j = 0; j < cols_; ++j) {
    if ((*this)(b, j) != 0) mpz_addmul((*this)(a, j).get_mpz_t(), k.get_mpz_t(), (*this)(b, j).get_mpz_t());
  }
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::stacked(const IntMatrix& below) const {
  if (rows_ == 0 && cols_ == 0) return below;
  if (below.rows_ == 0 && below.cols_ == 0) return *this;
  if (below.cols_ != cols_) fail(ErrorCode::kInvalidArgument, "stacked: column mismatch");
  IntMatrix m = *this;
  m.data_.insert(m.data_.end(), below.data_.begin(), below.data_.end());
  m.rows_ += below.rows_;
  return m;
}

IntMatrix IntMatrix::beside(const IntMatrix& right) const {
  if (right.rows_ != rows_) fail(ErrorCode::kInvalidArgument, "beside: row mismatch");
  IntMatrix m(rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) m(i, cols_ + j) = right(i, j);
  }
  return m;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  IntMatrix m(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

IntMatrix IntMatrix::select_rows(std::span<const std::size_t> idx) const {
  IntMatrix m(idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(idx[i], j);
  return m;
}

IntMatrix IntMatrix::without_zero_rows() const {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j) != 0) {
        keep.push_back(i);
        break;
      }
    }
  }
  return select_rows(keep);
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorCode::kInvalidArgument, "matrix product shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j) != 0) mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
      }
    }
  }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::kInvalidArgument, "matrix sum shape mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::kInvalidArgument, "matrix difference shape mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

IntMatrix operator*(const Integer& k, const IntMatrix& a) {
  IntMatrix c = a;
  for (auto& x : c.data_) x *= k;
  return c;
}

IntVector row_times(std::span<const Integer> x, const IntMatrix& a) {
  if (x.size() != a.rows()) fail(ErrorCode::kInvalidArgument, "row_times shape mismatch");
  IntVector y(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0) mpz_addmul(y[j].get_mpz_t(), x[i].get_mpz_t(), a(i, j).get_mpz_t());
    }
  }
  return y;
}

IntVector direct_sum(std::span<const Integer> a, std::span<const Integer> b) {
  IntVector v(a.begin(), a.end());
  v.insert(v.end(), b.begin(), b.end());
  return v;
}

bool is_zero(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

namespace {

// Row-by-row insertion into an echelon basis; used when no transform is needed.
// Tall inputs (many more rows than the rank) only ever touch the basis rows.
HermiteResult hermite_incremental(const IntMatrix& a) {
  const std::size_t n = a.cols();
  std::vector<IntVector> basis;
  std::vector<std::size_t> pivot_of;  // pivot column of each basis row, increasing
  Integer g, s, t, bj, vj;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    IntVector v = a.row(i);
    std::size_t k = 0;  // first basis row whose pivot may be >= the current column
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j] == 0) continue;
      while (k < basis.size() && pivot_of[k] < j) ++k;
      if (k == basis.size() || pivot_of[k] != j) {
        if (v[j] < 0)
          for (auto& x : v) x = -x;
        basis.insert(basis.begin() + static_cast<long>(k), std::move(v));
        pivot_of.insert(pivot_of.begin() + static_cast<long>(k), j);
        break;
      }
      IntVector& b = basis[k];
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), b[j].get_mpz_t(), v[j].get_mpz_t());
      bj = b[j] / g;
      vj = v[j] / g;
      for (std::size_t c = j; c < n; ++c) {
        Integer nb = s * b[c] + t * v[c];
        v[c] = bj * v[c] - vj * b[c];
        b[c] = std::move(nb);
      }
      if (b[j] < 0)
        for (std::size_t c = j; c < n; ++c) b[c] = -b[c];
    }
  }
  // Reduce entries above each pivot into [0, pivot), left to right so later pivots stay reduced.
  for (std::size_t r = 0; r < basis.size(); ++r) {
    const std::size_t col = pivot_of[r];
    for (std::size_t i = 0; i < r; ++i) {
      if (basis[i][col] == 0) continue;
      Integer q = fdiv(basis[i][col], basis[r][col]);
      if (q == 0) continue;
      for (std::size_t c = col; c < n; ++c) mpz_submul(basis[i][c].get_mpz_t(), q.get_mpz_t(), basis[r][c].get_mpz_t());
    }
  }
  HermiteResult res;
  res.form = IntMatrix(a.rows(), n);
  for (std::size_t r = 0; r < basis.size(); ++r) res.form.set_row(r, basis[r]);
  res.rank = basis.size();
  res.pivots = std::move(pivot_of);
  return res;
}

}  // namespace

HermiteResult hermite(const IntMatrix& a, bool with_transform) {
  if (!with_transform) return hermite_incremental(a);
  HermiteResult res;
  res.form = a;
  IntMatrix& h = res.form;
  const std::size_t m = h.rows();
  const std::size_t n = h.cols();
  if (with_transform) res.transform = IntMatrix::identity(m);
  IntMatrix& u = res.transform;

  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    bool found = false;
    while (true) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (h(i, col) == 0) continue;
        if (best == m || abs(h(i, col)) < abs(h(best, col))) best = i;
      }
      if (best == m) break;
      found = true;
      h.swap_rows(r, best);
      if (with_transform) u.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h(i, col) == 0) continue;
        Integer q = tdiv(h(i, col), h(r, col));
        submul_row(h, i, r, q);
        if (with_transform) submul_row(u, i, r, q);
        if (h(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!found) continue;
    if (h(r, col) < 0) {
      negate_row(h, r);
      if (with_transform) negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (h(i, col) == 0) continue;
      Integer q = fdiv(h(i, col), h(r, col));
      if (q == 0) continue;
      submul_row(h, i, r, q);
      if (with_transform) submul_row(u, i, r, q);
    }
    res.pivots.push_back(col);
    ++r;
  }
  res.rank = r;
  return res;
}

IntMatrix row_lattice_basis(const IntMatrix& a) {
  HermiteResult h = hermite(a, false);
  return h.form.block(0, 0, h.rank, a.cols());
}

IntMatrix left_kernel(const IntMatrix& a) {
  HermiteResult h = hermite(a, true);
  const std::size_t m = a.rows();
  IntMatrix k = h.transform.block(h.rank, 0, m - h.rank, m);
  return row_lattice_basis(k);
}

std::optional<IntVector> solve_left(const IntMatrix& a, std::span<const Integer> b) {
  HermiteResult h = hermite(a, true);
  IntVector residual(b.begin(), b.end());
  IntVector y(a.rows());
  for (std::size_t i = 0; i < h.rank; ++i) {
    const std::size_t p = h.pivots[i];
    if (residual[p] == 0) continue;
    if (mpz_divisible_p(residual[p].get_mpz_t(), h.form(i, p).get_mpz_t()) == 0) return std::nullopt;
    Integer q = residual[p] / h.form(i, p);
    y[i] = q;
    for (std::size_t j = 0; j < a.cols(); ++j) residual[j] -= q * h.form(i, j);
  }
  if (!is_zero(residual)) return std::nullopt;
  return row_times(y, h.transform);
}

SmithResult smith(const IntMatrix& a, bool with_transforms) {
  SmithResult res;
  IntMatrix d = a;
  const std::size_t m = d.rows();
  const std::size_t n = d.cols();
  if (with_transforms) {
    res.left = IntMatrix::identity(m);
    res.right = IntMatrix::identity(n);
    res.right_inverse = IntMatrix::identity(n);
  }
  auto row_op = [&](std::size_t target, std::size_t source, const Integer& q) {
    submul_row(d, target, source, q);
    if (with_transforms) submul_row(res.left, target, source, q);
  };
  auto col_op = [&](std::size_t target, std::size_t source, const Integer& q) {
    submul_col(d, target, source, q);
    if (with_transforms) {
      submul_col(res.right, target, source, q);
      res.right_inverse.add_row_multiple(source, target, q);
    }
  };
  auto row_swap = [&](std::size_t x, std::size_t y) {
    d.swap_rows(x, y);
    if (with_transforms) res.left.swap_rows(x, y);
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    swap_cols(d, x, y);
    if (with_transforms) {
      swap_cols(res.right, x, y);
      res.right_inverse.swap_rows(x, y);
    }
  };

  std::size_t t = 0;
  while (t < std::min(m, n)) {
    bool any = false;
    while (true) {
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (d(i, j) != 0 && (bi == m || abs(d(i, j)) < abs(d(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == m) break;
      any = true;
      row_swap(t, bi);
      col_swap(t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        row_op(i, t, tdiv(d(i, t), d(t, t)));
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        col_op(j, t, tdiv(d(t, j), d(t, t)));
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t()) == 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      row_op(t, bad, Integer(-1));
    }
    if (!any) break;
    if (d(t, t) < 0) {
      negate_row(d, t);
      if (with_transforms) negate_row(res.left, t);
    }
    res.diagonal.push_back(d(t, t));
    ++t;
  }
  return res;
}

Subquotient::Subquotient(const IntMatrix& k_gens, const IntMatrix& l_gens) {
  dim_ = k_gens.cols();
  HermiteResult hk = hermite(k_gens, false);
  k_basis_ = hk.form.block(0, 0, hk.rank, dim_);
  k_pivots_ = hk.pivots;
  const std::size_t r = hk.rank;

  IntMatrix coords(l_gens.rows(), r);
  for (std::size_t i = 0; i < l_gens.rows(); ++i) {
    auto c = basis_coordinates(l_gens.row(i));
    if (!c) fail(ErrorCode::kInvalidArgument, "subquotient: relation lattice not contained in module lattice");
    coords.set_row(i, *c);
  }
  // Only the right transform is used, so a tall relation matrix can be replaced by its row lattice basis.
  if (coords.rows() > r) coords = row_lattice_basis(coords);
  SmithResult s = smith(coords, true);
  v_ = s.right;
  v_inv_ = s.right_inverse;
  if (r > 0 && v_.rows() == 0) {
    v_ = IntMatrix::identity(r);
    v_inv_ = IntMatrix::identity(r);
  }
  for (std::size_t i = 0; i < r; ++i) {
    Integer d = i < s.diagonal.size() ? s.diagonal[i] : Integer(0);
    if (d == 1) continue;
    kept_.push_back(i);
    kept_modulus_.push_back(d);
    invariants_.push_back(d);
  }
}

Subquotient Subquotient::cokernel(const IntMatrix& l_gens, std::size_t n) {
  IntMatrix rel = l_gens.rows() == 0 ? IntMatrix(0, n) : l_gens;
  return Subquotient(IntMatrix::identity(n), rel);
}

Integer Subquotient::order() const {
  Integer o = 1;
  for (const auto& d : invariants_) {
    if (d == 0) return 0;
    o *= d;
  }
  return o;
}

std::optional<IntVector> Subquotient::basis_coordinates(std::span<const Integer> v) const {
  if (v.size() != dim_) fail(ErrorCode::kInvalidArgument, "subquotient: vector length mismatch");
  IntVector residual(v.begin(), v.end());
  IntVector y(k_basis_.rows());
  for (std::size_t i = 0; i < k_basis_.rows(); ++i) {
    const std::size_t p = k_pivots_[i];
    if (residual[p] == 0) continue;
    if (mpz_divisible_p(residual[p].get_mpz_t(), k_basis_(i, p).get_mpz_t()) == 0) return std::nullopt;
    Integer q = residual[p] / k_basis_(i, p);
    y[i] = q;
    for (std::size_t j = p; j < dim_; ++j) {
      if (k_basis_(i, j) != 0) mpz_submul(residual[j].get_mpz_t(), q.get_mpz_t(), k_basis_(i, j).get_mpz_t());
    }
  }
  if (!is_zero(residual)) return std::nullopt;
  return y;
}

bool Subquotient::contains(std::span<const Integer> v) const { return basis_coordinates(v).has_value(); }

IntVector Subquotient::coordinates(std::span<const Integer> v) const {
  auto y = basis_coordinates(v);
  if (!y) fail(ErrorCode::kInvalidArgument, "subquotient: vector not in the module lattice");
  IntVector z = row_times(*y, v_);
  IntVector out(kept_.size());
  for (std::size_t i = 0; i < kept_.size(); ++i) {
    const Integer& d = kept_modulus_[i];
    out[i] = d == 0 ? z[kept_[i]] : mod_floor(z[kept_[i]], d);
  }
  return out;
}

bool Subquotient::is_zero_class(std::span<const Integer> v) const { return is_zero(coordinates(v)); }

Integer Subquotient::element_order(std::span<const Integer> v) const {
  IntVector c = coordinates(v);
  Integer o = 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const Integer& d = kept_modulus_[i];
    if (d == 0) return 0;
    o = lcm(o, d / gcd(d, c[i]));
  }
  return o;
}

IntVector Subquotient::lift(std::span<const Integer> coords) const {
  if (coords.size() != kept_.size()) fail(ErrorCode::kInvalidArgument, "subquotient: coordinate length mismatch");
  IntVector z(k_basis_.rows());
  for (std::size_t i = 0; i < kept_.size(); ++i) z[kept_[i]] = coords[i];
  if (z.empty()) return IntVector(dim_);
  IntVector y = row_times(z, v_inv_);
  return row_times(y, k_basis_);
}

std::vector<IntVector> Subquotient::generators() const {
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < kept_.size(); ++i) {
    IntVector e(kept_.size());
    e[i] = 1;
    gens.push_back(lift(e));
  }
  return gens;
}

IntMatrix preimage_lattice(const IntMatrix& d_out, const IntMatrix& rel_out) {
  const std::size_t b = d_out.rows();
  if (d_out.cols() == 0) return IntMatrix::identity(b);
  IntMatrix stacked = rel_out.rows() == 0 ? d_out : d_out.stacked(rel_out);
  IntMatrix k = left_kernel(stacked);
  return row_lattice_basis(k.block(0, 0, k.rows(), b));
}

Subquotient homology(const IntMatrix& d_in, const IntMatrix& d_out, const IntMatrix& rel_mid,
                     const IntMatrix& rel_out) {
  const std::size_t b = d_out.rows();
  IntMatrix cycles = preimage_lattice(d_out, rel_out);
  IntMatrix boundaries(0, b);
  if (d_in.rows() > 0) boundaries = boundaries.stacked(d_in);
  if (rel_mid.rows() > 0) boundaries = boundaries.stacked(rel_mid);
  return Subquotient(cycles, boundaries);
}

namespace {

// Reduced row echelon form over Q; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RatVector>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = m.size();
    for (std::size_t i = r; i < m.size(); ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rational_rank(const std::vector<RatVector>& rows) {
  auto m = rows;
  return rref(m).size();
}

std::optional<RatVector> solve_left_rational(const std::vector<RatVector>& rows, const RatVector& b) {
  // Solve x * rows = b via the transpose system augmented with b.
  const std::size_t k = rows.size();
  const std::size_t n = b.size();
  std::vector<RatVector> aug(n, RatVector(k + 1));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < k; ++i) aug[j][i] = rows[i][j];
    aug[j][k] = b[j];
  }
  auto pivots = rref(aug);
  RatVector x(k);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == k) return std::nullopt;
    x[pivots[r]] = aug[r][k];
  }
  return x;
}

bool in_rational_span(const std::vector<RatVector>& rows, const RatVector& v) {
  if (rows.empty()) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
  }
  return solve_left_rational(rows, v).has_value();
}

Rational rational_determinant(std::vector<RatVector> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

std::vector<Integer> sorted_invariants(std::vector<Integer> invariants) {
  std::stable_sort(invariants.begin(), invariants.end(), [](const Integer& a, const Integer& b) {
    if (a == 0) return false;
    if (b == 0) return true;
    return a < b;
  });
  return invariants;
}

std::vector<Integer> normalize_invariants(const std::vector<Integer>& cyclic_orders) {
  IntMatrix d = IntMatrix::diagonal(cyclic_orders);
  return Subquotient::cokernel(d, cyclic_orders.size()).invariants();
}

}  // namespace brumer
