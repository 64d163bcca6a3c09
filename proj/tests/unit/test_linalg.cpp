#include <doctest.h>

#include <random>
#include <set>

#include "brumer/linalg.hpp"

using namespace brumer;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  IntMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = dist(rng);
  return a;
}

RatVector as_rational(const IntVector& v) { return RatVector(v.begin(), v.end()); }

std::vector<RatVector> rational_rows(const IntMatrix& a) {
  std::vector<RatVector> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(as_rational(a.row(i)));
  return rows;
}

// Oracle: D Z^2 lies in the lattice for D = |det|, so the index is D^2 divided by the
// size of the subgroup of (Z/D)^2 generated by the rows, found by closure.
long brute_force_index_2d(const IntMatrix& a) {
  const long det = std::abs(to_long(a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)));
  auto wrap = [det](long x) { return ((x % det) + det) % det; };
  std::set<std::pair<long, long>> span{{0, 0}};
  std::vector<std::pair<long, long>> frontier{{0, 0}};
  while (!frontier.empty()) {
    const auto [x, y] = frontier.back();
    frontier.pop_back();
    for (std::size_t r = 0; r < 2; ++r) {
      std::pair<long, long> next{wrap(x + to_long(a(r, 0))), wrap(y + to_long(a(r, 1)))};
      if (span.insert(next).second) frontier.push_back(next);
    }
  }
  return det * det / static_cast<long>(span.size());
}

}  // namespace

TEST_CASE("hermite form with transform reproduces the input lattice") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6, 9);
    const auto h = hermite(a, true);
    CHECK(h.transform * a == h.form);
    CHECK(std::abs(to_long(rational_determinant(rational_rows(h.transform)).get_num())) == 1);
    CHECK(h.rank == rational_rank(rational_rows(a)));
    for (std::size_t i = 0; i < h.rank; ++i) CHECK(h.form(i, h.pivots[i]) > 0);
  }
}

TEST_CASE("incremental hermite agrees with the transform path") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto a = random_matrix(rng, rng() % 9, 1 + rng() % 7, trial % 3 == 0 ? 1000 : 4);
    const auto fast = hermite(a, false);
    const auto slow = hermite(a, true);
    REQUIRE(fast.rank == slow.rank);
    CHECK(fast.pivots == slow.pivots);
    CHECK(fast.form.block(0, 0, fast.rank, a.cols()) == slow.form.block(0, 0, slow.rank, a.cols()));
  }
}

TEST_CASE("smith form diagonal is a divisor chain and U A V = D") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const auto a = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5, 12);
    const auto s = smith(a, true);
    const auto d = s.left * a * s.right;
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j)
        CHECK(d(i, j) == (i == j && i < s.diagonal.size() ? s.diagonal[i] : Integer(0)));
    for (std::size_t i = 1; i < s.diagonal.size(); ++i) CHECK(s.diagonal[i] % s.diagonal[i - 1] == 0);
    CHECK(s.right * s.right_inverse == IntMatrix::identity(a.cols()));
  }
}

TEST_CASE("cokernel order matches the determinant and a 2x2 brute force") {
  std::mt19937_64 rng(8);
  int checked = 0;
  while (checked < 60) {
    const auto a = random_matrix(rng, 2, 2, 6);
    const Integer det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    if (det == 0) continue;
    ++checked;
    const auto q = Subquotient::cokernel(a, 2);
    CHECK(q.order() == abs(det));
    CHECK(brute_force_index_2d(a) == to_long(abs(det)));
  }
}

TEST_CASE("subquotient invariants on hand examples") {
  // Z^2 / <(2,4), (6,8)>: gcd of entries 2, determinant 8.
  auto q = Subquotient::cokernel(IntMatrix::from_rows({{2, 4}, {6, 8}}, 2), 2);
  CHECK(q.invariants() == std::vector<Integer>{2, 4});
  // Z^3 / <(2,0,0)> = Z/2 + Z^2.
  auto r = Subquotient::cokernel(IntMatrix::from_rows({{2, 0, 0}}, 3), 3);
  CHECK(r.invariants() == std::vector<Integer>{2, 0, 0});
  CHECK(r.order() == 0);
  // K = 2Z + Z inside Z^2, L = 6Z + 0.
  Subquotient s(IntMatrix::from_rows({{2, 0}, {0, 1}}, 2), IntMatrix::from_rows({{6, 0}}, 2));
  CHECK(s.invariants() == std::vector<Integer>{3, 0});
  CHECK(s.contains(IntVector{4, 7}));
  CHECK_FALSE(s.contains(IntVector{1, 0}));
  CHECK(s.is_zero_class(IntVector{6, 0}));
  CHECK(s.element_order(IntVector{2, 0}) == 3);
  CHECK(s.element_order(IntVector{0, 1}) == 0);
}

TEST_CASE("subquotient coordinates round-trip through lift") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto rel = random_matrix(rng, 3, 3, 5);
    const auto q = Subquotient::cokernel(rel, 3);
    for (int k = 0; k < 5; ++k) {
      const auto v = random_matrix(rng, 1, 3, 20).row(0);
      const auto coords = q.coordinates(v);
      CHECK(q.coordinates(q.lift(coords)) == coords);
      // v - lift(coords(v)) lies in the relation lattice.
      IntVector diff(3);
      const auto back = q.lift(coords);
      for (std::size_t i = 0; i < 3; ++i) diff[i] = v[i] - back[i];
      CHECK(q.is_zero_class(diff));
    }
  }
}

TEST_CASE("left kernel and solve_left") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 80; ++trial) {
    const auto a = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 4, 5);
    const auto k = left_kernel(a);
    CHECK((k * a).is_zero());
    CHECK(k.rows() + rational_rank(rational_rows(a)) == a.rows());
    const auto x = random_matrix(rng, 1, a.rows(), 4).row(0);
    const auto b = row_times(x, a);
    const auto y = solve_left(a, b);
    REQUIRE(y.has_value());
    CHECK(row_times(*y, a) == b);
  }
  CHECK_FALSE(solve_left(IntMatrix::from_rows({{2, 0}}, 2), IntVector{1, 0}).has_value());
}

TEST_CASE("homology of Z --2--> Z --0--> Z") {
  const auto h = homology(IntMatrix::from_rows({{2}}, 1), IntMatrix::from_rows({{0}}, 1), IntMatrix(0, 1), IntMatrix(0, 1));
  CHECK(h.invariants() == std::vector<Integer>{2});
}

TEST_CASE("normalize_invariants merges coprime factors") {
  CHECK(normalize_invariants({Integer(2), Integer(3)}) == std::vector<Integer>{6});
  CHECK(normalize_invariants({Integer(4), Integer(2), Integer(1)}) == std::vector<Integer>{2, 4});
  CHECK(normalize_invariants({Integer(0), Integer(2)}) == std::vector<Integer>{2, 0});
}
