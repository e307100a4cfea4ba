#include <catch_amalgamated.hpp>

#include "regge/smallalg.hpp"
#include "regge/sparse.hpp"

using namespace regge;

namespace {

SparseMat random_sparse(RationalSampler& rng, int rows, int cols, int density_pct, std::mt19937& pick) {
  SparseMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (static_cast<int>(pick() % 100) < density_pct) m.add(i, j, rng.next());
  return m;
}

// Product of a rows x k and a k x cols matrix has rank <= k; with generic
// entries it is exactly k. Built as an independent witness for rank_exact.
SparseMat low_rank(RationalSampler& rng, int rows, int cols, int k) {
  SparseMat a(rows, k);
  SparseMat b(k, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < k; ++j) a.add(i, j, rng.next());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < cols; ++j) b.add(i, j, rng.next());
  return a * b;
}

}  // namespace

TEST_CASE("rank of small fixed matrices") {
  CHECK(rank_exact(SparseMat::identity(3)) == 3);
  const Mat3 m = mskw({1, 2, 3});
  DenseMat d(3, DenseVec(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
  CHECK(rank_exact(SparseMat::from_dense(d, 3)) == 2);
  CHECK(dense_rank(d) == 2);
  CHECK(rank_exact(SparseMat(0, 1)) == 0);
  CHECK(rank_exact(SparseMat(4, 0)) == 0);
}

TEST_CASE("rank agrees with dense elimination and with transpose") {
  RationalSampler rng(11);
  std::mt19937 pick(5);
  for (int trial = 0; trial < 30; ++trial) {
    const int rows = 1 + static_cast<int>(pick() % 12);
    const int cols = 1 + static_cast<int>(pick() % 12);
    const SparseMat m = random_sparse(rng, rows, cols, 25, pick);
    DenseMat d(static_cast<std::size_t>(rows), DenseVec(static_cast<std::size_t>(cols)));
    for (int i = 0; i < rows; ++i)
      for (const auto& [j, v] : m.row(i)) d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    const int r = rank_exact(m);
    CHECK(r == dense_rank(d));
    CHECK(r == rank_exact(m.transpose()));
  }
}

TEST_CASE("rank of generic low-rank products") {
  RationalSampler rng(3);
  for (int k = 0; k <= 5; ++k) CHECK(rank_exact(low_rank(rng, 9, 7, k)) == k);
}

TEST_CASE("kronecker lift multiplies rank") {
  RationalSampler rng(8);
  std::mt19937 pick(1);
  for (int trial = 0; trial < 5; ++trial) {
    const SparseMat m = random_sparse(rng, 6, 8, 30, pick);
    CHECK(rank_exact(m.kron_identity(3)) == 3 * rank_exact(m));
  }
}

TEST_CASE("solve returns exact preimages and detects inconsistency") {
  RationalSampler rng(21);
  const SparseMat a = low_rank(rng, 8, 10, 4);
  DenseVec x0(10);
  for (auto& v : x0) v = rng.next();
  const DenseVec b = a.apply(x0);
  const auto x = solve_exact(a, b);
  REQUIRE(x.has_value());
  CHECK(a.apply(*x) == b);

  // A vector orthogonal to the range is not reachable.
  const auto left = nullspace_exact(a.transpose());
  REQUIRE(left.size() == 4);
  CHECK_FALSE(solve_exact(a, left[0]).has_value());
}

TEST_CASE("nullspace vectors are annihilated and independent") {
  RationalSampler rng(4);
  const SparseMat a = low_rank(rng, 6, 9, 3);
  const auto basis = nullspace_exact(a);
  REQUIRE(basis.size() == 6);
  SparseMat stack(static_cast<int>(basis.size()), 9);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    CHECK(a.apply(basis[i]) == DenseVec(6));
    for (int j = 0; j < 9; ++j) stack.add(static_cast<int>(i), j, basis[i][static_cast<std::size_t>(j)]);
  }
  CHECK(rank_exact(stack) == 6);
}

TEST_CASE("dense solve handles overdetermined consistent systems") {
  const DenseMat a{{1, 0}, {0, 1}, {1, 1}};
  const auto x = dense_solve(a, {2, 3, 5});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 3);
  CHECK_FALSE(dense_solve(a, {2, 3, 6}).has_value());
  CHECK(dense_nullspace(DenseMat{{1, 1, 0}}, 3).size() == 2);
}

TEST_CASE("block assembly and products") {
  const SparseMat i2 = SparseMat::identity(2);
  const SparseMat z = block_matrix({{&i2, nullptr}, {nullptr, &i2}}, {2, 2}, {2, 2});
  CHECK(z == SparseMat::identity(4));
  CHECK((z * z) == z);
  CHECK((z - z).is_zero());
  CHECK_THROWS_AS(block_matrix({{&i2}}, {3}, {2}), Error);
}
