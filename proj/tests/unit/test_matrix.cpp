#include <doctest.h>

#include <random>

#include "sadic/matrix.hpp"
#include "sadic/polynomial.hpp"
#include "sadic/words.hpp"

using namespace sadic;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  IntMatrix m(n, n);
  std::uniform_int_distribution<int> d(lo, hi);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

// Cofactor expansion, independent of the elimination used by determinant().
BigInt cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  BigInt total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const BigInt t = BigInt(m(0, j)) * cofactor_det(minor);
    total += j % 2 ? BigInt(-t) : t;
  }
  return total;
}

}  // namespace

TEST_CASE("determinant matches cofactor expansion") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const IntMatrix m = random_matrix(rng, n, -5, 5);
    CHECK(determinant(m) == cofactor_det(m));
  }
}

TEST_CASE("unimodular inverse") {
  const SubstitutionSet b = subs::brun();
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix m = IntMatrix::identity(3);
    for (int k = 0; k < 8; ++k) m = m * b[rng() % b.size()].matrix();
    CHECK(m * unimodular_inverse(m) == IntMatrix::identity(3));
  }
  CHECK_THROWS(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}));
}

TEST_CASE("characteristic polynomial annihilates the matrix") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const IntMatrix m = random_matrix(rng, n, -3, 3);
    const auto p = characteristic_polynomial(m);
    REQUIRE(p.size() == n + 1);
    CHECK(p[n] == 1);
    BigMatrix acc(n, n, BigInt(0));
    BigMatrix pw = BigMatrix::identity(n);
    const BigMatrix mb = m.cast<BigInt>();
    for (std::size_t k = 0; k <= n; ++k) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) acc(i, j) += p[k] * pw(i, j);
      pw = pw * mb;
    }
    CHECK(acc == BigMatrix(n, n, BigInt(0)));
    CHECK(p[0] == (n % 2 ? BigInt(-determinant(m)) : determinant(m)));
  }
}

TEST_CASE("overflow is detected") {
  const IntMatrix big{{std::int64_t(1) << 40, 0}, {0, 1}};
  CHECK_THROWS(big * big);
}

TEST_CASE("matrix helpers") {
  const IntMatrix m{{1, 2}, {3, 4}};
  CHECK(max_row_sum(m) == 7);
  CHECK(max_col_sum(m) == 6);
  CHECK(power(m, 0) == IntMatrix::identity(2));
  CHECK(power(m, 3) == m * m * m);
  CHECK(all_positive(m));
  CHECK(!all_positive(IntMatrix{{1, 0}, {1, 1}}));
  CHECK(m.transpose() == IntMatrix{{1, 3}, {2, 4}});
}
