#include "sadic/matrix.hpp"

#include <limits>

namespace sadic {

namespace {

BigMatrix to_big(const IntMatrix& m) {
  BigMatrix b(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) b(i, j) = m(i, j);
  return b;
}

BigInt bareiss(BigMatrix a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace

BigInt determinant(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  return bareiss(to_big(m));
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  const BigInt det = determinant(m);
  if (det != 1 && det != -1) throw std::invalid_argument("matrix is not unimodular");
  const std::size_t n = m.rows();
  IntMatrix inv(n, n);
  if (n == 1) {
    inv(0, 0) = det.convert_to<std::int64_t>();
    return inv;
  }
  const BigMatrix b = to_big(m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      BigMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(rr, cc++) = b(r, c);
        }
        ++rr;
      }
      BigInt cof = bareiss(minor) * det;
      if ((i + j) % 2) cof = -cof;
      if (cof > std::numeric_limits<std::int64_t>::max() ||
          cof < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("inverse entry exceeds int64");
      inv(i, j) = cof.convert_to<std::int64_t>();
    }
  return inv;
}

Vec<BigInt> characteristic_polynomial(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  // Faddeev-LeVerrier; the divisions by k are exact for integer matrices.
  const std::size_t n = m.rows();
  const BigMatrix a = to_big(m);
  Vec<BigInt> c(n + 1, 0);
  c[n] = 1;
  BigMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    BigMatrix next = a * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = next;
    BigMatrix am = a * mk;
    BigInt tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    if (tr % BigInt(k) != 0) throw std::logic_error("non-integral trace step");
    c[n - k] = -tr / BigInt(k);
  }
  return c;
}

bool all_positive(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) <= 0) return false;
  return true;
}

IntMatrix power(const IntMatrix& m, unsigned e) {
  IntMatrix r = IntMatrix::identity(m.rows());
  IntMatrix b = m;
  while (e) {
    if (e & 1u) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

}  // namespace sadic
