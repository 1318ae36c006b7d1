#ifndef SADIC_MATRIX_HPP
#define SADIC_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "sadic/rational.hpp"

namespace sadic {

template <class T>
using Vec = std::vector<T>;

using IntVec = Vec<std::int64_t>;

namespace detail {

template <class T>
T mul_add(T acc, const T& a, const T& b) {
  if constexpr (std::is_same_v<T, std::int64_t>) {
    T p;
    if (__builtin_mul_overflow(a, b, &p) || __builtin_add_overflow(acc, p, &acc))
      throw std::overflow_error("int64 matrix overflow");
    return acc;
  } else {
    acc += a * b;
    return acc;
  }
}

}  // namespace detail

// Dense row-major matrix.  With T = int64_t every product is overflow-checked.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec<T> column(std::size_t j) const {
    Vec<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  Vec<T> row(std::size_t i) const {
    return Vec<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  void set_column(std::size_t j, const Vec<T>& c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  template <class U>
  Matrix<U> cast() const {
    Matrix<U> m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = U((*this)(i, j));
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = detail::mul_add(c(i, j), aik, b(k, j));
      }
    return c;
  }

  friend Vec<T> operator*(const Matrix& a, const Vec<T>& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("matrix/vector shape mismatch");
    Vec<T> r(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) r[i] = detail::mul_add(r[i], a(i, j), v[j]);
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ",[" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? "," : "") << m(i, j);
      os << ']';
    }
    return os << ']';
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;
using BigMatrix = Matrix<BigInt>;

// Exact determinant by fraction-free Gaussian elimination (Bareiss).
BigInt determinant(const IntMatrix& m);

// Inverse of a matrix with determinant +-1; throws otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

// Coefficients c_0..c_n of det(X I - M), lowest degree first, via Berkowitz
// (division free, so exact over the integers).
Vec<BigInt> characteristic_polynomial(const IntMatrix& m);

bool all_positive(const IntMatrix& m);

IntMatrix power(const IntMatrix& m, unsigned e);

// Maximum absolute row sum, i.e. the operator norm for the sup norm.
template <class T>
T max_row_sum(const Matrix<T>& m) {
  T best(0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    T s(0);
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) < T(0) ? T(-m(i, j)) : m(i, j);
    if (s > best) best = s;
  }
  return best;
}

// Maximum absolute column sum, i.e. the operator norm for the 1-norm.
template <class T>
T max_col_sum(const Matrix<T>& m) {
  T best(0);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    T s(0);
    for (std::size_t i = 0; i < m.rows(); ++i) s += m(i, j) < T(0) ? T(-m(i, j)) : m(i, j);
    if (s > best) best = s;
  }
  return best;
}

template <class T>
T sum(const Vec<T>& v) {
  T s(0);
  for (const auto& x : v) s += x;
  return s;
}

template <class T>
Vec<T> add(const Vec<T>& a, const Vec<T>& b) {
  Vec<T> r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

template <class T>
Vec<T> sub(const Vec<T>& a, const Vec<T>& b) {
  Vec<T> r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline IntVec unit_vector(std::size_t n, std::size_t i) {
  IntVec e(n, 0);
  e.at(i) = 1;
  return e;
}

}  // namespace sadic

#endif
