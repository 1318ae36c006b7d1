#ifndef SADIC_LYAPUNOV_HPP
#define SADIC_LYAPUNOV_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sadic/cf_algorithms.hpp"

namespace sadic {

// pi_v as a d x (d+1) matrix in the basis e_i - e_0 of P; v must have 1-norm 1.
template <class T>
Matrix<T> projection_matrix(const Vec<T>& v) {
  const std::size_t n = v.size();
  Matrix<T> p(n - 1, n);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p(i - 1, j) = T(i == j ? 1 : 0) - v[i];
  return p;
}

// The plane map pi_v o M restricted to P, in the basis e_i - e_0.
template <class T>
Matrix<T> plane_map(const IntMatrix& m, const Vec<T>& v) {
  const std::size_t n = v.size();
  Matrix<T> out(n - 1, n - 1);
  for (std::size_t j = 1; j < n; ++j) {
    std::int64_t h = 0;
    IntVec w(n);
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = m(i, j) - m(i, 0);
      h += w[i];
    }
    for (std::size_t i = 1; i < n; ++i) out(i - 1, j - 1) = T(w[i]) - T(h) * v[i];
  }
  return out;
}

// Running product kept at unit size; the true product is exp(log_scale) * unit.
struct ScaledProduct {
  Matrix<double> unit;
  double log_scale = 0.0;

  void right_multiply(const Matrix<double>& m);
  double log_norm() const;   // log of the max row sum of the true product
};

struct LyapunovEstimate {
  double theta1 = 0.0;
  double theta2 = 0.0;
  std::size_t steps = 0;
};

// Float pseudo-orbit.  theta1 = (1/N) ln ||M_[0,N)^T||.  theta2 uses the
// product of the plane maps pi_{x^(k)} M_k restricted to P, which equals
// pi_x M_[0,N) on P without ever forming the huge matrix.
LyapunovEstimate estimate(const Algorithm& alg, Vec<double> x, std::size_t n);
double theta1_estimate(const Algorithm& alg, const Vec<double>& x, std::size_t n);
double theta2_estimate(const Algorithm& alg, const Vec<double>& x, std::size_t n);

// Product of plane maps over the steps [k, l) of a float orbit.
ScaledProduct projected_product(const Algorithm& alg, const OrbitRecord<double>& orbit,
                                 std::size_t k, std::size_t l);

// A direction whose orbit is certified to repeat `period`.
struct PeriodicDirection {
  std::vector<std::size_t> period;
  IntMatrix matrix;            // M_{[0,p)}
  PerronDirection perron;
};

// Throws Inconclusive if interval stepping cannot confirm the period.
PeriodicDirection certify_periodic(const Algorithm& alg, std::vector<std::size_t> period);

double theta1_periodic(const Algorithm& alg, const PeriodicDirection& dir, std::size_t n);

// (1/N) ln ||pi_x M_[0,N)||_1 with the left projection fixed at x, evaluated in
// exact integer arithmetic.  x is replaced by M^K 1 with K large enough that the
// substitution error is far below the returned precision.
double theta2_periodic_fixed_left(const Algorithm& alg, const PeriodicDirection& dir,
                                  std::size_t n);

struct TrialResult {
  std::uint64_t seed = 0;
  std::size_t steps = 0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  bool skipped = false;
  std::string error;
};

struct LyapunovReport {
  std::vector<TrialResult> trials;
  std::size_t skipped = 0;
  double mean1 = 0.0, sd1 = 0.0, mean2 = 0.0, sd2 = 0.0;
  std::string verdict;

  std::string to_csv() const;
  std::string summary_json() const;
};

// Trial i samples the simplex with a generator seeded by seed + i.
LyapunovReport pisot_report(const Algorithm& alg, std::size_t trials, std::size_t n,
                            std::uint64_t seed);

}  // namespace sadic

#endif
