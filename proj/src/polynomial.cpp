#include "sadic/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace sadic {

namespace {

std::size_t degree(const IntPolynomial& p) {
  std::size_t d = p.size();
  while (d > 1 && p[d - 1] == 0) --d;
  return d - 1;
}

BigInt evaluate_exact(const IntPolynomial& p, const BigInt& x) {
  BigInt r = 0;
  for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

}  // namespace

std::string to_string(const IntPolynomial& p) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = degree(p) + 1; i-- > 0;) {
    const BigInt& c = p[i];
    if (c == 0) continue;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) os << mag;
    if (i >= 1) os << 'X';
    if (i >= 2) os << '^' << i;
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

Interval evaluate(const IntPolynomial& p, const Interval& x) {
  Interval r(0.0);
  for (std::size_t i = p.size(); i-- > 0;) r = r * x + Interval(p[i].convert_to<double>());
  return r;
}

bool irreducible_low_degree(const IntPolynomial& p) {
  const std::size_t d = degree(p);
  if (d == 0 || d > 3) throw std::invalid_argument("degree must be 1, 2 or 3");
  if (p[d] != 1) throw std::invalid_argument("polynomial must be monic");
  if (d == 1) return true;
  if (p[0] == 0) return false;
  // A reducible monic cubic or quadratic has an integer root dividing p(0).
  const BigInt c = p[0] < 0 ? BigInt(-p[0]) : p[0];
  for (BigInt q = 1; q * q <= c; ++q) {
    if (c % q != 0) continue;
    for (const BigInt& r : {q, BigInt(c / q)})
      if (evaluate_exact(p, r) == 0 || evaluate_exact(p, -r) == 0) return false;
  }
  return true;
}

BigInt discriminant_cubic(const IntPolynomial& p) {
  if (degree(p) != 3) throw std::invalid_argument("not a cubic");
  const BigInt &d = p[0], &c = p[1], &b = p[2], &a = p[3];
  return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c -
         27 * a * a * d * d;
}

Interval isolate_root(const IntPolynomial& p, double lo, double hi, double width) {
  Interval flo = evaluate(p, Interval(lo));
  Interval fhi = evaluate(p, Interval(hi));
  const bool neg_lo = flo.certainly_negative();
  if (!((neg_lo && fhi.certainly_positive()) || (flo.certainly_positive() && fhi.certainly_negative())))
    throw std::invalid_argument("no certified sign change on the interval");
  while (hi - lo > width) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const Interval fm = evaluate(p, Interval(mid));
    if (fm.contains_zero()) break;
    if (fm.certainly_negative() == neg_lo)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

CubicRoots cubic_roots(const IntPolynomial& p) {
  if (degree(p) != 3 || p[3] != 1) throw std::invalid_argument("monic cubic expected");
  if (discriminant_cubic(p) >= 0) throw std::invalid_argument("cubic has three real roots");
  double bound = 1.0;
  for (int i = 0; i < 3; ++i) bound = std::max(bound, 1.0 + std::abs(p[i].convert_to<double>()));
  CubicRoots r;
  r.real_root = isolate_root(p, -bound, bound);
  const Interval a(p[2].convert_to<double>()), c(p[0].convert_to<double>());
  const Interval re = (-a - r.real_root) / Interval(2.0);
  const Interval mod2 = -c / r.real_root;
  const Interval im2 = mod2 - sqr(re);
  if (!im2.certainly_positive()) throw std::runtime_error("cannot separate the conjugate pair");
  r.beta = ComplexInterval(re, -sqrt(im2));
  r.beta_modulus = sqrt(mod2);
  return r;
}

}  // namespace sadic
