// Closed real and complex intervals with outward rounding.
//
// Every arithmetic result is widened by one ulp on each side.  IEEE-754
// guarantees that +, -, *, / and sqrt are correctly rounded, so the exact
// result lies within one ulp of the computed one and the widened interval
// is a rigorous enclosure without touching the FPU rounding mode.

#ifndef SADIC_INTERVAL_HPP
#define SADIC_INTERVAL_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace sadic {

class Interval {
 public:
  constexpr Interval() = default;
  constexpr Interval(double v) : lo_(v), hi_(v) {}  // NOLINT: implicit on purpose
  Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!(lo <= hi)) throw std::invalid_argument("Interval: lo > hi or NaN");
  }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double mid() const { return 0.5 * (lo_ + hi_); }
  double width() const { return hi_ - lo_; }
  bool contains(double v) const { return lo_ <= v && v <= hi_; }
  bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool contains_zero() const { return lo_ <= 0.0 && 0.0 <= hi_; }

  /// Smallest enclosure of a decimal or other value known to within `rad`.
  static Interval around(double v, double rad) { return widen(v - rad, v + rad); }

  static Interval hull(const Interval& a, const Interval& b) {
    return {std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_)};
  }

  friend Interval operator+(const Interval& a, const Interval& b) {
    return widen(a.lo_ + b.lo_, a.hi_ + b.hi_);
  }
  friend Interval operator-(const Interval& a, const Interval& b) {
    return widen(a.lo_ - b.hi_, a.hi_ - b.lo_);
  }
  friend Interval operator-(const Interval& a) { return {-a.hi_, -a.lo_}; }
  friend Interval operator*(const Interval& a, const Interval& b) {
    const double p[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
    return widen(*std::min_element(p, p + 4), *std::max_element(p, p + 4));
  }
  friend Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw std::domain_error("Interval division by an interval containing 0");
    const double q[4] = {a.lo_ / b.lo_, a.lo_ / b.hi_, a.hi_ / b.lo_, a.hi_ / b.hi_};
    return widen(*std::min_element(q, q + 4), *std::max_element(q, q + 4));
  }
  Interval& operator+=(const Interval& o) { return *this = *this + o; }
  Interval& operator-=(const Interval& o) { return *this = *this - o; }
  Interval& operator*=(const Interval& o) { return *this = *this * o; }
  Interval& operator/=(const Interval& o) { return *this = *this / o; }

  // Certain comparisons: true only when every pair of members satisfies it.
  bool certainly_less(const Interval& o) const { return hi_ < o.lo_; }
  bool certainly_greater(const Interval& o) const { return lo_ > o.hi_; }
  bool certainly_geq(const Interval& o) const { return lo_ >= o.hi_; }
  bool certainly_positive() const { return lo_ > 0.0; }
  bool certainly_negative() const { return hi_ < 0.0; }

  friend std::ostream& operator<<(std::ostream& os, const Interval& x) {
    return os << '[' << x.lo_ << ", " << x.hi_ << ']';
  }

  static Interval widen(double lo, double hi) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return {std::nextafter(lo, -inf), std::nextafter(hi, inf)};
  }

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

inline Interval sqr(const Interval& x) {
  auto clamp0 = [](Interval r) { return Interval(std::max(0.0, r.lo()), r.hi()); };
  if (x.lo() >= 0) return clamp0(Interval::widen(x.lo() * x.lo(), x.hi() * x.hi()));
  if (x.hi() <= 0) return clamp0(Interval::widen(x.hi() * x.hi(), x.lo() * x.lo()));
  const double m = std::max(-x.lo(), x.hi());
  return {0.0, Interval::widen(m * m, m * m).hi()};
}

inline Interval sqrt(const Interval& x) {
  if (x.hi() < 0) throw std::domain_error("sqrt of a negative interval");
  const double lo = x.lo() <= 0 ? 0.0 : std::sqrt(x.lo());
  Interval r = Interval::widen(lo, std::sqrt(x.hi()));
  return {std::max(0.0, r.lo()), r.hi()};
}

inline Interval abs(const Interval& x) {
  if (x.lo() >= 0) return x;
  if (x.hi() <= 0) return -x;
  return {0.0, std::max(-x.lo(), x.hi())};
}

/// Rectangular complex interval.
struct ComplexInterval {
  Interval re;
  Interval im;

  ComplexInterval() = default;
  ComplexInterval(Interval r, Interval i = Interval(0.0)) : re(r), im(i) {}

  friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexInterval operator-(const ComplexInterval& a) { return {-a.re, -a.im}; }
  friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexInterval operator*(const Interval& s, const ComplexInterval& b) {
    return {s * b.re, s * b.im};
  }
  ComplexInterval& operator+=(const ComplexInterval& o) { return *this = *this + o; }
  ComplexInterval& operator*=(const ComplexInterval& o) { return *this = *this * o; }

  friend std::ostream& operator<<(std::ostream& os, const ComplexInterval& z) {
    return os << z.re << " + i" << z.im;
  }
};

inline Interval norm_sq(const ComplexInterval& z) { return sqr(z.re) + sqr(z.im); }
inline Interval abs(const ComplexInterval& z) { return sqrt(norm_sq(z)); }

}  // namespace sadic

#endif  // SADIC_INTERVAL_HPP
