#include "sadic/rational.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sadic {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BigInt pow10(long e) {
  BigInt r = 1;
  for (long i = 0; i < e; ++i) r *= 10;
  return r;
}

Rational parse_decimal(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    exponent = std::stol(std::string(s.substr(e + 1)));
    s = s.substr(0, e);
  }
  BigInt digits = 0;
  long scale = 0;
  bool seen_point = false, seen_digit = false;
  for (char c : s) {
    if (c == '.') {
      if (seen_point) throw std::invalid_argument("bad number");
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = digits * 10 + (c - '0');
      seen_digit = true;
      if (seen_point) ++scale;
    } else {
      throw std::invalid_argument("bad number");
    }
  }
  if (!seen_digit) throw std::invalid_argument("bad number");
  exponent -= scale;
  Rational q = exponent >= 0 ? Rational(digits * pow10(exponent)) : Rational(digits, pow10(-exponent));
  return neg ? Rational(-q) : q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty number");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Rational num = parse_decimal(trim(s.substr(0, slash)));
    Rational den = parse_decimal(trim(s.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return num / den;
  }
  return parse_decimal(s);
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    out.push_back(parse_rational(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << '/' << denominator(q);
  return os.str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Interval to_interval(const Rational& q) {
  const double d = to_double(q);
  return Interval::widen(std::nextafter(d, -INFINITY), std::nextafter(d, INFINITY));
}

BigInt floor(const Rational& q) {
  BigInt n = numerator(q), d = denominator(q);
  BigInt f = n / d;
  if (n < 0 && f * d != n) f -= 1;
  return f;
}

Rational frac(const Rational& q) { return q - Rational(floor(q)); }

double log_abs(const BigInt& n) {
  BigInt a = boost::multiprecision::abs(n);
  if (a == 0) return -INFINITY;
  const unsigned bits = boost::multiprecision::msb(a) + 1;
  if (bits <= 60) return std::log(a.convert_to<double>());
  const unsigned shift = bits - 60;
  BigInt top = a >> shift;
  return std::log(top.convert_to<double>()) + shift * std::log(2.0);
}

}  // namespace sadic
