#ifndef SADIC_RATIONAL_HPP
#define SADIC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "sadic/interval.hpp"

namespace sadic {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p", "p/q", "-p/q" and decimals such as "0.2792910821" or "1e-3".
// Decimals are converted exactly (0.1 becomes 1/10, not the nearest double).
Rational parse_rational(std::string_view text);

// Comma separated list of rationals.
std::vector<Rational> parse_rational_list(std::string_view text);

std::string to_string(const Rational& q);

double to_double(const Rational& q);
Interval to_interval(const Rational& q);

BigInt floor(const Rational& q);
Rational frac(const Rational& q);

// ln|n| accurate to double precision for arbitrarily large n.
double log_abs(const BigInt& n);

}  // namespace sadic

#endif
