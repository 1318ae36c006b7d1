#ifndef SADIC_POLYNOMIAL_HPP
#define SADIC_POLYNOMIAL_HPP

#include <string>

#include "sadic/interval.hpp"
#include "sadic/matrix.hpp"

namespace sadic {

// Polynomials are coefficient vectors, lowest degree first.
using IntPolynomial = Vec<BigInt>;

std::string to_string(const IntPolynomial& p);

Interval evaluate(const IntPolynomial& p, const Interval& x);

// Irreducibility over Q for monic polynomials of degree <= 3 (no rational root).
bool irreducible_low_degree(const IntPolynomial& p);

BigInt discriminant_cubic(const IntPolynomial& p);

// Root in [lo, hi] of a polynomial with certified opposite signs at the ends,
// bisected until the enclosure is narrower than `width`.
Interval isolate_root(const IntPolynomial& p, double lo, double hi, double width = 1e-14);

struct CubicRoots {
  Interval real_root;
  ComplexInterval beta;       // the non-real root with negative imaginary part
  Interval beta_modulus;
};

// Monic integer cubic with negative discriminant (one real and two conjugate roots).
CubicRoots cubic_roots(const IntPolynomial& p);

}  // namespace sadic

#endif
