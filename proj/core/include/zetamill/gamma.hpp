#pragma once

#include "zetamill/complex.hpp"
#include "zetamill/rationals.hpp"

namespace zetamill {

// Principal branch of log Gamma, continuous on the plane cut along the
// non-positive real axis. Poles at the non-positive integers are rejected.
Complex log_gamma(const Complex& z, const WorkingPrecision& p);

// psi^(m)(x) for rational x > 0; m = 0 is the digamma function.
Real polygamma(long m, const Rational& x, const WorkingPrecision& p);

// Principal-value logarithmic integral li(x) for x > 1.
Real logarithmic_integral(const Real& x, const WorkingPrecision& p);

namespace detail {

// digit-count cores (public operations wrap these at internal digits)
Complex log_gamma_at(const Complex& z, long digits);
Real polygamma_at(long m, const Rational& x, long digits);
Real logarithmic_integral_at(const Real& x, long digits);

// Complex digamma, Stirling + shift; used by the zero finder for theta'.
Complex digamma_at(const Complex& z, long digits);

}  // namespace detail

}  // namespace zetamill
