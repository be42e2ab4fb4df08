#pragma once

#include <boost/multiprecision/gmp.hpp>

#include "zetamill/precision.hpp"

namespace zetamill {

using Integer = mp::mpz_int;
// Always stored reduced with positive denominator (GMP canonical form).
using Rational = mp::mpq_rational;

// Exact Bernoulli number B_n, convention B_1 = -1/2. Results are cached.
Rational bernoulli(long n);

// Exact Euler number E_n (secant-series convention); 0 for odd n. Cached.
Integer euler_number(long n);

Integer binomial(long n, long k);

// B_n rounded to `digits` decimal digits.
Real bernoulli_real(long n, long digits);

Real rational_to_real(const Rational& q, long digits);

}  // namespace zetamill
