#pragma once

#include <vector>

#include "zetamill/complex.hpp"

namespace zetamill {

// zeta(s), zeta'(s), ..., zeta^(K)(s) at one point under one precision.
struct DerivativeBundle {
    Complex point;
    long order;                    // K
    std::vector<Complex> values;   // size K+1
    WorkingPrecision precision;
};

// Riemann zeta via Euler-Maclaurin; truncation chosen for the internal digits.
Complex zeta(const Complex& s, const WorkingPrecision& p);

// All derivatives through order K by trapezoidal quadrature of the Cauchy
// circle |z - s| = min(1/4, |s-1|/2); one node set serves every order.
DerivativeBundle zeta_derivatives(const Complex& s, long order, const WorkingPrecision& p);

// L(s, chi) for the nontrivial character mod 4 (entire).
Complex dirichlet_beta(const Complex& s, const WorkingPrecision& p);

// (pi/2)^(2n+1) |E_2n| / (2 (2n)!) for odd argument 2n+1 >= 3.
Real beta_odd_closed(long odd_argument, const WorkingPrecision& p);

// (2 pi)^(2n) |B_2n| / (2 (2n)!) for even argument 2n >= 2.
Real zeta_even_closed(long even_argument, const WorkingPrecision& p);

// R(x) = 1 + sum_k (log x)^k / (k! k zeta(k+1)), x > 1.
Real gram_series(const Real& x, const WorkingPrecision& p);

namespace detail {

// Euler-Maclaurin core. cut_override forces the split point N (testing knob
// for comparing truncation orders); 0 means choose from the error bound.
Complex zeta_em_at(const Complex& s, long digits, long cut_override = 0);

Complex dirichlet_beta_at(const Complex& s, long digits);

DerivativeBundle zeta_derivatives_at(const Complex& s, long order, long digits,
                                     const WorkingPrecision& p);

Real gram_series_at(const Real& x, long digits);

}  // namespace detail

}  // namespace zetamill
