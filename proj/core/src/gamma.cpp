#include "zetamill/gamma.hpp"

#include <algorithm>

#include "zetamill/constants.hpp"

namespace zetamill {
namespace detail {

namespace {

// Smallest real part at which the Stirling tail reaches 10^-digits before
// its terms turn around (minimal term ~ e^(-2*pi*Re w)).
long stirling_shift_target(long digits) {
    return static_cast<long>(0.40 * static_cast<double>(digits)) + 8;
}

bool is_nonpositive_integer(const Complex& z) {
    return z.im == 0 && z.re <= 0 && floor(z.re) == z.re;
}

// Asymptotic series for log Gamma, valid once Re(w) >= shift target.
Complex log_gamma_stirling(const Complex& w, long digits) {
    PrecisionScope scope(digits);
    Real eps = pow(Real(10), static_cast<long>(-digits - 3));
    Complex lw = log(w);
    Complex half(Real(1) / 2);
    Complex acc = (w - half) * lw - w + Complex((log2_at(digits) + log(pi_at(digits))) / 2);

    Complex winv = Complex(Real(1)) / w;
    Complex winv2 = winv * winv;
    Complex wpow = winv;  // w^(1-2j) running power
    for (long j = 1;; ++j) {
        Real coeff = bernoulli_real(2 * j, digits) / Real((2 * j) * (2 * j - 1));
        Complex term = coeff * wpow;
        acc += term;
        if (abs(term) < eps) break;
        if (j > 4 * digits) throw Error("log_gamma: Stirling series failed to converge");
        wpow *= winv2;
    }
    return acc;
}

}  // namespace

Complex log_gamma_at(const Complex& z, long digits) {
    if (is_nonpositive_integer(z)) throw DomainError("gamma-pole");
    PrecisionScope scope(digits);
    Complex zz = at_digits(z, digits);

    long target = stirling_shift_target(digits);
    long k = 0;
    if (zz.re < target) k = static_cast<long>(ceil(Real(target) - zz.re).convert_to<long>());

    // log Gamma(z) = log Gamma(z+k) - sum log(z+i); principal logs keep the
    // continuation on the cut plane since every cut involved lies in (-inf, 0].
    Complex shifted{zz.re + Real(k), zz.im};
    Complex acc = log_gamma_stirling(shifted, digits);
    for (long i = 0; i < k; ++i) acc -= log(Complex{zz.re + Real(i), zz.im});
    return acc;
}

Complex digamma_at(const Complex& z, long digits) {
    if (is_nonpositive_integer(z)) throw DomainError("gamma-pole");
    PrecisionScope scope(digits);
    Complex zz = at_digits(z, digits);
    Real eps = pow(Real(10), static_cast<long>(-digits - 3));

    long target = stirling_shift_target(digits);
    long k = 0;
    if (zz.re < target) k = static_cast<long>(ceil(Real(target) - zz.re).convert_to<long>());

    Complex w{zz.re + Real(k), zz.im};
    Complex winv = Complex(Real(1)) / w;
    Complex winv2 = winv * winv;
    // psi(w) = log w - 1/(2w) - sum B_2j/(2j w^2j)
    Complex acc = log(w) - winv * (Real(1) / 2);
    Complex wpow = winv2;
    for (long j = 1;; ++j) {
        Complex term = (bernoulli_real(2 * j, digits) / Real(2 * j)) * wpow;
        acc -= term;
        if (abs(term) < eps) break;
        if (j > 4 * digits) throw Error("digamma: series failed to converge");
        wpow *= winv2;
    }
    for (long i = 0; i < k; ++i) acc -= Complex(Real(1)) / Complex{zz.re + Real(i), zz.im};
    return acc;
}

Real polygamma_at(long m, const Rational& x, long digits) {
    PrecisionScope scope(digits);
    Real xr = rational_to_real(x, digits);
    Real eps = pow(Real(10), static_cast<long>(-digits - 3));

    long target = stirling_shift_target(digits);
    long k = 0;
    if (xr < target) k = static_cast<long>(ceil(Real(target) - xr).convert_to<long>());
    Real y = xr + k;

    Real mfact = 1;
    for (long i = 2; i <= m; ++i) mfact *= i;

    Real acc;
    Real yinv = 1 / y;
    Real yinv2 = yinv * yinv;
    if (m == 0) {
        acc = log(y) - yinv / 2;
        Real ypow = yinv2;
        for (long j = 1;; ++j) {
            Real term = bernoulli_real(2 * j, digits) / (2 * j) * ypow;
            acc -= term;
            if (abs(term) < eps) break;
            if (j > 4 * digits) throw Error("polygamma: series failed to converge");
            ypow *= yinv2;
        }
        for (long i = 0; i < k; ++i) acc -= 1 / (xr + i);
        return acc;
    }

    // psi^(m)(y) = (-1)^(m-1) [ (m-1)!/y^m + m!/(2 y^(m+1))
    //              + sum B_2j (2j+m-1)!/(2j)! y^(-2j-m) ]
    Real ym = pow(yinv, m);
    acc = (mfact / m) * ym + mfact / 2 * ym * yinv;
    Real ratio_fact = mfact / m;  // (2j+m-1)!/(2j)!, seeded at j=0 with (m-1)!
    Real ypow = ym * yinv2;
    for (long j = 1;; ++j) {
        // (2j+m-1)!/(2j)! steps by factors (2j+m-1)(2j+m-2).../(2j)(2j-1)
        ratio_fact *= Real(2 * j + m - 1) * Real(2 * j + m - 2) / (Real(2 * j) * Real(2 * j - 1));
        Real term = bernoulli_real(2 * j, digits) * ratio_fact * ypow;
        acc += term;
        if (abs(term) < eps) break;
        if (j > 4 * digits) throw Error("polygamma: series failed to converge");
        ypow *= yinv2;
    }
    if (m % 2 == 0) acc = -acc;

    // psi^(m)(x) = psi^(m)(x+k) + (-1)^(m+1) m! sum (x+i)^(-m-1)
    Real shift_sum = 0;
    for (long i = 0; i < k; ++i) shift_sum += pow(1 / (xr + i), m + 1);
    Real sign = (m % 2 == 0) ? Real(-1) : Real(1);
    return acc + sign * mfact * shift_sum;
}

Real logarithmic_integral_at(const Real& x, long digits) {
    if (x <= 1) throw DomainError("logarithmic_integral: x must be > 1");
    PrecisionScope scope(digits);
    Real eps = pow(Real(10), static_cast<long>(-digits - 3));
    Real lx = log(at_digits(x, digits));

    // li(x) = gamma + log log x + sum (log x)^k / (k * k!)
    Real acc = euler_gamma_at(digits) + log(lx);
    Real t = 1;  // (log x)^k / k!
    for (long kk = 1;; ++kk) {
        t *= lx / kk;
        Real term = t / kk;
        acc += term;
        if (term < eps && Real(kk) > lx) break;
        if (kk > 400 + 8 * digits) throw Error("logarithmic_integral: series failed to converge");
    }
    return acc;
}

}  // namespace detail

Complex log_gamma(const Complex& z, const WorkingPrecision& p) {
    return detail::log_gamma_at(z, p.internal_digits());
}

Real polygamma(long m, const Rational& x, const WorkingPrecision& p) {
    if (m < 0) throw DomainError("polygamma: m must be >= 0");
    if (x <= 0) throw DomainError("polygamma: x must be > 0");
    return detail::polygamma_at(m, x, p.internal_digits());
}

Real logarithmic_integral(const Real& x, const WorkingPrecision& p) {
    return detail::logarithmic_integral_at(x, p.internal_digits());
}

}  // namespace zetamill
