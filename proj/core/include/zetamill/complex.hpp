#pragma once

#include "zetamill/precision.hpp"

namespace zetamill {

// Minimal complex arithmetic over Real. MPFR has no complex layer, and the
// handful of entire-function evaluations here need only these operations.
struct Complex {
    Real re;
    Real im;

    Complex() : re(0), im(0) {}
    Complex(const Real& r) : re(r), im(Real(0, r.precision())) {}  // NOLINT: implicit by design
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(long r) : re(r), im(0) {}  // NOLINT

    bool is_zero() const { return re == 0 && im == 0; }
    long precision() const { return static_cast<long>(std::min(re.precision(), im.precision())); }
};

inline Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
inline Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
inline Complex operator-(const Complex& a) { return {-a.re, -a.im}; }

inline Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }
inline Complex operator*(const Real& s, const Complex& a) { return a * s; }

inline Complex operator/(const Complex& a, const Real& s) { return {a.re / s, a.im / s}; }
inline Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

inline Complex& operator+=(Complex& a, const Complex& b) { a = a + b; return a; }
inline Complex& operator-=(Complex& a, const Complex& b) { a = a - b; return a; }
inline Complex& operator*=(Complex& a, const Complex& b) { a = a * b; return a; }

inline bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

inline Complex conj(const Complex& z) { return {z.re, -z.im}; }
inline Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
inline Real abs(const Complex& z) { return hypot(z.re, z.im); }
inline Real arg(const Complex& z) { return atan2(z.im, z.re); }

inline Complex exp(const Complex& z) {
    Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

// Principal logarithm, cut along the negative real axis.
inline Complex log(const Complex& z) { return {log(abs(z)), arg(z)}; }

inline Complex sin(const Complex& z) {
    return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

// exp(z) - 1, stable for small |z|.
inline Complex expm1(const Complex& z) {
    Real half = z.im / 2;
    Real s = sin(half);
    return {expm1(z.re) * cos(z.im) - 2 * s * s, exp(z.re) * sin(z.im)};
}

inline Complex pow(const Complex& z, long n) {
    if (n < 0) return Complex(Real(1, z.re.precision())) / pow(z, -n);
    Complex acc(Real(1, z.re.precision()));
    Complex base = z;
    for (long k = n; k > 0; k >>= 1) {
        if (k & 1) acc *= base;
        if (k > 1) base *= base;
    }
    return acc;
}

// base^e for real base > 0 and complex exponent: exp(e * log base).
inline Complex pow(const Real& base, const Complex& e) {
    if (base <= 0) throw DomainError("pow: real base must be positive");
    Real lb = log(base);
    return exp(Complex{e.re * lb, e.im * lb});
}

inline Complex pow(const Complex& z, const Complex& e) { return exp(e * log(z)); }

inline Complex at_digits(const Complex& z, long digits) {
    return {at_digits(z.re, digits), at_digits(z.im, digits)};
}

inline AgreementCount digits_agreement(const Complex& a, const Complex& b) {
    if (!(boost::math::isfinite)(a.re) || !(boost::math::isfinite)(a.im) ||
        !(boost::math::isfinite)(b.re) || !(boost::math::isfinite)(b.im))
        throw DomainError("digits_agreement: non-finite input");
    long prec = std::min(a.precision(), b.precision());
    if (a == b) return {true, prec};
    Real scale = std::max(abs(a), abs(b));
    return detail::agreement_from_parts(abs(a - b), scale, prec);
}

inline std::string trial_string(const Complex& z) {
    return trial_string(z.re) + (z.im < 0 ? " - " : " + ") + trial_string(abs(z.im)) + "i";
}

}  // namespace zetamill
