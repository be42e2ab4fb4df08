#include "zetamill/precision.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

namespace zetamill {

long bits_for_digits(long digits) {
    return static_cast<long>(std::ceil(static_cast<double>(digits) * 3.3219280948873623479)) + 8;
}

Real real_from_string(const std::string& s, long digits) {
    PrecisionScope scope(digits);
    return Real(s);
}

std::string to_decimal_string(const Real& x, long digits) {
    if (digits < 1) throw DomainError("to_decimal_string: digits must be >= 1");
    if (!(boost::math::isfinite)(x)) throw DomainError("to_decimal_string: non-finite value");

    if (x == 0) {
        std::string z = "0.";
        z.append(static_cast<size_t>(digits - 1), '0');
        return digits == 1 ? std::string("0") : z;
    }

    mpfr_exp_t e = 0;
    char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits),
                             x.backend().data(), MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);

    bool neg = !mant.empty() && mant[0] == '-';
    if (neg) mant.erase(0, 1);
    // mpfr pads with trailing zeros to the requested digit count already;
    // e is the position of the decimal point relative to the mantissa start.
    std::string out;
    if (e >= 1 && e <= digits) {
        out = mant.substr(0, static_cast<size_t>(e));
        if (e < digits) out += "." + mant.substr(static_cast<size_t>(e));
    } else if (e <= 0 && e > -6) {
        out = "0.";
        out.append(static_cast<size_t>(-e), '0');
        out += mant;
    } else {
        out = mant.substr(0, 1);
        if (digits > 1) out += "." + mant.substr(1);
        out += "e" + std::to_string(static_cast<long>(e) - 1);
    }
    return neg ? "-" + out : out;
}

namespace detail {

AgreementCount agreement_from_parts(const Real& absdiff, const Real& scale, long precision_digits) {
    if (absdiff == 0) return {true, precision_digits};
    Real rel = absdiff / scale;
    long matched = static_cast<long>(floor(-log10(rel)).convert_to<long>());
    matched = std::max(0L, std::min(matched, precision_digits));
    return {false, matched};
}

}  // namespace detail

AgreementCount digits_agreement(const Real& a, const Real& b) {
    if (!(boost::math::isfinite)(a) || !(boost::math::isfinite)(b))
        throw DomainError("digits_agreement: non-finite input");
    long prec = static_cast<long>(std::min(a.precision(), b.precision()));
    if (a == b) return {true, prec};  // covers the both-zero convention
    Real scale = std::max(abs(a), abs(b));
    return detail::agreement_from_parts(abs(a - b), scale, prec);
}

std::string trial_string(const Real& x) {
    return (boost::math::isfinite)(x) ? to_decimal_string(x, std::min<long>(x.precision(), 30))
                                      : std::string("non-finite");
}

}  // namespace zetamill
