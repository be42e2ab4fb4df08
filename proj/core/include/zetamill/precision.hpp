#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <utility>

#include "zetamill/errors.hpp"

namespace zetamill {

namespace mp = boost::multiprecision;

// Arbitrary-precision real. Every value carries the precision it was
// produced at; arithmetic results inherit operand precision, so routines
// normalize their inputs once on entry (see at_digits).
using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

// Decimal significant digits requested by the caller plus the guard-digit
// policy that governs every internal evaluation.
struct WorkingPrecision {
    long requested_digits;
    long guard_digits = 15;
    long max_escalations = 3;

    explicit WorkingPrecision(long requested, long guard = 15, long escalations = 3)
        : requested_digits(requested), guard_digits(guard), max_escalations(escalations) {
        if (requested < 1) throw DomainError("WorkingPrecision: requested_digits must be >= 1");
        if (guard < 1) throw DomainError("WorkingPrecision: guard_digits must be >= 1");
        if (escalations < 0) throw DomainError("WorkingPrecision: max_escalations must be >= 0");
    }

    long internal_digits() const { return requested_digits + guard_digits; }
};

// internal binary precision = ceil(digits * log2(10)) + 8
long bits_for_digits(long digits);

// Sets the ambient decimal precision new Reals are created at; restores on exit.
class PrecisionScope {
  public:
    explicit PrecisionScope(long digits)
        : saved_(Real::default_precision()) {
        Real::default_precision(static_cast<unsigned>(digits));
    }
    ~PrecisionScope() { Real::default_precision(saved_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

  private:
    unsigned saved_;
};

// Copy of x rounded to the given decimal precision.
inline Real at_digits(const Real& x, long digits) {
    return Real(x, static_cast<unsigned>(digits));
}

// Parse a decimal string at the given precision.
Real real_from_string(const std::string& s, long digits);

// x as a decimal string with exactly `digits` significant digits, in fixed
// notation when the exponent permits, else normalized scientific. Canonical:
// the same value and digit count always produce the same bytes.
std::string to_decimal_string(const Real& x, long digits);

// Number of decimal significant digits matched between two finite values.
struct AgreementCount {
    bool all_at_precision = false;
    long digits = 0;

    bool meets(long threshold) const { return all_at_precision || digits >= threshold; }
};

// floor(-log10(|a-b| / max(|a|,|b|))) clamped to [0, min precision of the
// inputs]; exact equality (including 0,0) reports all-at-precision.
AgreementCount digits_agreement(const Real& a, const Real& b);

namespace detail {
// Shared clamp used by the Real and Complex agreement metrics.
AgreementCount agreement_from_parts(const Real& absdiff, const Real& scale, long precision_digits);
}  // namespace detail

// Diagnostic rendering of a trial value (overloaded for Complex elsewhere).
std::string trial_string(const Real& x);

// Evaluate f(internal_digits) twice, at d and d+10 digits, and accept when
// the trials agree to the requested digit count; otherwise double d, up to
// max_escalations times. f must be a pure function of its digit argument.
template <class F>
auto evaluate_with_escalation(F&& f, const WorkingPrecision& p) {
    long d = p.internal_digits();
    auto first = f(d);
    auto second = f(d + 10);
    for (long e = 0;; ++e) {
        if (digits_agreement(first, second).meets(p.requested_digits)) return second;
        if (e == p.max_escalations) break;
        d *= 2;
        first = f(d);
        second = f(d + 10);
    }
    throw PrecisionUnattainable("agreement to requested digits never reached",
                                trial_string(first), trial_string(second));
}

}  // namespace zetamill
