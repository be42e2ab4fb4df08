#include "zetamill/constants.hpp"

namespace zetamill {

namespace {

template <int (*ConstFn)(mpfr_ptr, mpfr_rnd_t)>
Real mpfr_constant(long digits) {
    Real out(0, static_cast<unsigned>(digits));
    ConstFn(out.backend().data(), MPFR_RNDN);
    return out;
}

}  // namespace

Real pi_at(long digits) { return mpfr_constant<mpfr_const_pi>(digits); }
Real euler_gamma_at(long digits) { return mpfr_constant<mpfr_const_euler>(digits); }
Real catalan_at(long digits) { return mpfr_constant<mpfr_const_catalan>(digits); }
Real log2_at(long digits) { return mpfr_constant<mpfr_const_log2>(digits); }

Real euler_gamma(const WorkingPrecision& p) { return euler_gamma_at(p.internal_digits()); }
Real catalan(const WorkingPrecision& p) { return catalan_at(p.internal_digits()); }

Real constant_value(NamedConstant which, const WorkingPrecision& p) {
    long d = p.internal_digits();
    switch (which) {
        case NamedConstant::euler_gamma: return euler_gamma_at(d);
        case NamedConstant::catalan: return catalan_at(d);
        case NamedConstant::pi: return pi_at(d);
        case NamedConstant::log2: return log2_at(d);
    }
    throw DomainError("constant_value: unknown constant");
}

}  // namespace zetamill
