#pragma once

#include "zetamill/precision.hpp"

namespace zetamill {

enum class NamedConstant { euler_gamma, catalan, pi, log2 };

// Value of a named constant at the working precision's internal digits.
Real constant_value(NamedConstant which, const WorkingPrecision& p);

Real euler_gamma(const WorkingPrecision& p);
Real catalan(const WorkingPrecision& p);

// digit-count forms used by internal evaluation loops
Real pi_at(long digits);
Real euler_gamma_at(long digits);
Real catalan_at(long digits);
Real log2_at(long digits);

}  // namespace zetamill
