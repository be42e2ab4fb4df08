#pragma once

#include <string>
#include <vector>

#include "zetamill/complex.hpp"

namespace zetamill {

struct ZeroBracket {
    Real lo;
    Real hi;
};

// One certified zero ordinate. residual is |Z(ordinate)| at certification
// time; records loaded from a cache carry NaN there (nothing is recomputed).
struct ZeroRecord {
    long index = 0;
    Real ordinate;
    long certified_digits = 0;
    Real residual;
};

struct ZeroCache {
    long digits = 0;
    std::vector<ZeroRecord> records;
    bool contiguous = true;
};

struct CountCheck {
    bool passed;
    Real expected;
    long found;
};

// Riemann-Siegel theta: Im log Gamma(1/4 + it/2) - (t/2) log pi, continuous in t.
Real rs_theta(const Real& t, const WorkingPrecision& p);

// Hardy Z(t) = e^{i theta(t)} zeta(1/2 + it); real for real t. The imaginary
// residue is asserted below 10^-internal (relative) and discarded.
Real hardy_z(const Real& t, const WorkingPrecision& p);

// Disjoint sign-change brackets covering every zero ordinate in (0, t_max],
// validated against the theta-based count. Requires t_max > 14.
std::vector<ZeroBracket> isolate_zeros(const Real& t_max, const WorkingPrecision& p);

// Bisection to width 1e-3, then Newton with the derivative taken from a
// small Cauchy circle, precision doubling per stage. Falls back to pure
// bisection if Newton leaves the bracket.
ZeroRecord refine_zero(const ZeroBracket& bracket, const WorkingPrecision& p);

// Pass iff |found - (theta(T)/pi + 1)| <= 2. Caller must keep T at least
// 0.1 away from any found ordinate.
CountCheck zero_count_check(const Real& T, long found);

// Cache file format, bit-exact: line 1 "ZCACHE 1 <digits>", then
// "<index>\t<ordinate>" with exactly <digits> significant digits per line.
void cache_store(const ZeroCache& cache, const std::string& destination);
ZeroCache cache_load(const std::string& source);

// Scan + refine convenience drivers used by the CLI.
ZeroCache compute_zeros_upto(const Real& t_max, const WorkingPrecision& p);
ZeroCache compute_zeros_count(long count, const WorkingPrecision& p);

namespace detail {

Real rs_theta_at(const Real& t, long digits);
Real hardy_z_at(const Real& t, long digits);

// step_override = 0 means the documented schedule (0.05 up to height 1000,
// 0.03 above); tests use other steps to check scan independence.
std::vector<ZeroBracket> isolate_zeros_at(const Real& t_max, double step_override);

}  // namespace detail

}  // namespace zetamill
