#pragma once

#include <utility>

#include "zetamill/zeros.hpp"

namespace zetamill {

// Z(k) = sum_n alpha_n^-k assembled as partial sum over cached zeros plus a
// density-model tail. error_bound covers the tail model and the propagated
// ordinate uncertainty; the tail itself always dominates it.
struct SecondaryZetaValue {
    long k = 0;
    long zeros_used = 0;
    Real cutoff;
    Real partial;
    Real tail;
    Real error_bound;
    Real value;
};

// sum_{n<=M} alpha_n^-k, summed smallest-first. Requires a contiguous cache
// with at least M records certified finely enough for the propagated bound.
Real partial_power_sum(long k, long m_count, const ZeroCache& cache);

// (tail, error_bound) for the zeros above height T: the integral of u^-k
// against the smooth density (1/2pi) log(u/2pi), with a heuristic bound for
// the oscillating remainder. Requires T > 100.
std::pair<Real, Real> tail_estimate(long k, const Real& T);

// Full-depth spectral sum; throws NeedMoreZeros when the cache cannot reach
// target_error.
SecondaryZetaValue secondary_zeta(long k, const Real& target_error, const ZeroCache& cache);

// Same assembly at a chosen depth, without the target gate (identity
// verifications pick their own depth).
SecondaryZetaValue secondary_zeta_at_depth(long k, long m_count, const ZeroCache& cache);

// Cutoff height for a depth-M partial: midpoint to the next cached zero when
// available, else alpha_M + 1/2.
Real spectral_cutoff(const ZeroCache& cache, long m_count);

}  // namespace zetamill
