#include "zetamill/secondary.hpp"

#include <cmath>

#include "zetamill/constants.hpp"

namespace zetamill {

namespace {

constexpr long kTailDigits = 25;

void require_even_k(long k) {
    if (k < 2 || k % 2 != 0) throw DomainError("spectral sums take even k >= 2");
}

void require_depth(long k, long m_count, const ZeroCache& cache) {
    if (m_count < 1) throw DomainError("partial_power_sum: M must be >= 1");
    if (!cache.contiguous)
        throw Error("partial_power_sum: cache is not contiguous");
    if (static_cast<long>(cache.records.size()) < m_count)
        throw Error("partial_power_sum: cache too short, need M=" + std::to_string(m_count) +
                    ", have " + std::to_string(cache.records.size()));
    // propagated ordinate error must stay below the leading term
    double alpha1 = cache.records[0].ordinate.convert_to<double>();
    long needed = static_cast<long>(
        std::ceil(std::log10(static_cast<double>(m_count) * static_cast<double>(k) / alpha1))) + 3;
    if (cache.digits < needed)
        throw Error("partial_power_sum: cache too coarse, need >= " + std::to_string(needed) +
                    " certified digits, have " + std::to_string(cache.digits));
}

Real propagated_bound(long k, long m_count, const ZeroCache& cache, long digits) {
    PrecisionScope scope(digits);
    Real alpha1 = at_digits(cache.records[0].ordinate, digits);
    return Real(m_count) * pow(Real(10), -cache.digits) * k * pow(alpha1, -(k + 1));
}

SecondaryZetaValue assemble(long k, long m_count, const ZeroCache& cache) {
    require_even_k(k);
    require_depth(k, m_count, cache);
    long digits = cache.digits + 10;

    Real partial = partial_power_sum(k, m_count, cache);
    Real cutoff = spectral_cutoff(cache, m_count);
    auto [tail, model_err] = tail_estimate(k, cutoff);
    Real error_bound = model_err + propagated_bound(k, m_count, cache, digits);

    SecondaryZetaValue out{k, m_count, cutoff, partial, tail, error_bound, partial + tail};
    if (!(out.partial > 0 && out.tail > 0 && out.value > out.partial))
        throw Error("secondary_zeta: positivity invariant violated");
    if (!(out.error_bound < out.tail))
        throw Error("secondary_zeta: tail model does not dominate its own uncertainty");
    return out;
}

}  // namespace

Real partial_power_sum(long k, long m_count, const ZeroCache& cache) {
    require_even_k(k);
    require_depth(k, m_count, cache);
    long digits = cache.digits + 10;
    PrecisionScope scope(digits);
    Real acc(0, static_cast<unsigned>(digits));
    for (long n = m_count; n >= 1; --n) {  // smallest terms first
        Real a = at_digits(cache.records[static_cast<size_t>(n - 1)].ordinate, digits);
        acc += pow(a, -k);
    }
    return acc;
}

std::pair<Real, Real> tail_estimate(long k, const Real& T) {
    require_even_k(k);
    if (T <= 100) throw DomainError("tail_estimate: T must be > 100");
    PrecisionScope scope(kTailDigits);
    Real t = at_digits(T, kTailDigits);
    Real two_pi = 2 * pi_at(kTailDigits);
    Real tk1 = pow(t, k - 1);
    Real tail = (log(t / two_pi) / ((k - 1) * tk1) + 1 / (Real(k - 1) * (k - 1) * tk1)) / two_pi;
    Real error_bound = Real(4 * k) * (2 + log(t)) / (two_pi * k * tk1 * t);
    return {tail, error_bound};
}

Real spectral_cutoff(const ZeroCache& cache, long m_count) {
    if (m_count < 1 || static_cast<long>(cache.records.size()) < m_count)
        throw DomainError("spectral_cutoff: depth exceeds cache");
    const Real& last = cache.records[static_cast<size_t>(m_count - 1)].ordinate;
    if (static_cast<long>(cache.records.size()) > m_count)
        return (last + cache.records[static_cast<size_t>(m_count)].ordinate) / 2;
    return last + Real(1) / 2;
}

SecondaryZetaValue secondary_zeta_at_depth(long k, long m_count, const ZeroCache& cache) {
    return assemble(k, m_count, cache);
}

SecondaryZetaValue secondary_zeta(long k, const Real& target_error, const ZeroCache& cache) {
    require_even_k(k);
    if (!(target_error > 0)) throw DomainError("secondary_zeta: target_error must be > 0");
    long depth = static_cast<long>(cache.records.size());
    if (depth < 1) throw NeedMoreZeros("need-more-zeros: cache is empty", 100);

    SecondaryZetaValue out = assemble(k, depth, cache);
    if (out.error_bound > target_error) {
        // invert the model bound for a height, then count zeros below it
        double target = target_error.convert_to<double>();
        double t = std::max(200.0, out.cutoff.convert_to<double>());
        const double two_pi = 6.283185307179586;
        for (int i = 0; i < 6; ++i)
            t = std::pow(4.0 * (2.0 + std::log(t)) / (two_pi * 0.8 * target),
                         1.0 / static_cast<double>(k));
        double expected = t / 2 * std::log(t / two_pi) / 3.141592653589793 -
                          t / 2 / 3.141592653589793 + 1;
        long estimated = static_cast<long>(std::ceil(std::max(expected, 1.0)));
        throw NeedMoreZeros("need-more-zeros: estimated M=" + std::to_string(estimated),
                            estimated);
    }
    return out;
}

}  // namespace zetamill
