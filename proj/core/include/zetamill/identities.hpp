#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zetamill/secondary.hpp"
#include "zetamill/zeta.hpp"

namespace zetamill {

// One of the five displayed log-derivative identities at s = 1/2, or the
// general-order identity for arbitrary n >= 2. general:2 and general:3 are
// algebraic rearrangements of ids 2 and 3 and must reproduce them exactly.
struct IdentityId {
    long n = 1;
    bool general = false;

    static IdentityId display(long n);
    static IdentityId general_n(long n);
    static IdentityId parse(const std::string& text);

    bool is_even() const { return n % 2 == 0; }
    std::string str() const;
};

struct IdentityReport {
    IdentityId id;
    Real lhs;
    Real rhs;
    Real abs_diff;
    AgreementCount digits_matched;
    long zeros_used = 0;
    Real tail_error;
    WorkingPrecision precision;
    long threshold_digits = 0;
    long achievable_digits = 0;
    bool verdict = false;
};

struct ProductCheckReport {
    long zeros_used = 0;
    Real cutoff;
    Real value;
    Real residual;
    Real modeled_error;  // NaN when the depth is too shallow for the tail model
};

// Completed zeta xi(s) = (s(s-1)/2) pi^(-s/2) Gamma(s/2) zeta(s), entire;
// the s=1 pole of zeta is regularized by (s-1) zeta(s) -> 1.
Complex xi(const Complex& s, const WorkingPrecision& p);

// Big Xi(t) = xi(1/2 + it); even and entire.
Complex big_xi(const Complex& t, const WorkingPrecision& p);

// Checks Xi(0) prod_{n<=M} (1 + 1/(4 alpha_n^2)) (tail-corrected) against 1/2.
ProductCheckReport xi_product_check(long m_count, const ZeroCache& cache,
                                    const WorkingPrecision& p);

// Truncated zero-product evaluation of zeta(s) with an exp-of-tail
// correction. Rejects s = 1 and the negative even integers.
Complex zeta_product_eval(const Complex& s, long m_count, const ZeroCache& cache,
                          const WorkingPrecision& p);

// g^(m-1) where g = zeta'/zeta, from the ordinary-derivative bundle by the
// forward-solved product recurrence; exact arithmetic apart from rounding.
Real log_deriv_bell(const DerivativeBundle& bundle, long m);

// Closed-form right-hand side of an identity. Even identities require the
// matching spectral sum; odd identities reject one.
Real rhs_closed(const IdentityId& id, const std::optional<SecondaryZetaValue>& sums,
                const WorkingPrecision& p);

// Full verification of one identity at s = 1/2: fresh derivative bundle,
// Bell recurrence LHS, closed-form RHS, honest tail-limited verdict.
// cache may be null for odd identities.
IdentityReport verify_identity(const IdentityId& id, long threshold_digits, long zeros_count,
                               const ZeroCache* cache, const WorkingPrecision& p);

// Reports for ids 1..5 plus general:6 and general:7 spot checks.
std::vector<IdentityReport> verify_all(long digits_odd, long digits_even, long zeros_count,
                                       const ZeroCache* cache, const WorkingPrecision& p);

std::string report_to_json(const IdentityReport& report);
IdentityReport report_from_json(const std::string& text);

}  // namespace zetamill
