#include "zetamill/identities.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

#include "zetamill/constants.hpp"
#include "zetamill/gamma.hpp"

namespace zetamill {

IdentityId IdentityId::display(long n) {
    if (n < 1 || n > 5) throw DomainError("IdentityId: display ids are 1..5");
    return {n, false};
}

IdentityId IdentityId::general_n(long n) {
    if (n < 2) throw DomainError("IdentityId: general ids start at n = 2");
    return {n, true};
}

IdentityId IdentityId::parse(const std::string& text) {
    if (text.rfind("general:", 0) == 0) return general_n(std::stol(text.substr(8)));
    return display(std::stol(text));
}

std::string IdentityId::str() const {
    return general ? "general:" + std::to_string(n) : std::to_string(n);
}

namespace {

Real nan_real() { return std::numeric_limits<Real>::quiet_NaN(); }

Real realify(const Complex& z, long digits) {
    if (abs(z.im) > pow(Real(10), -(digits / 2)) * (1 + abs(z.re)))
        throw Error("expected a real value, imaginary residue too large");
    return z.re;
}

Complex xi_at(const Complex& s, long digits) {
    PrecisionScope scope(digits);
    Complex z = at_digits(s, digits);
    if (z.im == 0) {
        if (z.re == 1) return Complex(Real(1) / 2);
        // trivial-zero points sit on Gamma poles; use the symmetry
        if (z.re <= 0 && floor(z.re) == z.re &&
            floor(z.re / 2) * 2 == z.re)
            return xi_at(Complex(Real(1) - z.re), digits);
    }
    // (s-1) pi^(-s/2) Gamma(1 + s/2) zeta(s): the 2/s from Gamma(s/2) is
    // folded in, so s = 0 needs no special care
    Complex g = exp(detail::log_gamma_at(z * (Real(1) / 2) + Complex(Real(1)), digits));
    Complex pi_pow = pow(pi_at(digits), -(z * (Real(1) / 2)));
    return (z - Complex(Real(1))) * pi_pow * g * detail::zeta_em_at(z, digits);
}

}  // namespace

Complex xi(const Complex& s, const WorkingPrecision& p) {
    return xi_at(s, p.internal_digits());
}

Complex big_xi(const Complex& t, const WorkingPrecision& p) {
    long digits = p.internal_digits();
    PrecisionScope scope(digits);
    Complex tt = at_digits(t, digits);
    // s = 1/2 + i t
    return xi_at(Complex{Real(1) / 2 - tt.im, tt.re}, digits);
}

ProductCheckReport xi_product_check(long m_count, const ZeroCache& cache,
                                    const WorkingPrecision& p) {
    if (m_count < 0 || static_cast<long>(cache.records.size()) < m_count)
        throw DomainError("xi_product_check: cache shorter than M");
    long digits = p.internal_digits();
    PrecisionScope scope(digits);

    Real xi0 = realify(big_xi(Complex(), p), digits);
    Real prod(1, static_cast<unsigned>(digits));
    for (long n = 1; n <= m_count; ++n) {
        Real a = at_digits(cache.records[static_cast<size_t>(n - 1)].ordinate, digits);
        prod *= 1 + 1 / (4 * a * a);
    }

    ProductCheckReport report;
    report.zeros_used = m_count;
    report.modeled_error = nan_real();
    report.cutoff = nan_real();
    Real value = xi0 * prod;
    if (m_count >= 1) {
        Real cutoff = spectral_cutoff(cache, m_count);
        report.cutoff = cutoff;
        if (cutoff > 100) {
            auto [tail2, err2] = tail_estimate(2, cutoff);
            auto [tail4, err4] = tail_estimate(4, cutoff);
            value *= exp(tail2 / 4);
            // second-order product term and the propagated ordinate error
            Real propagated = Real(m_count) * pow(Real(10), -cache.digits) / 2;
            report.modeled_error = value * (err2 / 4 + tail4 / 32 + propagated);
        }
    }
    report.value = value;
    report.residual = abs(value - Real(1) / 2);
    return report;
}

Complex zeta_product_eval(const Complex& s, long m_count, const ZeroCache& cache,
                          const WorkingPrecision& p) {
    long digits = p.internal_digits();
    PrecisionScope scope(digits);
    Complex z = at_digits(s, digits);
    if (z.im == 0) {
        if (z.re == 1) throw DomainError("zeta_product_eval: pole at s = 1");
        if (z.re < 0 && floor(z.re) == z.re && floor(z.re / 2) * 2 == z.re)
            throw DomainError("zeta_product_eval: Gamma pole at negative even integer");
    }
    if (m_count < 1 || static_cast<long>(cache.records.size()) < m_count)
        throw DomainError("zeta_product_eval: cache shorter than M");

    Real xi0 = realify(big_xi(Complex(), p), digits);
    Complex g = exp(detail::log_gamma_at(z * (Real(1) / 2) + Complex(Real(1)), digits));
    Complex prefactor = Complex(xi0) * pow(pi_at(digits), z * (Real(1) / 2)) /
                        ((z - Complex(Real(1))) * g);

    Complex w = (z - Complex(Real(1) / 2)) * (z - Complex(Real(1) / 2));
    Complex prod(Real(1, static_cast<unsigned>(digits)));
    for (long n = 1; n <= m_count; ++n) {
        Real a = at_digits(cache.records[static_cast<size_t>(n - 1)].ordinate, digits);
        prod *= Complex(Real(1)) + w / Complex(a * a);
    }

    Real cutoff = spectral_cutoff(cache, m_count);
    if (cutoff > 100) {
        auto [tail2, err2] = tail_estimate(2, cutoff);
        prod *= exp(w * tail2);
    }
    return prefactor * prod;
}

Real log_deriv_bell(const DerivativeBundle& bundle, long m) {
    if (m < 1) throw DomainError("log_deriv_bell: m must be >= 1");
    if (bundle.order < m) throw DomainError("log_deriv_bell: bundle order too small");
    if (bundle.values[0].is_zero()) throw DomainError("log_deriv_bell: zeta vanishes at the point");

    long digits = static_cast<long>(bundle.values[0].precision());
    PrecisionScope scope(digits);
    // zeta^(j+1) = sum_{i<=j} C(j,i) g^(i) zeta^(j-i), solved forward for g^(j)
    std::vector<Complex> g;
    g.reserve(static_cast<size_t>(m));
    for (long j = 0; j < m; ++j) {
        Complex acc = bundle.values[static_cast<size_t>(j + 1)];
        for (long i = 0; i < j; ++i) {
            Real c(binomial(j, i).str());
            acc -= c * g[static_cast<size_t>(i)] * bundle.values[static_cast<size_t>(j - i)];
        }
        g.push_back(acc / bundle.values[0]);
    }
    return realify(g[static_cast<size_t>(m - 1)], digits);
}

namespace {

// RHS of the general-order identity; sign and normalization follow the
// 2^(n-1) (n-1)! convention.
Real rhs_general(long n, const std::optional<SecondaryZetaValue>& sums, long digits) {
    PrecisionScope scope(digits);
    WorkingPrecision wp(digits, 1);
    Real norm = 1;
    for (long i = 2; i < n; ++i) norm *= i;
    norm *= pow(Real(2), n - 1);

    Real two_pow = pow(Real(2), -n);
    if (n % 2 == 1) {
        Real zn = detail::zeta_em_at(Complex(Real(n, static_cast<unsigned>(digits))), digits).re;
        Real ln = beta_odd_closed(n, wp);
        return norm * ((1 - two_pow) * zn + ln);
    }
    Real zn = zeta_even_closed(n, wp);
    Real ln = realify(detail::dirichlet_beta_at(Complex(Real(n, static_cast<unsigned>(digits))), digits),
                      digits);
    Real sign = (n / 2) % 2 == 0 ? Real(1) : Real(-1);
    return norm * (4 - sign * two_pow * 4 * sums->value - ln - (1 - two_pow) * zn);
}

}  // namespace

Real rhs_closed(const IdentityId& id, const std::optional<SecondaryZetaValue>& sums,
                const WorkingPrecision& p) {
    long digits = p.internal_digits();
    if (id.is_even()) {
        if (!sums) throw DomainError("rhs_closed: even identity requires a spectral sum");
        if (sums->k != id.n) throw DomainError("rhs_closed: spectral sum order mismatch");
    } else if (sums) {
        throw DomainError("rhs_closed: odd identity rejects spectral input");
    }
    PrecisionScope scope(digits);
    WorkingPrecision wp(digits, 1);
    Real pi = pi_at(digits);

    if (id.general) return rhs_general(id.n, sums, digits);
    switch (id.n) {
        case 1:
            return pi / 4 + euler_gamma_at(digits) / 2 + (3 * log2_at(digits) + log(pi)) / 2;
        case 2:
            return 8 - pi * pi / 4 - 2 * catalan_at(digits) + 2 * sums->value;
        case 3: {
            Real z3 = detail::zeta_em_at(Complex(Real(3, static_cast<unsigned>(digits))), digits).re;
            return pi * pi * pi / 4 + 7 * z3;
        }
        case 4: {
            Real l4 = realify(detail::dirichlet_beta_at(Complex(Real(4, static_cast<unsigned>(digits))), digits),
                              digits);
            Real pi4 = pi * pi * pi * pi;
            return 192 - pi4 / 2 - 48 * l4 - 12 * sums->value;
        }
        case 5: {
            Real z5 = detail::zeta_em_at(Complex(Real(5, static_cast<unsigned>(digits))), digits).re;
            Real pi5 = pi * pi * pi * pi * pi;
            return 12 * (31 * z5 + 5 * pi5 / 48);
        }
        default:
            throw DomainError("rhs_closed: unknown identity");
    }
}

namespace {

// Multiplier carrying a spectral-sum error bound onto the RHS scale.
Real tail_scale(const IdentityId& id, long digits) {
    PrecisionScope scope(digits);
    if (id.general) {
        Real norm = 1;
        for (long i = 2; i < id.n; ++i) norm *= i;
        return norm * 2;  // 2^(n-1) (n-1)! * 4/2^n = 2 (n-1)!
    }
    return id.n == 2 ? Real(2) : Real(12);
}

}  // namespace

IdentityReport verify_identity(const IdentityId& id, long threshold_digits, long zeros_count,
                               const ZeroCache* cache, const WorkingPrecision& p) {
    long internal = p.internal_digits();
    Real half(Real(1) / 2);

    Real lhs = evaluate_with_escalation(
        [&](long d) {
            DerivativeBundle bundle =
                detail::zeta_derivatives_at(Complex(Real(1, static_cast<unsigned>(d)) / 2), id.n, d, p);
            return log_deriv_bell(bundle, id.n);
        },
        p);

    std::optional<SecondaryZetaValue> sums;
    if (id.is_even()) {
        if (cache == nullptr) throw Error("verify_identity: even identity requires a zero cache");
        sums = secondary_zeta_at_depth(id.n, zeros_count, *cache);
    }
    Real rhs = rhs_closed(id, sums, p);

    IdentityReport report{id, lhs, rhs, abs(lhs - rhs), digits_agreement(lhs, rhs),
                          id.is_even() ? zeros_count : 0,
                          Real(0, static_cast<unsigned>(internal)),
                          p, threshold_digits, 0, false};

    if (id.is_even()) {
        report.tail_error = tail_scale(id, internal) * sums->error_bound;
        Real rel = report.tail_error / std::max(abs(lhs), abs(rhs));
        report.achievable_digits =
            std::max(0L, static_cast<long>(floor(-log10(rel)).convert_to<long>()));
    } else {
        report.achievable_digits = internal - 5;
    }
    report.verdict = report.digits_matched.meets(threshold_digits) &&
                     threshold_digits <= report.achievable_digits;
    return report;
}

std::vector<IdentityReport> verify_all(long digits_odd, long digits_even, long zeros_count,
                                       const ZeroCache* cache, const WorkingPrecision& p) {
    std::vector<IdentityReport> reports;
    for (long n = 1; n <= 5; ++n) {
        IdentityId id = IdentityId::display(n);
        reports.push_back(verify_identity(id, id.is_even() ? digits_even : digits_odd,
                                          zeros_count, cache, p));
    }
    for (long n : {6L, 7L}) {
        IdentityId id = IdentityId::general_n(n);
        reports.push_back(verify_identity(id, id.is_even() ? digits_even : digits_odd,
                                          zeros_count, cache, p));
    }
    return reports;
}

std::string report_to_json(const IdentityReport& report) {
    long digits = report.precision.internal_digits();
    auto num = [&](const Real& x) { return to_decimal_string(x, digits); };

    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["id"] = report.id.str();
    j["lhs"] = num(report.lhs);
    j["rhs"] = num(report.rhs);
    j["abs_diff"] = num(report.abs_diff);
    if (report.digits_matched.all_at_precision)
        j["digits_matched"] = "all-at-precision";
    else
        j["digits_matched"] = report.digits_matched.digits;
    j["zeros_used"] = report.zeros_used;
    j["tail_error"] = num(report.tail_error);
    j["precision"] = {{"requested_digits", report.precision.requested_digits},
                      {"guard_digits", report.precision.guard_digits},
                      {"max_escalations", report.precision.max_escalations}};
    j["threshold_digits"] = report.threshold_digits;
    j["achievable_digits"] = report.achievable_digits;
    j["verdict"] = report.verdict ? "pass" : "fail";
    return j.dump();
}

IdentityReport report_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.at("schema").get<long>() != 1) throw Error("report_from_json: unknown schema");
    WorkingPrecision p(j.at("precision").at("requested_digits").get<long>(),
                       j.at("precision").at("guard_digits").get<long>(),
                       j.at("precision").at("max_escalations").get<long>());
    long digits = p.internal_digits();
    auto num = [&](const char* key) {
        return real_from_string(j.at(key).get<std::string>(), digits + 8);
    };

    IdentityReport report{IdentityId::parse(j.at("id").get<std::string>()),
                          num("lhs"),
                          num("rhs"),
                          num("abs_diff"),
                          {},
                          j.at("zeros_used").get<long>(),
                          num("tail_error"),
                          p,
                          j.at("threshold_digits").get<long>(),
                          j.at("achievable_digits").get<long>(),
                          j.at("verdict").get<std::string>() == "pass"};
    if (j.at("digits_matched").is_string())
        report.digits_matched = {true, p.internal_digits()};
    else
        report.digits_matched = {false, j.at("digits_matched").get<long>()};
    return report;
}

}  // namespace zetamill
