#include "zetamill/zeros.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "zetamill/constants.hpp"
#include "zetamill/gamma.hpp"
#include "zetamill/zeta.hpp"

namespace zetamill {
namespace detail {

namespace {

constexpr long kScanDigits = 12;

Real nan_real() { return std::numeric_limits<Real>::quiet_NaN(); }

// theta'(t) = Re(psi(1/4 + it/2))/2 - log(pi)/2
Real rs_theta_deriv_at(const Real& t, long digits) {
    PrecisionScope scope(digits);
    Real tt = at_digits(t, digits);
    Complex z{Real(1) / 4, tt / 2};
    return detail::digamma_at(z, digits).re / 2 - log(pi_at(digits)) / 2;
}

// Z'(t) = Re[ i e^{i theta} (theta' zeta + zeta') ] at s = 1/2 + it
Real hardy_z_deriv_at(const Real& t, long digits) {
    PrecisionScope scope(digits);
    Real tt = at_digits(t, digits);
    Complex s{Real(1) / 2, tt};
    WorkingPrecision wp(std::max<long>(1, digits - 10), 10);
    DerivativeBundle b = detail::zeta_derivatives_at(s, 1, digits, wp);
    Real theta = rs_theta_at(tt, digits);
    Real tp = rs_theta_deriv_at(tt, digits);
    Complex rot = exp(Complex{Real(0), theta});
    Complex v = Complex{Real(0), Real(1)} * rot * (tp * b.values[0] + b.values[1]);
    return v.re;
}

double theta_double(double t) {
    const double pi = 3.14159265358979323846;
    return t / 2 * std::log(t / (2 * pi)) - t / 2 - pi / 8 + 1 / (48 * t);
}

}  // namespace

Real rs_theta_at(const Real& t, long digits) {
    // theta grows like (t/2) log t; extra digits keep the reported value
    // accurate in absolute terms as well
    long dd = digits + 8;
    double ta = std::abs(t.convert_to<double>());
    if (ta > 1) dd += static_cast<long>(std::log10(ta) * 2) + 2;
    PrecisionScope scope(dd);
    Real tt = at_digits(t, dd);
    Complex z{Real(1) / 4, tt / 2};
    Real theta = log_gamma_at(z, dd).im - tt / 2 * log(pi_at(dd));
    return at_digits(theta, digits);
}

Real hardy_z_at(const Real& t, long digits) {
    long dd = digits + 10;
    for (int attempt = 0;; ++attempt) {
        PrecisionScope scope(dd);
        Real tt = at_digits(t, dd);
        Real theta = rs_theta_at(tt, dd);
        Complex zv = zeta_em_at(Complex{Real(1) / 2, tt}, dd);
        Complex w = exp(Complex{Real(0), theta}) * zv;
        Real bound = pow(Real(10), -digits) * std::max(Real(1), abs(w));
        if (abs(w.im) < bound) return at_digits(w.re, digits);
        if (attempt >= 1)
            throw PrecisionUnattainable("hardy_z: imaginary residue above threshold",
                                        trial_string(w.re), trial_string(w.im));
        dd *= 2;
    }
}

std::vector<ZeroBracket> isolate_zeros_at(const Real& t_max, double step_override) {
    double limit = t_max.convert_to<double>();
    std::vector<ZeroBracket> out;
    for (int refine_pass = 0; refine_pass < 3; ++refine_pass) {
        out.clear();
        double shrink = std::pow(0.5, refine_pass);
        double t = 14.0;
        PrecisionScope scope(kScanDigits + 4);
        Real prev_t(t), prev_z = hardy_z_at(prev_t, kScanDigits);
        while (t < limit) {
            double step = step_override > 0 ? step_override * shrink
                                            : (t < 1000.0 ? 0.05 : 0.03) * shrink;
            t = std::min(t + step, limit);
            Real cur_t(t);
            Real cur_z = hardy_z_at(cur_t, kScanDigits);
            if ((prev_z < 0) != (cur_z < 0)) out.push_back({prev_t, cur_t});
            prev_t = cur_t;
            prev_z = cur_z;
        }

        // count check against theta(T)/pi + 1, keeping T off any bracket
        double check_t = limit;
        auto near_bracket = [&](double x) {
            for (const auto& b : out) {
                double mid = (b.lo.convert_to<double>() + b.hi.convert_to<double>()) / 2;
                if (std::abs(x - mid) < 0.1) return true;
            }
            return false;
        };
        while (near_bracket(check_t)) check_t -= 0.12;
        long counted = 0;
        for (const auto& b : out)
            if ((b.lo.convert_to<double>() + b.hi.convert_to<double>()) / 2 <= check_t) ++counted;
        if (zero_count_check(Real(check_t), counted).passed) return out;
    }
    throw MissedZerosError("possible-missed-zeros");
}

}  // namespace detail

Real rs_theta(const Real& t, const WorkingPrecision& p) {
    return detail::rs_theta_at(t, p.internal_digits());
}

Real hardy_z(const Real& t, const WorkingPrecision& p) {
    return detail::hardy_z_at(t, p.internal_digits());
}

std::vector<ZeroBracket> isolate_zeros(const Real& t_max, const WorkingPrecision&) {
    if (t_max <= 14) throw DomainError("isolate_zeros: t_max must be > 14");
    return detail::isolate_zeros_at(t_max, 0.0);
}

CountCheck zero_count_check(const Real& T, long found) {
    if (T <= 14) throw DomainError("zero_count_check: T must be > 14");
    Real expected = detail::rs_theta_at(T, 20) / pi_at(20) + 1;
    bool passed = abs(Real(found) - expected) <= 2;
    return {passed, expected, found};
}

ZeroRecord refine_zero(const ZeroBracket& bracket, const WorkingPrecision& p) {
    long internal = p.internal_digits();
    PrecisionScope scope(internal + 8);
    Real lo = at_digits(bracket.lo, internal + 8);
    Real hi = at_digits(bracket.hi, internal + 8);
    Real zlo = detail::hardy_z_at(lo, detail::kScanDigits);
    Real zhi = detail::hardy_z_at(hi, detail::kScanDigits);
    if ((zlo < 0) == (zhi < 0)) throw DomainError("refine_zero: bracket has no sign change");
    bool lo_negative = zlo < 0;

    auto bisect_to = [&](Real a, Real b, const Real& width, long digits) {
        while (b - a > width) {
            Real mid = (a + b) / 2;
            Real zm = detail::hardy_z_at(mid, digits);
            if ((zm < 0) == lo_negative)
                a = mid;
            else
                b = mid;
        }
        return std::pair<Real, Real>(a, b);
    };

    auto [a, b] = bisect_to(lo, hi, Real(1) / 1000, detail::kScanDigits);
    Real t = (a + b) / 2;

    // Newton stages with doubling precision; the derivative only needs to
    // track the current error, so it runs about half the stage digits.
    Real tol = pow(Real(10), -(p.requested_digits + 3));
    bool newton_ok = true;
    long stage_digits = 18;
    for (int guard = 0; guard < 40; ++guard) {
        long deriv_digits = stage_digits / 2 + 8;
        Real zp = detail::hardy_z_deriv_at(t, deriv_digits);
        if (zp == 0) {
            newton_ok = false;
            break;
        }
        Real zt = detail::hardy_z_at(t, stage_digits);
        Real step = zt / zp;
        t -= step;
        if (t < lo || t > hi) {
            newton_ok = false;
            break;
        }
        if (abs(step) < tol && stage_digits >= internal) break;
        stage_digits = std::min(stage_digits * 2, internal + 5);
    }
    if (!newton_ok) {
        auto [fa, fb] = bisect_to(a, b, tol, internal);
        t = (fa + fb) / 2;
    }

    Real residual = abs(detail::hardy_z_at(t, internal));
    return {0, at_digits(t, internal), p.requested_digits, residual};
}

namespace {

long count_significant_digits(const std::string& text) {
    size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    long digits = 0;
    bool seen_nonzero = false;
    for (; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '.') continue;
        if (ch == 'e' || ch == 'E') break;
        if (ch < '0' || ch > '9') return -1;
        if (ch != '0') seen_nonzero = true;
        if (seen_nonzero) ++digits;
    }
    return digits;
}

}  // namespace

void cache_store(const ZeroCache& cache, const std::string& destination) {
    if (cache.digits < 1) throw DomainError("cache_store: digits must be >= 1");
    for (size_t i = 1; i < cache.records.size(); ++i) {
        if (!(cache.records[i - 1].ordinate < cache.records[i].ordinate))
            throw DomainError("cache_store: ordinates not strictly increasing");
    }

    std::string tmp = destination + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cache_store: cannot open " + tmp);
        out << "ZCACHE 1 " << cache.digits << "\n";
        for (const auto& rec : cache.records) {
            if (rec.ordinate <= 0) throw DomainError("cache_store: ordinate must be positive");
            out << rec.index << "\t" << to_decimal_string(rec.ordinate, cache.digits) << "\n";
        }
        if (!out) throw Error("cache_store: write failed for " + tmp);
    }
    std::filesystem::rename(tmp, destination);
}

ZeroCache cache_load(const std::string& source) {
    std::ifstream in(source, std::ios::binary);
    if (!in) throw Error("cache_load: cannot open " + source);

    ZeroCache cache;
    std::string line;
    if (!std::getline(in, line)) {
        // an empty file is a valid empty cache
        cache.digits = 0;
        cache.contiguous = true;
        return cache;
    }
    {
        std::istringstream head(line);
        std::string magic;
        long version = 0, digits = 0;
        if (!(head >> magic >> version >> digits) || magic != "ZCACHE" || version != 1 ||
            digits < 1)
            throw CacheParseError("malformed header: '" + line + "'", 1);
        std::string rest;
        if (head >> rest) throw CacheParseError("malformed header: trailing tokens", 1);
        cache.digits = digits;
    }

    long line_no = 1;
    long prev_index = 0;
    Real prev_ordinate(0, static_cast<unsigned>(cache.digits + 8));
    cache.contiguous = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            throw CacheParseError("blank line at line " + std::to_string(line_no), line_no);
        size_t tab = line.find('\t');
        if (tab == std::string::npos)
            throw CacheParseError("missing tab separator at line " + std::to_string(line_no),
                                  line_no);
        std::string index_text = line.substr(0, tab);
        std::string ord_text = line.substr(tab + 1);

        long index = 0;
        try {
            size_t used = 0;
            index = std::stol(index_text, &used);
            if (used != index_text.size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw CacheParseError("bad index '" + index_text + "' at line " +
                                      std::to_string(line_no),
                                  line_no);
        }
        if (index <= prev_index)
            throw CacheParseError("non-monotone index at index " + std::to_string(index), line_no);
        if (index != prev_index + 1) cache.contiguous = false;

        if (count_significant_digits(ord_text) != cache.digits)
            throw CacheParseError("digit-count mismatch at index " + std::to_string(index),
                                  line_no);
        Real ordinate;
        try {
            ordinate = real_from_string(ord_text, cache.digits + 8);
        } catch (const std::exception&) {
            throw CacheParseError("bad ordinate at index " + std::to_string(index), line_no);
        }
        if (!(ordinate > 0))
            throw CacheParseError("non-positive ordinate at index " + std::to_string(index),
                                  line_no);
        if (!cache.records.empty() && !(ordinate > prev_ordinate))
            throw CacheParseError("non-monotone at index " + std::to_string(index), line_no);

        cache.records.push_back({index, ordinate, cache.digits, detail::nan_real()});
        prev_index = index;
        prev_ordinate = ordinate;
    }
    return cache;
}

namespace {

ZeroCache refine_all(const std::vector<ZeroBracket>& brackets, const WorkingPrecision& p) {
    ZeroCache cache;
    cache.digits = p.requested_digits;
    cache.contiguous = true;
    long index = 1;
    for (const auto& bracket : brackets) {
        ZeroRecord rec = refine_zero(bracket, p);
        rec.index = index++;
        cache.records.push_back(std::move(rec));
    }
    return cache;
}

}  // namespace

ZeroCache compute_zeros_upto(const Real& t_max, const WorkingPrecision& p) {
    if (t_max <= 14) throw DomainError("compute_zeros_upto: t_max must be > 14");
    return refine_all(isolate_zeros(t_max, p), p);
}

ZeroCache compute_zeros_count(long count, const WorkingPrecision& p) {
    if (count < 1) throw DomainError("compute_zeros_count: count must be >= 1");
    // invert N(T) ~ theta(T)/pi + 1 for a scan height estimate
    const double pi = 3.14159265358979323846;
    double target = (static_cast<double>(count) - 0.5) * pi;
    double t = std::max(20.0, 2 * pi * count / std::log(static_cast<double>(count) + 2));
    for (int i = 0; i < 60; ++i) {
        double deriv = 0.5 * std::log(t / (2 * pi));
        if (deriv < 1e-3) deriv = 1e-3;
        t -= (detail::theta_double(t) - target) / deriv;
    }
    double scan_to = std::max(t + 2.0, 16.0);

    std::vector<ZeroBracket> brackets = detail::isolate_zeros_at(Real(scan_to), 0.0);
    while (static_cast<long>(brackets.size()) < count) {
        scan_to = scan_to * 1.05 + 10.0;
        brackets = detail::isolate_zeros_at(Real(scan_to), 0.0);
    }
    brackets.resize(static_cast<size_t>(count));
    return refine_all(brackets, p);
}

}  // namespace zetamill
