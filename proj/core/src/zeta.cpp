#include "zetamill/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "zetamill/constants.hpp"
#include "zetamill/rationals.hpp"

namespace zetamill {
namespace detail {

namespace {

struct TermTables {
    std::vector<Real> ln;      // ln(n), index n
    std::vector<Real> rsqrt;   // n^(-1/2), index n
};

// ln/rsqrt tables are hot in the zero scan; rebuild only per digit count.
TermTables& tables_for(long digits) {
    thread_local std::map<long, TermTables> cache;
    return cache[digits];
}

const Real& ln_of(long n, long digits, TermTables& t) {
    while (static_cast<long>(t.ln.size()) <= n) {
        long m = static_cast<long>(t.ln.size());
        PrecisionScope scope(digits);
        t.ln.push_back(m >= 1 ? log(Real(m)) : Real(0));
    }
    return t.ln[static_cast<size_t>(n)];
}

const Real& rsqrt_of(long n, long digits, TermTables& t) {
    while (static_cast<long>(t.rsqrt.size()) <= n) {
        long m = static_cast<long>(t.rsqrt.size());
        PrecisionScope scope(digits);
        t.rsqrt.push_back(m >= 1 ? Real(1 / sqrt(Real(m))) : Real(0));
    }
    return t.rsqrt[static_cast<size_t>(n)];
}

// B_2j / (2j)! at the given digit count, memoized.
const Real& em_coefficient(long j, long digits) {
    thread_local std::map<long, std::vector<Real>> cache;
    auto& row = cache[digits];
    while (static_cast<long>(row.size()) <= j) {
        long jj = static_cast<long>(row.size());
        if (jj == 0) {
            row.push_back(Real(1, static_cast<unsigned>(digits)));
            continue;
        }
        PrecisionScope scope(digits);
        Real fact = 1;
        for (long i = 2; i <= 2 * jj; ++i) fact *= i;
        row.push_back(bernoulli_real(2 * jj, digits) / fact);
    }
    return row[static_cast<size_t>(j)];
}

void sin_cos(const Real& angle, long digits, Real& s_out, Real& c_out) {
    s_out = Real(0, static_cast<unsigned>(digits));
    c_out = Real(0, static_cast<unsigned>(digits));
    mpfr_sin_cos(s_out.backend().data(), c_out.backend().data(), angle.backend().data(),
                 MPFR_RNDN);
}

long em_cut(long digits, const Real& abs_im) {
    long t = static_cast<long>(ceil(abs_im).convert_to<long>());
    return std::max<long>(16, t + static_cast<long>(0.45 * static_cast<double>(digits)) + 16);
}

// expm1(u)/u with the removable singularity filled in.
Complex expm1_over(const Complex& u, long digits) {
    if (abs(u) < Real(1) / 2) {
        Real eps = pow(Real(10), -digits - 3);
        Complex acc(Real(1, static_cast<unsigned>(digits)));
        Complex term(Real(1, static_cast<unsigned>(digits)));
        for (long i = 2; i <= 64; ++i) {
            term = term * u / Real(i);
            acc += term;
            if (abs(term) < eps) break;
        }
        return acc;
    }
    return expm1(u) / u;
}

}  // namespace

Complex zeta_em_at(const Complex& s, long digits, long cut_override) {
    if (s.re == 1 && s.im == 0) throw DomainError("zeta: pole at s = 1");

    // extra digits absorb the absolute error of t*log(n) at large heights
    long dd = digits + 6;
    Real abs_im = abs(s.im);
    if (abs_im > 1)
        dd += static_cast<long>(std::lround(std::log10(abs_im.convert_to<double>()))) + 1;

    PrecisionScope scope(dd);
    Complex z = at_digits(s, dd);
    Real sigma = z.re, t = z.im;
    bool critical = (sigma == Real(1) / 2) && t != 0;
    bool real_axis = (t == 0);
    Real eps = pow(Real(10), -digits - 3);
    TermTables& tab = tables_for(dd);

    long N = cut_override > 0 ? cut_override : em_cut(digits, abs_im);
    for (long attempt = 0;; ++attempt) {
        // direct block: sum_{m=1}^{N} m^(-s)
        Real acc_re(0, static_cast<unsigned>(dd)), acc_im(0, static_cast<unsigned>(dd));
        Real sn(0), cs(0);
        for (long m = 1; m <= N; ++m) {
            if (real_axis) {
                acc_re += pow(Real(m, static_cast<unsigned>(dd)), -sigma);
                continue;
            }
            const Real& lm = ln_of(m, dd, tab);
            Real mag = critical ? rsqrt_of(m, dd, tab) : Real(exp(-sigma * lm));
            sin_cos(t * lm, dd, sn, cs);
            acc_re += mag * cs;
            acc_im -= mag * sn;
        }
        Complex acc{acc_re, acc_im};

        Real c(N + 1, static_cast<unsigned>(dd));
        Complex c_pow_ms = real_axis ? Complex(pow(c, -sigma))
                                     : [&] {
                                           Real lc = log(c);
                                           sin_cos(t * lc, dd, sn, cs);
                                           Real mag = exp(-sigma * lc);
                                           return Complex{mag * cs, -mag * sn};
                                       }();
        acc += (c_pow_ms * c) / (z - Complex(Real(1)));  // c^(1-s)/(s-1)
        acc += c_pow_ms * (Real(1) / 2);

        // tail: sum_j B_2j/(2j)! (s)_{2j-1} c^(-s-2j+1)
        Real cinv2 = 1 / (c * c);
        Complex poch = z;                    // (s)_{2j-1}
        Complex cpow = c_pow_ms / c;         // c^(-s-2j+1)
        bool converged = false;
        long jmax = 2 * digits + 24;
        Complex prev_term;
        for (long j = 1; j <= jmax; ++j) {
            Complex term = em_coefficient(j, dd) * poch * cpow;
            acc += term;
            Real mag = abs(term);
            if (mag < eps) {
                converged = true;
                break;
            }
            if (j > 2 && mag > abs(prev_term)) break;  // divergence onset: enlarge N
            prev_term = term;
            poch = poch * (z + Complex(Real(2 * j - 1))) * (z + Complex(Real(2 * j)));
            cpow = cpow * cinv2;
        }
        if (converged || cut_override > 0) return at_digits(acc, digits);
        if (attempt >= 4) throw Error("zeta: Euler-Maclaurin failed to converge");
        N *= 2;
    }
}

Complex dirichlet_beta_at(const Complex& s, long digits) {
    long dd = digits + 6;
    Real abs_im = abs(s.im);
    if (abs_im > 1)
        dd += static_cast<long>(std::lround(std::log10(abs_im.convert_to<double>()))) + 1;

    PrecisionScope scope(dd);
    Complex z = at_digits(s, dd);
    Real eps = pow(Real(10), -digits - 3);
    long N = em_cut(digits, abs_im);

    Real quarter = Real(1, static_cast<unsigned>(dd)) / 4;
    Real three_quarter = 3 * quarter;
    auto power = [&](const Real& base, const Complex& expo) {  // base^expo, base > 0
        Real lb = log(base);
        Real mag = exp(expo.re * lb);
        Real sn(0), cs(0);
        sin_cos(expo.im * lb, dd, sn, cs);
        return Complex{mag * cs, mag * sn};
    };

    Complex minus_s = -z;
    Complex acc;
    for (long n = 0; n < N; ++n) {
        acc += power(Real(n) + quarter, minus_s) - power(Real(n) + three_quarter, minus_s);
    }

    Real c1 = Real(N) + quarter, c2 = Real(N) + three_quarter;
    // boundary integral, stable at and near s = 1:
    // [c1^(1-s) - c2^(1-s)]/(s-1) = c1^(1-s) ln(c2/c1) expm1(u)/u, u = (1-s) ln(c2/c1)
    Real lr = log(c2 / c1);
    Complex one_minus_s = Complex(Real(1)) - z;
    Complex u = one_minus_s * lr;
    acc += power(c1, one_minus_s) * lr * expm1_over(u, dd);

    Complex c1_ms = power(c1, minus_s), c2_ms = power(c2, minus_s);
    acc += (c1_ms - c2_ms) * (Real(1) / 2);

    Real c1inv2 = 1 / (c1 * c1), c2inv2 = 1 / (c2 * c2);
    Complex poch = z;
    Complex cpow1 = c1_ms / c1, cpow2 = c2_ms / c2;
    Complex prev_term;
    for (long j = 1; j <= 2 * digits + 24; ++j) {
        Complex term = em_coefficient(j, dd) * poch * (cpow1 - cpow2);
        acc += term;
        Real mag = abs(term);
        if (mag < eps) break;
        if (j > 2 && mag > abs(prev_term)) throw Error("dirichlet_beta: tail failed to converge");
        prev_term = term;
        poch = poch * (z + Complex(Real(2 * j - 1))) * (z + Complex(Real(2 * j)));
        cpow1 = cpow1 * c1inv2;
        cpow2 = cpow2 * c2inv2;
    }

    acc = acc * power(Real(4, static_cast<unsigned>(dd)), minus_s);
    return at_digits(acc, digits);
}

DerivativeBundle zeta_derivatives_at(const Complex& s, long order, long digits,
                                     const WorkingPrecision& p) {
    if (order < 0) throw DomainError("zeta_derivatives: order must be >= 0");
    if (s.re == 1 && s.im == 0) throw DomainError("zeta: pole at s = 1");
    if (order == 0) return {s, 0, {zeta_em_at(s, digits)}, p};

    PrecisionScope scope(digits);
    Complex z = at_digits(s, digits);
    Real dist = abs(z - Complex(Real(1)));
    Real r = std::min(Real(1) / 4, dist / 2);
    if (dist <= r) throw DomainError("contour-contains-pole");

    // Aliasing error of the k-th Taylor coefficient is bounded by
    // max|zeta on the R circle| (r/R)^M; pick M from that bound.
    double ddist = dist.convert_to<double>();
    double dr = r.convert_to<double>();
    double R = std::min(0.95 * ddist, 8.0 * dr);
    double margin = ddist - R;
    double habs = abs(z.im).convert_to<double>();
    double growth = std::max(0.0, 0.5 + R - z.re.convert_to<double>());
    double log10max = growth * std::log10(2.0 + habs + R) + std::max(0.0, -std::log10(margin)) + 1.0;
    double log10fact = std::lgamma(static_cast<double>(order) + 1.0) / std::log(10.0);
    long m_nodes = static_cast<long>(std::ceil(
        (static_cast<double>(digits) + 4.0 + log10max + log10fact) / std::log10(R / dr)));
    m_nodes = std::max<long>(m_nodes, 16);
    m_nodes += m_nodes % 2;

    bool real_point = (z.im == 0);
    Real two_pi = 2 * pi_at(digits);

    std::vector<Complex> f(static_cast<size_t>(m_nodes));
    std::vector<Real> csj(static_cast<size_t>(m_nodes)), snj(static_cast<size_t>(m_nodes));
    for (long j = 0; j < m_nodes; ++j) {
        Real phi = two_pi * j / m_nodes;
        sin_cos(phi, digits, snj[static_cast<size_t>(j)], csj[static_cast<size_t>(j)]);
    }
    long top = real_point ? m_nodes / 2 : m_nodes - 1;
    for (long j = 0; j <= top; ++j) {
        Complex node{z.re + r * csj[static_cast<size_t>(j)], z.im + r * snj[static_cast<size_t>(j)]};
        f[static_cast<size_t>(j)] = zeta_em_at(node, digits);
    }
    if (real_point)
        for (long j = top + 1; j < m_nodes; ++j)
            f[static_cast<size_t>(j)] = conj(f[static_cast<size_t>(m_nodes - j)]);

    DerivativeBundle bundle{at_digits(s, digits), order, {}, p};
    bundle.values.reserve(static_cast<size_t>(order + 1));
    Real rpow(1, static_cast<unsigned>(digits));
    Real kfact = 1;
    for (long k = 0; k <= order; ++k) {
        if (k > 0) {
            rpow *= r;
            kfact *= k;
        }
        Complex sum;
        for (long j = 0; j < m_nodes; ++j) {
            long idx = (j * k) % m_nodes;
            // e^{-i k phi_j} = cos - i sin
            Complex w{csj[static_cast<size_t>(idx)], -snj[static_cast<size_t>(idx)]};
            sum += f[static_cast<size_t>(j)] * w;
        }
        bundle.values.push_back(sum * (kfact / (Real(m_nodes) * rpow)));
    }

    // the k=0 coefficient reproduces zeta(s); use it as a convergence check
    // (absolute scale: near a zero of zeta a relative test would be unfair)
    Complex direct = zeta_em_at(z, digits);
    Real err = abs(bundle.values[0] - direct);
    if (err > pow(Real(10), -(digits - 6)) * std::max(Real(1), abs(direct)))
        throw Error("zeta_derivatives: contour quadrature failed self-check");
    return bundle;
}

Real gram_series_at(const Real& x, long digits) {
    if (x <= 1) throw DomainError("gram_series: x must be > 1");
    PrecisionScope scope(digits);
    Real lx = log(at_digits(x, digits));
    Real eps = pow(Real(10), -digits - 3);

    Real acc = 1;
    Real u = 1;  // (log x)^k / k!
    for (long k = 1;; ++k) {
        u *= lx / k;
        if (u / k < eps && Real(k) > lx) break;
        Complex zk = zeta_em_at(Complex(Real(k + 1, static_cast<unsigned>(digits))), digits);
        acc += u / (k * zk.re);
        if (k > 400 + 8 * digits) throw Error("gram_series: failed to converge");
    }
    return acc;
}

}  // namespace detail

Complex zeta(const Complex& s, const WorkingPrecision& p) {
    return detail::zeta_em_at(s, p.internal_digits());
}

DerivativeBundle zeta_derivatives(const Complex& s, long order, const WorkingPrecision& p) {
    return detail::zeta_derivatives_at(s, order, p.internal_digits(), p);
}

Complex dirichlet_beta(const Complex& s, const WorkingPrecision& p) {
    return detail::dirichlet_beta_at(s, p.internal_digits());
}

Real beta_odd_closed(long odd_argument, const WorkingPrecision& p) {
    if (odd_argument % 2 == 0) throw DomainError("no-closed-form: argument must be odd");
    if (odd_argument < 3) throw DomainError("beta_odd_closed: argument must be >= 3");
    long n = (odd_argument - 1) / 2;
    long digits = p.internal_digits();
    PrecisionScope scope(digits);
    Real half_pi = pi_at(digits) / 2;
    Integer e2n = euler_number(2 * n);
    Integer fact(1);
    for (long i = 2; i <= 2 * n; ++i) fact *= i;
    return pow(half_pi, odd_argument) * Real(Integer(abs(e2n)).str()) / (2 * Real(fact.str()));
}

Real zeta_even_closed(long even_argument, const WorkingPrecision& p) {
    if (even_argument % 2 != 0) throw DomainError("no-closed-form: argument must be even");
    if (even_argument < 2) throw DomainError("zeta_even_closed: argument must be >= 2");
    long n = even_argument / 2;
    long digits = p.internal_digits();
    PrecisionScope scope(digits);
    Real two_pi = 2 * pi_at(digits);
    Rational b = bernoulli(2 * n);
    Integer fact(1);
    for (long i = 2; i <= 2 * n; ++i) fact *= i;
    return pow(two_pi, even_argument) * Real(Integer(abs(numerator(b))).str()) /
           (2 * Real(fact.str()) * Real(denominator(b).str()));
}

Real gram_series(const Real& x, const WorkingPrecision& p) {
    return detail::gram_series_at(x, p.internal_digits());
}

}  // namespace zetamill
