#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/oracles.hpp"
#include "zetamill/constants.hpp"
#include "zetamill/gamma.hpp"
#include "zetamill/identities.hpp"
#include "zetamill/zeta.hpp"

using namespace zetamill;

TEST_CASE("zeta at the pinned points") {
    WorkingPrecision p(40);
    PrecisionScope scope(60);
    Real z2 = zeta(Complex(Real(2)), p).re;
    CHECK(digits_agreement(z2, Real(pi_at(60) * pi_at(60) / 6)).meets(40));

    Real z0 = zeta(Complex(Real(0)), p).re;
    CHECK(digits_agreement(z0, Real(Real(-1) / 2)).meets(40));

    CHECK_THROWS_AS(zeta(Complex(Real(1)), p), DomainError);
}

TEST_CASE("zeta(1/2): two Euler-Maclaurin truncation orders agree") {
    long d = 40;
    Complex s(Real(1, 60u) / 2);
    Complex a = detail::zeta_em_at(s, d, 64);
    Complex b = detail::zeta_em_at(s, d, 160);
    CHECK(digits_agreement(a, b).meets(40));
    // and the completed-zeta consistency: xi(1/2) = -(1/8) pi^(-1/4) Gamma(1/4) zeta(1/2)
    WorkingPrecision p(40);
    PrecisionScope scope(60);
    Real lhs = xi(Complex(Real(1) / 2), p).re;
    Real gamma_q = exp(log_gamma(Complex(Real(1) / 4), p).re);
    Real rhs = -pow(pi_at(60), Real(-1) / 4) * gamma_q * a.re / 8;
    CHECK(digits_agreement(lhs, rhs).meets(38));
}

TEST_CASE("derivative bundle: order zero reduces to zeta") {
    WorkingPrecision p(30);
    Complex s{Real(1) / 2, Real(3)};
    DerivativeBundle b = zeta_derivatives(s, 0, p);
    CHECK(b.values.size() == 1);
    CHECK(digits_agreement(b.values[0], zeta(s, p)).meets(30));
}

TEST_CASE("zeta'(1/2)/zeta(1/2) reproduces the closed constant") {
    WorkingPrecision p(45);
    PrecisionScope scope(70);
    DerivativeBundle b = zeta_derivatives(Complex(Real(1) / 2), 1, p);
    Real ratio = (b.values[1] / b.values[0]).re;
    Real pi = pi_at(70);
    Real expected = pi / 4 + euler_gamma_at(70) / 2 + (3 * log2_at(70) + log(pi)) / 2;
    CHECK(digits_agreement(ratio, expected).meets(45));
}

TEST_CASE("zeta'(2) against the differentiated Dirichlet series") {
    WorkingPrecision p(30);
    DerivativeBundle b = zeta_derivatives(Complex(Real(2)), 1, p);
    Real oracle = oracles::zeta_prime_2_series(30);
    CHECK(digits_agreement(b.values[1].re, oracle).meets(25));
}

TEST_CASE("bundle values at a real point are real to working precision") {
    WorkingPrecision p(30);
    DerivativeBundle b = zeta_derivatives(Complex(Real(1) / 2), 5, p);
    CHECK(b.values.size() == 6);
    for (const auto& v : b.values) CHECK(abs(v.im) <= pow(Real(10), -40) * (1 + abs(v.re)));
}

TEST_CASE("functional equation residual vanishes") {
    WorkingPrecision p(30);
    long d = p.internal_digits();
    PrecisionScope scope(d);
    for (auto [re, im] : {std::pair<double, double>{0.3, 2.0}, {0.7, 5.0}}) {
        Complex s{Real(re), Real(im)};
        Complex lhs = zeta(s, p);
        Complex one_minus(Real(1) - s.re, -s.im);
        Complex chi = pow(Real(2), s) * pow(pi_at(d), s - Complex(Real(1))) *
                      sin(s * (pi_at(d) / 2)) * exp(log_gamma(one_minus, p)) *
                      zeta(one_minus, p);
        CHECK(digits_agreement(lhs, chi).meets(28));
    }
}

TEST_CASE("conjugation symmetry for zeta and its derivatives") {
    WorkingPrecision p(25);
    Complex s{Real("0.6"), Real("7.3")};
    DerivativeBundle b = zeta_derivatives(s, 3, p);
    DerivativeBundle bc = zeta_derivatives(conj(s), 3, p);
    for (size_t k = 0; k < b.values.size(); ++k)
        CHECK(digits_agreement(bc.values[k], conj(b.values[k])).meets(23));
}

TEST_CASE("alternating zeta cross-check at 1/2 and 2") {
    WorkingPrecision p(30);
    for (double sv : {0.5, 2.0}) {
        Real s(sv);
        Real eta = oracles::cvz_alternating(
            [&](long n) { return pow(Real(n + 1), -s); }, 40);
        Real lhs = (1 - pow(Real(2), 1 - s)) * zeta(Complex(s), p).re;
        CHECK(digits_agreement(lhs, eta).meets(30));
    }
}

TEST_CASE("derivative consistency with a central finite difference") {
    // h = 10^(-d/3) recovers about d/3 digits of zeta'
    long d = 30;
    WorkingPrecision p(d);
    PrecisionScope scope(2 * d);
    Real h = pow(Real(10), -(d / 3));
    for (double sv : {0.5, 3.0}) {
        Complex s(Real(sv));
        DerivativeBundle b = zeta_derivatives(s, 1, p);
        WorkingPrecision fine(2 * d, 15);
        Real plus = zeta(Complex(s.re + h), fine).re;
        Real minus = zeta(Complex(s.re - h), fine).re;
        Real fd = (plus - minus) / (2 * h);
        CHECK(digits_agreement(b.values[1].re, fd).meets(d / 3));
    }
}

TEST_CASE("dirichlet beta at the pinned points") {
    WorkingPrecision p(40);
    PrecisionScope scope(60);
    CHECK(digits_agreement(dirichlet_beta(Complex(Real(2)), p).re, catalan_at(60)).meets(40));
    Real pi = pi_at(60);
    CHECK(digits_agreement(dirichlet_beta(Complex(Real(3)), p).re, Real(pi * pi * pi / 32))
              .meets(40));
    // Leibniz with acceleration
    Real leibniz = oracles::cvz_alternating([](long n) { return 1 / Real(2 * n + 1); }, 50);
    CHECK(digits_agreement(dirichlet_beta(Complex(Real(1)), p).re, leibniz).meets(40));
    CHECK(digits_agreement(leibniz, Real(pi / 4)).meets(45));
}

TEST_CASE("dirichlet beta conjugation") {
    WorkingPrecision p(25);
    Complex s{Real("0.8"), Real("3.7")};
    CHECK(digits_agreement(dirichlet_beta(conj(s), p), conj(dirichlet_beta(s, p))).meets(23));
}

TEST_CASE("beta odd closed forms") {
    WorkingPrecision p(40);
    PrecisionScope scope(60);
    Real pi = pi_at(60);
    CHECK(digits_agreement(beta_odd_closed(3, p), Real(pi * pi * pi / 32)).meets(40));
    Real pi5 = pow(pi, 5);
    CHECK(digits_agreement(beta_odd_closed(5, p), Real(5 * pi5 / 1536)).meets(40));
    for (long m : {3L, 5L, 7L}) {
        CHECK(digits_agreement(beta_odd_closed(m, p), dirichlet_beta(Complex(Real(m)), p).re)
                  .meets(48));
    }
    CHECK_THROWS_AS(beta_odd_closed(4, p), DomainError);
    CHECK_THROWS_AS(beta_odd_closed(1, p), DomainError);
}

TEST_CASE("zeta even closed forms") {
    WorkingPrecision p(40);
    PrecisionScope scope(60);
    Real pi = pi_at(60);
    CHECK(digits_agreement(zeta_even_closed(2, p), Real(pi * pi / 6)).meets(40));
    CHECK(digits_agreement(zeta_even_closed(4, p), Real(pow(pi, 4) / 90)).meets(40));
    for (long m : {2L, 4L, 6L}) {
        CHECK(digits_agreement(zeta_even_closed(m, p), zeta(Complex(Real(m)), p).re).meets(48));
    }
    CHECK_THROWS_AS(zeta_even_closed(3, p), DomainError);
    CHECK_THROWS_AS(zeta_even_closed(0, p), DomainError);
}

TEST_CASE("gram series near 1 and at 100") {
    WorkingPrecision p(25);
    Real near_one = gram_series(Real("1.000001"), p);
    CHECK(abs(near_one - 1) < Real("1e-5"));

    Real r100 = gram_series(Real(100), p);
    CHECK(abs(r100 - 25) < 1);  // pi(100) = 25 by sieve
    Real mobius = oracles::gram_series_mobius(Real(100), 7, 25);
    CHECK(digits_agreement(r100, mobius).meets(10));

    CHECK_THROWS_AS(gram_series(Real(1), p), DomainError);
    CHECK_THROWS_AS(gram_series(Real("0.3"), p), DomainError);
}

TEST_CASE("pi(100) = 25 by direct sieve") {
    std::vector<bool> composite(101, false);
    long count = 0;
    for (long n = 2; n <= 100; ++n) {
        if (!composite[static_cast<size_t>(n)]) {
            ++count;
            for (long m = 2 * n; m <= 100; m += n) composite[static_cast<size_t>(m)] = true;
        }
    }
    CHECK(count == 25);
}
