#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "support/oracles.hpp"
#include "zetamill/constants.hpp"
#include "zetamill/identities.hpp"
#include "zetamill/secondary.hpp"

using namespace zetamill;

namespace {

// 1000 zeros at 30 digits, prepared once by the warm_cache fixture.
const ZeroCache& shared_cache() {
    static ZeroCache cache = [] {
        const char* path = std::getenv("ZETAMILL_TEST_CACHE");
        REQUIRE(path != nullptr);
        ZeroCache c = cache_load(path);
        REQUIRE(c.records.size() >= 1000);
        REQUIRE(c.digits == 30);
        return c;
    }();
    return cache;
}

}  // namespace

TEST_CASE("partial sums at depth one") {
    const ZeroCache& cache = shared_cache();
    PrecisionScope scope(40);
    Real a1 = at_digits(cache.records[0].ordinate, 40);
    Real k2 = partial_power_sum(2, 1, cache);
    CHECK(digits_agreement(k2, Real(1 / (a1 * a1))).meets(28));
    CHECK(to_decimal_string(k2, 4) == "0.005006");

    Real k4 = partial_power_sum(4, 1, cache);
    CHECK(digits_agreement(k4, Real(k2 * k2)).meets(26));
}

TEST_CASE("partial sum at depth 1000: frozen regression and order independence") {
    const ZeroCache& cache = shared_cache();
    Real partial = partial_power_sum(2, 1000, cache);
    CHECK(to_decimal_string(partial, 20) == "0.022380505402940744499");

    // independent summation in the opposite order
    PrecisionScope scope(40);
    Real forward(0, 40u);
    for (long n = 1; n <= 1000; ++n) {
        Real a = at_digits(cache.records[static_cast<size_t>(n - 1)].ordinate, 40);
        forward += 1 / (a * a);
    }
    CHECK(digits_agreement(partial, forward).meets(20));
}

TEST_CASE("partial sum input validation") {
    const ZeroCache& cache = shared_cache();
    CHECK_THROWS_AS(partial_power_sum(3, 10, cache), DomainError);
    CHECK_THROWS_AS(partial_power_sum(0, 10, cache), DomainError);
    CHECK_THROWS_WITH_AS(partial_power_sum(2, 5000, cache),
                         doctest::Contains("need M=5000"), Error);
}

TEST_CASE("tail estimate formula values") {
    PrecisionScope scope(30);
    auto [tail, err] = tail_estimate(2, Real(1000));
    Real two_pi = 2 * pi_at(30);
    Real direct = (log(Real(1000) / two_pi) + 1) / (two_pi * 1000);
    CHECK(digits_agreement(tail, direct).meets(20));
    CHECK(err < tail);
    CHECK_THROWS_AS(tail_estimate(2, Real(50)), DomainError);

    // k = 4 tail decreases toward zero
    Real prev = tail_estimate(4, Real(200)).first;
    for (double t : {500.0, 2000.0, 10000.0, 100000.0}) {
        Real cur = tail_estimate(4, Real(t)).first;
        CHECK(cur < prev);
        CHECK(cur > 0);
        prev = cur;
    }
}

TEST_CASE("tail model matches the cached zeros in (T, 2T]") {
    const ZeroCache& cache = shared_cache();
    PrecisionScope scope(40);
    Real T(600), T2(1200);
    Real windowed(0, 40u);
    for (const auto& rec : cache.records) {
        if (rec.ordinate > T && rec.ordinate <= T2) {
            Real a = at_digits(rec.ordinate, 40);
            windowed += 1 / (a * a);
        }
    }
    auto [tail_lo, err_lo] = tail_estimate(2, T);
    auto [tail_hi, err_hi] = tail_estimate(2, T2);
    CHECK(abs(windowed - (tail_lo - tail_hi)) < err_lo);
}

TEST_CASE("secondary zeta for k = 2 and the identity cross-oracle") {
    const ZeroCache& cache = shared_cache();
    SecondaryZetaValue v = secondary_zeta(2, Real("1e-4"), cache);
    CHECK(v.zeros_used == 1000);
    CHECK(abs(v.value - Real("0.0231049931")) < v.error_bound + Real("1e-9"));

    // the second log-derivative identity rearranged for the spectral sum,
    // computed purely from the zeta engine and the constants
    WorkingPrecision p(40);
    PrecisionScope scope(55);
    DerivativeBundle b = zeta_derivatives(Complex(Real(1) / 2), 2, p);
    Real g1 = log_deriv_bell(b, 2);
    Real pi = pi_at(55);
    Real z2_from_identity = (g1 - 8 + pi * pi / 4 + 2 * catalan_at(55)) / 2;
    CHECK(abs(v.value - z2_from_identity) < v.error_bound);
    CHECK(abs(v.value - z2_from_identity) < Real("1e-5"));
}

TEST_CASE("secondary zeta for k = 4 against the fourth identity") {
    const ZeroCache& cache = shared_cache();
    SecondaryZetaValue v = secondary_zeta(4, Real("1e-8"), cache);
    CHECK(v.value > Real("3e-5"));
    CHECK(v.value < Real("4e-5"));

    WorkingPrecision p(40);
    PrecisionScope scope(55);
    DerivativeBundle b = zeta_derivatives(Complex(Real(1) / 2), 4, p);
    Real g3 = log_deriv_bell(b, 4);
    Real pi = pi_at(55);
    Real l4 = dirichlet_beta(Complex(Real(4)), p).re;
    Real z4_from_identity = (192 - pow(pi, 4) / 2 - 48 * l4 - g3) / 12;
    CHECK(abs(v.value - z4_from_identity) < v.error_bound);
}

TEST_CASE("unreachable target asks for more zeros") {
    const ZeroCache& cache = shared_cache();
    try {
        secondary_zeta(2, Real("1e-30"), cache);
        CHECK(false);
    } catch (const NeedMoreZeros& e) {
        CHECK(e.estimated_count > 1000);
    }
}

TEST_CASE("positivity and monotone refinement") {
    const ZeroCache& cache = shared_cache();
    SecondaryZetaValue shallow = secondary_zeta_at_depth(2, 500, cache);
    SecondaryZetaValue deep = secondary_zeta_at_depth(2, 1000, cache);
    for (const auto* v : {&shallow, &deep}) {
        CHECK(v->partial > 0);
        CHECK(v->tail > 0);
        CHECK(v->value > v->partial);
        CHECK(v->error_bound < v->tail);
    }
    CHECK(abs(deep.value - shallow.value) < shallow.error_bound);
}

TEST_CASE("scaling sanity between consecutive even orders") {
    const ZeroCache& cache = shared_cache();
    PrecisionScope scope(40);
    Real a1 = at_digits(cache.records[0].ordinate, 40);
    for (long k : {2L, 4L, 6L}) {
        SecondaryZetaValue lo = secondary_zeta_at_depth(k, 1000, cache);
        SecondaryZetaValue hi = secondary_zeta_at_depth(k + 2, 1000, cache);
        CHECK(hi.value < lo.value / (a1 * a1));
    }
}
