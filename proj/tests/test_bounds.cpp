#include "tsallis/bounds.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <random>

using namespace tsallis;

namespace {

const double kLn2 = std::numbers::ln2;

// R_alpha for alpha = 4..10 and 1, frozen from the long double oracle
// h((1 + 1/sqrt3) / 2) / ln_alpha(2).
long double oracle_r(long double a) {
    const long double p = 0.5L * (1.0L + 1.0L / std::sqrt(3.0L));
    return oracle::binary_entropy(p, a) / oracle::alpha_log(2.0L, a);
}

}  // namespace

TEST_CASE("lower_bound examples") {
    const LowerBound one = lower_bound(TsallisParam(1.0));
    CHECK(one.tight);
    CHECK(std::abs(one.value - 2.0 * kLn2) <= 1e-15);

    const LowerBound two = lower_bound(TsallisParam(2.0));
    CHECK(two.tight);
    CHECK(two.value == 1.0);

    const LowerBound half = lower_bound(TsallisParam(0.5));
    CHECK(half.tight);
    CHECK(std::abs(half.value - 4.0 * (std::numbers::sqrt2 - 1.0)) <= 1e-15);

    const LowerBound frac = lower_bound(TsallisParam(2.5));
    CHECK_FALSE(frac.tight);
    CHECK(std::abs(frac.value - 5.0 / 6.0) <= 1e-15);
}

TEST_CASE("tight lower bound equals 2 ln_alpha(2) against the oracle") {
    for (double a : {0.01, 0.25, 0.5, 0.75, 1.0, 2.0, 3.0, 4.0, 5.0, 7.0, 10.0, 25.0}) {
        const long double ref = 2.0L * oracle::alpha_log(2.0L, a);
        CHECK(std::abs(lower_bound(TsallisParam(a)).value - ref) <= 1e-15L);
    }
}

TEST_CASE("interpolated bound meets the integer values and is continuous") {
    for (int n = 2; n <= 10; ++n) {
        const double tight = 2.0 * alpha_log(2.0, TsallisParam(n));
        CHECK(std::abs(interpolated_lower_bound(n) - tight) <= 1e-15);
        CHECK(std::abs(min_power_deficit(n) / (n - 1) - tight) <= 1e-15);
        // Approaching n + 1 from below lands on the next integer value.
        const double next = 2.0 * alpha_log(2.0, TsallisParam(n + 1));
        CHECK(std::abs(interpolated_lower_bound(n + 1 - 1e-9) - next) <= 1e-8);
    }
    CHECK(std::abs(interpolated_lower_bound(1.0 + 1e-6) - 1.0) <= 1e-5);
    CHECK_THROWS_AS(interpolated_lower_bound(1.0), std::domain_error);
    CHECK_THROWS_AS(min_power_deficit(0), std::domain_error);
}

TEST_CASE("interpolated bound never exceeds the Tsallis lower curve it interpolates") {
    // For alpha > 1 the interpolation is a valid bound, hence no larger than
    // 2 ln_alpha(2), which is attained by eigenstates for every alpha.
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> order(1.0 + 1e-9, 10.0);
    for (int i = 0; i < 10000; ++i) {
        const double a = order(rng);
        REQUIRE(interpolated_lower_bound(a) <= 2.0 * alpha_log(2.0, TsallisParam(a)) + 1e-12);
    }
}

TEST_CASE("upper bounds") {
    CHECK(std::abs(upper_bound_mixed(TsallisParam(1.0)) - 3.0 * kLn2) <= 1e-15);
    CHECK(std::abs(upper_bound_mixed(TsallisParam(2.0)) - 1.5) <= 1e-15);

    CHECK(std::abs(h_tilde(TsallisParam(2.0)) - 1.0 / 3.0) <= 1e-15);
    CHECK(std::abs(h_tilde(TsallisParam(3.0)) - 0.25) <= 1e-15);
    CHECK(std::abs(h_tilde(TsallisParam(1.0)) / kLn2 - 0.744) <= 5e-4);

    const auto two = upper_bound_pure(TsallisParam(2.0));
    REQUIRE(two.has_value());
    CHECK(two->tight);
    CHECK(two->attained_by_all_pure);
    CHECK(std::abs(two->value - 1.0) <= 1e-15);

    const auto three = upper_bound_pure(TsallisParam(3.0));
    REQUIRE(three.has_value());
    CHECK(three->attained_by_all_pure);
    CHECK(std::abs(three->value - 0.75) <= 1e-15);

    const auto four = upper_bound_pure(TsallisParam(4.0));
    REQUIRE(four.has_value());
    CHECK_FALSE(four->attained_by_all_pure);

    CHECK_FALSE(upper_bound_pure(TsallisParam(2.5)).has_value());
    CHECK(upper_bound_pure(TsallisParam(0.3)).has_value());
}

TEST_CASE("rescaled band examples") {
    const std::array<double, 7> expected{0.69841, 0.74074, 0.78375, 0.82305,
                                         0.85700, 0.88540, 0.90867};
    for (int n = 4; n <= 10; ++n) {
        const Band b = rescaled_band(TsallisParam(n));
        CHECK(b.low == 2.0 / 3.0);
        CHECK(std::abs(b.high - expected[n - 4]) <= 5e-6);
        CHECK(std::abs(b.high - oracle_r(n)) <= 1e-14L);
    }
    const Band shannon = rescaled_band(TsallisParam(1.0));
    CHECK(std::abs(shannon.high - 0.744008) <= 1e-6);
    CHECK(std::abs(shannon.high - oracle_r(1.0L)) <= 1e-14L);

    // alpha = 2, 3: the pure-state sum is constant, so the band collapses.
    CHECK(std::abs(rescaled_band(TsallisParam(2.0)).high - 2.0 / 3.0) <= 1e-15);
    CHECK(std::abs(rescaled_band(TsallisParam(3.0)).high - 2.0 / 3.0) <= 1e-15);

    CHECK_THROWS_AS(rescaled_band(TsallisParam(2.5)), unsupported_range);
    CHECK_THROWS_AS(rescaled_band(TsallisParam(9.99)), std::domain_error);
}

TEST_CASE("property: 2/3 <= R_alpha <= 1 on the supported orders") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> unit(1e-3, 1.0);
    for (int i = 0; i < 2000; ++i) {
        const Band b = rescaled_band(TsallisParam(unit(rng)));
        REQUIRE(b.high >= b.low - 1e-15);
        REQUIRE(b.high <= 1.0);
    }
    for (int n = 2; n <= 40; ++n) {
        const Band b = rescaled_band(TsallisParam(n));
        REQUIRE(b.high >= 2.0 / 3.0 - 1e-15);
        REQUIRE(b.high <= 1.0);
    }
}

TEST_CASE("BoundSet invariants") {
    for (double a : {0.1, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 4.0, 7.5, 10.0}) {
        const BoundSet s = bound_set(TsallisParam(a));
        CHECK(s.lower <= s.upper_mixed);
        CHECK(s.lower_is_tight == has_tight_bounds(TsallisParam(a)));
        CHECK(s.upper_pure.has_value() == s.lower_is_tight);
        if (s.upper_pure) {
            CHECK(s.upper_pure_is_tight);
            CHECK(s.lower <= *s.upper_pure + 1e-15);
            CHECK(*s.upper_pure <= s.upper_mixed);
            REQUIRE(s.h_tilde.has_value());
            REQUIRE(s.r_alpha.has_value());
            CHECK(std::abs(*s.upper_pure - 3.0 * *s.h_tilde) <= 1e-15);
        } else {
            CHECK_FALSE(s.h_tilde.has_value());
            CHECK_FALSE(s.r_alpha.has_value());
        }
    }
}

TEST_CASE("kernel_f at zero and against the gamma-function series") {
    // Leading coefficient 2 / (1 - alpha) * binom(1 - alpha, 1) is 2 for every alpha.
    for (double a : {0.05, 0.3, 0.5, 0.9, 1.0}) {
        CHECK(kernel_f(0.0, TsallisParam(a)) == 2.0);
    }
    for (double a : {0.1, 0.5, 0.9}) {
        CHECK(std::abs(oracle::kernel_f_coefficient(0, a) - 2.0L) <= 1e-15L);
        for (double u : {1e-5, 5e-4, 9.9e-4, 0.01, 0.3, 0.5}) {
            const long double ref = oracle::kernel_f_series(u, a);
            CHECK(std::abs(kernel_f(u, TsallisParam(a)) - ref) <= 1e-13L * ref);
        }
        for (double u : {0.7, 0.9, 0.99}) {
            const long double ref = oracle::kernel_f_quotient(u, a);
            CHECK(std::abs(kernel_f(u, TsallisParam(a)) - ref) <= 1e-13L * ref);
        }
    }
    CHECK(std::abs(kernel_f(0.5, TsallisParam(1.0)) - 2.0 * std::log(3.0)) <= 1e-14);

    CHECK_THROWS_AS(kernel_f(1.0, TsallisParam(0.5)), std::domain_error);
    CHECK_THROWS_AS(kernel_f(-0.1, TsallisParam(0.5)), std::domain_error);
    CHECK_THROWS_AS(kernel_f(0.5, TsallisParam(1.5)), std::domain_error);
}

TEST_CASE("kernel_f series and quotient agree across the switch") {
    for (double a : {0.05, 0.25, 0.5, 0.75, 0.99, 1.0}) {
        for (int i = 0; i <= 100; ++i) {
            const double u = 5e-4 + i * 1.5e-5;
            const double s = detail::kernel_f_series(u, a);
            const double q = detail::kernel_f_quotient(u, a);
            REQUIRE(std::abs(s - q) <= 1e-11);
        }
        const double below = std::nextafter(kSeriesThreshold, 0.0);
        CHECK(std::abs(kernel_f(below, TsallisParam(a)) - kernel_f(kSeriesThreshold, TsallisParam(a))) <=
              1e-12);
    }
}

TEST_CASE("property: kernel_f is increasing in u") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> order(0.01, 0.999);
    for (int trial = 0; trial < 20; ++trial) {
        const TsallisParam a(trial == 0 ? 1.0 : order(rng));
        double prev = kernel_f(0.0, a);
        for (int i = 1; i <= 999; ++i) {
            const double v = kernel_f(i / 1000.0, a);
            REQUIRE(v > prev);
            prev = v;
        }
    }
}

TEST_CASE("kernel_g constants and examples") {
    for (double u : {0.0, 0.3, 1.0}) {
        CHECK(kernel_g(u, 1) == 0.0);
        CHECK(kernel_g(u, 2) == 2.0);
        CHECK(kernel_g(u, 3) == 4.0);
    }
    CHECK(kernel_g(0.5, 4) == 6.5);
    CHECK(kernel_g(0.0, 4) == 6.0);
    CHECK(kernel_g(1.0, 4) == 8.0);
    CHECK(kernel_g(0.5, TsallisParam(4.0)) == 6.5);

    for (int n = 4; n <= 12; ++n) {
        for (double u : {1e-4, 5e-4, 1e-3, 0.2, 0.5, 0.9, 1.0}) {
            const long double ref = oracle::kernel_g_quotient(u, n);
            CHECK(std::abs(kernel_g(u, n) - ref) <= 1e-12L * ref);
        }
        CHECK(std::abs(detail::kernel_g_polynomial(0.5, n) - detail::kernel_g_quotient(0.5, n)) <=
              1e-12 * detail::kernel_g_polynomial(0.5, n));
    }

    CHECK_THROWS_AS(kernel_g(0.5, 0), std::domain_error);
    CHECK_THROWS_AS(kernel_g(1.5, 4), std::domain_error);
    CHECK_THROWS_AS(kernel_g(0.5, TsallisParam(2.5)), std::domain_error);
}

TEST_CASE("property: kernel_g is strictly increasing for n >= 4") {
    for (int n = 4; n <= 12; ++n) {
        double prev = kernel_g(0.0, n);
        for (int i = 1; i <= 1000; ++i) {
            const double v = kernel_g(i / 1000.0, n);
            REQUIRE(v > prev);
            prev = v;
        }
    }
}
