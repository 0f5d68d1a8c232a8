#include "tsallis/entropy.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

using namespace tsallis;

namespace {

const double kLn2 = std::numbers::ln2;

// Random orders covering the small, Shannon-adjacent and large regimes.
double random_alpha(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> pick(0.0, 1.0);
    const double r = pick(rng);
    if (r < 0.4) return 0.01 + 0.99 * pick(rng);
    if (r < 0.5) return 1.0;
    return 1.0 + 9.0 * pick(rng);
}

ProbPair random_pair(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> pick(0.0, 1.0);
    return ProbPair::from_bias(2.0 * pick(rng) - 1.0);
}

}  // namespace

TEST_CASE("TsallisParam validates the order and flags the Shannon case") {
    CHECK_THROWS_AS(TsallisParam(0.0), std::domain_error);
    CHECK_THROWS_AS(TsallisParam(-1.0), std::domain_error);
    CHECK_THROWS_AS(TsallisParam(std::nan("")), std::domain_error);
    CHECK_THROWS_AS(TsallisParam(std::numeric_limits<double>::infinity()), std::domain_error);

    CHECK(TsallisParam(1.0).is_shannon());
    CHECK_FALSE(TsallisParam(1.0 + 1e-15).is_shannon());
    CHECK_FALSE(TsallisParam(0.999999).is_shannon());

    CHECK(TsallisParam(4.0).is_integer());
    CHECK(TsallisParam(4.0 + 1e-13).is_integer());
    CHECK_FALSE(TsallisParam(4.0 + 1e-9).is_integer());
    CHECK(TsallisParam(7.0).as_integer() == 7);
}

TEST_CASE("ProbPair clamps rounding excursions and rejects real violations") {
    const ProbPair p = ProbPair::make(1.0 + 5e-13, -5e-13);
    CHECK(p.plus() == 1.0);
    CHECK(p.minus() == 0.0);

    CHECK_THROWS_AS(ProbPair::make(0.6, 0.6), std::domain_error);
    CHECK_THROWS_AS(ProbPair::make(1.0 + 1e-10, -1e-10), std::domain_error);
    CHECK_THROWS_AS(ProbPair::make(std::nan(""), 0.5), std::domain_error);
    CHECK_THROWS_AS(ProbPair::from_bias(1.5), std::domain_error);

    const ProbPair q = ProbPair::from_bias(0.2);
    CHECK(q.plus() == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(q.swapped().plus() == q.minus());
}

TEST_CASE("alpha_log") {
    for (double a : {0.1, 0.5, 1.0, 2.0, 7.3}) {
        CHECK(alpha_log(1.0, TsallisParam(a)) == 0.0);
    }
    CHECK(alpha_log(2.0, TsallisParam(1.0)) == doctest::Approx(kLn2).epsilon(1e-16));

    // Frozen from the extended-precision oracle: (2^-1 - 1) / (-1).
    const long double frozen = oracle::alpha_log(2.0L, 2.0L);
    CHECK(std::abs(frozen - 0.5L) < 1e-18L);
    CHECK(std::abs(alpha_log(2.0, TsallisParam(2.0)) - 0.5) <= 1e-15);

    CHECK_THROWS_AS(alpha_log(0.0, TsallisParam(2.0)), std::domain_error);
    CHECK_THROWS_AS(alpha_log(-1.0, TsallisParam(1.0)), std::domain_error);
}

TEST_CASE("h_alpha endpoints, Shannon branch and domain") {
    for (double a : {0.05, 0.5, 1.0, 2.0, 3.5, 10.0}) {
        CHECK(h_alpha(0.0, TsallisParam(a)) == 0.0);
        CHECK(h_alpha(1.0, TsallisParam(a)) == 0.0);
    }
    CHECK(h_alpha(0.5, TsallisParam(1.0)) == doctest::Approx(0.5 * kLn2).epsilon(1e-16));

    const long double frozen = oracle::h(0.5L, 2.0L);
    CHECK(std::abs(frozen - 0.25L) < 1e-18L);
    CHECK(std::abs(h_alpha(0.5, TsallisParam(2.0)) - 0.25) <= 1e-15);

    CHECK_THROWS_AS(h_alpha(-1e-3, TsallisParam(2.0)), std::domain_error);
    CHECK_THROWS_AS(h_alpha(1.001, TsallisParam(0.5)), std::domain_error);
}

TEST_CASE("h_alpha agrees with the extended-precision oracle") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 5000; ++i) {
        const double a = random_alpha(rng);
        if (std::abs(a - 1.0) < 1e-3 && a != 1.0) continue;  // oracle itself cancels there
        const double u = unit(rng);
        const long double ref = oracle::h(u, a);
        CHECK(std::abs(h_alpha(u, TsallisParam(a)) - ref) <= 1e-14L * (1.0L + std::abs(ref)));
    }
}

TEST_CASE("tsallis_entropy examples") {
    for (double a : {0.3, 1.0, 2.0, 5.5}) {
        const TsallisParam alpha(a);
        CHECK(tsallis_entropy(ProbPair::make(1.0, 0.0), alpha) == 0.0);
        CHECK(tsallis_entropy(ProbPair::make(0.5, 0.5), alpha) ==
              doctest::Approx(alpha_log(2.0, alpha)).epsilon(1e-15));
    }
    const ProbPair maximizer = ProbPair::from_bias(1.0 / std::numbers::sqrt3);
    CHECK(std::abs(tsallis_entropy(maximizer, TsallisParam(2.0)) - 1.0 / 3.0) <= 1e-15);

    const std::vector<double> uniform4(4, 0.25);
    CHECK(tsallis_entropy(uniform4, TsallisParam(2.0)) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(tsallis_entropy(uniform4, TsallisParam(1.0)) ==
          doctest::Approx(2.0 * kLn2).epsilon(1e-15));
}

TEST_CASE("phi examples") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        CHECK(phi(random_pair(rng), TsallisParam(1.0)) == doctest::Approx(1.0).epsilon(1e-15));
    }
    CHECK(phi(ProbPair::make(0.5, 0.5), TsallisParam(2.0)) == 0.5);
    CHECK(oracle::phi(0.5L, 2.0L) == 0.5L);
    for (double a : {0.2, 1.0, 3.0}) {
        CHECK(phi(ProbPair::make(1.0, 0.0), TsallisParam(a)) == 1.0);
    }
}

TEST_CASE("property: 0 <= H <= ln_alpha(2)") {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 20000; ++i) {
        const TsallisParam alpha(random_alpha(rng));
        const double h = tsallis_entropy(random_pair(rng), alpha);
        REQUIRE(h >= 0.0);
        REQUIRE(h <= alpha_log(2.0, alpha) + 1e-15);
    }
}

TEST_CASE("property: entropy is concave in the distribution") {
    std::mt19937_64 rng(202);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 20000; ++i) {
        const TsallisParam alpha(random_alpha(rng));
        const ProbPair p = random_pair(rng);
        const ProbPair q = random_pair(rng);
        const double lam = unit(rng);
        const ProbPair mix = ProbPair::make(lam * p.plus() + (1 - lam) * q.plus(),
                                            lam * p.minus() + (1 - lam) * q.minus());
        REQUIRE(tsallis_entropy(mix, alpha) >=
                lam * tsallis_entropy(p, alpha) + (1 - lam) * tsallis_entropy(q, alpha) - 1e-12);
    }
}

TEST_CASE("property: Shannon continuity") {
    std::mt19937_64 rng(303);
    std::uniform_real_distribution<double> comp(1e-3, 1.0 - 1e-3);
    std::uniform_real_distribution<double> offset(-1e-8, 1e-8);
    for (int i = 0; i < 10000; ++i) {
        const double p = comp(rng);
        const ProbPair d = ProbPair::make(p, 1.0 - p);
        const double a = 1.0 + offset(rng);
        REQUIRE(std::abs(tsallis_entropy(d, TsallisParam(a)) - tsallis_entropy(d, TsallisParam(1.0))) <=
                1e-6);
    }
}

TEST_CASE("property: phi is convex and nonincreasing in alpha") {
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> comp(1e-6, 1.0 - 1e-6);
    std::uniform_real_distribution<double> order(0.01, 12.0);
    for (int i = 0; i < 20000; ++i) {
        const double p = comp(rng);
        const ProbPair d = ProbPair::make(p, 1.0 - p);
        double a1 = order(rng);
        double a2 = order(rng);
        if (a1 > a2) std::swap(a1, a2);
        if (a1 == a2) continue;
        const double mid = phi(d, TsallisParam(0.5 * (a1 + a2)));
        const double f1 = phi(d, TsallisParam(a1));
        const double f2 = phi(d, TsallisParam(a2));
        REQUIRE(mid <= 0.5 * (f1 + f2) + 1e-12);
        REQUIRE(f1 >= f2);
    }
}
