#include "tsallis/bounds.hpp"

#include <cmath>
#include <numbers>

namespace tsallis {

namespace {

const double kInvSqrt3 = 1.0 / std::numbers::sqrt3;

}  // namespace

bool has_tight_bounds(TsallisParam alpha) {
    return alpha.alpha() <= 1.0 || alpha.is_integer();
}

double min_power_deficit(int n) {
    if (n < 1) {
        throw std::domain_error("min_power_deficit requires n >= 1");
    }
    return 2.0 * (1.0 - std::exp2(1.0 - n));
}

double interpolated_lower_bound(double alpha) {
    if (!(alpha > 1.0)) {
        throw std::domain_error("interpolated bound requires alpha > 1");
    }
    const double n = std::floor(alpha);
    const double w = std::exp2(1.0 - n);
    return (2.0 * (1.0 - w) + w * (alpha - n)) / (alpha - 1.0);
}

LowerBound lower_bound(TsallisParam alpha) {
    if (has_tight_bounds(alpha)) {
        return {2.0 * alpha_log(2.0, alpha), true};
    }
    return {interpolated_lower_bound(alpha.alpha()), false};
}

double upper_bound_mixed(TsallisParam alpha) {
    return 3.0 * alpha_log(2.0, alpha);
}

double h_tilde(TsallisParam alpha) {
    return tsallis_entropy(ProbPair::from_bias(kInvSqrt3), alpha);
}

std::optional<UpperBound> upper_bound_pure(TsallisParam alpha) {
    if (!has_tight_bounds(alpha)) {
        return std::nullopt;
    }
    const bool constant_sum =
        alpha.is_integer() && (alpha.as_integer() == 2 || alpha.as_integer() == 3);
    return UpperBound{3.0 * h_tilde(alpha), true, constant_sum};
}

Band rescaled_band(TsallisParam alpha) {
    if (!has_tight_bounds(alpha)) {
        throw unsupported_range("rescaled band is proven only for alpha in (0, 1] "
                                "or integer alpha >= 2");
    }
    return {2.0 / 3.0, h_tilde(alpha) / alpha_log(2.0, alpha)};
}

BoundSet bound_set(TsallisParam alpha) {
    const LowerBound lo = lower_bound(alpha);
    BoundSet set{alpha, lo.value, lo.tight, upper_bound_mixed(alpha),
                 std::nullopt, false, std::nullopt, std::nullopt};
    if (const auto up = upper_bound_pure(alpha)) {
        set.upper_pure = up->value;
        set.upper_pure_is_tight = up->tight;
        set.h_tilde = h_tilde(alpha);
        set.r_alpha = rescaled_band(alpha).high;
    }
    return set;
}

namespace detail {

double kernel_f_series(double u, double alpha) {
    // c_0 = 2, c_{k+1} / c_k = (2k+2-alpha)(2k+3-alpha) / ((2k+2)(2k+3)).
    const double u2 = u * u;
    double term = 2.0;
    double sum = term;
    for (int k = 0; k < 200; ++k) {
        const double m = 2.0 * k;
        term *= (m + 2.0 - alpha) * (m + 3.0 - alpha) / ((m + 2.0) * (m + 3.0)) * u2;
        if (term < 1e-17 * sum) {
            break;
        }
        sum += term;
    }
    return sum;
}

double kernel_f_quotient(double u, double alpha) {
    if (alpha == 1.0) {
        return (std::log1p(u) - std::log1p(-u)) / u;
    }
    const double a = alpha - 1.0;
    const double num = std::expm1(a * std::log1p(-u)) - std::expm1(a * std::log1p(u));
    return num / ((1.0 - alpha) * u);
}

double kernel_g_polynomial(double u, int n) {
    const double u2 = u * u;
    double sum = 0.0;
    double power = 1.0;
    for (int k = 0; k <= n / 2 - 1; ++k) {
        // C(n-1, 2k+1) built directly; exact for the sizes of interest.
        double binom = 1.0;
        const int r = 2 * k + 1;
        for (int j = 1; j <= r; ++j) {
            binom = binom * (n - 1 - r + j) / j;
        }
        sum += 2.0 * binom * power;
        power *= u2;
    }
    return sum;
}

double kernel_g_quotient(double u, int n) {
    return (std::pow(1.0 + u, n - 1) - std::pow(1.0 - u, n - 1)) / u;
}

}  // namespace detail

double kernel_f(double u, TsallisParam alpha) {
    if (!(u >= 0.0 && u < 1.0)) {
        throw std::domain_error("kernel_f requires u in [0, 1)");
    }
    if (alpha.alpha() > 1.0) {
        throw std::domain_error("kernel_f requires alpha in (0, 1]");
    }
    if (u < kSeriesThreshold) {
        return detail::kernel_f_series(u, alpha.alpha());
    }
    return detail::kernel_f_quotient(u, alpha.alpha());
}

double kernel_g(double u, int n) {
    if (!(u >= 0.0 && u <= 1.0)) {
        throw std::domain_error("kernel_g requires u in [0, 1]");
    }
    if (n < 1) {
        throw std::domain_error("kernel_g requires an integer order >= 1");
    }
    // Orders 1..3 collapse to a single constant term.
    if (n <= 3 || u < kSeriesThreshold) {
        return detail::kernel_g_polynomial(u, n);
    }
    return detail::kernel_g_quotient(u, n);
}

double kernel_g(double u, TsallisParam alpha) {
    if (!alpha.is_integer()) {
        throw std::domain_error("kernel_g requires an integer order");
    }
    return kernel_g(u, alpha.as_integer());
}

}  // namespace tsallis
