#pragma once

// Analytic bounds on the sum of Tsallis entropies of the three Pauli
// measurements, plus the series kernels used to prove monotonicity.

#include "tsallis/entropy.hpp"

#include <optional>
#include <stdexcept>

namespace tsallis {

/// Raised when a quantity has no proven value for the requested order.
class unsupported_range : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Kernels switch from series to direct quotient at this argument.
inline constexpr double kSeriesThreshold = 1e-3;

struct LowerBound {
    double value;
    bool tight;
};

struct UpperBound {
    double value;
    bool tight;
    /// Every pure state reaches the bound (alpha = 2, 3).
    bool attained_by_all_pure;
};

struct Band {
    double low;
    double high;
};

struct BoundSet {
    TsallisParam alpha;
    double lower;
    bool lower_is_tight;
    double upper_mixed;
    std::optional<double> upper_pure;
    bool upper_pure_is_tight;
    std::optional<double> h_tilde;
    std::optional<double> r_alpha;
};

/// True for alpha in (0, 1] or integer alpha >= 2: the orders for which both
/// the lower bound and the pure-state upper bound are proven.
bool has_tight_bounds(TsallisParam alpha);

/// State-independent lower bound on H(sx) + H(sy) + H(sz).
///
/// For alpha in (0, 1] and integer alpha >= 2 this is 2 ln_alpha(2) and is
/// attained by Pauli eigenstates. For other alpha > 1 it is the interpolation
/// between the neighbouring integer orders, which is valid but not tight.
LowerBound lower_bound(TsallisParam alpha);

/// Interpolated bound for any alpha > 1, with n = floor(alpha):
/// 2 (1 - 2^(1-n)) / (alpha - 1) + 2^(1-n) (alpha - n) / (alpha - 1).
double interpolated_lower_bound(double alpha);

/// Minimum over pure states of 3 - sum of power sums, for integer n >= 1.
double min_power_deficit(int n);

/// 3 ln_alpha(2), reached by the maximally mixed state.
double upper_bound_mixed(TsallisParam alpha);

/// Entropy of the pair ((1 + 1/sqrt3) / 2, (1 - 1/sqrt3) / 2).
double h_tilde(TsallisParam alpha);

/// 3 h_tilde(alpha) for alpha in (0, 1] or integer alpha >= 2; empty
/// otherwise (no analytic bound is known there).
std::optional<UpperBound> upper_bound_pure(TsallisParam alpha);

/// Band [2/3, R_alpha] for the rescaled average entropy of pure states.
/// Throws unsupported_range outside (0, 1] and integer alpha >= 2.
Band rescaled_band(TsallisParam alpha);

BoundSet bound_set(TsallisParam alpha);

/// f_alpha(u) = ((1-u)^(alpha-1) - (1+u)^(alpha-1)) / ((1-alpha) u), and
/// (1/u) ln((1+u)/(1-u)) at alpha = 1. Requires u in [0, 1), alpha in (0, 1].
double kernel_f(double u, TsallisParam alpha);

/// g_n(u) = ((1+u)^(n-1) - (1-u)^(n-1)) / u for integer n >= 1, u in [0, 1].
double kernel_g(double u, int n);
/// Same, rejecting non-integer orders.
double kernel_g(double u, TsallisParam alpha);

namespace detail {

// Even power series of f_alpha about 0, truncated on relative term size.
double kernel_f_series(double u, double alpha);
double kernel_f_quotient(double u, double alpha);
// Finite binomial polynomial of g_n and the direct quotient.
double kernel_g_polynomial(double u, int n);
double kernel_g_quotient(double u, int n);

}  // namespace detail

}  // namespace tsallis
