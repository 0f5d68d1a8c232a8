#pragma once

// Tsallis entropy family for finite distributions.
//
// All functions are pure and thread-safe. The Shannon case (alpha == 1) is
// an explicit branch rather than a limit of the generic formula.

#include <span>
#include <stdexcept>

namespace tsallis {

/// Absolute slack allowed on probability normalization and range.
inline constexpr double kProbTolerance = 1e-12;

/// Entropic order alpha > 0.
class TsallisParam {
public:
    explicit TsallisParam(double alpha);

    double alpha() const noexcept { return alpha_; }
    bool is_shannon() const noexcept { return alpha_ == 1.0; }

    /// True when alpha lies within 1e-12 of an integer.
    bool is_integer() const noexcept;
    /// Nearest integer; meaningful only when is_integer().
    int as_integer() const noexcept;

private:
    double alpha_;
};

/// Binary outcome distribution {p+, p-}.
class ProbPair {
public:
    /// Validates normalization and clamps rounding excursions into [0, 1].
    /// Throws std::domain_error on violations larger than kProbTolerance.
    static ProbPair make(double plus, double minus);

    /// The pair ((1 + b) / 2, (1 - b) / 2) for a bias b in [-1, 1].
    static ProbPair from_bias(double bias);

    double plus() const noexcept { return plus_; }
    double minus() const noexcept { return minus_; }

    /// Pair with outcomes exchanged.
    ProbPair swapped() const noexcept { return ProbPair(minus_, plus_); }

private:
    ProbPair(double plus, double minus) noexcept : plus_(plus), minus_(minus) {}

    double plus_;
    double minus_;
};

/// ln_alpha(u) = (u^(1-alpha) - 1) / (1 - alpha); ln(u) at alpha = 1.
/// Throws std::domain_error for u <= 0.
double alpha_log(double u, TsallisParam alpha);

/// Per-outcome term h_alpha(u) = (u^alpha - u) / (1 - alpha), or -u ln u.
/// h_alpha(0) = h_alpha(1) = 0 exactly. Throws outside [0, 1].
double h_alpha(double u, TsallisParam alpha);

double tsallis_entropy(const ProbPair& dist, TsallisParam alpha);

/// General finite distribution. Entries must be in [0, 1]; normalization is
/// the caller's responsibility.
double tsallis_entropy(std::span<const double> dist, TsallisParam alpha);

/// Power sum p+^alpha + p-^alpha with 0^alpha = 0.
double phi(const ProbPair& dist, TsallisParam alpha);

namespace detail {

// Unchecked kernels for hot loops. u must already lie in [0, 1].
double h_term(double u, double alpha) noexcept;
double binary_entropy(double plus, double minus, double alpha) noexcept;

}  // namespace detail

}  // namespace tsallis
