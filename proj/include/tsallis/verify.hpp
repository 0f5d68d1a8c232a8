#pragma once

// Brute-force oracle for the analytic bounds: grid optimization of the
// entropic sum over the reduced rectangle D = [0, pi/4] x [0, pi/4],
// equality-condition certification and property checks on the kernels and
// on concavity in alpha.

#include "tsallis/bounds.hpp"
#include "tsallis/qubit.hpp"
#include "tsallis/sampling.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tsallis::verify {

/// Uniform grid with both endpoints of each axis included.
struct GridSpec {
    int n_tau = 2001;
    int n_phi = 2001;
    bool include_full_domain = false;

    static GridSpec square(int n, bool full_domain = false) { return {n, n, full_domain}; }

    /// Throws std::invalid_argument unless both sizes are >= 2.
    void validate() const;
    double tau_step() const { return kQuarterPi / (n_tau - 1); }
    double phi_step() const { return kQuarterPi / (n_phi - 1); }
};

/// Grid over tau in [0, pi/2] (closed) and phi in [0, 2 pi) (half-open).
struct FullGridSpec {
    int n_tau = 4001;
    int n_phi = 16000;

    /// Same step sizes as the given D grid, so every D grid point is present.
    static FullGridSpec matching(const GridSpec& d_grid);

    void validate() const;
    double tau_step() const { return kHalfPi / (n_tau - 1); }
    double phi_step() const { return kTwoPi / n_phi; }
};

/// Empirical constant in the grid-error model C h^2 for smooth extrema.
/// The largest |second derivative| of the entropic sum at the pure-state
/// maximizer over alpha in [0.1, 10] is about 2.3, giving C ~ 0.6.
inline constexpr double kGridCurvature = 1.0;

struct ScanReport {
    TsallisParam alpha;
    double min_value;
    double max_value;
    PureStateAngles argmin;
    PureStateAngles argmax;
    std::optional<double> analytic_lower;
    std::optional<double> analytic_upper;
    /// min_value - analytic_lower.
    std::optional<double> min_gap;
    /// analytic_upper - max_value.
    std::optional<double> max_gap;
    GridSpec grid;
};

struct RefinedMax {
    double value;
    PureStateAngles argmax;
    double step;  // grid step of the refinement pass
};

double entropic_sum(const MeasurementTriple& triple, TsallisParam alpha);
double entropic_sum(const PureStateAngles& state, TsallisParam alpha);
double entropic_sum(const BlochVector& state, TsallisParam alpha);

/// 3 - Phi(px) - Phi(qy) - Phi(rz); zero at alpha = 1.
double g_sum(const PureStateAngles& state, TsallisParam alpha);

/// Exact extrema of the entropic sum over the grid on D. Rows are evaluated
/// in parallel; values within a few ulps of an extremum count as ties, which
/// resolve to the lowest tau, then the lowest phi.
ScanReport scan_extrema(TsallisParam alpha, const GridSpec& grid);

/// Single-threaded reference for scan_extrema, evaluated point by point
/// through the public state API.
ScanReport scan_extrema_serial(TsallisParam alpha, const GridSpec& grid);

/// One pass of 10x finer grid in a +-2 step window around the coarse argmax.
RefinedMax refine_argmax(const ScanReport& coarse);

/// Refined grid maximum over D for any alpha. For orders without an
/// analytic pure-state bound this is an empirical estimate only.
double empirical_upper_pure(TsallisParam alpha, const GridSpec& grid);

struct DomainConsistency {
    bool consistent;
    double d_min, d_max;
    double full_min, full_max;
    double tolerance;
};

/// Compares extrema over D with extrema over the whole (tau, phi) domain.
/// Tolerance is 2 C h^2 with h the coarsest step of either grid.
DomainConsistency compare_full_domain(TsallisParam alpha, const GridSpec& d_grid,
                                      const FullGridSpec& full_grid);

/// Requires grid.include_full_domain; uses FullGridSpec::matching(grid).
bool scan_full_domain_consistency(TsallisParam alpha, const GridSpec& grid);

struct EqualityCertificate {
    bool eigenstates_attain = false;      // all six witnesses sit on the bound
    bool pure_states_strict = false;      // random non-eigenstates exceed it
    bool maximizer_attains = false;       // (1 +- 1/sqrt3)/2 hits 3 h_tilde
    bool impure_states_strict = false;    // axis-aligned mixed states exceed it
    double worst_witness_error = 0.0;
    double min_pure_margin = 0.0;         // min over samples of sum - bound
    double maximizer_error = 0.0;
    double min_impure_margin = 0.0;

    bool passed() const {
        return eigenstates_attain && pure_states_strict && maximizer_attains &&
               impure_states_strict;
    }
};

/// Certifies the equality conditions of the tight bounds. For alpha = 2, 3
/// the pure-state clause checks that every sample sits on the bound instead.
/// Throws unsupported_range outside (0, 1] and integer alpha >= 2.
EqualityCertificate certify_equality_conditions(TsallisParam alpha, double tolerance,
                                                std::uint64_t seed = kDefaultSeed,
                                                int n_samples = 10000);

enum class Kernel { f, g };

/// Kernel values on the uniform grid u_i = i / (n + 1), i = 1..n, must be
/// nondecreasing; strictly increasing for f with alpha < 1 and g with
/// alpha >= 4.
bool check_kernel_monotonicity(Kernel kernel, TsallisParam alpha, int n_points);

/// Smallest successive difference of the kernel on the same grid.
double kernel_min_increment(Kernel kernel, TsallisParam alpha, int n_points);

/// Midpoint concavity of alpha -> g_sum(state, alpha) on a uniform grid in
/// [alpha_lo, alpha_hi], within 1e-12. Requires 1 <= alpha_lo < alpha_hi.
bool check_alpha_concavity(const PureStateAngles& state, double alpha_lo, double alpha_hi,
                           int n_points);

/// Smallest value of G(mid) - (G(left) + G(right)) / 2 over adjacent triples.
double alpha_concavity_margin(const PureStateAngles& state, double alpha_lo, double alpha_hi,
                              int n_points);

/// One line of the verification summary.
struct CheckResult {
    std::string check;
    double alpha;
    std::string status;  // "pass", "fail" or "info"
    double observed;
    double expected;
    double tolerance;
};

/// Runs every check applicable to each alpha, in a fixed order.
std::vector<CheckResult> run_suite(const std::vector<double>& alphas, int grid_resolution,
                                   std::uint64_t seed);

}  // namespace tsallis::verify
