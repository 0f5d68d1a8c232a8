#include "tsallis/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace tsallis::verify {

namespace {

constexpr double kConcavitySlack = 1e-12;

bool is_deterministic(const ProbPair& p) {
    return p.plus() == 0.0 || p.minus() == 0.0;
}

bool has_constant_pure_sum(TsallisParam alpha) {
    return alpha.is_integer() && (alpha.as_integer() == 2 || alpha.as_integer() == 3);
}

double kernel_value(Kernel kernel, double u, TsallisParam alpha) {
    return kernel == Kernel::f ? kernel_f(u, alpha) : kernel_g(u, alpha);
}

bool kernel_must_be_strict(Kernel kernel, TsallisParam alpha) {
    if (kernel == Kernel::f) {
        return alpha.alpha() < 1.0;
    }
    return alpha.as_integer() >= 4;
}

std::vector<double> alpha_grid(double lo, double hi, int n) {
    if (!(lo >= 1.0 && lo < hi) || n < 3) {
        throw std::invalid_argument("alpha grid requires 1 <= lo < hi and at least 3 points");
    }
    std::vector<double> a(n);
    for (int k = 0; k < n; ++k) {
        a[k] = lo + (hi - lo) * (static_cast<double>(k) / (n - 1));
    }
    return a;
}

}  // namespace

double entropic_sum(const MeasurementTriple& triple, TsallisParam alpha) {
    return tsallis_entropy(triple.px, alpha) + tsallis_entropy(triple.qy, alpha) +
           tsallis_entropy(triple.rz, alpha);
}

double entropic_sum(const PureStateAngles& state, TsallisParam alpha) {
    return entropic_sum(probs_from_angles(state), alpha);
}

double entropic_sum(const BlochVector& state, TsallisParam alpha) {
    return entropic_sum(probs_from_bloch(state), alpha);
}

double g_sum(const PureStateAngles& state, TsallisParam alpha) {
    if (alpha.is_shannon()) {
        return 0.0;
    }
    const MeasurementTriple t = probs_from_angles(state);
    return 3.0 - phi(t.px, alpha) - phi(t.qy, alpha) - phi(t.rz, alpha);
}

EqualityCertificate certify_equality_conditions(TsallisParam alpha, double tolerance,
                                                std::uint64_t seed, int n_samples) {
    if (!has_tight_bounds(alpha)) {
        throw unsupported_range("equality conditions are known only for alpha in (0, 1] "
                                "or integer alpha >= 2");
    }
    const double bound = lower_bound(alpha).value;
    const bool constant = has_constant_pure_sum(alpha);
    EqualityCertificate cert;

    for (const BlochVector& w : eigenstate_witnesses()) {
        cert.worst_witness_error =
            std::max(cert.worst_witness_error, std::abs(entropic_sum(w, alpha) - bound));
    }
    cert.eigenstates_attain = cert.worst_witness_error <= tolerance;

    // For alpha = 2, 3 every pure state sits on the bound, so the clause
    // becomes a deviation check; otherwise each non-eigenstate must exceed it.
    StateSampler sampler(seed);
    double min_margin = std::numeric_limits<double>::infinity();
    double max_deviation = 0.0;
    for (int k = 0; k < n_samples; ++k) {
        const PureStateAngles s = sampler.pure_state();
        const MeasurementTriple t = probs_from_angles(s);
        if (is_deterministic(t.px) || is_deterministic(t.qy) || is_deterministic(t.rz)) {
            continue;
        }
        const double margin = entropic_sum(t, alpha) - bound;
        min_margin = std::min(min_margin, margin);
        max_deviation = std::max(max_deviation, std::abs(margin));
    }
    if (constant) {
        cert.min_pure_margin = max_deviation;
        cert.pure_states_strict = max_deviation <= tolerance;
    } else {
        cert.min_pure_margin = min_margin;
        cert.pure_states_strict = min_margin > 0.0;
    }

    // All eight sign patterns of (1, 1, 1) / sqrt3 and the angle form of the
    // maximizer inside D.
    const double target = 3.0 * h_tilde(alpha);
    const double c = 1.0 / std::numbers::sqrt3;
    for (int signs = 0; signs < 8; ++signs) {
        const BlochVector b{(signs & 1) ? -c : c, (signs & 2) ? -c : c, (signs & 4) ? -c : c};
        cert.maximizer_error =
            std::max(cert.maximizer_error, std::abs(entropic_sum(b, alpha) - target));
    }
    const PureStateAngles peak(0.5 * std::atan(std::numbers::sqrt2), kQuarterPi);
    cert.maximizer_error = std::max(cert.maximizer_error, std::abs(entropic_sum(peak, alpha) - target));
    cert.maximizer_attains = cert.maximizer_error <= tolerance;

    double impure_margin = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= 99; ++k) {
        const double t = 0.01 * k;
        for (const BlochVector& w : eigenstate_witnesses()) {
            const BlochVector b{t * w.x, t * w.y, t * w.z};
            impure_margin = std::min(impure_margin, entropic_sum(b, alpha) - bound);
        }
    }
    cert.min_impure_margin = impure_margin;
    cert.impure_states_strict = impure_margin > 0.0;
    return cert;
}

double kernel_min_increment(Kernel kernel, TsallisParam alpha, int n_points) {
    if (n_points < 2) {
        throw std::invalid_argument("need at least 2 kernel sample points");
    }
    double prev = kernel_value(kernel, 1.0 / (n_points + 1), alpha);
    double min_inc = std::numeric_limits<double>::infinity();
    for (int i = 2; i <= n_points; ++i) {
        const double cur = kernel_value(kernel, static_cast<double>(i) / (n_points + 1), alpha);
        min_inc = std::min(min_inc, cur - prev);
        prev = cur;
    }
    return min_inc;
}

bool check_kernel_monotonicity(Kernel kernel, TsallisParam alpha, int n_points) {
    const double inc = kernel_min_increment(kernel, alpha, n_points);
    return kernel_must_be_strict(kernel, alpha) ? inc > 0.0 : inc >= 0.0;
}

double alpha_concavity_margin(const PureStateAngles& state, double alpha_lo, double alpha_hi,
                              int n_points) {
    const std::vector<double> a = alpha_grid(alpha_lo, alpha_hi, n_points);
    std::vector<double> g(a.size());
    std::transform(a.begin(), a.end(), g.begin(),
                   [&](double x) { return g_sum(state, TsallisParam(x)); });
    double margin = std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k + 1 < g.size(); ++k) {
        margin = std::min(margin, g[k] - 0.5 * (g[k - 1] + g[k + 1]));
    }
    return margin;
}

bool check_alpha_concavity(const PureStateAngles& state, double alpha_lo, double alpha_hi,
                           int n_points) {
    return alpha_concavity_margin(state, alpha_lo, alpha_hi, n_points) >= -kConcavitySlack;
}

}  // namespace tsallis::verify
