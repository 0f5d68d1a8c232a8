#include "tsallis/verify.hpp"

#include <algorithm>
#include <cmath>

namespace tsallis::verify {

namespace {

constexpr double kExactTol = 1e-12;
constexpr int kKernelPoints = 10000;
constexpr int kConcavityStates = 8;
constexpr int kConcavityPoints = 101;
constexpr int kMaxFullDomainResolution = 251;

const char* status_of(bool ok) { return ok ? "pass" : "fail"; }

void add(std::vector<CheckResult>& out, const char* name, double alpha, bool ok, double observed,
         double expected, double tol) {
    out.push_back({name, alpha, status_of(ok), observed, expected, tol});
}

void run_one(std::vector<CheckResult>& out, double alpha_value, int resolution,
             std::uint64_t seed) {
    const TsallisParam alpha(alpha_value);
    const GridSpec grid = GridSpec::square(resolution);
    const ScanReport scan = scan_extrema(alpha, grid);
    const LowerBound lo = lower_bound(alpha);

    {
        const double gap = scan.min_value - lo.value;
        const bool ok = lo.tight ? std::abs(gap) <= kExactTol : gap >= -kExactTol;
        add(out, "lower_bound", alpha_value, ok, scan.min_value, lo.value, kExactTol);
    }

    const RefinedMax refined = refine_argmax(scan);
    if (const auto up = upper_bound_pure(alpha)) {
        const double tol = kGridCurvature * refined.step * refined.step + kExactTol;
        const double gap = up->value - refined.value;
        add(out, "upper_bound_pure", alpha_value, gap >= -kExactTol && gap <= tol, refined.value,
            up->value, tol);
    } else {
        // No analytic value: only the sandwich lower <= max <= 3 ln_a(2).
        const double mixed = upper_bound_mixed(alpha);
        const bool ok =
            refined.value >= lo.value - kExactTol && refined.value <= mixed + kExactTol;
        add(out, "upper_bound_pure_empirical", alpha_value, ok, refined.value, mixed, kExactTol);
    }

    {
        const double centre = entropic_sum(BlochVector{0.0, 0.0, 0.0}, alpha);
        const double mixed = upper_bound_mixed(alpha);
        add(out, "upper_bound_mixed", alpha_value, std::abs(centre - mixed) <= kExactTol, centre,
            mixed, kExactTol);
    }

    if (has_tight_bounds(alpha)) {
        const EqualityCertificate c = certify_equality_conditions(alpha, kExactTol, seed);
        const auto up = upper_bound_pure(alpha);
        const bool constant = up && up->attained_by_all_pure;
        add(out, "equality_eigenstates", alpha_value, c.eigenstates_attain, c.worst_witness_error,
            0.0, kExactTol);
        add(out, "equality_pure_states", alpha_value, c.pure_states_strict, c.min_pure_margin, 0.0,
            constant ? kExactTol : 0.0);
        add(out, "equality_maximizer", alpha_value, c.maximizer_attains, c.maximizer_error, 0.0,
            kExactTol);
        add(out, "equality_impure_states", alpha_value, c.impure_states_strict,
            c.min_impure_margin, 0.0, 0.0);
    }

    if (alpha_value <= 1.0) {
        const double inc = kernel_min_increment(Kernel::f, alpha, kKernelPoints);
        add(out, "kernel_f_monotonicity", alpha_value,
            check_kernel_monotonicity(Kernel::f, alpha, kKernelPoints), inc, 0.0, 0.0);
    }
    if (alpha.is_integer()) {
        const double inc = kernel_min_increment(Kernel::g, alpha, kKernelPoints);
        add(out, "kernel_g_monotonicity", alpha_value,
            check_kernel_monotonicity(Kernel::g, alpha, kKernelPoints), inc, 0.0, 0.0);
    }

    {
        StateSampler sampler(seed + 1);
        const double hi = std::max(2.0, std::ceil(alpha_value) + 1.0);
        double margin = HUGE_VAL;
        for (int k = 0; k < kConcavityStates; ++k) {
            margin = std::min(margin,
                              alpha_concavity_margin(sampler.pure_state(), 1.0, hi, kConcavityPoints));
        }
        add(out, "alpha_concavity", alpha_value, margin >= -kExactTol, margin, 0.0, kExactTol);
    }

    {
        const GridSpec d_grid = GridSpec::square(std::min(resolution, kMaxFullDomainResolution));
        const DomainConsistency dc =
            compare_full_domain(alpha, d_grid, FullGridSpec::matching(d_grid));
        const double diff =
            std::max(std::abs(dc.d_min - dc.full_min), std::abs(dc.d_max - dc.full_max));
        add(out, "full_domain_consistency", alpha_value, dc.consistent, diff, 0.0, dc.tolerance);
    }
}

}  // namespace

std::vector<CheckResult> run_suite(const std::vector<double>& alphas, int grid_resolution,
                                   std::uint64_t seed) {
    GridSpec::square(grid_resolution).validate();
    std::vector<CheckResult> out;
    for (double a : alphas) {
        run_one(out, a, grid_resolution, seed);
    }
    return out;
}

}  // namespace tsallis::verify
