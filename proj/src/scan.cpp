// Grid kernels for the entropic sum. The OpenMP scan and the serial
// reference must agree bit for bit; tests compare them directly.

#include "tsallis/verify.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include <omp.h>

namespace tsallis::verify {

namespace {

struct Axis {
    double lo;
    double hi;
    int n;
    bool closed;

    double at(int i) const {
        const double t = closed ? static_cast<double>(i) / (n - 1)
                                : static_cast<double>(i) / n;
        return lo + (hi - lo) * t;
    }
};

struct Best {
    double value;
    int i;
    int j;
};

bool index_before(const Best& a, const Best& b) {
    return a.i < b.i || (a.i == b.i && a.j < b.j);
}

// Total orders on (value, i, j): the merge result does not depend on the
// order in which thread-local candidates arrive.
bool better_min(const Best& a, const Best& b) {
    return a.value < b.value || (a.value == b.value && index_before(a, b));
}

bool better_max(const Best& a, const Best& b) {
    return a.value > b.value || (a.value == b.value && index_before(a, b));
}

struct Extrema {
    Best lo{HUGE_VAL, 0, 0};
    Best hi{-HUGE_VAL, 0, 0};

    void offer(const Best& c) {
        if (better_min(c, lo)) lo = c;
        if (better_max(c, hi)) hi = c;
    }
    void merge(const Extrema& other) {
        if (better_min(other.lo, lo)) lo = other.lo;
        if (better_max(other.hi, hi)) hi = other.hi;
    }
};

// Rounding noise of a few ulps would otherwise pick an arbitrary witness of
// a degenerate extremum (at alpha = 2, 3 every pure state is one).
double tie_window(double v) {
    return 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(v));
}

struct FirstHit {
    Best lo{HUGE_VAL, INT_MAX, INT_MAX};
    Best hi{HUGE_VAL, INT_MAX, INT_MAX};

    void merge(const FirstHit& other) {
        if (index_before(other.lo, lo)) lo = other.lo;
        if (index_before(other.hi, hi)) hi = other.hi;
    }
};

// row(i, values) fills the n_cols values of grid row i. The first pass finds
// the exact extrema, the second the lowest (i, j) within tie_window of each;
// the reported values stay the exact extrema.
template <class Row>
Extrema scan_rows(int n_rows, int n_cols, const Row& row, bool parallel) {
    Extrema result;
#pragma omp parallel if (parallel)
    {
        std::vector<double> values(n_cols);
        Extrema local;
#pragma omp for schedule(static)
        for (int i = 0; i < n_rows; ++i) {
            row(i, values.data());
            for (int j = 0; j < n_cols; ++j) local.offer({values[j], i, j});
        }
#pragma omp critical(tsallis_scan_merge)
        result.merge(local);
    }

    const double lo_cut = result.lo.value + tie_window(result.lo.value);
    const double hi_cut = result.hi.value - tie_window(result.hi.value);
    FirstHit first;
#pragma omp parallel if (parallel)
    {
        std::vector<double> values(n_cols);
        FirstHit local;
#pragma omp for schedule(static)
        for (int i = 0; i < n_rows; ++i) {
            if (local.lo.i < INT_MAX && local.hi.i < INT_MAX) continue;
            row(i, values.data());
            for (int j = 0; j < n_cols; ++j) {
                if (local.lo.i == INT_MAX && values[j] <= lo_cut) local.lo = {values[j], i, j};
                if (local.hi.i == INT_MAX && values[j] >= hi_cut) local.hi = {values[j], i, j};
            }
        }
#pragma omp critical(tsallis_scan_merge)
        first.merge(local);
    }
    result.lo = {result.lo.value, first.lo.i, first.lo.j};
    result.hi = {result.hi.value, first.hi.i, first.hi.j};
    return result;
}

double biased_pair_entropy(double bias, double alpha) {
    return detail::binary_entropy(0.5 * (1.0 + bias), 0.5 * (1.0 - bias), alpha);
}

Extrema scan_rect_parallel(const Axis& tau, const Axis& phi, double alpha) {
    std::vector<double> cos_phi(phi.n);
    std::vector<double> sin_phi(phi.n);
    for (int j = 0; j < phi.n; ++j) {
        cos_phi[j] = std::cos(phi.at(j));
        sin_phi[j] = std::sin(phi.at(j));
    }
    auto row = [&](int i, double* values) {
        const double t = tau.at(i);
        const double s = std::sin(2.0 * t);
        const double hz = biased_pair_entropy(std::cos(2.0 * t), alpha);
        for (int j = 0; j < phi.n; ++j) {
            values[j] = biased_pair_entropy(s * cos_phi[j], alpha) +
                        biased_pair_entropy(s * sin_phi[j], alpha) + hz;
        }
    };
    return scan_rows(tau.n, phi.n, row, true);
}

Extrema scan_rect_serial(const Axis& tau, const Axis& phi, TsallisParam alpha) {
    auto row = [&](int i, double* values) {
        for (int j = 0; j < phi.n; ++j) {
            values[j] = entropic_sum(PureStateAngles(tau.at(i), phi.at(j)), alpha);
        }
    };
    return scan_rows(tau.n, phi.n, row, false);
}

Axis d_tau_axis(const GridSpec& g) { return {0.0, kQuarterPi, g.n_tau, true}; }
Axis d_phi_axis(const GridSpec& g) { return {0.0, kQuarterPi, g.n_phi, true}; }

ScanReport make_report(TsallisParam alpha, const GridSpec& grid, const Extrema& e) {
    const Axis ta = d_tau_axis(grid);
    const Axis pa = d_phi_axis(grid);
    ScanReport r{alpha,
                 e.lo.value,
                 e.hi.value,
                 PureStateAngles(ta.at(e.lo.i), pa.at(e.lo.j)),
                 PureStateAngles(ta.at(e.hi.i), pa.at(e.hi.j)),
                 lower_bound(alpha).value,
                 std::nullopt,
                 std::nullopt,
                 std::nullopt,
                 grid};
    r.min_gap = r.min_value - *r.analytic_lower;
    if (const auto up = upper_bound_pure(alpha)) {
        r.analytic_upper = up->value;
        r.max_gap = up->value - r.max_value;
    }
    return r;
}

}  // namespace

void GridSpec::validate() const {
    if (n_tau < 2 || n_phi < 2) {
        throw std::invalid_argument("grid needs at least 2 points per axis");
    }
}

FullGridSpec FullGridSpec::matching(const GridSpec& d_grid) {
    d_grid.validate();
    return {2 * (d_grid.n_tau - 1) + 1, 8 * (d_grid.n_phi - 1)};
}

void FullGridSpec::validate() const {
    if (n_tau < 2 || n_phi < 2) {
        throw std::invalid_argument("grid needs at least 2 points per axis");
    }
}

ScanReport scan_extrema(TsallisParam alpha, const GridSpec& grid) {
    grid.validate();
    return make_report(alpha, grid,
                       scan_rect_parallel(d_tau_axis(grid), d_phi_axis(grid), alpha.alpha()));
}

ScanReport scan_extrema_serial(TsallisParam alpha, const GridSpec& grid) {
    grid.validate();
    return make_report(alpha, grid, scan_rect_serial(d_tau_axis(grid), d_phi_axis(grid), alpha));
}

RefinedMax refine_argmax(const ScanReport& coarse) {
    constexpr int kFactor = 10;
    constexpr int kHalfWidth = 2;

    auto window = [](double center, double step) {
        const double fine = step / kFactor;
        const double lo = std::max(0.0, center - kHalfWidth * step);
        const double hi = std::min(kQuarterPi, center + kHalfWidth * step);
        const int n = static_cast<int>(std::lround((hi - lo) / fine)) + 1;
        return Axis{lo, hi, std::max(n, 2), true};
    };
    const Axis ta = window(coarse.argmax.tau(), coarse.grid.tau_step());
    const Axis pa = window(coarse.argmax.phi(), coarse.grid.phi_step());
    const Extrema e = scan_rect_parallel(ta, pa, coarse.alpha.alpha());

    RefinedMax out{e.hi.value, PureStateAngles(ta.at(e.hi.i), pa.at(e.hi.j)),
                   std::max(coarse.grid.tau_step(), coarse.grid.phi_step()) / kFactor};
    // The coarse grid point is also a candidate; keep whichever is larger.
    if (coarse.max_value > out.value) {
        out.value = coarse.max_value;
        out.argmax = coarse.argmax;
    }
    return out;
}

double empirical_upper_pure(TsallisParam alpha, const GridSpec& grid) {
    return refine_argmax(scan_extrema(alpha, grid)).value;
}

DomainConsistency compare_full_domain(TsallisParam alpha, const GridSpec& d_grid,
                                      const FullGridSpec& full_grid) {
    d_grid.validate();
    full_grid.validate();
    const Extrema d = scan_rect_parallel(d_tau_axis(d_grid), d_phi_axis(d_grid), alpha.alpha());
    const Extrema f = scan_rect_parallel(Axis{0.0, kHalfPi, full_grid.n_tau, true},
                                         Axis{0.0, kTwoPi, full_grid.n_phi, false},
                                         alpha.alpha());
    const double h = std::max({d_grid.tau_step(), d_grid.phi_step(), full_grid.tau_step(),
                               full_grid.phi_step()});
    const double tol = 2.0 * kGridCurvature * h * h + 1e-12;
    const bool ok = std::abs(d.lo.value - f.lo.value) <= tol &&
                    std::abs(d.hi.value - f.hi.value) <= tol;
    return {ok, d.lo.value, d.hi.value, f.lo.value, f.hi.value, tol};
}

bool scan_full_domain_consistency(TsallisParam alpha, const GridSpec& grid) {
    if (!grid.include_full_domain) {
        throw std::invalid_argument("grid does not request a full-domain scan");
    }
    return compare_full_domain(alpha, grid, FullGridSpec::matching(grid)).consistent;
}

}  // namespace tsallis::verify
