#include "tsallis/qubit.hpp"

#include <cmath>

namespace tsallis {

namespace {

constexpr double kNormTolerance = 1e-12;

double wrap_phase(double phi) {
    double r = std::fmod(phi, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    return r >= kTwoPi ? 0.0 : r;
}

void check_norm(const BlochVector& b) {
    if (!(b.norm() <= 1.0 + kNormTolerance)) {
        throw std::domain_error("Bloch vector norm exceeds 1");
    }
}

}  // namespace

PureStateAngles::PureStateAngles(double tau, double phi) {
    if (!std::isfinite(tau) || !std::isfinite(phi)) {
        throw std::domain_error("state angles must be finite");
    }
    // tau -> tau + pi flips the global sign; tau -> pi - tau is the same ray
    // as (tau, phi + pi).
    double t = std::fmod(tau, kPi);
    if (t < 0.0) {
        t += kPi;
    }
    if (t >= kPi) {
        t = 0.0;
    }
    if (t > kHalfPi) {
        t = kPi - t;
        phi += kPi;
    }
    tau_ = t;
    phi_ = wrap_phase(phi);
}

BlochVector BlochVector::make(double x, double y, double z) {
    BlochVector b{x, y, z};
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z)) {
        throw std::domain_error("Bloch vector components must be finite");
    }
    check_norm(b);
    return b;
}

BlochVector BlochVector::from_angles(const PureStateAngles& state) {
    const double s = std::sin(2.0 * state.tau());
    return BlochVector{s * std::cos(state.phi()), s * std::sin(state.phi()),
                       std::cos(2.0 * state.tau())};
}

double BlochVector::norm() const noexcept {
    return std::sqrt(x * x + y * y + z * z);
}

bool BlochVector::is_pure() const noexcept {
    return std::abs(norm() - 1.0) <= kNormTolerance;
}

MeasurementTriple probs_from_angles(const PureStateAngles& state) {
    const double s = std::sin(2.0 * state.tau());
    return MeasurementTriple{ProbPair::from_bias(s * std::cos(state.phi())),
                             ProbPair::from_bias(s * std::sin(state.phi())),
                             ProbPair::from_bias(std::cos(2.0 * state.tau()))};
}

MeasurementTriple probs_from_bloch(const BlochVector& b) {
    check_norm(b);
    return MeasurementTriple{ProbPair::from_bias(b.x), ProbPair::from_bias(b.y),
                             ProbPair::from_bias(b.z)};
}

ReducedCoords reduced_coords(const PureStateAngles& state) {
    const double s = std::sin(2.0 * state.tau());
    return ReducedCoords{s * std::cos(state.phi()), s * std::sin(state.phi())};
}

PureStateAngles canonicalize_to_D(const PureStateAngles& state) {
    // Each subtraction below is exact (operands within a factor of two).
    double tau = state.tau();
    double phi = state.phi();
    if (phi >= kPi) {
        phi -= kPi;
    }
    if (phi > kHalfPi) {
        phi = kPi - phi;
    }
    if (phi > kQuarterPi) {
        phi = kHalfPi - phi;
    }
    if (tau > kQuarterPi) {
        tau = kHalfPi - tau;
    }
    return PureStateAngles(PureStateAngles::Raw{}, tau, phi);
}

std::array<BlochVector, 6> eigenstate_witnesses() {
    return {BlochVector{1, 0, 0}, BlochVector{-1, 0, 0}, BlochVector{0, 1, 0},
            BlochVector{0, -1, 0}, BlochVector{0, 0, 1}, BlochVector{0, 0, -1}};
}

}  // namespace tsallis
