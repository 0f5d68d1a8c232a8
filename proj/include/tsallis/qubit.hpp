#pragma once

// Qubit states and the outcome statistics of the three Pauli measurements.

#include "tsallis/entropy.hpp"

#include <array>
#include <numbers>

namespace tsallis {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kQuarterPi = std::numbers::pi / 4.0;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Pure state cos(tau)|0> + exp(i phi) sin(tau)|1>, with tau in [0, pi/2]
/// and phi in [0, 2 pi).
class PureStateAngles {
public:
    PureStateAngles() = default;

    /// Accepts any finite angles and maps them onto the canonical ranges
    /// without changing the physical state.
    PureStateAngles(double tau, double phi);

    double tau() const noexcept { return tau_; }
    double phi() const noexcept { return phi_; }

    friend bool operator==(const PureStateAngles&, const PureStateAngles&) = default;

private:
    struct Raw {};
    PureStateAngles(Raw, double tau, double phi) noexcept : tau_(tau), phi_(phi) {}
    friend PureStateAngles canonicalize_to_D(const PureStateAngles& state);

    double tau_ = 0.0;
    double phi_ = 0.0;
};

/// Qubit density matrix (I + b.sigma) / 2; |b| <= 1.
struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    /// Throws std::domain_error if the norm exceeds 1 by more than 1e-12.
    static BlochVector make(double x, double y, double z);
    static BlochVector from_angles(const PureStateAngles& state);

    double norm() const noexcept;
    bool is_pure() const noexcept;
};

struct MeasurementTriple {
    ProbPair px;  // sigma_x
    ProbPair qy;  // sigma_y
    ProbPair rz;  // sigma_z
};

/// Coordinates u = sin(2 tau) cos(phi), v = sin(2 tau) sin(phi).
struct ReducedCoords {
    double u = 0.0;
    double v = 0.0;
};

MeasurementTriple probs_from_angles(const PureStateAngles& state);
MeasurementTriple probs_from_bloch(const BlochVector& b);

ReducedCoords reduced_coords(const PureStateAngles& state);

/// Folds a pure state into tau, phi in [0, pi/4] using, in order,
/// phi -> phi - pi, phi -> pi - phi, phi -> pi/2 - phi, tau -> pi/2 - tau.
/// The three outcome distributions are preserved up to swaps within a pair
/// and exchange of the sigma_x and sigma_y pairs.
PureStateAngles canonicalize_to_D(const PureStateAngles& state);

/// The six eigenstates of sigma_x, sigma_y, sigma_z.
std::array<BlochVector, 6> eigenstate_witnesses();

}  // namespace tsallis
