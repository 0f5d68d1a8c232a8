#pragma once

#include "tsallis/qubit.hpp"

#include <cstdint>
#include <random>

namespace tsallis {

inline constexpr std::uint64_t kDefaultSeed = 20140115;

/// Seeded qubit-state generator. Output is identical across platforms for a
/// given seed (the engine sequence is fixed by the standard and the real
/// conversion is done here, not by a library distribution).
class StateSampler {
public:
    explicit StateSampler(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform();
    double uniform(double lo, double hi);

    /// Pure state, uniform with respect to area on the Bloch sphere.
    PureStateAngles pure_state();
    /// Uniform point of the Bloch sphere.
    BlochVector pure_bloch();
    /// Uniform point of the Bloch ball.
    BlochVector mixed_bloch();

private:
    std::mt19937_64 engine_;
};

}  // namespace tsallis
