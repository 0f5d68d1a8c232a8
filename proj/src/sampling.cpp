#include "tsallis/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace tsallis {

double StateSampler::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double StateSampler::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

PureStateAngles StateSampler::pure_state() {
    // cos(2 tau) is uniform in [-1, 1] under the area measure.
    const double z = uniform(-1.0, 1.0);
    const double phi = uniform(0.0, kTwoPi);
    return PureStateAngles(0.5 * std::acos(z), phi);
}

BlochVector StateSampler::pure_bloch() {
    const double z = uniform(-1.0, 1.0);
    const double phi = uniform(0.0, kTwoPi);
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    return BlochVector{rho * std::cos(phi), rho * std::sin(phi), z};
}

BlochVector StateSampler::mixed_bloch() {
    const BlochVector dir = pure_bloch();
    const double r = std::cbrt(uniform());
    return BlochVector{r * dir.x, r * dir.y, r * dir.z};
}

}  // namespace tsallis
