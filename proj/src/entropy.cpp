#include "tsallis/entropy.hpp"

#include <cmath>
#include <string>

namespace tsallis {

namespace {

double clamp_probability(double u) {
    if (!(u >= -kProbTolerance && u <= 1.0 + kProbTolerance)) {
        throw std::domain_error("probability out of [0, 1]: " + std::to_string(u));
    }
    return u < 0.0 ? 0.0 : (u > 1.0 ? 1.0 : u);
}

}  // namespace

TsallisParam::TsallisParam(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw std::domain_error("entropic order must be a finite positive number");
    }
}

bool TsallisParam::is_integer() const noexcept {
    return std::abs(alpha_ - std::round(alpha_)) < 1e-12;
}

int TsallisParam::as_integer() const noexcept {
    return static_cast<int>(std::lround(alpha_));
}

ProbPair ProbPair::make(double plus, double minus) {
    const double p = clamp_probability(plus);
    const double m = clamp_probability(minus);
    if (std::abs(p + m - 1.0) > kProbTolerance) {
        throw std::domain_error("probability pair does not sum to one");
    }
    return ProbPair(p, m);
}

ProbPair ProbPair::from_bias(double bias) {
    return make(0.5 * (1.0 + bias), 0.5 * (1.0 - bias));
}

namespace detail {

// u^alpha - u is rewritten as u * expm1((alpha - 1) ln u) so that the
// quotient stays accurate for alpha close to 1.
double h_term(double u, double alpha) noexcept {
    if (u <= 0.0 || u >= 1.0) {
        return 0.0;
    }
    const double lu = std::log(u);
    if (alpha == 1.0) {
        return -u * lu;
    }
    return u * std::expm1((alpha - 1.0) * lu) / (1.0 - alpha);
}

double binary_entropy(double plus, double minus, double alpha) noexcept {
    return h_term(plus, alpha) + h_term(minus, alpha);
}

}  // namespace detail

double alpha_log(double u, TsallisParam alpha) {
    if (!(u > 0.0)) {
        throw std::domain_error("alpha_log requires a positive argument");
    }
    const double lu = std::log(u);
    if (alpha.is_shannon()) {
        return lu;
    }
    const double k = 1.0 - alpha.alpha();
    return std::expm1(k * lu) / k;
}

double h_alpha(double u, TsallisParam alpha) {
    if (!(u >= 0.0 && u <= 1.0)) {
        throw std::domain_error("h_alpha requires u in [0, 1]");
    }
    return detail::h_term(u, alpha.alpha());
}

double tsallis_entropy(const ProbPair& dist, TsallisParam alpha) {
    return detail::binary_entropy(dist.plus(), dist.minus(), alpha.alpha());
}

double tsallis_entropy(std::span<const double> dist, TsallisParam alpha) {
    double sum = 0.0;
    for (double p : dist) {
        sum += h_alpha(p, alpha);
    }
    return sum;
}

double phi(const ProbPair& dist, TsallisParam alpha) {
    const double a = alpha.alpha();
    return std::pow(dist.plus(), a) + std::pow(dist.minus(), a);
}

}  // namespace tsallis
