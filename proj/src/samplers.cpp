#include "rlab/samplers.hpp"

#include <cmath>
#include <numbers>

namespace rlab {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr ComplexValue kI{0.0, 1.0};
}  // namespace

double uniform_nonzero(RngStream& rng, double hi) {
    for (;;) {
        double v = hi * (1.0 - rng.uniform01());
        if (v > 0.0) return v;
    }
}

MoebiusMap matrix(const FuchsianParabolicSpec& s) {
    double x = s.x;
    ComplexValue e = std::polar(1.0, s.theta);
    return MoebiusMap::unchecked(1.0 + kI * x, x * e, x * std::conj(e), 1.0 - kI * x);
}

MoebiusMap matrix(const Elliptic2Spec& s) {
    ComplexValue w = std::polar(s.w_abs, s.w_arg);
    double k = 1.0 / std::sqrt(1.0 - s.w_abs * s.w_abs);
    return MoebiusMap::unchecked(k * kI, k * kI * std::conj(w), -k * kI * w, -k * kI);
}

MoebiusMap matrix(const KleinianParabolicSpec& s) {
    double t = s.t;
    ComplexValue k = std::polar(s.lambda / (t * t + 1.0), s.theta);
    ComplexValue e = std::polar(1.0, s.z0_arg);
    return MoebiusMap::unchecked(1.0 - k * t, k * e * (t * t), -k * std::conj(e), 1.0 + k * t);
}

ComplexValue fixed_point(const KleinianParabolicSpec& s) { return std::polar(s.t, s.z0_arg); }

MoebiusMap sample_fuchsian(RngStream& rng) {
    // 2 arcsin(1/|a|) uniform on [0, pi]
    double phi = uniform_nonzero(rng, kPi / 2);
    double abs_a = 1.0 / std::sin(phi);
    double abs_c = std::cos(phi) / std::sin(phi);
    ComplexValue a = std::polar(abs_a, rng.uniform(0.0, 2 * kPi));
    ComplexValue c = std::polar(abs_c, rng.uniform(0.0, 2 * kPi));
    return MoebiusMap::unchecked(a, c, std::conj(c), std::conj(a));
}

FuchsianParabolicSpec sample_fuchsian_parabolic(RngStream& rng) {
    double theta = rng.uniform(0.0, 2 * kPi);
    // |cot| of a uniform angle on (0, pi) has the law of cot on (0, pi/2)
    double eta = uniform_nonzero(rng, kPi / 2);
    return {theta, std::cos(eta) / std::sin(eta)};
}

Elliptic2Spec sample_elliptic2(RngStream& rng) {
    double w_abs;
    do {
        w_abs = std::cos(rng.uniform(0.0, kPi / 2));
    } while (w_abs >= 1.0);
    return {w_abs, rng.uniform(0.0, 2 * kPi)};
}

SpherePoint sample_sphere_uniform(RngStream& rng) {
    double c = rng.uniform(-1.0, 1.0);
    double r = std::sqrt((1.0 + c) / (1.0 - c));
    return SpherePoint(std::polar(r, rng.uniform(0.0, 2 * kPi)));
}

KleinianParabolicSpec sample_kleinian_parabolic(RngStream& rng, SamplerMode mode) {
    KleinianParabolicSpec s{};
    if (mode == SamplerMode::TanUniform) {
        s.t = std::tan(rng.uniform(0.0, kPi / 2));
        s.z0_arg = rng.uniform(0.0, 2 * kPi);
    } else {
        ComplexValue z0 = sample_sphere_uniform(rng).value();
        s.t = std::abs(z0);
        s.z0_arg = std::arg(z0);
    }
    double beta = uniform_nonzero(rng, kPi / 2);
    s.lambda = std::cos(beta) / std::sin(beta);
    s.theta = rng.uniform(0.0, 2 * kPi);
    return s;
}

}  // namespace rlab
