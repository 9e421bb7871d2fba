#pragma once

#include "rlab/moebius.hpp"
#include "rlab/rng.hpp"

namespace rlab {

struct FuchsianParabolicSpec {
    double theta;  // [0, 2pi)
    double x;      // cot(eta) > 0
};

struct Elliptic2Spec {
    double w_abs;  // cos(alpha), [0, 1)
    double w_arg;
};

struct KleinianParabolicSpec {
    double t;       // |z0| = tan(alpha)
    double z0_arg;
    double lambda;  // cot(beta)
    double theta;
};

// TanUniform: arctan |z0| uniform on [0, pi/2]; TrueSpherical: z0 uniform for the area measure
enum class SamplerMode { TanUniform, TrueSpherical };

// [[1 + ix, x e^{i theta}], [x e^{-i theta}, 1 - ix]]
MoebiusMap matrix(const FuchsianParabolicSpec& s);
// (1/sqrt(1 - |w|^2)) [[i, i conj(w)], [-i w, -i]]
MoebiusMap matrix(const Elliptic2Spec& s);
// I + (e^{i theta} lambda / (t^2 + 1)) [[-t, e^{i eta} t^2], [-e^{-i eta}, t]]
MoebiusMap matrix(const KleinianParabolicSpec& s);
ComplexValue fixed_point(const KleinianParabolicSpec& s);

MoebiusMap sample_fuchsian(RngStream& rng);
FuchsianParabolicSpec sample_fuchsian_parabolic(RngStream& rng);
Elliptic2Spec sample_elliptic2(RngStream& rng);
KleinianParabolicSpec sample_kleinian_parabolic(RngStream& rng, SamplerMode mode = SamplerMode::TanUniform);
SpherePoint sample_sphere_uniform(RngStream& rng);

// uniform on (0, hi]: zero draws are redrawn
double uniform_nonzero(RngStream& rng, double hi);

}  // namespace rlab
