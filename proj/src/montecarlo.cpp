#include "rlab/montecarlo.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "rlab/errors.hpp"
#include "rlab/parallel.hpp"

namespace rlab {

namespace {

constexpr double kPi = std::numbers::pi;

struct Name {
    ExperimentId id;
    std::string_view name;
};
constexpr std::array<Name, 7> kNames{{
    {ExperimentId::FuchsianDiscrete, "fuchsian-discrete"},
    {ExperimentId::ExtensionDiscrete, "extension-discrete"},
    {ExperimentId::Pingpong, "pingpong"},
    {ExperimentId::SlHalfspace, "sl-halfspace"},
    {ExperimentId::KleinianNondiscrete, "kleinian-nondiscrete"},
    {ExperimentId::RileyExteriorArea, "riley-exterior-area"},
    {ExperimentId::GammaClosedFormCheck, "gamma-closed-form-check"},
}};

double real_part_clamped(ComplexValue g) { return std::max(0.0, g.real()); }

bool trial(ExperimentId e, RngStream& rng, const ExperimentParams& p, double& dev) {
    switch (e) {
        case ExperimentId::FuchsianDiscrete: {
            MoebiusMap f = matrix(sample_fuchsian_parabolic(rng));
            MoebiusMap g = matrix(sample_fuchsian_parabolic(rng));
            return fuchsian_two_parabolic_discrete(real_part_clamped(commutator_gamma(f, g)));
        }
        case ExperimentId::ExtensionDiscrete: {
            MoebiusMap f = matrix(sample_fuchsian_parabolic(rng));
            MoebiusMap phi = matrix(sample_elliptic2(rng));
            return real_part_clamped(commutator_gamma(f, phi)) >= 4.0;
        }
        case ExperimentId::Pingpong: {
            double ef = rng.uniform(0.0, kPi / 2);
            double eg = rng.uniform(0.0, kPi / 2);
            double ang = rng.uniform(0.0, kPi);
            return pingpong_disjoint(ef, eg, ang);
        }
        case ExperimentId::SlHalfspace: {
            KleinianParabolicSpec f = sample_kleinian_parabolic(rng, p.mode);
            KleinianParabolicSpec g = sample_kleinian_parabolic(rng, p.mode);
            return f.lambda * g.lambda < 1.0;
        }
        case ExperimentId::KleinianNondiscrete:
            return riley_membership_for_gamma(kleinian_gamma_sample(rng), p.bowditch).status ==
                   ExteriorStatus::Exterior;
        case ExperimentId::RileyExteriorArea:
            return riley_exterior_test(sample_sphere_uniform(rng).value(), p.bowditch).status ==
                   ExteriorStatus::Exterior;
        case ExperimentId::GammaClosedFormCheck: {
            KleinianParabolicSpec f = sample_kleinian_parabolic(rng, p.mode);
            KleinianParabolicSpec g = sample_kleinian_parabolic(rng, p.mode);
            ComplexValue gm = commutator_gamma(matrix(f), matrix(g));
            ComplexValue gc = kleinian_gamma_closed_form(f, g);
            dev = std::abs(gm - gc) / std::max(1.0, std::abs(gc));
            return dev <= p.closed_form_tol;
        }
    }
    return false;
}

}  // namespace

std::string_view to_string(ExperimentId e) {
    for (const Name& n : kNames)
        if (n.id == e) return n.name;
    return "?";
}

ExperimentId experiment_from_string(std::string_view name) {
    for (const Name& n : kNames)
        if (n.name == name) return n.id;
    throw DomainError("unknown experiment '" + std::string(name) + "'");
}

const std::vector<ExperimentId>& all_experiments() {
    static const std::vector<ExperimentId> v = [] {
        std::vector<ExperimentId> out;
        for (const Name& n : kNames) out.push_back(n.id);
        return out;
    }();
    return v;
}

EstimateResult bernoulli_estimate(std::int64_t successes, std::int64_t n) {
    EstimateResult r;
    r.n = n;
    double p = static_cast<double>(successes) / static_cast<double>(n);
    r.estimate = p;
    r.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(n));
    r.ci95_lo = std::max(0.0, p - 1.96 * r.std_error);
    r.ci95_hi = std::min(1.0, p + 1.96 * r.std_error);
    return r;
}

EstimateResult run(ExperimentId e, std::int64_t n, std::uint64_t seed, std::int64_t shards, const ExperimentParams& p,
                   unsigned workers) {
    if (n < 1) throw DomainError("run: n must be >= 1");
    if (shards < 1) throw DomainError("run: shards must be >= 1");
    struct Acc {
        std::int64_t hits = 0;
        double dev = 0;
    };
    std::vector<Acc> acc(shards);
    parallel_for(static_cast<std::size_t>(shards), workers, [&](std::size_t s) {
        Acc& a = acc[s];
        for (std::int64_t i = static_cast<std::int64_t>(s); i < n; i += shards) {
            RngStream rng(seed, static_cast<std::uint64_t>(i));
            double dev = 0;
            if (trial(e, rng, p, dev)) ++a.hits;
            a.dev = std::max(a.dev, dev);
        }
    });
    std::int64_t hits = 0;
    double dev = 0;
    for (const Acc& a : acc) {
        hits += a.hits;
        dev = std::max(dev, a.dev);
    }
    EstimateResult r = bernoulli_estimate(hits, n);
    r.seed = seed;
    r.shards = shards;
    if (e == ExperimentId::GammaClosedFormCheck) r.max_deviation = dev;
    return r;
}

ComplexValue kleinian_gamma_sample(RngStream& rng) {
    for (;;) {
        double b1 = uniform_nonzero(rng, kPi / 2), b2 = uniform_nonzero(rng, kPi / 2);
        double a1 = rng.uniform(0.0, kPi / 2), a2 = rng.uniform(0.0, kPi / 2);
        double eta = rng.uniform(0.0, kPi / 2);
        double theta = rng.uniform(0.0, 2 * kPi);
        double l = (std::cos(b1) / std::sin(b1)) * (std::cos(b2) / std::sin(b2));
        double se = std::sin(eta), ce = std::cos(eta), s1 = std::sin(a1), s2 = std::sin(a2);
        double bracket = se * se * s1 * s1 + ce * ce * s2 * s2;
        double mod = l * l * bracket * bracket;
        if (mod > 0.0) return std::polar(mod, theta);
    }
}

ComplexValue kleinian_gamma_closed_form(const KleinianParabolicSpec& f, const KleinianParabolicSpec& g) {
    double half = 0.5 * (f.z0_arg - g.z0_arg);
    ComplexValue k = f.t * std::polar(1.0, half) - g.t * std::polar(1.0, -half);
    ComplexValue k2 = k * k;
    double l = f.lambda * g.lambda;
    double d1 = 1.0 + f.t * f.t, d2 = 1.0 + g.t * g.t;
    return (l * l) * std::polar(1.0, 2.0 * (f.theta + g.theta)) * (k2 * k2) / (d1 * d1 * d2 * d2);
}

}  // namespace rlab
