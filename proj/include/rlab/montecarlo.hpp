#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rlab/discreteness.hpp"
#include "rlab/rng.hpp"
#include "rlab/samplers.hpp"

namespace rlab {

enum class ExperimentId {
    FuchsianDiscrete,
    ExtensionDiscrete,
    Pingpong,
    SlHalfspace,
    KleinianNondiscrete,
    RileyExteriorArea,
    GammaClosedFormCheck,
};

std::string_view to_string(ExperimentId e);
ExperimentId experiment_from_string(std::string_view name);  // DomainError on unknown names
const std::vector<ExperimentId>& all_experiments();

struct ExperimentParams {
    BowditchParams bowditch;
    SamplerMode mode = SamplerMode::TanUniform;
    double closed_form_tol = 1e-9;
};

struct EstimateResult {
    double estimate = 0;
    std::int64_t n = 0;
    std::uint64_t seed = 0;
    std::int64_t shards = 1;
    double std_error = 0;
    double ci95_lo = 0;
    double ci95_hi = 0;
    std::optional<double> max_deviation;  // gamma-closed-form-check only
};

// trial i draws from RngStream(seed, i); shard s runs the trials i = s mod shards
EstimateResult run(ExperimentId e, std::int64_t n, std::uint64_t seed, std::int64_t shards = 1,
                   const ExperimentParams& p = {}, unsigned workers = 0);

EstimateResult bernoulli_estimate(std::int64_t successes, std::int64_t n);

// folded law: |gamma| = cot^2 b1 cot^2 b2 [sin^2 eta sin^2 a1 + cos^2 eta sin^2 a2]^2, uniform argument
ComplexValue kleinian_gamma_sample(RngStream& rng);

// commutator parameter of two sampled Kleinian parabolics in closed form
ComplexValue kleinian_gamma_closed_form(const KleinianParabolicSpec& f, const KleinianParabolicSpec& g);

}  // namespace rlab
