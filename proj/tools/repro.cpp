#include "repro.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>

#include "rlab/analytic.hpp"
#include "rlab/errors.hpp"
#include "rlab/montecarlo.hpp"
#include "rlab/rigor.hpp"
#include "rlab/riley.hpp"

namespace rlab::tools {

namespace {

constexpr double kPi = std::numbers::pi;

std::string num(double v, int prec = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", prec, v);
    return buf;
}

std::string tol_str(double t) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", t);
    return buf;
}

ReproRow near(std::string name, double reference, double got, double tol, std::string cmd, int prec = 6) {
    return {std::move(name), num(reference, prec), num(got, prec), "+-" + tol_str(tol), std::move(cmd),
            std::abs(got - reference) <= tol};
}

ReproRow mc_row(const char* name, ExperimentId e, double reference, double tol, std::int64_t n, std::uint64_t seed,
                unsigned workers) {
    EstimateResult r = run(e, n, seed, workers, {}, workers);
    return near(name, reference, r.estimate, tol,
                "riley_lab estimate --experiment " + std::string(to_string(e)) + " --n " + std::to_string(n) +
                    " --seed " + std::to_string(seed),
                4);
}

struct Entry {
    const char* name;
    std::function<ReproRow(unsigned)> fn;
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> r = {
        {"prob-fuchsian",
         [](unsigned) {
             return near("prob-fuchsian", 0.314833, prob_fuchsian_discrete().value, 5e-4,
                         "riley_lab integrate --which prob-fuchsian");
         }},
        {"fuchsian-discrete",
         [](unsigned w) { return mc_row("fuchsian-discrete", ExperimentId::FuchsianDiscrete, 0.3148, 0.003, 1000000, 1, w); }},
        {"log-arctanh",
         [](unsigned) {
             return near("log-arctanh", -0.690591, integral_log_arctanh().value, 1e-5,
                         "riley_lab integrate --which log-arctanh");
         }},
        {"f0-moments",
         [](unsigned) {
             MeanVariance mv = expected_f0_parabolic();
             ReproRow row = near("f0-moments", 4 / (3 * kPi), mv.mean, 1e-12, "riley_lab repro f0-moments", 10);
             row.pass = row.pass && std::abs(mv.variance - (0.25 - 16 / (9 * kPi * kPi))) <= 1e-12;
             return row;
         }},
        {"a-inf-2",
         [](unsigned w) {
             CertifiedInterval c = a_inf2_bounds(1.0 / 20, 1e-3, kDefaultMaxLevel, w);
             return ReproRow{"a-inf-2", "[0.59, 0.6] ~ 0.595", "[" + num(c.lower, 4) + ", " + num(c.upper, 4) + "]",
                             "contains 0.595 (grid 1/20)", "riley_lab verify a-inf-2 --grid 1/20 --margin 0.001",
                             c.lower <= 0.595 && 0.595 <= c.upper};
         }},
        {"extension-discrete",
         [](unsigned w) { return mc_row("extension-discrete", ExperimentId::ExtensionDiscrete, 0.595, 0.005, 1000000, 1, w); }},
        {"pingpong", [](unsigned w) { return mc_row("pingpong", ExperimentId::Pingpong, 1.0 / 6, 0.002, 1000000, 1, w); }},
        {"sl-halfspace",
         [](unsigned w) { return mc_row("sl-halfspace", ExperimentId::SlHalfspace, 0.5, 0.002, 1000000, 1, w); }},
        {"kleinian-nondiscrete",
         [](unsigned w) {
             return mc_row("kleinian-nondiscrete", ExperimentId::KleinianNondiscrete, 0.768, 0.02, 100000, 1, w);
         }},
        {"riley-exterior-area",
         [](unsigned w) {
             AreaEstimate a = exterior_area(AreaMethod::SphericalMonteCarlo, 100000, {}, 1, w);
             return near("riley-exterior-area", 0.779, a.exterior_fraction, 0.015,
                         "riley_lab riley area --method mc --n 100000 --seed 1", 4);
         }},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& repro_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const Entry& e : registry()) v.emplace_back(e.name);
        return v;
    }();
    return names;
}

std::vector<ReproRow> run_repro(const std::string& which, unsigned workers) {
    std::vector<ReproRow> out;
    for (const Entry& e : registry())
        if (which.empty() || which == "all" || which == e.name) out.push_back(e.fn(workers));
    if (out.empty()) throw DomainError("unknown repro check '" + which + "'");
    return out;
}

}  // namespace rlab::tools
