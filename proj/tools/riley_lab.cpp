#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "repro.hpp"
#include "rlab/analytic.hpp"
#include "rlab/errors.hpp"
#include "rlab/montecarlo.hpp"
#include "rlab/parallel.hpp"
#include "rlab/rigor.hpp"
#include "rlab/riley.hpp"
#include "rlab/samplers.hpp"

using namespace rlab;
using json = nlohmann::ordered_json;

namespace {

constexpr double kPi = std::numbers::pi;

struct UsageError : std::runtime_error {
    UsageError(const std::string& what, std::string hint) : std::runtime_error(what), hint(std::move(hint)) {}
    std::string hint;
};

std::vector<double> parse_list(const std::string& s, std::size_t n, const char* flag) {
    std::vector<double> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(std::string(flag) + ": cannot parse '" + s + "'", "expected " + std::to_string(n) +
                                                                                   " comma-separated numbers");
        }
    }
    if (v.size() != n)
        throw UsageError(std::string(flag) + ": expected " + std::to_string(n) + " values, got " + std::to_string(v.size()),
                         "example: " + std::string(flag) + (n == 2 ? " 0.5,1.2" : " -4,4,-4,4"));
    return v;
}

double parse_grid(const std::string& s) {
    double v = 0;
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos)
            v = std::stod(s);
        else
            v = std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1));
    } catch (const std::exception&) {
        v = 0;
    }
    if (!(v > 0) || !std::isfinite(v)) throw UsageError("--grid: cannot parse '" + s + "'", "use a fraction like 1/50");
    return v;
}

json cplx(ComplexValue z) { return json::array({z.real(), z.imag()}); }

json params_json(const BowditchParams& p) {
    return {{"depth", p.max_depth}, {"budget", p.node_budget}, {"word_budget", p.word_budget}};
}

json estimate_json(const std::string& name, const EstimateResult& r, const ExperimentParams& p) {
    json j{{"experiment", name},     {"estimate", r.estimate}, {"n", r.n},
           {"seed", r.seed},         {"shards", r.shards},     {"std_error", r.std_error},
           {"ci95", {r.ci95_lo, r.ci95_hi}}};
    if (r.max_deviation) j["max_deviation"] = *r.max_deviation;
    json params = params_json(p.bowditch);
    params["sampler_mode"] = p.mode == SamplerMode::TanUniform ? "tan" : "spherical";
    j["parameters"] = params;
    return j;
}

void add_bowditch_flags(CLI::App* c, BowditchParams& p) {
    c->add_option("--depth", p.max_depth, "Markoff tree depth cap")->capture_default_str()->check(CLI::PositiveNumber);
    c->add_option("--budget", p.node_budget, "Markoff tree node budget")->capture_default_str()->check(CLI::PositiveNumber);
    c->add_option("--word-budget", p.word_budget, "Shimizu word search pops (0 disables)")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
}

void matrix_cols(json& row, const MoebiusMap& m) {
    const ComplexValue e[4] = {m.a(), m.b(), m.c(), m.d()};
    const char* names[4] = {"a", "b", "c", "d"};
    for (int i = 0; i < 4; ++i) {
        row[std::string(names[i]) + "_re"] = e[i].real();
        row[std::string(names[i]) + "_im"] = e[i].imag();
    }
}

void print_rows(const std::vector<json>& rows, const std::string& format) {
    if (format == "json") {
        std::cout << json(rows).dump(2) << '\n';
        return;
    }
    if (rows.empty()) return;
    bool first = true;
    for (auto& [k, v] : rows.front().items()) {
        std::cout << (first ? "" : ",") << k;
        first = false;
    }
    std::cout << '\n';
    for (const json& r : rows) {
        first = true;
        for (auto& [k, v] : r.items()) {
            std::cout << (first ? "" : ",") << v.dump();
            first = false;
        }
        std::cout << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"riley_lab: random Moebius groups, discreteness tests and Riley slice estimates"};
    app.require_subcommand(1);
    unsigned workers = 0;
    app.add_option("--workers", workers, "worker threads (default: RILEY_LAB_WORKERS or all cores)");

    // sample
    auto* sample = app.add_subcommand("sample", "draw random generators");
    std::string kind, format = "csv", mode = "tan";
    std::int64_t n = 10;
    std::uint64_t seed = 1;
    sample->add_option("--kind", kind, "fuchsian|fuchsian-parabolic|elliptic2|kleinian-parabolic|sphere")
        ->required()
        ->check(CLI::IsMember({"fuchsian", "fuchsian-parabolic", "elliptic2", "kleinian-parabolic", "sphere"}));
    sample->add_option("--n", n)->capture_default_str()->check(CLI::PositiveNumber);
    sample->add_option("--seed", seed)->capture_default_str();
    sample->add_option("--format", format)->capture_default_str()->check(CLI::IsMember({"csv", "json"}));
    sample->add_option("--mode", mode, "kleinian fixed point law")->capture_default_str()->check(CLI::IsMember({"tan", "spherical"}));

    // estimate
    auto* estimate = app.add_subcommand("estimate", "Monte Carlo experiment");
    std::string experiment;
    std::int64_t en = 1000000, shards = 0;
    std::string eformat = "json";
    ExperimentParams ep;
    estimate->add_option("--experiment", experiment)->required();
    estimate->add_option("--n", en)->capture_default_str()->check(CLI::PositiveNumber);
    estimate->add_option("--seed", seed)->capture_default_str();
    estimate->add_option("--shards", shards, "work partitions (default: worker count)")->check(CLI::NonNegativeNumber);
    estimate->add_option("--format", eformat)->capture_default_str()->check(CLI::IsMember({"csv", "json"}));
    estimate->add_option("--mode", mode)->capture_default_str()->check(CLI::IsMember({"tan", "spherical"}));
    add_bowditch_flags(estimate, ep.bowditch);

    // pdf
    auto* pdf = app.add_subcommand("pdf", "evaluate a density");
    std::string which;
    double at = 0;
    pdf->add_option("--which", which)->required()->check(CLI::IsMember({"abs-a", "xy", "sin2", "alpha"}));
    pdf->add_option("--at", at)->required();

    // integrate
    auto* integ = app.add_subcommand("integrate", "special integrals");
    std::string order = "outer-s";
    integ->add_option("--which", which)->required()->check(CLI::IsMember({"prob-fuchsian", "log-arctanh"}));
    integ->add_option("--order", order, "Fubini order for prob-fuchsian")->capture_default_str()->check(CLI::IsMember({"outer-s", "outer-t"}));

    // hist
    auto* hist = app.add_subcommand("hist", "histogram data as CSV bin_lo,bin_hi,count");
    std::int64_t hn = 1000000;
    int bins = 50;
    std::string range;
    hist->add_option("--which", which)->required()->check(CLI::IsMember({"alpha", "arc-length", "kleinian-alpha", "abs-a"}));
    hist->add_option("--n", hn)->capture_default_str()->check(CLI::PositiveNumber);
    hist->add_option("--bins", bins)->capture_default_str()->check(CLI::PositiveNumber);
    hist->add_option("--range", range, "lo,hi");
    hist->add_option("--seed", seed)->capture_default_str();

    // verify
    auto* verify = app.add_subcommand("verify", "certified bounds");
    auto* ainf = verify->add_subcommand("a-inf-2", "enclosure of the Z2-extension discreteness probability");
    verify->require_subcommand(1);
    std::string grid = "1/20";
    double margin = 1e-3;
    int max_level = kDefaultMaxLevel;
    std::int64_t box_cap = kDefaultBoxCap;
    ainf->add_option("--grid", grid)->capture_default_str();
    ainf->add_option("--margin", margin)->capture_default_str()->check(CLI::PositiveNumber);
    ainf->add_option("--max-level", max_level)->capture_default_str()->check(CLI::Range(0, 8));
    ainf->add_option("--box-cap", box_cap)->capture_default_str()->check(CLI::PositiveNumber);

    // riley
    auto* riley = app.add_subcommand("riley", "Riley slice exterior");
    riley->require_subcommand(1);
    BowditchParams bp;
    auto* rtest = riley->add_subcommand("test", "exterior test for one u");
    std::string u_str;
    rtest->add_option("--u", u_str, "RE,IM")->required();
    add_bowditch_flags(rtest, bp);
    auto* rraster = riley->add_subcommand("raster", "classify a grid of u values");
    std::string region = "-4,4,-4,4", size = "800x800", out = "riley.pgm", csv_out;
    rraster->add_option("--region", region, "re_lo,re_hi,im_lo,im_hi")->capture_default_str();
    rraster->add_option("--size", size, "WxH")->capture_default_str();
    rraster->add_option("--out", out, "P5 graymap path")->capture_default_str();
    rraster->add_option("--csv", csv_out, "optional CSV path");
    add_bowditch_flags(rraster, bp);
    auto* rarea = riley->add_subcommand("area", "spherical area fraction of the exterior");
    std::string method = "grid";
    std::int64_t resolution = 512, an = 100000;
    rarea->add_option("--method", method)->capture_default_str()->check(CLI::IsMember({"grid", "mc"}));
    rarea->add_option("--resolution", resolution, "grid cells per axis")->capture_default_str()->check(CLI::PositiveNumber);
    rarea->add_option("--n", an, "Monte Carlo draws")->capture_default_str()->check(CLI::PositiveNumber);
    rarea->add_option("--seed", seed)->capture_default_str();
    add_bowditch_flags(rarea, bp);

    // repro
    auto* repro = app.add_subcommand("repro", "reproduce the reference values at desk scale");
    std::string target = "all";
    std::string rformat = "table";
    repro->add_option("name", target, "all or one of the registered checks")->capture_default_str();
    repro->add_option("--format", rformat)->capture_default_str()->check(CLI::IsMember({"table", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\nhint: run with --help for the list of flags\n";
        return 1;
    }

    try {
        if (workers == 0) workers = default_workers();
        SamplerMode smode = mode == "tan" ? SamplerMode::TanUniform : SamplerMode::TrueSpherical;

        if (*sample) {
            std::vector<json> rows;
            for (std::int64_t i = 0; i < n; ++i) {
                RngStream rng(seed, static_cast<std::uint64_t>(i));
                json row;
                if (kind == "fuchsian") {
                    matrix_cols(row, sample_fuchsian(rng));
                } else if (kind == "fuchsian-parabolic") {
                    FuchsianParabolicSpec s = sample_fuchsian_parabolic(rng);
                    row["theta"] = s.theta;
                    row["x"] = s.x;
                    matrix_cols(row, matrix(s));
                } else if (kind == "elliptic2") {
                    Elliptic2Spec s = sample_elliptic2(rng);
                    row["w_abs"] = s.w_abs;
                    row["w_arg"] = s.w_arg;
                    matrix_cols(row, matrix(s));
                } else if (kind == "kleinian-parabolic") {
                    KleinianParabolicSpec s = sample_kleinian_parabolic(rng, smode);
                    row["t"] = s.t;
                    row["z0_arg"] = s.z0_arg;
                    row["lambda"] = s.lambda;
                    row["theta"] = s.theta;
                    matrix_cols(row, matrix(s));
                } else {
                    ComplexValue z = sample_sphere_uniform(rng).value();
                    row["re"] = z.real();
                    row["im"] = z.imag();
                }
                rows.push_back(std::move(row));
            }
            print_rows(rows, format);
            return 0;
        }

        if (*estimate) {
            ExperimentId id;
            try {
                id = experiment_from_string(experiment);
            } catch (const DomainError& e) {
                std::string names;
                for (ExperimentId x : all_experiments()) names += std::string(names.empty() ? "" : ", ") + std::string(to_string(x));
                throw UsageError(e.what(), "known experiments: " + names);
            }
            ep.mode = smode;
            if (shards == 0) shards = workers;
            EstimateResult r = run(id, en, seed, shards, ep, workers);
            json j = estimate_json(experiment, r, ep);
            if (eformat == "json") {
                std::cout << j.dump(2) << '\n';
            } else {
                j["ci95_lo"] = r.ci95_lo;
                j["ci95_hi"] = r.ci95_hi;
                j.erase("ci95");
                j.erase("parameters");
                j["depth"] = ep.bowditch.max_depth;
                j["budget"] = ep.bowditch.node_budget;
                j["word_budget"] = ep.bowditch.word_budget;
                print_rows({j}, "csv");
            }
            return 0;
        }

        if (*pdf) {
            double v = 0;
            if (which == "abs-a") v = pdf_abs_a(at);
            else if (which == "xy") v = pdf_xy(at);
            else if (which == "sin2") v = pdf_sin2(at);
            else v = pdf_alpha(at);
            std::cout << json{{"which", which}, {"at", at}, {"value", v}}.dump(2) << '\n';
            return 0;
        }

        if (*integ) {
            QuadResult r = which == "log-arctanh"
                               ? integral_log_arctanh()
                               : prob_fuchsian_discrete({}, order == "outer-s" ? FubiniOrder::OuterS : FubiniOrder::OuterT);
            json j{{"which", which}, {"value", r.value}, {"est_error", r.est_error}};
            if (which == "prob-fuchsian") j["order"] = order;
            std::cout << j.dump(2) << '\n';
            return 0;
        }

        if (*hist) {
            double lo = 0, hi = 4;
            if (which == "arc-length") hi = kPi / 2;
            if (which == "abs-a") lo = 1, hi = 5;
            if (!range.empty()) {
                auto r = parse_list(range, 2, "--range");
                lo = r[0], hi = r[1];
                if (!(lo < hi)) throw UsageError("--range: lo must be below hi", "example: --range 0,4");
            }
            std::vector<double> xs(hn);
            parallel_for(static_cast<std::size_t>(hn), workers, [&](std::size_t i) {
                RngStream rng(seed, i);
                if (which == "alpha") {
                    FuchsianParabolicSpec f = sample_fuchsian_parabolic(rng), g = sample_fuchsian_parabolic(rng);
                    double s = std::sin((f.theta - g.theta) / 2);
                    xs[i] = f.x * g.x * s * s;
                } else if (which == "arc-length") {
                    double eta = rng.uniform(0, kPi / 2), alpha = rng.uniform(0, kPi / 2), th = rng.uniform(0, 2 * kPi);
                    xs[i] = extension_arc_length(eta, alpha, th);
                } else if (which == "kleinian-alpha") {
                    xs[i] = std::sqrt(std::abs(kleinian_gamma_sample(rng))) / 4;
                } else {
                    xs[i] = std::abs(sample_fuchsian(rng).a());
                }
            });
            Histogram h = build_histogram(xs, bins, lo, hi);
            std::cout << "bin_lo,bin_hi,count\n";
            std::cout.precision(10);
            for (int i = 0; i < bins; ++i)
                std::cout << h.bin_edges[i] << ',' << h.bin_edges[i + 1] << ',' << h.counts[i] << '\n';
            return 0;
        }

        if (*ainf) {
            double g = parse_grid(grid);
            auto t0 = std::chrono::steady_clock::now();
            CertifiedInterval c = a_inf2_bounds(g, margin, max_level, workers, box_cap);
            double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            json j{{"lower", c.lower},
                   {"upper", c.upper},
                   {"boxes_admitted", c.boxes_admitted},
                   {"boxes_rejected", c.boxes_rejected},
                   {"grid_side", c.grid_side},
                   {"grid", grid},
                   {"margin", margin},
                   {"max_level", c.max_level},
                   {"contains_mc_value", c.lower <= 0.595 && 0.595 <= c.upper},
                   {"timing", {{"elapsed", elapsed}}}};
            std::cout << j.dump(2) << '\n';
            return 0;
        }

        if (*rtest) {
            auto u = parse_list(u_str, 2, "--u");
            ComplexValue z(u[0], u[1]);
            if (z == 0.0) throw UsageError("--u: u = 0 is degenerate", "pick any nonzero u");
            ExteriorVerdict v = riley_exterior_test(z, bp);
            json j{{"u", cplx(z)}, {"status", to_string(v.status)}};
            if (v.witness) {
                j["witness_source"] = to_string(v.witness->source);
                j["witness_pq"] = v.witness->pq ? json::array({v.witness->pq->p, v.witness->pq->q}) : json(nullptr);
                j["witness_value"] = cplx(v.witness->value);
                if (!v.witness->word.empty()) {
                    j["witness_word"] = v.witness->word;
                    j["witness_word_first"] = v.witness->word_starts_with_x ? "X" : "Y";
                }
            } else {
                j["witness_pq"] = nullptr;
                j["witness_value"] = nullptr;
            }
            j["nodes"] = v.nodes_explored;
            j["parameters"] = params_json(bp);
            std::cout << j.dump(2) << '\n';
            return 0;
        }

        if (*rraster) {
            auto r = parse_list(region, 4, "--region");
            int w = 0, h = 0;
            if (std::sscanf(size.c_str(), "%dx%d", &w, &h) != 2 || w < 1 || h < 1)
                throw UsageError("--size: cannot parse '" + size + "'", "example: --size 800x800");
            Region reg{r[0], r[1], r[2], r[3]};
            if (!(reg.re_lo < reg.re_hi) || !(reg.im_lo < reg.im_hi))
                throw UsageError("--region: empty region", "order is re_lo,re_hi,im_lo,im_hi");
            RasterGrid g = raster(reg, w, h, bp, workers);
            std::ofstream f(out, std::ios::binary);
            if (!f) throw UsageError("--out: cannot open '" + out + "'", "check the directory exists");
            write_pgm(g, f);
            if (!csv_out.empty()) {
                std::ofstream c(csv_out);
                if (!c) throw UsageError("--csv: cannot open '" + csv_out + "'", "check the directory exists");
                write_csv(g, c);
            }
            std::int64_t ext = std::count(g.cells.begin(), g.cells.end(), ExteriorStatus::Exterior);
            json j{{"out", out}, {"width", w}, {"height", h}, {"region", r}, {"exterior_cells", ext},
                   {"parameters", params_json(bp)}};
            std::cout << j.dump(2) << '\n';
            return 0;
        }

        if (*rarea) {
            AreaMethod m = method == "grid" ? AreaMethod::GridQuadrature : AreaMethod::SphericalMonteCarlo;
            AreaEstimate a = exterior_area(m, m == AreaMethod::GridQuadrature ? resolution : an, bp, seed, workers);
            json j{{"exterior_fraction", a.exterior_fraction},
                   {"exterior_area", a.exterior_fraction * 4 * kPi},
                   {"method", to_string(a.method)}};
            if (m == AreaMethod::GridQuadrature) {
                j["resolution"] = a.resolution_or_n;
            } else {
                j["n"] = a.resolution_or_n;
                j["seed"] = a.seed;
                j["std_error"] = a.std_error;
            }
            j["parameters"] = params_json(a.params);
            std::cout << j.dump(2) << '\n';
            return 0;
        }

        if (*repro) {
            std::vector<tools::ReproRow> rows;
            try {
                rows = tools::run_repro(target, workers);
            } catch (const DomainError& e) {
                std::string names;
                for (const auto& x : tools::repro_names()) names += (names.empty() ? "" : ", ") + x;
                throw UsageError(e.what(), "known checks: all, " + names);
            }
            bool ok = true;
            if (rformat == "json") {
                json arr = json::array();
                for (const auto& r : rows)
                    arr.push_back({{"name", r.name}, {"reference", r.reference}, {"computed", r.computed},
                                   {"tolerance", r.tolerance}, {"pass", r.pass}, {"command", r.command}});
                std::cout << arr.dump(2) << '\n';
            } else {
                std::printf("%-22s %-22s %-22s %-28s %s\n", "name", "reference", "computed", "tolerance", "result");
                for (const auto& r : rows)
                    std::printf("%-22s %-22s %-22s %-28s %s\n", r.name.c_str(), r.reference.c_str(), r.computed.c_str(),
                                r.tolerance.c_str(), r.pass ? "pass" : "FAIL");
            }
            for (const auto& r : rows) ok = ok && r.pass;
            return ok ? 0 : 2;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\nhint: " << e.hint << '\n';
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\nhint: check the argument ranges with --help\n";
        return 1;
    } catch (const DegenerateError& e) {
        std::cerr << "error: " << e.what() << "\nhint: choose a non-degenerate input\n";
        return 1;
    } catch (const NonConvergence& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\nhint: raise --box-cap or use a coarser --grid\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
