#include "rlab/riley.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

#include "rlab/errors.hpp"
#include "rlab/montecarlo.hpp"
#include "rlab/parallel.hpp"

namespace rlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSeamS = 0.9;  // |u| = 3

ExteriorStatus classify_point(ComplexValue u, const BowditchParams& p) {
    // u = 0 gives a cyclic group, never free
    if (u == 0.0) return ExteriorStatus::Exterior;
    return riley_exterior_test(u, p).status;
}

}  // namespace

ComplexValue RasterGrid::center(int col, int row) const {
    double dx = (region.re_hi - region.re_lo) / width;
    double dy = (region.im_hi - region.im_lo) / height;
    return {region.re_lo + (col + 0.5) * dx, region.im_hi - (row + 0.5) * dy};
}

RasterGrid raster(const Region& region, int width, int height, const BowditchParams& p, unsigned workers) {
    if (width < 1 || height < 1) throw DomainError("raster: dimensions must be positive");
    if (!(region.re_lo < region.re_hi) || !(region.im_lo < region.im_hi)) throw DomainError("raster: empty region");
    RasterGrid g;
    g.width = width;
    g.height = height;
    g.region = region;
    g.cells.assign(static_cast<std::size_t>(width) * height, ExteriorStatus::Inconclusive);
    parallel_for(height, workers, [&](std::size_t row) {
        for (int col = 0; col < width; ++col)
            g.cells[row * width + col] = classify_point(g.center(col, static_cast<int>(row)), p);
    });
    return g;
}

void write_pgm(const RasterGrid& g, std::ostream& os) {
    os << "P5\n" << g.width << ' ' << g.height << "\n255\n";
    for (ExteriorStatus s : g.cells) os.put(s == ExteriorStatus::Exterior ? char(0) : char(255));
}

void write_csv(const RasterGrid& g, std::ostream& os) {
    os << "re,im,status\n";
    os.precision(17);
    for (int row = 0; row < g.height; ++row)
        for (int col = 0; col < g.width; ++col) {
            ComplexValue u = g.center(col, row);
            os << u.real() << ',' << u.imag() << ',' << to_string(g.at(col, row)) << '\n';
        }
}

ComplexValue grid_cell_point_direct(int i_s, int i_arg, int resolution) {
    double s = (i_s + 0.5) / resolution;
    double th = 2 * kPi * (i_arg + 0.5) / resolution;
    return std::polar(std::sqrt(s / (1.0 - s)), th);
}

ComplexValue grid_cell_point_inverted(int i_s, int i_arg, int resolution) {
    double s = (i_s + 0.5) / resolution;
    double th = 2 * kPi * (i_arg + 0.5) / resolution;
    return 1.0 / std::polar(std::sqrt((1.0 - s) / s), -th);
}

ComplexValue grid_cell_point(int i_s, int i_arg, int resolution) {
    double s = (i_s + 0.5) / resolution;
    return s <= kSeamS ? grid_cell_point_direct(i_s, i_arg, resolution)
                       : grid_cell_point_inverted(i_s, i_arg, resolution);
}

double spherical_grid_integral(int resolution, const std::function<bool(ComplexValue)>& indicator, unsigned workers) {
    if (resolution < 1) throw DomainError("spherical_grid_integral: resolution must be >= 1");
    std::vector<std::int64_t> rows(resolution, 0);
    parallel_for(resolution, workers, [&](std::size_t i) {
        std::int64_t c = 0;
        for (int j = 0; j < resolution; ++j)
            if (indicator(grid_cell_point(static_cast<int>(i), j, resolution))) ++c;
        rows[i] = c;
    });
    std::int64_t hits = 0;
    for (auto c : rows) hits += c;
    return static_cast<double>(hits) / (static_cast<double>(resolution) * resolution);
}

AreaEstimate exterior_area(AreaMethod method, std::int64_t resolution_or_n, const BowditchParams& p,
                           std::uint64_t seed, unsigned workers) {
    if (resolution_or_n < 1) throw DomainError("exterior_area: resolution / n must be >= 1");
    AreaEstimate a;
    a.method = method;
    a.resolution_or_n = resolution_or_n;
    a.params = p;
    a.seed = seed;
    if (method == AreaMethod::GridQuadrature) {
        a.exterior_fraction = spherical_grid_integral(
            static_cast<int>(resolution_or_n),
            [&](ComplexValue u) { return classify_point(u, p) == ExteriorStatus::Exterior; }, workers);
    } else {
        ExperimentParams ep;
        ep.bowditch = p;
        unsigned w = resolve_workers(workers);
        EstimateResult r = run(ExperimentId::RileyExteriorArea, resolution_or_n, seed, w, ep, w);
        a.exterior_fraction = r.estimate;
        a.std_error = r.std_error;
    }
    return a;
}

const char* to_string(AreaMethod m) {
    return m == AreaMethod::GridQuadrature ? "GridQuadrature" : "SphericalMonteCarlo";
}

}  // namespace rlab
