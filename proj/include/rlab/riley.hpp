#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "rlab/discreteness.hpp"

namespace rlab {

struct Region {
    double re_lo, re_hi, im_lo, im_hi;
};

// row 0 is the top edge (im_hi)
struct RasterGrid {
    int width = 0;
    int height = 0;
    Region region{};
    std::vector<ExteriorStatus> cells;

    ExteriorStatus at(int col, int row) const { return cells[static_cast<std::size_t>(row) * width + col]; }
    ComplexValue center(int col, int row) const;
};

RasterGrid raster(const Region& region, int width, int height, const BowditchParams& p = {}, unsigned workers = 0);

// P5, Exterior = 0, Inconclusive = 255
void write_pgm(const RasterGrid& g, std::ostream& os);
// re,im,status
void write_csv(const RasterGrid& g, std::ostream& os);

enum class AreaMethod { GridQuadrature, SphericalMonteCarlo };

struct AreaEstimate {
    double exterior_fraction = 0;
    AreaMethod method = AreaMethod::GridQuadrature;
    std::int64_t resolution_or_n = 0;
    BowditchParams params;
    std::uint64_t seed = 0;
    double std_error = 0;  // Monte Carlo only
};

// equal-area cells in (s = |u|^2/(1+|u|^2), arg u); |u| > 3 goes through the 1/u chart
ComplexValue grid_cell_point(int i_s, int i_arg, int resolution);
ComplexValue grid_cell_point_direct(int i_s, int i_arg, int resolution);
ComplexValue grid_cell_point_inverted(int i_s, int i_arg, int resolution);

// normalized spherical integral of an indicator over resolution^2 equal-area cells
double spherical_grid_integral(int resolution, const std::function<bool(ComplexValue)>& indicator,
                               unsigned workers = 0);

AreaEstimate exterior_area(AreaMethod method, std::int64_t resolution_or_n, const BowditchParams& p = {},
                           std::uint64_t seed = 0, unsigned workers = 0);

const char* to_string(AreaMethod m);

}  // namespace rlab
