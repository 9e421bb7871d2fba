#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace rlab {

struct QuadratureSpec {
    double abs_tol = 1e-8;
    double rel_tol = 1e-8;
    int max_depth = 24;
};

struct QuadResult {
    double value;
    double est_error;
};

struct Histogram {
    std::vector<double> bin_edges;
    std::vector<std::uint64_t> counts;
    std::uint64_t total = 0;
};

// adaptive Gauss-Kronrod on a finite interval; NonConvergence when the error target is missed
QuadResult integrate(const std::function<double(double)>& f, double a, double b, const QuadratureSpec& q);

double pdf_abs_a(double x);
double pdf_xy(double s);
double pdf_sin2(double t);
double pdf_alpha(double s, const QuadratureSpec& q = {});

enum class FubiniOrder { OuterS, OuterT };

// Pr{x y sin^2(eta) >= 1}
QuadResult prob_fuchsian_discrete(const QuadratureSpec& q = {}, FubiniOrder order = FubiniOrder::OuterS);
QuadResult integral_log_arctanh(const QuadratureSpec& q = {});

struct MeanVariance {
    double mean;
    double variance;
};
MeanVariance expected_f0_parabolic();

Histogram build_histogram(std::span<const double> samples, int bins, double lo, double hi);

// arc length of isometric circles for the Z2-extension, eta, alpha in [0, pi/2]
double extension_arc_length(double eta, double alpha, double theta);

// -log(y) / (1 - y^2), continuous at y = 1
double log_ratio_kernel(double y);

}  // namespace rlab
