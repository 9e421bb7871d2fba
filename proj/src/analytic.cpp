#include "rlab/analytic.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <queue>
#include <string>

#include "rlab/errors.hpp"

namespace rlab {

namespace {

constexpr double kPi = std::numbers::pi;
using GK = boost::math::quadrature::gauss_kronrod<double, 15>;

void check_spec(const QuadratureSpec& q) {
    if (!(q.abs_tol > 0) || !(q.rel_tol > 0) || q.max_depth < 1)
        throw DomainError("QuadratureSpec: tolerances must be positive and max_depth >= 1");
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b, const QuadratureSpec& q) {
    check_spec(q);
    // global adaptive bisection over single G7K15 panels; Boost reports a relative error for the top level only
    struct Panel {
        double a, b, value, err;
        int depth;
        bool operator<(const Panel& o) const { return err < o.err; }
    };
    auto panel = [&f](double lo, double hi, int depth) {
        double rel = 0, l1 = 0;
        double v = GK::integrate(f, lo, hi, 0, 0.0, &rel, &l1);
        return Panel{lo, hi, v, rel * l1, depth};
    };
    std::priority_queue<Panel> heap;
    Panel first = panel(a, b, 0);
    heap.push(first);
    double value = first.value, err = first.err;
    const std::size_t max_panels = std::size_t{1} << 16;
    while (true) {
        if (!std::isfinite(value)) throw NonConvergence("quadrature: non-finite value");
        if (err <= std::max(q.abs_tol, q.rel_tol * std::abs(value))) break;
        Panel worst = heap.top();
        if (worst.depth >= q.max_depth || heap.size() >= max_panels)
            throw NonConvergence("quadrature: error estimate " + std::to_string(err) +
                                 " exceeds tolerance after max_depth " + std::to_string(q.max_depth));
        heap.pop();
        double mid = 0.5 * (worst.a + worst.b);
        Panel l = panel(worst.a, mid, worst.depth + 1), r = panel(mid, worst.b, worst.depth + 1);
        value += l.value + r.value - worst.value;
        err += l.err + r.err - worst.err;
        heap.push(l);
        heap.push(r);
    }
    // resum to shed the drift of the running updates
    value = 0, err = 0;
    for (; !heap.empty(); heap.pop()) value += heap.top().value, err += heap.top().err;
    return {value, err};
}

double log_ratio_kernel(double y) {
    double e = 1.0 - y;
    if (std::abs(e) < 1e-5) return (1.0 + e / 2 + e * e / 3) / (2.0 - e);
    return -std::log(y) / (1.0 - y * y);
}

double pdf_abs_a(double x) {
    if (!(x > 1.0)) throw DomainError("pdf_abs_a: requires x > 1");
    return (2.0 / kPi) / (x * std::sqrt(x * x - 1.0));
}

double pdf_xy(double s) {
    if (!(s > 0.0)) throw DomainError("pdf_xy: requires s > 0");
    // log(s)/(s^2 - 1) = L(1/s) / s^2
    return (4.0 / (kPi * kPi)) * log_ratio_kernel(1.0 / s) / (s * s);
}

double pdf_sin2(double t) {
    if (!(t > 0.0 && t < 1.0)) throw DomainError("pdf_sin2: requires 0 < t < 1");
    return (1.0 / kPi) / std::sqrt(t * (1.0 - t));
}

double pdf_alpha(double s, const QuadratureSpec& q) {
    if (!(s > 0.0)) throw DomainError("pdf_alpha: requires s > 0");
    // t = sin^2 u turns sqrt(t/(1-t)) dt into 2 sin^2 u du
    auto f = [s](double u) {
        double t = std::sin(u) * std::sin(u);
        return 2.0 * t * log_ratio_kernel(t / s) / (s * s);
    };
    double v;
    if (s < 1.0) {
        double us = std::asin(std::sqrt(s));
        v = integrate(f, 0.0, us, q).value + integrate(f, us, kPi / 2, q).value;
    } else {
        v = integrate(f, 0.0, kPi / 2, q).value;
    }
    return (4.0 / (kPi * kPi * kPi)) * v;
}

QuadResult prob_fuchsian_discrete(const QuadratureSpec& q, FubiniOrder order) {
    // s = 1/v on [1, inf): log(s/t)/(s^2 - t^2) ds = L(v t) dv; then v = w^2 tames the log at v = 0
    auto h = [](double u, double w) {
        double t = std::sin(u) * std::sin(u);
        return 4.0 * w * t * log_ratio_kernel(w * w * t);
    };
    QuadratureSpec inner = q;
    inner.abs_tol = q.abs_tol / 100;
    inner.rel_tol = q.rel_tol / 100;
    QuadResult r;
    if (order == FubiniOrder::OuterS) {
        r = integrate([&](double v) { return integrate([&](double u) { return h(u, v); }, 0.0, kPi / 2, inner).value; },
                      0.0, 1.0, q);
    } else {
        r = integrate([&](double u) { return integrate([&](double v) { return h(u, v); }, 0.0, 1.0, inner).value; },
                      0.0, kPi / 2, q);
    }
    double k = 4.0 / (kPi * kPi * kPi);
    return {k * r.value, k * r.est_error};
}

QuadResult integral_log_arctanh(const QuadratureSpec& q) {
    // t = sin^2 u: dt / sqrt(t(1-t)) = 2 du, arctanh(sin^2 u) = log1p(sin^2 u)/2 - log(cos u)
    auto f = [](double u) {
        double s = std::sin(u), c = std::cos(u);
        if (s <= 0.0 || c <= 0.0) return 0.0;
        return 4.0 * std::log(s) * (0.5 * std::log1p(s * s) - std::log(c));
    };
    QuadResult a = integrate(f, 0.0, kPi / 4, q);
    QuadResult b = integrate(f, kPi / 4, kPi / 2, q);
    return {a.value + b.value, a.est_error + b.est_error};
}

MeanVariance expected_f0_parabolic() {
    return {4.0 / (3.0 * kPi), 0.25 - 16.0 / (9.0 * kPi * kPi)};
}

Histogram build_histogram(std::span<const double> samples, int bins, double lo, double hi) {
    if (bins < 1 || !(lo < hi)) throw DomainError("build_histogram: need bins >= 1 and lo < hi");
    Histogram h;
    h.bin_edges.resize(bins + 1);
    for (int i = 0; i <= bins; ++i) h.bin_edges[i] = lo + (hi - lo) * i / bins;
    h.counts.assign(bins, 0);
    h.total = samples.size();
    for (double x : samples) {
        if (!(x >= lo && x <= hi)) continue;
        int k = static_cast<int>((x - lo) / (hi - lo) * bins);
        if (k >= bins) k = bins - 1;
        ++h.counts[k];
    }
    return h;
}

double extension_arc_length(double eta, double alpha, double theta) {
    double ca = std::cos(alpha), sa = std::sin(alpha);
    double num = std::cos(eta) * (1.0 + ca * ca - 2.0 * ca * std::sin(alpha + theta));
    double den = std::sin(eta) * sa * sa;
    // arccot(num/den) for num >= 0, den >= 0
    return std::atan2(den, num);
}

}  // namespace rlab
