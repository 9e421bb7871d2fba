#include <cmath>
#include <numbers>

#include "doctest.h"
#include "rlab/errors.hpp"
#include "rlab/rigor.hpp"
#include "rlab/rng.hpp"

using namespace rlab;
constexpr double kPi = std::numbers::pi;

namespace {

Vec3 grad(double t, double a, double e) {
    return {-std::cos(a) * std::cos(e) * std::cos(t),
            std::sin(a) * std::cos(e) * std::sin(t) - std::cos(a) * std::sin(e),
            -std::sin(e) * (1 - std::cos(a) * std::sin(t)) - std::sin(a) * std::cos(e)};
}

double norm(const Vec3& g) { return std::sqrt(g[0] * g[0] + g[1] * g[1] + g[2] * g[2]); }

Box3 random_box(RngStream& r, double max_side) {
    Box3 d = extension_domain(), b;
    for (int i = 0; i < 3; ++i) {
        double s = r.uniform(1e-4, max_side);
        b.lo[i] = r.uniform(d.lo[i], d.hi[i] - s);
        b.hi[i] = b.lo[i] + s;
    }
    return b;
}

Vec3 point_in(RngStream& r, const Box3& b) {
    return {r.uniform(b.lo[0], b.hi[0]), r.uniform(b.lo[1], b.hi[1]), r.uniform(b.lo[2], b.hi[2])};
}

}  // namespace

TEST_CASE("F_extension") {
    CHECK(F_extension(0, 0, 0) == 1.0);
    CHECK(std::abs(F_extension(kPi / 2, 0, kPi / 2)) < 1e-16);
    RngStream r(40, 0);
    for (int i = 0; i < 1000; ++i) {
        double t = r.uniform(0, 2 * kPi), a = r.uniform(0, kPi / 2), e = r.uniform(0, kPi / 2);
        double ref = std::cos(e) - std::cos(e) * std::cos(a) * std::sin(t) - std::sin(e) * std::sin(a);
        CHECK(std::abs(F_extension(t, a, e) - ref) < 1e-15);
    }
}

TEST_CASE("interval sine") {
    Interval s = sin_range(0.0, kPi);
    CHECK(s.hi == 1.0);
    CHECK(s.lo == doctest::Approx(0.0).epsilon(1e-15));
    Interval c = cos_range(0.1, 0.2);
    CHECK(c.lo == std::cos(0.2));
    CHECK(c.hi == std::cos(0.1));
    Interval w = sin_range(4.0, 5.0);
    CHECK(w.lo == -1.0);
}

TEST_CASE("grad_bound") {
    Box3 full = extension_domain();
    double gfull = grad_bound(full);
    CHECK(gfull <= 4.0);
    RngStream r(41, 0);
    double truemax = 0;
    for (int i = 0; i < 100000; ++i) {
        Vec3 p = point_in(r, full);
        truemax = std::max(truemax, norm(grad(p[0], p[1], p[2])));
    }
    CHECK(gfull >= truemax);
    // dominates sampled gradients on random small boxes; shrinking never increases
    for (int i = 0; i < 10000; ++i) {
        Box3 b = random_box(r, 0.3);
        double m = grad_bound(b);
        for (int k = 0; k < 5; ++k) {
            Vec3 p = point_in(r, b);
            CHECK(norm(grad(p[0], p[1], p[2])) <= m + 1e-12);
        }
        Box3 s = b;
        for (int d = 0; d < 3; ++d) {
            double mid = 0.5 * (b.lo[d] + b.hi[d]);
            (i % 2 ? s.lo[d] : s.hi[d]) = mid;
        }
        CHECK(grad_bound(s) <= m + 1e-15);
    }
}

TEST_CASE("vertex Lipschitz bound") {
    RngStream r(42, 0);
    for (int i = 0; i < 10000; ++i) {
        Box3 b = random_box(r, 0.2);
        double m = grad_bound(b);
        Vec3 p = point_in(r, b);
        for (int v = 0; v < 8; ++v) {
            Vec3 q{v & 1 ? b.hi[0] : b.lo[0], v & 2 ? b.hi[1] : b.lo[1], v & 4 ? b.hi[2] : b.lo[2]};
            double d = std::sqrt((p[0] - q[0]) * (p[0] - q[0]) + (p[1] - q[1]) * (p[1] - q[1]) + (p[2] - q[2]) * (p[2] - q[2]));
            CHECK(std::abs(F_extension(p[0], p[1], p[2]) - F_extension(q[0], q[1], q[2])) <= m * d + 1e-14);
        }
    }
}

TEST_CASE("certify_box") {
    Box3 corner{{0, 0, 0}, {0.02, 0.02, 0.02}, 0};
    CHECK(certify_box(corner, 1e-3, CertifyMode::Lower) == BoxVerdict::Admitted);
    Box3 neg{{kPi / 2 - 0.01, kPi / 2 - 0.11, kPi / 2 - 0.11}, {kPi / 2 + 0.01, kPi / 2 - 0.09, kPi / 2 - 0.09}, 0};
    CHECK(F_extension(kPi / 2, kPi / 2 - 0.1, kPi / 2 - 0.1) < -0.2);
    CHECK(certify_box(neg, 1e-3, CertifyMode::Upper) == BoxVerdict::Admitted);
    // straddles F = 0 along eta near pi/4 for theta = 3pi/2 ... use a crossing at alpha = 0, theta = pi/2
    Box3 cross{{kPi / 2 - 0.01, 0.0, 0.3}, {kPi / 2 + 0.01, 0.02, 0.32}, 0};
    cross.subdivision_level = kDefaultMaxLevel;
    CHECK(certify_box(cross, 1e-3, CertifyMode::Lower) == BoxVerdict::Rejected);
    CHECK(certify_box(cross, 1e-3, CertifyMode::Upper) == BoxVerdict::Rejected);
    cross.subdivision_level = 0;
    CHECK(certify_box(cross, 1e-3, CertifyMode::Lower) == BoxVerdict::Subdivide);
}

TEST_CASE("verified_volume on analytic fields") {
    Box3 unit{{0, 0, 0}, {1, 1, 1}, 0};
    VolumeOptions o;
    o.grid_side = 0.1;
    CertifiedInterval one = verified_volume([](const Vec3&) { return 1.0; }, 0.0, unit, o);
    CHECK(one.lower == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(one.upper == doctest::Approx(1.0).epsilon(1e-12));

    for (double c : {0.25, 0.5, 0.637}) {
        auto F = [c](const Vec3& v) { return v[0] - c; };
        double prev_w = 2;
        for (double h : {0.2, 0.1, 0.05, 0.025}) {
            o.grid_side = h;
            CertifiedInterval e = verified_volume(F, 1.0, unit, o);
            CHECK(e.lower <= 1 - c + 1e-12);
            CHECK(e.upper >= 1 - c - 1e-12);
            CHECK(e.upper - e.lower <= prev_w + 1e-12);
            prev_w = e.upper - e.lower;
        }
        CHECK(prev_w < 0.05);
    }

    // a ball-like field: x^2 + y^2 + z^2 <= 0.5 over [0,1]^3, true volume (pi/6) 0.5^1.5
    auto G = [](const Vec3& v) { return 0.5 - v[0] * v[0] - v[1] * v[1] - v[2] * v[2]; };
    double truth = kPi / 6 * std::pow(0.5, 1.5);
    CertifiedInterval prev{0, 1};
    for (int lev : {0, 1, 2}) {
        o.grid_side = 0.1;
        o.max_level = lev;
        CertifiedInterval e = verified_volume(G, 2 * std::sqrt(3.0), unit, o);
        CHECK(e.lower <= truth);
        CHECK(e.upper >= truth);
        CHECK(e.lower >= prev.lower - 1e-12);
        CHECK(e.upper <= prev.upper + 1e-12);
        prev = e;
    }
}

TEST_CASE("a_inf2_bounds at coarse grids") {
    CertifiedInterval c10 = a_inf2_bounds(0.1, 1e-3, 2);
    CertifiedInterval c20 = a_inf2_bounds(0.05, 1e-3, 2);
    CHECK(c10.lower <= 0.595);
    CHECK(c10.upper >= 0.595);
    CHECK(c10.lower <= c20.lower);
    CHECK(c10.upper >= c20.upper);
    CHECK(c20.lower <= 0.595);
    CHECK(c20.upper >= 0.595);
    CHECK(c10.boxes_admitted > 0);
    CertifiedInterval w1 = a_inf2_bounds(0.1, 1e-3, 2, 1), w3 = a_inf2_bounds(0.1, 1e-3, 2, 3);
    CHECK(w1.lower == w3.lower);
    CHECK(w1.upper == w3.upper);
    CHECK_THROWS_AS(a_inf2_bounds(0.1, 1e-3, 2, 0, 1000), ResourceError);
}
