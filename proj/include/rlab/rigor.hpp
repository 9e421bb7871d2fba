#pragma once

#include <array>
#include <cstdint>
#include <functional>

namespace rlab {

using Vec3 = std::array<double, 3>;

struct Box3 {
    Vec3 lo;
    Vec3 hi;
    int subdivision_level = 0;

    double volume() const;
    double diagonal() const;
};

struct Interval {
    double lo, hi;
};

Interval sin_range(double a, double b);
Interval cos_range(double a, double b);

struct CertifiedInterval {
    double lower = 0;
    double upper = 1;
    std::int64_t boxes_admitted = 0;
    std::int64_t boxes_rejected = 0;
    double grid_side = 0;
    int max_level = 0;
};

enum class CertifyMode { Lower, Upper };
enum class BoxVerdict { Admitted, Rejected, Subdivide };

inline constexpr double kEvalAllowance = 1e-12;
inline constexpr int kDefaultMaxLevel = 3;
inline constexpr std::int64_t kDefaultBoxCap = 200'000'000;

// cos(eta)(1 - cos(alpha) sin(theta)) - sin(eta) sin(alpha), coordinates (theta, alpha, eta)
double F_extension(double theta, double alpha, double eta);

// upper bound on the Euclidean gradient norm of F_extension over the box, never above 4
double grad_bound(const Box3& box);

using Field3 = std::function<double(const Vec3&)>;
using GradBound3 = std::function<double(const Box3&)>;

// vertex test with Lipschitz slack M * diag / 2; Lower certifies F >= 0, Upper certifies F < 0
BoxVerdict certify_box(const Box3& box, double margin, CertifyMode mode, int max_level = kDefaultMaxLevel);
BoxVerdict certify_box(const Field3& F, const GradBound3& M, const Box3& box, double margin, CertifyMode mode,
                       int max_level);

struct VolumeOptions {
    double grid_side = 1.0 / 20;
    double margin = 1e-3;
    int max_level = kDefaultMaxLevel;
    unsigned workers = 0;  // 0: default pool size
    std::int64_t box_cap = kDefaultBoxCap;
    // boxes known to lie in {F >= 0}
    std::function<bool(const Box3&)> known_nonnegative;
};

// enclosure of vol{F >= 0} / vol(domain)
CertifiedInterval verified_volume(const Field3& F, const GradBound3& M, const Box3& domain, const VolumeOptions& opt);
CertifiedInterval verified_volume(const Field3& F, double global_grad_bound, const Box3& domain,
                                  const VolumeOptions& opt);

CertifiedInterval a_inf2_bounds(double grid_side, double margin, int max_level = kDefaultMaxLevel,
                                unsigned workers = 0, std::int64_t box_cap = kDefaultBoxCap);

Box3 extension_domain();

}  // namespace rlab
