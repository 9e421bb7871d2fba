#include "rlab/rigor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "rlab/errors.hpp"
#include "rlab/parallel.hpp"

namespace rlab {

namespace {

constexpr double kPi = std::numbers::pi;

Interval mul(Interval a, Interval b) {
    double p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}
Interval add(Interval a, Interval b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval neg(Interval a) { return {-a.hi, -a.lo}; }
double mag(Interval a) { return std::max(std::abs(a.lo), std::abs(a.hi)); }

struct Tally {
    double volume = 0;
    std::int64_t admitted = 0;
    std::int64_t rejected = 0;
};

void certify_rec(const Field3& F, const GradBound3& M, const Box3& box, double margin, CertifyMode mode,
                 int max_level, Tally& t) {
    switch (certify_box(F, M, box, margin, mode, max_level)) {
        case BoxVerdict::Admitted:
            t.volume += box.volume();
            ++t.admitted;
            return;
        case BoxVerdict::Rejected:
            ++t.rejected;
            return;
        case BoxVerdict::Subdivide: break;
    }
    Vec3 mid;
    for (int i = 0; i < 3; ++i) mid[i] = 0.5 * (box.lo[i] + box.hi[i]);
    for (int m = 0; m < 8; ++m) {
        Box3 c;
        c.subdivision_level = box.subdivision_level + 1;
        for (int i = 0; i < 3; ++i) {
            bool up = (m >> i) & 1;
            c.lo[i] = up ? mid[i] : box.lo[i];
            c.hi[i] = up ? box.hi[i] : mid[i];
        }
        certify_rec(F, M, c, margin, mode, max_level, t);
    }
}

}  // namespace

double Box3::volume() const { return (hi[0] - lo[0]) * (hi[1] - lo[1]) * (hi[2] - lo[2]); }

double Box3::diagonal() const {
    double s = 0;
    for (int i = 0; i < 3; ++i) s += (hi[i] - lo[i]) * (hi[i] - lo[i]);
    return std::sqrt(s);
}

Interval sin_range(double a, double b) {
    double sa = std::sin(a), sb = std::sin(b);
    Interval r{std::min(sa, sb), std::max(sa, sb)};
    // any maximum pi/2 + 2k pi or minimum 3pi/2 + 2k pi inside [a, b]
    double k = std::ceil((a - kPi / 2) / (2 * kPi));
    if (kPi / 2 + 2 * kPi * k <= b) r.hi = 1;
    k = std::ceil((a - 3 * kPi / 2) / (2 * kPi));
    if (3 * kPi / 2 + 2 * kPi * k <= b) r.lo = -1;
    return r;
}

Interval cos_range(double a, double b) {
    double ca = std::cos(a), cb = std::cos(b);
    Interval r{std::min(ca, cb), std::max(ca, cb)};
    double k = std::ceil(a / (2 * kPi));
    if (2 * kPi * k <= b) r.hi = 1;
    k = std::ceil((a - kPi) / (2 * kPi));
    if (kPi + 2 * kPi * k <= b) r.lo = -1;
    return r;
}

double F_extension(double theta, double alpha, double eta) {
    return std::cos(eta) * (1.0 - std::cos(alpha) * std::sin(theta)) - std::sin(eta) * std::sin(alpha);
}

double grad_bound(const Box3& box) {
    Interval st = sin_range(box.lo[0], box.hi[0]), ct = cos_range(box.lo[0], box.hi[0]);
    Interval sa = sin_range(box.lo[1], box.hi[1]), ca = cos_range(box.lo[1], box.hi[1]);
    Interval se = sin_range(box.lo[2], box.hi[2]), ce = cos_range(box.lo[2], box.hi[2]);
    double ft = mag(mul(mul(ca, ce), ct));
    double fa = mag(add(mul(mul(sa, ce), st), neg(mul(ca, se))));
    double fe = mag(add(neg(mul(se, add({1, 1}, neg(mul(ca, st))))), neg(mul(sa, ce))));
    return std::min(4.0, std::sqrt(ft * ft + fa * fa + fe * fe));
}

BoxVerdict certify_box(const Field3& F, const GradBound3& M, const Box3& box, double margin, CertifyMode mode,
                       int max_level) {
    double sgn = mode == CertifyMode::Lower ? 1.0 : -1.0;
    double thr = M(box) * box.diagonal() / 2 + margin + kEvalAllowance;
    bool ok = true;
    for (int m = 0; m < 8 && ok; ++m) {
        Vec3 v{m & 1 ? box.hi[0] : box.lo[0], m & 2 ? box.hi[1] : box.lo[1], m & 4 ? box.hi[2] : box.lo[2]};
        if (!(sgn * F(v) >= thr)) ok = false;
    }
    if (ok) return BoxVerdict::Admitted;
    return box.subdivision_level < max_level ? BoxVerdict::Subdivide : BoxVerdict::Rejected;
}

BoxVerdict certify_box(const Box3& box, double margin, CertifyMode mode, int max_level) {
    static const Field3 f = [](const Vec3& v) { return F_extension(v[0], v[1], v[2]); };
    static const GradBound3 g = [](const Box3& b) { return grad_bound(b); };
    return certify_box(f, g, box, margin, mode, max_level);
}

CertifiedInterval verified_volume(const Field3& F, const GradBound3& M, const Box3& domain, const VolumeOptions& opt) {
    if (!(opt.grid_side > 0) || !(opt.margin > 0)) throw DomainError("verified_volume: grid_side and margin must be > 0");
    if (opt.max_level < 0) throw DomainError("verified_volume: max_level must be >= 0");
    const double h = opt.grid_side;
    std::array<std::int64_t, 3> n{};
    for (int i = 0; i < 3; ++i) {
        double len = domain.hi[i] - domain.lo[i];
        if (!(len > 0)) throw DomainError("verified_volume: empty domain");
        n[i] = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(len / h - 1e-9)));
    }
    double count = static_cast<double>(n[0]) * n[1] * n[2];
    if (count > static_cast<double>(opt.box_cap))
        throw ResourceError("verified_volume: " + std::to_string(static_cast<long long>(count)) +
                            " boxes exceed the cap of " + std::to_string(opt.box_cap));

    struct Slab {
        Tally pos, neg;
    };
    std::vector<Slab> slabs(n[0]);
    parallel_for(n[0], opt.workers, [&](std::size_t i) {
        Slab& s = slabs[i];
        for (std::int64_t j = 0; j < n[1]; ++j)
            for (std::int64_t k = 0; k < n[2]; ++k) {
                std::array<std::int64_t, 3> idx{static_cast<std::int64_t>(i), j, k};
                Box3 b;
                for (int d = 0; d < 3; ++d) {
                    b.lo[d] = domain.lo[d] + idx[d] * h;
                    b.hi[d] = std::min(domain.lo[d] + (idx[d] + 1) * h, domain.hi[d]);
                }
                if (opt.known_nonnegative && opt.known_nonnegative(b)) {
                    s.pos.volume += b.volume();
                    ++s.pos.admitted;
                    continue;
                }
                certify_rec(F, M, b, opt.margin, CertifyMode::Lower, opt.max_level, s.pos);
                certify_rec(F, M, b, opt.margin, CertifyMode::Upper, opt.max_level, s.neg);
            }
    });

    Tally pos, neg;
    for (const Slab& s : slabs) {
        pos.volume += s.pos.volume;
        pos.admitted += s.pos.admitted;
        pos.rejected += s.pos.rejected;
        neg.volume += s.neg.volume;
        neg.admitted += s.neg.admitted;
        neg.rejected += s.neg.rejected;
    }
    double total = domain.volume();
    CertifiedInterval r;
    r.lower = std::clamp(pos.volume / total, 0.0, 1.0);
    r.upper = std::clamp(1.0 - neg.volume / total, 0.0, 1.0);
    r.boxes_admitted = pos.admitted + neg.admitted;
    r.boxes_rejected = pos.rejected + neg.rejected;
    r.grid_side = h;
    r.max_level = opt.max_level;
    return r;
}

CertifiedInterval verified_volume(const Field3& F, double global_grad_bound, const Box3& domain,
                                  const VolumeOptions& opt) {
    return verified_volume(F, [global_grad_bound](const Box3&) { return global_grad_bound; }, domain, opt);
}

Box3 extension_domain() { return Box3{{0.0, 0.0, 0.0}, {2 * kPi, kPi / 2, kPi / 2}, 0}; }

CertifiedInterval a_inf2_bounds(double grid_side, double margin, int max_level, unsigned workers,
                                std::int64_t box_cap) {
    VolumeOptions opt;
    opt.grid_side = grid_side;
    opt.margin = margin;
    opt.max_level = max_level;
    opt.workers = workers;
    opt.box_cap = box_cap;
    // sin(theta) <= 0 and eta <= pi/4 give F >= cos(eta) - sin(eta) >= 0
    opt.known_nonnegative = [](const Box3& b) { return b.lo[0] >= kPi && b.hi[2] <= kPi / 4; };
    Field3 f = [](const Vec3& v) { return F_extension(v[0], v[1], v[2]); };
    return verified_volume(f, [](const Box3& b) { return grad_bound(b); }, extension_domain(), opt);
}

}  // namespace rlab
