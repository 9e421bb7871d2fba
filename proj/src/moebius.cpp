#include "rlab/moebius.hpp"

#include <algorithm>
#include <cmath>

#include "rlab/errors.hpp"

namespace rlab {

namespace {

bool finite(ComplexValue z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

bool lex_less(const SpherePoint& p, const SpherePoint& q) {
    if (p.is_infinity() || q.is_infinity()) return !p.is_infinity() && q.is_infinity();
    ComplexValue a = p.value(), b = q.value();
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

}  // namespace

SpherePoint::SpherePoint(ComplexValue z) : z_(z) {
    if (!finite(z)) throw DomainError("SpherePoint: non-finite value, use SpherePoint::infinity()");
}

SpherePoint SpherePoint::infinity() {
    SpherePoint p;
    p.inf_ = true;
    return p;
}

ComplexValue SpherePoint::value() const {
    if (inf_) throw DomainError("SpherePoint: value() of infinity");
    return z_;
}

bool operator==(const SpherePoint& p, const SpherePoint& q) {
    if (p.inf_ || q.inf_) return p.inf_ == q.inf_;
    return p.z_ == q.z_;
}

MoebiusMap::MoebiusMap(ComplexValue a, ComplexValue b, ComplexValue c, ComplexValue d)
    : a_(a), b_(b), c_(c), d_(d) {
    if (!finite(a) || !finite(b) || !finite(c) || !finite(d))
        throw DomainError("MoebiusMap: non-finite entry");
    if (std::abs(det() - 1.0) > kDetTol) throw DomainError("MoebiusMap: determinant is not 1");
}

MoebiusMap MoebiusMap::unchecked(ComplexValue a, ComplexValue b, ComplexValue c, ComplexValue d) {
    MoebiusMap m;
    m.a_ = a;
    m.b_ = b;
    m.c_ = c;
    m.d_ = d;
    return m;
}

MoebiusMap MoebiusMap::normalized(ComplexValue a, ComplexValue b, ComplexValue c, ComplexValue d) {
    ComplexValue det = a * d - b * c;
    if (det == 0.0) throw DomainError("MoebiusMap: singular matrix");
    ComplexValue s = 1.0 / std::sqrt(det);
    return MoebiusMap(a * s, b * s, c * s, d * s);
}

MoebiusMap compose(const MoebiusMap& m1, const MoebiusMap& m2) {
    // sums of two products in extended precision, rounded once
    using L = std::complex<long double>;
    auto dot = [](ComplexValue p, ComplexValue q, ComplexValue r, ComplexValue s) {
        L v = L(p) * L(q) + L(r) * L(s);
        return ComplexValue(static_cast<double>(v.real()), static_cast<double>(v.imag()));
    };
    return MoebiusMap::unchecked(dot(m1.a(), m2.a(), m1.b(), m2.c()), dot(m1.a(), m2.b(), m1.b(), m2.d()),
                                 dot(m1.c(), m2.a(), m1.d(), m2.c()), dot(m1.c(), m2.b(), m1.d(), m2.d()));
}

MoebiusMap operator*(const MoebiusMap& m1, const MoebiusMap& m2) { return compose(m1, m2); }

bool same_transformation(const MoebiusMap& m1, const MoebiusMap& m2, double tol) {
    auto close = [&](double s) {
        return std::abs(m1.a() - s * m2.a()) <= tol && std::abs(m1.b() - s * m2.b()) <= tol &&
               std::abs(m1.c() - s * m2.c()) <= tol && std::abs(m1.d() - s * m2.d()) <= tol;
    };
    return close(1.0) || close(-1.0);
}

SpherePoint apply(const MoebiusMap& m, const SpherePoint& z) {
    if (z.is_infinity()) {
        if (m.c() == 0.0) return SpherePoint::infinity();
        return SpherePoint(m.a() / m.c());
    }
    ComplexValue w = z.value();
    ComplexValue den = m.c() * w + m.d();
    if (den == 0.0) return SpherePoint::infinity();
    ComplexValue r = (m.a() * w + m.b()) / den;
    if (!finite(r)) return SpherePoint::infinity();
    return SpherePoint(r);
}

ComplexValue commutator_gamma(const MoebiusMap& f, const MoebiusMap& g) {
    // extended precision: tr - 2 cancels badly once the entries are large
    using L = std::complex<long double>;
    struct M2 {
        L a, b, c, d;
        M2 operator*(const M2& o) const {
            return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
        }
    };
    M2 F{L(f.a()), L(f.b()), L(f.c()), L(f.d())}, G{L(g.a()), L(g.b()), L(g.c()), L(g.d())};
    M2 Fi{F.d, -F.b, -F.c, F.a}, Gi{G.d, -G.b, -G.c, G.a};
    M2 k = F * G * Fi * Gi;
    L t = k.a + k.d - 2.0L;
    return {static_cast<double>(t.real()), static_cast<double>(t.imag())};
}

MapClass classify(const MoebiusMap& m) {
    ComplexValue t2 = m.tr() * m.tr();
    if (std::abs(t2 - 4.0) <= kClassifyTol) {
        bool scalar = std::abs(m.b()) <= kClassifyTol && std::abs(m.c()) <= kClassifyTol &&
                      std::abs(m.a() - m.d()) <= kClassifyTol;
        return scalar ? MapClass::Identity : MapClass::Parabolic;
    }
    if (std::abs(t2.imag()) <= kClassifyTol && t2.real() >= 0.0 && t2.real() < 4.0) return MapClass::Elliptic;
    return MapClass::Loxodromic;
}

const char* to_string(MapClass k) {
    switch (k) {
        case MapClass::Identity: return "Identity";
        case MapClass::Parabolic: return "Parabolic";
        case MapClass::Elliptic: return "Elliptic";
        case MapClass::Loxodromic: return "Loxodromic";
    }
    return "?";
}

std::vector<SpherePoint> fixed_points(const MoebiusMap& m) {
    MapClass k = classify(m);
    if (k == MapClass::Identity) throw DomainError("fixed_points: identity map fixes every point");
    ComplexValue a = m.a(), b = m.b(), c = m.c(), d = m.d();
    // c z^2 + (d - a) z - b = 0
    if (c == 0.0) {
        if (k == MapClass::Parabolic) return {SpherePoint::infinity()};
        return {SpherePoint(b / (d - a)), SpherePoint::infinity()};
    }
    ComplexValue amd = a - d;
    if (k == MapClass::Parabolic) return {SpherePoint(amd / (2.0 * c))};

    ComplexValue s = std::sqrt(m.tr() * m.tr() - 4.0);
    // pick the root without cancellation, get the other from the product -b/c
    ComplexValue q = (std::real(std::conj(amd) * s) >= 0.0) ? amd + s : amd - s;
    std::vector<SpherePoint> out{SpherePoint(q / (2.0 * c)), SpherePoint(-2.0 * b / q)};
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

CirclePair isometric_circles(const MoebiusMap& m) {
    double ac = std::abs(m.c());
    if (ac < 1e-12) throw DegenerateError("isometric_circles: |c| < 1e-12, the map fixes infinity");
    return {-m.d() / m.c(), m.a() / m.c(), 1.0 / ac};
}

double isometric_arc_angle(const MoebiusMap& m) {
    CirclePair cp = isometric_circles(m);
    double dist = std::abs(cp.center_plus);
    double r = cp.radius;
    double cphi = (1.0 + dist * dist - r * r) / (2.0 * dist);
    if (cphi >= 1.0 || cphi <= -1.0) return 0.0;
    return 2.0 * std::acos(cphi);
}

double spherical_distance(const SpherePoint& z, const SpherePoint& w) {
    if (z.is_infinity() && w.is_infinity()) return 0.0;
    if (z.is_infinity() || w.is_infinity()) {
        ComplexValue v = z.is_infinity() ? w.value() : z.value();
        return 2.0 * std::atan2(1.0, std::abs(v));
    }
    ComplexValue a = z.value(), b = w.value();
    return 2.0 * std::atan2(std::abs(a - b), std::abs(1.0 + std::conj(a) * b));
}

}  // namespace rlab
