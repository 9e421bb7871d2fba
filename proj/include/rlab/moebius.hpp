#pragma once

#include <complex>
#include <vector>

namespace rlab {

using ComplexValue = std::complex<double>;

inline constexpr double kDetTol = 1e-9;
inline constexpr double kClassifyTol = 1e-9;

class SpherePoint {
public:
    SpherePoint() = default;
    SpherePoint(ComplexValue z);  // NOLINT: implicit on purpose
    static SpherePoint infinity();

    bool is_infinity() const { return inf_; }
    ComplexValue value() const;  // throws on infinity

    friend bool operator==(const SpherePoint& p, const SpherePoint& q);

private:
    ComplexValue z_{};
    bool inf_ = false;
};

// [[a b] [c d]], det 1, read projectively
class MoebiusMap {
public:
    MoebiusMap() = default;  // identity
    MoebiusMap(ComplexValue a, ComplexValue b, ComplexValue c, ComplexValue d);

    // no determinant check; for products of already validated maps
    static MoebiusMap unchecked(ComplexValue a, ComplexValue b, ComplexValue c, ComplexValue d);
    // rescales by 1/sqrt(det)
    static MoebiusMap normalized(ComplexValue a, ComplexValue b, ComplexValue c, ComplexValue d);
    static MoebiusMap identity() { return {}; }

    ComplexValue a() const { return a_; }
    ComplexValue b() const { return b_; }
    ComplexValue c() const { return c_; }
    ComplexValue d() const { return d_; }

    ComplexValue det() const { return a_ * d_ - b_ * c_; }
    ComplexValue tr() const { return a_ + d_; }
    MoebiusMap inverse() const { return unchecked(d_, -b_, -c_, a_); }
    MoebiusMap operator-() const { return unchecked(-a_, -b_, -c_, -d_); }

private:
    ComplexValue a_{1.0}, b_{0.0}, c_{0.0}, d_{1.0};
};

enum class MapClass { Identity, Parabolic, Elliptic, Loxodromic };

struct CirclePair {
    ComplexValue center_plus;
    ComplexValue center_minus;
    double radius;
};

MoebiusMap compose(const MoebiusMap& m1, const MoebiusMap& m2);
MoebiusMap operator*(const MoebiusMap& m1, const MoebiusMap& m2);

// equality up to the global sign, entrywise within tol
bool same_transformation(const MoebiusMap& m1, const MoebiusMap& m2, double tol = 1e-12);

SpherePoint apply(const MoebiusMap& m, const SpherePoint& z);

ComplexValue commutator_gamma(const MoebiusMap& f, const MoebiusMap& g);

MapClass classify(const MoebiusMap& m);
const char* to_string(MapClass k);

// one point for parabolics, two otherwise; throws DomainError on +-I
std::vector<SpherePoint> fixed_points(const MoebiusMap& m);

// C+ = {|cz + d| = 1}, C- = {|-cz + a| = 1}; m maps C+ onto C-
CirclePair isometric_circles(const MoebiusMap& m);

// angle at 0 of the arc of the unit circle inside one isometric circle
double isometric_arc_angle(const MoebiusMap& m);

// great circles have length 2pi, d(0, inf) = pi
double spherical_distance(const SpherePoint& z, const SpherePoint& w);

}  // namespace rlab
