#pragma once

#include <complex>
#include <stdexcept>
#include <utility>

namespace holocheck {

using Complex = std::complex<double>;

// Point on the Riemann sphere; infinity is tagged, never a large float.
struct RiemannPoint {
    Complex value{0.0, 0.0};
    bool at_infinity = false;

    RiemannPoint() = default;
    RiemannPoint(Complex z) : value(z) {}
    RiemannPoint(double x) : value(x, 0.0) {}
    static RiemannPoint infinity() {
        RiemannPoint p;
        p.at_infinity = true;
        return p;
    }
};

// Upper half-space coordinates (z, t), t > 0.
struct H3Point {
    Complex z{0.0, 0.0};
    double t = 1.0;
};

// Horoball tangent to the boundary: Euclidean radius at a finite tangency,
// height of the invariant horizontal plane when tangent at infinity.
struct Horoball {
    RiemannPoint tangency;
    double size = 0.0;
};

// Oriented geodesic: starts at w2, ends at w1.
struct GeodesicArc {
    Complex w1;
    Complex w2;
};

// Order-m elliptic data: rotation by 2*beta about the axis over (w1, w2).
struct EllipticPair {
    int m = 2;
    Complex w1;
    Complex w2;
    double beta = 0.0;  // pi / m

    EllipticPair(int order, Complex fix1, Complex fix2);
};

// Matrix representative, normalized to determinant 1 on construction.
// (g, -g) act identically; equality is projective.
struct MoebiusMap {
    Complex a{1.0, 0.0};
    Complex b{0.0, 0.0};
    Complex c{0.0, 0.0};
    Complex d{1.0, 0.0};

    MoebiusMap() = default;
    MoebiusMap(Complex a_, Complex b_, Complex c_, Complex d_);

    MoebiusMap inverse() const;
    Complex trace() const { return a + d; }
};

MoebiusMap operator*(const MoebiusMap& g, const MoebiusMap& h);

bool projectively_equal(const MoebiusMap& g, const MoebiusMap& h,
                        double tol = 1e-10);

enum class MapClass { identity, parabolic, elliptic, hyperbolic, loxodromic };

struct Classification {
    MapClass type = MapClass::identity;
    // Set when the squared trace sits just outside the snap tolerance of a
    // decision set, so the bin could flip under perturbation of that size.
    bool near_boundary = false;
};

// Fractional-linear action on the Riemann sphere.
RiemannPoint act_sphere(const MoebiusMap& g, const RiemannPoint& p);

// Isometric action on upper half-space:
//   J = 1 / (|cz+d|^2 + |ct|^2),  t' = t J,
//   z' = ((az+b)(cz+d)~ + a c~ t^2) J   (~ is conjugation).
H3Point act_h3(const MoebiusMap& g, const H3Point& Z);

// The conformal factor J above, for the normalized representative.
double j_factor(const MoebiusMap& g, const H3Point& Z);

// Trace-squared bins: {4} parabolic, [0,4) elliptic, (4,inf) hyperbolic,
// anything off the ray loxodromic; tolerance 1e-10.
Classification classify(const MoebiusMap& g);

// Builds tau = rho lambda rho^{-1} where lambda = diag(e^{i beta}, e^{-i beta})
// and rho maps the vertical axis geodesic onto the arc from w2 to w1
// (rho(0) = w1, rho(inf) = w2).  Returns (tau, rho).
std::pair<MoebiusMap, MoebiusMap> elliptic_from_pair(const EllipticPair& p);

// Parabolic with fixed point v and translation parameter q: for v = inf the
// map z -> z + q; for finite v the conjugate of the unit translation fixing v.
MoebiusMap parabolic_generator(const RiemannPoint& v, Complex q);

// sigma with sigma^{-1} kappa sigma equal to the unit translation
// (+1 when v = inf, -1 when v is finite).
MoebiusMap parabolic_conjugator(const RiemannPoint& v, Complex q);

// Image of the horoball {t > s} at infinity under g.
Horoball horoball_image(const MoebiusMap& g, double s);

// Point on the hemisphere over (w2, w1):
//   z(s) = s(w1-w2) + w2,  t(s) = |w1-w2| sqrt(s - s^2),  0 < s < 1.
H3Point geodesic_point(const GeodesicArc& arc, double s);

// g''(z) / g'(z) = -2c / (cz + d).
Complex log_derivative_ratio(const MoebiusMap& g, Complex z);

// J along the axis geodesic of the pair, evaluated for the representative of
// tau^{-1} scaled by (w1 - w2): constant in s with value |w1 - w2|^{-2}.
double axis_j_factor(const EllipticPair& p, double s);

}  // namespace holocheck
