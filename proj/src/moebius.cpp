#include "holocheck/moebius.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace holocheck {

namespace {

constexpr double kClassifyTol = 1e-10;
constexpr double kNearBand = 1e3;  // flag within (tol, kNearBand*tol]

double sq(double x) { return x * x; }

double norm2(Complex z) { return std::norm(z); }

}  // namespace

EllipticPair::EllipticPair(int order, Complex fix1, Complex fix2)
    : m(order), w1(fix1), w2(fix2), beta(std::numbers::pi / order) {
    if (order < 2) {
        throw std::invalid_argument("EllipticPair: order must be >= 2");
    }
    if (fix1 == fix2) {
        throw std::invalid_argument("EllipticPair: coincident fixed points");
    }
}

MoebiusMap::MoebiusMap(Complex a_, Complex b_, Complex c_, Complex d_)
    : a(a_), b(b_), c(c_), d(d_) {
    const Complex det = a * d - b * c;
    if (!std::isfinite(std::abs(det)) || std::abs(det) < 1e-290) {
        throw std::invalid_argument("MoebiusMap: singular matrix");
    }
    const Complex s = std::sqrt(det);
    a /= s;
    b /= s;
    c /= s;
    d /= s;
}

MoebiusMap MoebiusMap::inverse() const {
    MoebiusMap g;
    g.a = d;
    g.b = -b;
    g.c = -c;
    g.d = a;
    return g;
}

MoebiusMap operator*(const MoebiusMap& g, const MoebiusMap& h) {
    MoebiusMap out;
    out.a = g.a * h.a + g.b * h.c;
    out.b = g.a * h.b + g.b * h.d;
    out.c = g.c * h.a + g.d * h.c;
    out.d = g.c * h.b + g.d * h.d;
    return out;
}

bool projectively_equal(const MoebiusMap& g, const MoebiusMap& h, double tol) {
    for (double s : {1.0, -1.0}) {
        double dev = std::max(
            std::max(std::abs(g.a - s * h.a), std::abs(g.b - s * h.b)),
            std::max(std::abs(g.c - s * h.c), std::abs(g.d - s * h.d)));
        if (dev <= tol) return true;
    }
    return false;
}

RiemannPoint act_sphere(const MoebiusMap& g, const RiemannPoint& p) {
    if (p.at_infinity) {
        if (g.c == Complex(0.0)) return RiemannPoint::infinity();
        return RiemannPoint(g.a / g.c);
    }
    const Complex den = g.c * p.value + g.d;
    if (den == Complex(0.0)) return RiemannPoint::infinity();
    return RiemannPoint((g.a * p.value + g.b) / den);
}

double j_factor(const MoebiusMap& g, const H3Point& Z) {
    if (!(Z.t > 0.0)) throw std::domain_error("j_factor: t must be positive");
    return 1.0 / (norm2(g.c * Z.z + g.d) + norm2(g.c) * sq(Z.t));
}

H3Point act_h3(const MoebiusMap& g, const H3Point& Z) {
    if (!(Z.t > 0.0)) throw std::domain_error("act_h3: t must be positive");
    const double J = j_factor(g, Z);
    H3Point out;
    out.z = ((g.a * Z.z + g.b) * std::conj(g.c * Z.z + g.d) +
             g.a * std::conj(g.c) * sq(Z.t)) *
            J;
    out.t = Z.t * J;
    return out;
}

namespace {

struct TraceBin {
    MapClass type;
    double margin;  // distance from tr^2 to the nearest other decision set
};

TraceBin bin_trace(Complex tr2) {
    const double d4 = std::abs(tr2 - Complex(4.0));
    const double d0 = std::abs(tr2);
    const double re = tr2.real();
    const double ray = (re >= 0.0) ? std::abs(tr2.imag()) : d0;
    if (d4 <= kClassifyTol) {
        return {MapClass::parabolic, std::min(d0, ray)};
    }
    if (ray <= kClassifyTol) {
        if (re > 4.0) return {MapClass::hyperbolic, d4};
        if (re >= 0.0) return {MapClass::elliptic, std::min(d4, re)};
    }
    return {MapClass::loxodromic, std::min(d4, ray)};
}

}  // namespace

Classification classify(const MoebiusMap& g) {
    Classification out;
    static const MoebiusMap id;
    if (projectively_equal(g, id, kClassifyTol)) {
        out.type = MapClass::identity;
        double dev = 1.0;
        for (double s : {1.0, -1.0}) {
            dev = std::min(
                dev,
                std::max(std::max(std::abs(g.a - s * 1.0), std::abs(g.b)),
                         std::max(std::abs(g.c), std::abs(g.d - s * 1.0))));
        }
        out.near_boundary = dev > 0.1 * kClassifyTol;
        return out;
    }
    const Complex tr = g.trace();
    const TraceBin bin = bin_trace(tr * tr);
    out.type = bin.type;
    out.near_boundary =
        bin.margin > kClassifyTol && bin.margin <= kNearBand * kClassifyTol;
    return out;
}

std::pair<MoebiusMap, MoebiusMap> elliptic_from_pair(const EllipticPair& p) {
    const Complex varpi = std::sqrt(Complex(1.0) / (p.w1 - p.w2));
    const MoebiusMap rho(-varpi * p.w2, varpi * p.w1, -varpi, varpi);
    const Complex e = std::polar(1.0, p.beta);
    const MoebiusMap lambda(e, 0.0, 0.0, Complex(1.0) / e);
    return {rho * lambda * rho.inverse(), rho};
}

MoebiusMap parabolic_generator(const RiemannPoint& v, Complex q) {
    if (q == Complex(0.0)) {
        throw std::invalid_argument("parabolic_generator: q must be nonzero");
    }
    if (v.at_infinity) return MoebiusMap(1.0, q, 0.0, 1.0);
    const Complex w = v.value;
    return MoebiusMap(1.0 + q * w, -q * w * w, q, 1.0 - q * w);
}

MoebiusMap parabolic_conjugator(const RiemannPoint& v, Complex q) {
    if (q == Complex(0.0)) {
        throw std::invalid_argument("parabolic_conjugator: q must be nonzero");
    }
    const Complex r = std::sqrt(q);
    if (v.at_infinity) return MoebiusMap(r, 0.0, 0.0, Complex(1.0) / r);
    return MoebiusMap(r * v.value, -Complex(1.0) / r, r, 0.0);
}

Horoball horoball_image(const MoebiusMap& g, double s) {
    if (!(s > 0.0)) throw std::domain_error("horoball_image: s must be > 0");
    Horoball out;
    if (g.c == Complex(0.0)) {
        out.tangency = RiemannPoint::infinity();
        out.size = s / norm2(g.d);
        return out;
    }
    out.tangency = RiemannPoint(g.a / g.c);
    out.size = 1.0 / (2.0 * norm2(g.c) * s);
    return out;
}

H3Point geodesic_point(const GeodesicArc& arc, double s) {
    if (!(s > 0.0 && s < 1.0)) {
        throw std::domain_error("geodesic_point: s must lie in (0,1)");
    }
    if (arc.w1 == arc.w2) {
        throw std::invalid_argument("geodesic_point: degenerate arc");
    }
    H3Point out;
    out.z = s * (arc.w1 - arc.w2) + arc.w2;
    out.t = std::abs(arc.w1 - arc.w2) * std::sqrt(s * (1.0 - s));
    return out;
}

Complex log_derivative_ratio(const MoebiusMap& g, Complex z) {
    const Complex den = g.c * z + g.d;
    if (den == Complex(0.0)) {
        throw std::domain_error("log_derivative_ratio: pole of the map");
    }
    return -2.0 * g.c / den;
}

double axis_j_factor(const EllipticPair& p, double s) {
    const H3Point h = geodesic_point({p.w1, p.w2}, s);
    const Complex e = std::polar(1.0, p.beta);
    const Complex cp = e - Complex(1.0) / e;
    const Complex dp = p.w1 / e - p.w2 * e;
    return 1.0 / (norm2(cp * h.z + dp) + norm2(cp) * sq(h.t));
}

}  // namespace holocheck
