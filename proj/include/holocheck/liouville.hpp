#pragma once

#include <functional>
#include <vector>

#include "holocheck/moebius.hpp"

namespace holocheck {

struct Rational {
    long long num = 0;
    long long den = 1;

    double to_double() const { return double(num) / double(den); }
};

// Orbifold type (g, n; m_1, ..., m_r).  Hyperbolicity requires
// 2g - 2 + n + sum(1 - 1/m_j) > 0; construction rejects anything else.
struct SurfaceSignature {
    int genus = 0;
    int punctures = 0;
    std::vector<int> orders;  // nondecreasing, each >= 2

    SurfaceSignature(int g, int n, std::vector<int> ms);
};

// chi = 2g - 2 + n + sum(1 - 1/m_j), exact.
Rational euler_characteristic(const SurfaceSignature& sig);

// Conformal density e^phi |dz|^2 with its z-derivative of phi.
struct MetricDensity {
    enum class Region { upper_half_plane, lower_half_plane, user };

    std::function<double(Complex)> phi;
    std::function<Complex(Complex)> phi_z;
    Region region = Region::user;
};

// Hyperbolic density e^phi = 1 / (Im z)^2, phi_z = i / Im z.
// phi is even in Im z and defined off the real axis.
MetricDensity fuchsian_density();

// |phi_z|^2 + e^phi, the density against dz wedge dzbar.
double omega_density(const MetricDensity& m, Complex z);

struct OneFormSample {
    Complex dz_coeff{0.0, 0.0};
    Complex dzbar_coeff{0.0, 0.0};
    Complex at{0.0, 0.0};
};

// theta form of the map g against the density:
//   (phi - log|g''/g'|^2) (Q dz - conj(Q) dzbar),  Q = g''/g',
// and the zero form when c(g) = 0.
OneFormSample theta_form(const MoebiusMap& g, const MetricDensity& m,
                         Complex z);

// Same form assembled from the matrix entry c and g' instead of Q:
//   scalar = phi - (1/2) log|g'|^2 - 2 log 2 - log|c(g)|^2.
OneFormSample theta_form_from_entries(const MoebiusMap& g,
                                      const MetricDensity& m, Complex z);

// Pair form u_{g1,g2}: with A = Q_{g2}(g1 z) g1'(z), B = Q_{g1}(z) and
// AB = Q_{g2 g1}(z) = A + B,
//   dz coefficient    = -L(A) A + L(AB) AB - L(B) B,
//   dzbar coefficient = +L(A) conj(A) - L(AB) conj(AB) + L(B) conj(B),
// where L(X) = log|X|^2; each term drops when its map has c = 0.
OneFormSample u_form(const MoebiusMap& g1, const MoebiusMap& g2, Complex z);

// Equivalent two-term expression through c-entry ratios:
//   -((1/2) log|g1'|^2 + log(|c(g2)|^2 / |c(g2 g1)|^2)) (A dz - conj(A) dzbar)
//   +((1/2) log|g2' o g1|^2 + log(|c(g2 g1)|^2 / |c(g1)|^2)) (B dz - ...).
// Requires c(g1), c(g2), c(g2 g1) all nonzero.
OneFormSample u_form_from_entries(const MoebiusMap& g1, const MoebiusMap& g2,
                                  Complex z);

// Line integral of the theta form of tau^{-1} along the straight segment
// from conj(zj) to zj, for the order-m elliptic fixing {zj, conj(zj)}.
// Equals -8i D(e^{2 i pi/m}) independently of zj.
Complex elliptic_term_integral(int m, Complex zj, const MetricDensity& m_den,
                               double tol = 1e-9);

struct EllipticTermParts {
    Complex part_i;    // 8 Li2(-i tan b) - 8 Li2(i tan b), by quadrature
    Complex part_ii;   // 8 i b log(4 sin^2 b), exact
    Complex part_iii;  // -4 * segment log integral at (cos b, sin b)
};

// Decomposition of the line integral above for beta in (0, pi/2).
EllipticTermParts elliptic_term_parts(double beta, double tol = 1e-10);

// int_0^1 log|x+isy|^2 dlog((x+isy)/(x-isy)), x > 0, by quadrature.
Complex segment_log_integral(double x, double y, double tol = 1e-10);

// Closed form of the same integral:
//   log(2x) log((x+iy)/(x-iy)) - Li2((x+iy)/(2x)) + Li2((x-iy)/(2x)).
Complex segment_log_integral_closed(double x, double y);

// S = 8 pi chi + 4 sum_j D(e^{2 pi i / m_j}).
double classical_action(const SurfaceSignature& sig);

}  // namespace holocheck
