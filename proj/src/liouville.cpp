#include "holocheck/liouville.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "holocheck/quad.hpp"
#include "holocheck/specfun.hpp"

namespace holocheck {

namespace {

constexpr double kPi = std::numbers::pi;

Complex nan_form_value() {
    return Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
}

}  // namespace

SurfaceSignature::SurfaceSignature(int g, int n, std::vector<int> ms)
    : genus(g), punctures(n), orders(std::move(ms)) {
    if (g < 0 || n < 0) {
        throw std::invalid_argument("SurfaceSignature: negative genus/punctures");
    }
    for (int m : orders) {
        if (m < 2) {
            throw std::invalid_argument("SurfaceSignature: order below 2");
        }
    }
    std::sort(orders.begin(), orders.end());
    if (euler_characteristic(*this).num <= 0) {
        throw std::invalid_argument("SurfaceSignature: not hyperbolic");
    }
}

Rational euler_characteristic(const SurfaceSignature& sig) {
    long long den = 1;
    for (int m : sig.orders) den = std::lcm(den, (long long)m);
    long long num = (2LL * sig.genus - 2 + sig.punctures) * den;
    for (int m : sig.orders) num += den - den / m;
    const long long g = std::gcd(std::abs(num), den);
    return {num / g, den / g};
}

MetricDensity fuchsian_density() {
    MetricDensity m;
    m.region = MetricDensity::Region::upper_half_plane;
    m.phi = [](Complex z) {
        const double y = z.imag();
        if (y == 0.0) throw std::domain_error("fuchsian phi: real axis");
        return -std::log(y * y);
    };
    m.phi_z = [](Complex z) {
        const double y = z.imag();
        if (y == 0.0) throw std::domain_error("fuchsian phi_z: real axis");
        return Complex(0.0, 1.0 / y);
    };
    return m;
}

double omega_density(const MetricDensity& m, Complex z) {
    return std::norm(m.phi_z(z)) + std::exp(m.phi(z));
}

OneFormSample theta_form(const MoebiusMap& g, const MetricDensity& m,
                         Complex z) {
    OneFormSample out;
    out.at = z;
    if (g.c == Complex(0.0)) return out;
    const Complex q = log_derivative_ratio(g, z);
    const double scalar = m.phi(z) - std::log(std::norm(q));
    out.dz_coeff = scalar * q;
    out.dzbar_coeff = -scalar * std::conj(q);
    return out;
}

OneFormSample theta_form_from_entries(const MoebiusMap& g,
                                      const MetricDensity& m, Complex z) {
    OneFormSample out;
    out.at = z;
    if (g.c == Complex(0.0)) return out;
    const Complex den = g.c * z + g.d;
    if (den == Complex(0.0)) {
        throw std::domain_error("theta_form_from_entries: pole of the map");
    }
    const Complex gp = 1.0 / (den * den);
    const double scalar = m.phi(z) - 0.5 * std::log(std::norm(gp)) -
                          2.0 * std::log(2.0) - std::log(std::norm(g.c));
    const Complex q = -2.0 * g.c / den;
    out.dz_coeff = scalar * q;
    out.dzbar_coeff = -scalar * std::conj(q);
    return out;
}

OneFormSample u_form(const MoebiusMap& g1, const MoebiusMap& g2, Complex z) {
    OneFormSample out;
    out.at = z;
    const Complex den1 = g1.c * z + g1.d;
    if (den1 == Complex(0.0)) throw std::domain_error("u_form: pole of g1");
    Complex dz = 0.0, dzbar = 0.0;
    if (g2.c != Complex(0.0)) {
        const Complex w = (g1.a * z + g1.b) / den1;
        const Complex den2 = g2.c * w + g2.d;
        if (den2 == Complex(0.0)) {
            throw std::domain_error("u_form: pole of g2 at g1(z)");
        }
        const Complex a = (-2.0 * g2.c / den2) / (den1 * den1);
        const double la = std::log(std::norm(a));
        dz -= la * a;
        dzbar += la * std::conj(a);
    }
    const MoebiusMap g21 = g2 * g1;
    if (g21.c != Complex(0.0)) {
        const Complex den21 = g21.c * z + g21.d;
        if (den21 == Complex(0.0)) {
            throw std::domain_error("u_form: pole of g2*g1");
        }
        const Complex ab = -2.0 * g21.c / den21;
        const double lab = std::log(std::norm(ab));
        dz += lab * ab;
        dzbar -= lab * std::conj(ab);
    }
    if (g1.c != Complex(0.0)) {
        const Complex b = -2.0 * g1.c / den1;
        const double lb = std::log(std::norm(b));
        dz -= lb * b;
        dzbar += lb * std::conj(b);
    }
    out.dz_coeff = dz;
    out.dzbar_coeff = dzbar;
    return out;
}

OneFormSample u_form_from_entries(const MoebiusMap& g1, const MoebiusMap& g2,
                                  Complex z) {
    const MoebiusMap g21 = g2 * g1;
    if (g1.c == Complex(0.0) || g2.c == Complex(0.0) ||
        g21.c == Complex(0.0)) {
        throw std::invalid_argument(
            "u_form_from_entries: needs c(g1), c(g2), c(g2 g1) nonzero");
    }
    const Complex den1 = g1.c * z + g1.d;
    if (den1 == Complex(0.0)) {
        throw std::domain_error("u_form_from_entries: pole of g1");
    }
    const Complex w = (g1.a * z + g1.b) / den1;
    const Complex den2 = g2.c * w + g2.d;
    if (den2 == Complex(0.0)) {
        throw std::domain_error("u_form_from_entries: pole of g2 at g1(z)");
    }
    const Complex gp1 = 1.0 / (den1 * den1);
    const Complex gp2 = 1.0 / (den2 * den2);
    const Complex a = (-2.0 * g2.c / den2) * gp1;
    const Complex b = -2.0 * g1.c / den1;
    const double s1 = 0.5 * std::log(std::norm(gp1)) +
                      std::log(std::norm(g2.c)) - std::log(std::norm(g21.c));
    const double s2 = 0.5 * std::log(std::norm(gp2)) +
                      std::log(std::norm(g21.c)) - std::log(std::norm(g1.c));
    OneFormSample out;
    out.at = z;
    out.dz_coeff = -s1 * a + s2 * b;
    out.dzbar_coeff = s1 * std::conj(a) - s2 * std::conj(b);
    return out;
}

Complex elliptic_term_integral(int m, Complex zj, const MetricDensity& m_den,
                               double tol) {
    if (m < 2) {
        throw std::invalid_argument("elliptic_term_integral: order below 2");
    }
    const double y = zj.imag();
    if (y == 0.0) {
        throw std::invalid_argument("elliptic_term_integral: real fixed point");
    }
    const EllipticPair pair(m, zj, std::conj(zj));
    const MoebiusMap g = elliptic_from_pair(pair).first.inverse();
    const double x = zj.real();
    auto integrand = [&](double s) -> Complex {
        const Complex z(x, s * y);
        try {
            const OneFormSample th = theta_form(g, m_den, z);
            return Complex(0.0, y) * (th.dz_coeff - th.dzbar_coeff);
        } catch (const std::domain_error&) {
            return nan_form_value();
        }
    };
    return integrate_1d(integrand, -1.0, 1.0, tol).value;
}

Complex segment_log_integral(double x, double y, double tol) {
    if (!(x > 0.0)) {
        throw std::invalid_argument("segment_log_integral: x must be > 0");
    }
    auto integrand = [=](double s) -> Complex {
        const Complex u(x, s * y);
        const Complex v(x, -s * y);
        const double lg = std::log(x * x + s * s * y * y);
        return lg * (Complex(0.0, y) / u + Complex(0.0, y) / v);
    };
    return integrate_1d(integrand, 0.0, 1.0, tol).value;
}

Complex segment_log_integral_closed(double x, double y) {
    if (!(x > 0.0)) {
        throw std::invalid_argument(
            "segment_log_integral_closed: x must be > 0");
    }
    const Complex u(x, y);
    const Complex v(x, -y);
    return std::log(2.0 * x) * std::log(u / v) - li2(u / (2.0 * x)) +
           li2(v / (2.0 * x));
}

EllipticTermParts elliptic_term_parts(double beta, double tol) {
    if (!(beta > 0.0 && beta < kPi / 2.0)) {
        throw std::invalid_argument(
            "elliptic_term_parts: beta must lie in (0, pi/2)");
    }
    const double t = std::tan(beta);
    const double sb = std::sin(beta);
    const double cb = std::cos(beta);
    EllipticTermParts out;
    auto integrand_i = [=](double s) -> Complex {
        const Complex dlg =
            Complex(0.0, t) / Complex(1.0, s * t) +
            Complex(0.0, t) / Complex(1.0, -s * t);
        return 8.0 * std::log(s) * dlg;
    };
    out.part_i = integrate_1d(integrand_i, 0.0, 1.0, tol).value;
    out.part_ii = Complex(0.0, 8.0 * beta) * std::log(4.0 * sb * sb);
    out.part_iii = -4.0 * segment_log_integral(cb, sb, tol);
    return out;
}

double classical_action(const SurfaceSignature& sig) {
    double s = 8.0 * kPi * euler_characteristic(sig).to_double();
    for (int m : sig.orders) {
        s += 4.0 * bw_unit_circle(2.0 * kPi / m);
    }
    return s;
}

}  // namespace holocheck
