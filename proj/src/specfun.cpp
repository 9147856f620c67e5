#include "holocheck/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace holocheck {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2Over6 = kPi * kPi / 6.0;

bool finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Direct power series sum z^n / n^2, |z| <= 1/2.
Complex li2_power_series(Complex z) {
    Complex sum = 0.0;
    Complex zp = 1.0;
    for (int n = 1; n < 120; ++n) {
        zp *= z;
        Complex term = zp / double(n * n);
        sum += term;
        if (std::abs(term) < 5e-17 * std::abs(sum)) break;
    }
    return sum;
}

// Coefficients B_{2k}/(2k+1)! of the series
//   Li2(z) = u - u^2/4 + sum_{k>=1} c_k u^{2k+1},  u = -log(1-z),
// convergent for |u| < 2 pi.  Used on the lune |z| <= 1, Re z <= 1/2,
// |z| > 1/2 (e.g. sixth roots of unity) that the power series and the two
// functional equations cannot reach.
constexpr double kLogSeriesCoeff[] = {
    0.027777777777777777778,      // k=1
    -2.7777777777777777778e-4,    // k=2
    4.7241118669690098262e-6,     // k=3
    -9.1857730746619635509e-8,    // k=4
    1.8978869988970999072e-9,     // k=5
    -4.0647616451442255268e-11,   // k=6
    8.9216910204564525552e-13,    // k=7
    -1.9939295860721075687e-14,   // k=8
    4.5189800296199181917e-16,    // k=9
    -1.0356517612181247014e-17,   // k=10
    2.3952186210261867457e-19,    // k=11
    -5.5817858743250093363e-21,   // k=12
    1.3091507554183212858e-22,    // k=13
    -3.0874198024267402932e-24,   // k=14
    7.3159756527022034204e-26,    // k=15
    -1.740845657234000741e-27,    // k=16
    4.1576356446138997196e-29,    // k=17
    -9.9621484882846221032e-31,   // k=18
    2.3940344248961653005e-32,    // k=19
    -5.7683473553673900843e-34,   // k=20
};

Complex li2_log_series(Complex u) {
    Complex sum = u - u * u / 4.0;
    const Complex u2 = u * u;
    Complex p = u;
    for (double c : kLogSeriesCoeff) {
        p *= u2;
        Complex term = c * p;
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

}  // namespace

Complex li2(Complex z) {
    if (!finite(z)) throw std::domain_error("li2: non-finite argument");
    if (z == Complex(0.0)) return Complex(0.0);
    if (z == Complex(1.0)) return Complex(kPi2Over6, 0.0);

    // Map into {|z| <= 1, Re z <= 1/2}; accumulate the functional-equation
    // shifts.  The inversion flips the cut side, which the signed zero of
    // imag(z) tracks through std::log.
    Complex shift = 0.0;
    double factor = 1.0;
    if (std::abs(z) > 1.0) {
        Complex lg = std::log(-z);
        shift += -kPi2Over6 - 0.5 * lg * lg;
        factor = -factor;
        z = 1.0 / z;
    }
    if (z.real() > 0.5) {
        shift += factor * (kPi2Over6 - std::log(z) * std::log(1.0 - z));
        factor = -factor;
        z = 1.0 - z;
    }
    Complex core = (std::abs(z) <= 0.5) ? li2_power_series(z)
                                        : li2_log_series(-std::log(1.0 - z));
    return shift + factor * core;
}

BWResult bloch_wigner(Complex z) {
    if (!finite(z)) throw std::domain_error("bloch_wigner: non-finite argument");
    // D vanishes on the whole real axis: for x<0 and 0<x<1 both terms are
    // zero, and for x>1 the cut discontinuities of the two terms cancel.
    if (z.imag() == 0.0) return {0.0, 0.0};
    double t1 = li2(z).imag();
    double t2 = std::arg(1.0 - z) * std::log(std::abs(z));
    double bound = 8e-16 * (1.0 + std::abs(t1) + std::abs(t2));
    return {t1 + t2, bound};
}

double bw_unit_circle(double theta) {
    if (!std::isfinite(theta)) {
        throw std::domain_error("bw_unit_circle: non-finite argument");
    }
    double r = std::remainder(theta, 2.0 * kPi);
    // Exact zeros of the sine series at multiples of pi.
    if (std::abs(std::remainder(r, kPi)) < 4e-16 * std::max(1.0, std::abs(theta))) {
        return 0.0;
    }
    return bloch_wigner(std::polar(1.0, r)).value;
}

}  // namespace holocheck
