#include "holocheck/quad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace holocheck {

namespace {

constexpr double kPiHalf = std::numbers::pi / 2.0;
constexpr int kMaxLevel = 9;   // finest spacing h = 2^-kMaxLevel
constexpr double kTMax = 6.5;  // |t| beyond this underflows the weight
constexpr int kMaxDepth = 26;
constexpr long kDefaultBudget = 8'000'000;

struct PanelState {
    const std::function<Complex(double)>* f;
    long evaluations = 0;
    long budget = kDefaultBudget;
};

enum class Sample { ok, skip, bad };

// One tanh-sinh sample at transformed coordinate t for the panel (a,b).
// `skip` marks abscissae that round onto an endpoint or whose weight
// underflows; `bad` marks a non-finite integrand value (caller bisects).
Sample sample(PanelState& st, double a, double b, double t, Complex& out,
              double& weight) {
    const double half = 0.5 * (b - a);
    const double u = kPiHalf * std::sinh(t);
    // distance to the nearer endpoint, computed without cancellation
    const double e2u = std::exp(-2.0 * std::abs(u));
    const double dist = half * 2.0 * e2u / (1.0 + e2u);
    if (dist == 0.0) return Sample::skip;
    const double ch = std::cosh(u);
    weight = half * kPiHalf * std::cosh(t) / (ch * ch);
    if (!std::isfinite(weight) || weight == 0.0) return Sample::skip;
    const double x = (t >= 0.0) ? b - dist : a + dist;
    ++st.evaluations;
    out = (*st.f)(x);
    if (!std::isfinite(out.real()) || !std::isfinite(out.imag())) {
        return Sample::bad;
    }
    return Sample::ok;
}

struct PanelOutcome {
    Complex value;
    double err;
    bool ok;         // converged
    bool bad_point;  // non-finite sample: bisect regardless of level
};

PanelOutcome tanh_sinh_panel(PanelState& st, double a, double b, double tol) {
    Complex sum = 0.0;
    double h = 1.0;
    {
        Complex v;
        double w;
        switch (sample(st, a, b, 0.0, v, w)) {
            case Sample::ok: sum = v * w; break;
            case Sample::skip: break;
            case Sample::bad: return {Complex(0), 0.0, false, true};
        }
        for (int j = 1; j * h <= kTMax; ++j) {
            for (double s : {+1.0, -1.0}) {
                switch (sample(st, a, b, s * j * h, v, w)) {
                    case Sample::ok: sum += v * w; break;
                    case Sample::skip: break;
                    case Sample::bad: return {Complex(0), 0.0, false, true};
                }
            }
        }
    }
    Complex prev = sum * h;
    double err = std::abs(prev);
    for (int level = 1; level <= kMaxLevel; ++level) {
        h *= 0.5;
        Complex add = 0.0;
        for (int j = 1; j * h <= kTMax; j += 2) {  // odd multiples only
            for (double s : {+1.0, -1.0}) {
                Complex v;
                double w;
                switch (sample(st, a, b, s * j * h, v, w)) {
                    case Sample::ok: add += v * w; break;
                    case Sample::skip: break;
                    case Sample::bad: return {Complex(0), 0.0, false, true};
                }
            }
        }
        sum += add;
        Complex cur = sum * h;
        err = std::abs(cur - prev);
        prev = cur;
        double scale = std::max(1.0, std::abs(cur));
        if (err <= std::max(tol, 4e-16 * scale)) {
            return {cur, err, true, false};
        }
        if (st.evaluations >= st.budget) break;
    }
    return {prev, err, false, false};
}

void integrate_recursive(PanelState& st, double a, double b, double tol,
                         int depth, Complex& acc_value, double& acc_err,
                         bool& all_ok) {
    PanelOutcome out = tanh_sinh_panel(st, a, b, tol);
    if (out.ok) {
        acc_value += out.value;
        acc_err += out.err;
        return;
    }
    const double mid = 0.5 * (a + b);
    if (depth >= kMaxDepth || st.evaluations >= st.budget || mid <= a ||
        mid >= b) {
        acc_value += out.value;
        acc_err += std::max(out.err, tol);
        all_ok = false;
        return;
    }
    integrate_recursive(st, a, mid, 0.5 * tol, depth + 1, acc_value, acc_err,
                        all_ok);
    integrate_recursive(st, mid, b, 0.5 * tol, depth + 1, acc_value, acc_err,
                        all_ok);
}

}  // namespace

QuadResult integrate_1d(const std::function<Complex(double)>& f, double a,
                        double b, double tol) {
    if (!(std::isfinite(a) && std::isfinite(b)) || !(tol > 0.0)) {
        throw std::invalid_argument("integrate_1d: bad interval or tolerance");
    }
    if (a == b) return {Complex(0), 0.0, 0, true};
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    PanelState st{&f};
    Complex value = 0.0;
    double err = 0.0;
    bool all_ok = true;
    integrate_recursive(st, a, b, tol, 0, value, err, all_ok);
    QuadResult r{sign * value, err, st.evaluations, all_ok && err <= 2.0 * tol};
    if (!r.converged) {
        throw AccuracyError("integrate_1d: tolerance not reached", r);
    }
    return r;
}

QuadResult integrate_surface(const std::function<double(double, double)>& f,
                             double u0, double u1, double v0, double v1,
                             double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("integrate_surface: bad tolerance");
    }
    const double inner_tol = 0.2 * tol / std::max(1.0, std::abs(u1 - u0));
    long inner_evals = 0;
    bool inner_all_ok = true;
    auto outer = [&](double u) -> Complex {
        QuadResult inner;
        try {
            inner = integrate_1d(
                [&](double v) { return Complex(f(u, v), 0.0); }, v0, v1,
                inner_tol);
        } catch (const AccuracyError& e) {
            inner = e.best;
            inner_all_ok = false;
        }
        inner_evals += inner.evaluations;
        return inner.value;
    };
    QuadResult r;
    try {
        r = integrate_1d(outer, u0, u1, 0.5 * tol);
    } catch (const AccuracyError& e) {
        r = e.best;
    }
    r.evaluations = inner_evals;
    r.abs_error += inner_tol * std::abs(u1 - u0);
    r.converged = r.converged && inner_all_ok && r.abs_error <= 2.0 * tol;
    if (!r.converged) {
        throw AccuracyError("integrate_surface: tolerance not reached", r);
    }
    return r;
}

std::vector<double> geometric_ladder(double eps0, int k_min, int k_max) {
    if (!(eps0 > 0.0) || k_min > k_max) {
        throw std::invalid_argument("geometric_ladder: bad parameters");
    }
    std::vector<double> out;
    out.reserve(k_max - k_min + 1);
    for (int k = k_min; k <= k_max; ++k) {
        out.push_back(eps0 * std::ldexp(1.0, -k));
    }
    return out;
}

FinitePartResult finite_part(const std::function<double(double)>& I,
                             const std::vector<double>& ladder,
                             double residual_threshold) {
    const size_t n = ladder.size();
    if (n < 3) {
        throw std::invalid_argument("finite_part: ladder needs >= 3 points");
    }
    std::vector<double> y(n);
    std::vector<std::array<double, 3>> X(n);
    for (size_t i = 0; i < n; ++i) {
        double eps = ladder[i];
        if (!(eps > 0.0)) throw std::invalid_argument("finite_part: eps <= 0");
        y[i] = I(eps);
        X[i] = {std::log(eps), 1.0, eps};
    }
    // least squares via modified Gram-Schmidt QR on the three columns
    std::array<std::vector<double>, 3> q;
    double R[3][3] = {};
    for (int c = 0; c < 3; ++c) {
        q[c].resize(n);
        for (size_t i = 0; i < n; ++i) q[c][i] = X[i][c];
        for (int p = 0; p < c; ++p) {
            double dot = 0.0;
            for (size_t i = 0; i < n; ++i) dot += q[p][i] * q[c][i];
            R[p][c] = dot;
            for (size_t i = 0; i < n; ++i) q[c][i] -= dot * q[p][i];
        }
        double nrm = 0.0;
        for (size_t i = 0; i < n; ++i) nrm += q[c][i] * q[c][i];
        nrm = std::sqrt(nrm);
        if (nrm == 0.0) {
            throw std::invalid_argument("finite_part: degenerate ladder");
        }
        R[c][c] = nrm;
        for (size_t i = 0; i < n; ++i) q[c][i] /= nrm;
    }
    double qty[3];
    for (int c = 0; c < 3; ++c) {
        qty[c] = 0.0;
        for (size_t i = 0; i < n; ++i) qty[c] += q[c][i] * y[i];
    }
    double coef[3];
    for (int c = 2; c >= 0; --c) {
        coef[c] = qty[c];
        for (int p = c + 1; p < 3; ++p) coef[c] -= R[c][p] * coef[p];
        coef[c] /= R[c][c];
    }
    double ss = 0.0;
    for (size_t i = 0; i < n; ++i) {
        double fit = coef[0] * X[i][0] + coef[1] * X[i][1] + coef[2] * X[i][2];
        ss += (y[i] - fit) * (y[i] - fit);
    }
    FinitePartResult r{coef[1], coef[0], std::sqrt(ss / double(n))};
    if (r.fit_residual > residual_threshold) {
        throw ModelMismatchError("finite_part: residual above threshold", r);
    }
    return r;
}

}  // namespace holocheck
