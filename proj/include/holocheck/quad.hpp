#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "holocheck/specfun.hpp"

namespace holocheck {

struct QuadResult {
    Complex value{0.0, 0.0};
    double abs_error = 0.0;
    long evaluations = 0;
    bool converged = false;
};

// Thrown when the refinement budget runs out; carries the best estimate.
class AccuracyError : public std::runtime_error {
  public:
    AccuracyError(const char* what, QuadResult best_estimate)
        : std::runtime_error(what), best(best_estimate) {}
    QuadResult best;
};

// Adaptive 1D integration of a complex-valued integrand over (a, b).
//
// Each panel is handled by a tanh-sinh (double-exponential) rule, so
// integrable endpoint singularities (log s and milder) need no special
// casing; abscissae are generated from their distance to the nearest
// endpoint and points that would round onto an endpoint are skipped.
// Panels that fail to converge, or that produce a non-finite sample
// (interior singularity), are bisected; the singular point ends up on a
// panel boundary where the rule never samples.
QuadResult integrate_1d(const std::function<Complex(double)>& f, double a,
                        double b, double tol);

// Tensor-product version for surface densities: integrates f(u,v) du dv
// over [u0,u1] x [v0,v1] to absolute tolerance tol.
QuadResult integrate_surface(const std::function<double(double, double)>& f,
                             double u0, double u1, double v0, double v1,
                             double tol);

struct FinitePartResult {
    double finite_part = 0.0;      // B in I(eps) = A log eps + B + C eps
    double log_coefficient = 0.0;  // A
    double fit_residual = 0.0;     // rms misfit over the ladder
};

class ModelMismatchError : public std::runtime_error {
  public:
    ModelMismatchError(const char* what, FinitePartResult fit_result)
        : std::runtime_error(what), fit(fit_result) {}
    FinitePartResult fit;
};

// eps0 * 2^-k for k = k_min..k_max.
std::vector<double> geometric_ladder(double eps0, int k_min, int k_max);

// Least-squares fit of I(eps) ~ A log eps + B + C eps over the ladder and
// extraction of the finite part B.  The eps regressor absorbs the O(eps)
// endpoint corrections that geometric truncations carry; without it the
// finite part of even synthetic inputs with an eps term is off at the
// 1e-2 level on short ladders.  Throws ModelMismatchError (with the fit
// attached) when the rms residual exceeds residual_threshold.
FinitePartResult finite_part(const std::function<double(double)>& I,
                             const std::vector<double>& ladder,
                             double residual_threshold = 1e-6);

}  // namespace holocheck
