#pragma once

#include <complex>

namespace holocheck {

using Complex = std::complex<double>;

// Principal-branch complex dilogarithm Li2(z).
//
// Power series on |z| <= 1/2; the inversion z -> 1/z and reflection
// z -> 1-z functional equations move every other argument into
// {|z| <= 1, Re z <= 1/2}, where either the power series or a
// log-argument series in u = -log(1-z) converges geometrically.
// Relative error ~1e-15 away from the branch cut [1,inf); on the cut the
// value is continuous from above (signed zeros are honored, so
// li2({x,+0.0}) for x>1 returns the upper-edge limit).
// li2(1) = pi^2/6 as a limit.  Non-finite input throws std::domain_error.
Complex li2(Complex z);

struct BWResult {
    double value = 0.0;
    double abs_error_bound = 0.0;
};

// Bloch-Wigner function D(z) = Im Li2(z) + arg(1-z) log|z|.
// Real-valued and continuous on all of C; vanishes identically on the real
// axis (including at 0 and 1, where the defining formula is a removable
// limit).  abs_error_bound is a conservative rounding estimate, well below
// 1e-12 for arguments of moderate size.
BWResult bloch_wigner(Complex z);

// D(e^{i theta}) = sum_{n>=1} sin(n theta)/n^2.  2pi-periodic, odd.
double bw_unit_circle(double theta);

}  // namespace holocheck
