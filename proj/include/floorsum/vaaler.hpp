#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "floorsum/errors.hpp"

namespace floorsum::vaaler {

// Trigonometric approximation psi*(x) = sum_{1<=|h|<=H} gamma(h) e(hx)
// with gamma(-h) = conj(gamma(h)) and |gamma(h)| <= 1/|h|.
struct VaalerApprox {
    int H = 0;
    std::vector<std::complex<double>> gamma_pos; // gamma(h), h = 1..H

    std::complex<double> gamma(int h) const {
        if (h >= 1 && h <= H) return gamma_pos[h - 1];
        if (h <= -1 && h >= -H) return std::conj(gamma_pos[-h - 1]);
        throw UsageError("gamma(h) requires 1 <= |h| <= H");
    }
};

// Coefficients gamma(h) = -W(h/(H+1)) / (2 pi i h) with the taper
// W(t) = pi t (1-t) cot(pi t) + t, which makes the approximation error
// majorized by the order-(H+1) Fejer kernel over 2H+2.
VaalerApprox build_vaaler(int H);

// Real part of the coefficient sum; the imaginary part cancels to
// <= 1e-12 by conjugate symmetry.
double psi_star_eval(const VaalerApprox& v, double x);

struct VerifyResult {
    int H = 0;
    int grid_size = 0;
    // max over the grid of |psi* - psi| - RHS with the cited source's
    // Fejer weights (1 - |h|/(H+1)); expected <= 1e-12
    double max_violation = 0.0;
    double argmax_x = 0.0;
    // same under the weights (1 - |h|/H); reported for comparison, the
    // bound genuinely fails at integers under this reading
    double max_violation_alt_weight = 0.0;
    double argmax_x_alt = 0.0;
    double max_abs_error = 0.0; // max |psi* - psi|
    double max_h_gamma = 0.0;   // max |h * gamma(h)|
    double min_rhs = 0.0;       // min of the kernel majorant (>= 0)
};

// Checks |psi*(x) - psi(x)| <= kernel/(2H+2) on a uniform grid of [0, 1).
// Throws NumericError (with the offending x) if the source-weight bound
// is violated beyond 1e-12.
VerifyResult verify_bound(int H, int grid_size);

} // namespace floorsum::vaaler
