#pragma once

#include <cstdint>

#include "floorsum/arith.hpp"

namespace floorsum::constants {

enum class Method {
    direct_truncation,
    convolution_accelerated,
    tail_corrected,
    closed_form,
};

const char* method_name(Method m);

// Value of C_f = sum_{n>=1} f(n)/(n(n+1)) with a rigorous absolute
// error bound. Two results for the same f must agree within the sum of
// their bounds.
struct ConstantResult {
    double value = 0.0;
    double abs_error_bound = 0.0;
    Method method = Method::direct_truncation;
    uint64_t M = 0; // truncation point
};

// Truncated sum over n <= M, compensated; the tail bound telescopes:
// sum_{n>M} 1/(n(n+1)) = 1/(M+1), scaled by a sup bound on |f| past M
// (analytic integral majorant for the power family). Segments combine
// in fixed order, so the result does not depend on `threads`.
ConstantResult c_f_direct(const arith::ArithFunc& f, uint64_t M,
                          unsigned threads = 1);

// Independent fast method for f = mu_k via the convolution kernel:
// C = sum_l mu(l) * T(l^k) with T(q) = sum_{m>=1} 1/(qm(qm+1)).
// The outer sum truncates when the pi^2/(6 l^{2k}) majorant tail drops
// below tol/2; inner sums get the other tol/2.
ConstantResult c_mu_k_accelerated(int k, double tol);

// Power-family constant with an integral/Euler-Maclaurin corrected tail;
// reaches tol down to 1e-12 where plain truncation cannot.
ConstantResult c_power_eta(double eta, double tol);

// Best available method for this descriptor at the requested tolerance.
ConstantResult c_for(const arith::ArithFunc& f, double tol,
                     unsigned threads = 1);

// T(q) to absolute error <= eps. T(1) = 1 (telescoping).
double t_of_q(uint64_t q, double eps);

} // namespace floorsum::constants
