#include "floorsum/vaaler.hpp"

#include <cmath>
#include <string>

#include "floorsum/sums.hpp"

namespace floorsum::vaaler {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

// Vaaler's taper: W(t) = pi t (1-t) cot(pi t) + t on (0, 1);
// decreases from 1 at t->0 to 0 at t->1, so |gamma(h)| <= 1/(2 pi h).
double taper(double t) {
    double s = std::sin(kPi * t);
    return kPi * t * (1.0 - t) * std::cos(kPi * t) / s + t;
}

// Fejer-type kernel sum_{|h|<=H} w(h) cos(2 pi h x) with w(h) = 1-|h|/den.
// Nonnegative for den = H+1 (the order-(H+1) Fejer kernel).
double kernel(int H, double den, double x) {
    double s = std::sin(kPi * x);
    if (den == H + 1.0 && std::fabs(s) > 1e-8) {
        double num = std::sin(kPi * (H + 1.0) * x);
        return num * num / ((H + 1.0) * s * s);
    }
    double acc = 1.0;
    for (int h = 1; h <= H; ++h) {
        double w = 1.0 - h / den;
        if (w <= 0.0) continue;
        acc += 2.0 * w * std::cos(kTwoPi * h * x);
    }
    return acc;
}

} // namespace

VaalerApprox build_vaaler(int H) {
    if (H < 1) throw UsageError("build_vaaler requires H >= 1");
    VaalerApprox v;
    v.H = H;
    v.gamma_pos.reserve(H);
    for (int h = 1; h <= H; ++h) {
        double w = taper(h / (H + 1.0));
        // -W / (2 pi i h) = i W / (2 pi h)
        v.gamma_pos.emplace_back(0.0, w / (kTwoPi * h));
    }
    return v;
}

double psi_star_eval(const VaalerApprox& v, double x) {
    std::complex<double> acc(0.0, 0.0);
    for (int h = 1; h <= v.H; ++h) {
        double angle = kTwoPi * h * x;
        std::complex<double> e(std::cos(angle), std::sin(angle));
        acc += v.gamma_pos[h - 1] * e + std::conj(v.gamma_pos[h - 1] * e);
    }
    return acc.real();
}

VerifyResult verify_bound(int H, int grid_size) {
    if (H < 1) throw UsageError("verify_bound requires H >= 1");
    if (grid_size < 100) throw UsageError("verify_bound requires grid >= 100");

    VaalerApprox v = build_vaaler(H);
    VerifyResult r;
    r.H = H;
    r.grid_size = grid_size;
    r.max_violation = -1e300;
    r.max_violation_alt_weight = -1e300;
    r.min_rhs = 1e300;
    for (int h = 1; h <= H; ++h)
        r.max_h_gamma =
            std::max(r.max_h_gamma, h * std::abs(v.gamma_pos[h - 1]));

    double scale = 1.0 / (2.0 * H + 2.0);
    for (int j = 0; j < grid_size; ++j) {
        double x = static_cast<double>(j) / grid_size;
        double lhs = std::fabs(psi_star_eval(v, x) - psi(x));
        r.max_abs_error = std::max(r.max_abs_error, lhs);

        double rhs = scale * kernel(H, H + 1.0, x);
        r.min_rhs = std::min(r.min_rhs, rhs);
        if (lhs - rhs > r.max_violation) {
            r.max_violation = lhs - rhs;
            r.argmax_x = x;
        }
        double rhs_alt = scale * kernel(H, static_cast<double>(H), x);
        if (lhs - rhs_alt > r.max_violation_alt_weight) {
            r.max_violation_alt_weight = lhs - rhs_alt;
            r.argmax_x_alt = x;
        }
    }
    if (r.max_violation > 1e-12)
        throw NumericError("vaaler bound violated by " +
                           std::to_string(r.max_violation) + " at x=" +
                           std::to_string(r.argmax_x));
    return r;
}

} // namespace floorsum::vaaler
