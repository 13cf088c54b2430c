#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "floorsum/arith.hpp"
#include "floorsum/constants.hpp"
#include "floorsum/exppair.hpp"

namespace floorsum::experiments {

// One measurement of the error E_f(x) = S_f(x) - C_f * x.
struct ScalingSample {
    uint64_t x = 0;
    std::variant<int64_t, double> S;
    double Cx = 0.0;
    double E = 0.0;

    double S_double() const {
        return S.index() == 0 ? static_cast<double>(std::get<int64_t>(S))
                              : std::get<double>(S);
    }
};

struct Reference {
    std::string label;
    std::string exact; // "p/q"
    double decimal = 0.0;
};

// Ordinary least squares of ln|E| against ln x over samples with E != 0.
struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    bool degenerate = false; // no usable samples: slope undefined
    size_t n_used = 0;
};

struct ScalingReport {
    std::string f_label;
    constants::ConstantResult c_f;
    std::vector<ScalingSample> samples; // strictly increasing in x
    FitResult fit;
    std::vector<Reference> references;
};

// Evaluates S at `points` log-spaced integer x in [x_min, x_max] via
// eval_blocks, fits the error exponent, and attaches the reference
// exponents relevant to f. C_f is computed to 1e-9 absolute.
ScalingReport scaling_study(const arith::ArithFunc& f, uint64_t x_min,
                            uint64_t x_max, int points, unsigned threads = 1);

// Same study for f = power_eta(eta), after asserting the moment
// hypothesis sum_{n<=x} |f(n)|^2 / x^eta in [0.3/eta, 3/eta] numerically.
ScalingReport power_family_study(double eta, uint64_t x_min, uint64_t x_max,
                                    int points, unsigned threads = 1);

// |G(x, D)| against the two candidate bounds (with and without the
// x^kappa factor), plus the empirical log-log slope in D.
struct GSweepRow {
    uint64_t D = 0;
    double absG = 0.0;
    double bound_plain = 0.0;  // (D^(lambda-kappa))^(1/(1+kappa)) + D^2/x
    double bound_xkappa = 0.0; // (x^kappa D^(lambda-kappa))^(1/(1+kappa)) + D^2/x
};

struct GSweepReport {
    std::string f_label;
    double x = 0.0;
    double delta = 0.0;
    std::string pair;
    std::vector<GSweepRow> rows;
    FitResult fit; // ln|G| vs ln D
};

GSweepReport g_sweep(const arith::ArithFunc& f, double x,
                     const std::vector<uint64_t>& D_values, double delta,
                     const exppair::ExponentPair& pair);

// epsilon_2(x) = sqrt(2 lll x / ll x) * (1 + 30 / lll x); requires the
// triple logarithm to be positive. The _from_logs form takes the two
// inner logarithms directly (used by reports and synthetic checks).
double epsilon2(double x);
double epsilon2_from_logs(double logloglog_x, double loglog_x);

// Ladder of error exponents for S_{mu_k}, ascending.
std::vector<Reference> comparison_table(int k);

// Log-spaced integer grid x_i = round(x_min * (x_max/x_min)^(i/(p-1))),
// deduplicated.
std::vector<uint64_t> log_spaced(uint64_t x_min, uint64_t x_max, int points);

// Serialization. Schemas:
//   CSV   header x,S,Cx,E,log_x,log_absE; floats at 17 significant
//         digits; LF line endings.
//   JSON  {f, c_f:{value,bound,method}, samples:[{x,S,Cx,E}],
//          fit:{slope,intercept,r_squared,degenerate},
//          references:[{label,exact,decimal}]}
std::string to_csv(const ScalingReport& r);
std::string to_json(const ScalingReport& r);
std::string to_csv(const GSweepReport& r);
std::string to_csv(const std::vector<Reference>& table);

} // namespace floorsum::experiments
