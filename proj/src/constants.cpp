#include "floorsum/constants.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "floorsum/parallel.hpp"
#include "floorsum/summation.hpp"

namespace floorsum::constants {

using arith::ArithFunc;

namespace {

constexpr double kPi = 3.14159265358979323846;

double term(uint64_t n, double fn) {
    return fn / (static_cast<double>(n) * (static_cast<double>(n) + 1.0));
}

// sup_{n > M} |f(n)| is 1 for the bounded kinds; the power family uses
// the integral majorant sum_{n>M} n^{(eta-5)/2} <= (2/(3-eta)) M^{(eta-3)/2}.
double tail_bound(const ArithFunc& f, uint64_t M) {
    double Md = static_cast<double>(M);
    switch (f.kind()) {
    case ArithFunc::Kind::MuK:
    case ArithFunc::Kind::Mobius:
    case ArithFunc::Kind::One:
        return 1.0 / (Md + 1.0);
    case ArithFunc::Kind::PowerEta: {
        double eta = f.eta();
        return 2.0 / (3.0 - eta) * std::pow(Md, (eta - 3.0) / 2.0);
    }
    case ArithFunc::Kind::Table: {
        const auto& v = f.table_values();
        double b = 0.0;
        for (uint64_t n = M + 1; n <= v.size(); ++n)
            b = std::max(b, std::fabs(v[n - 1]));
        // f vanishes past the table; keep the bound positive and finite
        return std::max(b / (Md + 1.0), 1e-18);
    }
    }
    throw CapabilityError("no tail bound for " + f.label());
}

} // namespace

const char* method_name(Method m) {
    switch (m) {
    case Method::direct_truncation: return "direct_truncation";
    case Method::convolution_accelerated: return "convolution_accelerated";
    case Method::tail_corrected: return "tail_corrected";
    case Method::closed_form: return "closed_form";
    }
    return "?";
}

ConstantResult c_f_direct(const ArithFunc& f, uint64_t M, unsigned threads) {
    if (M < 1) throw UsageError("c_f_direct requires M >= 1");

    ConstantResult r;
    r.method = Method::direct_truncation;
    r.M = M;
    r.abs_error_bound = tail_bound(f, M);

    if (f.integer_valued()) {
        uint64_t n_segments = (M + arith::kSegmentLen - 1) / arith::kSegmentLen;
        std::vector<KahanSum> partial(n_segments);
        parallel_indexed(n_segments, threads, [&](size_t s) {
            uint64_t lo = 1 + s * arith::kSegmentLen;
            uint64_t hi = std::min(M, lo + arith::kSegmentLen - 1);
            std::vector<int8_t> vals = f.values_int(lo, hi);
            KahanSum acc;
            for (uint64_t n = lo; n <= hi; ++n) {
                int8_t v = vals[n - lo];
                if (v != 0) acc.add(term(n, v));
            }
            partial[s] = acc;
        });
        KahanSum total;
        for (const KahanSum& p : partial) total.merge(p);
        r.value = total.value();
        return r;
    }

    KahanSum acc;
    uint64_t top = f.kind() == ArithFunc::Kind::Table
                       ? std::min<uint64_t>(M, f.table_values().size())
                       : M;
    for (uint64_t n = 1; n <= top; ++n) acc.add(term(n, f.eval_real(n)));
    r.value = acc.value();
    return r;
}

double t_of_q(uint64_t q, double eps) {
    if (q < 1) throw UsageError("t_of_q requires q >= 1");
    if (!(eps > 0)) throw UsageError("t_of_q requires eps > 0");
    double qd = static_cast<double>(q);

    // direct sum to M0, then the midpoint of the integral brackets
    //   int_{M0+1}^inf <= tail <= int_{M0}^inf,  int_A^inf = log1p(1/(qA))/q;
    // the residual error is at most f(M0)/2 = 1/(2 q M0 (q M0 + 1)).
    auto m0_for = [&](double e) {
        double m = 1.0 / (qd * std::sqrt(2.0 * e));
        return static_cast<uint64_t>(std::max(1.0, std::ceil(m)));
    };
    uint64_t M0 = m0_for(eps);
    if (M0 > (uint64_t(1) << 31))
        throw NumericError("t_of_q: eps unreachable within iteration budget");

    KahanSum acc;
    for (uint64_t m = 1; m <= M0; ++m) {
        double qm = qd * static_cast<double>(m);
        acc.add(1.0 / (qm * (qm + 1.0)));
    }
    double upper = std::log1p(1.0 / (qd * static_cast<double>(M0))) / qd;
    double lower = std::log1p(1.0 / (qd * static_cast<double>(M0 + 1))) / qd;
    acc.add(0.5 * (upper + lower));
    return acc.value();
}

ConstantResult c_mu_k_accelerated(int k, double tol) {
    if (k < 2 || k > 62) throw UsageError("k must satisfy 2 <= k <= 62");
    if (!(tol >= 1e-12)) throw UsageError("tol must be >= 1e-12");

    // outer truncation: sum_{l>L} T(l^k) <= (pi^2/6) L^{1-2k} / (2k-1)
    double zeta2 = kPi * kPi / 6.0;
    double L_real =
        std::pow(zeta2 / ((2.0 * k - 1.0) * (tol / 2.0)), 1.0 / (2.0 * k - 1.0));
    uint64_t L = static_cast<uint64_t>(std::ceil(L_real)) + 1;
    double outer_bound = zeta2 * std::pow(static_cast<double>(L), 1.0 - 2.0 * k) /
                         (2.0 * k - 1.0);

    arith::SieveTable mu = arith::sieve_mobius(L);

    // per-l inner budget eps_l = (tol/2) * (6/pi^2) / l^2 sums to < tol/2
    KahanSum acc;
    acc.add(1.0); // l = 1: T(1) = 1 exactly
    double inner_bound = 0.0;
    uint64_t work = 0;
    for (uint64_t l = 2; l <= L; ++l) {
        int8_t ml = mu.at(l);
        if (ml == 0) continue;
        double q = std::pow(static_cast<double>(l), k);
        if (!(q < 9.3e18)) break; // T(q) below any budget here
        double eps_l =
            (tol / 2.0) / zeta2 / (static_cast<double>(l) * static_cast<double>(l));
        uint64_t M0 = static_cast<uint64_t>(
            std::max(1.0, std::ceil(1.0 / (q * std::sqrt(2.0 * eps_l)))));
        work += M0;
        if (work > (uint64_t(2) << 30))
            throw NumericError(
                "c_mu_k_accelerated: tol unreachable within iteration budget");

        KahanSum t;
        for (uint64_t m = 1; m <= M0; ++m) {
            double qm = q * static_cast<double>(m);
            t.add(1.0 / (qm * (qm + 1.0)));
        }
        double upper = std::log1p(1.0 / (q * static_cast<double>(M0))) / q;
        double lower = std::log1p(1.0 / (q * static_cast<double>(M0 + 1))) / q;
        t.add(0.5 * (upper + lower));

        double qm0 = q * static_cast<double>(M0);
        inner_bound += 0.5 / (qm0 * (qm0 + 1.0));
        acc.add(static_cast<double>(ml) * t.value());
    }

    ConstantResult r;
    r.value = acc.value();
    r.abs_error_bound = outer_bound + inner_bound + 1e-14;
    r.method = Method::convolution_accelerated;
    r.M = L;
    if (r.abs_error_bound > tol)
        throw NumericError("c_mu_k_accelerated: bound exceeded tol");
    return r;
}

ConstantResult c_power_eta(double eta, double tol) {
    if (!(eta > 0.0 && eta < 2.0))
        throw UsageError("power_eta requires eta in (0, 2)");
    if (!(tol >= 1e-12)) throw UsageError("tol must be >= 1e-12");

    ConstantResult r;
    if (eta == 1.0) {
        // f == 1: the series telescopes to exactly 1
        r.value = 1.0;
        r.abs_error_bound = 1e-15;
        r.method = Method::closed_form;
        r.M = 0;
        return r;
    }

    double s = (eta - 1.0) / 2.0;
    const uint64_t M = 1'000'000;
    double Md = static_cast<double>(M);

    KahanSum acc;
    for (uint64_t n = 1; n <= M; ++n)
        acc.add(term(n, std::pow(static_cast<double>(n), s)));

    // tail: n^s/(n(n+1)) = sum_j (-1)^j n^{s-2-j}; four zeta-tail terms,
    // each by Euler-Maclaurin with error below the first omitted term
    double em_err = 0.0;
    for (int j = 0; j < 4; ++j) {
        double alpha = 2.0 + j - s;
        double z = std::pow(Md, 1.0 - alpha) / (alpha - 1.0) -
                   0.5 * std::pow(Md, -alpha) +
                   alpha / 12.0 * std::pow(Md, -alpha - 1.0) -
                   alpha * (alpha + 1.0) * (alpha + 2.0) / 720.0 *
                       std::pow(Md, -alpha - 3.0);
        em_err += alpha * (alpha + 1.0) * (alpha + 2.0) * (alpha + 3.0) *
                  (alpha + 4.0) / 30240.0 * std::pow(Md, -alpha - 5.0);
        acc.add((j % 2 == 0 ? 1.0 : -1.0) * z);
    }
    double expansion_rem = std::pow(Md, s - 5.0) / (5.0 - s);

    r.value = acc.value();
    r.abs_error_bound = std::max(em_err + expansion_rem + 1e-13, 1e-13);
    r.method = Method::tail_corrected;
    r.M = M;
    if (r.abs_error_bound > tol)
        throw NumericError("c_power_eta: bound exceeded tol");
    return r;
}

ConstantResult c_for(const ArithFunc& f, double tol, unsigned threads) {
    switch (f.kind()) {
    case ArithFunc::Kind::One: {
        ConstantResult r;
        r.value = 1.0;
        r.abs_error_bound = 1e-15;
        r.method = Method::closed_form;
        return r;
    }
    case ArithFunc::Kind::MuK:
        return c_mu_k_accelerated(f.k(), tol);
    case ArithFunc::Kind::PowerEta:
        return c_power_eta(f.eta(), tol);
    case ArithFunc::Kind::Table: {
        // finite support: the truncated sum at the table end is exact
        ConstantResult r = c_f_direct(f, f.table_values().size(), threads);
        return r;
    }
    case ArithFunc::Kind::Mobius:
        break;
    }
    throw CapabilityError("no method reaches tol=" + std::to_string(tol) +
                          " for " + f.label());
}

} // namespace floorsum::constants
