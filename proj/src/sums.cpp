#include "floorsum/sums.hpp"

#include <algorithm>
#include <cmath>

#include "floorsum/primes.hpp"
#include "floorsum/summation.hpp"

namespace floorsum {

using arith::ArithFunc;

std::vector<QuotientBlock> quotient_blocks(uint64_t x) {
    if (x == 0) throw UsageError("quotient_blocks requires x >= 1");
    if (isqrt_u64(x) > (uint64_t(1) << 25))
        throw ResourceError(
            "too many blocks to materialize; use for_each_quotient_block");
    std::vector<QuotientBlock> out;
    out.reserve(2 * isqrt_u64(x) + 2);
    for_each_quotient_block(x, [&](QuotientBlock b) { out.push_back(b); });
    return out;
}

SumResult eval_naive(const ArithFunc& f, uint64_t x) {
    if (x == 0) throw UsageError("eval requires x >= 1");
    if (x > kNaiveGuard)
        throw UsageError("eval_naive guard: x must be <= 1e8");

    SumResult r;
    r.x = x;
    r.f_label = f.label();
    r.method = SumMethod::naive;

    if (f.integer_valued()) {
        std::vector<int8_t> table = f.values_int(1, x);
        __int128 acc = 0;
        for (uint64_t n = 1; n <= x; ++n) acc += table[x / n - 1];
        r.value = static_cast<int64_t>(acc);
        return r;
    }
    KahanSum acc;
    for (uint64_t n = 1; n <= x; ++n) acc.add(f.eval_real(x / n));
    r.value = acc.value();
    return r;
}

SumResult eval_blocks(const ArithFunc& f, uint64_t x) {
    if (x == 0) throw UsageError("eval requires x >= 1");
    if (x > f.max_point_arg())
        throw CapabilityError(f.label() + " has no point evaluation at n=" +
                              std::to_string(x));

    SumResult r;
    r.x = x;
    r.f_label = f.label();
    r.method = SumMethod::blocks;

    uint64_t root = isqrt_u64(x);
    if (f.integer_valued()) {
        std::vector<int8_t> small = f.values_int(1, root);
        __int128 acc = 0;
        for_each_quotient_block(x, [&](QuotientBlock b) {
            int64_t v = b.q <= root ? small[b.q - 1] : f.eval_int(b.q);
            acc += static_cast<__int128>(v) * b.count();
        });
        if (acc > INT64_MAX || acc < INT64_MIN)
            throw NumericError("block sum exceeds 64-bit integer range");
        r.value = static_cast<int64_t>(acc);
        return r;
    }
    std::vector<double> small = f.values_real(1, root);
    KahanSum acc;
    for_each_quotient_block(x, [&](QuotientBlock b) {
        double v = b.q <= root ? small[b.q - 1] : f.eval_real(b.q);
        acc.add(v * static_cast<double>(b.count()));
    });
    r.value = acc.value();
    return r;
}

double psi(double t) { return t - std::floor(t) - 0.5; }

double dyadic_psi_sum(const ArithFunc& f, double x, uint64_t D, double delta) {
    if (D < 1) throw UsageError("dyadic_psi_sum requires D >= 1");
    if (!(x > 0)) throw UsageError("dyadic_psi_sum requires x > 0");
    if (delta < 0) throw UsageError("dyadic_psi_sum requires delta >= 0");
    if (2.0 * static_cast<double>(D) > x)
        throw UsageError("dyadic_psi_sum requires 2D <= x");

    KahanSum acc;
    for (uint64_t lo = D + 1; lo <= 2 * D;) {
        uint64_t hi = std::min(2 * D, lo + arith::kSegmentLen - 1);
        std::vector<double> vals = f.values_real(lo, hi);
        for (uint64_t d = lo; d <= hi; ++d) {
            double v = vals[d - lo];
            if (v != 0.0) acc.add(v * psi(x / (static_cast<double>(d) + delta)));
        }
        if (hi == 2 * D) break;
        lo = hi + 1;
    }
    return acc.value();
}

std::complex<double> exp_sum(uint64_t h, double x, uint64_t m, double delta,
                             uint64_t X_lo, uint64_t X_hi) {
    if (h < 1) throw UsageError("exp_sum requires h >= 1");
    if (m < 1) throw UsageError("exp_sum requires m >= 1");
    if (delta < 0) throw UsageError("exp_sum requires delta >= 0");
    if (!(X_lo < X_hi)) throw UsageError("exp_sum requires X_lo < X_hi");

    constexpr long double two_pi = 6.283185307179586476925286766559L;
    KahanSum re, im;
    long double hx = static_cast<long double>(h) * x;
    for (uint64_t n = X_lo + 1; n <= X_hi; ++n) {
        long double denom = static_cast<long double>(m) * n + delta;
        long double phase = hx / denom;
        phase -= std::floor(static_cast<long double>(phase));
        double angle = static_cast<double>(two_pi * phase);
        re.add(std::cos(angle));
        im.add(std::sin(angle));
    }
    return {re.value(), im.value()};
}

} // namespace floorsum
