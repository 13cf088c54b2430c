#include "floorsum/arith.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "floorsum/primes.hpp"

namespace floorsum::arith {

namespace {

// Trial division by cached primes resolves mobius_point completely for
// all n up to kMobiusPointLimit^2 (and often beyond).
constexpr uint32_t kPointPrimeLimit = 2'200'000; // > (2^63)^(1/3)
constexpr uint64_t kMobiusPointLimit =
    uint64_t(kPointPrimeLimit) * kPointPrimeLimit;

void check_range(uint64_t lo, uint64_t hi) {
    if (lo < 1 || lo > hi)
        throw UsageError("sieve range requires 1 <= lo <= hi");
    if (hi > (uint64_t(1) << 62))
        throw UsageError("sieve range upper bound exceeds 2^62");
    uint64_t n = hi - lo + 1;
    if (n > kMaxTableEntries) {
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "sieve range of %llu entries exceeds the table budget "
                      "(%llu); iterate in segments of <= %llu entries",
                      (unsigned long long)n,
                      (unsigned long long)kMaxTableEntries,
                      (unsigned long long)kSegmentLen);
        throw ResourceError(buf);
    }
}

void check_k(int k) {
    if (k < 2 || k > 62) throw UsageError("k must satisfy 2 <= k <= 62");
}

// Mobius values for [lo, hi] written into out (preallocated, int8 per
// entry). Uses a per-call cofactor array of the same length.
void mobius_segment(uint64_t lo, uint64_t hi, const std::vector<uint32_t>& primes,
                    int8_t* out) {
    uint64_t n = hi - lo + 1;
    std::vector<uint64_t> rem(n);
    for (uint64_t i = 0; i < n; ++i) {
        rem[i] = lo + i;
        out[i] = 1;
    }
    for (uint32_t p : primes) {
        if (uint64_t(p) > hi / p) break; // p*p > hi
        uint64_t start = ((lo + p - 1) / p) * p;
        for (uint64_t m = start; m <= hi; m += p) {
            uint64_t i = m - lo;
            if (out[i] == 0) { // still strip p for the final big-prime step
                while (rem[i] % p == 0) rem[i] /= p;
                continue;
            }
            int e = 0;
            while (rem[i] % p == 0) {
                rem[i] /= p;
                ++e;
            }
            if (e >= 2)
                out[i] = 0;
            else
                out[i] = -out[i];
        }
    }
    for (uint64_t i = 0; i < n; ++i) {
        if (out[i] != 0 && rem[i] > 1) out[i] = -out[i]; // one prime > sqrt(hi)
    }
    if (lo == 1) out[0] = 1; // mu(1) = 1 (rem path leaves it alone anyway)
}

} // namespace

SieveTable sieve_mu_k(uint64_t lo, uint64_t hi, int k) {
    check_range(lo, hi);
    check_k(k);
    SieveTable t;
    t.lo = lo;
    t.hi = hi;
    t.values.assign(hi - lo + 1, 1);

    uint64_t root = kth_root_u64(hi, k);
    if (root > (uint64_t(1) << 26))
        throw ResourceError("hi^(1/k) exceeds the prime enumeration budget");
    auto primes = primes_upto(static_cast<uint32_t>(root));
    for (uint32_t p : *primes) {
        if (uint64_t(p) > root) break;
        uint64_t q = checked_pow_u64(p, k);
        if (q > hi) break;
        uint64_t start = ((lo + q - 1) / q) * q;
        for (uint64_t m = start; m <= hi; m += q) t.values[m - lo] = 0;
    }
    return t;
}

SieveTable sieve_mobius_range(uint64_t lo, uint64_t hi) {
    check_range(lo, hi);
    SieveTable t;
    t.lo = lo;
    t.hi = hi;
    t.values.assign(hi - lo + 1, 0);

    uint64_t root = isqrt_u64(hi);
    if (root > (uint64_t(1) << 26))
        throw ResourceError("sqrt(hi) exceeds the prime enumeration budget");
    auto primes = primes_upto(static_cast<uint32_t>(root));

    // bounded working memory: the 8-byte cofactor array lives per segment
    for (uint64_t seg_lo = lo;;) {
        uint64_t seg_hi = (hi - seg_lo >= kSegmentLen) ? seg_lo + kSegmentLen - 1 : hi;
        mobius_segment(seg_lo, seg_hi, *primes, t.values.data() + (seg_lo - lo));
        if (seg_hi == hi) break;
        seg_lo = seg_hi + 1;
    }
    return t;
}

SieveTable sieve_mobius(uint64_t hi) { return sieve_mobius_range(1, hi); }

bool is_k_free_point(uint64_t n, int k) {
    check_k(k);
    if (n == 0) throw UsageError("is_k_free_point requires n >= 1");
    if (n < 4) return true;

    uint64_t rem = n;
    uint32_t limit = static_cast<uint32_t>(
        std::min<uint64_t>(kth_root_u64(n, k < 3 ? 3 : k) + 1, kPointPrimeLimit));
    auto primes = primes_upto(limit);
    for (uint32_t p : *primes) {
        // once p^max(k,3) > rem the cofactor has too few prime factors
        // to hide a k-th power (k >= 3), or at most two factors (k = 2)
        __uint128_t pk = p;
        for (int i = 1; i < (k < 3 ? 3 : k); ++i) pk *= p;
        if (pk > rem) break;
        if (rem % p != 0) continue;
        int e = 0;
        while (rem % p == 0) {
            rem /= p;
            ++e;
        }
        if (e >= k) return false;
    }
    if (k == 2)
        return !(rem > 1 && is_perfect_square(rem));
    return true;
}

int mobius_point(uint64_t n) {
    if (n == 0) throw UsageError("mobius_point requires n >= 1");
    if (n == 1) return 1;

    uint64_t rem = n;
    int sign = 1;
    uint32_t limit = static_cast<uint32_t>(
        std::min<uint64_t>(isqrt_u64(n) + 1, kPointPrimeLimit));
    auto primes = primes_upto(limit);
    for (uint32_t p : *primes) {
        if (static_cast<__uint128_t>(p) * p > rem) break;
        if (rem % p != 0) continue;
        rem /= p;
        if (rem % p == 0) return 0;
        sign = -sign;
    }
    if (rem > 1) {
        if (static_cast<__uint128_t>(primes->back()) * primes->back() >= rem) {
            sign = -sign; // rem is prime
        } else if (is_perfect_square(rem)) {
            return 0;
        } else {
            throw CapabilityError(
                "mobius_point: argument too large to resolve by trial division");
        }
    }
    return sign;
}

int g_k(uint64_t d, int k) {
    check_k(k);
    if (d == 0) throw UsageError("g_k requires d >= 1");
    uint64_t l = kth_root_u64(d, k);
    if (checked_pow_u64(l, k) != d) return 0;
    return mobius_point(l);
}

int64_t partial_sum_g(uint64_t x, int k) {
    check_k(k);
    if (x == 0) throw UsageError("partial_sum_g requires x >= 1");
    uint64_t L = kth_root_u64(x, k);
    int64_t sum = 0;
    for (uint64_t lo = 1; lo <= L;) {
        uint64_t hi = std::min(L, lo + kSegmentLen - 1);
        SieveTable t = sieve_mobius_range(lo, hi);
        for (int8_t v : t.values) sum += v;
        if (hi == L) break;
        lo = hi + 1;
    }
    return sum;
}

ConvolutionCheck convolution_check(uint64_t n_max, int k) {
    check_k(k);
    if (n_max == 0) throw UsageError("convolution_check requires n_max >= 1");
    SieveTable mu_k_table = sieve_mu_k(1, n_max, k);
    ConvolutionCheck result;
    for (uint64_t n = 1; n <= n_max; ++n) {
        int64_t conv = 0;
        for (uint64_t d = 1; d * d <= n; ++d) {
            if (n % d != 0) continue;
            conv += g_k(d, k);
            uint64_t q = n / d;
            if (q != d) conv += g_k(q, k);
        }
        if (conv != mu_k_table.at(n)) {
            result.ok = false;
            result.first_failure = n;
            return result;
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// ArithFunc
// ---------------------------------------------------------------------------

ArithFunc ArithFunc::mu_k(int k) {
    check_k(k);
    ArithFunc f;
    f.kind_ = Kind::MuK;
    f.k_ = k;
    return f;
}

ArithFunc ArithFunc::mobius() {
    ArithFunc f;
    f.kind_ = Kind::Mobius;
    return f;
}

ArithFunc ArithFunc::one() {
    ArithFunc f;
    f.kind_ = Kind::One;
    return f;
}

ArithFunc ArithFunc::power_eta(double eta) {
    if (!(eta > 0.0 && eta < 2.0))
        throw UsageError("power_eta requires eta in (0, 2)");
    ArithFunc f;
    f.kind_ = Kind::PowerEta;
    f.eta_ = eta;
    return f;
}

ArithFunc ArithFunc::table(std::vector<double> values) {
    if (values.empty()) throw UsageError("table descriptor requires values");
    ArithFunc f;
    f.kind_ = Kind::Table;
    f.table_ = std::move(values);
    return f;
}

bool ArithFunc::integer_valued() const {
    switch (kind_) {
    case Kind::MuK:
    case Kind::Mobius:
    case Kind::One:
        return true;
    default:
        return false;
    }
}

std::string ArithFunc::label() const {
    char buf[48];
    switch (kind_) {
    case Kind::MuK:
        std::snprintf(buf, sizeof(buf), "mu_%d", k_);
        return buf;
    case Kind::Mobius:
        return "mobius";
    case Kind::One:
        return "one";
    case Kind::PowerEta:
        std::snprintf(buf, sizeof(buf), "power_eta(%g)", eta_);
        return buf;
    case Kind::Table:
        std::snprintf(buf, sizeof(buf), "table[%zu]", table_.size());
        return buf;
    }
    return "?";
}

uint64_t ArithFunc::max_point_arg() const {
    switch (kind_) {
    case Kind::Mobius:
        return kMobiusPointLimit;
    case Kind::Table:
        return table_.size();
    default:
        return UINT64_MAX;
    }
}

int64_t ArithFunc::eval_int(uint64_t n) const {
    switch (kind_) {
    case Kind::MuK:
        return is_k_free_point(n, k_) ? 1 : 0;
    case Kind::Mobius:
        return mobius_point(n);
    case Kind::One:
        if (n == 0) throw UsageError("evaluation requires n >= 1");
        return 1;
    default:
        throw CapabilityError(label() + " is not integer-valued");
    }
}

double ArithFunc::eval_real(uint64_t n) const {
    switch (kind_) {
    case Kind::PowerEta:
        if (n == 0) throw UsageError("evaluation requires n >= 1");
        return std::pow(static_cast<double>(n), (eta_ - 1.0) / 2.0);
    case Kind::Table:
        if (n == 0) throw UsageError("evaluation requires n >= 1");
        if (n > table_.size())
            throw CapabilityError("table descriptor has no value at n=" +
                                  std::to_string(n));
        return table_[n - 1];
    default:
        return static_cast<double>(eval_int(n));
    }
}

std::vector<int8_t> ArithFunc::values_int(uint64_t lo, uint64_t hi) const {
    switch (kind_) {
    case Kind::MuK:
        return sieve_mu_k(lo, hi, k_).values;
    case Kind::Mobius:
        return sieve_mobius_range(lo, hi).values;
    case Kind::One:
        check_range(lo, hi);
        return std::vector<int8_t>(hi - lo + 1, 1);
    default:
        throw CapabilityError(label() + " is not integer-valued");
    }
}

std::vector<double> ArithFunc::values_real(uint64_t lo, uint64_t hi) const {
    if (integer_valued()) {
        std::vector<int8_t> iv = values_int(lo, hi);
        return std::vector<double>(iv.begin(), iv.end());
    }
    check_range(lo, hi);
    std::vector<double> out(hi - lo + 1);
    for (uint64_t n = lo; n <= hi; ++n) out[n - lo] = eval_real(n);
    return out;
}

} // namespace floorsum::arith
