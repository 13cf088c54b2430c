#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "floorsum/errors.hpp"

namespace floorsum::arith {

// Dense table of small integer values for n in [lo, hi].
struct SieveTable {
    uint64_t lo = 1;
    uint64_t hi = 1;
    std::vector<int8_t> values; // values[n - lo]

    int8_t at(uint64_t n) const { return values[n - lo]; }
    uint64_t size() const { return hi - lo + 1; }
};

// Largest table a single sieve call will materialize. Callers that need
// wider ranges must iterate in segments (see kSegmentLen).
inline constexpr uint64_t kMaxTableEntries = uint64_t(1) << 30;

// Default segment length for segmented drivers.
inline constexpr uint64_t kSegmentLen = uint64_t(1) << 22;

// mu_k table over [lo, hi]: values[n-lo] = 1 iff no prime p has p^k | n.
// Marks multiples of p^k for all primes p <= hi^(1/k).
SieveTable sieve_mu_k(uint64_t lo, uint64_t hi, int k);

// Mobius function over [lo, hi] (segmented; needs ~9 bytes per entry
// while running). sieve_mobius(hi) is the [1, hi] special case.
SieveTable sieve_mobius_range(uint64_t lo, uint64_t hi);
SieveTable sieve_mobius(uint64_t hi);

// Point test: true iff no p^k divides n. Trial division by primes
// p with p^k below the shrinking cofactor; for k = 2 the surviving
// cofactor (at most two prime factors) is non-squarefree iff it is a
// perfect square > 1.
bool is_k_free_point(uint64_t n, int k);

// Point Mobius value. Supported while trial division by cached primes
// can finish the factorization (all n <= ~4.4e12, often far beyond);
// throws CapabilityError when it cannot.
int mobius_point(uint64_t n);

// Convolution kernel: g_k(d) = mu(l) if d = l^k, else 0.
int g_k(uint64_t d, int k);

// Sum_{d <= x} g_k(d) = Mertens sum over l <= floor(x^(1/k)).
int64_t partial_sum_g(uint64_t x, int k);

// Verifies mu_k(n) = sum_{d|n} g_k(d) for all n <= n_max by direct
// divisor enumeration. first_failure is empty iff the identity held.
struct ConvolutionCheck {
    bool ok = true;
    std::optional<uint64_t> first_failure;
};
ConvolutionCheck convolution_check(uint64_t n_max, int k);

// ---------------------------------------------------------------------------
// Arithmetic function descriptor: identifies f and provides point/range
// evaluation. All evaluation is deterministic.
//   mu_k(n)      in {0,1}          (integer)
//   mobius(n)    in {-1,0,1}       (integer)
//   one(n)       = 1               (integer)
//   power_eta(n) = n^((eta-1)/2)   (real, eta in (0,2))
//   table(n)     = values[n-1]     (real, finite support)
// ---------------------------------------------------------------------------
class ArithFunc {
public:
    enum class Kind { MuK, Mobius, One, PowerEta, Table };

    static ArithFunc mu_k(int k);
    static ArithFunc mobius();
    static ArithFunc one();
    static ArithFunc power_eta(double eta);
    static ArithFunc table(std::vector<double> values);

    Kind kind() const { return kind_; }
    int k() const { return k_; }
    double eta() const { return eta_; }
    const std::vector<double>& table_values() const { return table_; }

    bool integer_valued() const;
    std::string label() const;

    // Largest n this descriptor can evaluate pointwise (inclusive).
    uint64_t max_point_arg() const;

    // Point evaluation. eval_int throws CapabilityError for real-valued f.
    int64_t eval_int(uint64_t n) const;
    double eval_real(uint64_t n) const;

    // Values for n in [lo, hi], sieve-backed where that is cheaper than
    // point evaluation. Integer-valued kinds fill exact small integers.
    std::vector<double> values_real(uint64_t lo, uint64_t hi) const;
    std::vector<int8_t> values_int(uint64_t lo, uint64_t hi) const;

private:
    ArithFunc() = default;
    Kind kind_ = Kind::One;
    int k_ = 0;
    double eta_ = 0.0;
    std::vector<double> table_;
};

} // namespace floorsum::arith
