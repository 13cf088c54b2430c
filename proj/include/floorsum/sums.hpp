#pragma once

#include <complex>
#include <cstdint>
#include <variant>
#include <vector>

#include "floorsum/arith.hpp"

namespace floorsum {

// Maximal run of n sharing the same quotient q = floor(x/n).
struct QuotientBlock {
    uint64_t q;
    uint64_t n_lo;
    uint64_t n_hi;

    uint64_t count() const { return n_hi - n_lo + 1; }
};

// Streams the blocks of x in increasing n_lo; they partition [1, x] and
// there are at most 2*sqrt(x) + 2 of them. fn(QuotientBlock) may return
// void, or bool (false stops the walk early).
template <class Fn>
void for_each_quotient_block(uint64_t x, Fn&& fn) {
    for (uint64_t n = 1; n <= x;) {
        uint64_t q = x / n;
        uint64_t n_hi = x / q;
        if constexpr (std::is_invocable_r_v<bool, Fn, QuotientBlock>) {
            if (!fn(QuotientBlock{q, n, n_hi})) return;
        } else {
            fn(QuotientBlock{q, n, n_hi});
        }
        n = n_hi + 1;
    }
}

// Materialized block list, for inspection and small x.
std::vector<QuotientBlock> quotient_blocks(uint64_t x);

enum class SumMethod { naive, blocks };

// S_f(x) = sum_{n<=x} f(floor(x/n)). Integer-valued f accumulates in
// 128-bit integers and reports an exact int64; real-valued f reports a
// compensated double.
struct SumResult {
    uint64_t x = 0;
    std::string f_label;
    std::variant<int64_t, double> value;
    SumMethod method = SumMethod::naive;

    bool is_integer() const { return value.index() == 0; }
    int64_t int_value() const { return std::get<int64_t>(value); }
    double real_value() const { return std::get<double>(value); }
    double as_double() const {
        return is_integer() ? static_cast<double>(int_value()) : real_value();
    }
};

// Guard for the O(x) evaluator.
inline constexpr uint64_t kNaiveGuard = 100'000'000;

// Literal summation; the correctness oracle for eval_blocks.
SumResult eval_naive(const arith::ArithFunc& f, uint64_t x);

// Same value via the exact identity S = sum_q f(q) * (floor(x/q) -
// floor(x/(q+1))), walked as quotient blocks in O(sqrt(x)) f-evaluations.
// mu_k and mobius arguments below sqrt(x) are served from one sieve
// table; larger arguments use point tests.
SumResult eval_blocks(const arith::ArithFunc& f, uint64_t x);

// Sawtooth psi(t) = t - floor(t) - 1/2, in [-1/2, 1/2).
double psi(double t);

// G(x, D) = sum_{D < d <= 2D} f(d) psi(x / (d + delta)), compensated.
// Requires 2D <= x.
double dyadic_psi_sum(const arith::ArithFunc& f, double x, uint64_t D, double delta);

// sum_{X_lo < n <= X_hi} e(h*x / (m*n + delta)) with e(t) = exp(2*pi*i*t).
// Phases are reduced mod 1 in extended precision before the trig calls.
std::complex<double> exp_sum(uint64_t h, double x, uint64_t m, double delta,
                             uint64_t X_lo, uint64_t X_hi);

} // namespace floorsum
