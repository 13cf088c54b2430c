#include "floorsum/primes.hpp"

#include <cmath>
#include <mutex>

namespace floorsum {

uint64_t isqrt_u64(uint64_t n) {
    if (n == 0) return 0;
    auto r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && static_cast<__uint128_t>(r) * r > n) --r;
    while (static_cast<__uint128_t>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

uint64_t checked_pow_u64(uint64_t p, int k) {
    uint64_t r = 1;
    for (int i = 0; i < k; ++i) {
        if (p != 0 && r > UINT64_MAX / p) return UINT64_MAX;
        r *= p;
    }
    return r;
}

uint64_t kth_root_u64(uint64_t n, int k) {
    if (n == 0) return 0;
    if (k == 1) return n;
    if (k == 2) return isqrt_u64(n);
    if (k >= 64) return 1;
    auto r = static_cast<uint64_t>(std::pow(static_cast<double>(n), 1.0 / k));
    // float estimate can be off by one either way near perfect powers
    while (r > 1 && checked_pow_u64(r, k) > n) --r;
    while (checked_pow_u64(r + 1, k) <= n) ++r;
    return r;
}

bool is_perfect_square(uint64_t n) {
    uint64_t r = isqrt_u64(n);
    return r * r == n;
}

namespace {

std::vector<uint32_t> sieve_primes(uint32_t limit) {
    std::vector<uint32_t> out;
    if (limit < 2) return out;
    std::vector<char> mark(static_cast<size_t>(limit) + 1, 1);
    mark[0] = mark[1] = 0;
    for (uint64_t i = 2; i * i <= limit; ++i)
        if (mark[i])
            for (uint64_t j = i * i; j <= limit; j += i) mark[j] = 0;
    for (uint32_t i = 2; i <= limit; ++i)
        if (mark[i]) out.push_back(i);
    return out;
}

std::mutex g_prime_mutex;
std::shared_ptr<const std::vector<uint32_t>> g_prime_cache;
uint32_t g_prime_limit = 0;

} // namespace

std::shared_ptr<const std::vector<uint32_t>> primes_upto(uint32_t limit) {
    std::lock_guard<std::mutex> lock(g_prime_mutex);
    if (!g_prime_cache || g_prime_limit < limit) {
        // grow geometrically so repeated slightly-larger requests stay cheap
        uint32_t new_limit = limit;
        if (g_prime_limit > 0 && new_limit < 2 * g_prime_limit)
            new_limit = 2 * g_prime_limit;
        if (new_limit < 1u << 16) new_limit = 1u << 16;
        g_prime_cache =
            std::make_shared<const std::vector<uint32_t>>(sieve_primes(new_limit));
        g_prime_limit = new_limit;
    }
    return g_prime_cache;
}

} // namespace floorsum
