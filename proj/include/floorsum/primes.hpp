#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace floorsum {

// Floor of sqrt(n), exact for all 64-bit n.
uint64_t isqrt_u64(uint64_t n);

// Floor of n^(1/k), exact (float estimate corrected by integer powering).
uint64_t kth_root_u64(uint64_t n, int k);

// true iff n = m*m for some integer m (n >= 1).
bool is_perfect_square(uint64_t n);

// Checked integer power: returns p^k, or UINT64_MAX on overflow.
uint64_t checked_pow_u64(uint64_t p, int k);

// Shared, immutable snapshot of all primes <= limit. The cache grows
// monotonically; snapshots stay valid after later growth.
std::shared_ptr<const std::vector<uint32_t>> primes_upto(uint32_t limit);

} // namespace floorsum
