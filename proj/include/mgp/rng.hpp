#pragma once

#include <array>
#include <cstdint>

namespace mgp::rng {

// Philox4x32-10 counter-based generator (round keys 0xD2511F53 / 0xCD9E8D57,
// Weyl constants 0x9E3779B9 / 0xBB67AE85). One block is a pure function of
// (counter, key), so any (seed, replicate, index) cell can be generated
// independently on any thread.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

// Uniform draw in the open interval (0, 1) for stream cell
// (seed; replicate, index): 53-bit mantissa from one Philox block.
double uniform_open01(std::uint64_t seed, std::uint64_t replicate, std::uint64_t index);

// Standard normal via the AS241 (PPND16) inverse normal CDF applied to
// uniform_open01 — one uniform per normal, no rejection, fully counter-indexed.
double normal(std::uint64_t seed, std::uint64_t replicate, std::uint64_t index);

// AS241 inverse normal CDF itself (exposed for tests).
double inverse_normal_cdf(double p);

}  // namespace mgp::rng
