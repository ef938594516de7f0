#pragma once

#include <cstdint>

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2025;

/// Seed for randomized property tests; set with --seed on the test binary.
std::uint64_t test_seed();
