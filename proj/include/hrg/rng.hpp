#pragma once

#include <cstdint>
#include <string_view>

namespace hrg {

// Counter-based deterministic random numbers. Every variate is a pure
// function of (seed, stream label, counter), so fields are reproducible
// independent of evaluation order and thread count.
//
// Mixing: splitmix64 finalization applied to seed, stream and counter in
// sequence. Normal variates use Box-Muller on two 64-bit words mapped into
// (0, 1]; this transform is part of the reproducibility contract.

std::uint64_t splitmix64(std::uint64_t x);

// FNV-1a hash of a stream label.
std::uint64_t stream_id(std::string_view label);

std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream,
                           std::uint64_t counter);

// Uniform draw in (0, 1] from a 64-bit word (53-bit mantissa, never 0).
double to_unit_open(std::uint64_t w);

// Standard normal variate for flat counter `idx` of the given stream.
double normal_variate(std::uint64_t seed, std::uint64_t stream,
                      std::uint64_t idx);

// Stable per-sample seed derivation for Monte Carlo substreams.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t sample_index);

}  // namespace hrg
