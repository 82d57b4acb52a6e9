#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hrg {

inline constexpr const char* kEngineVersion = "0.1.0";

// Numerical tolerances used by the internal consistency checks.
// Identity checks on O(1)-magnitude fields are asserted at kTolIdentity.
inline constexpr double kTolIdentity = 1e-12;
inline constexpr double kTolProjection = 1e-13;
inline constexpr double kTolInverse = 1e-10;
inline constexpr double kDefaultConditionThreshold = 1e12;
inline constexpr std::int64_t kDefaultDenseCap = 1024;

struct SingularBlockError : std::runtime_error {
  int level = -1;
  std::int64_t block_index = -1;
  SingularBlockError(const std::string& what, int level_, std::int64_t block_)
      : std::runtime_error(what), level(level_), block_index(block_) {}
};

struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace hrg
