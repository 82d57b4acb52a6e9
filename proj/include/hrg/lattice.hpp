#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hrg/common.hpp"

namespace hrg {

// Unit lattice of side L^n in d dimensions. Coordinates are integers in the
// centered range [-(L^n-1)/2, (L^n-1)/2] per axis, periodic. L odd so each
// side-L block has a unique center.
struct LatticeSpec {
  int L = 3;
  int d = 2;
  int n = 0;

  LatticeSpec() = default;
  LatticeSpec(int L_, int d_, int n_);

  std::int64_t side() const { return side_; }
  std::int64_t point_count() const { return count_; }
  std::int64_t half() const { return (side_ - 1) / 2; }

  LatticeSpec coarser() const;
  LatticeSpec finer() const;

  bool operator==(const LatticeSpec& o) const {
    return L == o.L && d == o.d && n == o.n;
  }
  bool operator!=(const LatticeSpec& o) const { return !(*this == o); }

 private:
  std::int64_t side_ = 1;
  std::int64_t count_ = 1;
};

struct Point {
  std::vector<std::int64_t> coords;
};

// Row-major flat index, axis 0 slowest. Stable contract: the emitted order of
// field values is exactly this order.
std::int64_t index_of(const LatticeSpec& spec, const Point& p);
Point coords_of(const LatticeSpec& spec, std::int64_t index);

// Wrap arbitrary integer coordinates into the canonical centered range.
Point canonical(const LatticeSpec& spec, const Point& p);

// Center of the side-L block containing p: the unique multiple-of-L point c
// with |p_i - c_i| <= (L-1)/2 per axis (after canonicalization). Requires n>=1.
Point block_center(const LatticeSpec& spec, const Point& p);

// The L^d points of the block centered at c (c must be a multiple-of-L point).
std::vector<Point> block_members(const LatticeSpec& spec, const Point& c);

// Smallest k >= 1 such that x and y share a side-L^k block of the recursive
// hierarchy; nullopt when x == y (hierarchical distance convention h(x,x) = inf).
std::optional<int> shared_block_level(const LatticeSpec& spec, const Point& x,
                                      const Point& y);

}  // namespace hrg
