#include <doctest.h>

#include <map>
#include <set>

#include "hrg/lattice.hpp"

using namespace hrg;

namespace {

Point pt(std::int64_t x, std::int64_t y) { return Point{{x, y}}; }

}  // namespace

TEST_CASE("lattice spec geometry") {
  const LatticeSpec s(3, 2, 2);
  CHECK(s.side() == 9);
  CHECK(s.point_count() == 81);
  CHECK(s.half() == 4);
  CHECK(s.coarser() == LatticeSpec(3, 2, 1));
  CHECK(s.finer() == LatticeSpec(3, 2, 3));
  CHECK(LatticeSpec(5, 3, 1).point_count() == 125);
  CHECK_THROWS_AS(LatticeSpec(4, 2, 1), PreconditionError);
  CHECK_THROWS_AS(LatticeSpec(1, 2, 1), PreconditionError);
  CHECK_THROWS_AS(LatticeSpec(3, 0, 1), PreconditionError);
  CHECK_THROWS_AS(LatticeSpec(3, 2, -1), PreconditionError);
}

TEST_CASE("flat index is row-major with axis 0 slowest") {
  const LatticeSpec s(3, 2, 2);
  CHECK(index_of(s, pt(-4, -4)) == 0);
  CHECK(index_of(s, pt(-4, -3)) == 1);
  CHECK(index_of(s, pt(-3, -4)) == 9);
  CHECK(index_of(s, pt(4, 4)) == 80);
  for (std::int64_t i = 0; i < s.point_count(); ++i) {
    const Point p = coords_of(s, i);
    CHECK(p.coords.size() == 2);
    CHECK(p.coords[0] >= -4);
    CHECK(p.coords[0] <= 4);
    CHECK(index_of(s, p) == i);
  }
}

TEST_CASE("canonical wraps into the centered range") {
  const LatticeSpec s(3, 2, 2);
  CHECK(canonical(s, pt(5, 0)).coords[0] == -4);
  CHECK(canonical(s, pt(-5, 0)).coords[0] == 4);
  CHECK(canonical(s, pt(9, -9)).coords[0] == 0);
  CHECK(canonical(s, pt(9, -9)).coords[1] == 0);
  CHECK(canonical(s, pt(13, 0)).coords[0] == 4);
}

TEST_CASE("block center and membership") {
  const LatticeSpec s(3, 2, 2);
  CHECK(block_center(s, pt(1, 0)).coords[0] == 0);
  CHECK(block_center(s, pt(1, 0)).coords[1] == 0);
  CHECK(block_center(s, pt(4, 0)).coords[0] == 3);
  CHECK(block_center(s, pt(-4, -4)).coords[0] == -3);
  CHECK(block_center(s, pt(-4, -4)).coords[1] == -3);

  // Every point lies in the block of its center, and the centers tile the
  // lattice: each point appears in exactly one block.
  std::map<std::int64_t, int> seen;
  const LatticeSpec coarse = s.coarser();
  for (std::int64_t c = 0; c < coarse.point_count(); ++c) {
    Point center = coords_of(coarse, c);
    for (auto& v : center.coords) v *= 3;
    const auto members = block_members(s, center);
    CHECK(members.size() == 9);
    for (const auto& m : members) {
      const Point back = block_center(s, m);
      CHECK(back.coords == center.coords);
      seen[index_of(s, m)]++;
    }
  }
  CHECK(seen.size() == 81);
  for (const auto& [idx, count] : seen) CHECK(count == 1);
}

TEST_CASE("shared block level matches the recursive-center oracle") {
  const LatticeSpec s(3, 2, 2);
  CHECK(!shared_block_level(s, pt(0, 0), pt(0, 0)).has_value());
  CHECK(shared_block_level(s, pt(0, 0), pt(1, 0)) == 1);
  CHECK(shared_block_level(s, pt(1, 1), pt(-1, -1)) == 1);
  CHECK(shared_block_level(s, pt(1, 0), pt(2, 0)) == 2);
  CHECK(shared_block_level(s, pt(-4, -4), pt(4, 4)) == 2);

  // Oracle: repeatedly coarsen the block centers until they agree.
  for (std::int64_t i = 0; i < s.point_count(); ++i) {
    for (std::int64_t j = 0; j < s.point_count(); ++j) {
      if (i == j) continue;
      Point x = coords_of(s, i), y = coords_of(s, j);
      LatticeSpec level = s;
      int k = 0;
      while (x.coords != y.coords) {
        x = block_center(level, x);
        y = block_center(level, y);
        for (auto& v : x.coords) v /= 3;
        for (auto& v : y.coords) v /= 3;
        level = level.coarser();
        ++k;
      }
      CHECK(shared_block_level(s, coords_of(s, i), coords_of(s, j)) == k);
    }
  }
}
