#include "hrg/lattice.hpp"

#include <cmath>
#include <string>

namespace hrg {

namespace {

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Floor division (C++ integer division truncates toward zero).
std::int64_t floordiv(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t wrap(std::int64_t x, std::int64_t side) {
  std::int64_t h = (side - 1) / 2;
  std::int64_t m = x + h;
  m %= side;
  if (m < 0) m += side;
  return m - h;
}

}  // namespace

LatticeSpec::LatticeSpec(int L_, int d_, int n_) : L(L_), d(d_), n(n_) {
  if (L < 3 || L % 2 == 0)
    throw PreconditionError("LatticeSpec: L must be odd and >= 3");
  if (d < 1) throw PreconditionError("LatticeSpec: d must be positive");
  if (n < 0) throw PreconditionError("LatticeSpec: n must be >= 0");
  side_ = ipow(L, n);
  count_ = ipow(side_, d);
}

LatticeSpec LatticeSpec::coarser() const {
  if (n < 1) throw PreconditionError("LatticeSpec::coarser: n must be >= 1");
  return LatticeSpec(L, d, n - 1);
}

LatticeSpec LatticeSpec::finer() const { return LatticeSpec(L, d, n + 1); }

std::int64_t index_of(const LatticeSpec& spec, const Point& p) {
  if (static_cast<int>(p.coords.size()) != spec.d)
    throw PreconditionError("index_of: dimension mismatch");
  const std::int64_t side = spec.side();
  const std::int64_t h = spec.half();
  std::int64_t idx = 0;
  for (int k = 0; k < spec.d; ++k) {
    std::int64_t c = p.coords[k];
    if (c < -h || c > h)
      throw PreconditionError("index_of: coordinate out of range: " +
                              std::to_string(c));
    idx = idx * side + (c + h);
  }
  return idx;
}

Point coords_of(const LatticeSpec& spec, std::int64_t index) {
  if (index < 0 || index >= spec.point_count())
    throw PreconditionError("coords_of: index out of range");
  const std::int64_t side = spec.side();
  const std::int64_t h = spec.half();
  Point p;
  p.coords.assign(spec.d, 0);
  for (int k = spec.d - 1; k >= 0; --k) {
    p.coords[k] = index % side - h;
    index /= side;
  }
  return p;
}

Point canonical(const LatticeSpec& spec, const Point& p) {
  if (static_cast<int>(p.coords.size()) != spec.d)
    throw PreconditionError("canonical: dimension mismatch");
  Point q = p;
  for (auto& c : q.coords) c = wrap(c, spec.side());
  return q;
}

Point block_center(const LatticeSpec& spec, const Point& p) {
  if (spec.n < 1)
    throw PreconditionError("block_center: lattice has no blocks (n = 0)");
  Point q = canonical(spec, p);
  const std::int64_t hL = (spec.L - 1) / 2;
  for (auto& c : q.coords) c = spec.L * floordiv(c + hL, spec.L);
  return q;
}

std::vector<Point> block_members(const LatticeSpec& spec, const Point& c) {
  if (spec.n < 1)
    throw PreconditionError("block_members: lattice has no blocks (n = 0)");
  if (static_cast<int>(c.coords.size()) != spec.d)
    throw PreconditionError("block_members: dimension mismatch");
  for (auto v : c.coords)
    if (v % spec.L != 0)
      throw PreconditionError("block_members: point is not a block center");
  const std::int64_t hL = (spec.L - 1) / 2;
  const std::int64_t m = ipow(spec.L, spec.d);
  std::vector<Point> out;
  out.reserve(m);
  std::vector<std::int64_t> off(spec.d, -hL);
  for (std::int64_t i = 0; i < m; ++i) {
    Point p = c;
    for (int k = 0; k < spec.d; ++k) p.coords[k] += off[k];
    out.push_back(canonical(spec, p));
    for (int k = spec.d - 1; k >= 0; --k) {
      if (++off[k] <= hL) break;
      off[k] = -hL;
    }
  }
  return out;
}

std::optional<int> shared_block_level(const LatticeSpec& spec, const Point& x,
                                      const Point& y) {
  Point a = canonical(spec, x);
  Point b = canonical(spec, y);
  if (a.coords == b.coords) return std::nullopt;
  // Walk up the block tree until the two points land on the same coarse node.
  LatticeSpec s = spec;
  for (int k = 1; k <= spec.n; ++k) {
    Point ca = block_center(s, a);
    Point cb = block_center(s, b);
    for (int j = 0; j < s.d; ++j) {
      ca.coords[j] /= s.L;
      cb.coords[j] /= s.L;
    }
    if (ca.coords == cb.coords) return k;
    a = ca;
    b = cb;
    s = s.coarser();
  }
  // Distinct points always merge by level n; unreachable for valid input.
  return spec.n;
}

}  // namespace hrg
