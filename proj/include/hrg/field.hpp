#pragma once

#include <vector>

#include "hrg/lattice.hpp"

namespace hrg {

// Real-valued function on a unit lattice, stored in flat-index order.
struct Field {
  LatticeSpec spec;
  std::vector<double> values;

  Field() = default;
  explicit Field(const LatticeSpec& s, double fill = 0.0)
      : spec(s), values(static_cast<std::size_t>(s.point_count()), fill) {}

  double& operator[](std::int64_t i) { return values[static_cast<std::size_t>(i)]; }
  double operator[](std::int64_t i) const { return values[static_cast<std::size_t>(i)]; }
  std::int64_t size() const { return static_cast<std::int64_t>(values.size()); }
};

double max_abs(const Field& f);

Field operator+(const Field& a, const Field& b);
Field operator-(const Field& a, const Field& b);
Field operator*(double s, const Field& f);
// Pointwise (Hadamard) product.
Field hadamard(const Field& a, const Field& b);
Field& add_scaled(Field& acc, double s, const Field& f);

}  // namespace hrg
