#include "hrg/field.hpp"

#include <cmath>

namespace hrg {

namespace {
void check_same(const Field& a, const Field& b, const char* what) {
  if (a.spec != b.spec || a.values.size() != b.values.size())
    throw PreconditionError(std::string(what) + ": lattice mismatch");
}
}  // namespace

double max_abs(const Field& f) {
  double m = 0.0;
  for (double v : f.values) m = std::max(m, std::fabs(v));
  return m;
}

Field operator+(const Field& a, const Field& b) {
  check_same(a, b, "Field+");
  Field r = a;
  for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] += b.values[i];
  return r;
}

Field operator-(const Field& a, const Field& b) {
  check_same(a, b, "Field-");
  Field r = a;
  for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] -= b.values[i];
  return r;
}

Field operator*(double s, const Field& f) {
  Field r = f;
  for (auto& v : r.values) v *= s;
  return r;
}

Field hadamard(const Field& a, const Field& b) {
  check_same(a, b, "hadamard");
  Field r = a;
  for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] *= b.values[i];
  return r;
}

Field& add_scaled(Field& acc, double s, const Field& f) {
  check_same(acc, f, "add_scaled");
  for (std::size_t i = 0; i < acc.values.size(); ++i)
    acc.values[i] += s * f.values[i];
  return acc;
}

}  // namespace hrg
