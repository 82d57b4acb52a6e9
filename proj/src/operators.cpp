#include "hrg/operators.hpp"

#include <cmath>
#include <string>

namespace hrg {

namespace {

// Map a 0-based fine position along one axis to the 0-based coarse position of
// its block. Blocks tile the centered coordinate range exactly, so no
// wraparound occurs here.
std::vector<std::int64_t> axis_block_map(std::int64_t fine_side, int L) {
  const std::int64_t A = (fine_side - L) / 2;  // multiple of L since L is odd
  std::vector<std::int64_t> map(static_cast<std::size_t>(fine_side));
  for (std::int64_t p = 0; p < fine_side; ++p) {
    std::int64_t t = p - A;
    std::int64_t q = t / L;
    if (t % L != 0 && t < 0) --q;
    map[static_cast<std::size_t>(p)] = q + (fine_side / L - 1) / 2;
  }
  return map;
}

// Walks fine flat indices in order while tracking the flat index of the
// containing block on the coarse lattice.
class BlockIndexWalker {
 public:
  explicit BlockIndexWalker(const LatticeSpec& fine)
      : d_(fine.d),
        side_(fine.side()),
        map_(axis_block_map(fine.side(), fine.L)),
        dig_(static_cast<std::size_t>(fine.d), 0),
        stride_(static_cast<std::size_t>(fine.d), 1) {
    const std::int64_t cside = side_ / fine.L;
    for (int k = d_ - 2; k >= 0; --k)
      stride_[static_cast<std::size_t>(k)] =
          stride_[static_cast<std::size_t>(k + 1)] * cside;
    coarse_ = 0;
    for (int k = 0; k < d_; ++k)
      coarse_ += map_[0] * stride_[static_cast<std::size_t>(k)];
  }

  std::int64_t coarse_index() const { return coarse_; }

  void advance() {
    for (int k = d_ - 1; k >= 0; --k) {
      auto ku = static_cast<std::size_t>(k);
      std::int64_t old = dig_[ku];
      if (old + 1 < side_) {
        dig_[ku] = old + 1;
        coarse_ += (map_[static_cast<std::size_t>(old + 1)] -
                    map_[static_cast<std::size_t>(old)]) *
                   stride_[ku];
        return;
      }
      dig_[ku] = 0;
      coarse_ += (map_[0] - map_[static_cast<std::size_t>(old)]) * stride_[ku];
    }
  }

 private:
  int d_;
  std::int64_t side_;
  std::vector<std::int64_t> map_;
  std::vector<std::int64_t> dig_;
  std::vector<std::int64_t> stride_;
  std::int64_t coarse_ = 0;
};

std::int64_t ipow64(std::int64_t b, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

Field inverse_recursive(const Field& g) {
  if (g.spec.n == 0) return Field(g.spec, 0.0);
  Field h = fluct(g);
  const double L2 = static_cast<double>(g.spec.L) * g.spec.L;
  Field coarse_part = refine(inverse_recursive(coarsen(g)));
  add_scaled(h, L2, coarse_part);
  return h;
}

}  // namespace

Field coarsen(const Field& f) {
  if (f.spec.n < 1) throw PreconditionError("coarsen: level must be >= 1");
  Field out(f.spec.coarser(), 0.0);
  BlockIndexWalker w(f.spec);
  const std::int64_t np = f.size();
  for (std::int64_t i = 0; i < np; ++i) {
    out[w.coarse_index()] += f[i];
    w.advance();
  }
  const double inv = 1.0 / static_cast<double>(ipow64(f.spec.L, f.spec.d));
  for (auto& v : out.values) v *= inv;
  return out;
}

Field refine(const Field& w) {
  Field out(w.spec.finer(), 0.0);
  BlockIndexWalker walk(out.spec);
  const std::int64_t np = out.size();
  for (std::int64_t i = 0; i < np; ++i) {
    out[i] = w[walk.coarse_index()];
    walk.advance();
  }
  return out;
}

Field fluct(const Field& f) {
  if (f.spec.n < 1) throw PreconditionError("fluct: level must be >= 1");
  return f - refine(coarsen(f));
}

double mean_total(const Field& f) {
  double s = 0.0;
  for (double v : f.values) s += v;
  return s / static_cast<double>(f.size());
}

Field apply_neg_laplacian(const Field& f) {
  if (f.spec.n == 0) return Field(f.spec, 0.0);
  Field r = fluct(f);
  const double invL2 = 1.0 / (static_cast<double>(f.spec.L) * f.spec.L);
  Field coarse_part = refine(apply_neg_laplacian(coarsen(f)));
  add_scaled(r, invL2, coarse_part);
  return r;
}

Field apply_inverse_laplacian(const Field& g, double rel_mean_tol) {
  const double m = mean_total(g);
  const double scale = max_abs(g);
  if (std::fabs(m) > rel_mean_tol * (scale > 0 ? scale : 1.0))
    throw PreconditionError(
        "apply_inverse_laplacian: input not mean-zero (mean = " +
        std::to_string(m) + ")");
  return inverse_recursive(g);
}

Field apply_fluct_propagator(const Field& g, int depth) {
  if (depth < 0 || depth > g.spec.n)
    throw PreconditionError("apply_fluct_propagator: depth out of range");
  if (depth == 0) return Field(g.spec, 0.0);
  Field r = fluct(g);
  const double L2 = static_cast<double>(g.spec.L) * g.spec.L;
  Field coarse_part = refine(apply_fluct_propagator(coarsen(g), depth - 1));
  add_scaled(r, L2, coarse_part);
  return r;
}

std::vector<std::int64_t> block_index_table(const LatticeSpec& fine) {
  if (fine.n < 1)
    throw PreconditionError("block_index_table: level must be >= 1");
  const std::int64_t np = fine.point_count();
  const std::int64_t m = ipow64(fine.L, fine.d);
  std::vector<std::int64_t> table(static_cast<std::size_t>(np));
  std::vector<std::int64_t> fill(static_cast<std::size_t>(np / m), 0);
  BlockIndexWalker w(fine);
  for (std::int64_t i = 0; i < np; ++i) {
    const std::int64_t c = w.coarse_index();
    table[static_cast<std::size_t>(c * m + fill[static_cast<std::size_t>(c)]++)] = i;
    w.advance();
  }
  return table;
}

Field DenseOperator::apply(const Field& f) const {
  if (f.spec != domain) throw PreconditionError("DenseOperator: domain mismatch");
  Field out(range, 0.0);
  const std::int64_t r = rows(), c = cols();
  for (std::int64_t i = 0; i < r; ++i) {
    double s = 0.0;
    for (std::int64_t j = 0; j < c; ++j) s += at(i, j) * f[j];
    out[i] = s;
  }
  return out;
}

DenseOperator assemble_dense_operator(OperatorKind kind, const LatticeSpec& spec,
                                      int propagator_depth, std::int64_t cap) {
  if (spec.point_count() > cap)
    throw PreconditionError("assemble_dense_operator: lattice exceeds dense cap");
  DenseOperator op;
  op.domain = spec;
  switch (kind) {
    case OperatorKind::kCoarsen:
      op.range = spec.coarser();
      break;
    case OperatorKind::kRefine:
      op.domain = spec.coarser();
      op.range = spec;
      break;
    default:
      op.range = spec;
      break;
  }
  const std::int64_t r = op.rows(), c = op.cols();
  op.entries.assign(static_cast<std::size_t>(r * c), 0.0);
  Field basis(op.domain, 0.0);
  for (std::int64_t j = 0; j < c; ++j) {
    basis[j] = 1.0;
    Field col;
    switch (kind) {
      case OperatorKind::kCoarsen: col = coarsen(basis); break;
      case OperatorKind::kRefine: col = refine(basis); break;
      case OperatorKind::kFluct: col = fluct(basis); break;
      case OperatorKind::kNegLaplacian: col = apply_neg_laplacian(basis); break;
      case OperatorKind::kInverse: {
        // Inverse is defined on mean-zero input; assemble it composed with
        // the mean-removing projection so columns are well defined.
        Field b = basis;
        const double m = mean_total(b);
        for (auto& v : b.values) v -= m;
        col = apply_inverse_laplacian(b);
        break;
      }
      case OperatorKind::kPropagator:
        col = apply_fluct_propagator(basis, propagator_depth);
        break;
    }
    for (std::int64_t i = 0; i < r; ++i)
      op.entries[static_cast<std::size_t>(i * c + j)] = col[i];
    basis[j] = 0.0;
  }
  return op;
}

}  // namespace hrg
