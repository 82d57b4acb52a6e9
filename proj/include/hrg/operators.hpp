#pragma once

#include "hrg/field.hpp"

namespace hrg {

// Multiscale operator algebra on unit lattices. All operators are implemented
// recursively (O(points * n) application); dense matrices exist only as
// verification oracles behind assemble_dense_operator.

// Block average re-expressed on the unit lattice one level down (S1 Q1).
Field coarsen(const Field& f);

// Block-constant extension one level up (S-1 followed by constant extension
// on blocks); coarsen(refine(w)) == w exactly.
Field refine(const Field& w);

// Fluctuation part P1 f = f - refine(coarsen(f)); block means vanish.
Field fluct(const Field& f);

// Arithmetic mean over all points (n-fold coarsening to a single value).
double mean_total(const Field& f);

// (-Delta_H) f via the scale recursion; zero on constants.
Field apply_neg_laplacian(const Field& f);

// Inverse of (-Delta_H) on mean-zero fields; mean-zero output.
// rel_mean_tol bounds |mean(g)| / max|g| at entry.
Field apply_inverse_laplacian(const Field& g, double rel_mean_tol = kTolInverse);

// Truncation of the inverse to the first `depth` fluctuation levels
// (Gamma_depth); depth 0 -> zero, depth 1 -> fluct, depth n -> full inverse
// on mean-zero input.
Field apply_fluct_propagator(const Field& g, int depth);

// Fine indices grouped by block: entry (c * L^d + j) is the j-th fine flat
// index (in increasing order) of the block whose coarse flat index is c.
std::vector<std::int64_t> block_index_table(const LatticeSpec& fine);

enum class OperatorKind {
  kCoarsen,
  kRefine,
  kFluct,
  kNegLaplacian,
  kInverse,
  kPropagator,
};

// Dense-matrix oracle. Row-major entries; coarsen/refine are rectangular,
// everything else is square on level n.
struct DenseOperator {
  LatticeSpec domain;  // input lattice
  LatticeSpec range;   // output lattice
  std::vector<double> entries;  // range.point_count() x domain.point_count()

  std::int64_t rows() const { return range.point_count(); }
  std::int64_t cols() const { return domain.point_count(); }
  double at(std::int64_t i, std::int64_t j) const {
    return entries[static_cast<std::size_t>(i * cols() + j)];
  }
  Field apply(const Field& f) const;
};

DenseOperator assemble_dense_operator(OperatorKind kind, const LatticeSpec& spec,
                                      int propagator_depth = 0,
                                      std::int64_t cap = kDefaultDenseCap);

}  // namespace hrg
