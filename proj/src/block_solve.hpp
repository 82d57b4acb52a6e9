#pragma once

// Internal: linear solves for the per-block systems
//   (c*I - P1_B * diag(b)) x = rhs,
// where P1_B = I - ones/m on an L^d block. The matrix is diagonal plus
// rank one, A = diag(c - b_i) + (1/m) * 1 * b^T, so the direct mode uses the
// Sherman-Morrison closed form (O(m) per block); the dense-LU and fixed-point
// modes exist as independent validation routes.

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "hrg/common.hpp"
#include "hrg/flow.hpp"

namespace hrg::detail {

struct BlockSolveOutcome {
  double condition = 0.0;
};

// Upper bound on cond_inf(A) for A = diag(a) + (1/m) 1 b^T, computable in O(m).
inline double rank_one_condition_bound(const std::vector<double>& a,
                                       const double* b, std::size_t m,
                                       double denom) {
  double sum_abs_b = 0.0, row_norm = 0.0, inv_a_max = 0.0, sum_q = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i] == 0.0) return std::numeric_limits<double>::infinity();
    sum_abs_b += std::fabs(b[i]);
    inv_a_max = std::max(inv_a_max, 1.0 / std::fabs(a[i]));
    sum_q += std::fabs(b[i] / a[i]);
  }
  const double md = static_cast<double>(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double row = std::fabs(a[i] + b[i] / md) +
                       (sum_abs_b - std::fabs(b[i])) / md;
    row_norm = std::max(row_norm, row);
  }
  if (denom == 0.0) return std::numeric_limits<double>::infinity();
  const double inv_norm_bound =
      inv_a_max + inv_a_max * sum_q / (md * std::fabs(denom));
  return row_norm * inv_norm_bound;
}

// Solves (c*I - P1_B diag(b)) x = rhs in place; b, rhs, x have length m.
// Returns the condition estimate used for the singularity decision.
inline double solve_block(double c, const double* b, const double* rhs,
                          double* x, std::size_t m,
                          const RemainderSolveOptions& opts, int level,
                          std::int64_t block_index) {
  const double md = static_cast<double>(m);
  std::vector<double> a(m);
  for (std::size_t i = 0; i < m; ++i) a[i] = c - b[i];

  double denom = 0.0;
  {
    bool ok = true;
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (a[i] == 0.0) { ok = false; break; }
      s += b[i] / a[i];
    }
    denom = ok ? 1.0 + s / md : 0.0;
  }
  const double cond = rank_one_condition_bound(a, b, m, denom);

  switch (opts.mode) {
    case BlockSolveMode::kDirect: {
      if (!(cond < opts.condition_threshold))
        throw SingularBlockError(
            "singular block system (condition estimate " + std::to_string(cond) +
                ") at level " + std::to_string(level),
            level, block_index);
      double s = 0.0;
      for (std::size_t i = 0; i < m; ++i) s += b[i] * (rhs[i] / a[i]);
      const double corr = s / (md * denom);
      for (std::size_t i = 0; i < m; ++i) x[i] = (rhs[i] - corr) / a[i];
      return cond;
    }
    case BlockSolveMode::kDenseLU: {
      // A = diag(a) + (1/m) 1 b^T assembled explicitly.
      Eigen::MatrixXd A(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) A(i, j) = b[j] / md;
        A(i, i) += a[i];
      }
      Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
      const double rcond = lu.rcond();
      const double cond_lu = rcond > 0 ? 1.0 / rcond
                                       : std::numeric_limits<double>::infinity();
      if (!(cond_lu < opts.condition_threshold))
        throw SingularBlockError(
            "singular block system (condition estimate " +
                std::to_string(cond_lu) + ") at level " + std::to_string(level),
            level, block_index);
      Eigen::Map<const Eigen::VectorXd> rv(rhs, static_cast<Eigen::Index>(m));
      Eigen::VectorXd xv = lu.solve(rv);
      for (std::size_t i = 0; i < m; ++i) x[i] = xv(static_cast<Eigen::Index>(i));
      return cond_lu;
    }
    case BlockSolveMode::kFixedPoint: {
      if (c == 0.0)
        throw SingularBlockError("fixed-point mode requires c != 0", level,
                                 block_index);
      std::vector<double> cur(m, 0.0), next(m);
      double rhs_scale = 0.0;
      for (std::size_t i = 0; i < m; ++i)
        rhs_scale = std::max(rhs_scale, std::fabs(rhs[i]));
      for (int it = 0; it < opts.max_iterations; ++it) {
        double mean = 0.0;
        for (std::size_t i = 0; i < m; ++i) mean += b[i] * cur[i];
        mean /= md;
        double delta = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
          const double prop = (rhs[i] + b[i] * cur[i] - mean) / c;
          next[i] = (1.0 - opts.damping) * cur[i] + opts.damping * prop;
          delta = std::max(delta, std::fabs(next[i] - cur[i]));
        }
        cur.swap(next);
        if (delta <= opts.tolerance * (1.0 + rhs_scale)) {
          for (std::size_t i = 0; i < m; ++i) x[i] = cur[i];
          return cond;
        }
      }
      throw SingularBlockError(
          "fixed-point block iteration did not converge at level " +
              std::to_string(level),
          level, block_index);
    }
  }
  throw PreconditionError("solve_block: unknown mode");
}

}  // namespace hrg::detail
