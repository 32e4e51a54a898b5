#pragma once

#include <vector>

#include "alpharm/bounds.hpp"
#include "alpharm/solution.hpp"

namespace alpharm {

// Knobs of the self-check sweep.  Randomized checks draw interior points
// from a deterministic generator, so equal options mean equal reports.
//
// sup_override: the inequality suite needs an upper bound M on sup |f|.  By
// default it uses the polar-grid estimate, which is a lower estimate of the
// sup and can falsely flag near-extremal inputs; callers holding a certified
// bound (say, a boundary maximum) should pass it here.
struct VerifyOptions {
  int points = 200;              // random interior sample count
  unsigned long long seed = 0;   // generator seed
  double tol_scale = 1e-6;       // inequality tolerance = tol_scale * M
  int max_coeff_index = 16;      // coefficient checks run k = 1..min(K, this)
  double sup_override = 0.0;     // > 0 replaces the grid sup estimate
  int quad_n = 256;              // nodes for the kernel-integral cross-check
};

// Full report sweep for a series solution:
//   - Parseval split at r in {0.3, 0.7, 0.95}: squared circle mean against
//     the coefficient sum  sum_k |c_k F_k(r^2) r^|k||^2.
//   - Worst finite-difference residual of the defining operator over random
//     points (|z| <= 0.9).
//   - Worst-point center-deviation and derivative-norm estimates.
//   - Coefficient estimates for k = 1..min(order, max_coeff_index) plus the
//     center coefficient.
//   - Increment estimate, when the solution has f(0) = 0.
//   - Growth estimate from the p = 2 Hardy norm scan.
//   - Wirtinger derivatives against centered differences at five points.
// Every report's satisfied flag uses tol_scale * M (except the identity
// checks, whose tolerances are written into their rhs).
std::vector<BoundReport> verify_solution(const SeriesSolution& sol,
                                         const VerifyOptions& opt = {});

// Same sweep on a solution fitted to boundary samples, prepended with a
// cross-check of series evaluation against the direct kernel integral at
// eight interior points (|z| <= 0.9).  The fit order is (n-1)/4 capped at
// max_coeff_index * 4, n being the sample count.
std::vector<BoundReport> verify_boundary(const BoundaryData& data,
                                         double alpha,
                                         const VerifyOptions& opt = {});

bool all_satisfied(const std::vector<BoundReport>& reports);

}  // namespace alpharm
