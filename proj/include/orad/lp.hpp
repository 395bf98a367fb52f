#pragma once

#include "orad/common.hpp"

#include <optional>
#include <vector>

namespace orad {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Vec x;
  double value = 0.0;
  std::vector<int> active;  // constraint rows tight at the optimal vertex
  int iterations = 0;
};

/// maximize <c, x> subject to A x <= b (A is m x d).
///
/// Primal simplex in inequality form: walks vertices of the feasible polyhedron,
/// each defined by d linearly independent tight rows. Bland's rule (smallest index
/// on both the leaving multiplier and the ratio-test tie) prevents cycling. Intended
/// for few variables and up to thousands of rows. When `start` is absent a phase-one
/// problem finds a feasible point.
LpResult lp_maximize(const Vec& c, const Mat& A, const Vec& b, const std::optional<Vec>& start = std::nullopt,
                     double feas_tol = tol::lp);

}  // namespace orad
