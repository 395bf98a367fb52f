#pragma once

#include "orad/body.hpp"

#include <vector>

namespace orad {

struct BallCertificate {
  Vec center;
  double radius = 0.0;
  Mat support_points;        // circumball: points on the sphere (columns)
  std::vector<int> support;  // circumball: indices of those points; inball: active facets
  /// Bracket on the true value. Equal to radius for exact polytope computations;
  /// oracle bodies get lower < upper with radius the best estimate.
  double lower = 0.0;
  double upper = 0.0;
  bool exact = true;
};

/// Smallest ball containing the columns of `points` (Welzl with move-to-front).
BallCertificate min_enclosing_ball(const Mat& points, unsigned seed = 0x5eed);

struct OracleBallOptions {
  int directions = 0;  // 0: 720 in 2-D, 2000 in 3-D, 16 n^2 above
  int max_rounds = 30;
  double tol = 1e-10;
};

/// R(K). Polytopes: exact minimum enclosing ball of the vertices. Oracle bodies:
/// enclosing ball of touching points (lower bound) refined against the support
/// function, whose excess max_u h(u) - <c, u> gives the upper estimate.
BallCertificate circumradius(const ConvexBody& body, const OracleBallOptions& opts = {});

struct OracleInballOptions {
  int directions = 0;  // initial cuts; 0: 360 in 2-D, 1000 in 3-D, 8 n^2 above
  int max_rounds = 20;
  double tol = 1e-10;
};

/// Largest i-ball c + rho B_{i,L} inside K: one LP over (c, rho).
/// Throws EmptyBodyError / NotCompactError for infeasible / unbounded problems.
/// Oracle bodies: cutting planes {<u, x> <= h(u)} added at the most violated
/// directions; `upper` is the LP value and `lower` the largest radius the final
/// center admits against the support function.
BallCertificate inradius_fixed_subspace(const ConvexBody& body, const Subspace& L, const OracleInballOptions& opts = {});

/// Reusable form of the LP above for many subspaces over one body.
class InradiusProblem {
 public:
  explicit InradiusProblem(const ConvexBody& body);
  InradiusProblem(Mat A, Vec b, Vec feasible_point);
  BallCertificate solve(const Mat& frame) const;
  int dimension() const { return static_cast<int>(A_.cols()); }

 private:
  Mat A_;
  Vec b_;
  Vec start_;
};

/// r(K) = inradius in the full space.
BallCertificate inradius(const ConvexBody& body);

struct Extent {
  double value = 0.0;
  Vec direction;  // unit direction attaining it
  bool exact = true;
};

/// D(K). Polytopes: max pairwise vertex distance. Oracles: max of h(u) + h(-u), refined.
/// Grid size used for oracle bodies: 720 in 2-D, 2000 in 3-D, 16 d^2 beyond.
int default_oracle_directions(int d);

Extent diameter(const ConvexBody& body);
/// omega(K). Polytopes: exact (antipodal pairs in 2-D, facets of K - K above).
/// Oracles: grid minimum of h(u) + h(-u), refined, reported as an upper bound.
Extent width(const ConvexBody& body);

}  // namespace orad
