#pragma once

#include "orad/body.hpp"
#include "orad/phi.hpp"

namespace orad {

/// The lambda with phi(hK / lambda) + phi(hL / lambda) = 1, by bisection on
/// [max(hK, hL), hK + hL]. Zero when both are zero, max(hK, hL) when one is.
double orlicz_support(double hK, double hL, const OrliczFunction& phi);

/// K +_phi L for bodies containing the origin, held as a support oracle.
class OrliczSumBody {
 public:
  OrliczSumBody(ConvexBody left, ConvexBody right, OrliczFunction phi);

  const ConvexBody& left() const { return left_; }
  const ConvexBody& right() const { return right_; }
  const OrliczFunction& phi() const { return phi_; }
  int dimension() const { return left_.dimension(); }

  double support(const Vec& u) const;
  /// Boundary point with <x, u> = h(u):
  /// x = (phi'(a) x_K + phi'(b) x_L) / (a phi'(a) + b phi'(b)), a = hK/h, b = hL/h.
  Vec touching_point(const Vec& u) const;
  Vec support_table(const Mat& directions) const;

  /// The sum as an oracle ConvexBody.
  const ConvexBody& as_body() const { return body_; }
  /// Intersection of {<x, u> <= h(u)} over the directions.
  ConvexBody outer_approximation(const Mat& directions) const;
  /// Hull of touching points over the directions.
  ConvexBody inner_approximation(const Mat& directions) const;

 private:
  ConvexBody left_, right_;
  OrliczFunction phi_;
  ConvexBody body_;
};

/// Throws DomainError on dimension mismatch or when a body misses the origin.
OrliczSumBody orlicz_sum(const ConvexBody& K, const ConvexBody& L, const OrliczFunction& phi);

/// Luxemburg norm: the lambda with sum_i phi(|x_i| / lambda) = 1 (0 at x = 0).
double orlicz_norm(const Vec& x, const OrliczFunction& phi);

/// Inscribed polytope of {x : |x|_phi <= 1} with boundary points x / |x|_phi.
ConvexBody orlicz_ball(const OrliczFunction& phi, int n, int resolution);

}  // namespace orad
