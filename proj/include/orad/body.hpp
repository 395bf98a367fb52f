#pragma once

#include "orad/common.hpp"
#include "orad/hull.hpp"
#include "orad/subspace.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace orad {

/// h(x) for any x (positively homogeneous).
using SupportFn = std::function<double(const Vec&)>;
/// A boundary point x of the body with <x, u> = h(u).
using TouchingFn = std::function<Vec(const Vec&)>;

/// Compact convex set in R^n. Polytopes keep their vertex list (columns) and derive
/// facets lazily; oracle bodies are given by a support function and touching points.
/// Values are immutable and cheap to copy.
class ConvexBody {
 public:
  static ConvexBody from_vertices(const Mat& points);
  static ConvexBody from_halfspaces(std::vector<Halfspace> halfspaces, int dim);
  static ConvexBody from_oracle(int dim, SupportFn support, TouchingFn touching);

  int dimension() const;
  bool is_polytope() const;

  /// Polytopes only. Extreme points, one per column.
  const Mat& vertices() const;
  /// Polytopes only. Facet halfspaces; lower-dimensional bodies include pairs of
  /// opposite halfspaces pinning the affine hull.
  const std::vector<Halfspace>& halfspaces() const;
  int affine_dimension() const;

  /// h(u / |u|); u must be nonzero.
  double support(const Vec& u) const;
  double support_homogeneous(const Vec& x) const;
  Vec touching_point(const Vec& u) const;

  /// h(u) >= -tol on the default direction grid.
  bool contains_origin(double tol = tol::geom) const;

 private:
  struct Impl;
  explicit ConvexBody(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

ConvexBody make_segment(const Vec& a, const Vec& b);
/// center + sum over axes (1-based) of [-w e_k, w e_k].
ConvexBody make_cube(const std::vector<int>& axes, double half_width, const Vec& center);
/// Inscribed polytope of the ball radius * B_{i,L}: `point_count` boundary points from a
/// deterministic direction set in L.
ConvexBody make_ball_in_subspace(const Subspace& L, double radius, int point_count);
/// Upper bound on the distance between the true ball and its polytope from make_ball_in_subspace.
double ball_mesh_gap(int i, double radius, int point_count);
/// conv{p_k} in R^{n+1}, p_kk = n/(n+1), p_kj = -1/(n+1).
ConvexBody make_simplex_Kn(int n);
/// [0, e_seg] + sum over cube_axes of [-e_k, e_k] in R^n.
ConvexBody make_slab_body(int n, int segment_axis, const std::vector<int>& cube_axes);

ConvexBody reflect(const ConvexBody& body);
/// K|L in the frame coordinates of L.
ConvexBody project(const ConvexBody& body, const Subspace& L);

struct Section {
  bool empty = true;
  std::optional<ConvexBody> body;  // in the frame coordinates of L
};
/// K intersected with offset + L.
Section section(const ConvexBody& body, const Subspace& L, const Vec& offset);

ConvexBody convex_hull_union(const ConvexBody& a, const ConvexBody& b);
ConvexBody minkowski_sum(const ConvexBody& a, const ConvexBody& b);

struct Containment {
  bool contained = false;
  double worst_slack = 0.0;  // most negative (or smallest) slack observed
  Vec witness;               // vertex of the inner body or grid direction where it occurs
};

/// Is `inner` inside `outer`? Vertex test against facets when both are polytopes,
/// support comparison on `directions` (default grid) otherwise.
Containment contains(const ConvexBody& outer, const ConvexBody& inner, double tol = tol::geom,
                     const std::optional<Mat>& directions = std::nullopt);

}  // namespace orad
