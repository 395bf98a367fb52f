#pragma once

#include "orad/common.hpp"

#include <vector>

namespace orad {

/// {x : <normal, x> <= offset} with a unit normal.
struct Halfspace {
  Vec normal;
  double offset = 0.0;
};

/// Affine hull of a point set: origin + span(basis); `normals` spans the
/// orthogonal complement.
struct AffineHull {
  Vec origin;
  Mat basis;    // d x r, orthonormal columns
  Mat normals;  // d x (d - r), orthonormal columns
  int dimension() const { return static_cast<int>(basis.cols()); }
};

AffineHull affine_hull(const Mat& points, double tol = tol::geom);

/// Vertices and facets of conv(points). Points are columns. Lower-dimensional
/// inputs are handled: their H-representation contains pairs of opposite
/// halfspaces for every direction normal to the affine hull.
struct HullResult {
  std::vector<int> vertices;  // indices of extreme points
  std::vector<Halfspace> halfspaces;
  int affine_dimension = 0;
};

HullResult convex_hull(const Mat& points, double tol = tol::geom);

/// Vertices (columns) of the bounded polyhedron {x : <a_j, x> <= b_j}. Uses polar
/// duality around a Chebyshev center, or enumeration of tight d-subsets when the
/// polyhedron has no interior. Throws NotCompactError or EmptyBodyError.
Mat vertices_from_halfspaces(const std::vector<Halfspace>& halfspaces, int dim, double tol = tol::geom);

/// Columns of `points` selected by `idx`.
Mat select_columns(const Mat& points, const std::vector<int>& idx);

}  // namespace orad
