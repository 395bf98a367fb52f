#include "orad/body.hpp"

#include "orad/directions.hpp"
#include "orad/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>

namespace orad {

struct ConvexBody::Impl {
  int dim = 0;
  // Polytope: the generating points (not necessarily extreme).
  Mat points;
  bool polytope = false;
  SupportFn oracle;
  TouchingFn touching;

  mutable std::once_flag hull_once;
  mutable HullResult hull;
  mutable Mat extreme;
  std::optional<std::vector<Halfspace>> given_halfspaces;

  void ensure_hull() const {
    std::call_once(hull_once, [this] {
      const double scale = std::max(1.0, points.cwiseAbs().maxCoeff());
      hull = convex_hull(points, tol::geom * scale);
      extreme = select_columns(points, hull.vertices);
    });
  }
};

ConvexBody ConvexBody::from_vertices(const Mat& points) {
  if (points.cols() == 0) throw EmptyBodyError();
  if (points.rows() < 1) throw DomainError("body dimension must be positive");
  if (!points.allFinite()) throw DomainError("non-finite vertex coordinate");
  auto impl = std::make_shared<Impl>();
  impl->dim = static_cast<int>(points.rows());
  impl->points = points;
  impl->polytope = true;
  return ConvexBody(std::move(impl));
}

ConvexBody ConvexBody::from_halfspaces(std::vector<Halfspace> halfspaces, int dim) {
  if (dim < 1) throw DomainError("body dimension must be positive");
  Mat v = vertices_from_halfspaces(halfspaces, dim);
  if (v.cols() == 0) throw EmptyBodyError();
  auto impl = std::make_shared<Impl>();
  impl->dim = dim;
  impl->points = std::move(v);
  impl->polytope = true;
  for (Halfspace& h : halfspaces) {
    const double n = h.normal.norm();
    if (n > 0) {
      h.normal /= n;
      h.offset /= n;
    }
  }
  impl->given_halfspaces = std::move(halfspaces);
  return ConvexBody(std::move(impl));
}

ConvexBody ConvexBody::from_oracle(int dim, SupportFn support, TouchingFn touching) {
  if (dim < 1) throw DomainError("body dimension must be positive");
  if (!support || !touching) throw DomainError("oracle body needs support and touching functions");
  // Spot-check sublinearity on a few deterministic triples.
  const Mat dirs = direction_grid(dim, std::max(8, 2 * dim));
  for (Eigen::Index k = 0; k + 1 < dirs.cols(); ++k) {
    const Vec u = dirs.col(k), v = dirs.col(k + 1);
    const double hu = support(u), hv = support(v), huv = support(u + v);
    if (huv > hu + hv + 1e-9 * std::max(1.0, std::abs(hu) + std::abs(hv)))
      throw DomainError("oracle support function is not sublinear");
  }
  auto impl = std::make_shared<Impl>();
  impl->dim = dim;
  impl->oracle = std::move(support);
  impl->touching = std::move(touching);
  return ConvexBody(std::move(impl));
}

int ConvexBody::dimension() const { return impl_->dim; }
bool ConvexBody::is_polytope() const { return impl_->polytope; }

const Mat& ConvexBody::vertices() const {
  if (!impl_->polytope) throw DomainError("oracle body has no vertex list");
  impl_->ensure_hull();
  return impl_->extreme;
}

const std::vector<Halfspace>& ConvexBody::halfspaces() const {
  if (!impl_->polytope) throw DomainError("oracle body has no facet list");
  if (impl_->given_halfspaces) return *impl_->given_halfspaces;
  impl_->ensure_hull();
  return impl_->hull.halfspaces;
}

int ConvexBody::affine_dimension() const {
  if (impl_->polytope) {
    impl_->ensure_hull();
    return impl_->hull.affine_dimension;
  }
  // Oracle: coordinate directions of zero width.
  int flat = 0;
  for (int k = 0; k < impl_->dim; ++k) {
    Vec e = Vec::Zero(impl_->dim);
    e(k) = 1.0;
    if (support(e) + support(-e) <= tol::geom) ++flat;
  }
  return impl_->dim - flat;
}

double ConvexBody::support_homogeneous(const Vec& x) const {
  if (x.size() != impl_->dim) throw DomainError("direction has wrong dimension");
  if (impl_->polytope) return (impl_->points.transpose() * x).maxCoeff();
  return impl_->oracle(x);
}

double ConvexBody::support(const Vec& u) const {
  const double n = u.norm();
  if (!(n > 0.0)) throw DomainError("support direction must be nonzero");
  return support_homogeneous(u / n);
}

Vec ConvexBody::touching_point(const Vec& u) const {
  if (u.size() != impl_->dim) throw DomainError("direction has wrong dimension");
  if (impl_->polytope) {
    Eigen::Index arg = 0;
    (impl_->points.transpose() * u).maxCoeff(&arg);
    return impl_->points.col(arg);
  }
  return impl_->touching(u);
}

bool ConvexBody::contains_origin(double tol) const {
  const Mat dirs = default_direction_grid(impl_->dim);
  for (Eigen::Index k = 0; k < dirs.cols(); ++k)
    if (support_homogeneous(dirs.col(k)) < -tol) return false;
  return true;
}

ConvexBody make_segment(const Vec& a, const Vec& b) {
  if (a.size() != b.size() || a.size() == 0) throw DomainError("segment endpoints must share a dimension");
  if ((a - b).norm() == 0.0) throw DomainError("segment has zero length");
  Mat p(a.size(), 2);
  p.col(0) = a;
  p.col(1) = b;
  return ConvexBody::from_vertices(p);
}

ConvexBody make_cube(const std::vector<int>& axes, double half_width, const Vec& center) {
  const int n = static_cast<int>(center.size());
  if (n < 1) throw DomainError("cube needs a center");
  if (!(half_width > 0.0)) throw DomainError("cube half width must be positive");
  std::vector<char> used(n + 1, 0);
  for (int a : axes) {
    if (a < 1 || a > n || used[a]) throw DomainError("axis indices must be distinct and within 1..n");
    used[a] = 1;
  }
  const int k = static_cast<int>(axes.size());
  if (k > 20) throw DomainError("too many cube axes");
  Mat p(n, 1 << k);
  for (int mask = 0; mask < (1 << k); ++mask) {
    Vec v = center;
    for (int j = 0; j < k; ++j) v(axes[j] - 1) += (mask >> j & 1) ? half_width : -half_width;
    p.col(mask) = v;
  }
  return ConvexBody::from_vertices(p);
}

ConvexBody make_ball_in_subspace(const Subspace& L, double radius, int point_count) {
  const int i = L.dimension();
  if (!(radius > 0.0)) throw DomainError("ball radius must be positive");
  if (point_count < 2 * i) throw DomainError("ball needs at least 2i boundary points");
  const Mat dirs = direction_grid(i, point_count);
  return ConvexBody::from_vertices(radius * L.frame() * dirs);
}

double ball_mesh_gap(int i, double radius, int point_count) {
  if (i <= 1) return 0.0;
  const double theta = std::min(grid_spacing(i, point_count), std::numbers::pi / 2);
  return radius * (1.0 - std::cos(theta));
}

ConvexBody make_simplex_Kn(int n) {
  if (n < 1) throw DomainError("simplex order must be positive");
  Mat p = Mat::Constant(n + 1, n + 1, -1.0 / (n + 1));
  p.diagonal().setConstant(static_cast<double>(n) / (n + 1));
  return ConvexBody::from_vertices(p);
}

ConvexBody make_slab_body(int n, int segment_axis, const std::vector<int>& cube_axes) {
  if (segment_axis < 1 || segment_axis > n) throw DomainError("segment axis out of range");
  for (int a : cube_axes)
    if (a == segment_axis) throw DomainError("segment axis repeated among cube axes");
  Vec e = Vec::Zero(n);
  e(segment_axis - 1) = 1.0;
  const ConvexBody seg = make_segment(Vec::Zero(n), e);
  if (cube_axes.empty()) return seg;
  return minkowski_sum(seg, make_cube(cube_axes, 1.0, Vec::Zero(n)));
}

ConvexBody reflect(const ConvexBody& body) {
  if (body.is_polytope()) return ConvexBody::from_vertices(-body.vertices());
  return ConvexBody::from_oracle(
      body.dimension(), [body](const Vec& x) { return body.support_homogeneous(-x); },
      [body](const Vec& u) { return Vec(-body.touching_point(-u)); });
}

ConvexBody project(const ConvexBody& body, const Subspace& L) {
  if (L.ambient_dimension() != body.dimension()) throw DomainError("subspace and body dimensions differ");
  const Mat F = L.frame();
  if (body.is_polytope()) return ConvexBody::from_vertices(F.transpose() * body.vertices());
  return ConvexBody::from_oracle(
      L.dimension(), [body, F](const Vec& y) { return body.support_homogeneous(F * y); },
      [body, F](const Vec& y) { return Vec(F.transpose() * body.touching_point(F * y)); });
}

Section section(const ConvexBody& body, const Subspace& L, const Vec& offset) {
  if (L.ambient_dimension() != body.dimension() || offset.size() != body.dimension())
    throw DomainError("section: dimension mismatch");
  const Mat& F = L.frame();
  const auto& hs = body.halfspaces();
  const double scale = std::max(1.0, body.vertices().cwiseAbs().maxCoeff());
  std::vector<Halfspace> local;
  for (const Halfspace& h : hs) {
    const Vec a = F.transpose() * h.normal;
    const double b = h.offset - h.normal.dot(offset);
    if (a.norm() <= 1e-12) {
      if (b < -tol::geom * scale) return {};
      continue;
    }
    local.push_back({a, b});
  }
  Section s;
  if (local.empty()) throw NotCompactError();
  try {
    s.body = ConvexBody::from_halfspaces(std::move(local), L.dimension());
    s.empty = false;
  } catch (const EmptyBodyError&) {
    s.empty = true;
  }
  return s;
}

ConvexBody convex_hull_union(const ConvexBody& a, const ConvexBody& b) {
  if (a.dimension() != b.dimension()) throw DomainError("bodies have different dimensions");
  if (a.is_polytope() && b.is_polytope()) {
    Mat p(a.dimension(), a.vertices().cols() + b.vertices().cols());
    p << a.vertices(), b.vertices();
    return ConvexBody::from_vertices(p);
  }
  return ConvexBody::from_oracle(
      a.dimension(), [a, b](const Vec& x) { return std::max(a.support_homogeneous(x), b.support_homogeneous(x)); },
      [a, b](const Vec& u) {
        return a.support_homogeneous(u) >= b.support_homogeneous(u) ? a.touching_point(u) : b.touching_point(u);
      });
}

ConvexBody minkowski_sum(const ConvexBody& a, const ConvexBody& b) {
  if (a.dimension() != b.dimension()) throw DomainError("bodies have different dimensions");
  if (a.is_polytope() && b.is_polytope()) {
    const Mat& va = a.vertices();
    const Mat& vb = b.vertices();
    Mat p(a.dimension(), va.cols() * vb.cols());
    for (Eigen::Index i = 0; i < va.cols(); ++i)
      for (Eigen::Index j = 0; j < vb.cols(); ++j) p.col(i * vb.cols() + j) = va.col(i) + vb.col(j);
    const ConvexBody raw = ConvexBody::from_vertices(p);
    return ConvexBody::from_vertices(raw.vertices());
  }
  return ConvexBody::from_oracle(
      a.dimension(), [a, b](const Vec& x) { return a.support_homogeneous(x) + b.support_homogeneous(x); },
      [a, b](const Vec& u) { return Vec(a.touching_point(u) + b.touching_point(u)); });
}

Containment contains(const ConvexBody& outer, const ConvexBody& inner, double tol, const std::optional<Mat>& directions) {
  if (outer.dimension() != inner.dimension()) throw DomainError("bodies have different dimensions");
  Containment c;
  c.worst_slack = std::numeric_limits<double>::infinity();
  if (outer.is_polytope() && inner.is_polytope() && !directions) {
    const Mat& v = inner.vertices();
    for (const Halfspace& h : outer.halfspaces()) {
      const Vec s = Vec::Constant(v.cols(), h.offset) - v.transpose() * h.normal;
      Eigen::Index arg = 0;
      const double m = s.minCoeff(&arg);
      if (m < c.worst_slack) {
        c.worst_slack = m;
        c.witness = v.col(arg);
      }
    }
  } else {
    const Mat dirs = directions ? *directions : default_direction_grid(outer.dimension());
    for (Eigen::Index k = 0; k < dirs.cols(); ++k) {
      const Vec u = dirs.col(k).normalized();
      const double s = outer.support_homogeneous(u) - inner.support_homogeneous(u);
      if (s < c.worst_slack) {
        c.worst_slack = s;
        c.witness = u;
      }
    }
  }
  c.contained = c.worst_slack >= -tol;
  return c;
}

}  // namespace orad
