#include "orad/body.hpp"
#include "orad/body_io.hpp"
#include "orad/directions.hpp"
#include "orad/radii.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace orad;

namespace {

Vec v2(double a, double b) { return (Vec(2) << a, b).finished(); }
Vec v3(double a, double b, double c) { return (Vec(3) << a, b, c).finished(); }

double brute_support(const Mat& pts, const Vec& u) { return (u.transpose() * pts).maxCoeff(); }

// Segment of the line t*d (t real) inside the polygon given by its vertices, by clipping each edge.
std::pair<double, double> clip_line(const Mat& poly2d, const Vec& d) {
  double lo = 1e300, hi = -1e300;
  const Eigen::Index m = poly2d.cols();
  for (Eigen::Index k = 0; k < m; ++k) {
    const Vec a = poly2d.col(k), b = poly2d.col((k + 1) % m);
    // Solve a + s (b - a) = t d.
    Mat M(2, 2);
    M << d, a - b;
    if (std::abs(M.determinant()) < 1e-14) continue;
    const Vec st = M.partialPivLu().solve(a);
    if (st(1) >= -1e-12 && st(1) <= 1 + 1e-12) {
      lo = std::min(lo, st(0));
      hi = std::max(hi, st(0));
    }
  }
  return {lo, hi};
}

}  // namespace

TEST(Bodies, SquareSupport) {
  const ConvexBody sq = make_cube({1, 2}, 1.0, Vec::Zero(2));
  EXPECT_EQ(sq.vertices().cols(), 4);
  EXPECT_NEAR(sq.support(v2(1, 0)), 1.0, 1e-15);
  EXPECT_NEAR(make_segment(v2(-1, 0), v2(1, 0)).support(v2(1, 1).normalized()), std::sqrt(0.5), 1e-15);
}

TEST(Bodies, SimplexVertices) {
  const ConvexBody K2 = make_simplex_Kn(2);
  ASSERT_EQ(K2.dimension(), 3);
  ASSERT_EQ(K2.vertices().cols(), 3);
  for (Eigen::Index j = 0; j < 3; ++j) {
    EXPECT_NEAR(K2.vertices().col(j).sum(), 0.0, 1e-12);
    EXPECT_NEAR(K2.vertices().col(j).maxCoeff(), 2.0 / 3.0, 1e-12);
    EXPECT_NEAR(K2.vertices().col(j).minCoeff(), -1.0 / 3.0, 1e-12);
  }
  for (int n : {2, 3, 4}) EXPECT_NEAR(circumradius(make_simplex_Kn(n)).radius, std::sqrt(n / (n + 1.0)), 1e-10);
}

TEST(Bodies, SimplexSupportIsCoordinateMax) {
  const ConvexBody K3 = make_simplex_Kn(3);
  std::mt19937_64 rng(4);
  std::normal_distribution<double> nd;
  for (int k = 0; k < 50; ++k) {
    Vec u(4);
    for (int j = 0; j < 4; ++j) u(j) = nd(rng);
    u -= Vec::Constant(4, u.mean());
    u.normalize();
    EXPECT_NEAR(K3.support(u), u.maxCoeff(), 1e-12);
  }
}

TEST(Bodies, SlabBodyPrism) {
  const ConvexBody s = make_slab_body(3, 1, {3});
  EXPECT_EQ(s.vertices().cols(), 4);
  EXPECT_NEAR(s.support(v3(1, 0, 0)), 1.0, 1e-15);
  EXPECT_NEAR(s.support(v3(-1, 0, 0)), 0.0, 1e-15);
}

TEST(Bodies, DegenerateInputsRejected) {
  EXPECT_THROW(make_segment(v2(1, 1), v2(1, 1)), DomainError);
  EXPECT_THROW(make_ball_in_subspace(Subspace::full(2), 0.0, 16), DomainError);
  EXPECT_THROW(make_cube({1, 3}, 1.0, Vec::Zero(2)), DomainError);
}

TEST(Bodies, HalfspaceErrors) {
  std::vector<Halfspace> open = {{v2(1, 0), 1}, {v2(-1, 0), 1}, {v2(0, 1), 1}};
  EXPECT_THROW(ConvexBody::from_halfspaces(open, 2), NotCompactError);
  std::vector<Halfspace> empty = {{v2(1, 0), -1}, {v2(-1, 0), -1}, {v2(0, 1), 1}, {v2(0, -1), 1}};
  EXPECT_THROW(ConvexBody::from_halfspaces(empty, 2), EmptyBodyError);
}

TEST(Bodies, HalfspaceAndVertexAgree) {
  std::vector<Halfspace> hs = {{v2(1, 0), 2}, {v2(-1, 0), 1}, {v2(0, 1), 1}, {v2(0, -1), 1}, {v2(1, 1), 2.5}};
  const ConvexBody h = ConvexBody::from_halfspaces(hs, 2);
  const ConvexBody v = ConvexBody::from_vertices(h.vertices());
  EXPECT_EQ(h.vertices().cols(), 5);
  const Mat dirs = circle_directions(64);
  for (Eigen::Index k = 0; k < dirs.cols(); ++k) EXPECT_NEAR(h.support(dirs.col(k)), v.support(dirs.col(k)), 1e-12);
}

TEST(Bodies, Reflect) {
  const ConvexBody s = reflect(make_segment(Vec::Zero(2), v2(1, 0)));
  EXPECT_NEAR(s.support(v2(-1, 0)), 1.0, 1e-15);
  EXPECT_NEAR(s.support(v2(1, 0)), 0.0, 1e-15);
  const ConvexBody K = make_simplex_Kn(2);
  const ConvexBody R = reflect(K);
  const ConvexBody RR = reflect(R);
  EXPECT_TRUE(RR.vertices().isApprox(K.vertices()));
  const Mat dirs = direction_grid(3, 32);
  for (Eigen::Index k = 0; k < dirs.cols(); ++k) EXPECT_NEAR(R.support(dirs.col(k)), K.support(-dirs.col(k)), 1e-14);
}

TEST(Bodies, Projection) {
  const ConvexBody cube = make_cube({1, 2, 3}, 1.0, Vec::Zero(3));
  const ConvexBody sq = project(cube, Subspace::coordinate(3, {1, 2}));
  EXPECT_EQ(sq.dimension(), 2);
  EXPECT_EQ(sq.vertices().cols(), 4);
  const ConvexBody slab = minkowski_sum(make_segment(-v3(1, 0, 0), v3(1, 0, 0)), make_segment(-v3(0, 0, 1), v3(0, 0, 1)));
  const ConvexBody seg = project(slab, Subspace::coordinate(3, {1, 2}));
  EXPECT_NEAR(seg.support(v2(0, 1)), 0.0, 1e-15);
  EXPECT_NEAR(seg.support(v2(1, 0)), 1.0, 1e-15);
  const ConvexBody K2 = make_simplex_Kn(2);
  const Subspace line = Subspace::orthonormalize(v3(0.3, -0.2, 0.9));
  const ConvexBody P = project(K2, line);
  const Mat proj = line.frame().transpose() * K2.vertices();
  EXPECT_NEAR(P.support(Vec::Ones(1)), proj.maxCoeff(), 1e-14);
  EXPECT_NEAR(-P.support(-Vec::Ones(1)), proj.minCoeff(), 1e-14);
}

TEST(Bodies, ProjectionPreservesSupportOnSubspace) {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> nd;
  Mat pts(4, 12);
  for (Eigen::Index c = 0; c < pts.cols(); ++c)
    for (int r = 0; r < 4; ++r) pts(r, c) = nd(rng);
  const ConvexBody K = ConvexBody::from_vertices(pts);
  const Subspace L = Subspace::orthonormalize(Mat::Random(4, 2));
  const ConvexBody P = project(K, L);
  for (int k = 0; k < 200; ++k) {
    const Vec y = (Vec(2) << nd(rng), nd(rng)).finished();
    EXPECT_NEAR(P.support_homogeneous(y), K.support_homogeneous(L.embed(y)), 1e-10);
  }
}

TEST(Bodies, Sections) {
  const ConvexBody cube = make_cube({1, 2, 3}, 1.0, Vec::Zero(3));
  const Section s0 = section(cube, Subspace::coordinate(3, {1, 2}), Vec::Zero(3));
  ASSERT_FALSE(s0.empty);
  EXPECT_EQ(s0.body->vertices().cols(), 4);
  EXPECT_NEAR(s0.body->support(v2(1, 1).normalized()), std::sqrt(2.0), 1e-12);
  EXPECT_TRUE(section(cube, Subspace::coordinate(3, {1, 2}), v3(0, 0, 2)).empty);

  // Triangle K_2 cut by a line through 0 inside its plane, against explicit polygon clipping.
  const ConvexBody K2 = make_simplex_Kn(2);
  const Mat basis = (Mat(3, 2) << 1, 1, -1, 1, 0, -2).finished();
  const Subspace plane = Subspace::orthonormalize(basis);
  const Vec d = plane.embed(v2(std::cos(0.4), std::sin(0.4)));
  const Section cut = section(K2, Subspace(Mat(d)), Vec::Zero(3));
  ASSERT_FALSE(cut.empty);
  const auto [lo, hi] = clip_line(plane.frame().transpose() * K2.vertices(), v2(std::cos(0.4), std::sin(0.4)));
  EXPECT_NEAR(cut.body->support(Vec::Ones(1)), hi, 1e-10);
  EXPECT_NEAR(-cut.body->support(-Vec::Ones(1)), lo, 1e-10);
}

TEST(Bodies, HullUnion) {
  const ConvexBody a = make_segment(Vec::Zero(2), v2(1, 0)), b = make_segment(v2(-1, 0), Vec::Zero(2));
  const ConvexBody u = convex_hull_union(a, b);
  EXPECT_EQ(u.vertices().cols(), 2);
  EXPECT_NEAR(u.support(v2(-1, 0)), 1.0, 1e-15);
  std::mt19937_64 rng(2);
  std::normal_distribution<double> nd;
  Mat p(2, 3), q(2, 3);
  for (int k = 0; k < 6; ++k) (k < 3 ? p : q)(k % 2, k / 2 % 3) = nd(rng);
  p.setRandom();
  q.setRandom();
  const ConvexBody h = convex_hull_union(ConvexBody::from_vertices(p), ConvexBody::from_vertices(q));
  const Mat dirs = circle_directions(64);
  for (Eigen::Index k = 0; k < dirs.cols(); ++k)
    EXPECT_NEAR(h.support(dirs.col(k)), std::max(brute_support(p, dirs.col(k)), brute_support(q, dirs.col(k))), 1e-12);
}

TEST(Bodies, MinkowskiSum) {
  const ConvexBody sq = minkowski_sum(make_segment(v2(-1, 0), v2(1, 0)), make_segment(v2(0, -1), v2(0, 1)));
  EXPECT_EQ(sq.vertices().cols(), 4);
  const ConvexBody K = make_simplex_Kn(2);
  const ConvexBody K0 = minkowski_sum(K, ConvexBody::from_vertices(Mat::Zero(3, 1)));
  EXPECT_EQ(K0.vertices().cols(), 3);
  Mat p = Mat::Random(3, 7), q = Mat::Random(3, 5);
  const ConvexBody s = minkowski_sum(ConvexBody::from_vertices(p), ConvexBody::from_vertices(q));
  const Mat dirs = direction_grid(3, 64);
  for (Eigen::Index k = 0; k < dirs.cols(); ++k)
    EXPECT_NEAR(s.support(dirs.col(k)), brute_support(p, dirs.col(k)) + brute_support(q, dirs.col(k)), 1e-10);
}

TEST(Bodies, Containment) {
  const ConvexBody sq = make_cube({1, 2}, 1.0, Vec::Zero(2));
  const ConvexBody disk = make_ball_in_subspace(Subspace::full(2), 1.0, 64);
  EXPECT_TRUE(contains(sq, disk).contained);
  const Containment c = contains(disk, sq);
  EXPECT_FALSE(c.contained);
  EXPECT_NEAR(c.worst_slack, -(std::sqrt(2.0) - 1.0), 2e-3);
  EXPECT_NEAR(std::abs(c.witness(0)), std::abs(c.witness(1)), 1e-1);
}

TEST(Bodies, SupportIsSublinear) {
  const ConvexBody K = ConvexBody::from_vertices(Mat::Random(3, 9));
  std::mt19937_64 rng(11);
  std::normal_distribution<double> nd;
  for (int k = 0; k < 100; ++k) {
    const Vec u = v3(nd(rng), nd(rng), nd(rng)), v = v3(nd(rng), nd(rng), nd(rng));
    EXPECT_LE(K.support_homogeneous(u + v), K.support_homogeneous(u) + K.support_homogeneous(v) + 1e-12);
    EXPECT_NEAR(K.support_homogeneous(2.5 * u), 2.5 * K.support_homogeneous(u), 1e-12);
  }
}

TEST(Bodies, FileRoundTrip) {
  const ConvexBody K = ConvexBody::from_vertices(Mat::Random(3, 6));
  const BodyFile f = body_file_from(K);
  const ConvexBody back = to_body(parse_body_file(format_body_file(f)));
  EXPECT_EQ(back.vertices(), K.vertices());
  const ConvexBody named = to_body(parse_body_file("dim: 3\nkind: named\nnamed: cube axes=1,3 half_width=2 center=0,0,0\n"));
  EXPECT_NEAR(named.support(v3(0, 0, 1)), 2.0, 1e-15);
  EXPECT_NEAR(named.support(v3(0, 1, 0)), 0.0, 1e-15);
  EXPECT_THROW(parse_body_file("dim: 2\nkind: vrep\nvertices:\n  1 2 3\n"), ParseError);
  EXPECT_THROW(parse_body_file("dim: x\n"), ParseError);
  EXPECT_THROW(parse_number("1e"), ParseError);
}

TEST(Bodies, ShippedDataFilesLoad) {
  for (const char* name : {"seg1", "seg2", "triangle", "square", "cube3", "tetra"}) {
    const ConvexBody b = load_body(std::string(ORAD_DATA_DIR) + "/bodies/" + name + ".body");
    EXPECT_TRUE(b.contains_origin()) << name;
  }
}
