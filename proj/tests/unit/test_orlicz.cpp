#include "orad/body.hpp"
#include "orad/directions.hpp"
#include "orad/orlicz.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace orad;

namespace {

Vec v2(double a, double b) { return (Vec(2) << a, b).finished(); }

ConvexBody random_body(int n, int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  Mat p(n, m);
  for (Eigen::Index k = 0; k < p.size(); ++k) p.data()[k] = nd(rng);
  p.colwise() -= Vec(p.rowwise().mean());
  return ConvexBody::from_vertices(p);
}

}  // namespace

TEST(OrliczSupport, ClosedFormPowers) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> ud(0.0, 5.0);
  for (double p : {1.0, 1.5, 2.0, 3.0, 10.0}) {
    const OrliczFunction phi = make_power_phi(p);
    for (int k = 0; k < 500; ++k) {
      const double a = ud(rng), b = ud(rng);
      const double closed = std::pow(std::pow(a, p) + std::pow(b, p), 1.0 / p);
      EXPECT_NEAR(orlicz_support(a, b, phi), closed, 1e-10 * closed);
    }
  }
  EXPECT_NEAR(orlicz_support(0.3, 0.7, make_power_phi(1)), 1.0, 1e-12);
  EXPECT_NEAR(orlicz_support(1, 1, make_power_phi(2)), std::sqrt(2.0), 1e-12);
}

TEST(OrliczSupport, DegenerateArguments) {
  const OrliczFunction phi = make_power_phi(2);
  EXPECT_EQ(orlicz_support(0, 0, phi), 0.0);
  EXPECT_EQ(orlicz_support(0, 0.4, phi), 0.4);
  EXPECT_EQ(orlicz_support(0.4, 0, phi), 0.4);
  EXPECT_THROW(orlicz_support(-1, 1, phi), DomainError);
}

TEST(OrliczSupport, EqualArgumentsScaleByHalfInverse) {
  for (const OrliczFunction& phi : default_phi_set())
    EXPECT_NEAR(orlicz_support(0.8, 0.8, phi), 0.8 / phi.half_inverse(), 1e-11) << phi.descriptor();
}

TEST(OrliczSum, DefiningEquationHoldsOnGrid) {
  const ConvexBody K = random_body(3, 7, 2), L = random_body(3, 6, 3);
  for (const OrliczFunction& phi : default_phi_set()) {
    const OrliczSumBody S = orlicz_sum(K, L, phi);
    const Mat dirs = default_direction_grid(3);
    for (Eigen::Index k = 0; k < dirs.cols(); k += 7) {
      const double lam = S.support(dirs.col(k));
      EXPECT_NEAR(phi(K.support(dirs.col(k)) / lam) + phi(L.support(dirs.col(k)) / lam), 1.0, 1e-11);
    }
  }
}

TEST(OrliczSum, IdentityGivesMinkowskiSum) {
  const ConvexBody K = random_body(2, 5, 4), L = random_body(2, 6, 5);
  const OrliczSumBody S = orlicz_sum(K, L, make_power_phi(1));
  const ConvexBody M = minkowski_sum(K, L);
  const Mat dirs = default_direction_grid(2);
  for (Eigen::Index k = 0; k < dirs.cols(); ++k) EXPECT_NEAR(S.support(dirs.col(k)), M.support(dirs.col(k)), 1e-11);
}

TEST(OrliczSum, SegmentsAtDiagonal) {
  const ConvexBody a = make_segment(v2(-1, 0), v2(1, 0)), b = make_segment(v2(0, -1), v2(0, 1));
  for (const OrliczFunction& phi : default_phi_set()) {
    const OrliczSumBody S = orlicz_sum(a, b, phi);
    EXPECT_NEAR(S.support(v2(1, 1).normalized()), std::sqrt(0.5) / phi.half_inverse(), 1e-11);
  }
  // p = 2: the unit disc.
  const OrliczSumBody disc = orlicz_sum(a, b, make_power_phi(2));
  const Mat dirs = circle_directions(90);
  for (Eigen::Index k = 0; k < dirs.cols(); ++k) EXPECT_NEAR(disc.touching_point(dirs.col(k)).norm(), 1.0, 1e-10);
}

TEST(OrliczSum, TouchingPointsLieOnBoundary) {
  const ConvexBody K = random_body(3, 8, 6), L = random_body(3, 5, 7);
  const Mat dirs = default_direction_grid(3);
  for (const OrliczFunction& phi : default_phi_set()) {
    const OrliczSumBody S = orlicz_sum(K, L, phi);
    for (Eigen::Index k = 0; k < dirs.cols(); k += 31) {
      const Vec x = S.touching_point(dirs.col(k));
      EXPECT_NEAR(x.dot(dirs.col(k)), S.support(dirs.col(k)), 1e-9);
      for (Eigen::Index j = 0; j < dirs.cols(); j += 13) EXPECT_LE(x.dot(dirs.col(j)), S.support(dirs.col(j)) + 1e-9);
    }
  }
}

TEST(OrliczSum, InnerInsideOuter) {
  const OrliczSumBody S = orlicz_sum(random_body(2, 5, 8), random_body(2, 4, 9), make_power_phi(3));
  const Mat dirs = circle_directions(64);
  EXPECT_TRUE(contains(S.outer_approximation(dirs), S.inner_approximation(dirs)).contained);
}

TEST(OrliczSum, Preconditions) {
  const ConvexBody a = make_segment(v2(-1, 0), v2(1, 0));
  EXPECT_THROW(orlicz_sum(a, make_cube({1, 2, 3}, 1, Vec::Zero(3)), make_power_phi(2)), DomainError);
  EXPECT_THROW(orlicz_sum(a, make_segment(v2(1, 1), v2(2, 1)), make_power_phi(2)), DomainError);
}

TEST(OrliczNorm, Values) {
  EXPECT_NEAR(orlicz_norm(v2(3, 4), make_power_phi(2)), 5.0, 1e-12);
  EXPECT_NEAR(orlicz_norm(v2(1, 1), make_power_phi(2)), std::sqrt(2.0), 1e-12);
  for (const OrliczFunction& phi : default_phi_set()) EXPECT_NEAR(orlicz_norm(v2(1, 0), phi), 1.0, 1e-12);
  EXPECT_EQ(orlicz_norm(Vec::Zero(3), make_power_phi(2)), 0.0);
}

TEST(OrliczBall, CrossPolytopeAndDisc) {
  const ConvexBody cross = orlicz_ball(make_power_phi(1), 2, 64);
  for (Eigen::Index j = 0; j < cross.vertices().cols(); ++j) EXPECT_NEAR(cross.vertices().col(j).lpNorm<1>(), 1.0, 1e-12);
  EXPECT_NEAR(cross.support(v2(1, 0)), 1.0, 1e-12);
  const ConvexBody disc = orlicz_ball(make_power_phi(2), 2, 64);
  for (Eigen::Index j = 0; j < disc.vertices().cols(); ++j) EXPECT_NEAR(disc.vertices().col(j).norm(), 1.0, 1e-12);
  const ConvexBody b15 = orlicz_ball(make_power_phi(1.5), 2, 128), b3 = orlicz_ball(make_power_phi(3), 2, 128);
  EXPECT_TRUE(contains(b15, b3).contained == false);
  EXPECT_TRUE(contains(b3, b15).contained);
}
