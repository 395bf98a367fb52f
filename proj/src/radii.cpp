#include "orad/radii.hpp"

#include "orad/directions.hpp"
#include "orad/hull.hpp"
#include "orad/lp.hpp"

#include <algorithm>
#include <cmath>
#include <list>
#include <numeric>
#include <random>

namespace orad {

namespace {

struct Ball {
  Vec c;
  double r2 = -1.0;
};

// Smallest ball with all of `b` on its boundary, computed in their affine hull.
Ball ball_through(const std::vector<const double*>& b, int d) {
  Ball ball;
  if (b.empty()) return ball;
  const Eigen::Map<const Vec> p0(b[0], d);
  if (b.size() == 1) {
    ball.c = p0;
    ball.r2 = 0.0;
    return ball;
  }
  const int k = static_cast<int>(b.size()) - 1;
  Mat Q(d, k);
  for (int j = 0; j < k; ++j) Q.col(j) = Eigen::Map<const Vec>(b[j + 1], d) - p0;
  const Mat G = Q.transpose() * Q;
  const Vec rhs = 0.5 * G.diagonal();
  const Vec lam = G.colPivHouseholderQr().solve(rhs);
  ball.c = p0 + Q * lam;
  ball.r2 = (ball.c - p0).squaredNorm();
  return ball;
}

class Welzl {
 public:
  Welzl(const Mat& pts, double eps) : pts_(pts), d_(static_cast<int>(pts.rows())), eps_(eps) {}

  Ball run(std::vector<int> order) {
    for (int i : order) list_.push_back(i);
    boundary_.clear();
    mtf(list_.end());
    return ball_;
  }

 private:
  void mtf(std::list<int>::iterator end) {
    ball_ = ball_through(boundary_, d_);
    if (static_cast<int>(boundary_.size()) == d_ + 1) return;
    for (auto it = list_.begin(); it != end;) {
      auto next = std::next(it);
      const double dist2 = ball_.r2 < 0 ? 1.0 : (pts_.col(*it) - ball_.c).squaredNorm();
      const double lim = std::sqrt(std::max(0.0, ball_.r2)) + eps_;
      if (ball_.r2 < 0 || dist2 > lim * lim) {
        boundary_.push_back(pts_.col(*it).data());
        mtf(it);
        boundary_.pop_back();
        list_.splice(list_.begin(), list_, it);
      }
      it = next;
    }
  }

  const Mat& pts_;
  int d_;
  double eps_;
  std::list<int> list_;
  std::vector<const double*> boundary_;
  Ball ball_;
};

constexpr Eigen::Index kExactWidthVertices = 64;


// Distance-increasing fixed point: u <- (x(u) - c) / |x(u) - c|.
Vec farthest_point_from(const ConvexBody& body, const Vec& c, Vec u, int iters = 60) {
  Vec x = body.touching_point(u);
  for (int k = 0; k < iters; ++k) {
    const Vec dlt = x - c;
    const double n = dlt.norm();
    if (n == 0.0) break;
    const Vec un = dlt / n;
    if ((un - u).norm() < 1e-13) break;
    u = un;
    x = body.touching_point(u);
  }
  return x;
}

// Pattern search for a local minimum of f on the unit sphere. The tangent poll
// basis is re-drawn at random before the step shrinks, so kinks that are not
// aligned with one basis do not stall the search.
template <class F>
std::pair<Vec, double> minimize_on_sphere(F&& f, Vec u, double step, double step_min = 1e-10) {
  double best = f(u);
  const int d = static_cast<int>(u.size());
  if (d < 2) return {u, best};
  std::mt19937_64 rng(0x51ed);
  std::normal_distribution<double> nd;
  int redraws = 0;
  for (int moves = 0; step > step_min && moves < 6000 && std::isfinite(best); ++moves) {
    bool improved = false;
    Mat T = Eigen::HouseholderQR<Mat>(u).householderQ();
    T = T.rightCols(d - 1).eval();
    if (redraws > 0) {
      Mat G(d - 1, d - 1);
      for (Eigen::Index k = 0; k < G.size(); ++k) G.data()[k] = nd(rng);
      const Mat R = Eigen::HouseholderQR<Mat>(G).householderQ();
      T = (T * R).eval();
    }
    for (int k = 0; k < d - 1 && !improved; ++k)
      for (double s : {step, -step}) {
        const Vec v = (std::cos(s) * u + std::sin(s) * T.col(k)).normalized();
        const double val = f(v);
        if (val < best - 1e-14 * std::max(1.0, std::abs(best))) {
          best = val;
          u = v;
          improved = true;
          break;
        }
      }
    if (improved) {
      redraws = 0;
    } else if (d > 2 && redraws < d) {
      ++redraws;
    } else {
      redraws = 0;
      step *= 0.5;
    }
  }
  return {u, best};
}

int default_inball_directions(int d) {
  if (d == 1) return 2;
  if (d == 2) return 360;
  if (d == 3) return 1000;
  return 8 * d * d;
}

BallCertificate oracle_inball(const ConvexBody& body, const Mat& F, const OracleInballOptions& opts) {
  // Upper bound: LP over the cuts {<u, x> <= h(u)}, an outer polytope.
  // Lower bound: exact LP on the hull of touching points, an inner polytope.
  // Each round adds the binding facet normals of the inner LP and the most
  // violated directions of the outer LP center.
  const int n = body.dimension();
  const Mat dirs = direction_grid(n, opts.directions > 0 ? opts.directions : default_inball_directions(n));
  std::vector<Vec> cuts;
  std::vector<double> offs;
  std::vector<Vec> pts;
  Vec start = Vec::Zero(n);
  auto add = [&](const Vec& u) {
    cuts.push_back(u);
    offs.push_back(body.support_homogeneous(u));
    pts.push_back(body.touching_point(u));
  };
  for (Eigen::Index k = 0; k < dirs.cols(); ++k) {
    cuts.push_back(dirs.col(k));
    offs.push_back(body.support_homogeneous(dirs.col(k)));
  }
  // A coarser grid seeds the inner polytope; refinement adds points where they bind.
  const Mat seed_dirs = direction_grid(n, std::max(2 * n, static_cast<int>(dirs.cols()) / 4));
  for (Eigen::Index k = 0; k < seed_dirs.cols(); ++k) {
    pts.push_back(body.touching_point(seed_dirs.col(k)));
    start += pts.back();
  }
  start /= static_cast<double>(seed_dirs.cols());

  auto ratio = [&](const Vec& c, const Vec& u) {
    const double num = body.support_homogeneous(u) - u.dot(c);
    const double den = (F.transpose() * u).norm();
    if (den < 1e-12) return num >= -tol::geom ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
    return num / den;
  };

  BallCertificate cert;
  cert.exact = false;
  for (int round = 0; round < opts.max_rounds; ++round) {
    const Eigen::Index m = static_cast<Eigen::Index>(cuts.size());
    Mat A(m, n);
    Vec b(m);
    for (Eigen::Index j = 0; j < m; ++j) {
      A.row(j) = cuts[static_cast<std::size_t>(j)].transpose();
      b(j) = offs[static_cast<std::size_t>(j)];
    }
    Mat P(n, static_cast<Eigen::Index>(pts.size()));
    for (std::size_t j = 0; j < pts.size(); ++j) P.col(static_cast<Eigen::Index>(j)) = pts[j];
    const BallCertificate up = InradiusProblem(A, b, start).solve(F);
    const ConvexBody inner = ConvexBody::from_vertices(P);
    const BallCertificate lo = InradiusProblem(inner).solve(F);

    // Keep the best bracket seen; a ball that breaks a cut came from a bad hull and is skipped.
    const Vec slack = b - A * lo.center - lo.radius * (A * F).rowwise().norm();
    if (round == 0 || (lo.radius > cert.lower && slack.minCoeff() >= -tol::geom)) {
      cert.center = lo.center;
      cert.lower = lo.radius;
      cert.support = lo.support;
    }
    cert.upper = round == 0 ? up.radius : std::min(cert.upper, up.radius);
    cert.lower = std::min(cert.lower, cert.upper);
    cert.radius = cert.lower;
    if (cert.upper - cert.lower <= opts.tol * std::max(1.0, cert.upper)) break;
    if (round + 1 == opts.max_rounds) {
      // Out of rounds: the sampled ball radius at the outer center estimates the value inside the bracket.
      double est = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < cuts.size(); ++j) est = std::min(est, ratio(up.center, cuts[j]));
      for (Eigen::Index k = 0; k < dirs.cols(); ++k) est = std::min(est, ratio(up.center, dirs.col(k)));
      if (std::isfinite(est)) cert.radius = std::clamp(est, cert.lower, cert.upper);
      break;
    }

    // Normals of the inner facets closest to the ball, not only the binding ones:
    // curved contact sets need many new points per round.
    std::vector<Vec> fresh;
    const auto& facets = inner.halfspaces();
    std::vector<std::pair<double, std::size_t>> near;
    for (std::size_t j = 0; j < facets.size(); ++j)
      near.push_back({facets[j].offset - facets[j].normal.dot(lo.center) - lo.radius * (F.transpose() * facets[j].normal).norm(), j});
    const std::size_t take = std::min(near.size(), static_cast<std::size_t>(4 * n));
    std::partial_sort(near.begin(), near.begin() + static_cast<std::ptrdiff_t>(take), near.end());
    for (std::size_t t = 0; t < take; ++t) fresh.push_back(facets[near[t].second].normal);
    std::vector<std::pair<double, int>> worst;
    for (Eigen::Index k = 0; k < dirs.cols(); ++k) worst.push_back({ratio(up.center, dirs.col(k)), static_cast<int>(k)});
    const int top = std::min<int>(static_cast<int>(worst.size()), n + 1);
    std::partial_sort(worst.begin(), worst.begin() + top, worst.end());
    const double step = grid_spacing(n, static_cast<int>(dirs.cols()));
    for (int t = 0; t < top; ++t) {
      if (!std::isfinite(worst[static_cast<std::size_t>(t)].first)) continue;
      auto [u, val] = minimize_on_sphere([&](const Vec& v) { return ratio(up.center, v); },
                                         Vec(dirs.col(worst[static_cast<std::size_t>(t)].second)), step, 1e-8);
      if (val < up.radius) fresh.push_back(u);
    }
    const std::size_t before = cuts.size();
    for (const Vec& u : fresh) {
      bool dup = false;
      for (std::size_t j = 0; j < cuts.size() && !dup; ++j) dup = (cuts[j] - u).norm() < 1e-12;
      if (!dup) add(u);
    }
    if (cuts.size() == before) break;
  }
  return cert;
}

}  // namespace

BallCertificate min_enclosing_ball(const Mat& points, unsigned seed) {
  if (points.cols() == 0) throw EmptyBodyError();
  const double scale = std::max(1.0, points.cwiseAbs().maxCoeff());
  std::vector<int> order(static_cast<std::size_t>(points.cols()));
  std::iota(order.begin(), order.end(), 0);
  std::mt19937 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  Welzl w(points, 1e-13 * scale);
  const Ball b = w.run(std::move(order));
  BallCertificate cert;
  cert.center = b.c;
  const Vec dist = (points.colwise() - b.c).colwise().norm().transpose();
  cert.radius = dist.maxCoeff();
  for (Eigen::Index j = 0; j < dist.size(); ++j)
    if (dist(j) >= cert.radius - tol::geom * scale) cert.support.push_back(static_cast<int>(j));
  cert.support_points = select_columns(points, cert.support);
  cert.lower = cert.upper = cert.radius;
  return cert;
}

BallCertificate circumradius(const ConvexBody& body, const OracleBallOptions& opts) {
  if (body.is_polytope()) return min_enclosing_ball(body.vertices());
  const int d = body.dimension();
  const Mat dirs = direction_grid(d, opts.directions > 0 ? opts.directions : default_oracle_directions(d));
  std::vector<Vec> samples;
  samples.reserve(static_cast<std::size_t>(dirs.cols()));
  for (Eigen::Index k = 0; k < dirs.cols(); ++k) samples.push_back(body.touching_point(dirs.col(k)));

  BallCertificate best;
  for (int round = 0; round < opts.max_rounds; ++round) {
    Mat S(d, static_cast<Eigen::Index>(samples.size()));
    for (std::size_t j = 0; j < samples.size(); ++j) S.col(static_cast<Eigen::Index>(j)) = samples[j];
    BallCertificate ball = min_enclosing_ball(S);
    const Vec& c = ball.center;
    // Support excess over the grid, then climb from the worst directions.
    std::vector<std::pair<double, int>> excess;
    excess.reserve(static_cast<std::size_t>(dirs.cols()));
    for (Eigen::Index k = 0; k < dirs.cols(); ++k)
      excess.push_back({body.support_homogeneous(dirs.col(k)) - c.dot(dirs.col(k)), static_cast<int>(k)});
    const int top = std::min<int>(static_cast<int>(excess.size()), 2 * d + 2);
    std::partial_sort(excess.begin(), excess.begin() + top, excess.end(),
                      [](const auto& a, const auto& b) { return a.first > b.first || (a.first == b.first && a.second < b.second); });
    double hi = excess.front().first;
    for (int t = 0; t < top; ++t) {
      const Vec x = farthest_point_from(body, c, dirs.col(excess[static_cast<std::size_t>(t)].second));
      const double dist = (x - c).norm();
      if (dist > ball.radius) samples.push_back(x);
      const Vec u = (x - c).norm() > 0 ? Vec((x - c).normalized()) : Vec(dirs.col(excess[static_cast<std::size_t>(t)].second));
      hi = std::max(hi, body.support_homogeneous(u) - c.dot(u));
    }
    ball.lower = ball.radius;
    ball.upper = std::max(hi, ball.radius);
    ball.exact = false;
    best = ball;
    if (ball.upper - ball.lower <= opts.tol * std::max(1.0, ball.upper)) break;
  }
  best.radius = best.lower;
  return best;
}

InradiusProblem::InradiusProblem(const ConvexBody& body) {
  const auto& hs = body.halfspaces();
  const int n = body.dimension();
  A_.resize(static_cast<Eigen::Index>(hs.size()), n);
  b_.resize(static_cast<Eigen::Index>(hs.size()));
  for (std::size_t j = 0; j < hs.size(); ++j) {
    A_.row(static_cast<Eigen::Index>(j)) = hs[j].normal.transpose();
    b_(static_cast<Eigen::Index>(j)) = hs[j].offset;
  }
  start_ = body.vertices().rowwise().mean();
}

InradiusProblem::InradiusProblem(Mat A, Vec b, Vec feasible_point)
    : A_(std::move(A)), b_(std::move(b)), start_(std::move(feasible_point)) {}

BallCertificate InradiusProblem::solve(const Mat& frame) const {
  const Eigen::Index n = A_.cols();
  const Eigen::Index m = A_.rows();
  if (frame.rows() != n) throw DomainError("inradius: subspace and body dimensions differ");
  Mat A(m + 1, n + 1);
  A.topLeftCorner(m, n) = A_;
  A.topRightCorner(m, 1) = (A_ * frame).rowwise().norm();
  A.bottomRows(1).setZero();
  A(m, n) = -1.0;
  Vec b(m + 1);
  b.head(m) = b_;
  b(m) = 0.0;
  Vec c = Vec::Zero(n + 1);
  c(n) = 1.0;
  std::optional<Vec> start;
  if (start_.size() == n) {
    Vec s(n + 1);
    s.head(n) = start_;
    s(n) = 0.0;
    // The stored point must actually be feasible; otherwise fall back to phase one.
    const double scale = std::max(1.0, b_.cwiseAbs().maxCoeff());
    if ((A_ * start_ - b_).maxCoeff() <= tol::lp * scale) start = s;
  }
  const LpResult r = lp_maximize(c, A, b, start);
  if (r.status == LpStatus::infeasible) throw EmptyBodyError();
  if (r.status == LpStatus::unbounded) throw NotCompactError();
  BallCertificate cert;
  cert.center = r.x.head(n);
  cert.radius = std::max(0.0, r.x(n));
  for (int j : r.active)
    if (j < m) cert.support.push_back(j);
  cert.lower = cert.upper = cert.radius;
  return cert;
}

BallCertificate inradius_fixed_subspace(const ConvexBody& body, const Subspace& L, const OracleInballOptions& opts) {
  if (L.ambient_dimension() != body.dimension()) throw DomainError("inradius: subspace and body dimensions differ");
  if (!body.is_polytope()) return oracle_inball(body, L.frame(), opts);
  return InradiusProblem(body).solve(L.frame());
}

int default_oracle_directions(int d) {
  if (d == 1) return 2;
  if (d == 2) return 720;
  if (d == 3) return 2000;
  return 16 * d * d;
}

BallCertificate inradius(const ConvexBody& body) { return inradius_fixed_subspace(body, Subspace::full(body.dimension())); }

Extent diameter(const ConvexBody& body) {
  Extent e;
  if (body.is_polytope()) {
    const Mat& v = body.vertices();
    double best = -1.0;
    for (Eigen::Index i = 0; i < v.cols(); ++i)
      for (Eigen::Index j = i + 1; j < v.cols(); ++j) {
        const double dd = (v.col(i) - v.col(j)).squaredNorm();
        if (dd > best) {
          best = dd;
          e.direction = (v.col(i) - v.col(j)).normalized();
        }
      }
    e.value = best < 0 ? 0.0 : std::sqrt(best);
    if (best <= 0) e.direction = Vec::Unit(body.dimension(), 0);
    return e;
  }
  const int d = body.dimension();
  const Mat dirs = direction_grid(d, default_oracle_directions(d));
  e.exact = false;
  e.value = -1.0;
  for (Eigen::Index k = 0; k < dirs.cols(); ++k) {
    Vec u = dirs.col(k);
    const double w = body.support_homogeneous(u) + body.support_homogeneous(-u);
    if (w > e.value) {
      e.value = w;
      e.direction = u;
    }
  }
  // Width-increasing fixed point u <- (x(u) - x(-u)) / |...|.
  Vec u = e.direction;
  for (int it = 0; it < 60; ++it) {
    const Vec dlt = body.touching_point(u) - body.touching_point(-u);
    if (dlt.norm() == 0.0) break;
    const Vec un = dlt.normalized();
    const double w = body.support_homogeneous(un) + body.support_homogeneous(-un);
    if (w <= e.value) break;
    e.value = w;
    e.direction = un;
    u = un;
  }
  return e;
}

Extent width(const ConvexBody& body) {
  const int d = body.dimension();
  Extent e;
  auto w_of = [&](const Vec& u) { return body.support_homogeneous(u) + body.support_homogeneous(-u); };
  if (body.is_polytope()) {
    const Mat& v = body.vertices();
    if (d == 1) {
      e.direction = Vec::Ones(1);
      e.value = w_of(e.direction);
      return e;
    }
    if (body.affine_dimension() < d) {
      const AffineHull ah = affine_hull(v, tol::geom * std::max(1.0, v.cwiseAbs().maxCoeff()));
      e.direction = ah.normals.col(0);
      e.value = 0.0;
      return e;
    }
    // Facet normals of K - K give the exact minimum; beyond a size limit fall back to search.
    std::vector<Vec> candidates;
    if (d == 2) {
      for (const Halfspace& h : body.halfspaces()) candidates.push_back(h.normal);
    } else if (v.cols() <= kExactWidthVertices) {
      Mat diff(d, v.cols() * v.cols());
      for (Eigen::Index i = 0; i < v.cols(); ++i)
        for (Eigen::Index j = 0; j < v.cols(); ++j) diff.col(i * v.cols() + j) = v.col(i) - v.col(j);
      for (const Halfspace& h : convex_hull(diff, tol::geom * std::max(1.0, diff.cwiseAbs().maxCoeff())).halfspaces)
        candidates.push_back(h.normal);
    }
    if (!candidates.empty()) {
      e.value = std::numeric_limits<double>::infinity();
      for (const Vec& u : candidates) {
        const double w = w_of(u);
        if (w < e.value) {
          e.value = w;
          e.direction = u;
        }
      }
      return e;
    }
  }
  const Mat dirs = direction_grid(d, default_oracle_directions(d));
  e.exact = false;
  e.value = std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 0; k < dirs.cols(); ++k) {
    const double w = w_of(dirs.col(k));
    if (w < e.value) {
      e.value = w;
      e.direction = dirs.col(k);
    }
  }
  auto [u, w] = minimize_on_sphere(w_of, e.direction, grid_spacing(d, static_cast<int>(dirs.cols())));
  e.direction = u;
  e.value = w;
  return e;
}

}  // namespace orad
