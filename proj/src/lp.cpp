#include "orad/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace orad {

namespace {

constexpr int kPseudo = -1;  // a locked line direction, not a real constraint

struct Ray {
  int row = -1;
  double step = std::numeric_limits<double>::infinity();
};

Ray ratio_test(const Mat& A, const Vec& b, const Vec& x, const Vec& p, const std::vector<char>& in_w) {
  Ray r;
  const Vec ap = A * p;
  const double pn = p.norm();
  for (Eigen::Index j = 0; j < A.rows(); ++j) {
    if (in_w[j]) continue;
    if (ap(j) <= 1e-12 * pn * std::max(1.0, A.row(j).norm())) continue;
    const double slack = std::max(0.0, b(j) - A.row(j).dot(x));
    const double t = slack / ap(j);
    if (r.row < 0 || t < r.step - 1e-14 * std::max(1.0, r.step)) {
      r.step = t;
      r.row = static_cast<int>(j);
    }
  }
  return r;
}

Mat working_rows(const Mat& A, const std::vector<int>& W, const std::vector<Vec>& pseudo) {
  Mat M(static_cast<Eigen::Index>(W.size()), A.cols());
  int q = 0;
  for (std::size_t k = 0; k < W.size(); ++k) {
    if (W[k] == kPseudo) M.row(static_cast<Eigen::Index>(k)) = pseudo[q++].transpose();
    else M.row(static_cast<Eigen::Index>(k)) = A.row(W[k]);
  }
  return M;
}

LpResult solve_from(const Vec& c, const Mat& A, const Vec& b, Vec x, double feas_tol) {
  const Eigen::Index d = A.cols();
  const Eigen::Index m = A.rows();
  LpResult res;
  std::vector<int> W;
  std::vector<Vec> pseudo;
  std::vector<char> in_w(m, 0);

  // Move from the feasible point to a vertex, never decreasing the objective.
  while (static_cast<Eigen::Index>(W.size()) < d) {
    Mat N;
    if (W.empty()) {
      N = Mat::Identity(d, d);
    } else {
      const Mat AW = working_rows(A, W, pseudo);
      Eigen::HouseholderQR<Mat> qr(AW.transpose());
      const Mat Q = qr.householderQ();
      N = Q.rightCols(d - static_cast<Eigen::Index>(W.size()));
    }
    Vec p = N * (N.transpose() * c);
    if (p.norm() <= 1e-12 * std::max(1.0, c.norm())) p = N.col(0);
    Ray ray = ratio_test(A, b, x, p, in_w);
    if (ray.row < 0) {
      if (c.dot(p) > 1e-12 * std::max(1.0, c.norm()) * p.norm()) {
        res.status = LpStatus::unbounded;
        return res;
      }
      p = -p;
      ray = ratio_test(A, b, x, p, in_w);
      if (ray.row < 0) {
        // A whole line is feasible and the objective is flat along it: lock it.
        W.push_back(kPseudo);
        pseudo.push_back(p.normalized());
        continue;
      }
    }
    x += ray.step * p;
    W.push_back(ray.row);
    in_w[ray.row] = 1;
    ++res.iterations;
  }

  const int max_iter = 100 * static_cast<int>(m + d) + 1000;
  while (true) {
    if (res.iterations > max_iter) throw Error("LP iteration limit reached");
    const Mat AW = working_rows(A, W, pseudo);
    Eigen::PartialPivLU<Mat> lu(AW);
    const Vec mu = lu.transpose().solve(c);
    int leave = -1;
    int leave_row = std::numeric_limits<int>::max();
    const double mu_tol = 1e-11 * std::max(1.0, c.norm());
    for (std::size_t k = 0; k < W.size(); ++k) {
      if (W[k] == kPseudo) continue;
      if (mu(static_cast<Eigen::Index>(k)) < -mu_tol && W[k] < leave_row) {
        leave = static_cast<int>(k);
        leave_row = W[k];
      }
    }
    if (leave < 0) break;
    Vec e = Vec::Zero(d);
    e(leave) = -1.0;
    const Vec p = lu.solve(e);
    const Ray ray = ratio_test(A, b, x, p, in_w);
    if (ray.row < 0) {
      res.status = LpStatus::unbounded;
      return res;
    }
    x += ray.step * p;
    in_w[W[leave]] = 0;
    W[leave] = ray.row;
    in_w[ray.row] = 1;
    ++res.iterations;
  }

  res.status = LpStatus::optimal;
  res.x = x;
  res.value = c.dot(x);
  for (Eigen::Index j = 0; j < m; ++j)
    if (std::abs(b(j) - A.row(j).dot(x)) <= feas_tol * std::max(1.0, std::abs(b(j)))) res.active.push_back(static_cast<int>(j));
  return res;
}

}  // namespace

LpResult lp_maximize(const Vec& c, const Mat& A, const Vec& b, const std::optional<Vec>& start, double feas_tol) {
  const Eigen::Index d = A.cols();
  const Eigen::Index m = A.rows();
  if (c.size() != d || b.size() != m) throw DomainError("lp_maximize: inconsistent dimensions");
  if (start) return solve_from(c, A, b, *start, feas_tol);

  if (m == 0 || b.minCoeff() >= 0.0) return solve_from(c, A, b, Vec::Zero(d), feas_tol);

  // Phase one: maximize s subject to A x + s <= b, s <= 0.
  Mat A1(m + 1, d + 1);
  A1.topLeftCorner(m, d) = A;
  A1.topRightCorner(m, 1).setOnes();
  A1.bottomRows(1).setZero();
  A1(m, d) = 1.0;
  Vec b1(m + 1);
  b1.head(m) = b;
  b1(m) = 0.0;
  Vec c1 = Vec::Zero(d + 1);
  c1(d) = 1.0;
  Vec x1 = Vec::Zero(d + 1);
  x1(d) = b.minCoeff();
  const LpResult ph1 = solve_from(c1, A1, b1, x1, feas_tol);
  const double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
  if (ph1.status != LpStatus::optimal || ph1.x(d) < -feas_tol * scale) {
    LpResult res;
    res.status = LpStatus::infeasible;
    return res;
  }
  return solve_from(c, A, b, ph1.x.head(d), feas_tol);
}

}  // namespace orad
