#include "orad/orlicz.hpp"

#include "orad/directions.hpp"

#include <algorithm>
#include <cmath>

namespace orad {

namespace {

// Root of a decreasing function g on [lo, hi] with g(lo) >= 0 >= g(hi).
template <class G>
double bisect_decreasing(G&& g, double lo, double hi) {
  for (int it = 0; it < 200 && hi - lo > tol::root * 1e-3 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (g(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double orlicz_support(double hK, double hL, const OrliczFunction& phi) {
  if (!(hK >= 0.0) || !(hL >= 0.0)) throw DomainError("orlicz_support: support values must be non-negative");
  if (hK == 0.0 && hL == 0.0) return 0.0;
  if (hK == 0.0 || hL == 0.0) return std::max(hK, hL);
  return bisect_decreasing([&](double lam) { return phi(hK / lam) + phi(hL / lam) - 1.0; }, std::max(hK, hL), hK + hL);
}

OrliczSumBody::OrliczSumBody(ConvexBody left, ConvexBody right, OrliczFunction phi)
    : left_(std::move(left)),
      right_(std::move(right)),
      phi_(std::move(phi)),
      body_(ConvexBody::from_oracle(
          left_.dimension(),
          [K = left_, L = right_, f = phi_](const Vec& x) {
            return orlicz_support(std::max(0.0, K.support_homogeneous(x)), std::max(0.0, L.support_homogeneous(x)), f);
          },
          [K = left_, L = right_, f = phi_](const Vec& u) {
            const double hK = std::max(0.0, K.support_homogeneous(u));
            const double hL = std::max(0.0, L.support_homogeneous(u));
            const double lam = orlicz_support(hK, hL, f);
            if (lam == 0.0) return Vec(Vec::Zero(u.size()));
            const double a = hK / lam, b = hL / lam;
            const double da = f.derivative(a), db = f.derivative(b);
            return Vec((da * K.touching_point(u) + db * L.touching_point(u)) / (a * da + b * db));
          })) {
  if (left_.dimension() != right_.dimension()) throw DomainError("orlicz sum: bodies have different dimensions");
}

double OrliczSumBody::support(const Vec& u) const { return body_.support(u); }

Vec OrliczSumBody::touching_point(const Vec& u) const { return body_.touching_point(u.normalized()); }

Vec OrliczSumBody::support_table(const Mat& directions) const {
  Vec h(directions.cols());
  for (Eigen::Index k = 0; k < directions.cols(); ++k) h(k) = support(directions.col(k));
  return h;
}

ConvexBody OrliczSumBody::outer_approximation(const Mat& directions) const {
  std::vector<Halfspace> hs;
  hs.reserve(static_cast<std::size_t>(directions.cols()));
  for (Eigen::Index k = 0; k < directions.cols(); ++k) {
    const Vec u = directions.col(k).normalized();
    hs.push_back({u, body_.support_homogeneous(u)});
  }
  return ConvexBody::from_halfspaces(std::move(hs), dimension());
}

ConvexBody OrliczSumBody::inner_approximation(const Mat& directions) const {
  Mat pts(dimension(), directions.cols());
  for (Eigen::Index k = 0; k < directions.cols(); ++k) pts.col(k) = touching_point(directions.col(k));
  return ConvexBody::from_vertices(pts);
}

OrliczSumBody orlicz_sum(const ConvexBody& K, const ConvexBody& L, const OrliczFunction& phi) {
  if (K.dimension() != L.dimension())
    throw DomainError("orlicz sum: dimension mismatch (" + std::to_string(K.dimension()) + " vs " +
                      std::to_string(L.dimension()) + ")");
  const Mat dirs = default_direction_grid(K.dimension());
  for (const auto* body : {&K, &L}) {
    for (Eigen::Index k = 0; k < dirs.cols(); ++k) {
      const double h = body->support_homogeneous(dirs.col(k));
      if (h < -tol::geom) {
        throw DomainError(std::string("orlicz sum: ") + (body == &K ? "first" : "second") +
                          " body does not contain the origin (h = " + format_sig(h, 6) + " in direction " +
                          std::to_string(k) + " of the test grid)");
      }
    }
  }
  return OrliczSumBody(K, L, phi);
}

double orlicz_norm(const Vec& x, const OrliczFunction& phi) {
  const Vec a = x.cwiseAbs();
  const double mx = a.size() ? a.maxCoeff() : 0.0;
  if (mx == 0.0) return 0.0;
  const double sum = a.sum();
  if (sum == mx) return mx;
  return bisect_decreasing(
      [&](double lam) {
        double s = -1.0;
        for (Eigen::Index i = 0; i < a.size(); ++i) s += phi(a(i) / lam);
        return s;
      },
      mx, sum);
}

ConvexBody orlicz_ball(const OrliczFunction& phi, int n, int resolution) {
  if (n < 1) throw DomainError("orlicz ball dimension must be positive");
  const Mat dirs = direction_grid(n, resolution);
  Mat pts(n, dirs.cols());
  for (Eigen::Index k = 0; k < dirs.cols(); ++k) pts.col(k) = dirs.col(k) / orlicz_norm(dirs.col(k), phi);
  return ConvexBody::from_vertices(pts);
}

}  // namespace orad
