#include "orad/hull.hpp"
#include "orad/lp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace orad {

Mat select_columns(const Mat& points, const std::vector<int>& idx) {
  Mat out(points.rows(), static_cast<Eigen::Index>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k) out.col(static_cast<Eigen::Index>(k)) = points.col(idx[k]);
  return out;
}

AffineHull affine_hull(const Mat& points, double tol) {
  const int d = static_cast<int>(points.rows());
  const Eigen::Index m = points.cols();
  if (m == 0) throw DomainError("affine hull of an empty point set");
  AffineHull ah;
  ah.origin = points.rowwise().mean();
  const Mat centered = points.colwise() - ah.origin;
  const double scale = centered.colwise().norm().maxCoeff();
  if (scale == 0.0) {
    ah.basis = Mat(d, 0);
    ah.normals = Mat::Identity(d, d);
    return ah;
  }
  Eigen::SelfAdjointEigenSolver<Mat> eig(centered * centered.transpose());
  // Eigen sorts ascending; walk from the largest.
  std::vector<int> keep, drop;
  for (int k = d - 1; k >= 0; --k) {
    const Vec v = eig.eigenvectors().col(k);
    const double extent = (v.transpose() * centered).cwiseAbs().maxCoeff();
    (extent > tol * scale ? keep : drop).push_back(k);
  }
  ah.basis = Mat(d, static_cast<Eigen::Index>(keep.size()));
  for (std::size_t j = 0; j < keep.size(); ++j) ah.basis.col(j) = eig.eigenvectors().col(keep[j]);
  ah.normals = Mat(d, static_cast<Eigen::Index>(drop.size()));
  for (std::size_t j = 0; j < drop.size(); ++j) ah.normals.col(j) = eig.eigenvectors().col(drop[j]);
  return ah;
}

namespace {

struct LocalHull {
  std::vector<int> vertices;
  std::vector<Halfspace> facets;  // in local coordinates
};

LocalHull hull_1d(const Mat& y) {
  Eigen::Index lo = 0, hi = 0;
  y.row(0).minCoeff(&lo);
  y.row(0).maxCoeff(&hi);
  LocalHull h;
  h.vertices = {static_cast<int>(lo), static_cast<int>(hi)};
  h.facets.push_back({Vec::Constant(1, 1.0), y(0, hi)});
  h.facets.push_back({Vec::Constant(1, -1.0), -y(0, lo)});
  return h;
}

LocalHull hull_2d(const Mat& y, double eps_area) {
  const int m = static_cast<int>(y.cols());
  std::vector<int> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return y(0, a) < y(0, b) || (y(0, a) == y(0, b) && y(1, a) < y(1, b));
  });
  auto cross = [&](int o, int a, int b) {
    return (y(0, a) - y(0, o)) * (y(1, b) - y(1, o)) - (y(1, a) - y(1, o)) * (y(0, b) - y(0, o));
  };
  std::vector<int> chain(2 * m);
  int k = 0;
  for (int i = 0; i < m; ++i) {
    while (k >= 2 && cross(chain[k - 2], chain[k - 1], idx[i]) <= eps_area) --k;
    chain[k++] = idx[i];
  }
  for (int i = m - 2, t = k + 1; i >= 0; --i) {
    while (k >= t && cross(chain[k - 2], chain[k - 1], idx[i]) <= eps_area) --k;
    chain[k++] = idx[i];
  }
  chain.resize(std::max(k - 1, 1));
  LocalHull h;
  h.vertices = chain;
  const int nv = static_cast<int>(chain.size());
  for (int i = 0; i < nv; ++i) {
    const Vec a = y.col(chain[i]);
    const Vec b = y.col(chain[(i + 1) % nv]);
    Vec n(2);
    n << (b(1) - a(1)), -(b(0) - a(0));  // counter-clockwise chain: outward normal on the right
    const double len = n.norm();
    if (len == 0.0) continue;
    n /= len;
    h.facets.push_back({n, n.dot(a)});
  }
  return h;
}

struct Facet {
  std::vector<int> verts;
  Vec normal;
  double offset = 0.0;
  bool alive = true;
};

Facet make_facet(const Mat& y, std::vector<int> verts, const Vec& interior) {
  const int r = static_cast<int>(y.rows());
  Mat diff(r, r - 1);
  for (int k = 1; k < r; ++k) diff.col(k - 1) = y.col(verts[k]) - y.col(verts[0]);
  Eigen::HouseholderQR<Mat> qr(diff);
  Mat q = qr.householderQ();
  Vec n = q.col(r - 1);
  double off = n.dot(y.col(verts[0]));
  if (n.dot(interior) > off) {
    n = -n;
    off = -off;
  }
  Facet f;
  f.verts = std::move(verts);
  f.normal = std::move(n);
  f.offset = off;
  return f;
}

// Beneath-beyond with simplicial facets; requires full-dimensional input in r >= 3.
LocalHull hull_nd(const Mat& y, double eps) {
  const int r = static_cast<int>(y.rows());
  const int m = static_cast<int>(y.cols());

  // Initial simplex: greedily add the point farthest from the current affine span.
  std::vector<int> simplex;
  {
    Eigen::Index far = 0;
    (y.colwise() - y.rowwise().mean()).colwise().squaredNorm().maxCoeff(&far);
    simplex.push_back(static_cast<int>(far));
    Mat basis(r, 0);
    while (static_cast<int>(simplex.size()) < r + 1) {
      const Vec base = y.col(simplex[0]);
      double best = -1.0;
      int arg = -1;
      for (int j = 0; j < m; ++j) {
        Vec v = y.col(j) - base;
        if (basis.cols() > 0) v -= basis * (basis.transpose() * v);
        const double dn = v.norm();
        if (dn > best) {
          best = dn;
          arg = j;
        }
      }
      if (best <= eps) throw DomainError("convex hull: input is not full-dimensional");
      Vec v = y.col(arg) - base;
      if (basis.cols() > 0) v -= basis * (basis.transpose() * v);
      basis.conservativeResize(r, basis.cols() + 1);
      basis.col(basis.cols() - 1) = v.normalized();
      simplex.push_back(arg);
    }
  }
  Vec interior = Vec::Zero(r);
  for (int s : simplex) interior += y.col(s);
  interior /= (r + 1);

  std::vector<Facet> facets;
  for (int skip = 0; skip <= r; ++skip) {
    std::vector<int> verts;
    for (int k = 0; k <= r; ++k)
      if (k != skip) verts.push_back(simplex[k]);
    facets.push_back(make_facet(y, verts, interior));
  }

  std::vector<char> used(m, 0);
  for (int s : simplex) used[s] = 1;

  std::vector<int> visible;
  std::map<std::vector<int>, int> ridge_count;
  for (int p = 0; p < m; ++p) {
    if (used[p]) continue;
    const Vec pt = y.col(p);
    visible.clear();
    for (int f = 0; f < static_cast<int>(facets.size()); ++f) {
      if (!facets[f].alive) continue;
      if (facets[f].normal.dot(pt) - facets[f].offset > eps) visible.push_back(f);
    }
    if (visible.empty()) continue;
    ridge_count.clear();
    for (int f : visible) {
      const auto& vs = facets[f].verts;
      for (int skip = 0; skip < r; ++skip) {
        std::vector<int> ridge;
        ridge.reserve(r - 1);
        for (int k = 0; k < r; ++k)
          if (k != skip) ridge.push_back(vs[k]);
        std::sort(ridge.begin(), ridge.end());
        ++ridge_count[ridge];
      }
    }
    for (int f : visible) facets[f].alive = false;
    for (const auto& [ridge, count] : ridge_count) {
      if (count != 1) continue;
      std::vector<int> verts = ridge;
      verts.push_back(p);
      facets.push_back(make_facet(y, std::move(verts), interior));
    }
    used[p] = 1;
    if (facets.size() > 4096 && facets.size() > 4 * static_cast<std::size_t>(std::count_if(facets.begin(), facets.end(), [](const Facet& f) { return f.alive; }))) {
      std::erase_if(facets, [](const Facet& f) { return !f.alive; });
    }
  }

  LocalHull h;
  std::vector<char> is_vertex(m, 0);
  for (const auto& f : facets) {
    if (!f.alive) continue;
    h.facets.push_back({f.normal, f.offset});
    for (int v : f.verts) is_vertex[v] = 1;
  }
  for (int j = 0; j < m; ++j)
    if (is_vertex[j]) h.vertices.push_back(j);
  return h;
}

std::vector<Halfspace> merge_facets(std::vector<Halfspace> facets, double eps) {
  // Coplanar simplicial facets share a rounded (normal, offset) key; rare misses
  // across rounding boundaries only leave a redundant duplicate.
  std::map<std::vector<long long>, int> seen;
  std::vector<Halfspace> out;
  for (auto& f : facets) {
    std::vector<long long> key;
    key.reserve(f.normal.size() + 1);
    for (Eigen::Index k = 0; k < f.normal.size(); ++k) key.push_back(std::llround(f.normal(k) * 1e7));
    key.push_back(std::llround(f.offset / std::max(eps * 100.0, 1e-300)));
    if (seen.emplace(std::move(key), static_cast<int>(out.size())).second) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

HullResult convex_hull(const Mat& points, double tol) {
  const int d = static_cast<int>(points.rows());
  const int m = static_cast<int>(points.cols());
  if (m == 0) throw DomainError("convex hull of an empty point set");
  const AffineHull ah = affine_hull(points, tol);
  const int r = ah.dimension();
  const double scale = std::max((points.colwise() - ah.origin).colwise().norm().maxCoeff(), 1e-300);
  const double eps = tol * scale;

  HullResult res;
  res.affine_dimension = r;
  LocalHull local;
  Mat y;
  if (r == 0) {
    local.vertices = {0};
  } else {
    y = ah.basis.transpose() * (points.colwise() - ah.origin);
    if (r == 1) local = hull_1d(y);
    else if (r == 2) local = hull_2d(y, eps * scale);
    else local = hull_nd(y, eps);
  }

  std::vector<Halfspace> lifted;
  for (const auto& f : local.facets) {
    Vec n = ah.basis * f.normal;
    lifted.push_back({n, f.offset + n.dot(ah.origin)});
  }
  lifted = merge_facets(std::move(lifted), eps);

  // Drop points that sit inside a face rather than at a vertex.
  if (r >= 3) {
    std::vector<int> verts;
    for (int v : local.vertices) {
      Mat active(r, 0);
      for (const auto& f : local.facets) {
        if (std::abs(f.normal.dot(y.col(v)) - f.offset) <= eps) {
          active.conservativeResize(r, active.cols() + 1);
          active.col(active.cols() - 1) = f.normal;
        }
      }
      Eigen::FullPivLU<Mat> lu(active);
      lu.setThreshold(1e-9);
      if (lu.rank() == r) verts.push_back(v);
    }
    local.vertices = std::move(verts);
  }
  std::sort(local.vertices.begin(), local.vertices.end());
  local.vertices.erase(std::unique(local.vertices.begin(), local.vertices.end()), local.vertices.end());
  res.vertices = std::move(local.vertices);

  for (Eigen::Index k = 0; k < ah.normals.cols(); ++k) {
    const Vec n = ah.normals.col(k);
    const double off = n.dot(ah.origin);
    res.halfspaces.push_back({n, off});
    res.halfspaces.push_back({-n, -off});
  }
  for (auto& h : lifted) res.halfspaces.push_back(std::move(h));
  (void)d;
  return res;
}

}  // namespace orad

namespace orad {

namespace {

Mat dedupe_columns(const Mat& pts, double eps) {
  std::vector<int> keep;
  for (Eigen::Index j = 0; j < pts.cols(); ++j) {
    bool dup = false;
    for (int k : keep)
      if ((pts.col(j) - pts.col(k)).norm() <= eps) {
        dup = true;
        break;
      }
    if (!dup) keep.push_back(static_cast<int>(j));
  }
  return select_columns(pts, keep);
}

Mat enumerate_tight_subsets(const Mat& A, const Vec& b, double eps) {
  const int m = static_cast<int>(A.rows());
  const int d = static_cast<int>(A.cols());
  double combos = 1.0;
  for (int k = 0; k < d; ++k) combos = combos * (m - k) / (k + 1);
  if (combos > 2e6) throw DomainError("degenerate H-representation too large to enumerate");
  std::vector<int> pick(d);
  std::iota(pick.begin(), pick.end(), 0);
  std::vector<Vec> found;
  while (true) {
    Mat M(d, d);
    Vec rhs(d);
    for (int k = 0; k < d; ++k) {
      M.row(k) = A.row(pick[k]);
      rhs(k) = b(pick[k]);
    }
    Eigen::FullPivLU<Mat> lu(M);
    if (lu.rank() == d) {
      const Vec x = lu.solve(rhs);
      if (((A * x) - b).maxCoeff() <= eps) found.push_back(x);
    }
    int k = d - 1;
    while (k >= 0 && pick[k] == m - d + k) --k;
    if (k < 0) break;
    ++pick[k];
    for (int j = k + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  Mat pts(d, static_cast<Eigen::Index>(found.size()));
  for (std::size_t j = 0; j < found.size(); ++j) pts.col(static_cast<Eigen::Index>(j)) = found[j];
  return pts;
}

}  // namespace

Mat vertices_from_halfspaces(const std::vector<Halfspace>& halfspaces, int dim, double tol) {
  const Eigen::Index m = static_cast<Eigen::Index>(halfspaces.size());
  Mat A(m, dim);
  Vec b(m);
  for (Eigen::Index j = 0; j < m; ++j) {
    const Halfspace& h = halfspaces[static_cast<std::size_t>(j)];
    if (h.normal.size() != dim) throw DomainError("halfspace normal has wrong dimension");
    const double nrm = h.normal.norm();
    if (nrm == 0.0) {
      if (h.offset < 0.0) throw EmptyBodyError();
      A.row(j).setZero();
      b(j) = h.offset;
      continue;
    }
    A.row(j) = h.normal.transpose() / nrm;
    b(j) = h.offset / nrm;
  }

  for (int k = 0; k < dim; ++k)
    for (double s : {1.0, -1.0}) {
      Vec c = Vec::Zero(dim);
      c(k) = s;
      const LpResult r = lp_maximize(c, A, b);
      if (r.status == LpStatus::infeasible) throw EmptyBodyError();
      if (r.status == LpStatus::unbounded) throw NotCompactError();
    }

  // Chebyshev center: maximize rho subject to A c + rho <= b, rho >= 0.
  Mat Ac(m + 1, dim + 1);
  Ac.topLeftCorner(m, dim) = A;
  Ac.topRightCorner(m, 1).setOnes();
  Ac.bottomRows(1).setZero();
  Ac(m, dim) = -1.0;
  Vec bc(m + 1);
  bc.head(m) = b;
  bc(m) = 0.0;
  Vec obj = Vec::Zero(dim + 1);
  obj(dim) = 1.0;
  const LpResult cheb = lp_maximize(obj, Ac, bc);
  if (cheb.status != LpStatus::optimal) throw EmptyBodyError();
  const Vec center = cheb.x.head(dim);
  const double rho = cheb.x(dim);
  const double scale = std::max(1.0, b.cwiseAbs().maxCoeff());

  if (rho <= 1e3 * tol * scale) return dedupe_columns(enumerate_tight_subsets(A, b, tol * scale), tol * scale);

  Mat polar(dim, m);
  int used = 0;
  for (Eigen::Index j = 0; j < m; ++j) {
    if (A.row(j).norm() == 0.0) continue;
    polar.col(used++) = A.row(j).transpose() / (b(j) - A.row(j).dot(center));
  }
  polar.conservativeResize(dim, used);
  const HullResult ph = convex_hull(polar, tol);
  if (ph.affine_dimension < dim) throw NotCompactError();
  Mat verts(dim, static_cast<Eigen::Index>(ph.halfspaces.size()));
  int nv = 0;
  for (const Halfspace& f : ph.halfspaces) {
    if (f.offset <= tol) throw NotCompactError();
    verts.col(nv++) = center + f.normal / f.offset;
  }
  verts.conservativeResize(dim, nv);
  return dedupe_columns(verts, 1e-9 * scale);
}

}  // namespace orad
