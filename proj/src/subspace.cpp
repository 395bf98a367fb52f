#include "orad/subspace.hpp"

#include <cmath>

namespace orad {

Subspace::Subspace(Mat frame) : frame_(std::move(frame)) {
  if (frame_.cols() < 1 || frame_.cols() > frame_.rows()) throw DomainError("subspace dimension out of range");
  const Mat gram = frame_.transpose() * frame_;
  const double dev = (gram - Mat::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
  if (!(dev <= tol::ortho)) throw DomainError("subspace frame is not orthonormal");
}

Subspace Subspace::orthonormalize(const Mat& columns) {
  const Eigen::Index n = columns.rows();
  const Eigen::Index i = columns.cols();
  if (i < 1 || i > n) throw DomainError("subspace dimension out of range");
  Eigen::ColPivHouseholderQR<Mat> qr(columns);
  qr.setThreshold(1e-12);
  if (qr.rank() < i) throw DomainError("subspace columns are linearly dependent");
  Eigen::HouseholderQR<Mat> hqr(columns);
  Mat q = hqr.householderQ() * Mat::Identity(n, i);
  // Fix signs so that R has a positive diagonal; keeps the map from Gaussians to frames Haar.
  const Mat r = hqr.matrixQR().topLeftCorner(i, i);
  for (Eigen::Index k = 0; k < i; ++k)
    if (r(k, k) < 0) q.col(k) = -q.col(k);
  return Subspace(std::move(q));
}

Subspace Subspace::coordinate(int n, const std::vector<int>& axes) {
  Mat f = Mat::Zero(n, static_cast<Eigen::Index>(axes.size()));
  std::vector<char> used(n + 1, 0);
  for (std::size_t k = 0; k < axes.size(); ++k) {
    const int a = axes[k];
    if (a < 1 || a > n || used[a]) throw DomainError("axis indices must be distinct and within 1..n");
    used[a] = 1;
    f(a - 1, static_cast<Eigen::Index>(k)) = 1.0;
  }
  return Subspace(std::move(f));
}

Subspace Subspace::full(int n) { return Subspace(Mat::Identity(n, n)); }

Mat Subspace::complement_frame() const {
  const Eigen::Index n = frame_.rows();
  const Eigen::Index i = frame_.cols();
  Eigen::HouseholderQR<Mat> qr(frame_);
  const Mat q = qr.householderQ();
  return q.rightCols(n - i);
}

std::vector<long long> Subspace::rounded_key() const {
  const Mat p = projector();
  std::vector<long long> key;
  key.reserve(static_cast<std::size_t>(p.size()));
  for (Eigen::Index r = 0; r < p.rows(); ++r)
    for (Eigen::Index c = 0; c < p.cols(); ++c) key.push_back(std::llround(p(r, c) * 1e6));
  return key;
}

}  // namespace orad
