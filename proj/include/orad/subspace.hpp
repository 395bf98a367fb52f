#pragma once

#include "orad/common.hpp"

#include <vector>

namespace orad {

/// An i-dimensional linear subspace of R^n stored as an n x i column-orthonormal frame.
class Subspace {
 public:
  /// Throws DomainError unless frame^T frame = I within tol::ortho.
  explicit Subspace(Mat frame);

  /// Orthonormalizes the columns (Householder QR); they must be independent.
  static Subspace orthonormalize(const Mat& columns);
  /// span{e_a : a in axes}, 1-based axis indices.
  static Subspace coordinate(int n, const std::vector<int>& axes);
  static Subspace full(int n);

  int ambient_dimension() const { return static_cast<int>(frame_.rows()); }
  int dimension() const { return static_cast<int>(frame_.cols()); }
  const Mat& frame() const { return frame_; }

  /// Orthonormal basis of the orthogonal complement (n x (n - i), possibly empty).
  Mat complement_frame() const;
  Mat projector() const { return frame_ * frame_.transpose(); }

  Vec coordinates(const Vec& x) const { return frame_.transpose() * x; }
  Vec embed(const Vec& y) const { return frame_ * y; }

  /// Projector entries rounded to 6 decimals, row-major; a basis-free key for tie-breaking.
  std::vector<long long> rounded_key() const;

 private:
  Mat frame_;
};

}  // namespace orad
