#include "orad/directions.hpp"

#include <boost/math/distributions/normal.hpp>

#include <cmath>
#include <numbers>

namespace orad {

Mat circle_directions(int count) {
  Mat out(2, count);
  for (int k = 0; k < count; ++k) {
    const double a = 2.0 * std::numbers::pi * k / count;
    out(0, k) = std::cos(a);
    out(1, k) = std::sin(a);
  }
  return out;
}

Mat fibonacci_sphere(int count) {
  Mat out(3, count);
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int k = 0; k < count; ++k) {
    const double z = 1.0 - (2.0 * k + 1.0) / count;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double a = golden * k;
    out(0, k) = r * std::cos(a);
    out(1, k) = r * std::sin(a);
    out(2, k) = z;
  }
  return out;
}

namespace {

double radical_inverse(int base, long index) {
  double inv = 1.0 / base, f = inv, r = 0.0;
  while (index > 0) {
    r += f * static_cast<double>(index % base);
    index /= base;
    f *= inv;
  }
  return r;
}

constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};

}  // namespace

Mat halton_sphere(int dim, int count) {
  if (dim > static_cast<int>(std::size(kPrimes))) throw DomainError("halton_sphere: dimension too large");
  const boost::math::normal_distribution<double> normal;
  Mat out(dim, count);
  for (int k = 0; k < count; ++k) {
    for (int j = 0; j < dim; ++j) {
      const double q = radical_inverse(kPrimes[j], k + 1);
      out(j, k) = boost::math::quantile(normal, std::clamp(q, 1e-12, 1.0 - 1e-12));
    }
    const double nrm = out.col(k).norm();
    if (nrm > 0) out.col(k) /= nrm;
  }
  return out;
}

Mat direction_grid(int dim, int count) {
  if (dim < 1) throw DomainError("direction grid needs dim >= 1");
  if (dim == 1) {
    Mat out(1, 2);
    out << 1.0, -1.0;
    return out;
  }
  if (count < 2 * dim) count = 2 * dim;
  if (dim == 2) return circle_directions(count);
  if (dim == 3) return fibonacci_sphere(count);
  // Prepend the coordinate directions so axis-aligned features are always probed.
  Mat h = halton_sphere(dim, count - 2 * dim);
  Mat out(dim, count);
  out.leftCols(dim) = Mat::Identity(dim, dim);
  out.middleCols(dim, dim) = -Mat::Identity(dim, dim);
  out.rightCols(count - 2 * dim) = h;
  return out;
}

int default_grid_size(int dim) {
  if (dim <= 1) return 2;
  if (dim == 2) return 256;
  if (dim == 3) return 1024;
  return 4 * dim * dim;
}

double grid_spacing(int dim, int count) {
  if (dim <= 1) return 0.0;
  if (dim == 2) return std::numbers::pi / count;
  // Area per point on S^{dim-1}, taken as a (dim-1)-ball of that volume.
  const double area = 2.0 * std::pow(std::numbers::pi, dim / 2.0) / std::tgamma(dim / 2.0);
  const double per = area / count;
  const double unit_ball = std::pow(std::numbers::pi, (dim - 1) / 2.0) / std::tgamma((dim - 1) / 2.0 + 1.0);
  return std::pow(per / unit_ball, 1.0 / (dim - 1));
}

}  // namespace orad
