#pragma once

#include "orad/common.hpp"

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace orad {

/// Constants derived from an Orlicz function that recur in every bound.
struct PhiConstants {
  double half_inverse = 0.5;          ///< phi^{-1}(1/2), always in [1/2, 1)
  double slab_radius = 1.4142135623730951;  ///< sqrt(2) / (2 * half_inverse)
};

/// Outcome of checking a candidate evaluator for membership in the Orlicz class
/// (convex, strictly increasing, phi(0) = 0, phi(1) = 1) on a finite grid.
struct ValidationReport {
  bool endpoints_ok = true;
  bool monotone_ok = true;
  bool convex_ok = true;
  double endpoint_violation = 0.0;
  double monotone_violation = 0.0;
  double convex_violation = 0.0;

  bool passed() const { return endpoints_ok && monotone_ok && convex_ok; }
  std::string summary() const;
};

inline constexpr int kDefaultValidationGrid = 1024;
inline constexpr double kDefaultValidationTmax = 16.0;

ValidationReport validate(const std::function<double(double)>& phi,
                          int grid_size = kDefaultValidationGrid,
                          double t_max = kDefaultValidationTmax);

/// A validated member of the Orlicz class. Immutable and cheap to copy; safe to
/// evaluate concurrently.
class OrliczFunction {
 public:
  using Eval = std::function<double(double)>;

  /// Validates `phi` and throws DomainError if it is not in the class.
  /// `derivative` is optional; a central difference is used when absent.
  static OrliczFunction make(std::string descriptor, Eval phi, Eval derivative = {},
                             int grid_size = kDefaultValidationGrid,
                             double t_max = kDefaultValidationTmax);

  double operator()(double t) const { return impl_->phi(t); }
  double derivative(double t) const;
  /// Bisection on [0, 1]; `y` must lie in [0, 1].
  double inverse(double y) const;

  const std::string& descriptor() const { return impl_->descriptor; }
  const PhiConstants& constants() const { return impl_->constants; }
  double half_inverse() const { return impl_->constants.half_inverse; }

  /// True when this <= other on a grid over [0, 1].
  bool pointwise_le(const OrliczFunction& other, int grid_size = kDefaultValidationGrid) const;

 private:
  struct Impl {
    std::string descriptor;
    Eval phi;
    Eval dphi;
    PhiConstants constants;
  };
  explicit OrliczFunction(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// phi(t) = t^p, p >= 1.
OrliczFunction make_power_phi(double p);
/// phi(t) = c1 t + c2 t^2 with c1, c2 >= 0 and c1 + c2 = 1.
OrliczFunction make_poly_phi(double c1, double c2);

double phi_inverse(const OrliczFunction& phi, double y);

/// Parses `power:p=<float>` or `poly:c1=<float>,c2=<float>` (or any registered
/// family). Throws ParseError on malformed text, DomainError on invalid values.
OrliczFunction parse_phi(std::string_view descriptor);

using PhiFactory = std::function<OrliczFunction(const std::vector<std::pair<std::string, double>>&)>;
/// Extension point for further families: `name:key=value,...`.
void register_phi_family(const std::string& name, PhiFactory factory);

/// p in {1, 1.5, 2, 3, 10} plus (t + t^2) / 2.
std::vector<OrliczFunction> default_phi_set();

}  // namespace orad
