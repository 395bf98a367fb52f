#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace orad {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Numerical tolerances shared by every module.
namespace tol {
inline constexpr double root = 1e-12;      // scalar root finding (relative)
inline constexpr double geom = 1e-9;       // representation cross-checks
inline constexpr double ortho = 1e-10;     // orthonormal frames
inline constexpr double validate = 1e-9;   // midpoint convexity slack
inline constexpr double lp = 1e-9;         // LP feasibility
}  // namespace tol

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input could not be parsed (bad file, bad descriptor).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A mathematical precondition does not hold (dimension mismatch, p < 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotCompactError : public DomainError {
 public:
  NotCompactError() : DomainError("body not compact") {}
};

class EmptyBodyError : public DomainError {
 public:
  EmptyBodyError() : DomainError("body is empty") {}
};

// Shortest decimal that round-trips to the same double (at most 17 digits).
std::string format_double(double x);

// Fixed number of significant digits, for human-facing reports.
std::string format_sig(double x, int digits);

// FNV-1a, used for reproducibility fingerprints.
std::uint64_t fnv1a(const void* data, std::size_t size, std::uint64_t h = 14695981039346656037ull);
std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 14695981039346656037ull);

}  // namespace orad
