#pragma once

#include "orad/grassmann.hpp"
#include "orad/phi.hpp"
#include "orad/verify.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orad {

enum ExitCode : int { exit_ok = 0, exit_verify_failed = 1, exit_usage = 2, exit_parse = 3, exit_domain = 4 };

/// Everything a run depends on. The text form is `key = value` per line.
struct RunConfig {
  std::uint64_t seed = 1;
  int sum_directions = 0;       // 0: per-dimension default grid
  int boundary_resolution = 0;  // 0: 720 in 2-D, 2000 in 3-D
  SearchBudget budget;                                   // radii
  SearchBudget verify_budget = SuiteConfig::suite_budget();  // verify
  std::optional<double> tolerance;
  std::vector<std::string> claims;
  std::vector<std::string> phis;  // descriptors; empty means the default set
  std::vector<int> dims = {2, 3, 4};
  std::string out;
  std::string report;

  /// Throws DomainError when a budget field or tolerance is not positive.
  void validate() const;
  std::string to_text() const;
  static RunConfig from_text(const std::string& text);
  bool operator==(const RunConfig&) const = default;
};

int default_boundary_resolution(int dim);

/// Each writes to `out` (stdout when empty) and returns an exit code.
int cmd_sum(const std::string& body_a, const std::string& body_b, const std::string& phi, const RunConfig& cfg);
int cmd_radii(const std::string& body, const std::vector<int>& indices, bool successive, const RunConfig& cfg);
int cmd_verify(const RunConfig& cfg);
/// `body_b` empty: boundary of `body_a` itself; otherwise of body_a +_phi body_b.
int cmd_boundary(const std::string& body_a, const std::string& body_b, const std::string& phi, const RunConfig& cfg);

/// Text forms the commands write.
std::string support_table_text(const Mat& directions, const Vec& values);
std::string radii_rows_text(const std::vector<RadiiReport>& outer, const std::vector<RadiiReport>& inner);
std::string boundary_text(const Mat& points, bool closed);

}  // namespace orad
