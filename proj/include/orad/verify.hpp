#pragma once

#include "orad/body.hpp"
#include "orad/grassmann.hpp"
#include "orad/orlicz.hpp"
#include "orad/phi.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orad {

enum class Relation { le, ge, eq, lt, subset };
enum class Status { pass, fail, inconclusive };
std::string to_string(Relation r);
std::string to_string(Status s);

/// A measured quantity with a bracket on the true value.
struct Interval {
  double value = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  static Interval exact(double v) { return {v, v, v}; }
  Interval scaled(double c) const;  // c >= 0
  Interval operator+(const Interval& o) const { return {value + o.value, lo + o.lo, hi + o.hi}; }
};

struct VerificationResult {
  std::string claim_id;
  double lhs = 0.0;
  double rhs = 0.0;
  Relation relation = Relation::le;
  double slack = 0.0;
  double tolerance = 0.0;
  Status status = Status::fail;
  std::string inputs_digest;
  /// The bracket alone decides the relation (not just the point estimates).
  bool certified = false;
  double lhs_lo = 0.0, lhs_hi = 0.0, rhs_lo = 0.0, rhs_hi = 0.0;
};

/// Slack is measured on the point estimates: rhs - lhs for le/lt, lhs - rhs for ge/eq,
/// lhs itself (a worst containment slack) for subset. A violated relation is a fail
/// when the brackets confirm it and inconclusive otherwise.
VerificationResult evaluate_claim(std::string claim_id, const Interval& lhs, const Interval& rhs, Relation relation,
                                  double tolerance, std::string inputs_digest);

/// Fingerprint of the inputs of a claim.
std::string digest_inputs(const std::string& claim_id, const std::vector<const ConvexBody*>& bodies,
                          const std::vector<std::string>& extra, std::uint64_t seed);

Interval outer_interval(const RadiiReport& r);
Interval inner_interval(const RadiiReport& r);

struct TheoremCase {
  std::string label = "random";
  ForcedFrames sum_frames;  // forced into the search on K +_phi K'
  ForcedFrames left_frames;
  ForcedFrames right_frames;
  bool equality = false;
  double tolerance = 1e-6;
  std::uint64_t seed = 0;
};

/// c phi^{-1}(1/2) R_i(K +_phi K') >= R_i(K) + R_i(K'), c = 2 for i = 1 and 2 sqrt(2) otherwise.
VerificationResult check_outer_theorem(const ConvexBody& K, const ConvexBody& K2, const OrliczFunction& phi, int i,
                                       const SearchBudget& budget, const TheoremCase& c = {});
/// c phi^{-1}(1/2) r_i(K +_phi K') >= r_i(K) + r_i(K'), c = 2 for i = n and 2 sqrt(2) otherwise.
VerificationResult check_inner_theorem(const ConvexBody& K, const ConvexBody& K2, const OrliczFunction& phi, int i,
                                       const SearchBudget& budget, const TheoremCase& c = {});

enum class ReverseKind { outer, inner };
/// The axis-segment/cube pair showing no reverse inequality exists: both radii of the
/// summands vanish while the sum keeps radius >= 1 / (2 phi^{-1}(1/2)).
/// Returns the zero check on the right-hand side and the lower bound on the left.
std::vector<VerificationResult> check_no_reverse(ReverseKind kind, int n, int i, const OrliczFunction& phi,
                                                 const SearchBudget& budget);
/// R(K +_phi K') <= R(K) + R(K').
VerificationResult check_reverse_circumradius(const ConvexBody& K, const ConvexBody& K2, const OrliczFunction& phi,
                                              std::uint64_t seed = 0);

struct DifferenceCase {
  std::string label = "random";
  ForcedFrames frames;  // forced into every search (body and difference body)
  bool expect_upper_equality = false;  // R_i(K +_phi (-K)) = 2 R_i(K)
  bool expect_lower_equality = false;  // lower outer bound attained
  bool outer_only = false;             // skip the inner-radius bounds
  double tolerance = 1e-6;
  std::uint64_t seed = 0;
};

/// The four difference-body bounds:
///   sqrt2/(2 phi^{-1}(1/2)) sqrt((i+1)/i) R_i(K) <= R_i(D) <= 2 R_i(K),
///   r_i(K) / phi^{-1}(1/2) <= r_i(D) < 2 (i+1) r_i(K),   D = K +_phi (-K).
/// Equality cases add one result per expected equality.
std::vector<VerificationResult> check_difference_body(const ConvexBody& K, const OrliczFunction& phi, int i,
                                                      const SearchBudget& budget, const DifferenceCase& c = {});

struct InclusionOptions {
  std::optional<OrliczFunction> other_phi;  // for the monotonicity-in-phi checks
  int projection_frames = 20;
  int norm_points = 200;
  std::uint64_t seed = 0;
  std::optional<Mat> directions;  // default grid when absent
};

/// Support-grid inclusions of the Orlicz sum (sandwich, hull bounds, monotonicity in
/// phi), norm monotonicity, projection commutation and the self-sum scaling.
std::vector<VerificationResult> check_inclusions(const ConvexBody& K, const ConvexBody& L, const OrliczFunction& phi,
                                                 const InclusionOptions& opts = {});

/// Boundary of [-e_a, e_a] +_phi [-e_b, e_b] against the ball of radius sqrt2 / (2 phi^{-1}(1/2)).
VerificationResult check_segment_sum(const OrliczFunction& phi, int n = 2, int resolution = 720);

/// Class membership and the constants of phi.
std::vector<VerificationResult> check_phi(const OrliczFunction& phi, std::uint64_t seed = 0);

struct SuiteConfig {
  std::vector<std::string> claims;  // families; empty means all
  std::vector<OrliczFunction> phis = default_phi_set();
  std::vector<int> dims = {2, 3, 4};
  std::uint64_t seed = 1;
  SearchBudget budget = suite_budget();
  std::optional<double> tolerance_override;

  static SearchBudget suite_budget();
  static const std::vector<std::string>& families();
};

struct SuiteReport {
  std::vector<VerificationResult> results;  // sorted by claim_id
  int passed = 0, failed = 0, inconclusive = 0;
  bool ok() const { return failed == 0 && inconclusive == 0; }
  std::string text() const;  // table followed by a key=value section
};

SuiteReport run_suite(const SuiteConfig& config);

/// A full-dimensional random polytope with its vertex centroid at the origin.
ConvexBody random_polytope(int n, int vertices, std::uint64_t seed);
/// K_n expressed in an orthonormal basis of the hyperplane sum x = 0 (n-dimensional).
ConvexBody intrinsic_simplex(int n);

}  // namespace orad
