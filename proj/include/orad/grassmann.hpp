#pragma once

#include "orad/body.hpp"
#include "orad/orlicz.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace orad {

struct SearchBudget {
  int starts = 64;            // Haar-random starting frames
  int max_iters = 200;        // refinement sweeps per start
  double step_tol = 1e-7;     // stop once the rotation step is below this
  int angles = 16;            // Givens angles tried per frame/complement pair
  int refine_top = 16;        // how many of the best starts get refined
  std::uint64_t seed = 1;
  bool coordinate_starts = true;  // all coordinate i-subsets when n <= 8

  bool operator==(const SearchBudget&) const = default;
};

enum class BoundKind { upper, lower, two_sided };
std::string to_string(BoundKind kind);

struct TracePoint {
  int iteration = 0;
  double value = 0.0;
};

struct RadiiReport {
  int i = 0;
  double value = 0.0;
  BoundKind bound_kind = BoundKind::upper;
  Subspace subspace = Subspace::full(1);
  int samples_used = 0;
  std::vector<TracePoint> trace;  // incumbent after each improvement
  // Certified bracket on the true radius.
  double lower = 0.0;
  double upper = 0.0;
};

/// Haar-distributed frame: orthonormalized i-column Gaussian matrix, deterministic per seed.
Subspace sample_subspace(int n, int i, std::uint64_t seed);

struct ForcedFrames {
  std::vector<Subspace> frames;
  /// The first frame is known to be optimal; its value makes the report two-sided.
  bool first_is_optimal = false;
};

/// R_i(K) = min over i-subspaces L of R(K|L).
RadiiReport successive_outer_radius(const ConvexBody& body, int i, const SearchBudget& budget = {},
                                    const ForcedFrames& forced = {});
/// r_i(K) = max over i-subspaces L of the largest ball c + rho B_{i,L} inside K.
RadiiReport successive_inner_radius(const ConvexBody& body, int i, const SearchBudget& budget = {},
                                    const ForcedFrames& forced = {});

struct RadiiSweep {
  std::vector<RadiiReport> outer;  // index i - 1
  std::vector<RadiiReport> inner;
};

/// All i = 1..n, chained from i = n downwards so that subframes of the best
/// (i+1)-frame are starts for i; this makes the reported sequences monotone.
RadiiSweep successive_radii(const ConvexBody& body, const SearchBudget& budget = {});

}  // namespace orad
