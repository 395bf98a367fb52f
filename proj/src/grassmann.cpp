#include "orad/grassmann.hpp"

#include "orad/directions.hpp"
#include "orad/radii.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

namespace orad {

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::upper: return "upper";
    case BoundKind::lower: return "lower";
    case BoundKind::two_sided: return "two_sided";
  }
  return "?";
}

namespace {

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a * 0x9e3779b97f4a7c15ull + b + 0x632be59bd9b4e019ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Mat gaussian(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  Mat g(rows, cols);
  for (Eigen::Index c = 0; c < g.cols(); ++c)
    for (Eigen::Index r = 0; r < g.rows(); ++r) g(r, c) = nd(rng);
  return g;
}

Mat random_orthogonal(int k, std::mt19937_64& rng) {
  if (k <= 1) return Mat::Identity(k, k);
  return Subspace::orthonormalize(gaussian(k, k, rng)).frame();
}

// Minimization objective over frames (inner radii are negated).
using Objective = std::function<double(const Mat&)>;

struct Candidate {
  double value = 0.0;
  Mat frame;
  std::vector<long long> key;
};

bool ranks_before(const Candidate& a, const Candidate& b) {
  const double tie = 1e-12 * std::max(1.0, std::max(std::abs(a.value), std::abs(b.value)));
  if (a.value < b.value - tie) return true;
  if (b.value < a.value - tie) return false;
  return a.key < b.key;
}

Candidate make_candidate(double value, const Mat& frame) {
  Candidate c;
  c.frame = Subspace::orthonormalize(frame).frame();
  c.value = value;
  c.key = Subspace(c.frame).rounded_key();
  return c;
}

struct SearchResult {
  std::vector<Candidate> ranked;  // best first, distinct subspaces
  std::vector<TracePoint> trace;  // in objective sign (minimization)
  int samples = 0;
};

void coordinate_frames(int n, int i, std::vector<Mat>& out) {
  std::vector<int> pick(i);
  for (int k = 0; k < i; ++k) pick[k] = k;
  while (true) {
    Mat f = Mat::Zero(n, i);
    for (int k = 0; k < i; ++k) f(pick[k], k) = 1.0;
    out.push_back(f);
    int k = i - 1;
    while (k >= 0 && pick[k] == n - i + k) --k;
    if (k < 0) break;
    ++pick[k];
    for (int j = k + 1; j < i; ++j) pick[j] = pick[j - 1] + 1;
  }
}

SearchResult search(int n, int i, const Objective& f, const SearchBudget& budget, const std::vector<Mat>& forced) {
  SearchResult res;
  std::vector<Mat> starts = forced;
  if (budget.coordinate_starts && n <= 8) coordinate_frames(n, i, starts);
  for (int s = 0; s < budget.starts; ++s) starts.push_back(sample_subspace(n, i, mix(budget.seed, static_cast<std::uint64_t>(s))).frame());

  std::vector<Candidate> pool;
  for (const Mat& F : starts) {
    pool.push_back(make_candidate(f(F), F));
    ++res.samples;
  }
  std::vector<Candidate> initial = pool;
  std::stable_sort(initial.begin(), initial.end(), ranks_before);
  double incumbent = initial.front().value;
  res.trace.push_back({0, incumbent});

  int sweep = 0;
  const int half = std::max(1, budget.angles / 2);
  const int refine = std::min<int>(static_cast<int>(initial.size()), std::max(0, budget.refine_top));
  if (i < n) {
    for (int s = 0; s < refine; ++s) {
      std::mt19937_64 rng(mix(budget.seed, 0x100000ull + static_cast<std::uint64_t>(s)));
      Mat F = initial[static_cast<std::size_t>(s)].frame;
      Mat C = Subspace(F).complement_frame();
      double cur = initial[static_cast<std::size_t>(s)].value;
      double step = std::numbers::pi / 4;
      for (int it = 0; it < budget.max_iters && step >= budget.step_tol; ++it) {
        ++sweep;
        bool improved = false;
        for (int a = 0; a < i; ++a)
          for (int b = 0; b < n - i; ++b) {
            double best_val = cur;
            double best_theta = 0.0;
            for (int k = -half; k <= half; ++k) {
              if (k == 0) continue;
              const double th = step * k / half;
              Mat G = F;
              G.col(a) = std::cos(th) * F.col(a) + std::sin(th) * C.col(b);
              const double v = f(G);
              ++res.samples;
              if (v < best_val - 1e-15 * std::max(1.0, std::abs(best_val))) {
                best_val = v;
                best_theta = th;
              }
            }
            if (best_theta != 0.0) {
              const Vec fa = F.col(a), cb = C.col(b);
              F.col(a) = std::cos(best_theta) * fa + std::sin(best_theta) * cb;
              C.col(b) = -std::sin(best_theta) * fa + std::cos(best_theta) * cb;
              cur = best_val;
              improved = true;
            }
          }
        if (improved) {
          if (cur < incumbent) {
            incumbent = cur;
            res.trace.push_back({sweep, incumbent});
          }
          F = F * random_orthogonal(i, rng);
          C = C * random_orthogonal(n - i, rng);
        } else {
          step *= 0.5;
        }
      }
      pool.push_back(make_candidate(cur, F));
    }
  }

  std::stable_sort(pool.begin(), pool.end(), ranks_before);
  for (Candidate& c : pool) {
    const bool dup = std::any_of(res.ranked.begin(), res.ranked.end(), [&](const Candidate& r) { return r.key == c.key; });
    if (!dup) res.ranked.push_back(std::move(c));
  }
  return res;
}

void check_index(const ConvexBody& body, int i) {
  if (i < 1 || i > body.dimension()) throw DomainError("successive radius index must satisfy 1 <= i <= n");
}

// Touching points over a grid: a polytope inside an oracle body, used to drive the search.
ConvexBody search_polytope(const ConvexBody& body) {
  const int n = body.dimension();
  const int count = n == 1 ? 2 : n == 2 ? 120 : n == 3 ? 240 : 12 * n * n;
  const Mat dirs = direction_grid(n, count);
  Mat pts(n, dirs.cols());
  for (Eigen::Index k = 0; k < dirs.cols(); ++k) pts.col(k) = body.touching_point(dirs.col(k));
  return ConvexBody::from_vertices(pts);
}

constexpr int kAccurateOuter = 4;
constexpr int kAccurateInner = 2;

std::vector<Mat> forced_mats(const ForcedFrames& forced, int n, int i) {
  std::vector<Mat> out;
  for (const Subspace& s : forced.frames) {
    if (s.ambient_dimension() != n || s.dimension() != i) throw DomainError("forced frame has the wrong shape");
    out.push_back(s.frame());
  }
  return out;
}

}  // namespace

Subspace sample_subspace(int n, int i, std::uint64_t seed) {
  if (i < 1 || i > n) throw DomainError("sample_subspace needs 1 <= i <= n");
  std::mt19937_64 rng(seed);
  while (true) {
    const Mat g = gaussian(n, i, rng);
    try {
      return Subspace::orthonormalize(g);
    } catch (const DomainError&) {
    }
  }
}

RadiiReport successive_outer_radius(const ConvexBody& body, int i, const SearchBudget& budget, const ForcedFrames& forced) {
  check_index(body, i);
  const int n = body.dimension();
  RadiiReport rep;
  rep.i = i;
  std::vector<Mat> starts = forced_mats(forced, n, i);

  if (body.is_polytope()) {
    const Mat& V = body.vertices();
    if (i == n) {
      const BallCertificate b = min_enclosing_ball(V);
      rep.value = rep.lower = rep.upper = b.radius;
      rep.bound_kind = BoundKind::two_sided;
      rep.subspace = Subspace::full(n);
      rep.samples_used = 1;
      rep.trace.push_back({0, b.radius});
      return rep;
    }
    const Extent w = width(body);
    if (i == 1) starts.insert(starts.begin(), w.direction);
    const Objective f = [&V](const Mat& F) { return min_enclosing_ball(F.transpose() * V).radius; };
    SearchResult sr = search(n, i, f, budget, starts);
    const Candidate& best = sr.ranked.front();
    rep.value = rep.upper = best.value;
    rep.subspace = Subspace(best.frame);
    rep.samples_used = sr.samples;
    rep.trace = sr.trace;
    rep.lower = w.exact ? w.value / 2 : inradius(body).radius;
    rep.bound_kind = BoundKind::upper;
    if (i == 1 && w.exact) {
      rep.value = rep.upper = rep.lower = w.value / 2;
      rep.subspace = Subspace(Mat(w.direction));
      rep.bound_kind = BoundKind::two_sided;
    } else if (forced.first_is_optimal && !forced.frames.empty()) {
      const double opt = f(forced.frames.front().frame());
      if (opt <= best.value + 1e-12 * std::max(1.0, opt)) {
        rep.value = rep.upper = rep.lower = opt;
        rep.subspace = forced.frames.front();
        rep.bound_kind = BoundKind::two_sided;
      }
    }
    return rep;
  }

  // Oracle body.
  if (i == n) {
    const BallCertificate b = circumradius(body);
    rep.value = rep.upper = b.upper;
    rep.lower = b.lower;
    rep.bound_kind = BoundKind::two_sided;
    rep.subspace = Subspace::full(n);
    rep.samples_used = 1;
    rep.trace.push_back({0, rep.value});
    return rep;
  }
  const ConvexBody P = search_polytope(body);
  const Mat& V = P.vertices();
  const Extent w = width(P);
  if (i == 1) starts.push_back(w.direction);
  SearchResult sr = search(n, i, [&V](const Mat& F) { return min_enclosing_ball(F.transpose() * V).radius; }, budget, starts);

  auto accurate = [&](const Mat& F) { return circumradius(project(body, Subspace(F))); };
  std::vector<Candidate> finals;
  std::vector<BallCertificate> certs;
  auto consider = [&](const Mat& F) {
    const BallCertificate b = accurate(F);
    finals.push_back(make_candidate(b.upper, F));
    certs.push_back(b);
  };
  for (std::size_t k = 0; k < sr.ranked.size() && k < static_cast<std::size_t>(kAccurateOuter); ++k) consider(sr.ranked[k].frame);
  for (const Mat& F : starts) consider(F);
  std::size_t best = 0;
  for (std::size_t k = 1; k < finals.size(); ++k)
    if (ranks_before(finals[k], finals[best])) best = k;
  rep.value = rep.upper = finals[best].value;
  rep.subspace = Subspace(finals[best].frame);
  rep.samples_used = sr.samples + static_cast<int>(finals.size());
  rep.trace = sr.trace;
  rep.trace.push_back({rep.trace.back().iteration + 1, rep.value});
  // r(P) <= r(K) <= omega(K) / 2 = R_1(K) <= R_i(K).
  rep.lower = std::min(rep.value, inradius(P).radius);
  rep.bound_kind = BoundKind::upper;
  if (forced.first_is_optimal && !forced.frames.empty()) {
    // finals[kAccurate...] holds the forced frames in order; the first one is optimal.
    const std::size_t idx = finals.size() - starts.size();
    if (finals[idx].value <= rep.value + 1e-9 * std::max(1.0, rep.value)) {
      rep.value = rep.upper = certs[idx].upper;
      rep.lower = certs[idx].lower;
      rep.subspace = forced.frames.front();
      rep.bound_kind = BoundKind::two_sided;
    }
  }
  // Keep the trace monotone after switching to the accurate evaluation.
  for (std::size_t k = 1; k < rep.trace.size(); ++k) rep.trace[k].value = std::min(rep.trace[k].value, rep.trace[k - 1].value);
  if (rep.trace.back().value > rep.value) rep.trace.back().value = rep.value;
  return rep;
}

RadiiReport successive_inner_radius(const ConvexBody& body, int i, const SearchBudget& budget, const ForcedFrames& forced) {
  check_index(body, i);
  const int n = body.dimension();
  RadiiReport rep;
  rep.i = i;
  std::vector<Mat> starts = forced_mats(forced, n, i);

  auto negate_trace = [](std::vector<TracePoint> t) {
    for (TracePoint& p : t) p.value = -p.value;
    return t;
  };

  if (body.is_polytope()) {
    const InradiusProblem prob(body);
    if (i == n) {
      const BallCertificate b = prob.solve(Mat::Identity(n, n));
      rep.value = rep.lower = rep.upper = b.radius;
      rep.bound_kind = BoundKind::two_sided;
      rep.subspace = Subspace::full(n);
      rep.samples_used = 1;
      rep.trace.push_back({0, b.radius});
      return rep;
    }
    const Extent D = diameter(body);
    if (i == 1) starts.insert(starts.begin(), D.direction);
    const Objective f = [&prob](const Mat& F) { return -prob.solve(F).radius; };
    SearchResult sr = search(n, i, f, budget, starts);
    const Candidate& best = sr.ranked.front();
    rep.value = rep.lower = -best.value;
    rep.subspace = Subspace(best.frame);
    rep.samples_used = sr.samples;
    rep.trace = negate_trace(sr.trace);
    rep.upper = D.value / 2;
    rep.bound_kind = BoundKind::lower;
    if (i == 1) {
      rep.value = rep.lower = rep.upper = D.value / 2;
      rep.subspace = Subspace(Mat(D.direction));
      rep.bound_kind = BoundKind::two_sided;
    } else if (forced.first_is_optimal && !forced.frames.empty()) {
      const double opt = -f(forced.frames.front().frame());
      if (opt >= rep.value - 1e-12 * std::max(1.0, opt)) {
        rep.value = rep.lower = rep.upper = opt;
        rep.subspace = forced.frames.front();
        rep.bound_kind = BoundKind::two_sided;
      }
    }
    return rep;
  }

  if (i == 1) {
    // r_1 = D/2; the grid maximum of the width misses D by at most a cos(spacing) factor.
    const Extent D = diameter(body);
    rep.value = rep.lower = D.value / 2;
    rep.upper = rep.value / std::cos(grid_spacing(n, default_oracle_directions(n)));
    rep.subspace = Subspace(Mat(D.direction));
    rep.samples_used = 1;
    rep.trace.push_back({0, rep.value});
    return rep;
  }

  // Oracle body: search on an inscribed polytope, then cutting-plane evaluation.
  const ConvexBody P = search_polytope(body);
  const InradiusProblem prob(P);
  if (i < n) {
    const Extent D = diameter(P);
    if (i == 1) starts.push_back(D.direction);
  }
  SearchResult sr = i < n ? search(n, i, [&prob](const Mat& F) { return -prob.solve(F).radius; }, budget, starts)
                          : SearchResult{{make_candidate(-prob.solve(Mat::Identity(n, n)).radius, Mat::Identity(n, n))},
                                         {{0, -prob.solve(Mat::Identity(n, n)).radius}},
                                         1};
  std::vector<Candidate> finals;
  std::vector<BallCertificate> certs;
  auto consider = [&](const Mat& F) {
    const BallCertificate b = inradius_fixed_subspace(body, Subspace(F));
    finals.push_back(make_candidate(-b.radius, F));
    certs.push_back(b);
  };
  for (std::size_t k = 0; k < sr.ranked.size() && k < static_cast<std::size_t>(kAccurateInner); ++k) consider(sr.ranked[k].frame);
  for (const Mat& F : starts) consider(F);
  std::size_t best = 0;
  for (std::size_t k = 1; k < finals.size(); ++k)
    if (ranks_before(finals[k], finals[best])) best = k;
  rep.value = -finals[best].value;
  rep.lower = 0.0;
  for (const BallCertificate& c : certs) rep.lower = std::max(rep.lower, c.lower);
  rep.subspace = Subspace(finals[best].frame);
  rep.samples_used = sr.samples + static_cast<int>(finals.size());
  rep.trace = negate_trace(sr.trace);
  rep.trace.push_back({rep.trace.back().iteration + 1, rep.value});
  const Extent D = diameter(body);
  rep.upper = std::max(rep.value, D.value / 2);
  rep.bound_kind = BoundKind::lower;
  if (i == n) {
    rep.upper = certs[best].upper;
    rep.bound_kind = BoundKind::two_sided;
  } else if (forced.first_is_optimal && !forced.frames.empty()) {
    const std::size_t idx = finals.size() - starts.size();
    if (-finals[idx].value >= rep.value - 1e-9 * std::max(1.0, rep.value)) {
      rep.value = certs[idx].radius;
      rep.lower = certs[idx].lower;
      rep.upper = certs[idx].upper;
      rep.subspace = forced.frames.front();
      rep.bound_kind = BoundKind::two_sided;
    }
  }
  for (std::size_t k = 1; k < rep.trace.size(); ++k) rep.trace[k].value = std::max(rep.trace[k].value, rep.trace[k - 1].value);
  if (rep.trace.back().value < rep.value) rep.trace.back().value = rep.value;
  return rep;
}

RadiiSweep successive_radii(const ConvexBody& body, const SearchBudget& budget) {
  const int n = body.dimension();
  RadiiSweep sw;
  sw.outer.resize(static_cast<std::size_t>(n));
  sw.inner.resize(static_cast<std::size_t>(n));
  auto subframes = [n](const Subspace& G) {
    ForcedFrames ff;
    const int k = G.dimension();
    for (int drop = 0; drop < k; ++drop) {
      Mat F(n, k - 1);
      for (int c = 0, o = 0; c < k; ++c)
        if (c != drop) F.col(o++) = G.frame().col(c);
      ff.frames.emplace_back(F);
    }
    return ff;
  };
  for (int i = n; i >= 1; --i) {
    const ForcedFrames fo = i == n ? ForcedFrames{} : subframes(sw.outer[static_cast<std::size_t>(i)].subspace);
    const ForcedFrames fi = i == n ? ForcedFrames{} : subframes(sw.inner[static_cast<std::size_t>(i)].subspace);
    sw.outer[static_cast<std::size_t>(i - 1)] = successive_outer_radius(body, i, budget, fo);
    sw.inner[static_cast<std::size_t>(i - 1)] = successive_inner_radius(body, i, budget, fi);
  }
  return sw;
}

}  // namespace orad
