// One PASS/FAIL line per acceptance criterion. `--only N` runs a single criterion.
#include "orad/body.hpp"
#include "orad/directions.hpp"
#include "orad/grassmann.hpp"
#include "orad/orlicz.hpp"
#include "orad/phi.hpp"
#include "orad/radii.hpp"
#include "orad/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

using namespace orad;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

const std::vector<double> kPowers = {1.0, 1.5, 2.0, 3.0, 10.0};

double slab_radius(const OrliczFunction& phi) { return std::numbers::sqrt2 / (2.0 * phi.half_inverse()); }

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<int> axes(int lo, int hi) {
  std::vector<int> v;
  for (int k = lo; k <= hi; ++k) v.push_back(k);
  return v;
}

// Records the worst case per phi and fails the criterion when any phi fails.
struct PerPhi {
  Outcome out;
  double worst = 0.0;
  std::string failed;
  void add(const OrliczFunction& phi, bool ok, double err) {
    worst = std::max(worst, err);
    if (!ok) {
      out.pass = false;
      failed += " " + phi.descriptor() + fmt("(err=%.3g)", err);
    }
  }
  Outcome done() {
    out.detail = fmt("max err %.3g", worst) + (failed.empty() ? "" : ", failing:" + failed);
    return out;
  }
};

Outcome lp_equivalence() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> expo(-3.0, 3.0);
  double worst = 0.0;
  for (double p : kPowers) {
    const OrliczFunction phi = make_power_phi(p);
    for (int k = 0; k < 10000; ++k) {
      const double a = std::pow(10.0, expo(rng)), b = std::pow(10.0, expo(rng));
      const double hi = std::max(a, b), lo = std::min(a, b);
      const double exact = hi * std::pow(1.0 + std::pow(lo / hi, p), 1.0 / p);
      worst = std::max(worst, std::abs(orlicz_support(a, b, phi) - exact) / exact);
    }
  }
  const double t = seconds_since(t0);
  return {worst <= 1e-10 && t < 5.0, fmt("max rel err %.3g, %.2f s", worst, t)};
}

Outcome self_sum_scaling() {
  double worst = 0.0;
  for (int s = 0; s < 5; ++s) {
    const int n = 2 + s % 3;
    const ConvexBody K = random_polytope(n, 6 + 2 * s, 500 + s);
    const Mat dirs = default_direction_grid(n);
    for (const OrliczFunction& phi : default_phi_set()) {
      const OrliczSumBody S = orlicz_sum(K, K, phi);
      const double target = 1.0 / phi.half_inverse();
      for (Eigen::Index k = 0; k < dirs.cols(); ++k)
        worst = std::max(worst, std::abs(S.support(dirs.col(k)) / K.support(dirs.col(k)) - target));
    }
  }
  return {worst <= 1e-10, fmt("max ratio deviation %.3g", worst)};
}

Outcome sandwich_and_hull() {
  double worst = std::numeric_limits<double>::infinity();
  for (int s = 0; s < 50; ++s) {
    const int n = 2 + s % 3;
    const ConvexBody K = random_polytope(n, n + 3 + s % 5, 1000 + 2 * s), L = random_polytope(n, n + 2 + s % 4, 1001 + 2 * s);
    const Mat dirs = default_direction_grid(n);
    for (const OrliczFunction& phi : default_phi_set()) {
      const OrliczSumBody S = orlicz_sum(K, L, phi);
      const double h = phi.half_inverse();
      for (Eigen::Index k = 0; k < dirs.cols(); ++k) {
        const Vec u = dirs.col(k);
        const double hs = S.support(u), hk = K.support(u), hl = L.support(u);
        worst = std::min({worst, hs - (hk + hl) / (2.0 * h), hk + hl - hs, hs - std::max(hk, hl), std::max(hk, hl) / h - hs});
      }
    }
  }
  return {worst >= -1e-9, fmt("min slack %.3g", worst)};
}

Outcome projection_commutes() {
  double worst = 0.0;
  const std::vector<std::pair<int, int>> cases = {{3, 2}, {4, 2}, {4, 3}};
  for (auto [n, i] : cases) {
    const ConvexBody K = random_polytope(n, n + 4, 40 + n * 10 + i), K2 = random_polytope(n, n + 5, 41 + n * 10 + i);
    const Mat grid = default_direction_grid(i);
    for (const OrliczFunction& phi : default_phi_set()) {
      const OrliczSumBody S = orlicz_sum(K, K2, phi);
      for (int f = 0; f < 20; ++f) {
        const Subspace L = sample_subspace(n, i, 7000 + 100 * n + 10 * i + f);
        const OrliczSumBody SL = orlicz_sum(project(K, L), project(K2, L), phi);
        for (Eigen::Index k = 0; k < grid.cols(); ++k) {
          const Vec v = grid.col(k);
          worst = std::max(worst, std::abs(S.support(L.frame() * v) - SL.support(v)));
        }
      }
    }
  }
  return {worst <= 1e-9, fmt("max deviation %.3g", worst)};
}

Outcome segment_sum_ball() {
  PerPhi r;
  const ConvexBody a = make_segment(Vec::Unit(2, 0) * -1.0, Vec::Unit(2, 0));
  const ConvexBody b = make_segment(Vec::Unit(2, 1) * -1.0, Vec::Unit(2, 1));
  const Mat dirs = circle_directions(720);
  const Vec diag = Vec::Constant(2, std::numbers::sqrt2 / 2);
  for (const OrliczFunction& phi : default_phi_set()) {
    const OrliczSumBody S = orlicz_sum(a, b, phi);
    double top = 0.0;
    for (Eigen::Index k = 0; k < dirs.cols(); ++k) top = std::max(top, S.touching_point(dirs.col(k)).norm());
    const double target = slab_radius(phi), at_diag = S.touching_point(diag).norm();
    const double err = std::max(std::abs(top - target), std::abs(at_diag - target) > 1e-6 ? std::abs(at_diag - target) : 0.0);
    r.add(phi, std::abs(top - target) <= 1e-8 && std::abs(at_diag - top) <= 1e-6, err);
  }
  return r.done();
}

Outcome outer_slab_equality() {
  PerPhi r;
  const int n = 4;
  for (const OrliczFunction& phi : default_phi_set()) {
    double err = 0.0;
    for (int i : {2, 3}) {
      const ConvexBody A = make_cube(concat({1}, axes(i + 1, n)), 1.0, Vec::Zero(n));
      const ConvexBody B = make_cube(concat({2}, axes(i + 1, n)), 1.0, Vec::Zero(n));
      const OrliczSumBody S = orlicz_sum(A, B, phi);
      const RadiiReport rep =
          successive_outer_radius(S.as_body(), i, SuiteConfig::suite_budget(), ForcedFrames{{Subspace::coordinate(n, axes(1, i))}, true});
      err = std::max(err, std::abs(rep.value - slab_radius(phi)));
    }
    r.add(phi, err <= 1e-6, err);
  }
  return r.done();
}

Outcome inner_ball_equality() {
  PerPhi r;
  const int n = 3, i = 2, pts = 256;
  const double gap = ball_mesh_gap(i, 1.0, pts);
  const ConvexBody A = make_ball_in_subspace(Subspace::coordinate(n, {1, 2}), 1.0, pts);
  const ConvexBody B = make_ball_in_subspace(Subspace::coordinate(n, {1, 3}), 1.0, pts);
  Mat F = Mat::Zero(n, i);
  F(0, 0) = 1.0;
  F(1, 1) = F(2, 1) = std::numbers::sqrt2 / 2;
  for (const OrliczFunction& phi : default_phi_set()) {
    const OrliczSumBody S = orlicz_sum(A, B, phi);
    const RadiiReport rep = successive_inner_radius(S.as_body(), i, SuiteConfig::suite_budget(), ForcedFrames{{Subspace(F)}});
    const double err = std::abs(rep.value - slab_radius(phi));
    r.add(phi, err <= 2.0 * gap + 1e-6, err);
  }
  return r.done();
}

Outcome difference_bodies() {
  PerPhi r;
  for (const OrliczFunction& phi : default_phi_set()) {
    double err = 0.0;
    bool ok = true;
    // (a) [0, e_1] + cube on the trailing axes.
    for (int n = 2; n <= 4; ++n)
      for (int i = 1; i < n; ++i) {
        const ConvexBody K = make_slab_body(n, 1, axes(i + 1, n));
        const ForcedFrames frame{{Subspace::coordinate(n, axes(1, i))}, true};
        const double RD = successive_outer_radius(orlicz_sum(K, reflect(K), phi).as_body(), i, SuiteConfig::suite_budget(), frame).value;
        const double RK = successive_outer_radius(K, i, SuiteConfig::suite_budget(), frame).value;
        const double e = std::max(std::abs(RD - 1.0), std::abs(RD - 2.0 * RK));
        ok = ok && e <= 1e-6;
        err = std::max(err, e);
      }
    // (b) the simplex.
    for (int n = 2; n <= 3; ++n) {
      const ConvexBody K = make_simplex_Kn(n);
      // K_n spans the hyperplane sum x = 0 of R^{n+1}; measure it there.
      const Mat Q = Eigen::HouseholderQR<Mat>(Mat::Ones(n + 1, 1)).householderQ();
      const ConvexBody Kn = ConvexBody::from_vertices(Q.rightCols(n).transpose() * K.vertices());
      const double RK = circumradius(Kn).radius;
      const double eK = std::abs(RK - std::sqrt(n / (n + 1.0)));
      const double RD = circumradius(orlicz_sum(Kn, reflect(Kn), phi).as_body()).radius;
      const double eD = std::abs(RD - slab_radius(phi));
      ok = ok && eK <= 1e-10 && eD <= 1e-6;
      err = std::max({err, eK, eD});
    }
    r.add(phi, ok, err);
  }
  return r.done();
}

Outcome non_reversibility() {
  PerPhi r;
  const int n = 3;
  for (const OrliczFunction& phi : default_phi_set()) {
    bool ok = true;
    double err = 0.0;
    const double bound = 1.0 / (2.0 * phi.half_inverse());
    for (ReverseKind kind : {ReverseKind::outer, ReverseKind::inner}) {
      const int lo = kind == ReverseKind::outer ? 1 : 2, hi = kind == ReverseKind::outer ? n - 1 : n;
      for (int i = lo; i <= hi; ++i) {
        const auto res = check_no_reverse(kind, n, i, phi, SuiteConfig::suite_budget());
        const double rhs = res[0].lhs, lhs = res[1].lhs;
        ok = ok && std::abs(rhs) <= 1e-12 && lhs >= bound - 1e-6;
        err = std::max({err, std::abs(rhs), bound - lhs});
      }
    }
    r.add(phi, ok, err);
  }
  return r.done();
}

Outcome monotone_sweeps() {
  double worst = 0.0;
  const double tol = 1e-6;
  const int n = 4;
  for (int s = 0; s < 20; ++s) {
    const ConvexBody K = random_polytope(n, 8 + s % 5, 9000 + s);
    const RadiiSweep sw = successive_radii(K);
    for (int i = 1; i < n; ++i) {
      worst = std::max(worst, sw.outer[i - 1].value - sw.outer[i].value);
      worst = std::max(worst, sw.inner[i].value - sw.inner[i - 1].value);
    }
    worst = std::max(worst, std::abs(sw.outer[0].value - width(K).value / 2.0));
    worst = std::max(worst, std::abs(sw.outer[n - 1].value - circumradius(K).radius));
    worst = std::max(worst, std::abs(sw.inner[0].value - diameter(K).value / 2.0));
    worst = std::max(worst, std::abs(sw.inner[n - 1].value - inradius(K).radius));
  }
  return {worst <= tol, fmt("max violation %.3g", worst)};
}

Outcome full_suite() {
  const auto t0 = Clock::now();
  const SuiteReport rep = run_suite(SuiteConfig{});
  const double t = seconds_since(t0);
  return {rep.ok() && t < 600.0,
          fmt("pass=%.0f fail=%.0f inconclusive=", rep.passed, rep.failed) + std::to_string(rep.inconclusive) + fmt(", %.1f s", t)};
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int k = 1; k < argc; ++k)
    if (std::strcmp(argv[k], "--only") == 0 && k + 1 < argc) only = std::atoi(argv[++k]);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Lp oracle equivalence", lp_equivalence},
      {"self-sum scaling", self_sum_scaling},
      {"sandwich and hull inclusions", sandwich_and_hull},
      {"projection commutes with the sum", projection_commutes},
      {"segment sum ball", segment_sum_ball},
      {"outer equality (slab cubes)", outer_slab_equality},
      {"inner equality (subspace balls)", inner_ball_equality},
      {"difference bodies", difference_bodies},
      {"non-reversibility witnesses", non_reversibility},
      {"monotone sweeps and endpoints", monotone_sweeps},
      {"full verify suite", full_suite},
  };
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    if (only && static_cast<int>(k) + 1 != only) continue;
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    all = all && o.pass;
    std::printf("criterion %2zu %s: %s%s%s\n", k + 1, o.pass ? "PASS" : "FAIL", criteria[k].first.c_str(),
                o.detail.empty() ? "" : " |", o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
