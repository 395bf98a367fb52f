#include "orad/verify.hpp"

#include "orad/body_io.hpp"
#include "orad/directions.hpp"
#include "orad/radii.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

namespace orad {

std::string to_string(Relation r) {
  switch (r) {
    case Relation::le: return "<=";
    case Relation::ge: return ">=";
    case Relation::eq: return "=";
    case Relation::lt: return "<";
    case Relation::subset: return "subset";
  }
  return "?";
}

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
  }
  return "?";
}

Interval Interval::scaled(double c) const { return {c * value, c * lo, c * hi}; }

VerificationResult evaluate_claim(std::string claim_id, const Interval& lhs, const Interval& rhs, Relation relation,
                                  double tolerance, std::string inputs_digest) {
  VerificationResult r;
  r.claim_id = std::move(claim_id);
  r.inputs_digest = std::move(inputs_digest);
  r.relation = relation;
  r.tolerance = tolerance;
  r.lhs = lhs.value;
  r.rhs = rhs.value;
  r.lhs_lo = lhs.lo;
  r.lhs_hi = lhs.hi;
  r.rhs_lo = rhs.lo;
  r.rhs_hi = rhs.hi;
  bool holds = false, sure_holds = false, sure_violated = false;
  switch (relation) {
    case Relation::le:
      r.slack = rhs.value - lhs.value;
      holds = r.slack >= -tolerance;
      sure_holds = lhs.hi <= rhs.lo + tolerance;
      sure_violated = lhs.lo > rhs.hi + tolerance;
      break;
    case Relation::lt:
      r.slack = rhs.value - lhs.value;
      holds = r.slack > 0.0;
      sure_holds = lhs.hi < rhs.lo;
      sure_violated = lhs.lo >= rhs.hi;
      break;
    case Relation::ge:
      r.slack = lhs.value - rhs.value;
      holds = r.slack >= -tolerance;
      sure_holds = lhs.lo >= rhs.hi - tolerance;
      sure_violated = lhs.hi < rhs.lo - tolerance;
      break;
    case Relation::eq:
      r.slack = lhs.value - rhs.value;
      holds = std::abs(r.slack) <= tolerance;
      sure_holds = std::max(std::abs(lhs.hi - rhs.lo), std::abs(rhs.hi - lhs.lo)) <= tolerance;
      sure_violated = lhs.lo - rhs.hi > tolerance || rhs.lo - lhs.hi > tolerance;
      break;
    case Relation::subset:
      r.slack = lhs.value;
      holds = r.slack >= -tolerance;
      sure_holds = lhs.lo >= -tolerance;
      sure_violated = lhs.hi < -tolerance;
      break;
  }
  if (holds) {
    r.status = Status::pass;
    r.certified = sure_holds;
  } else {
    r.status = sure_violated ? Status::fail : Status::inconclusive;
    r.certified = sure_violated;
  }
  return r;
}

std::string digest_inputs(const std::string& claim_id, const std::vector<const ConvexBody*>& bodies,
                          const std::vector<std::string>& extra, std::uint64_t seed) {
  std::uint64_t h = fnv1a(claim_id);
  for (const ConvexBody* b : bodies) {
    const Mat& v = b->vertices();
    h = fnv1a(v.data(), sizeof(double) * static_cast<std::size_t>(v.size()), h);
  }
  for (const std::string& s : extra) h = fnv1a(s, h);
  h = fnv1a(&seed, sizeof(seed), h);
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Interval outer_interval(const RadiiReport& r) { return {r.value, r.lower, r.upper}; }
Interval inner_interval(const RadiiReport& r) { return {r.value, r.lower, r.upper}; }

namespace {

std::uint64_t mix(std::uint64_t a, const std::string& tag) { return fnv1a(tag, fnv1a(&a, sizeof(a))); }

std::string budget_tag(const SearchBudget& b) {
  std::ostringstream os;
  os << "starts=" << b.starts << ",iters=" << b.max_iters << ",step_tol=" << format_double(b.step_tol)
     << ",angles=" << b.angles << ",refine=" << b.refine_top;
  return os.str();
}

std::string case_id(const std::string& family, const std::string& label, const OrliczFunction& phi, int n, int i) {
  std::string id = family + "/" + label + "/" + phi.descriptor() + "/n=" + std::to_string(n);
  if (i > 0) id += "/i=" + std::to_string(i);
  return id;
}

SearchBudget reseeded(SearchBudget b, std::uint64_t seed) {
  b.seed = seed;
  return b;
}

std::vector<int> range(int from, int to) {  // inclusive, empty when from > to
  std::vector<int> out;
  for (int k = from; k <= to; ++k) out.push_back(k);
  return out;
}

Vec unit(int n, int axis) { return Vec::Unit(n, axis - 1); }

ConvexBody axis_segment(int n, int axis) { return make_segment(-unit(n, axis), unit(n, axis)); }

}  // namespace

VerificationResult check_outer_theorem(const ConvexBody& K, const ConvexBody& K2, const OrliczFunction& phi, int i,
                                       const SearchBudget& budget, const TheoremCase& c) {
  const int n = K.dimension();
  const OrliczSumBody S = orlicz_sum(K, K2, phi);
  const RadiiReport rs = successive_outer_radius(S.as_body(), i, budget, c.sum_frames);
  const RadiiReport rk = successive_outer_radius(K, i, budget, c.left_frames);
  const RadiiReport rk2 = successive_outer_radius(K2, i, budget, c.right_frames);
  const double factor = (i == 1 ? 2.0 : 2.0 * std::numbers::sqrt2) * phi.half_inverse();
  const std::string id = case_id("thm-outer", c.label, phi, n, i);
  return evaluate_claim(id, outer_interval(rs).scaled(factor), outer_interval(rk) + outer_interval(rk2),
                        c.equality ? Relation::eq : Relation::ge, c.tolerance,
                        digest_inputs(id, {&K, &K2}, {phi.descriptor(), budget_tag(budget)}, c.seed));
}

VerificationResult check_inner_theorem(const ConvexBody& K, const ConvexBody& K2, const OrliczFunction& phi, int i,
                                       const SearchBudget& budget, const TheoremCase& c) {
  const int n = K.dimension();
  const OrliczSumBody S = orlicz_sum(K, K2, phi);
  const RadiiReport rs = successive_inner_radius(S.as_body(), i, budget, c.sum_frames);
  const RadiiReport rk = successive_inner_radius(K, i, budget, c.left_frames);
  const RadiiReport rk2 = successive_inner_radius(K2, i, budget, c.right_frames);
  const double factor = (i == n ? 2.0 : 2.0 * std::numbers::sqrt2) * phi.half_inverse();
  const std::string id = case_id("thm-inner", c.label, phi, n, i);
  return evaluate_claim(id, inner_interval(rs).scaled(factor), inner_interval(rk) + inner_interval(rk2),
                        c.equality ? Relation::eq : Relation::ge, c.tolerance,
                        digest_inputs(id, {&K, &K2}, {phi.descriptor(), budget_tag(budget)}, c.seed));
}

std::vector<VerificationResult> check_no_reverse(ReverseKind kind, int n, int i, const OrliczFunction& phi,
                                                 const SearchBudget& budget) {
  std::vector<VerificationResult> out;
  const bool outer = kind == ReverseKind::outer;
  if (outer ? (i < 1 || i > n - 1) : (i < 2 || i > n)) throw DomainError("no-reverse witness: index out of range");
  // outer: K = [-e_{n-i+1}, e_{n-i+1}], K' = cube on e_1..e_{n-i};  inner: K = [-e_1, e_1], K' = cube on e_2..e_i.
  const ConvexBody K = outer ? axis_segment(n, n - i + 1) : axis_segment(n, 1);
  const std::vector<int> axes = outer ? range(1, n - i) : range(2, i);
  const ConvexBody K2 = make_cube(axes, 1.0, Vec::Zero(n));
  const OrliczSumBody S = orlicz_sum(K, K2, phi);
  const std::string base = case_id(outer ? "no-reverse-outer" : "no-reverse-inner", "witness", phi, n, i);
  const std::string digest = digest_inputs(base, {&K, &K2}, {phi.descriptor(), budget_tag(budget)}, budget.seed);
  Interval rhs, lhs;
  if (outer) {
    rhs = outer_interval(successive_outer_radius(K, i, budget)) + outer_interval(successive_outer_radius(K2, i, budget));
    lhs = outer_interval(successive_outer_radius(S.as_body(), i, budget));
  } else {
    rhs = inner_interval(successive_inner_radius(K, i, budget)) + inner_interval(successive_inner_radius(K2, i, budget));
    lhs = inner_interval(successive_inner_radius(S.as_body(), i, budget));
  }
  out.push_back(evaluate_claim(base + "/summands-zero", rhs, Interval::exact(0.0), Relation::eq, 1e-9, digest));
  out.push_back(evaluate_claim(base + "/sum-positive", lhs, Interval::exact(0.5 / phi.half_inverse()), Relation::ge, 1e-6,
                               digest));
  return out;
}

VerificationResult check_reverse_circumradius(const ConvexBody& K, const ConvexBody& K2, const OrliczFunction& phi,
                                              std::uint64_t seed) {
  const OrliczSumBody S = orlicz_sum(K, K2, phi);
  const BallCertificate bs = circumradius(S.as_body());
  const double rhs = circumradius(K).radius + circumradius(K2).radius;
  const std::string id = case_id("no-reverse-outer", "circumradius", phi, K.dimension(), 0);
  return evaluate_claim(id, {bs.upper, bs.lower, bs.upper}, Interval::exact(rhs), Relation::le, 1e-9,
                        digest_inputs(id, {&K, &K2}, {phi.descriptor()}, seed));
}

std::vector<VerificationResult> check_difference_body(const ConvexBody& K, const OrliczFunction& phi, int i,
                                                      const SearchBudget& budget, const DifferenceCase& c) {
  const int n = K.dimension();
  const OrliczSumBody D = orlicz_sum(K, reflect(K), phi);
  const std::string base = case_id("diff-body", c.label, phi, n, i);
  const std::string digest = digest_inputs(base, {&K}, {phi.descriptor(), budget_tag(budget)}, c.seed);
  const double hinv = phi.half_inverse();
  std::vector<VerificationResult> out;

  auto plus = [&](const Subspace& s) {
    ForcedFrames f = c.frames;
    f.frames.push_back(s);
    return f;
  };
  // Each search also tries the other body's best frame, until neither improves.
  RadiiReport rk = successive_outer_radius(K, i, budget, c.frames);
  RadiiReport rd = successive_outer_radius(D.as_body(), i, budget, plus(rk.subspace));
  for (int round = 0; round < 3; ++round) {
    const RadiiReport k2 = successive_outer_radius(K, i, budget, plus(rd.subspace));
    if (k2.value >= rk.value) break;
    rk = k2;
    const RadiiReport d2 = successive_outer_radius(D.as_body(), i, budget, plus(rk.subspace));
    if (d2.value >= rd.value) break;
    rd = d2;
  }
  const Interval RD = outer_interval(rd);
  const Interval RK = outer_interval(rk);
  const double lower_factor = std::numbers::sqrt2 / (2.0 * hinv) * std::sqrt((i + 1.0) / i);
  out.push_back(evaluate_claim(base + "/outer-lower", RK.scaled(lower_factor), RD, Relation::le, c.tolerance, digest));
  out.push_back(evaluate_claim(base + "/outer-upper", RD, RK.scaled(2.0), Relation::le, c.tolerance, digest));
  if (c.expect_lower_equality)
    out.push_back(evaluate_claim(base + "/outer-lower-attained", RD, RK.scaled(lower_factor), Relation::eq, c.tolerance, digest));
  if (c.expect_upper_equality)
    out.push_back(evaluate_claim(base + "/outer-upper-attained", RD, RK.scaled(2.0), Relation::eq, c.tolerance, digest));
  if (c.outer_only) return out;

  const RadiiReport ik = successive_inner_radius(K, i, budget);
  const Interval rD = inner_interval(successive_inner_radius(D.as_body(), i, budget, ForcedFrames{{ik.subspace}}));
  const Interval rK = inner_interval(ik);
  out.push_back(evaluate_claim(base + "/inner-lower", rK.scaled(1.0 / hinv), rD, Relation::le, c.tolerance, digest));
  out.push_back(evaluate_claim(base + "/inner-upper", rD, rK.scaled(2.0 * (i + 1)), Relation::lt, c.tolerance, digest));
  return out;
}

std::vector<VerificationResult> check_inclusions(const ConvexBody& K, const ConvexBody& L, const OrliczFunction& phi,
                                                 const InclusionOptions& opts) {
  const int n = K.dimension();
  const Mat dirs = opts.directions ? *opts.directions : default_direction_grid(n);
  const OrliczSumBody S = orlicz_sum(K, L, phi);
  const double hinv = phi.half_inverse();
  const std::string tag = "/" + phi.descriptor() + "/n=" + std::to_string(n);
  const std::string digest = digest_inputs("inclusions" + tag, {&K, &L}, {phi.descriptor()}, opts.seed);
  std::vector<VerificationResult> out;

  Vec hS(dirs.cols()), hK(dirs.cols()), hL(dirs.cols());
  for (Eigen::Index k = 0; k < dirs.cols(); ++k) {
    hS(k) = S.support(dirs.col(k));
    hK(k) = K.support(dirs.col(k));
    hL(k) = L.support(dirs.col(k));
  }
  const Vec hsum = hK + hL;
  const Vec hmax = hK.cwiseMax(hL);
  auto worst = [](const Vec& slack) { return Interval::exact(slack.minCoeff()); };
  const double tol = tol::validate;
  out.push_back(evaluate_claim("inclusions/sandwich-lower" + tag, worst(hS - hsum / (2.0 * hinv)), Interval::exact(0),
                               Relation::subset, tol, digest));
  out.push_back(evaluate_claim("inclusions/sandwich-upper" + tag, worst(hsum - hS), Interval::exact(0), Relation::subset, tol, digest));
  out.push_back(evaluate_claim("inclusions/hull-lower" + tag, worst(hS - hmax), Interval::exact(0), Relation::subset, tol, digest));
  out.push_back(evaluate_claim("inclusions/hull-upper" + tag, worst(hmax / hinv - hS), Interval::exact(0), Relation::subset, tol, digest));

  if (opts.other_phi) {
    // Order the pair on [0, 1] first; the smaller function gives the smaller sum and norm.
    const OrliczFunction& other = *opts.other_phi;
    const bool phi_le = phi.pointwise_le(other);
    const bool other_le = other.pointwise_le(phi);
    if (phi_le || other_le) {
      const OrliczFunction& small = phi_le ? phi : other;
      const OrliczFunction& big = phi_le ? other : phi;
      const std::string ptag = "/" + small.descriptor() + "<=" + big.descriptor() + "/n=" + std::to_string(n);
      const OrliczSumBody Ss = orlicz_sum(K, L, small), Sb = orlicz_sum(K, L, big);
      Vec gap(dirs.cols());
      for (Eigen::Index k = 0; k < dirs.cols(); ++k) gap(k) = Sb.support(dirs.col(k)) - Ss.support(dirs.col(k));
      out.push_back(evaluate_claim("inclusions/phi-monotone" + ptag, worst(gap), Interval::exact(0), Relation::subset, tol, digest));
      std::mt19937_64 rng(opts.seed);
      std::normal_distribution<double> nd;
      double worst_norm = -std::numeric_limits<double>::infinity();
      for (int k = 0; k < opts.norm_points; ++k) {
        Vec x(n);
        for (int j = 0; j < n; ++j) x(j) = nd(rng);
        worst_norm = std::max(worst_norm, orlicz_norm(x, small) - orlicz_norm(x, big));
      }
      out.push_back(evaluate_claim("inclusions/norm-monotone" + ptag, Interval::exact(worst_norm), Interval::exact(0),
                                   Relation::le, 2 * tol::root, digest));
    }
  }

  // Projection commutes with the sum.
  std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ull);
  for (int i = 1; i < n; ++i) {
    double dev = 0.0;
    const Mat sub_dirs = default_direction_grid(i);
    for (int f = 0; f < opts.projection_frames; ++f) {
      const Subspace Lf = sample_subspace(n, i, rng());
      const ConvexBody lhs_body = project(S.as_body(), Lf);
      const OrliczSumBody rhs_sum = orlicz_sum(project(K, Lf), project(L, Lf), phi);
      for (Eigen::Index k = 0; k < sub_dirs.cols(); ++k)
        dev = std::max(dev, std::abs(lhs_body.support(sub_dirs.col(k)) - rhs_sum.support(sub_dirs.col(k))));
    }
    out.push_back(evaluate_claim("inclusions/projection" + tag + "/i=" + std::to_string(i), Interval::exact(dev),
                                 Interval::exact(0), Relation::le, 2 * tol::root, digest));
  }

  // K +_phi K = K / phi^{-1}(1/2).
  const OrliczSumBody KK = orlicz_sum(K, K, phi);
  double dev = 0.0;
  for (Eigen::Index k = 0; k < dirs.cols(); ++k) {
    if (hK(k) <= tol::geom) continue;
    dev = std::max(dev, std::abs(KK.support(dirs.col(k)) * hinv / hK(k) - 1.0));
  }
  out.push_back(evaluate_claim("inclusions/self-sum" + tag, Interval::exact(dev), Interval::exact(0), Relation::le, 1e-10, digest));
  return out;
}

VerificationResult check_segment_sum(const OrliczFunction& phi, int n, int resolution) {
  if (n < 2) throw DomainError("segment sum needs n >= 2");
  const ConvexBody a = axis_segment(n, 1), b = axis_segment(n, 2);
  const OrliczSumBody S = orlicz_sum(a, b, phi);
  const Mat circle = circle_directions(resolution);
  double mx = 0.0;
  for (Eigen::Index k = 0; k < circle.cols(); ++k) {
    Vec u = Vec::Zero(n);
    u.head(2) = circle.col(k);
    mx = std::max(mx, S.touching_point(u).norm());
  }
  const std::string id = "inclusions/segment-sum/" + phi.descriptor() + "/n=" + std::to_string(n);
  return evaluate_claim(id, Interval::exact(mx), Interval::exact(phi.constants().slab_radius), Relation::le, 1e-9,
                        digest_inputs(id, {&a, &b}, {phi.descriptor(), std::to_string(resolution)}, 0));
}

std::vector<VerificationResult> check_phi(const OrliczFunction& phi, std::uint64_t seed) {
  std::vector<VerificationResult> out;
  const std::string tag = "/" + phi.descriptor();
  const std::string digest = digest_inputs("phi-class" + tag, {}, {phi.descriptor()}, seed);
  const ValidationReport v = validate(phi);
  const double worst = std::max({v.endpoint_violation, v.monotone_violation, v.convex_violation});
  out.push_back(evaluate_claim("phi-class/validate" + tag, Interval::exact(v.passed() ? 0.0 : std::max(worst, 1.0)),
                               Interval::exact(0), Relation::le, 0.0, digest));
  const double hinv = phi.half_inverse();
  out.push_back(evaluate_claim("phi-class/half-inverse-lower" + tag, Interval::exact(hinv), Interval::exact(0.5),
                               Relation::ge, tol::root, digest));
  out.push_back(evaluate_claim("phi-class/half-inverse-upper" + tag, Interval::exact(hinv), Interval::exact(1.0),
                               Relation::lt, 0.0, digest));
  out.push_back(evaluate_claim("phi-class/half-inverse-residual" + tag, Interval::exact(std::abs(phi(hinv) - 0.5)),
                               Interval::exact(0), Relation::le, tol::root, digest));
  double below = -std::numeric_limits<double>::infinity(), round = 0.0;
  for (int k = 0; k <= 1000; ++k) {
    const double t = k / 1000.0;
    below = std::max(below, phi(t) - t);
    round = std::max(round, std::abs(phi.inverse(phi(t)) - t));
  }
  out.push_back(evaluate_claim("phi-class/below-identity" + tag, Interval::exact(below), Interval::exact(0), Relation::le,
                               tol::root, digest));
  out.push_back(evaluate_claim("phi-class/inverse-roundtrip" + tag, Interval::exact(round), Interval::exact(0),
                               Relation::le, 2 * tol::root, digest));

  const std::string& d = phi.descriptor();
  if (d.rfind("power:p=", 0) == 0) {
    const double p = parse_number(d.substr(8));
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ud(0.0, 10.0);
    double err = 0.0;
    for (int k = 0; k < 2000; ++k) {
      const double a = ud(rng), b = ud(rng);
      const double closed = std::pow(std::pow(a, p) + std::pow(b, p), 1.0 / p);
      err = std::max(err, std::abs(orlicz_support(a, b, phi) - closed) / closed);
    }
    out.push_back(evaluate_claim("phi-class/lp-closed-form" + tag, Interval::exact(err), Interval::exact(0), Relation::le,
                                 1e-10, digest));
    out.push_back(evaluate_claim("phi-class/lp-constant" + tag, Interval::exact(2.0 * hinv),
                                 Interval::exact(std::pow(2.0, (p - 1.0) / p)), Relation::eq, 1e-12, digest));
  } else if (d.rfind("poly:", 0) == 0) {
    // c1 t + c2 t^2 = 1/2 has the closed-form root (-c1 + sqrt(c1^2 + 2 c2)) / (2 c2).
    const auto c1p = d.find("c1="), c2p = d.find(",c2=");
    const double c1 = parse_number(d.substr(c1p + 3, c2p - c1p - 3));
    const double c2 = parse_number(d.substr(c2p + 4));
    const double closed = c2 == 0.0 ? 0.5 / c1 : (-c1 + std::sqrt(c1 * c1 + 2.0 * c2)) / (2.0 * c2);
    out.push_back(evaluate_claim("phi-class/closed-inverse" + tag, Interval::exact(hinv), Interval::exact(closed),
                                 Relation::eq, 1e-12, digest));
  }
  return out;
}

ConvexBody random_polytope(int n, int vertices, std::uint64_t seed) {
  if (n < 1 || vertices < n + 1) throw DomainError("random polytope needs at least n + 1 vertices");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  for (int attempt = 0;; ++attempt) {
    Mat p(n, vertices);
    for (Eigen::Index c = 0; c < p.cols(); ++c)
      for (Eigen::Index r = 0; r < p.rows(); ++r) p(r, c) = nd(rng);
    const Vec centroid = p.rowwise().mean();
    p.colwise() -= centroid;
    ConvexBody body = ConvexBody::from_vertices(p);
    if (body.affine_dimension() == n && inradius(body).radius > 0.05) return body;
    if (attempt > 100) throw Error("could not sample a full-dimensional polytope");
  }
}

ConvexBody intrinsic_simplex(int n) {
  const Mat ones = Mat::Ones(n + 1, 1);
  Eigen::HouseholderQR<Mat> qr(ones);
  const Mat Q = qr.householderQ();
  return project(make_simplex_Kn(n), Subspace(Mat(Q.rightCols(n))));
}

SearchBudget SuiteConfig::suite_budget() {
  SearchBudget b;
  b.starts = 12;
  b.max_iters = 60;
  b.refine_top = 3;
  return b;
}

const std::vector<std::string>& SuiteConfig::families() {
  static const std::vector<std::string> f = {"phi-class",        "inclusions",       "minkowski", "thm-outer",
                                             "thm-inner",        "no-reverse-outer", "no-reverse-inner", "diff-body"};
  return f;
}

namespace {

// [-e_1, e_1] and [-e_2, e_2] plus the cube on e_{i+1}..e_n; at i = n just the segments.
std::pair<ConvexBody, ConvexBody> slab_cubes(int n, int i) {
  std::vector<int> a = {1}, b = {2};
  for (int k = i + 1; k <= n; ++k) {
    a.push_back(k);
    b.push_back(k);
  }
  return {make_cube(a, 1.0, Vec::Zero(n)), make_cube(b, 1.0, Vec::Zero(n))};
}

// Unit i-balls in span{e_1..e_j, e_{j+1}..e_i} and span{e_1..e_j, e_{i+1}..e_{2i-j}}, j = max(2i - n, 0),
// and the frame pairing the non-shared axes diagonally.
struct BallPair {
  ConvexBody a, b;
  Subspace frame;
  double gap;
};

int ball_points(int i) { return i == 1 ? 2 : i == 2 ? 256 : 1000; }

BallPair subspace_balls(int n, int i) {
  const int j = std::max(2 * i - n, 0);
  std::vector<int> axes_a = range(1, i), axes_b = range(1, j);
  for (int k = i + 1; k <= 2 * i - j; ++k) axes_b.push_back(k);
  Mat F = Mat::Zero(n, i);
  for (int k = 0; k < j; ++k) F(k, k) = 1.0;
  for (int k = j; k < i; ++k) {
    F(k, k) = std::numbers::sqrt2 / 2;
    F(i + (k - j), k) = std::numbers::sqrt2 / 2;
  }
  const int pts = ball_points(i);
  return {make_ball_in_subspace(Subspace::coordinate(n, axes_a), 1.0, pts),
          make_ball_in_subspace(Subspace::coordinate(n, axes_b), 1.0, pts), Subspace(F), ball_mesh_gap(i, 1.0, pts)};
}

// K_i + c M_{n-i}: the intrinsic simplex in the first i coordinates plus a centered cube of side c.
ConvexBody simplex_plus_cube(int n, int i, double c) {
  const ConvexBody Ki = intrinsic_simplex(i);
  const Mat& v = Ki.vertices();
  Mat lifted = Mat::Zero(n, v.cols());
  lifted.topRows(i) = v;
  return minkowski_sum(ConvexBody::from_vertices(lifted), make_cube(range(i + 1, n), c / 2, Vec::Zero(n)));
}

ForcedFrames optimal(const Subspace& s) { return ForcedFrames{{s}, true}; }

bool wanted(const SuiteConfig& cfg, const std::string& family) {
  return cfg.claims.empty() || std::find(cfg.claims.begin(), cfg.claims.end(), family) != cfg.claims.end();
}

}  // namespace

SuiteReport run_suite(const SuiteConfig& cfg) {
  for (const std::string& c : cfg.claims)
    if (std::find(SuiteConfig::families().begin(), SuiteConfig::families().end(), c) == SuiteConfig::families().end())
      throw DomainError("unknown claim family '" + c + "'");
  for (int n : cfg.dims)
    if (n < 2 || n > 6) throw DomainError("suite dimensions must lie in 2..6");

  std::vector<VerificationResult> res;
  auto add = [&](VerificationResult r) { res.push_back(std::move(r)); };
  auto add_all = [&](std::vector<VerificationResult> v) {
    for (auto& r : v) res.push_back(std::move(r));
  };
  auto seed_for = [&](const std::string& tag) { return mix(cfg.seed, tag); };
  auto budget_for = [&](const std::string& tag) { return reseeded(cfg.budget, seed_for(tag + "/search")); };
  auto rand_body = [&](const std::string& tag, int n) { return random_polytope(n, n + 4, seed_for(tag)); };

  for (std::size_t pi = 0; pi < cfg.phis.size(); ++pi) {
    const OrliczFunction& phi = cfg.phis[pi];
    const std::string& pd = phi.descriptor();
    if (wanted(cfg, "phi-class")) add_all(check_phi(phi, seed_for("phi/" + pd)));
    if (wanted(cfg, "inclusions")) add(check_segment_sum(phi));

    for (int n : cfg.dims) {
      const std::string nt = "/" + pd + "/n=" + std::to_string(n);
      if (wanted(cfg, "inclusions")) {
        InclusionOptions io;
        io.seed = seed_for("incl" + nt);
        if (cfg.phis.size() > 1) io.other_phi = cfg.phis[(pi + 1) % cfg.phis.size()];
        add_all(check_inclusions(rand_body("incl-K" + nt, n), rand_body("incl-L" + nt, n), phi, io));
      }
      if (wanted(cfg, "thm-outer")) {
        const ConvexBody K = rand_body("outer-self" + nt, n);
        TheoremCase tc;
        tc.label = "self-sum";
        tc.equality = true;
        tc.tolerance = 1e-9;
        const Subspace wdir(Mat(width(K).direction));
        tc.sum_frames = tc.left_frames = tc.right_frames = optimal(wdir);
        add(check_outer_theorem(K, K, phi, 1, budget_for("outer-self" + nt), tc));
        for (int i = 2; i <= n; ++i) {
          auto [A, B] = slab_cubes(n, i);
          TheoremCase sc;
          sc.label = "slab-cubes";
          sc.equality = true;
          sc.sum_frames = sc.left_frames = sc.right_frames = optimal(Subspace::coordinate(n, range(1, i)));
          add(check_outer_theorem(A, B, phi, i, budget_for("outer-slab" + nt), sc));
        }
        for (int i = 1; i <= n; ++i) {
          const std::string t = "outer-random" + nt + "/i=" + std::to_string(i);
          TheoremCase rc;
          rc.seed = seed_for(t);
          add(check_outer_theorem(rand_body(t + "/K", n), rand_body(t + "/K2", n), phi, i, budget_for(t), rc));
        }
      }
      if (wanted(cfg, "thm-inner")) {
        const ConvexBody K = rand_body("inner-self" + nt, n);
        TheoremCase tc;
        tc.label = "self-sum";
        tc.equality = true;
        add(check_inner_theorem(K, K, phi, n, budget_for("inner-self" + nt), tc));
        for (int i = 1; i < n; ++i) {
          BallPair bp = subspace_balls(n, i);
          TheoremCase bc;
          bc.label = "subspace-balls";
          bc.equality = true;
          // Both sides carry the polygon error of the balls: twice the mesh gap, scaled.
          bc.tolerance = 2.0 * std::numbers::sqrt2 * phi.half_inverse() * (2.0 * bp.gap * phi.constants().slab_radius) + 1e-6;
          bc.sum_frames = ForcedFrames{{bp.frame}, false};
          add(check_inner_theorem(bp.a, bp.b, phi, i, budget_for("inner-balls" + nt), bc));
        }
        for (int i = 1; i <= n; ++i) {
          const std::string t = "inner-random" + nt + "/i=" + std::to_string(i);
          TheoremCase rc;
          rc.seed = seed_for(t);
          add(check_inner_theorem(rand_body(t + "/K", n), rand_body(t + "/K2", n), phi, i, budget_for(t), rc));
        }
      }
      if (wanted(cfg, "no-reverse-outer")) {
        for (int i = 1; i < n; ++i) add_all(check_no_reverse(ReverseKind::outer, n, i, phi, budget_for("nro" + nt)));
        add(check_reverse_circumradius(rand_body("rev-K" + nt, n), rand_body("rev-K2" + nt, n), phi, seed_for("rev" + nt)));
      }
      if (wanted(cfg, "no-reverse-inner"))
        for (int i = 2; i <= n; ++i) add_all(check_no_reverse(ReverseKind::inner, n, i, phi, budget_for("nri" + nt)));
      if (wanted(cfg, "diff-body")) {
        for (int i = 1; i <= n; ++i) {
          const std::string it = nt + "/i=" + std::to_string(i);
          DifferenceCase rc;
          rc.seed = seed_for("diff-random" + it);
          add_all(check_difference_body(rand_body("diff-random" + it, n), phi, i, budget_for("diff-random" + it), rc));

          DifferenceCase sc;
          sc.label = "segment-plus-cube";
          sc.frames = optimal(Subspace::coordinate(n, range(1, i)));
          sc.expect_upper_equality = true;
          sc.outer_only = true;
          add_all(check_difference_body(make_slab_body(n, 1, range(i + 1, n)), phi, i, budget_for("diff-slab" + it), sc));

          DifferenceCase xc;
          xc.label = i == n ? "simplex" : "simplex-plus-cube";
          xc.frames = optimal(Subspace::coordinate(n, range(1, i)));
          xc.expect_lower_equality = true;
          xc.outer_only = true;
          add_all(check_difference_body(i == n ? intrinsic_simplex(n) : simplex_plus_cube(n, i, 100.0), phi, i,
                                        budget_for("diff-simplex" + it), xc));
        }
      }
    }
  }
  if (wanted(cfg, "minkowski")) {
    for (int n : cfg.dims) {
      const std::string nt = "/n=" + std::to_string(n);
      const ConvexBody K = rand_body("mink-K" + nt, n), K2 = rand_body("mink-K2" + nt, n);
      const ConvexBody S = minkowski_sum(K, K2);
      const std::string digest = digest_inputs("minkowski" + nt, {&K, &K2}, {}, cfg.seed);
      auto ex = [](double v) { return Interval::exact(v); };
      add(evaluate_claim("minkowski/diameter" + nt, ex(diameter(S).value), ex(diameter(K).value + diameter(K2).value),
                         Relation::le, tol::geom, digest));
      add(evaluate_claim("minkowski/width-superadditive" + nt, ex(width(S).value), ex(width(K).value + width(K2).value), Relation::ge,
                         tol::geom, digest));
      add(evaluate_claim("minkowski/circumradius" + nt, ex(circumradius(S).radius),
                         ex(circumradius(K).radius + circumradius(K2).radius), Relation::le, tol::geom, digest));
      add(evaluate_claim("minkowski/inradius-superadditive" + nt, ex(inradius(S).radius),
                         ex(inradius(K).radius + inradius(K2).radius), Relation::ge, tol::geom, digest));
    }
  }

  if (cfg.tolerance_override)
    for (VerificationResult& r : res) {
      const Interval l{r.lhs, r.lhs_lo, r.lhs_hi}, rr{r.rhs, r.rhs_lo, r.rhs_hi};
      r = evaluate_claim(r.claim_id, l, rr, r.relation, *cfg.tolerance_override, r.inputs_digest);
    }

  SuiteReport rep;
  std::stable_sort(res.begin(), res.end(), [](const auto& a, const auto& b) { return a.claim_id < b.claim_id; });
  rep.results = std::move(res);
  for (const auto& r : rep.results) {
    if (r.status == Status::pass) ++rep.passed;
    else if (r.status == Status::fail) ++rep.failed;
    else ++rep.inconclusive;
  }
  return rep;
}

std::string SuiteReport::text() const {
  std::ostringstream os;
  std::size_t w = 8;
  for (const auto& r : results) w = std::max(w, r.claim_id.size());
  auto pad = [](std::string s, std::size_t n) {
    if (s.size() < n) s.append(n - s.size(), ' ');
    return s;
  };
  os << pad("claim_id", w) << "  " << pad("status", 12) << "  " << pad("relation", 8) << "  " << pad("slack", 20) << "  "
     << pad("tolerance", 10) << "  certified\n";
  for (const auto& r : results)
    os << pad(r.claim_id, w) << "  " << pad(to_string(r.status), 12) << "  " << pad(to_string(r.relation), 8) << "  "
       << pad(format_sig(r.slack, 12), 20) << "  " << pad(format_sig(r.tolerance, 3), 10) << "  " << (r.certified ? "yes" : "no")
       << "\n";
  os << "\nsummary: total=" << results.size() << " pass=" << passed << " fail=" << failed << " inconclusive=" << inconclusive
     << "\n\n[results]\n";
  for (const auto& r : results) {
    const std::string& id = r.claim_id;
    os << id << ".status=" << to_string(r.status) << "\n"
       << id << ".relation=" << to_string(r.relation) << "\n"
       << id << ".lhs=" << format_double(r.lhs) << "\n"
       << id << ".rhs=" << format_double(r.rhs) << "\n"
       << id << ".lhs_bounds=" << format_double(r.lhs_lo) << "," << format_double(r.lhs_hi) << "\n"
       << id << ".rhs_bounds=" << format_double(r.rhs_lo) << "," << format_double(r.rhs_hi) << "\n"
       << id << ".slack=" << format_double(r.slack) << "\n"
       << id << ".tolerance=" << format_double(r.tolerance) << "\n"
       << id << ".certified=" << (r.certified ? "true" : "false") << "\n"
       << id << ".digest=" << r.inputs_digest << "\n";
  }
  return os.str();
}

}  // namespace orad
