#include "orad/cli.hpp"

#include "orad/body_io.hpp"
#include "orad/directions.hpp"
#include "orad/orlicz.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace orad {

namespace {

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path + "'");
  f << text;
}

std::string join(const std::vector<std::string>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + v[k];
  return s;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

std::vector<std::string> split(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);)
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  return s.substr(a, s.find_last_not_of(" \t\r") - a + 1);
}

int parse_int(const std::string& key, const std::string& v) {
  const double d = parse_number(v);
  if (d != static_cast<int>(d)) throw ParseError("config key '" + key + "' needs an integer");
  return static_cast<int>(d);
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const unsigned long long x = std::stoull(v, &used);
    if (used != v.size()) throw ParseError("");
    return x;
  } catch (const std::exception&) {
    throw ParseError("config key '" + key + "' needs an unsigned integer");
  }
}

void budget_text(std::ostringstream& os, const std::string& prefix, const SearchBudget& b) {
  os << prefix << "starts = " << b.starts << "\n"
     << prefix << "max_iters = " << b.max_iters << "\n"
     << prefix << "step_tol = " << format_double(b.step_tol) << "\n"
     << prefix << "angles = " << b.angles << "\n"
     << prefix << "refine_top = " << b.refine_top << "\n"
     << prefix << "coordinate_starts = " << (b.coordinate_starts ? "true" : "false") << "\n";
}

bool set_budget(SearchBudget& b, const std::string& field, const std::string& key, const std::string& v) {
  if (field == "starts") b.starts = parse_int(key, v);
  else if (field == "max_iters") b.max_iters = parse_int(key, v);
  else if (field == "step_tol") b.step_tol = parse_number(v);
  else if (field == "angles") b.angles = parse_int(key, v);
  else if (field == "refine_top") b.refine_top = parse_int(key, v);
  else if (field == "coordinate_starts") {
    if (v != "true" && v != "false") throw ParseError("config key '" + key + "' needs true or false");
    b.coordinate_starts = v == "true";
  } else return false;
  return true;
}

void check_budget(const SearchBudget& b, const std::string& name) {
  if (b.starts <= 0 || b.max_iters <= 0 || b.angles <= 0 || b.refine_top <= 0 || !(b.step_tol > 0))
    throw DomainError(name + " fields must be positive");
}

}  // namespace

void RunConfig::validate() const {
  check_budget(budget, "budget");
  check_budget(verify_budget, "verify budget");
  if (tolerance && !(*tolerance > 0)) throw DomainError("tolerance must be positive");
  if (sum_directions < 0 || boundary_resolution < 0) throw DomainError("grid sizes must be positive");
}

std::string RunConfig::to_text() const {
  std::ostringstream os;
  os << "seed = " << seed << "\n"
     << "sum_directions = " << sum_directions << "\n"
     << "boundary_resolution = " << boundary_resolution << "\n";
  budget_text(os, "budget.", budget);
  budget_text(os, "verify.", verify_budget);
  os << "tolerance = " << (tolerance ? format_double(*tolerance) : "default") << "\n"
     << "claims = " << join(claims) << "\n"
     << "phis = " << join(phis, ";") << "\n"
     << "dims = " << join(dims) << "\n"
     << "out = " << out << "\n"
     << "report = " << report << "\n";
  return os.str();
}

RunConfig RunConfig::from_text(const std::string& text) {
  RunConfig c;
  std::istringstream is(text);
  int lineno = 0;
  for (std::string line; std::getline(is, line);) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq)), v = trim(line.substr(eq + 1));
    if (key == "seed") c.seed = parse_u64(key, v);
    else if (key == "sum_directions") c.sum_directions = parse_int(key, v);
    else if (key == "boundary_resolution") c.boundary_resolution = parse_int(key, v);
    else if (key.rfind("budget.", 0) == 0 && set_budget(c.budget, key.substr(7), key, v)) {
    } else if (key.rfind("verify.", 0) == 0 && set_budget(c.verify_budget, key.substr(7), key, v)) {
    } else if (key == "tolerance") c.tolerance = v == "default" ? std::nullopt : std::optional<double>(parse_number(v));
    else if (key == "claims") c.claims = split(v);
    else if (key == "phis") c.phis = split(v, ';');
    else if (key == "dims") c.dims = v.empty() ? std::vector<int>{} : parse_int_list(v);
    else if (key == "out") c.out = v;
    else if (key == "report") c.report = v;
    else throw ParseError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  return c;
}

int default_boundary_resolution(int dim) {
  if (dim == 2) return 720;
  if (dim == 3) return 2000;
  return default_direction_grid(dim).cols();
}

std::string support_table_text(const Mat& directions, const Vec& values) {
  std::ostringstream os;
  const int n = static_cast<int>(directions.rows());
  os << "#";
  for (int k = 1; k <= n; ++k) os << " u" << k;
  os << " h\n";
  for (Eigen::Index j = 0; j < directions.cols(); ++j) {
    for (int k = 0; k < n; ++k) os << format_double(directions(k, j)) << " ";
    os << format_double(values(j)) << "\n";
  }
  return os.str();
}

std::string radii_rows_text(const std::vector<RadiiReport>& outer, const std::vector<RadiiReport>& inner) {
  std::ostringstream os;
  os << "# radius i value lower upper bound_kind samples frame\n";
  auto rows = [&os](const std::string& name, const std::vector<RadiiReport>& reps) {
    for (const RadiiReport& r : reps) {
      os << name << " " << r.i << " " << format_double(r.value) << " " << format_double(r.lower) << " "
         << format_double(r.upper) << " " << to_string(r.bound_kind) << " " << r.samples_used << " ";
      const Mat& F = r.subspace.frame();
      for (Eigen::Index c = 0; c < F.cols(); ++c)
        for (Eigen::Index k = 0; k < F.rows(); ++k) os << (c || k ? "," : "") << format_double(F(k, c));
      os << "\n";
    }
  };
  rows("outer", outer);
  rows("inner", inner);
  return os.str();
}

std::string boundary_text(const Mat& points, bool closed) {
  std::ostringstream os;
  auto row = [&](Eigen::Index j) {
    for (Eigen::Index k = 0; k < points.rows(); ++k) os << (k ? " " : "") << format_double(points(k, j));
    os << "\n";
  };
  for (Eigen::Index j = 0; j < points.cols(); ++j) row(j);
  if (closed && points.cols() > 0) row(0);
  return os.str();
}

int cmd_sum(const std::string& body_a, const std::string& body_b, const std::string& phi, const RunConfig& cfg) {
  cfg.validate();
  const OrliczSumBody S = orlicz_sum(load_body(body_a), load_body(body_b), parse_phi(phi));
  const int n = S.dimension();
  const Mat dirs = cfg.sum_directions > 0 ? direction_grid(n, cfg.sum_directions) : default_direction_grid(n);
  write_output(cfg.out, support_table_text(dirs, S.support_table(dirs)));
  return exit_ok;
}

int cmd_radii(const std::string& body, const std::vector<int>& indices, bool successive, const RunConfig& cfg) {
  cfg.validate();
  const ConvexBody K = load_body(body);
  SearchBudget b = cfg.budget;
  b.seed = cfg.seed;
  std::vector<RadiiReport> outer, inner;
  if (successive) {
    const RadiiSweep sw = successive_radii(K, b);
    outer = sw.outer;
    inner = sw.inner;
  } else {
    std::vector<int> is = indices;
    if (is.empty())
      for (int i = 1; i <= K.dimension(); ++i) is.push_back(i);
    for (int i : is) {
      outer.push_back(successive_outer_radius(K, i, b));
      inner.push_back(successive_inner_radius(K, i, b));
    }
  }
  write_output(cfg.out, radii_rows_text(outer, inner));
  return exit_ok;
}

int cmd_verify(const RunConfig& cfg) {
  cfg.validate();
  SuiteConfig sc;
  sc.claims = cfg.claims;
  if (!cfg.phis.empty()) {
    sc.phis.clear();
    for (const std::string& d : cfg.phis) sc.phis.push_back(parse_phi(d));
  }
  sc.dims = cfg.dims;
  sc.seed = cfg.seed;
  sc.budget = cfg.verify_budget;
  sc.tolerance_override = cfg.tolerance;
  const SuiteReport rep = run_suite(sc);
  const std::string text = rep.text();
  write_output(cfg.report.empty() ? cfg.out : cfg.report, text);
  if (!cfg.report.empty() && cfg.report != "-")
    std::cout << "pass=" << rep.passed << " fail=" << rep.failed << " inconclusive=" << rep.inconclusive << "\n";
  return rep.ok() ? exit_ok : exit_verify_failed;
}

int cmd_boundary(const std::string& body_a, const std::string& body_b, const std::string& phi, const RunConfig& cfg) {
  cfg.validate();
  const ConvexBody A = load_body(body_a);
  std::optional<OrliczSumBody> S;
  if (!body_b.empty()) S.emplace(orlicz_sum(A, load_body(body_b), parse_phi(phi)));
  const ConvexBody& body = S ? S->as_body() : A;
  const int n = body.dimension();
  const int res = cfg.boundary_resolution > 0 ? cfg.boundary_resolution : default_boundary_resolution(n);
  const Mat dirs = direction_grid(n, res);
  Mat pts(n, dirs.cols());
  for (Eigen::Index k = 0; k < dirs.cols(); ++k) pts.col(k) = body.touching_point(dirs.col(k));
  write_output(cfg.out, boundary_text(pts, n == 2));
  return exit_ok;
}

}  // namespace orad
