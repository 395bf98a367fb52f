#include "orad/body_io.hpp"
#include "orad/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace orad;

namespace {

RunConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot read config '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return RunConfig::from_text(ss.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orlicz sums of convex bodies and successive radii"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "orad 0.1.0");

  std::string config_path, dump_config;
  app.add_option("--config", config_path, "Run configuration file (key = value lines)");
  app.add_option("--dump-config", dump_config, "Write the effective configuration to this path");

  RunConfig cfg;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::string phi = "power:p=1";
  std::string body_a, body_b;

  auto* sum = app.add_subcommand("sum", "Support table of A +_phi B over a direction grid");
  sum->add_option("body_a", body_a, "First body file")->required();
  sum->add_option("body_b", body_b, "Second body file")->required();
  sum->add_option("phi", phi, "phi descriptor: power:p=<p> | poly:c1=<a>,c2=<b>")->capture_default_str();
  sum->add_option("--directions", cfg.sum_directions, "Grid size (0: 256 in 2-D, 1024 in 3-D, 4n^2 beyond)")
      ->capture_default_str();
  sum->add_option("-o,--out", out, "Output path (default stdout)");

  std::vector<int> indices;
  bool successive = false;
  std::optional<int> starts, iters;
  auto* radii = app.add_subcommand("radii", "Successive outer and inner radii R_i, r_i");
  radii->add_option("body", body_a, "Body file")->required();
  radii->add_option("-i,--index", indices, "Indices i (default all)")->delimiter(',');
  radii->add_flag("--successive", successive, "Sweep i = n..1 with nested frames (monotone sequences)");
  radii->add_option("--seed", seed, "Random seed (default 1)");
  radii->add_option("--starts", starts, "Random starting frames (default 64)");
  radii->add_option("--iters", iters, "Refinement sweeps per start (default 200)");
  radii->add_option("-o,--out", out, "Output path (default stdout)");

  std::string claims, phis, dims;
  std::optional<double> tolerance;
  std::optional<std::string> report;
  auto* verify = app.add_subcommand("verify", "Run the inequality suite and write the traceability report");
  verify->add_option("--claims", claims,
                     "Comma-separated families (default all): phi-class, inclusions, minkowski, thm-outer, thm-inner, "
                     "no-reverse-outer, no-reverse-inner, diff-body");
  verify->add_option("--phi", phis, "phi descriptors separated by ';' (default p in {1,1.5,2,3,10} and poly:c1=0.5,c2=0.5)");
  verify->add_option("--dims", dims, "Dimensions (default 2,3,4)");
  verify->add_option("--seed", seed, "Random seed (default 1)");
  verify->add_option("--starts", starts, "Random starting frames (default 12)");
  verify->add_option("--iters", iters, "Refinement sweeps per start (default 60)");
  verify->add_option("--tolerance", tolerance, "Override every claim tolerance (must be positive)");
  verify->add_option("--report", report, "Report path (default stdout)");

  std::optional<int> resolution;
  auto* boundary = app.add_subcommand("boundary", "Boundary samples of a body or of A +_phi B");
  boundary->add_option("body_a", body_a, "Body file")->required();
  boundary->add_option("body_b", body_b, "Second body file; given: boundary of the Orlicz sum");
  boundary->add_option("--phi", phi, "phi descriptor")->capture_default_str();
  boundary->add_option("--resolution", resolution, "Directions (default 720 in 2-D, 2000 in 3-D)");
  boundary->add_option("-o,--out", out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (!config_path.empty()) {
      const int sum_dirs = cfg.sum_directions;
      cfg = load_config(config_path);
      if (sum->count("--directions")) cfg.sum_directions = sum_dirs;
    }
    if (seed) cfg.seed = *seed;
    if (out) cfg.out = *out;
    if (resolution) cfg.boundary_resolution = *resolution;
    if (tolerance) cfg.tolerance = *tolerance;
    if (report) cfg.report = *report;
    SearchBudget& b = verify->parsed() ? cfg.verify_budget : cfg.budget;
    if (starts) b.starts = *starts;
    if (iters) b.max_iters = *iters;
    if (!claims.empty()) cfg.claims = CLI::detail::split(claims, ',');
    if (!phis.empty()) cfg.phis = CLI::detail::split(phis, ';');
    if (!dims.empty()) cfg.dims = parse_int_list(dims);
    cfg.validate();
    if (!dump_config.empty()) {
      std::ofstream f(dump_config);
      f << cfg.to_text();
    }

    if (sum->parsed()) return cmd_sum(body_a, body_b, phi, cfg);
    if (radii->parsed()) return cmd_radii(body_a, indices, successive, cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (boundary->parsed()) return cmd_boundary(body_a, body_b, phi, cfg);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return exit_parse;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return exit_domain;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_parse;
  }
  return exit_usage;
}
