// Batch runner for the gasdyn solver suite.
//
// Verbs:
//   gasdyn run         --problem sod --scheme godunov --cells 400 --out out/
//   gasdyn convergence --problem entropy_wave --scheme muscl --cells-list 50,100,200,400
//   gasdyn compare     --problem sod --schemes godunov,muscl,weno5 --cells 400
//
// Exit codes: 0 success, 1 configuration error, 2 numerical abort.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gasdyn/driver.hpp"

namespace {

using Real = double;

struct CliOptions {
  std::string config_path;
  std::string problem;
  std::string scheme;
  std::string limiter;
  std::string bc;
  std::string flux;
  std::string snapshots;
  std::string cells_list;
  std::string schemes;
  std::string out_dir;
  long cells = -1;
  long cells_y = -1;
  double cfl = -1;
  double tmax = -1;
  double qvisc = -1;
  double qlin = -1;
  double dtexp = -1;
  double weno_eps = -1;
  int workers = 0;
};

// Config file first, then flag overrides; flags win.
gasdyn::RunConfig<Real> assemble(const CliOptions& opt) {
  using namespace gasdyn;
  std::vector<std::pair<std::string, std::string>> entries;
  if (!opt.config_path.empty()) entries = parse_config_file(opt.config_path);

  auto entry = [&](const std::string& key) -> const std::string* {
    const std::string* found = nullptr;
    for (const auto& [k, v] : entries)
      if (k == key) found = &v;
    return found;
  };

  RunConfig<Real> cfg;

  std::string problem = opt.problem;
  if (problem.empty())
    if (const auto* v = entry("problem")) problem = *v;
  if (problem.empty()) problem = "sod";
  cfg.spec = problem == "custom" ? build_custom_problem<Real>(entries) : build<Real>(problem);

  std::string scheme = opt.scheme;
  if (scheme.empty())
    if (const auto* v = entry("scheme")) scheme = *v;
  if (scheme.empty()) scheme = "godunov";
  cfg.scheme = SchemeConfig<Real>::of(scheme_from_name(scheme));

  auto number = [&](const std::string& key, double flag_value, auto apply) {
    if (flag_value >= 0) {
      apply(Real(flag_value));
    } else if (const auto* v = entry(key)) {
      apply(detail::parse_number<Real>(*v, key));
    }
  };
  number("cfl", opt.cfl, [&](Real v) { cfg.scheme.cfl = v; });
  number("qvisc", opt.qvisc, [&](Real v) { cfg.scheme.q_visc_coeff = v; });
  number("qlin", opt.qlin, [&](Real v) { cfg.scheme.q_lin_coeff = v; });
  number("dtexp", opt.dtexp, [&](Real v) { cfg.scheme.dt_exponent = v; });
  number("weno_eps", opt.weno_eps, [&](Real v) { cfg.scheme.weno_eps = v; });
  number("tmax", opt.tmax, [&](Real v) { cfg.tmax = v; });
  number("cells", double(opt.cells), [&](Real v) { cfg.cells = Index(v); });
  number("cells_y", double(opt.cells_y), [&](Real v) { cfg.cells_y = Index(v); });

  std::string limiter = opt.limiter;
  if (limiter.empty())
    if (const auto* v = entry("limiter")) limiter = *v;
  if (!limiter.empty()) cfg.scheme.limiter = limiter_from_name(limiter);

  std::string flux = opt.flux;
  if (flux.empty())
    if (const auto* v = entry("flux")) flux = *v;
  if (!flux.empty()) {
    if (flux == "exact") cfg.scheme.godunov_flux = FluxKind::Exact;
    else if (flux == "hll") cfg.scheme.godunov_flux = FluxKind::HLL;
    else fail(Err::ConfigError, "unknown flux '" + flux + "'; valid: exact, hll");
  }

  std::string bc = opt.bc;
  if (bc.empty())
    if (const auto* v = entry("bc")) bc = *v;
  if (!bc.empty()) cfg.bc = bc_from_name(bc);

  std::string out = opt.out_dir;
  if (out.empty())
    if (const auto* v = entry("out")) out = *v;
  if (!out.empty()) cfg.out_dir = out;

  std::string snapshots = opt.snapshots;
  if (snapshots.empty())
    if (const auto* v = entry("snapshots")) snapshots = *v;
  for (const auto& s : detail::split_csv_list(snapshots))
    cfg.snapshots.push_back(detail::parse_number<Real>(s, "snapshots"));

  std::string cells_list = opt.cells_list;
  if (cells_list.empty())
    if (const auto* v = entry("cells_list")) cells_list = *v;
  for (const auto& s : detail::split_csv_list(cells_list))
    cfg.cells_list.push_back(Index(detail::parse_number<Real>(s, "cells_list")));

  std::string schemes = opt.schemes;
  if (schemes.empty())
    if (const auto* v = entry("schemes")) schemes = *v;
  for (const auto& s : detail::split_csv_list(schemes))
    cfg.compare_list.push_back(scheme_from_name(s));

  cfg.workers = opt.workers;
  if (opt.workers == 0)
    if (const auto* v = entry("workers"))
      cfg.workers = int(detail::parse_number<Real>(*v, "workers"));

  // snapshot times must fall inside the run
  const Real t_end = cfg.tmax.value_or(cfg.spec.t_final);
  for (Real t : cfg.snapshots)
    if (t < 0 || t > t_end)
      fail(Err::ConfigError, "snapshot time outside [0, tmax]");
  return cfg;
}

void add_common_flags(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--config", opt.config_path, "flat key=value config file");
  cmd->add_option("--problem", opt.problem, "catalog problem name or 'custom'");
  cmd->add_option("--scheme", opt.scheme, "scheme name");
  cmd->add_option("--cells", opt.cells, "cell count (x)");
  cmd->add_option("--cells-y", opt.cells_y, "cell count (y, 2D)");
  cmd->add_option("--cfl", opt.cfl, "CFL number in (0,1)");
  cmd->add_option("--tmax", opt.tmax, "final time override");
  cmd->add_option("--out", opt.out_dir, "output directory");
  cmd->add_option("--limiter", opt.limiter, "muscl limiter: minmod|vanleer");
  cmd->add_option("--qvisc", opt.qvisc, "VNR quadratic viscosity coefficient");
  cmd->add_option("--qlin", opt.qlin, "VNR linear viscosity coefficient");
  cmd->add_option("--bc", opt.bc, "boundary override: transmissive|reflective|periodic");
  cmd->add_option("--flux", opt.flux, "godunov flux: exact|hll");
  cmd->add_option("--snapshots", opt.snapshots, "comma list of snapshot times");
  cmd->add_option("--dtexp", opt.dtexp, "dt = cfl dx^e / max speed exponent");
  cmd->add_option("--weno-eps", opt.weno_eps, "WENO smoothness epsilon");
  cmd->add_option("--workers", opt.workers, "parallel case limit (env GASDYN_WORKERS)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-volume Euler solver suite"};
  app.require_subcommand(1);

  CliOptions opt;
  CLI::App* cmd_run = app.add_subcommand("run", "solve one problem and write CSV outputs");
  CLI::App* cmd_conv =
      app.add_subcommand("convergence", "refinement study against the exact reference");
  CLI::App* cmd_cmp = app.add_subcommand("compare", "multi-scheme table on one problem");
  add_common_flags(cmd_run, opt);
  add_common_flags(cmd_conv, opt);
  add_common_flags(cmd_cmp, opt);
  cmd_conv->add_option("--cells-list", opt.cells_list, "comma list of resolutions (>= 3)");
  cmd_cmp->add_option("--schemes", opt.schemes, "comma list of schemes to compare");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    const gasdyn::RunConfig<Real> cfg = assemble(opt);
    if (cmd_run->parsed()) {
      gasdyn::run_case(cfg);
    } else if (cmd_conv->parsed()) {
      const auto est = gasdyn::convergence_run(cfg);
      std::printf("fitted order: %.3f%s\n", double(est.order),
                  est.monotone ? "" : " (non-monotone errors)");
    } else if (cmd_cmp->parsed()) {
      gasdyn::compare_run(cfg);
    }
  } catch (const gasdyn::Error& e) {
    const bool config_class = e.code() == gasdyn::Err::ConfigError ||
                              e.code() == gasdyn::Err::UnknownProblem ||
                              e.code() == gasdyn::Err::NoReference;
    std::fprintf(stderr, "gasdyn: %s\n", e.what());
    return config_class ? 1 : 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "gasdyn: %s\n", e.what());
    return 2;
  }
  return 0;
}
