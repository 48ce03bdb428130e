#ifndef GASDYN_DRIVER_HPP_
#define GASDYN_DRIVER_HPP_

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "gasdyn/diagnostics.hpp"
#include "gasdyn/problems.hpp"
#include "gasdyn/split2d.hpp"

namespace gasdyn {

// ---------------------------------------------------------------- naming

inline SchemeKind scheme_from_name(const std::string& s) {
  static const std::vector<std::pair<std::string, SchemeKind>> table = {
      {"lax_friedrichs", SchemeKind::LaxFriedrichs}, {"lxf", SchemeKind::LaxFriedrichs},
      {"godunov", SchemeKind::Godunov},              {"godunov_hll", SchemeKind::GodunovHLL},
      {"hll", SchemeKind::GodunovHLL},               {"richtmyer", SchemeKind::Richtmyer},
      {"maccormack", SchemeKind::MacCormack},        {"vnr", SchemeKind::VNRViscosity},
      {"muscl", SchemeKind::MUSCL},                  {"weno5", SchemeKind::WENO5}};
  for (const auto& [name, kind] : table)
    if (name == s) return kind;
  fail(Err::ConfigError,
       "unknown scheme '" + s +
           "'; valid: lax_friedrichs, godunov, godunov_hll, richtmyer, maccormack, vnr, "
           "muscl, weno5");
}

inline BoundaryKind bc_from_name(const std::string& s) {
  if (s == "transmissive") return BoundaryKind::Transmissive;
  if (s == "reflective") return BoundaryKind::Reflective;
  if (s == "periodic") return BoundaryKind::Periodic;
  fail(Err::ConfigError, "unknown bc '" + s + "'; valid: transmissive, reflective, periodic");
}

inline LimiterKind limiter_from_name(const std::string& s) {
  if (s == "minmod") return LimiterKind::Minmod;
  if (s == "vanleer") return LimiterKind::VanLeer;
  fail(Err::ConfigError, "unknown limiter '" + s + "'; valid: minmod, vanleer");
}

// ---------------------------------------------------------------- config

template <typename Scalar>
struct RunConfig {
  ProblemSpec<Scalar> spec;
  SchemeConfig<Scalar> scheme = SchemeConfig<Scalar>::of(SchemeKind::Godunov);
  Index cells = 400;
  Index cells_y = 0;  // 0: derived from the domain aspect ratio
  std::vector<Index> cells_list;
  std::vector<SchemeKind> compare_list;
  std::string out_dir = "out";
  std::vector<Scalar> snapshots;  // empty: final time only
  std::optional<Scalar> tmax;
  std::optional<BoundaryKind> bc;
  int workers = 0;  // 0: GASDYN_WORKERS env, then hardware concurrency
};

namespace detail {

inline std::vector<std::string> split_csv_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, ',')) {
    const auto a = item.find_first_not_of(" \t");
    const auto b = item.find_last_not_of(" \t");
    if (a != std::string::npos) out.push_back(item.substr(a, b - a + 1));
  }
  return out;
}

template <typename Scalar>
inline Scalar parse_number(const std::string& s, const std::string& key) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) fail(Err::ConfigError, "trailing characters in " + key + "='" + s + "'");
    return Scalar(v);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Err::ConfigError, "cannot parse number for " + key + ": '" + s + "'");
  }
}

}  // namespace detail

// Flat key = value file; '#' starts a comment; keys may repeat (block =).
inline std::vector<std::pair<std::string, std::string>> parse_config_file(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::ConfigError, "cannot open config file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (eq == std::string::npos)
      fail(Err::ConfigError, path + ":" + std::to_string(lineno) + ": expected key = value");
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    entries.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return entries;
}

// Custom problem assembled from config entries: piecewise-constant blocks
// plus the smooth advected-wave preset.
template <typename Scalar>
inline ProblemSpec<Scalar> build_custom_problem(
    const std::vector<std::pair<std::string, std::string>>& entries) {
  ProblemSpec<Scalar> spec;
  spec.name = "custom";
  spec.reference = ReferenceKind::None;

  Scalar gamma = Scalar(1.4), kappa0 = Scalar(1);
  bool isentropic = false;
  std::vector<std::vector<Scalar>> blocks;
  std::optional<std::vector<Scalar>> wave;

  for (const auto& [key, value] : entries) {
    if (key == "dimension") {
      spec.dimension = int(detail::parse_number<Scalar>(value, key));
    } else if (key == "domain") {
      const auto parts = detail::split_csv_list(value);
      if (parts.size() != 2 && parts.size() != 4)
        fail(Err::ConfigError, "domain needs x0,x1[,y0,y1]");
      spec.x0 = detail::parse_number<Scalar>(parts[0], key);
      spec.x1 = detail::parse_number<Scalar>(parts[1], key);
      if (parts.size() == 4) {
        spec.y0 = detail::parse_number<Scalar>(parts[2], key);
        spec.y1 = detail::parse_number<Scalar>(parts[3], key);
      }
    } else if (key == "tfinal" || key == "tmax") {
      spec.t_final = detail::parse_number<Scalar>(value, key);
    } else if (key == "gamma") {
      gamma = detail::parse_number<Scalar>(value, key);
    } else if (key == "kappa0") {
      kappa0 = detail::parse_number<Scalar>(value, key);
    } else if (key == "mode") {
      if (value == "isentropic") isentropic = true;
      else if (value == "full") isentropic = false;
      else fail(Err::ConfigError, "mode must be full or isentropic");
    } else if (key == "block") {
      const auto parts = detail::split_csv_list(value);
      std::vector<Scalar> b;
      for (const auto& p : parts) b.push_back(detail::parse_number<Scalar>(p, key));
      blocks.push_back(std::move(b));
    } else if (key == "wave") {
      const auto parts = detail::split_csv_list(value);
      if (parts.size() != 5) fail(Err::ConfigError, "wave needs rho0,amplitude,k,u,p");
      std::vector<Scalar> w;
      for (const auto& p : parts) w.push_back(detail::parse_number<Scalar>(p, key));
      wave = std::move(w);
    }
  }

  spec.gas = isentropic ? GasModel<Scalar>::isentropic(gamma, kappa0)
                        : GasModel<Scalar>::full_euler(gamma);
  if (!(spec.t_final > Scalar(0))) fail(Err::ConfigError, "custom problem needs tmax > 0");

  if (wave) {
    if (spec.dimension != 1) fail(Err::ConfigError, "wave preset is 1D only");
    if (isentropic) fail(Err::ConfigError, "wave preset requires the full Euler model");
    const Scalar rho0 = (*wave)[0], amp = (*wave)[1], k = (*wave)[2], u = (*wave)[3],
                 p = (*wave)[4];
    const Scalar len = spec.x1 - spec.x0;
    const Scalar x0 = spec.x0;
    auto profile = [rho0, amp, k, x0, len](Scalar x) {
      return rho0 + amp * std::sin(Scalar(2) * Scalar(EIGEN_PI) * k * (x - x0) / len);
    };
    spec.bc_x = BoundaryKind::Periodic;
    spec.reference = ReferenceKind::ExactRiemann;
    spec.init1d = [profile, u, p](Scalar x) { return PrimState<Scalar>(profile(x), u, p); };
    spec.exact = [profile, u, p, x0, len](Scalar x, Scalar t) {
      Scalar xi = x - u * t - x0;
      xi -= len * std::floor(xi / len);
      return PrimState<Scalar>(profile(x0 + xi), u, p);
    };
    return spec;
  }

  if (blocks.empty()) fail(Err::ConfigError, "custom problem needs block= or wave= entries");
  if (spec.dimension == 1) {
    for (const auto& b : blocks)
      if (b.size() != 5) fail(Err::ConfigError, "1D block needs x0,x1,rho,u,p");
    spec.init1d = [blocks](Scalar x) {
      for (auto it = blocks.rbegin(); it != blocks.rend(); ++it)
        if (x >= (*it)[0] && x < (*it)[1])
          return PrimState<Scalar>((*it)[2], (*it)[3], (*it)[4]);
      fail(Err::ConfigError, "no block covers x=" + std::to_string(double(x)));
    };
    // two abutting blocks form Riemann data with an exact reference
    if (blocks.size() == 2 && blocks[0][1] == blocks[1][0] && !isentropic) {
      spec.reference = ReferenceKind::ExactRiemann;
      spec.has_riemann_data = true;
      spec.x_jump = blocks[0][1];
      spec.wL = PrimState<Scalar>(blocks[0][2], blocks[0][3], blocks[0][4]);
      spec.wR = PrimState<Scalar>(blocks[1][2], blocks[1][3], blocks[1][4]);
    }
  } else if (spec.dimension == 2) {
    for (const auto& b : blocks)
      if (b.size() != 8) fail(Err::ConfigError, "2D block needs x0,x1,y0,y1,rho,u,v,p");
    spec.init2d = [blocks](Scalar x, Scalar y) {
      for (auto it = blocks.rbegin(); it != blocks.rend(); ++it)
        if (x >= (*it)[0] && x < (*it)[1] && y >= (*it)[2] && y < (*it)[3])
          return PrimState<Scalar>((*it)[4], (*it)[5], (*it)[6], (*it)[7]);
      fail(Err::ConfigError, "no block covers the point");
    };
  } else {
    fail(Err::ConfigError, "dimension must be 1 or 2");
  }
  return spec;
}

// ---------------------------------------------------------------- running

template <typename Scalar>
struct Evolution1D {
  Grid1D<Scalar> grid;
  RunReport<Scalar> report;
  Scalar t = 0;
  Index steps = 0;
};

template <typename Scalar>
struct Evolution2D {
  Grid2D<Scalar> grid;
  RunReport<Scalar> report;
  Scalar t = 0;
  Index steps = 0;
};

namespace detail {

template <typename Scalar>
inline std::vector<Scalar> event_times(const std::vector<Scalar>& snapshots, Scalar t_end) {
  std::vector<Scalar> ev = snapshots;
  ev.push_back(t_end);
  std::sort(ev.begin(), ev.end());
  ev.erase(std::unique(ev.begin(), ev.end()), ev.end());
  std::vector<Scalar> out;
  for (Scalar t : ev)
    if (t > Scalar(0) && t <= t_end) out.push_back(t);
  return out;
}

}  // namespace detail

// Advances a 1D grid to t_end; `on_snapshot` fires at each requested time
// (always at t_end).  Report rows carry the post-step diagnostics; the
// entropy column is evaluated only on periodic full-Euler runs.
template <typename Scalar>
inline Evolution1D<Scalar> evolve_1d(
    const GasModel<Scalar>& g, Grid1D<Scalar> grid, const SchemeConfig<Scalar>& cfg,
    Scalar t_end, const std::vector<Scalar>& snapshot_times = {},
    const std::function<void(Scalar, const Grid1D<Scalar>&)>& on_snapshot = {}) {
  cfg.validate();
  Evolution1D<Scalar> ev;
  const bool track_entropy =
      g.mode == Mode::FullEuler && grid.bc == BoundaryKind::Periodic;

  typename RunReport<Scalar>::StepRecord rec;
  rec.step = 0;
  rec.t = 0;
  rec.dt = 0;
  rec.totals = conserved_totals(grid);
  rec.entropy_valid = track_entropy;
  if (track_entropy) rec.entropy = total_entropy(g, grid);
  rec.max_speed = max_wave_speed(g, grid);
  ev.report.steps.push_back(rec);

  const std::vector<Scalar> events = detail::event_times(snapshot_times, t_end);
  std::size_t next_event = 0;
  Scalar t = 0;
  Index step = 0;
  while (next_event < events.size()) {
    const Scalar target = events[next_event];
    bool landed = false;
    Scalar dt = cfl_dt(g, grid, cfg);
    if (t + dt >= target) {
      dt = target - t;
      landed = true;
    }
    try {
      grid = step_1d(g, grid, cfg, dt);
    } catch (const Error& e) {
      throw Error(e.code(), "step " + std::to_string(step + 1) + ", t=" +
                                std::to_string(double(t)) + ": " + e.what());
    }
    ++step;
    t = landed ? target : t + dt;

    rec.step = step;
    rec.t = t;
    rec.dt = dt;
    rec.totals = conserved_totals(grid);
    rec.entropy_valid = track_entropy;
    if (track_entropy) rec.entropy = total_entropy(g, grid);
    rec.max_speed = max_wave_speed(g, grid);
    ev.report.steps.push_back(rec);

    if (landed) {
      if (on_snapshot) on_snapshot(t, grid);
      ++next_event;
    }
  }
  ev.grid = std::move(grid);
  ev.t = t;
  ev.steps = step;
  return ev;
}

// 2D analogue; Strang sweeps alternate XYX / YXY between steps.
template <typename Scalar>
inline Evolution2D<Scalar> evolve_2d(
    const GasModel<Scalar>& g, Grid2D<Scalar> grid, const SchemeConfig<Scalar>& cfg,
    Scalar t_end, const std::vector<Scalar>& snapshot_times = {},
    const std::function<void(Scalar, const Grid2D<Scalar>&)>& on_snapshot = {}) {
  cfg.validate();
  Evolution2D<Scalar> ev;

  typename RunReport<Scalar>::StepRecord rec;
  rec.step = 0;
  rec.t = 0;
  rec.dt = 0;
  rec.totals = conserved_totals(grid);
  rec.entropy_valid = false;
  rec.max_speed = max_wave_speed(g, grid);
  ev.report.steps.push_back(rec);

  const std::vector<Scalar> events = detail::event_times(snapshot_times, t_end);
  std::size_t next_event = 0;
  Scalar t = 0;
  Index step = 0;
  while (next_event < events.size()) {
    const Scalar target = events[next_event];
    bool landed = false;
    Scalar dt = cfl_dt(g, grid, cfg);
    if (t + dt >= target) {
      dt = target - t;
      landed = true;
    }
    try {
      grid = strang_split_step(g, grid, dt, cfg, Index(step % 2));
    } catch (const Error& e) {
      throw Error(e.code(), "step " + std::to_string(step + 1) + ", t=" +
                                std::to_string(double(t)) + ": " + e.what());
    }
    ++step;
    t = landed ? target : t + dt;

    rec.step = step;
    rec.t = t;
    rec.dt = dt;
    rec.totals = conserved_totals(grid);
    rec.max_speed = max_wave_speed(g, grid);
    ev.report.steps.push_back(rec);

    if (landed) {
      if (on_snapshot) on_snapshot(t, grid);
      ++next_event;
    }
  }
  ev.grid = std::move(grid);
  ev.t = t;
  ev.steps = step;
  return ev;
}

// ---------------------------------------------------------------- outputs

namespace detail {

template <typename Scalar>
inline void write_snapshot_1d(const GasModel<Scalar>& g, const Grid1D<Scalar>& grid,
                              std::ostream& os) {
  os << "x,rho,u,p,S\n";
  for (Index i = 0; i < grid.n_cells; ++i) {
    const auto q = grid.states.col(grid.ghost + i);
    const PrimState<Scalar> w = prim_from_cons(g, cons_from_state_vector(g, q, grid.dim));
    const Scalar S = g.mode == Mode::FullEuler ? entropy_S(g, w) : Scalar(0);
    os << format_g17(double(grid.cell_center(i))) << ',' << format_g17(double(w.rho)) << ','
       << format_g17(double(w.v[0])) << ',' << format_g17(double(w.p)) << ','
       << format_g17(double(S)) << '\n';
  }
}

template <typename Scalar>
inline void write_snapshot_2d(const GasModel<Scalar>& g, const Grid2D<Scalar>& grid,
                              std::ostream& os) {
  os << "x,y,rho,u,v,p,S\n";
  for (Index iy = 0; iy < grid.ny; ++iy)
    for (Index ix = 0; ix < grid.nx; ++ix) {
      const auto q = grid.states.col(grid.col(grid.ghost + ix, grid.ghost + iy));
      const PrimState<Scalar> w = prim_from_cons(g, cons_from_state_vector(g, q, Index(2)));
      const Scalar S = g.mode == Mode::FullEuler ? entropy_S(g, w) : Scalar(0);
      os << format_g17(double(grid.x_center(ix))) << ',' << format_g17(double(grid.y_center(iy)))
         << ',' << format_g17(double(w.rho)) << ',' << format_g17(double(w.v[0])) << ','
         << format_g17(double(w.v[1])) << ',' << format_g17(double(w.p)) << ','
         << format_g17(double(S)) << '\n';
    }
}

inline std::string snapshot_filename(double t) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "snap_%g.csv", t);
  return buf;
}

// Numeric-vs-reference primitive tables at cell centers (1D).
template <typename Scalar>
inline std::pair<StateArray<Scalar>, StateArray<Scalar>> prim_tables_vs_reference(
    const GasModel<Scalar>& g, const Grid1D<Scalar>& grid, const ProblemSpec<Scalar>& spec,
    Scalar t) {
  const Index rows = g.state_size(1);
  StateArray<Scalar> num(rows, grid.n_cells), ref(rows, grid.n_cells);
  for (Index i = 0; i < grid.n_cells; ++i) {
    const Scalar x = grid.cell_center(i);
    const PrimState<Scalar> w =
        prim_from_cons(g, cons_from_state_vector(g, grid.states.col(grid.ghost + i), grid.dim));
    const PrimState<Scalar> r = sample_reference(spec, x, t);
    num(0, i) = w.rho;
    num(1, i) = w.v[0];
    ref(0, i) = r.rho;
    ref(1, i) = r.v[0];
    if (g.mode == Mode::FullEuler) {
      num(2, i) = w.p;
      ref(2, i) = r.p;
    }
  }
  return {num, ref};
}

inline int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("GASDYN_WORKERS")) {
    const int w = std::atoi(env);
    if (w > 0) return w;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : int(hc);
}

// Runs `count` independent jobs on a bounded pool; output slots are
// job-scoped so scheduling cannot affect results.
inline void parallel_for_jobs(int count, int workers, const std::function<void(int)>& job) {
  const int nw = std::max(1, std::min(workers, count));
  if (nw == 1) {
    for (int i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr first_error;
  std::mutex err_mutex;
  pool.reserve(nw);
  for (int w = 0; w < nw; ++w)
    pool.emplace_back([&] {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= count) return;
        try {
          job(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace detail

template <typename Scalar>
struct RunResult {
  Scalar t_end{};
  Index steps{};
  Norms<Scalar> norms;
  bool has_norms = false;
  std::vector<Scalar> shock_positions;
  StateVec<Scalar> initial_totals, final_totals;
  Scalar entropy_total_change{};
  bool entropy_evaluated = false;
};

// `run` verb: solve one problem, write snap_*.csv, report.csv, summary.txt.
template <typename Scalar>
inline RunResult<Scalar> run_case(const RunConfig<Scalar>& cfg) {
  namespace fs = std::filesystem;
  const ProblemSpec<Scalar>& spec = cfg.spec;
  const GasModel<Scalar>& g = spec.gas;
  SchemeConfig<Scalar> scheme = cfg.scheme;
  scheme.validate();
  const Scalar t_end = cfg.tmax.value_or(spec.t_final);
  if (!(t_end > Scalar(0))) fail(Err::ConfigError, "final time must be positive");
  fs::create_directories(cfg.out_dir);

  RunResult<Scalar> result;
  std::ofstream report_file(fs::path(cfg.out_dir) / "report.csv");
  std::ofstream summary(fs::path(cfg.out_dir) / "summary.txt");

  if (spec.dimension == 1) {
    if (!spec.init1d) fail(Err::ConfigError, "problem provides no 1D initial data");
    const BoundaryKind bc = cfg.bc.value_or(spec.bc_x);
    Grid1D<Scalar> grid =
        Grid1D<Scalar>::uniform(g, cfg.cells, spec.x0, spec.x1, stencil_radius(scheme.scheme),
                                bc, spec.init1d);
    const std::function<void(Scalar, const Grid1D<Scalar>&)> sink =
        [&](Scalar t, const Grid1D<Scalar>& snap) {
          std::ofstream os(fs::path(cfg.out_dir) / detail::snapshot_filename(double(t)));
          detail::write_snapshot_1d(g, snap, os);
        };
    Evolution1D<Scalar> ev = evolve_1d(g, grid, scheme, t_end, cfg.snapshots, sink);
    ev.report.write_csv(report_file, 1, g.mode);

    result.t_end = ev.t;
    result.steps = ev.steps;
    result.initial_totals = ev.report.steps.front().totals;
    result.final_totals = ev.report.steps.back().totals;
    if (ev.report.steps.front().entropy_valid) {
      result.entropy_evaluated = true;
      result.entropy_total_change =
          ev.report.steps.back().entropy - ev.report.steps.front().entropy;
    }
    result.shock_positions = shock_locator(ev.grid);

    summary << "problem: " << spec.name << "\nscheme: " << scheme_name(scheme.scheme)
            << "\ncells: " << cfg.cells << "\nfinal_time: " << format_g17(double(ev.t))
            << "\nsteps: " << ev.steps << '\n';
    bool sampleable = spec.exact || (spec.reference == ReferenceKind::ExactRiemann &&
                                     spec.has_riemann_data);
    if (sampleable) {
      const auto [num, ref] = detail::prim_tables_vs_reference(g, ev.grid, spec, ev.t);
      result.norms = error_norms(num, ref, grid.dx);
      result.has_norms = true;
      const char* names[] = {"rho", "u", "p"};
      for (Index r = 0; r < result.norms.l1.size(); ++r)
        summary << "l1_" << names[r] << ": " << format_g17(double(result.norms.l1[r]))
                << "\nlinf_" << names[r] << ": " << format_g17(double(result.norms.linf[r]))
                << '\n';
    }
    summary << "shock_positions:";
    for (Scalar x : result.shock_positions) summary << ' ' << format_g17(double(x));
    summary << '\n';
  } else {
    if (!spec.init2d) fail(Err::ConfigError, "problem provides no 2D initial data");
    const Index ny = cfg.cells_y > 0
                         ? cfg.cells_y
                         : Index(std::lround(double(cfg.cells) * double(spec.y1 - spec.y0) /
                                             double(spec.x1 - spec.x0)));
    const BoundaryKind bcx = cfg.bc.value_or(spec.bc_x);
    const BoundaryKind bcy = cfg.bc.value_or(spec.bc_y);
    Grid2D<Scalar> grid =
        Grid2D<Scalar>::uniform(g, cfg.cells, ny, spec.x0, spec.x1, spec.y0, spec.y1,
                                stencil_radius(scheme.scheme), bcx, bcy, spec.init2d);
    const std::function<void(Scalar, const Grid2D<Scalar>&)> sink =
        [&](Scalar t, const Grid2D<Scalar>& snap) {
          std::ofstream os(fs::path(cfg.out_dir) / detail::snapshot_filename(double(t)));
          detail::write_snapshot_2d(g, snap, os);
        };
    Evolution2D<Scalar> ev = evolve_2d(g, grid, scheme, t_end, cfg.snapshots, sink);
    ev.report.write_csv(report_file, 2, g.mode);
    result.t_end = ev.t;
    result.steps = ev.steps;
    result.initial_totals = ev.report.steps.front().totals;
    result.final_totals = ev.report.steps.back().totals;
    summary << "problem: " << spec.name << "\nscheme: " << scheme_name(scheme.scheme)
            << "\ncells: " << cfg.cells << "x" << ny
            << "\nfinal_time: " << format_g17(double(ev.t)) << "\nsteps: " << ev.steps << '\n';
  }

  StateVec<Scalar> drift = result.final_totals - result.initial_totals;
  Scalar max_drift = 0;
  for (Index r = 0; r < drift.size(); ++r)
    max_drift = std::max(max_drift,
                         std::abs(drift[r]) / std::max(Scalar(1), std::abs(result.initial_totals[r])));
  summary << "max_conserved_drift_rel: " << format_g17(double(max_drift)) << '\n';
  if (result.entropy_evaluated)
    summary << "entropy_production_total: " << format_g17(double(result.entropy_total_change))
            << '\n';
  else
    summary << "entropy_production_total: not evaluated\n";
  return result;
}

// `convergence` verb: L1 density error against the exact reference over a
// resolution ladder; writes orders.csv.
template <typename Scalar>
inline OrderEstimate<Scalar> convergence_run(const RunConfig<Scalar>& cfg) {
  namespace fs = std::filesystem;
  const ProblemSpec<Scalar>& spec = cfg.spec;
  if (spec.dimension != 1) fail(Err::ConfigError, "convergence runs are 1D");
  if (cfg.cells_list.size() < 3)
    fail(Err::ConfigError, "convergence needs >= 3 resolutions (cells_list)");
  const bool sampleable =
      spec.exact || (spec.reference == ReferenceKind::ExactRiemann && spec.has_riemann_data);
  if (!sampleable) fail(Err::ConfigError, "problem has no exact reference for convergence");
  SchemeConfig<Scalar> scheme = cfg.scheme;
  scheme.validate();
  const Scalar t_end = cfg.tmax.value_or(spec.t_final);

  std::vector<Scalar> l1(cfg.cells_list.size());
  detail::parallel_for_jobs(
      int(cfg.cells_list.size()), detail::resolve_workers(cfg.workers), [&](int job) {
        const Index n = cfg.cells_list[job];
        const GasModel<Scalar>& g = spec.gas;
        Grid1D<Scalar> grid =
            Grid1D<Scalar>::uniform(g, n, spec.x0, spec.x1, stencil_radius(scheme.scheme),
                                    cfg.bc.value_or(spec.bc_x), spec.init1d);
        Evolution1D<Scalar> ev = evolve_1d(g, grid, scheme, t_end);
        const auto [num, ref] = detail::prim_tables_vs_reference(g, ev.grid, spec, ev.t);
        l1[job] = error_norms(num, ref, grid.dx).l1[0];
      });

  std::vector<std::pair<Scalar, Scalar>> levels;
  for (std::size_t k = 0; k < cfg.cells_list.size(); ++k)
    levels.emplace_back((spec.x1 - spec.x0) / Scalar(cfg.cells_list[k]), l1[k]);
  const OrderEstimate<Scalar> est = convergence_order(levels);

  fs::create_directories(cfg.out_dir);
  std::ofstream os(fs::path(cfg.out_dir) / "orders.csv");
  os << "scheme,cells,dx,l1_density,fitted_order\n";
  for (std::size_t k = 0; k < levels.size(); ++k)
    os << scheme_name(scheme.scheme) << ',' << cfg.cells_list[k] << ','
       << format_g17(double(levels[k].first)) << ',' << format_g17(double(levels[k].second))
       << ',' << format_g17(double(est.order)) << '\n';
  return est;
}

// `compare` verb: one problem, several schemes, one table.
template <typename Scalar>
inline void compare_run(const RunConfig<Scalar>& cfg) {
  namespace fs = std::filesystem;
  if (cfg.compare_list.empty()) fail(Err::ConfigError, "compare needs a scheme list");
  struct Row {
    std::string scheme;
    RunResult<Scalar> result;
  };
  std::vector<Row> rows(cfg.compare_list.size());
  detail::parallel_for_jobs(
      int(cfg.compare_list.size()), detail::resolve_workers(cfg.workers), [&](int job) {
        RunConfig<Scalar> sub = cfg;
        sub.scheme = SchemeConfig<Scalar>::of(cfg.compare_list[job]);
        sub.out_dir = (fs::path(cfg.out_dir) / scheme_name(cfg.compare_list[job])).string();
        rows[job].scheme = scheme_name(cfg.compare_list[job]);
        rows[job].result = run_case(sub);
      });

  fs::create_directories(cfg.out_dir);
  std::ofstream os(fs::path(cfg.out_dir) / "compare.csv");
  os << "scheme,cells,steps,l1_density,linf_density,max_drift_rel,entropy_production\n";
  for (const auto& row : rows) {
    const RunResult<Scalar>& r = row.result;
    Scalar drift = 0;
    for (Index k = 0; k < r.final_totals.size(); ++k)
      drift = std::max(drift, std::abs(r.final_totals[k] - r.initial_totals[k]) /
                                  std::max(Scalar(1), std::abs(r.initial_totals[k])));
    os << row.scheme << ',' << cfg.cells << ',' << r.steps << ','
       << (r.has_norms ? format_g17(double(r.norms.l1[0])) : "nan") << ','
       << (r.has_norms ? format_g17(double(r.norms.linf[0])) : "nan") << ','
       << format_g17(double(drift)) << ','
       << (r.entropy_evaluated ? format_g17(double(r.entropy_total_change)) : "nan") << '\n';
  }
}

}  // namespace gasdyn

#endif  // GASDYN_DRIVER_HPP_
