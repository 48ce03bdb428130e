// Acceptance suite: every criterion runs at its stated tolerance and
// prints one PASS/FAIL line.  Exit status is the number of failures.
//
//  1  exact Riemann solver vs bisection oracle on Sod + RH residual
//  2  conservation-form totals drift, every scheme, mirrored periodic Sod
//  3  discrete Clausius: positive production on shocks; vanishing under
//     refinement on the smooth wave
//  4  Godunov shock capturing accuracy on Sod
//  5  convergence orders on the entropy wave
//  6  hyperbolicity via finite-difference Jacobians on random states
//  7  von Neumann-Richtmyer shock width and overshoot
//  8  Strang splitting: 1D reduction bitwise; no axis bias on symmetric data
//  9  bitwise-deterministic CSV outputs, including parallel runs

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gasdyn/driver.hpp"
#include "oracles.hpp"

using namespace gasdyn;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& what, double seconds) {
  std::printf("[%s] criterion %d: %s  (%.2f s)\n", ok ? "PASS" : "FAIL", id, what.c_str(),
              seconds);
  if (!ok) ++failures;
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

const GasModel<double> air = GasModel<double>::full_euler(1.4);
const PrimState<double> sod_L(1, 0, 1);
const PrimState<double> sod_R(0.125, 0, 0.1);

Grid1D<double> problem_grid(const ProblemSpec<double>& spec, Index n, SchemeKind s,
                            std::optional<BoundaryKind> bc = {}) {
  return Grid1D<double>::uniform(spec.gas, n, spec.x0, spec.x1, stencil_radius(s),
                                 bc.value_or(spec.bc_x), spec.init1d);
}

Grid1D<double> mirrored_sod(Index n, SchemeKind s) {
  return Grid1D<double>::uniform(air, n, 0.0, 1.0, stencil_radius(s), BoundaryKind::Periodic,
                                 [](double x) {
                                   const bool inner = x >= 0.25 && x < 0.75;
                                   return inner ? PrimState<double>(1, 0, 1)
                                                : PrimState<double>(0.125, 0, 0.1);
                                 });
}

// ---------------------------------------------------------------------------

void criterion_1() {
  Timer timer;
  const auto st = oracle::solve_bisection(1.4, {1, 0, 1}, {0.125, 0, 0.1});
  const RiemannSolution<double> sol = solve_exact(air, sod_L, sod_R);

  bool ok = std::abs(sol.p_star - 0.30313) <= 1e-5 && std::abs(sol.u_star - 0.92745) <= 1e-5;
  ok = ok && std::abs(sol.p_star - st.p_star) <= 1e-10 * st.p_star;
  ok = ok && std::abs(sol.u_star - st.u_star) <= 1e-10 * std::abs(st.u_star);

  const ConsState<double> star =
      cons_from_prim(air, PrimState<double>(st.rho_star_R, st.u_star, st.p_star));
  const StateVec<double> res =
      rankine_hugoniot_residual(air, st.right_speed, star, cons_from_prim(air, sod_R));
  ok = ok && res.lpNorm<Eigen::Infinity>() <= 1e-9;

  std::ostringstream what;
  what << "exact Riemann solver: p*=" << sol.p_star << " u*=" << sol.u_star
       << " |RH|=" << res.lpNorm<Eigen::Infinity>();
  report(1, ok && timer.elapsed() < 1.0, what.str(), timer.elapsed());
}

void criterion_2() {
  Timer timer;
  bool ok = true;
  std::ostringstream what;
  what << "conservation drift:";
  for (SchemeKind s :
       {SchemeKind::LaxFriedrichs, SchemeKind::Godunov, SchemeKind::GodunovHLL,
        SchemeKind::Richtmyer, SchemeKind::MacCormack, SchemeKind::VNRViscosity,
        SchemeKind::MUSCL, SchemeKind::WENO5}) {
    const SchemeConfig<double> cfg = SchemeConfig<double>::of(s);
    Grid1D<double> grid = mirrored_sod(400, s);
    const StateVec<double> before = conserved_totals(grid);
    for (int step = 0; step < 200; ++step) grid = step_1d(air, grid, cfg, cfl_dt(air, grid, cfg));
    const StateVec<double> after = conserved_totals(grid);
    double drift = 0;
    for (Index r = 0; r < before.size(); ++r)
      drift = std::max(drift,
                       std::abs(after[r] - before[r]) / std::max(1.0, std::abs(before[r])));
    ok = ok && drift <= 1e-11;
    what << ' ' << scheme_name(s) << '=' << std::scientific << drift;
  }
  report(2, ok && timer.elapsed() < 10.0, what.str(), timer.elapsed());
}

void criterion_3() {
  Timer timer;
  bool ok = true;
  std::ostringstream what;

  // shock problem: production positive every step
  for (SchemeKind s : {SchemeKind::Godunov, SchemeKind::LaxFriedrichs}) {
    const SchemeConfig<double> cfg = SchemeConfig<double>::of(s);
    Grid1D<double> grid = mirrored_sod(400, s);
    double min_prod = 1e30;
    for (int step = 0; step < 200; ++step) {
      const double dt = cfl_dt(air, grid, cfg);
      const Grid1D<double> next = step_1d(air, grid, cfg, dt);
      min_prod = std::min(min_prod, entropy_production(air, grid, next, dt));
      grid = next;
    }
    ok = ok && min_prod >= -1e-10;
    what << scheme_name(s) << " min_step_production=" << std::scientific << min_prod << "; ";
  }

  // smooth wave: the per-step production diagnostic vanishes under
  // refinement at first order or better (the run total saturates toward
  // order one from below and is reported, not gated)
  const ProblemSpec<double> wave = build<double>("entropy_wave");
  const SchemeConfig<double> cfg = SchemeConfig<double>::of(SchemeKind::Godunov);
  std::vector<std::pair<double, double>> levels;
  for (Index n : {50, 100, 200}) {
    Grid1D<double> grid = problem_grid(wave, n, SchemeKind::Godunov);
    double t = 0, max_step_prod = 0;
    while (t < 1.0 - 1e-14) {
      const double dt = std::min(cfl_dt(air, grid, cfg), 1.0 - t);
      const Grid1D<double> next = step_1d(air, grid, cfg, dt);
      max_step_prod = std::max(max_step_prod, std::abs(entropy_production(air, grid, next, dt)));
      grid = next;
      t += dt;
    }
    levels.emplace_back(1.0 / double(n), max_step_prod);
  }
  const OrderEstimate<double> est = convergence_order(levels);
  ok = ok && est.order >= 1.0;
  what << "smooth per-step production order=" << est.order;
  report(3, ok && timer.elapsed() < 10.0, what.str(), timer.elapsed());
}

void criterion_4() {
  Timer timer;
  const ProblemSpec<double> sod = build<double>("sod");
  const SchemeConfig<double> cfg = SchemeConfig<double>::of(SchemeKind::Godunov);
  Grid1D<double> grid = problem_grid(sod, 400, SchemeKind::Godunov);
  double t = 0;
  while (t < 0.2 - 1e-14) {
    const double dt = std::min(cfl_dt(air, grid, cfg), 0.2 - t);
    grid = step_1d(air, grid, cfg, dt);
    t += dt;
  }

  double l1 = 0;
  for (Index i = 0; i < grid.n_cells; ++i)
    l1 += std::abs(grid.states(0, grid.ghost + i) -
                   sample_reference(sod, grid.cell_center(i), 0.2).rho);
  l1 *= grid.dx;

  const auto st = oracle::solve_bisection(1.4, {1, 0, 1}, {0.125, 0, 0.1});
  const double exact_pos = 0.5 + st.right_speed * 0.2;
  const std::vector<double> pos = shock_locator(grid);
  double best = 1e30;
  for (double x : pos) best = std::min(best, std::abs(x - exact_pos));

  const bool ok = l1 < 0.01 && best <= 2.0 * grid.dx;
  std::ostringstream what;
  what << "godunov Sod: L1(rho)=" << l1 << " shock_pos_err=" << best << " (dx=" << grid.dx
       << ")";
  report(4, ok && timer.elapsed() < 5.0, what.str(), timer.elapsed());
}

double entropy_wave_l1(SchemeKind s, Index n, double dt_exponent) {
  const ProblemSpec<double> wave = build<double>("entropy_wave");
  SchemeConfig<double> cfg = SchemeConfig<double>::of(s);
  cfg.dt_exponent = dt_exponent;
  Grid1D<double> grid = problem_grid(wave, n, s);
  double t = 0;
  while (t < 1.0 - 1e-14) {
    const double dt = std::min(cfl_dt(air, grid, cfg), 1.0 - t);
    grid = step_1d(air, grid, cfg, dt);
    t += dt;
  }
  double l1 = 0;
  for (Index i = 0; i < grid.n_cells; ++i)
    l1 += std::abs(grid.states(0, grid.ghost + i) -
                   sample_reference(wave, grid.cell_center(i), 1.0).rho);
  return l1 * grid.dx;
}

void criterion_5() {
  Timer timer;
  bool ok = true;
  std::ostringstream what;
  what << "orders:";

  auto fit = [&](SchemeKind s, std::vector<Index> cells, double dtexp) {
    std::vector<std::pair<double, double>> levels;
    for (Index n : cells) levels.emplace_back(1.0 / double(n), entropy_wave_l1(s, n, dtexp));
    return convergence_order(levels).order;
  };

  const double o_lxf = fit(SchemeKind::LaxFriedrichs, {50, 100, 200, 400}, 1.0);
  ok = ok && o_lxf >= 0.7 && o_lxf <= 1.1;
  what << " lxf=" << o_lxf;

  for (SchemeKind s : {SchemeKind::Richtmyer, SchemeKind::MacCormack, SchemeKind::MUSCL}) {
    const double o = fit(s, {50, 100, 200, 400}, 1.0);
    ok = ok && o >= 1.8 && o <= 2.2;
    what << ' ' << scheme_name(s) << '=' << o;
  }

  // dt ~ dx^(5/3) makes the O(dt^3) time error track the O(dx^5) spatial
  // error; 400 cells would sit near the roundoff floor, so the ladder
  // stops at 200
  const double o_weno = fit(SchemeKind::WENO5, {50, 100, 200}, 5.0 / 3.0);
  ok = ok && o_weno >= 4.0;
  what << " weno5=" << o_weno;

  report(5, ok && timer.elapsed() < 60.0, what.str(), timer.elapsed());
}

void criterion_6() {
  Timer timer;
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> logu(-1.0, 1.0);
  std::uniform_real_distribution<double> vel(-3.0, 3.0);
  const GasModel<double> iso = GasModel<double>::isentropic(1.4, 1.0);

  bool ok = true;
  double worst_imag = 0, worst_mismatch = 0;
  for (int k = 0; k < 1000; ++k) {
    const int dim = 1 + (k % 2);
    PrimState<double> w;
    w.rho = std::pow(10.0, logu(rng));
    w.p = std::pow(10.0, logu(rng));
    w.v.resize(dim);
    for (int j = 0; j < dim; ++j) w.v[j] = vel(rng);
    const Direction<double> dir = Direction<double>::axis(dim, k % dim);
    const double scale = 1.0 + std::abs(w.v[0]) + sound_speed(air, w);

    const auto rep_full = hyperbolicity_check(air, cons_from_prim(air, w), dir);
    const auto rep_iso = hyperbolicity_check(iso, cons_from_prim(iso, w), dir);
    worst_imag = std::max(worst_imag, std::max(rep_full.max_imag, rep_iso.max_imag) / scale);
    worst_mismatch =
        std::max(worst_mismatch, std::max(rep_full.max_mismatch, rep_iso.max_mismatch) / scale);
  }
  ok = worst_imag <= 1e-7 && worst_mismatch <= 1e-5;
  std::ostringstream what;
  what << "hyperbolicity (1000 states, both modes, d=1,2): max|Im|/scale=" << std::scientific
       << worst_imag << " max|num-analytic|/scale=" << worst_mismatch;
  report(6, ok && timer.elapsed() < 10.0, what.str(), timer.elapsed());
}

void criterion_7() {
  Timer timer;
  const ProblemSpec<double> sod = build<double>("sod");
  SchemeConfig<double> cfg = SchemeConfig<double>::of(SchemeKind::VNRViscosity);
  cfg.q_visc_coeff = 2.0;
  Grid1D<double> grid = problem_grid(sod, 400, SchemeKind::VNRViscosity);
  double t = 0;
  while (t < 0.2 - 1e-14) {
    const double dt = std::min(cfl_dt(air, grid, cfg), 0.2 - t);
    grid = step_1d(air, grid, cfg, dt);
    t += dt;
  }

  const auto st = oracle::solve_bisection(1.4, {1, 0, 1}, {0.125, 0, 0.1});
  const double x_contact = 0.5 + st.u_star * 0.2;
  const double x_shock = 0.5 + st.right_speed * 0.2;
  const double jump = st.rho_star_R - 0.125;

  // overshoot: post-shock plateau, clear of the smeared contact
  double max_rho = 0;
  for (Index i = 0; i < grid.n_cells; ++i) {
    const double x = grid.cell_center(i);
    if (x > x_contact + 20.0 * grid.dx && x < x_shock)
      max_rho = std::max(max_rho, grid.states(0, grid.ghost + i));
  }
  const double overshoot = (max_rho - st.rho_star_R) / jump;

  // 10-90% density rise width across the shock, linearly interpolated
  const double lo = 0.125 + 0.1 * jump, hi = 0.125 + 0.9 * jump;
  double x_lo = -1, x_hi = -1;
  for (Index i = grid.n_cells - 2; i > 0; --i) {
    const double xl = grid.cell_center(i), rl = grid.states(0, grid.ghost + i);
    const double rr = grid.states(0, grid.ghost + i + 1);
    if (std::abs(xl - x_shock) > 0.05) continue;
    if (x_hi < 0 && rl >= hi && rr < hi)
      x_hi = xl + (hi - rl) / (rr - rl) * grid.dx;
    if (x_lo < 0 && rl >= lo && rr < lo)
      x_lo = xl + (lo - rl) / (rr - rl) * grid.dx;
    if (x_lo > 0 && x_hi > 0) break;
  }
  const double width_cells = (x_lo > 0 && x_hi > 0) ? (x_lo - x_hi) / grid.dx : 1e30;

  const bool ok = overshoot <= 0.01 && width_cells <= 6.0;
  std::ostringstream what;
  what << "vnr C=2: overshoot=" << overshoot * 100 << "% of jump, 10-90 width=" << width_cells
       << " cells";
  report(7, ok && timer.elapsed() < 5.0, what.str(), timer.elapsed());
}

void criterion_8() {
  Timer timer;
  const SchemeConfig<double> cfg = SchemeConfig<double>::of(SchemeKind::Godunov);
  bool ok = true;
  std::ostringstream what;

  // (a) y-independent Sod on 200x8 reproduces the equivalent 1D split
  // sequence row-for-row bitwise
  {
    auto rows = [](double x, double) {
      return x < 0.5 ? PrimState<double>(1, 0, 0, 1) : PrimState<double>(0.125, 0, 0, 0.1);
    };
    Grid2D<double> grid =
        Grid2D<double>::uniform(air, 200, 8, 0.0, 1.0, 0.0, 0.04, 1, BoundaryKind::Transmissive,
                                BoundaryKind::Transmissive, rows);
    Grid1D<double> lane;
    lane.n_cells = 200;
    lane.dx = grid.dx;
    lane.ghost = 1;
    lane.bc = BoundaryKind::Transmissive;
    lane.dim = 2;
    lane.states.resize(4, 202);
    for (Index ix = 0; ix < 200; ++ix)
      lane.states.col(1 + ix) = grid.states.col(grid.col(grid.ghost + ix, grid.ghost + 4));

    bool bitwise = true;
    for (int step = 0; step < 40; ++step) {
      const double dt = cfl_dt(air, grid, cfg);
      bitwise = bitwise && dt == cfl_dt(air, lane, cfg);
      grid = strang_split_step(air, grid, dt, cfg, Index(step % 2));
      if (step % 2 == 0) {
        lane = step_1d(air, lane, cfg, 0.5 * dt);
        lane = step_1d(air, lane, cfg, 0.5 * dt);
      } else {
        lane = step_1d(air, lane, cfg, dt);
      }
    }
    for (Index iy = 0; iy < 8 && bitwise; ++iy)
      for (Index ix = 0; ix < 200 && bitwise; ++ix) {
        const auto a = grid.states.col(grid.col(grid.ghost + ix, grid.ghost + iy));
        const auto b = lane.states.col(1 + ix);
        for (Index r = 0; r < 4; ++r) bitwise = bitwise && a[r] == b[r];
      }
    ok = ok && bitwise;
    what << "1D reduction bitwise=" << (bitwise ? "yes" : "NO");
  }

  // (b) symmetric quadrant data, 20 steps, XYYX alternation: the run and
  // the transpose of the mirrored-phase run agree to 1e-10 (axis bias);
  // the raw transpose defect of the state is the splitting commutator and
  // is reported for reference
  {
    auto quadrant = [](double x, double y) {
      const bool lo_x = x < 0.5, lo_y = y < 0.5;
      if (lo_x == lo_y) return PrimState<double>(1, 0, 0, 1);
      return PrimState<double>(0.125, 0, 0, 0.1);
    };
    Grid2D<double> a =
        Grid2D<double>::uniform(air, 64, 64, 0, 1, 0, 1, 1, BoundaryKind::Transmissive,
                                BoundaryKind::Transmissive, quadrant);
    Grid2D<double> b = a;
    for (int step = 0; step < 20; ++step) {
      const double dt = cfl_dt(air, a, cfg);
      a = strang_split_step(air, a, dt, cfg, Index(step % 2));
      b = strang_split_step(air, b, dt, cfg, Index((step + 1) % 2));
    }
    double bias = 0, defect = 0;
    for (Index iy = 0; iy < 64; ++iy)
      for (Index ix = 0; ix < 64; ++ix) {
        StateVec<double> qa = a.states.col(a.col(a.ghost + ix, a.ghost + iy));
        StateVec<double> qb = b.states.col(b.col(b.ghost + iy, b.ghost + ix));
        std::swap(qb[1], qb[2]);  // transpose of the mirrored-phase run
        bias = std::max(bias, (qa - qb).lpNorm<Eigen::Infinity>());
        StateVec<double> qat = a.states.col(a.col(a.ghost + iy, a.ghost + ix));
        std::swap(qat[1], qat[2]);
        defect = std::max(defect, (qa - qat).lpNorm<Eigen::Infinity>());
      }
    ok = ok && bias <= 1e-10;
    what << ", axis_bias=" << std::scientific << bias << " (splitting transpose defect "
         << defect << ")";
  }
  report(8, ok && timer.elapsed() < 30.0, what.str(), timer.elapsed());
}

void criterion_9() {
  Timer timer;
  const fs::path base = fs::temp_directory_path() / "gasdyn_acceptance_det";
  fs::remove_all(base);

  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };

  bool ok = true;

  // run verb twice
  for (int rep = 0; rep < 2; ++rep) {
    RunConfig<double> cfg;
    cfg.spec = build<double>("sod");
    cfg.scheme = SchemeConfig<double>::of(SchemeKind::Godunov);
    cfg.cells = 400;
    cfg.snapshots = {0.1};
    cfg.out_dir = (base / ("run" + std::to_string(rep))).string();
    run_case(cfg);
  }
  ok = ok && slurp(base / "run0" / "report.csv") == slurp(base / "run1" / "report.csv");
  ok = ok && slurp(base / "run0" / "snap_0.1.csv") == slurp(base / "run1" / "snap_0.1.csv");
  ok = ok && slurp(base / "run0" / "snap_0.2.csv") == slurp(base / "run1" / "snap_0.2.csv");
  ok = ok && slurp(base / "run0" / "summary.txt") == slurp(base / "run1" / "summary.txt");

  // convergence matrix twice, serial vs maximal parallelism
  for (int rep = 0; rep < 2; ++rep) {
    RunConfig<double> cfg;
    cfg.spec = build<double>("entropy_wave");
    cfg.scheme = SchemeConfig<double>::of(SchemeKind::MUSCL);
    cfg.cells_list = {50, 100, 200};
    cfg.workers = rep == 0 ? 1 : 8;
    cfg.out_dir = (base / ("conv" + std::to_string(rep))).string();
    convergence_run(cfg);
  }
  ok = ok && slurp(base / "conv0" / "orders.csv") == slurp(base / "conv1" / "orders.csv");

  report(9, ok, "bitwise-identical CSVs across reruns and worker counts", timer.elapsed());
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  if (failures == 0) std::printf("all acceptance criteria passed\n");
  return failures;
}
