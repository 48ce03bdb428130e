#ifndef GASDYN_DIAGNOSTICS_HPP_
#define GASDYN_DIAGNOSTICS_HPP_

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "gasdyn/grid.hpp"

namespace gasdyn {

namespace detail {

// Fixed pairwise summation tree; reported digits are independent of any
// permitted parallel scheduling.
template <typename Scalar, typename Fetch>
inline Scalar pairwise_sum(Index lo, Index hi, const Fetch& fetch) {
  if (hi - lo <= 8) {
    Scalar s = Scalar(0);
    for (Index i = lo; i < hi; ++i) s += fetch(i);
    return s;
  }
  const Index mid = lo + (hi - lo) / 2;
  return pairwise_sum<Scalar>(lo, mid, fetch) + pairwise_sum<Scalar>(mid, hi, fetch);
}

}  // namespace detail

// Sum of cell states times cell volume, one total per conserved component.
template <typename Scalar>
inline StateVec<Scalar> conserved_totals(const Grid1D<Scalar>& grid) {
  StateVec<Scalar> tot(grid.m());
  for (Index r = 0; r < grid.m(); ++r)
    tot[r] = grid.dx * detail::pairwise_sum<Scalar>(0, grid.n_cells, [&](Index i) {
      return grid.states(r, grid.ghost + i);
    });
  return tot;
}

template <typename Scalar>
inline StateVec<Scalar> conserved_totals(const Grid2D<Scalar>& grid) {
  const Index n = grid.nx * grid.ny;
  StateVec<Scalar> tot(grid.m());
  for (Index r = 0; r < grid.m(); ++r)
    tot[r] = grid.dx * grid.dy * detail::pairwise_sum<Scalar>(0, n, [&](Index i) {
      const Index ix = i % grid.nx;
      const Index iy = i / grid.nx;
      return grid.states(r, grid.col(grid.ghost + ix, grid.ghost + iy));
    });
  return tot;
}

// Total entropy functional  sum rho S dx  with S = c_v ln(p / (kappa rho^gamma)).
template <typename Scalar>
inline Scalar total_entropy(const GasModel<Scalar>& g, const Grid1D<Scalar>& grid) {
  if (g.mode != Mode::FullEuler) fail(Err::ModeError, "total_entropy requires FullEuler mode");
  return grid.dx * detail::pairwise_sum<Scalar>(0, grid.n_cells, [&](Index i) {
    const auto q = grid.states.col(grid.ghost + i);
    const Scalar p = pressure_of(g, q, grid.dim);
    const Scalar S = g.c_v * std::log(p / (g.kappa * std::pow(q[0], g.gamma)));
    return q[0] * S;
  });
}

// Discrete Clausius production across one step on a periodic domain,
// where the entropy flux telescopes away:  [sum rho S dx]_after - before.
template <typename Scalar>
inline Scalar entropy_production(const GasModel<Scalar>& g, const Grid1D<Scalar>& before,
                                 const Grid1D<Scalar>& after, Scalar /*dt*/) {
  if (before.n_cells != after.n_cells || before.dx != after.dx || before.dim != after.dim)
    fail(Err::GeometryMismatch, "entropy_production requires identical grid geometry");
  return total_entropy(g, after) - total_entropy(g, before);
}

template <typename Scalar>
struct Norms {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> l1;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> linf;
};

// Componentwise L1 (= sum |diff| dx) and Linf between two sampled tables.
template <typename Scalar>
inline Norms<Scalar> error_norms(const StateArray<Scalar>& a, const StateArray<Scalar>& b,
                                 Scalar cell_volume) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(Err::GeometryMismatch, "error_norms requires equally shaped tables");
  Norms<Scalar> n;
  n.l1.resize(a.rows());
  n.linf.resize(a.rows());
  for (Index r = 0; r < a.rows(); ++r) {
    n.l1[r] = cell_volume * detail::pairwise_sum<Scalar>(0, a.cols(), [&](Index i) {
      return std::abs(a(r, i) - b(r, i));
    });
    n.linf[r] = (a.row(r) - b.row(r)).template lpNorm<Eigen::Infinity>();
  }
  return n;
}

template <typename Scalar>
struct OrderEstimate {
  Scalar order{};
  bool monotone = true;  // false flags a non-monotone error sequence
};

// Least-squares slope of log(L1) against log(dx); needs >= 3 levels.
template <typename Scalar>
inline OrderEstimate<Scalar> convergence_order(
    const std::vector<std::pair<Scalar, Scalar>>& levels) {
  if (levels.size() < 3) fail(Err::InsufficientData, "need >= 3 refinement levels");
  OrderEstimate<Scalar> est;
  Scalar sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [dx, err] : levels) {
    if (!(dx > Scalar(0)) || !(err > Scalar(0)))
      fail(Err::InsufficientData, "levels must have positive dx and error");
    const Scalar x = std::log(dx);
    const Scalar y = std::log(err);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const Scalar n = Scalar(levels.size());
  est.order = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  for (std::size_t k = 1; k < levels.size(); ++k)
    if ((levels[k].first < levels[k - 1].first) != (levels[k].second < levels[k - 1].second))
      est.monotone = false;
  return est;
}

// Positions of steep density fronts: faces with relative density jump
// above `threshold`, consecutive runs merged to their midpoint.
template <typename Scalar>
inline std::vector<Scalar> shock_locator(const Grid1D<Scalar>& grid,
                                         Scalar threshold = Scalar(0.1)) {
  std::vector<Scalar> positions;
  Scalar run_sum = Scalar(0);
  Index run_len = 0;
  for (Index i = 0; i + 1 < grid.n_cells; ++i) {
    const Scalar rl = grid.states(0, grid.ghost + i);
    const Scalar rr = grid.states(0, grid.ghost + i + 1);
    const Scalar jump = std::abs(rr - rl) / std::min(rl, rr);
    if (jump > threshold) {
      run_sum += grid.x0 + Scalar(i + 1) * grid.dx;  // face position
      ++run_len;
    } else if (run_len > 0) {
      positions.push_back(run_sum / Scalar(run_len));
      run_sum = Scalar(0);
      run_len = 0;
    }
  }
  if (run_len > 0) positions.push_back(run_sum / Scalar(run_len));
  return positions;
}

// 17 significant digits; round trips double exactly.
inline std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Per-step diagnostics of one run plus optional final error norms.
template <typename Scalar>
struct RunReport {
  struct StepRecord {
    Index step{};
    Scalar t{};
    Scalar dt{};
    StateVec<Scalar> totals;
    Scalar entropy{};
    bool entropy_valid = false;
    Scalar max_speed{};
  };

  std::vector<StepRecord> steps;
  Norms<Scalar> final_norms;
  bool has_norms = false;

  // One row per step: step,t,dt,<totals>,total_entropy,max_wave_speed.
  void write_csv(std::ostream& os, Index dim, Mode mode) const {
    os << "step,t,dt,total_mass";
    for (Index j = 0; j < dim; ++j) os << ",total_momentum_" << (j == 0 ? "x" : "y");
    if (mode == Mode::FullEuler) os << ",total_energy";
    os << ",total_entropy,max_wave_speed\n";
    for (const auto& rec : steps) {
      os << rec.step << ',' << format_g17(double(rec.t)) << ',' << format_g17(double(rec.dt));
      for (Index r = 0; r < rec.totals.size(); ++r)
        os << ',' << format_g17(double(rec.totals[r]));
      os << ',' << (rec.entropy_valid ? format_g17(double(rec.entropy)) : std::string("nan"));
      os << ',' << format_g17(double(rec.max_speed)) << '\n';
    }
  }
};

}  // namespace gasdyn

#endif  // GASDYN_DIAGNOSTICS_HPP_
