#ifndef GASDYN_SPLIT2D_HPP_
#define GASDYN_SPLIT2D_HPP_

#include <algorithm>
#include <string>

#include "gasdyn/schemes.hpp"

namespace gasdyn {

template <typename Scalar>
inline Scalar max_wave_speed_axis(const GasModel<Scalar>& g, const Grid2D<Scalar>& grid,
                                  Index axis) {
  Scalar s = Scalar(0);
  for (Index iy = 0; iy < grid.ny; ++iy)
    for (Index ix = 0; ix < grid.nx; ++ix) {
      const auto q = grid.states.col(grid.col(grid.ghost + ix, grid.ghost + iy));
      const Scalar p = pressure_of(g, q, Index(2));
      if (!(q[0] > vacuum_floor<Scalar>) || !(p > vacuum_floor<Scalar>))
        fail(Err::InvalidState, "invalid state in cell (" + std::to_string(ix) + "," +
                                    std::to_string(iy) + ")");
      const Scalar c = std::sqrt(g.gamma * p / q[0]);
      s = std::max(s, std::abs(q[1 + axis] / q[0]) + c);
    }
  return s;
}

template <typename Scalar>
inline Scalar cfl_dt(const GasModel<Scalar>& g, const Grid2D<Scalar>& grid,
                     const SchemeConfig<Scalar>& cfg) {
  const Scalar lx = max_wave_speed_axis(g, grid, 0);
  const Scalar ly = max_wave_speed_axis(g, grid, 1);
  const Scalar dxe = cfg.dt_exponent == Scalar(1) ? grid.dx : std::pow(grid.dx, cfg.dt_exponent);
  const Scalar dye = cfg.dt_exponent == Scalar(1) ? grid.dy : std::pow(grid.dy, cfg.dt_exponent);
  return cfg.cfl * std::min(dxe / lx, dye / ly);
}

namespace detail {

template <typename Scalar>
inline Grid1D<Scalar> make_lane(const Grid2D<Scalar>& grid, Index axis) {
  Grid1D<Scalar> lane;
  lane.n_cells = axis == 0 ? grid.nx : grid.ny;
  lane.dx = axis == 0 ? grid.dx : grid.dy;
  lane.x0 = axis == 0 ? grid.x0 : grid.y0;
  lane.ghost = grid.ghost;
  lane.bc = axis == 0 ? grid.bc_x : grid.bc_y;
  lane.dim = 2;
  lane.states.resize(grid.m(), lane.n_cells + 2 * grid.ghost);
  return lane;
}

[[noreturn]] inline void rethrow_with_lane(const Error& e, Index axis, Index lane_index) {
  throw Error(e.code(), std::string("axis ") + (axis == 0 ? "x" : "y") + ", " +
                            (axis == 0 ? "row " : "column ") + std::to_string(lane_index) +
                            ": " + e.what());
}

}  // namespace detail

// One 1D sweep of the configured scheme along every row; the transverse
// momentum rides as a passively advected conserved quantity.
template <typename Scalar>
inline Grid2D<Scalar> sweep_x(const GasModel<Scalar>& g, const Grid2D<Scalar>& grid, Scalar dt,
                              const SchemeConfig<Scalar>& cfg) {
  Grid2D<Scalar> out = grid;
  Grid1D<Scalar> lane = detail::make_lane(grid, 0);
  for (Index iy = 0; iy < grid.ny; ++iy) {
    for (Index ix = 0; ix < grid.nx; ++ix)
      lane.states.col(grid.ghost + ix) = grid.states.col(grid.col(grid.ghost + ix, grid.ghost + iy));
    try {
      const Grid1D<Scalar> stepped = step_1d(g, lane, cfg, dt, Index(0));
      for (Index ix = 0; ix < grid.nx; ++ix)
        out.states.col(out.col(out.ghost + ix, out.ghost + iy)) =
            stepped.states.col(grid.ghost + ix);
    } catch (const Error& e) {
      detail::rethrow_with_lane(e, 0, iy);
    }
  }
  return out;
}

template <typename Scalar>
inline Grid2D<Scalar> sweep_y(const GasModel<Scalar>& g, const Grid2D<Scalar>& grid, Scalar dt,
                              const SchemeConfig<Scalar>& cfg) {
  Grid2D<Scalar> out = grid;
  Grid1D<Scalar> lane = detail::make_lane(grid, 1);
  for (Index ix = 0; ix < grid.nx; ++ix) {
    for (Index iy = 0; iy < grid.ny; ++iy)
      lane.states.col(grid.ghost + iy) = grid.states.col(grid.col(grid.ghost + ix, grid.ghost + iy));
    try {
      const Grid1D<Scalar> stepped = step_1d(g, lane, cfg, dt, Index(1));
      for (Index iy = 0; iy < grid.ny; ++iy)
        out.states.col(out.col(out.ghost + ix, out.ghost + iy)) =
            stepped.states.col(grid.ghost + iy);
    } catch (const Error& e) {
      detail::rethrow_with_lane(e, 1, ix);
    }
  }
  return out;
}

// Strang split step A(dt/2) B(dt) A(dt/2); callers alternate `first_axis`
// between consecutive steps (XYX, YXY, ...) to cancel directional bias.
template <typename Scalar>
inline Grid2D<Scalar> strang_split_step(const GasModel<Scalar>& g, const Grid2D<Scalar>& grid,
                                        Scalar dt, const SchemeConfig<Scalar>& cfg,
                                        Index first_axis = 0) {
  const Scalar half = Scalar(0.5) * dt;
  if (first_axis == 0) {
    Grid2D<Scalar> a = sweep_x(g, grid, half, cfg);
    a = sweep_y(g, a, dt, cfg);
    return sweep_x(g, a, half, cfg);
  }
  Grid2D<Scalar> a = sweep_y(g, grid, half, cfg);
  a = sweep_x(g, a, dt, cfg);
  return sweep_y(g, a, half, cfg);
}

}  // namespace gasdyn

#endif  // GASDYN_SPLIT2D_HPP_
