#ifndef GASDYN_GRID_HPP_
#define GASDYN_GRID_HPP_

#include <functional>
#include <string>
#include <utility>

#include "gasdyn/flux.hpp"
#include "gasdyn/gas.hpp"

namespace gasdyn {

// Uniform 1D cell-average grid with ghost padding.  `dim` is the spatial
// dimension of the stored states (2 for dimensional-split row/column
// lanes carrying a passive transverse momentum), not the grid's own.
template <typename Scalar>
struct Grid1D {
  Index n_cells = 0;
  Scalar dx = Scalar(0);
  Scalar x0 = Scalar(0);
  int ghost = 1;
  BoundaryKind bc = BoundaryKind::Transmissive;
  Index dim = 1;
  StateArray<Scalar> states;  // m x (n_cells + 2*ghost)

  static Grid1D uniform(const GasModel<Scalar>& g, Index n, Scalar x0_, Scalar x1_, int ghost_,
                        BoundaryKind bc_,
                        const std::function<PrimState<Scalar>(Scalar)>& init) {
    if (n < 4) fail(Err::InvalidState, "Grid1D requires n_cells >= 4");
    Grid1D grid;
    grid.n_cells = n;
    grid.dx = (x1_ - x0_) / Scalar(n);
    if (!(grid.dx > Scalar(0))) fail(Err::InvalidState, "Grid1D requires dx > 0");
    grid.x0 = x0_;
    grid.ghost = ghost_;
    grid.bc = bc_;
    PrimState<Scalar> w0 = init(grid.cell_center(0));
    grid.dim = w0.dim();
    grid.states.resize(g.state_size(grid.dim), n + 2 * ghost_);
    for (Index i = 0; i < n; ++i) {
      const ConsState<Scalar> u = cons_from_prim(g, init(grid.cell_center(i)));
      grid.states.col(ghost_ + i) = to_state_vector(g, u);
    }
    return grid;
  }

  Index padded_size() const { return n_cells + 2 * ghost; }
  Index m() const { return states.rows(); }

  Scalar cell_center(Index i) const { return x0 + (Scalar(i) + Scalar(0.5)) * dx; }

  auto interior() { return states.middleCols(ghost, n_cells); }
  auto interior() const { return states.middleCols(ghost, n_cells); }

  // Fills the ghost layers; `axis` names the normal-momentum row that a
  // Reflective boundary negates (row 1 + axis).
  void fill_ghosts(Index axis = 0) {
    const Index n = n_cells;
    const Index g = ghost;
    switch (bc) {
      case BoundaryKind::Periodic:
        for (Index j = 0; j < g; ++j) {
          states.col(j) = states.col(n + j);
          states.col(n + g + j) = states.col(g + j);
        }
        break;
      case BoundaryKind::Transmissive:
        for (Index j = 0; j < g; ++j) {
          states.col(j) = states.col(g);
          states.col(n + g + j) = states.col(n + g - 1);
        }
        break;
      case BoundaryKind::Reflective:
        for (Index j = 0; j < g; ++j) {
          states.col(g - 1 - j) = states.col(g + j);
          states.col(g - 1 - j)(1 + axis) = -states.col(g - 1 - j)(1 + axis);
          states.col(n + g + j) = states.col(n + g - 1 - j);
          states.col(n + g + j)(1 + axis) = -states.col(n + g + j)(1 + axis);
        }
        break;
    }
  }

  void validate(const GasModel<Scalar>& g) const {
    if (n_cells < 4) fail(Err::InvalidState, "Grid1D requires n_cells >= 4");
    if (!(dx > Scalar(0))) fail(Err::InvalidState, "Grid1D requires dx > 0");
    for (Index i = 0; i < n_cells; ++i) {
      const auto q = states.col(ghost + i);
      const Scalar p = pressure_of(g, q, dim);
      if (!(q[0] > vacuum_floor<Scalar>) || !(p > vacuum_floor<Scalar>))
        fail(Err::InvalidState, "invalid state in cell " + std::to_string(i) + " (rho=" +
                                    std::to_string(double(q[0])) + ", p=" +
                                    std::to_string(double(p)) + ")");
    }
  }
};

// Uniform 2D Cartesian grid, d = 2 states, per-axis boundary tags.
// Storage is column-per-cell with x fastest: col = ix + stride * iy.
template <typename Scalar>
struct Grid2D {
  Index nx = 0, ny = 0;
  Scalar dx = Scalar(0), dy = Scalar(0);
  Scalar x0 = Scalar(0), y0 = Scalar(0);
  int ghost = 1;
  BoundaryKind bc_x = BoundaryKind::Transmissive;
  BoundaryKind bc_y = BoundaryKind::Transmissive;
  StateArray<Scalar> states;  // m x (nx+2g)(ny+2g)

  static Grid2D uniform(const GasModel<Scalar>& g, Index nx_, Index ny_, Scalar x0_, Scalar x1_,
                        Scalar y0_, Scalar y1_, int ghost_, BoundaryKind bcx, BoundaryKind bcy,
                        const std::function<PrimState<Scalar>(Scalar, Scalar)>& init) {
    if (nx_ < 4 || ny_ < 4) fail(Err::InvalidState, "Grid2D requires nx, ny >= 4");
    Grid2D grid;
    grid.nx = nx_;
    grid.ny = ny_;
    grid.dx = (x1_ - x0_) / Scalar(nx_);
    grid.dy = (y1_ - y0_) / Scalar(ny_);
    if (!(grid.dx > Scalar(0)) || !(grid.dy > Scalar(0)))
      fail(Err::InvalidState, "Grid2D requires dx, dy > 0");
    grid.x0 = x0_;
    grid.y0 = y0_;
    grid.ghost = ghost_;
    grid.bc_x = bcx;
    grid.bc_y = bcy;
    grid.states.resize(g.state_size(2), grid.stride() * (ny_ + 2 * ghost_));
    for (Index iy = 0; iy < ny_; ++iy)
      for (Index ix = 0; ix < nx_; ++ix) {
        const ConsState<Scalar> u =
            cons_from_prim(g, init(grid.x_center(ix), grid.y_center(iy)));
        if (u.dim() != 2) fail(Err::InvalidState, "Grid2D initializer must produce d=2 states");
        grid.states.col(grid.col(ghost_ + ix, ghost_ + iy)) = to_state_vector(g, u);
      }
    return grid;
  }

  Index stride() const { return nx + 2 * ghost; }
  Index col(Index ix_padded, Index iy_padded) const { return ix_padded + stride() * iy_padded; }
  Index m() const { return states.rows(); }

  Scalar x_center(Index ix) const { return x0 + (Scalar(ix) + Scalar(0.5)) * dx; }
  Scalar y_center(Index iy) const { return y0 + (Scalar(iy) + Scalar(0.5)) * dy; }

  void validate(const GasModel<Scalar>& g) const {
    for (Index iy = 0; iy < ny; ++iy)
      for (Index ix = 0; ix < nx; ++ix) {
        const auto q = states.col(col(ghost + ix, ghost + iy));
        const Scalar p = pressure_of(g, q, Index(2));
        if (!(q[0] > vacuum_floor<Scalar>) || !(p > vacuum_floor<Scalar>))
          fail(Err::InvalidState, "invalid state in cell (" + std::to_string(ix) + "," +
                                      std::to_string(iy) + ")");
      }
  }
};

template <typename Scalar>
inline Scalar max_wave_speed(const GasModel<Scalar>& g, const Grid1D<Scalar>& grid) {
  Scalar s = Scalar(0);
  for (Index i = 0; i < grid.n_cells; ++i) {
    try {
      s = std::max(s, max_signal_speed_col(g, grid.states.col(grid.ghost + i), grid.dim));
    } catch (const Error& e) {
      fail(Err::InvalidState, "cell " + std::to_string(i) + ": " + e.what());
    }
  }
  return s;
}

template <typename Scalar>
inline Scalar max_wave_speed(const GasModel<Scalar>& g, const Grid2D<Scalar>& grid) {
  Scalar s = Scalar(0);
  for (Index iy = 0; iy < grid.ny; ++iy)
    for (Index ix = 0; ix < grid.nx; ++ix) {
      try {
        s = std::max(s, max_signal_speed_col(
                            g, grid.states.col(grid.col(grid.ghost + ix, grid.ghost + iy)),
                            Index(2)));
      } catch (const Error& e) {
        fail(Err::InvalidState, "cell (" + std::to_string(ix) + "," + std::to_string(iy) +
                                    "): " + e.what());
      }
    }
  return s;
}

}  // namespace gasdyn

#endif  // GASDYN_GRID_HPP_
