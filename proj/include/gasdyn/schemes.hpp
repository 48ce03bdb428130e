#ifndef GASDYN_SCHEMES_HPP_
#define GASDYN_SCHEMES_HPP_

#include <cmath>
#include <string>
#include <utility>

#include "gasdyn/grid.hpp"
#include "gasdyn/riemann.hpp"

namespace gasdyn {

enum class SchemeKind {
  LaxFriedrichs,
  Godunov,
  GodunovHLL,
  Richtmyer,
  MacCormack,
  VNRViscosity,
  MUSCL,
  WENO5,
};

enum class LimiterKind { Minmod, VanLeer };
enum class FluxKind { Exact, HLL };

inline const char* scheme_name(SchemeKind s) {
  switch (s) {
    case SchemeKind::LaxFriedrichs: return "lax_friedrichs";
    case SchemeKind::Godunov: return "godunov";
    case SchemeKind::GodunovHLL: return "godunov_hll";
    case SchemeKind::Richtmyer: return "richtmyer";
    case SchemeKind::MacCormack: return "maccormack";
    case SchemeKind::VNRViscosity: return "vnr";
    case SchemeKind::MUSCL: return "muscl";
    case SchemeKind::WENO5: return "weno5";
  }
  return "?";
}

// Ghost layers required per side.
inline int stencil_radius(SchemeKind s) {
  switch (s) {
    case SchemeKind::LaxFriedrichs:
    case SchemeKind::Godunov:
    case SchemeKind::GodunovHLL:
    case SchemeKind::Richtmyer:
    case SchemeKind::MacCormack: return 1;
    case SchemeKind::VNRViscosity: return 3;
    case SchemeKind::MUSCL: return 2;
    case SchemeKind::WENO5: return 3;
  }
  return 3;
}

template <typename Scalar>
struct SchemeConfig {
  SchemeKind scheme = SchemeKind::Godunov;
  Scalar cfl = Scalar(0.9);
  LimiterKind limiter = LimiterKind::VanLeer;
  Scalar q_visc_coeff = Scalar(2);      // VNR quadratic coefficient
  Scalar q_lin_coeff = Scalar(0.75);    // VNR linear (Landshoff) coefficient
  Scalar macc_dissipation = Scalar(1);  // MacCormack pressure-switch coefficient
  Scalar weno_eps = Scalar(1e-6);
  FluxKind godunov_flux = FluxKind::Exact;
  Scalar dt_exponent = Scalar(1);       // dt = cfl dx^e / max speed

  static SchemeConfig of(SchemeKind s) {
    SchemeConfig cfg;
    cfg.scheme = s;
    switch (s) {
      case SchemeKind::LaxFriedrichs:
      case SchemeKind::Godunov:
      case SchemeKind::GodunovHLL:
      case SchemeKind::Richtmyer: cfg.cfl = Scalar(0.9); break;
      case SchemeKind::MacCormack:
      case SchemeKind::VNRViscosity: cfg.cfl = Scalar(0.45); break;
      case SchemeKind::MUSCL:
      case SchemeKind::WENO5: cfg.cfl = Scalar(0.8); break;
    }
    if (s == SchemeKind::GodunovHLL) cfg.godunov_flux = FluxKind::HLL;
    return cfg;
  }

  void validate() const {
    if (!(cfl > Scalar(0)) || !(cfl < Scalar(1)))
      fail(Err::ConfigError, "cfl must lie in (0,1)");
    if (!(weno_eps > Scalar(0))) fail(Err::ConfigError, "weno_eps must be positive");
    if (q_visc_coeff < Scalar(0) || q_lin_coeff < Scalar(0))
      fail(Err::ConfigError, "viscosity coefficients must be nonnegative");
  }
};

template <typename Scalar>
inline Scalar cfl_dt(const GasModel<Scalar>& g, const Grid1D<Scalar>& grid,
                     const SchemeConfig<Scalar>& cfg) {
  const Scalar lam = max_wave_speed(g, grid);
  const Scalar dxe =
      cfg.dt_exponent == Scalar(1) ? grid.dx : std::pow(grid.dx, cfg.dt_exponent);
  return cfg.cfl * (dxe / lam);
}

namespace detail {

template <typename Scalar>
inline StateVec<Scalar> flux_of_prim(const GasModel<Scalar>& g, const PrimState<Scalar>& w,
                                     Index axis) {
  const Index d = w.dim();
  const Scalar p = effective_pressure(g, w);
  const Scalar vn = w.v[axis];
  StateVec<Scalar> f(g.state_size(d));
  f[0] = w.rho * vn;
  for (Index j = 0; j < d; ++j) f[1 + j] = w.rho * vn * w.v[j];
  f[1 + axis] += p;
  if (g.mode == Mode::FullEuler) {
    Scalar ke = Scalar(0);
    for (Index j = 0; j < d; ++j) ke += w.v[j] * w.v[j];
    const Scalar rhoE = p / (g.gamma - Scalar(1)) + Scalar(0.5) * w.rho * ke;
    f[d + 1] = vn * (rhoE + p);
  }
  return f;
}

template <typename Scalar>
inline void require_ghost(const Grid1D<Scalar>& grid, SchemeKind s) {
  if (grid.ghost < stencil_radius(s))
    fail(Err::InvalidState, std::string("grid ghost width ") + std::to_string(grid.ghost) +
                                " below stencil radius of " + scheme_name(s));
}

// u_new = u_old - (dt/dx)(F_{i+1/2} - F_{i-1/2}); F.col(k) is the face
// between padded cells (ghost-1+k, ghost+k), k in [0, n].
template <typename Scalar>
inline void apply_face_fluxes(const GasModel<Scalar>& g, Grid1D<Scalar>& grid,
                              const StateArray<Scalar>& F, Scalar dt) {
  const Scalar lam = dt / grid.dx;
  for (Index i = 0; i < grid.n_cells; ++i)
    grid.states.col(grid.ghost + i) -= lam * (F.col(i + 1) - F.col(i));
  grid.validate(g);  // positivity abort, no flooring
}

}  // namespace detail

// --------------------------------------------------------------------------
// First-order and two-step classics
// --------------------------------------------------------------------------

template <typename Scalar>
inline Grid1D<Scalar> step_lax_friedrichs(const GasModel<Scalar>& g, const Grid1D<Scalar>& grid,
                                          Scalar dt, Index axis = 0) {
  detail::require_ghost(grid, SchemeKind::LaxFriedrichs);
  Grid1D<Scalar> out = grid;
  out.fill_ghosts(axis);
  const Index n = out.n_cells;
  const Index gh = out.ghost;
  StateArray<Scalar> F(out.m(), n + 1);
  const Scalar visc = out.dx / (Scalar(2) * dt);
  for (Index k = 0; k <= n; ++k) {
    const auto ql = out.states.col(gh - 1 + k);
    const auto qr = out.states.col(gh + k);
    F.col(k) = Scalar(0.5) * (flux_col(g, ql, out.dim, axis) + flux_col(g, qr, out.dim, axis)) -
               visc * (qr - ql);
  }
  detail::apply_face_fluxes(g, out, F, dt);
  return out;
}

template <typename Scalar>
inline Grid1D<Scalar> step_godunov(const GasModel<Scalar>& g, const Grid1D<Scalar>& grid,
                                   Scalar dt, FluxKind flux_kind = FluxKind::Exact,
                                   Index axis = 0) {
  detail::require_ghost(grid, SchemeKind::Godunov);
  Grid1D<Scalar> out = grid;
  out.fill_ghosts(axis);
  const Index n = out.n_cells;
  const Index gh = out.ghost;
  StateArray<Scalar> F(out.m(), n + 1);
  for (Index k = 0; k <= n; ++k) {
    const auto ql = out.states.col(gh - 1 + k);
    const auto qr = out.states.col(gh + k);
    if (flux_kind == FluxKind::HLL) {
      F.col(k) = hll_flux_cols(g, ql, qr, out.dim, axis);
    } else if ((ql.array() == qr.array()).all()) {
      F.col(k) = flux_col(g, ql, out.dim, axis);  // zero-strength problem
    } else {
      const PrimState<Scalar> wl = prim_from_cons(g, cons_from_state_vector(g, ql, out.dim));
      const PrimState<Scalar> wr = prim_from_cons(g, cons_from_state_vector(g, qr, out.dim));
      const RiemannSolution<Scalar> sol = solve_exact(g, wl, wr, axis);
      F.col(k) = detail::flux_of_prim(g, sample(sol, g, wl, wr, Scalar(0), axis), axis);
    }
  }
  detail::apply_face_fluxes(g, out, F, dt);
  return out;
}

template <typename Scalar>
inline Grid1D<Scalar> step_richtmyer(const GasModel<Scalar>& g, const Grid1D<Scalar>& grid,
                                     Scalar dt, Index axis = 0) {
  detail::require_ghost(grid, SchemeKind::Richtmyer);
  Grid1D<Scalar> out = grid;
  out.fill_ghosts(axis);
  const Index n = out.n_cells;
  const Index gh = out.ghost;
  const Scalar half_lam = Scalar(0.5) * dt / out.dx;
  StateArray<Scalar> F(out.m(), n + 1);
  for (Index k = 0; k <= n; ++k) {
    const auto ql = out.states.col(gh - 1 + k);
    const auto qr = out.states.col(gh + k);
    const StateVec<Scalar> fl = flux_col(g, ql, out.dim, axis);
    const StateVec<Scalar> fr = flux_col(g, qr, out.dim, axis);
    // the half-step state is an algebraic intermediate; validity of the
    // final update is what gets checked
    const StateVec<Scalar> half = Scalar(0.5) * (ql + qr) - half_lam * (fr - fl);
    F.col(k) = flux_col(g, half, out.dim, axis);
  }
  detail::apply_face_fluxes(g, out, F, dt);
  return out;
}

// Forward predictor, backward corrector, plus a pressure-switch dissipation
// flux that vanishes on uniform-pressure flows.
template <typename Scalar>
inline Grid1D<Scalar> step_maccormack(const GasModel<Scalar>& g, const Grid1D<Scalar>& grid,
                                      Scalar dt, Scalar dissipation = Scalar(1),
                                      Index axis = 0) {
  detail::require_ghost(grid, SchemeKind::MacCormack);
  Grid1D<Scalar> out = grid;
  out.fill_ghosts(axis);
  const Index n = out.n_cells;
  const Index gh = out.ghost;
  const Index N = out.padded_size();
  const Scalar lam = dt / out.dx;

  StateArray<Scalar> f(out.m(), N);
  for (Index i = 0; i < N; ++i) f.col(i) = flux_col(g, out.states.col(i), out.dim, axis);

  StateArray<Scalar> F(out.m(), n + 1);
  for (Index k = 0; k <= n; ++k) {
    const Index l = gh - 1 + k;
    const StateVec<Scalar> pred = out.states.col(l) - lam * (f.col(l + 1) - f.col(l));
    F.col(k) = Scalar(0.5) * (f.col(l + 1) + flux_col(g, pred, out.dim, axis));
    if (dissipation > Scalar(0)) {
      const auto ql = out.states.col(l);
      const auto qr = out.states.col(l + 1);
      const Scalar pl = pressure_of(g, ql, out.dim);
      const Scalar pr = pressure_of(g, qr, out.dim);
      const Scalar sl = std::abs(ql[1 + axis] / ql[0]) + std::sqrt(g.gamma * pl / ql[0]);
      const Scalar sr = std::abs(qr[1 + axis] / qr[0]) + std::sqrt(g.gamma * pr / qr[0]);
      const Scalar theta = std::abs(pr - pl) / (pr + pl);
      F.col(k) -= dissipation * theta * std::max(sl, sr) * (qr - ql);
    }
  }
  detail::apply_face_fluxes(g, out, F, dt);
  return out;
}

// --------------------------------------------------------------------------
// von Neumann-Richtmyer artificial viscosity
// --------------------------------------------------------------------------
//
// Two-step central predictor-corrector in conservation form with the
// pressure augmented by q = C^2 rho dv^2 (compression switch), plus a
// linear compression-only face term that damps the grid-scale noise the
// quadratic term cannot see.

namespace detail {

// q_i = C^2 rho_i (min(v_{i+1}-v_{i-1},0)/2)^2 over columns [1, N-2].
template <typename Scalar>
inline Eigen::Matrix<Scalar, Eigen::Dynamic, 1> vnr_cell_q(const StateArray<Scalar>& states,
                                                           Index axis, Scalar C) {
  const Index N = states.cols();
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> q = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(N);
  for (Index i = 1; i + 1 < N; ++i) {
    const Scalar vm = states(1 + axis, i - 1) / states(0, i - 1);
    const Scalar vp = states(1 + axis, i + 1) / states(0, i + 1);
    const Scalar dv = std::min(vp - vm, Scalar(0)) / Scalar(2);
    q[i] = C * C * states(0, i) * dv * dv;
  }
  return q;
}

template <typename Scalar, typename Derived>
inline StateVec<Scalar> flux_col_augmented(const GasModel<Scalar>& g,
                                           const Eigen::MatrixBase<Derived>& q, Index dim,
                                           Index axis, Scalar qv) {
  const Scalar p = pressure_of(g, q, dim) + qv;
  const Scalar vn = q[1 + axis] / q[0];
  StateVec<Scalar> f(q.size());
  f[0] = q[1 + axis];
  for (Index j = 0; j < dim; ++j) f[1 + j] = vn * q[1 + j];
  f[1 + axis] += p;
  if (g.mode == Mode::FullEuler) f[dim + 1] = vn * (q[dim + 1] + p);
  return f;
}

}  // namespace detail

template <typename Scalar>
inline Grid1D<Scalar> step_vnr_viscosity(const GasModel<Scalar>& g, const Grid1D<Scalar>& grid,
                                         Scalar dt, Scalar q_coeff = Scalar(2),
                                         Scalar q_lin = Scalar(0.75), Index axis = 0) {
  detail::require_ghost(grid, SchemeKind::VNRViscosity);
  Grid1D<Scalar> out = grid;
  out.fill_ghosts(axis);
  const Index n = out.n_cells;
  const Index gh = out.ghost;
  const Index N = out.padded_size();
  const Scalar half_lam = Scalar(0.5) * dt / out.dx;

  const auto qc = detail::vnr_cell_q(out.states, axis, q_coeff);

  // predictor half-step face states, faces j between padded cells (j, j+1)
  StateArray<Scalar> pred(out.m(), N - 1);
  for (Index j = 0; j + 1 < N; ++j) {
    const auto ul = out.states.col(j);
    const auto ur = out.states.col(j + 1);
    const StateVec<Scalar> fl = detail::flux_col_augmented(g, ul, out.dim, axis, qc[j]);
    const StateVec<Scalar> fr = detail::flux_col_augmented(g, ur, out.dim, axis, qc[j + 1]);
    pred.col(j) = Scalar(0.5) * (ul + ur) - half_lam * (fr - fl);
  }
  const auto qp = detail::vnr_cell_q(pred, axis, q_coeff);

  StateArray<Scalar> F(out.m(), n + 1);
  for (Index k = 0; k <= n; ++k) {
    const Index j = gh - 1 + k;
    F.col(k) = detail::flux_col_augmented(g, pred.col(j), out.dim, axis, qp[j]);
    if (q_lin > Scalar(0)) {
      const auto ql = out.states.col(j);
      const auto qr = out.states.col(j + 1);
      const Scalar vl = ql[1 + axis] / ql[0];
      const Scalar vr = qr[1 + axis] / qr[0];
      const Scalar dv = std::min(vr - vl, Scalar(0));
      if (dv < Scalar(0)) {
        const Scalar cl = std::sqrt(g.gamma * pressure_of(g, ql, out.dim) / ql[0]);
        const Scalar cr = std::sqrt(g.gamma * pressure_of(g, qr, out.dim) / qr[0]);
        const Scalar qlin = q_lin * Scalar(0.5) * (ql[0] + qr[0]) * Scalar(0.5) * (cl + cr) * (-dv);
        F(1 + axis, k) += qlin;
        if (g.mode == Mode::FullEuler) F(out.dim + 1, k) += qlin * Scalar(0.5) * (vl + vr);
      }
    }
  }
  detail::apply_face_fluxes(g, out, F, dt);
  return out;
}

// --------------------------------------------------------------------------
// High-order reconstructions (advanced in time by ssp_rk3_step)
// --------------------------------------------------------------------------

// Left/right primitive interface states at the n+1 interior faces.
// Rows: [rho, v_0..v_{d-1}] plus a pressure row in FullEuler mode.
template <typename Scalar>
struct ReconstructedFaces {
  StateArray<Scalar> left;
  StateArray<Scalar> right;
};

namespace detail {

template <typename Scalar>
inline Scalar minmod(Scalar a, Scalar b) {
  if (a * b <= Scalar(0)) return Scalar(0);
  return std::abs(a) < std::abs(b) ? a : b;
}

template <typename Scalar>
inline Scalar vanleer(Scalar a, Scalar b) {
  if (a * b <= Scalar(0)) return Scalar(0);
  return Scalar(2) * a * b / (a + b);
}

// Primitive rows for every padded cell; same row count as the state.
template <typename Scalar>
inline StateArray<Scalar> primitive_table(const GasModel<Scalar>& g,
                                          const StateArray<Scalar>& states, Index dim) {
  StateArray<Scalar> W(states.rows(), states.cols());
  for (Index i = 0; i < states.cols(); ++i) {
    const auto q = states.col(i);
    W(0, i) = q[0];
    for (Index j = 0; j < dim; ++j) W(1 + j, i) = q[1 + j] / q[0];
    if (g.mode == Mode::FullEuler) W(dim + 1, i) = pressure_of(g, q, dim);
  }
  return W;
}

template <typename Scalar, typename Derived>
inline StateVec<Scalar> statevec_from_prim_col(const GasModel<Scalar>& g,
                                               const Eigen::MatrixBase<Derived>& w, Index dim) {
  StateVec<Scalar> q(w.size());
  q[0] = w[0];
  for (Index j = 0; j < dim; ++j) q[1 + j] = w[0] * w[1 + j];
  if (g.mode == Mode::FullEuler) {
    Scalar ke = Scalar(0);
    for (Index j = 0; j < dim; ++j) ke += w[1 + j] * w[1 + j];
    q[dim + 1] = w[dim + 1] / (g.gamma - Scalar(1)) + Scalar(0.5) * w[0] * ke;
  }
  return q;
}

}  // namespace detail

// Piecewise-linear primitive reconstruction with limited slopes.
template <typename Scalar>
inline ReconstructedFaces<Scalar> reconstruct_muscl(const GasModel<Scalar>& g,
                                                    const Grid1D<Scalar>& grid,
                                                    LimiterKind limiter) {
  if (grid.ghost < 2) fail(Err::InvalidState, "MUSCL requires ghost >= 2");
  const Index n = grid.n_cells;
  const Index gh = grid.ghost;
  const StateArray<Scalar> W = detail::primitive_table(g, grid.states, grid.dim);
  auto lim = limiter == LimiterKind::Minmod ? detail::minmod<Scalar> : detail::vanleer<Scalar>;

  ReconstructedFaces<Scalar> faces;
  faces.left.resize(W.rows(), n + 1);
  faces.right.resize(W.rows(), n + 1);
  for (Index k = 0; k <= n; ++k) {
    const Index l = gh - 1 + k;
    for (Index r = 0; r < W.rows(); ++r) {
      const Scalar sl = lim(W(r, l) - W(r, l - 1), W(r, l + 1) - W(r, l));
      const Scalar sr = lim(W(r, l + 1) - W(r, l), W(r, l + 2) - W(r, l + 1));
      faces.left(r, k) = W(r, l) + Scalar(0.5) * sl;
      faces.right(r, k) = W(r, l + 1) - Scalar(0.5) * sr;
    }
  }
  return faces;
}

// Classic WENO5-JS left-biased face value from five cell averages
// a[i-2..i+2]; ideal weights (1/10, 3/5, 3/10).
template <typename Scalar>
inline Scalar weno5_face_value(Scalar a0, Scalar a1, Scalar a2, Scalar a3, Scalar a4,
                               Scalar eps) {
  const Scalar b0 = Scalar(13.0 / 12.0) * (a0 - Scalar(2) * a1 + a2) * (a0 - Scalar(2) * a1 + a2) +
                    Scalar(0.25) * (a0 - Scalar(4) * a1 + Scalar(3) * a2) *
                        (a0 - Scalar(4) * a1 + Scalar(3) * a2);
  const Scalar b1 = Scalar(13.0 / 12.0) * (a1 - Scalar(2) * a2 + a3) * (a1 - Scalar(2) * a2 + a3) +
                    Scalar(0.25) * (a1 - a3) * (a1 - a3);
  const Scalar b2 = Scalar(13.0 / 12.0) * (a2 - Scalar(2) * a3 + a4) * (a2 - Scalar(2) * a3 + a4) +
                    Scalar(0.25) * (Scalar(3) * a2 - Scalar(4) * a3 + a4) *
                        (Scalar(3) * a2 - Scalar(4) * a3 + a4);
  const Scalar w0 = Scalar(0.1) / ((eps + b0) * (eps + b0));
  const Scalar w1 = Scalar(0.6) / ((eps + b1) * (eps + b1));
  const Scalar w2 = Scalar(0.3) / ((eps + b2) * (eps + b2));
  const Scalar v0 = (Scalar(2) * a0 - Scalar(7) * a1 + Scalar(11) * a2) / Scalar(6);
  const Scalar v1 = (-a1 + Scalar(5) * a2 + Scalar(2) * a3) / Scalar(6);
  const Scalar v2 = (Scalar(2) * a2 + Scalar(5) * a3 - a4) / Scalar(6);
  return (w0 * v0 + w1 * v1 + w2 * v2) / (w0 + w1 + w2);
}

// Component-wise WENO5 on primitive variables (no characteristic
// projection); minor oscillation near strong shocks is accepted.
template <typename Scalar>
inline ReconstructedFaces<Scalar> reconstruct_weno5(const GasModel<Scalar>& g,
                                                    const Grid1D<Scalar>& grid,
                                                    Scalar eps = Scalar(1e-6)) {
  if (grid.ghost < 3) fail(Err::InvalidState, "WENO5 requires ghost >= 3");
  const Index n = grid.n_cells;
  const Index gh = grid.ghost;
  const StateArray<Scalar> W = detail::primitive_table(g, grid.states, grid.dim);

  ReconstructedFaces<Scalar> faces;
  faces.left.resize(W.rows(), n + 1);
  faces.right.resize(W.rows(), n + 1);
  for (Index k = 0; k <= n; ++k) {
    const Index l = gh - 1 + k;
    for (Index r = 0; r < W.rows(); ++r) {
      faces.left(r, k) =
          weno5_face_value(W(r, l - 2), W(r, l - 1), W(r, l), W(r, l + 1), W(r, l + 2), eps);
      faces.right(r, k) =
          weno5_face_value(W(r, l + 3), W(r, l + 2), W(r, l + 1), W(r, l), W(r, l - 1), eps);
    }
  }
  return faces;
}

// Conservation-form right-hand side -dF/dx from reconstructed faces,
// fluxed with HLL.
template <typename Scalar>
inline StateArray<Scalar> reconstruction_rhs(const GasModel<Scalar>& g, Grid1D<Scalar>& grid,
                                             const SchemeConfig<Scalar>& cfg, Index axis) {
  grid.fill_ghosts(axis);
  const ReconstructedFaces<Scalar> faces =
      cfg.scheme == SchemeKind::WENO5 ? reconstruct_weno5(g, grid, cfg.weno_eps)
                                      : reconstruct_muscl(g, grid, cfg.limiter);
  const Index n = grid.n_cells;
  StateArray<Scalar> F(grid.m(), n + 1);
  for (Index k = 0; k <= n; ++k) {
    const StateVec<Scalar> ql = detail::statevec_from_prim_col(g, faces.left.col(k), grid.dim);
    const StateVec<Scalar> qr = detail::statevec_from_prim_col(g, faces.right.col(k), grid.dim);
    F.col(k) = hll_flux_cols(g, ql, qr, grid.dim, axis);
  }
  StateArray<Scalar> rhs(grid.m(), n);
  const Scalar inv_dx = Scalar(1) / grid.dx;
  for (Index i = 0; i < n; ++i) rhs.col(i) = -(F.col(i + 1) - F.col(i)) * inv_dx;
  return rhs;
}

// Shu-Osher SSP-RK3: convex combinations of three Euler stages.
template <typename Scalar, typename SpatialOp>
inline Grid1D<Scalar> ssp_rk3_step(const GasModel<Scalar>& g, const Grid1D<Scalar>& grid,
                                   Scalar dt, SpatialOp&& op) {
  Grid1D<Scalar> work = grid;
  const StateArray<Scalar> u0 = work.interior();

  work.interior() = u0 + dt * op(work);
  work.validate(g);

  work.interior() =
      Scalar(0.75) * u0 + Scalar(0.25) * (work.interior() + dt * op(work)).eval();
  work.validate(g);

  work.interior() = u0 / Scalar(3) +
                    Scalar(2.0 / 3.0) * (work.interior() + dt * op(work)).eval();
  work.validate(g);
  return work;
}

// One step of the configured scheme along `axis`.
template <typename Scalar>
inline Grid1D<Scalar> step_1d(const GasModel<Scalar>& g, const Grid1D<Scalar>& grid,
                              const SchemeConfig<Scalar>& cfg, Scalar dt, Index axis = 0) {
  switch (cfg.scheme) {
    case SchemeKind::LaxFriedrichs: return step_lax_friedrichs(g, grid, dt, axis);
    case SchemeKind::Godunov: return step_godunov(g, grid, dt, cfg.godunov_flux, axis);
    case SchemeKind::GodunovHLL: return step_godunov(g, grid, dt, FluxKind::HLL, axis);
    case SchemeKind::Richtmyer: return step_richtmyer(g, grid, dt, axis);
    case SchemeKind::MacCormack:
      return step_maccormack(g, grid, dt, cfg.macc_dissipation, axis);
    case SchemeKind::VNRViscosity:
      return step_vnr_viscosity(g, grid, dt, cfg.q_visc_coeff, cfg.q_lin_coeff, axis);
    case SchemeKind::MUSCL:
    case SchemeKind::WENO5:
      return ssp_rk3_step(g, grid, dt, [&](Grid1D<Scalar>& s) {
        return reconstruction_rhs(g, s, cfg, axis);
      });
  }
  fail(Err::ConfigError, "unknown scheme");
}

}  // namespace gasdyn

#endif  // GASDYN_SCHEMES_HPP_
