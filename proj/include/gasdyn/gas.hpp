#ifndef GASDYN_GAS_HPP_
#define GASDYN_GAS_HPP_

#include <cmath>
#include <string>

#include "gasdyn/errors.hpp"
#include "gasdyn/types.hpp"

namespace gasdyn {

// Polytropic gas:  p = R rho theta,  e = c_v theta,  gamma = 1 + R/c_v,
// p(rho,S) = kappa rho^gamma exp(S/c_v).  The isentropic variant closes
// with p(rho) = kappa0 rho^gamma instead of an energy equation.
template <typename Scalar>
struct GasModel {
  Scalar gamma = Scalar(1.4);
  Scalar gas_constant_R = Scalar(1);
  Scalar c_v = Scalar(2.5);
  Scalar kappa = Scalar(1);
  Scalar kappa0 = Scalar(1);
  Mode mode = Mode::FullEuler;

  // gamma-only construction; remaining constants keep gamma = 1 + R/c_v.
  static GasModel full_euler(Scalar gamma_) {
    GasModel g;
    g.gamma = gamma_;
    g.gas_constant_R = Scalar(1);
    g.c_v = Scalar(1) / (gamma_ - Scalar(1));
    g.kappa = Scalar(1);
    g.mode = Mode::FullEuler;
    g.validate();
    return g;
  }

  static GasModel full_euler(Scalar gamma_, Scalar R_, Scalar c_v_, Scalar kappa_) {
    GasModel g;
    g.gamma = gamma_;
    g.gas_constant_R = R_;
    g.c_v = c_v_;
    g.kappa = kappa_;
    g.mode = Mode::FullEuler;
    g.validate();
    return g;
  }

  static GasModel isentropic(Scalar gamma_, Scalar kappa0_) {
    GasModel g;
    g.gamma = gamma_;
    g.c_v = Scalar(1) / (gamma_ - Scalar(1));
    g.kappa0 = kappa0_;
    g.mode = Mode::Isentropic;
    g.validate();
    return g;
  }

  void validate() const {
    if (!(gamma > Scalar(1)))
      fail(Err::InvalidState, "GasModel requires gamma > 1");
    if (!(gas_constant_R > Scalar(0)) || !(c_v > Scalar(0)) ||
        !(kappa > Scalar(0)) || !(kappa0 > Scalar(0)))
      fail(Err::InvalidState, "GasModel constants must be positive");
    const Scalar g_implied = Scalar(1) + gas_constant_R / c_v;
    if (std::abs(g_implied - gamma) > Scalar(1e-12) * gamma)
      fail(Err::InvalidState, "GasModel: gamma != 1 + R/c_v");
  }

  // Conserved components per state: d+2 (full) or d+1 (isentropic).
  Index state_size(Index dim) const {
    return dim + (mode == Mode::FullEuler ? 2 : 1);
  }
};

template <typename Scalar>
struct PrimState {
  Scalar rho{};
  SpatialVec<Scalar> v;
  Scalar p{};

  PrimState() = default;
  PrimState(Scalar rho_, Scalar u_, Scalar p_) : rho(rho_), v(1), p(p_) { v[0] = u_; }
  PrimState(Scalar rho_, Scalar u_, Scalar w_, Scalar p_) : rho(rho_), v(2), p(p_) {
    v[0] = u_;
    v[1] = w_;
  }
  PrimState(Scalar rho_, SpatialVec<Scalar> v_, Scalar p_)
      : rho(rho_), v(std::move(v_)), p(p_) {}

  Index dim() const { return v.size(); }
};

template <typename Scalar>
struct ConsState {
  Scalar rho{};
  SpatialVec<Scalar> m;
  Scalar rhoE{};

  ConsState() = default;
  ConsState(Scalar rho_, Scalar mx_, Scalar rhoE_) : rho(rho_), m(1), rhoE(rhoE_) {
    m[0] = mx_;
  }
  ConsState(Scalar rho_, SpatialVec<Scalar> m_, Scalar rhoE_)
      : rho(rho_), m(std::move(m_)), rhoE(rhoE_) {}

  Index dim() const { return m.size(); }
};

namespace detail {

// Kinetic-energy sums run left to right so that a d=2 state with zero
// transverse momentum reproduces the d=1 arithmetic bit for bit.
template <typename Scalar, typename Vec>
inline Scalar kinetic_energy(Scalar rho, const Vec& m) {
  Scalar ke = Scalar(0);
  for (Index j = 0; j < m.size(); ++j) ke += m[j] * m[j];
  return Scalar(0.5) * ke / rho;
}

}  // namespace detail

template <typename Scalar>
inline void validate_state(const GasModel<Scalar>& g, const PrimState<Scalar>& w) {
  if (!(w.rho > vacuum_floor<Scalar>))
    fail(Err::InvalidState, "density " + std::to_string(double(w.rho)) + " at/below vacuum floor");
  if (g.mode == Mode::FullEuler && !(w.p > vacuum_floor<Scalar>))
    fail(Err::InvalidState, "pressure " + std::to_string(double(w.p)) + " at/below vacuum floor");
  if (w.dim() < 1 || w.dim() > 2) fail(Err::InvalidState, "dimension must be 1 or 2");
}

// In isentropic mode pressure is slaved to density.
template <typename Scalar>
inline Scalar pressure_isentropic(const GasModel<Scalar>& g, Scalar rho) {
  if (g.mode != Mode::Isentropic)
    fail(Err::ModeError, "pressure_isentropic requires Isentropic mode");
  if (!(rho > vacuum_floor<Scalar>)) fail(Err::InvalidState, "nonpositive density");
  return g.kappa0 * std::pow(rho, g.gamma);
}

template <typename Scalar>
inline Scalar effective_pressure(const GasModel<Scalar>& g, const PrimState<Scalar>& w) {
  return g.mode == Mode::FullEuler ? w.p : g.kappa0 * std::pow(w.rho, g.gamma);
}

template <typename Scalar>
inline ConsState<Scalar> cons_from_prim(const GasModel<Scalar>& g, const PrimState<Scalar>& w) {
  validate_state(g, w);
  ConsState<Scalar> u;
  u.rho = w.rho;
  u.m = w.rho * w.v;
  const Scalar p = effective_pressure(g, w);
  u.rhoE = p / (g.gamma - Scalar(1)) + detail::kinetic_energy(u.rho, u.m);
  return u;
}

template <typename Scalar>
inline PrimState<Scalar> prim_from_cons(const GasModel<Scalar>& g, const ConsState<Scalar>& u) {
  if (!(u.rho > vacuum_floor<Scalar>))
    fail(Err::InvalidState, "density " + std::to_string(double(u.rho)) + " at/below vacuum floor");
  PrimState<Scalar> w;
  w.rho = u.rho;
  w.v = u.m / u.rho;
  if (g.mode == Mode::FullEuler) {
    w.p = (g.gamma - Scalar(1)) * (u.rhoE - detail::kinetic_energy(u.rho, u.m));
    if (!(w.p > vacuum_floor<Scalar>))
      fail(Err::InvalidState, "recovered pressure " + std::to_string(double(w.p)) + " at/below vacuum floor");
  } else {
    w.p = g.kappa0 * std::pow(u.rho, g.gamma);
  }
  return w;
}

template <typename Scalar>
inline Scalar sound_speed(const GasModel<Scalar>& g, const PrimState<Scalar>& w) {
  validate_state(g, w);
  const Scalar p = effective_pressure(g, w);
  return std::sqrt(g.gamma * p / w.rho);  // c^2 = dp/drho at fixed S = gamma p / rho
}

template <typename Scalar>
inline Scalar entropy_S(const GasModel<Scalar>& g, const PrimState<Scalar>& w) {
  if (g.mode != Mode::FullEuler) fail(Err::ModeError, "entropy_S requires FullEuler mode");
  validate_state(g, w);
  // inverse of p = kappa rho^gamma exp(S/c_v)
  return g.c_v * std::log(w.p / (g.kappa * std::pow(w.rho, g.gamma)));
}

template <typename Scalar>
inline Scalar temperature(const GasModel<Scalar>& g, const PrimState<Scalar>& w) {
  if (g.mode != Mode::FullEuler) fail(Err::ModeError, "temperature requires FullEuler mode");
  validate_state(g, w);
  return w.p / (g.gas_constant_R * w.rho);
}

template <typename Scalar>
inline Scalar internal_energy(const GasModel<Scalar>& g, const PrimState<Scalar>& w) {
  validate_state(g, w);
  return effective_pressure(g, w) / ((g.gamma - Scalar(1)) * w.rho);
}

// --- packing between structured states and flat conserved vectors --------
//
// Layout: [rho, m_0 .. m_{d-1}, rhoE]  (energy row absent in isentropic mode).

template <typename Scalar>
inline StateVec<Scalar> to_state_vector(const GasModel<Scalar>& g, const ConsState<Scalar>& u) {
  const Index d = u.dim();
  StateVec<Scalar> q(g.state_size(d));
  q[0] = u.rho;
  for (Index j = 0; j < d; ++j) q[1 + j] = u.m[j];
  if (g.mode == Mode::FullEuler) q[d + 1] = u.rhoE;
  return q;
}

template <typename Scalar, typename Derived>
inline ConsState<Scalar> cons_from_state_vector(const GasModel<Scalar>& g,
                                                const Eigen::MatrixBase<Derived>& q,
                                                Index dim) {
  if (q.size() != g.state_size(dim))
    fail(Err::InvalidState, "state vector length does not match model/dimension");
  ConsState<Scalar> u;
  u.rho = q[0];
  u.m.resize(dim);
  for (Index j = 0; j < dim; ++j) u.m[j] = q[1 + j];
  if (g.mode == Mode::FullEuler) {
    u.rhoE = q[dim + 1];
  } else {
    if (!(u.rho > vacuum_floor<Scalar>)) fail(Err::InvalidState, "nonpositive density");
    u.rhoE = g.kappa0 * std::pow(u.rho, g.gamma) / (g.gamma - Scalar(1)) +
             detail::kinetic_energy(u.rho, u.m);
  }
  return u;
}

// Column-level helpers for the hot scheme loops (no struct round trips).

template <typename Scalar, typename Derived>
inline Scalar pressure_of(const GasModel<Scalar>& g, const Eigen::MatrixBase<Derived>& q,
                          Index dim) {
  if (g.mode == Mode::FullEuler) {
    Scalar ke = Scalar(0);
    for (Index j = 0; j < dim; ++j) ke += q[1 + j] * q[1 + j];
    return (g.gamma - Scalar(1)) * (q[dim + 1] - Scalar(0.5) * ke / q[0]);
  }
  return g.kappa0 * std::pow(q[0], g.gamma);
}

}  // namespace gasdyn

#endif  // GASDYN_GAS_HPP_
