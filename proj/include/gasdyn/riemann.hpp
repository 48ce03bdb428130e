#ifndef GASDYN_RIEMANN_HPP_
#define GASDYN_RIEMANN_HPP_

#include <algorithm>
#include <cmath>

#include "gasdyn/flux.hpp"
#include "gasdyn/gas.hpp"

namespace gasdyn {

// Self-similar wave pattern of the 1D Riemann problem.  Wave speeds are
// stored outer-to-inner per side; shocks carry head == tail.
template <typename Scalar>
struct RiemannSolution {
  WaveKind left_wave{};
  WaveKind right_wave{};
  Scalar p_star{};
  Scalar u_star{};
  Scalar rho_star_L{};
  Scalar rho_star_R{};
  Scalar left_head{};    // fastest left-going signal
  Scalar left_tail{};    // left_head <= left_tail <= u_star
  Scalar right_tail{};   // u_star <= right_tail <= right_head
  Scalar right_head{};

  Scalar contact_speed() const { return u_star; }
};

namespace detail {

// Toro's pressure function for one side: u* = u_K -/+ f_K(p).
template <typename Scalar>
struct PressureSide {
  Scalar rho, u, p, c, A, B;

  PressureSide(const GasModel<Scalar>& g, Scalar rho_, Scalar u_, Scalar p_)
      : rho(rho_), u(u_), p(p_) {
    c = std::sqrt(g.gamma * p / rho);
    A = Scalar(2) / ((g.gamma + Scalar(1)) * rho);
    B = (g.gamma - Scalar(1)) / (g.gamma + Scalar(1)) * p;
  }

  Scalar f(const GasModel<Scalar>& g, Scalar ps) const {
    if (ps > p)  // shock branch
      return (ps - p) * std::sqrt(A / (ps + B));
    return Scalar(2) * c / (g.gamma - Scalar(1)) *
           (std::pow(ps / p, (g.gamma - Scalar(1)) / (Scalar(2) * g.gamma)) - Scalar(1));
  }

  Scalar df(const GasModel<Scalar>& g, Scalar ps) const {
    if (ps > p) {
      const Scalar root = std::sqrt(A / (ps + B));
      return root * (Scalar(1) - (ps - p) / (Scalar(2) * (ps + B)));
    }
    return std::pow(ps / p, -(g.gamma + Scalar(1)) / (Scalar(2) * g.gamma)) / (rho * c);
  }
};

template <typename Scalar>
inline Scalar star_density(const GasModel<Scalar>& g, Scalar rho, Scalar p, Scalar p_star) {
  const Scalar r = p_star / p;
  if (p_star > p) {  // Hugoniot
    const Scalar mu2 = (g.gamma - Scalar(1)) / (g.gamma + Scalar(1));
    return rho * (r + mu2) / (mu2 * r + Scalar(1));
  }
  return rho * std::pow(r, Scalar(1) / g.gamma);  // isentrope
}

}  // namespace detail

// Exact solution of the Riemann problem for the full Euler system along
// the given axis; transverse velocity components ride passively.
template <typename Scalar>
inline RiemannSolution<Scalar> solve_exact(const GasModel<Scalar>& g,
                                           const PrimState<Scalar>& wL,
                                           const PrimState<Scalar>& wR,
                                           Index axis = 0) {
  if (g.mode != Mode::FullEuler)
    fail(Err::ModeError, "solve_exact requires FullEuler mode");
  validate_state(g, wL);
  validate_state(g, wR);

  const detail::PressureSide<Scalar> L(g, wL.rho, wL.v[axis], wL.p);
  const detail::PressureSide<Scalar> R(g, wR.rho, wR.v[axis], wR.p);
  const Scalar du = R.u - L.u;
  const Scalar gm1 = g.gamma - Scalar(1);

  // Pressure positivity: the two rarefactions must still meet at p > 0.
  if (Scalar(2) * (L.c + R.c) / gm1 <= du)
    fail(Err::VacuumFormation, "velocity divergence exceeds the positivity bound");

  auto eval = [&](Scalar ps) { return L.f(g, ps) + R.f(g, ps) + du; };

  // Two-rarefaction initial guess, floored per design.
  const Scalar z = gm1 / (Scalar(2) * g.gamma);
  const Scalar ptr_num = L.c + R.c - Scalar(0.5) * gm1 * du;
  const Scalar ptr_den = L.c / std::pow(L.p, z) + R.c / std::pow(R.p, z);
  Scalar ps = std::max(Scalar(1e-8), std::pow(ptr_num / ptr_den, Scalar(1) / z));

  bool converged = false;
  for (int it = 0; it < 100; ++it) {
    const Scalar fval = eval(ps);
    const Scalar dval = L.df(g, ps) + R.df(g, ps);
    const Scalar pn = ps - fval / dval;
    if (!std::isfinite(pn) || pn <= Scalar(0)) break;
    const Scalar change = std::abs(pn - ps);
    ps = pn;
    if (change <= Scalar(1e-12) * ps) {
      converged = true;
      break;
    }
  }

  if (!converged) {
    // Bisection fallback on [eps, expanding upper bound].
    Scalar lo = Scalar(1e-14) * std::min(L.p, R.p);
    Scalar hi = std::max(L.p, R.p);
    int guard = 0;
    while (eval(hi) < Scalar(0) && guard++ < 200) hi *= Scalar(2);
    if (guard >= 200) fail(Err::NoConvergence, "pressure bracket not found");
    for (int it = 0; it < 200; ++it) {
      ps = Scalar(0.5) * (lo + hi);
      (eval(ps) > Scalar(0) ? hi : lo) = ps;
      if (hi - lo <= Scalar(1e-14) * ps) break;
    }
    ps = Scalar(0.5) * (lo + hi);
    if (!(ps > Scalar(0))) fail(Err::NoConvergence, "bisection failed");
  }

  RiemannSolution<Scalar> sol;
  sol.p_star = ps;
  sol.u_star = Scalar(0.5) * (L.u + R.u) + Scalar(0.5) * (R.f(g, ps) - L.f(g, ps));
  sol.left_wave = ps > L.p ? WaveKind::Shock : WaveKind::Rarefaction;
  sol.right_wave = ps > R.p ? WaveKind::Shock : WaveKind::Rarefaction;
  sol.rho_star_L = detail::star_density(g, L.rho, L.p, ps);
  sol.rho_star_R = detail::star_density(g, R.rho, R.p, ps);

  const Scalar gp1 = g.gamma + Scalar(1);
  if (sol.left_wave == WaveKind::Shock) {
    const Scalar s =
        L.u - L.c * std::sqrt(gp1 / (Scalar(2) * g.gamma) * ps / L.p + gm1 / (Scalar(2) * g.gamma));
    sol.left_head = sol.left_tail = s;
  } else {
    sol.left_head = L.u - L.c;
    sol.left_tail = sol.u_star - L.c * std::pow(ps / L.p, z);
  }
  if (sol.right_wave == WaveKind::Shock) {
    const Scalar s =
        R.u + R.c * std::sqrt(gp1 / (Scalar(2) * g.gamma) * ps / R.p + gm1 / (Scalar(2) * g.gamma));
    sol.right_tail = sol.right_head = s;
  } else {
    sol.right_head = R.u + R.c;
    sol.right_tail = sol.u_star + R.c * std::pow(ps / R.p, z);
  }
  return sol;
}

// Samples the self-similar solution at ray speed = x/t.  Transverse
// velocity switches sides at the contact.
template <typename Scalar>
inline PrimState<Scalar> sample(const RiemannSolution<Scalar>& sol, const GasModel<Scalar>& g,
                                const PrimState<Scalar>& wL, const PrimState<Scalar>& wR,
                                Scalar speed, Index axis = 0) {
  const Index d = wL.dim();
  const Scalar gm1 = g.gamma - Scalar(1);
  const Scalar gp1 = g.gamma + Scalar(1);

  PrimState<Scalar> w;
  w.v.resize(d);
  const PrimState<Scalar>& side = speed <= sol.u_star ? wL : wR;
  for (Index j = 0; j < d; ++j) w.v[j] = side.v[j];

  if (speed <= sol.u_star) {
    const Scalar uL = wL.v[axis];
    const Scalar cL = std::sqrt(g.gamma * wL.p / wL.rho);
    if (speed <= sol.left_head) return wL;
    if (speed >= sol.left_tail) {
      w.rho = sol.rho_star_L;
      w.v[axis] = sol.u_star;
      w.p = sol.p_star;
      return w;
    }
    // inside the left fan
    const Scalar fac = Scalar(2) / gp1 + gm1 / (gp1 * cL) * (uL - speed);
    w.rho = wL.rho * std::pow(fac, Scalar(2) / gm1);
    w.v[axis] = Scalar(2) / gp1 * (cL + Scalar(0.5) * gm1 * uL + speed);
    w.p = wL.p * std::pow(fac, Scalar(2) * g.gamma / gm1);
    return w;
  }

  const Scalar uR = wR.v[axis];
  const Scalar cR = std::sqrt(g.gamma * wR.p / wR.rho);
  if (speed >= sol.right_head) return wR;
  if (speed <= sol.right_tail) {
    w.rho = sol.rho_star_R;
    w.v[axis] = sol.u_star;
    w.p = sol.p_star;
    return w;
  }
  const Scalar fac = Scalar(2) / gp1 - gm1 / (gp1 * cR) * (uR - speed);
  w.rho = wR.rho * std::pow(fac, Scalar(2) / gm1);
  w.v[axis] = Scalar(2) / gp1 * (-cR + Scalar(0.5) * gm1 * uR + speed);
  w.p = wR.p * std::pow(fac, Scalar(2) * g.gamma / gm1);
  return w;
}

// Two-wave HLL flux with one-sided speed estimates
//   S_L = min(uL - cL, uR - cR),  S_R = max(uL + cL, uR + cR).
template <typename Scalar, typename DerivedL, typename DerivedR>
inline StateVec<Scalar> hll_flux_cols(const GasModel<Scalar>& g,
                                      const Eigen::MatrixBase<DerivedL>& qL,
                                      const Eigen::MatrixBase<DerivedR>& qR,
                                      Index dim, Index axis) {
  if ((qL.array() == qR.array()).all()) return flux_col(g, qL, dim, axis);  // exact consistency

  const Scalar pL = pressure_of(g, qL, dim);
  const Scalar pR = pressure_of(g, qR, dim);
  if (!(qL[0] > vacuum_floor<Scalar>) || !(qR[0] > vacuum_floor<Scalar>) ||
      !(pL > vacuum_floor<Scalar>) || !(pR > vacuum_floor<Scalar>))
    fail(Err::InvalidState, "invalid state in HLL flux");

  const Scalar uL = qL[1 + axis] / qL[0];
  const Scalar uR = qR[1 + axis] / qR[0];
  const Scalar cL = std::sqrt(g.gamma * pL / qL[0]);
  const Scalar cR = std::sqrt(g.gamma * pR / qR[0]);
  const Scalar sL = std::min(uL - cL, uR - cR);
  const Scalar sR = std::max(uL + cL, uR + cR);

  if (sL >= Scalar(0)) return flux_col(g, qL, dim, axis);
  if (sR <= Scalar(0)) return flux_col(g, qR, dim, axis);
  const StateVec<Scalar> fL = flux_col(g, qL, dim, axis);
  const StateVec<Scalar> fR = flux_col(g, qR, dim, axis);
  StateVec<Scalar> f(qL.size());
  for (Index k = 0; k < f.size(); ++k)
    f[k] = (sR * fL[k] - sL * fR[k] + sL * sR * (qR[k] - qL[k])) / (sR - sL);
  return f;
}

template <typename Scalar>
inline StateVec<Scalar> hll_flux(const GasModel<Scalar>& g, const ConsState<Scalar>& uL,
                                 const ConsState<Scalar>& uR, Index axis = 0) {
  return hll_flux_cols(g, to_state_vector(g, uL), to_state_vector(g, uR), uL.dim(), axis);
}

// f(uR) - f(uL) - s (uR - uL), componentwise; zero iff (s, uL, uR) is a
// discontinuity solution.
template <typename Scalar>
inline StateVec<Scalar> rankine_hugoniot_residual(const GasModel<Scalar>& g, Scalar s,
                                                  const ConsState<Scalar>& uL,
                                                  const ConsState<Scalar>& uR,
                                                  Index axis = 0) {
  const Index d = uL.dim();
  const StateVec<Scalar> qL = to_state_vector(g, uL);
  const StateVec<Scalar> qR = to_state_vector(g, uR);
  const StateVec<Scalar> fL = flux_col(g, qL, d, axis);
  const StateVec<Scalar> fR = flux_col(g, qR, d, axis);
  return fR - fL - s * (qR - qL);
}

// Clausius verdict for a discontinuity, with entropy pair a(S) = S:
//   s [rho S] <= [m S]  up to 1e-12 slack (compressive shocks pass,
//   expansion shocks fail, contacts produce nothing).
template <typename Scalar>
inline bool entropy_admissible(const GasModel<Scalar>& g, Scalar s, const ConsState<Scalar>& uL,
                               const ConsState<Scalar>& uR, Index axis = 0,
                               Scalar rh_tol = Scalar(1e-6)) {
  if (g.mode != Mode::FullEuler) fail(Err::ModeError, "entropy_admissible requires FullEuler");
  const StateVec<Scalar> res = rankine_hugoniot_residual(g, s, uL, uR, axis);
  const PrimState<Scalar> wL = prim_from_cons(g, uL);
  const PrimState<Scalar> wR = prim_from_cons(g, uR);
  const Scalar scale = (Scalar(1) + std::abs(s)) * std::max(Scalar(1), std::max(wL.p, wR.p));
  if (res.template lpNorm<Eigen::Infinity>() > rh_tol * scale)
    fail(Err::NotADiscontinuity, "RH residual exceeds tolerance");

  const Scalar SL = entropy_S(g, wL);
  const Scalar SR = entropy_S(g, wR);
  const Scalar lhs = s * (uR.rho * SR - uL.rho * SL);
  const Scalar rhs = uR.m[axis] * SR - uL.m[axis] * SL;
  return lhs <= rhs + Scalar(1e-12);
}

}  // namespace gasdyn

#endif  // GASDYN_RIEMANN_HPP_
