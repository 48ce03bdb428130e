#ifndef GASDYN_FLUX_HPP_
#define GASDYN_FLUX_HPP_

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "gasdyn/gas.hpp"

namespace gasdyn {

// Unit direction xi in R^d for directional fluxes and characteristics.
template <typename Scalar>
class Direction {
 public:
  explicit Direction(SpatialVec<Scalar> xi) : xi_(std::move(xi)) {
    if (xi_.size() < 1 || xi_.size() > 2)
      fail(Err::InvalidState, "Direction dimension must be 1 or 2");
    if (std::abs(xi_.norm() - Scalar(1)) > Scalar(1e-14))
      fail(Err::InvalidState, "Direction must be a unit vector");
  }

  static Direction axis(Index dim, Index k) {
    SpatialVec<Scalar> e = SpatialVec<Scalar>::Zero(dim);
    e[k] = Scalar(1);
    return Direction(std::move(e));
  }

  const SpatialVec<Scalar>& vec() const { return xi_; }
  Index dim() const { return xi_.size(); }

 private:
  SpatialVec<Scalar> xi_;
};

// xi-directional flux of the full Euler system:
//   ( rho v.xi,  (v.xi) m + p xi,  (v.xi)(rhoE + p) )
template <typename Scalar>
inline StateVec<Scalar> flux_euler(const GasModel<Scalar>& g, const ConsState<Scalar>& u,
                                   const Direction<Scalar>& dir) {
  const PrimState<Scalar> w = prim_from_cons(g, u);  // validates; p is mode-aware
  const Index d = u.dim();
  const Scalar p = w.p;
  Scalar vn = Scalar(0);
  for (Index j = 0; j < d; ++j) vn += w.v[j] * dir.vec()[j];
  StateVec<Scalar> f(d + 2);
  f[0] = u.rho * vn;
  for (Index j = 0; j < d; ++j) f[1 + j] = vn * u.m[j] + p * dir.vec()[j];
  f[d + 1] = vn * (u.rhoE + p);
  return f;
}

// Isentropic flux: ( rho v.xi, (v.xi) m + kappa0 rho^gamma xi ).
template <typename Scalar>
inline StateVec<Scalar> flux_isentropic(const GasModel<Scalar>& g, const ConsState<Scalar>& u,
                                        const Direction<Scalar>& dir) {
  if (g.mode != Mode::Isentropic) fail(Err::ModeError, "flux_isentropic requires Isentropic mode");
  if (!(u.rho > vacuum_floor<Scalar>)) fail(Err::InvalidState, "nonpositive density");
  const Index d = u.dim();
  const Scalar p = g.kappa0 * std::pow(u.rho, g.gamma);
  Scalar vn = Scalar(0);
  for (Index j = 0; j < d; ++j) vn += (u.m[j] / u.rho) * dir.vec()[j];
  StateVec<Scalar> f(d + 1);
  f[0] = u.rho * vn;
  for (Index j = 0; j < d; ++j) f[1 + j] = vn * u.m[j] + p * dir.vec()[j];
  return f;
}

template <typename Scalar>
inline StateVec<Scalar> flux(const GasModel<Scalar>& g, const ConsState<Scalar>& u,
                             const Direction<Scalar>& dir) {
  return g.mode == Mode::FullEuler ? flux_euler(g, u, dir) : flux_isentropic(g, u, dir);
}

// Axis-aligned flux on a packed state column; the workhorse of the schemes.
template <typename Scalar, typename Derived>
inline StateVec<Scalar> flux_col(const GasModel<Scalar>& g, const Eigen::MatrixBase<Derived>& q,
                                 Index dim, Index axis) {
  const Scalar p = pressure_of(g, q, dim);
  const Scalar vn = q[1 + axis] / q[0];
  StateVec<Scalar> f(q.size());
  f[0] = q[1 + axis];
  for (Index j = 0; j < dim; ++j) f[1 + j] = vn * q[1 + j];
  f[1 + axis] += p;
  if (g.mode == Mode::FullEuler) f[dim + 1] = vn * (q[dim + 1] + p);
  return f;
}

// Characteristic speeds along xi, sorted ascending.
// Full Euler: v.xi - c, v.xi (x d), v.xi + c; isentropic drops one v.xi.
template <typename Scalar>
inline StateVec<Scalar> char_speeds(const GasModel<Scalar>& g, const ConsState<Scalar>& u,
                                    const Direction<Scalar>& dir) {
  const PrimState<Scalar> w = prim_from_cons(g, u);
  const Scalar c = sound_speed(g, w);
  const Index d = u.dim();
  Scalar vn = Scalar(0);
  for (Index j = 0; j < d; ++j) vn += w.v[j] * dir.vec()[j];
  const Index m = g.state_size(d);
  StateVec<Scalar> lam(m);
  lam[0] = vn - c;
  for (Index j = 1; j + 1 < m; ++j) lam[j] = vn;
  lam[m - 1] = vn + c;
  std::sort(lam.data(), lam.data() + m);
  return lam;
}

template <typename Scalar>
struct HyperbolicityReport {
  Scalar max_imag = Scalar(0);      // largest |Im lambda| of the numeric Jacobian
  Scalar max_mismatch = Scalar(0);  // max |numeric - analytic| over sorted eigenvalues
  StateVec<Scalar> analytic;
  StateVec<Scalar> numeric;         // sorted real parts
};

// Builds xi . grad f(u) by central finite differences on the conserved
// vector and compares its eigenvalues against the analytic speeds.
template <typename Scalar>
inline HyperbolicityReport<Scalar> hyperbolicity_check(const GasModel<Scalar>& g,
                                                       const ConsState<Scalar>& u,
                                                       const Direction<Scalar>& dir,
                                                       Scalar h = Scalar(1e-6)) {
  const Index d = u.dim();
  const Index m = g.state_size(d);
  const StateVec<Scalar> q0 = to_state_vector(g, u);

  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> jac(m, m);
  for (Index j = 0; j < m; ++j) {
    const Scalar hj = h * (Scalar(1) + std::abs(q0[j]));
    StateVec<Scalar> qp = q0, qm = q0;
    qp[j] += hj;
    qm[j] -= hj;
    const StateVec<Scalar> fp = flux(g, cons_from_state_vector(g, qp, d), dir);
    const StateVec<Scalar> fm = flux(g, cons_from_state_vector(g, qm, d), dir);
    jac.col(j) = (fp - fm) / (Scalar(2) * hj);
  }

  Eigen::EigenSolver<Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>> es(jac, false);
  if (es.info() != Eigen::Success) fail(Err::SingularJacobian, "eigensolve failed");

  HyperbolicityReport<Scalar> rep;
  rep.analytic = char_speeds(g, u, dir);
  rep.numeric.resize(m);
  for (Index j = 0; j < m; ++j) {
    rep.max_imag = std::max(rep.max_imag, std::abs(es.eigenvalues()[j].imag()));
    rep.numeric[j] = es.eigenvalues()[j].real();
  }
  std::sort(rep.numeric.data(), rep.numeric.data() + m);
  for (Index j = 0; j < m; ++j)
    rep.max_mismatch = std::max(rep.max_mismatch, std::abs(rep.numeric[j] - rep.analytic[j]));
  return rep;
}

// |v_k| + c for the fastest coordinate direction of one cell.
template <typename Scalar, typename Derived>
inline Scalar max_signal_speed_col(const GasModel<Scalar>& g, const Eigen::MatrixBase<Derived>& q,
                                   Index dim) {
  const Scalar p = pressure_of(g, q, dim);
  if (!(q[0] > vacuum_floor<Scalar>) || !(p > vacuum_floor<Scalar>))
    fail(Err::InvalidState, "invalid state in wave-speed scan");
  const Scalar c = std::sqrt(g.gamma * p / q[0]);
  Scalar s = Scalar(0);
  for (Index j = 0; j < dim; ++j) s = std::max(s, std::abs(q[1 + j] / q[0]) + c);
  return s;
}

}  // namespace gasdyn

#endif  // GASDYN_FLUX_HPP_
