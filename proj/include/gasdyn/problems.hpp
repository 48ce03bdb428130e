#ifndef GASDYN_PROBLEMS_HPP_
#define GASDYN_PROBLEMS_HPP_

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "gasdyn/riemann.hpp"

namespace gasdyn {

enum class ReferenceKind { ExactRiemann, SelfConvergence, None };

// Canonical initial-value problems.  The states are community regression
// anchors; their ground truth is the in-repo exact solver, which keeps
// the suite self-verifying.
template <typename Scalar>
struct ProblemSpec {
  std::string name;
  int dimension = 1;
  Scalar x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  Scalar t_final = Scalar(0.2);
  GasModel<Scalar> gas;
  BoundaryKind bc_x = BoundaryKind::Transmissive;
  BoundaryKind bc_y = BoundaryKind::Transmissive;
  ReferenceKind reference = ReferenceKind::None;

  std::function<PrimState<Scalar>(Scalar)> init1d;
  std::function<PrimState<Scalar>(Scalar, Scalar)> init2d;
  // analytic (x, t) reference; set for the advection family
  std::function<PrimState<Scalar>(Scalar, Scalar)> exact;

  // two-state Riemann reference data
  bool has_riemann_data = false;
  Scalar x_jump = Scalar(0.5);
  PrimState<Scalar> wL, wR;
};

namespace detail {

template <typename Scalar>
inline ProblemSpec<Scalar> riemann_problem(const std::string& name, Scalar gamma,
                                           PrimState<Scalar> wL, PrimState<Scalar> wR,
                                           Scalar t_final) {
  ProblemSpec<Scalar> p;
  p.name = name;
  p.gas = GasModel<Scalar>::full_euler(gamma);
  p.t_final = t_final;
  p.reference = ReferenceKind::ExactRiemann;
  p.has_riemann_data = true;
  p.wL = wL;
  p.wR = wR;
  p.init1d = [wL, wR](Scalar x) { return x < Scalar(0.5) ? wL : wR; };
  return p;
}

}  // namespace detail

inline std::vector<std::string> problem_catalog() {
  return {"sod", "lax", "double_rarefaction", "entropy_wave", "quadrant_2d", "isentropic_sod"};
}

template <typename Scalar>
inline ProblemSpec<Scalar> build(const std::string& name) {
  using P = PrimState<Scalar>;
  if (name == "sod")
    return detail::riemann_problem<Scalar>("sod", Scalar(1.4), P(1, 0, 1),
                                           P(Scalar(0.125), 0, Scalar(0.1)), Scalar(0.2));
  if (name == "lax")
    return detail::riemann_problem<Scalar>(
        "lax", Scalar(1.4), P(Scalar(0.445), Scalar(0.698), Scalar(3.528)),
        P(Scalar(0.5), 0, Scalar(0.571)), Scalar(0.13));
  if (name == "double_rarefaction")
    return detail::riemann_problem<Scalar>("double_rarefaction", Scalar(1.4),
                                           P(1, Scalar(-2), Scalar(0.4)),
                                           P(1, Scalar(2), Scalar(0.4)), Scalar(0.15));
  if (name == "entropy_wave") {
    ProblemSpec<Scalar> p;
    p.name = name;
    p.gas = GasModel<Scalar>::full_euler(Scalar(1.4));
    p.t_final = Scalar(1);
    p.bc_x = BoundaryKind::Periodic;
    p.reference = ReferenceKind::ExactRiemann;  // analytic advection profile
    auto profile = [](Scalar x) {
      return Scalar(1) + Scalar(0.2) * std::sin(Scalar(2) * Scalar(EIGEN_PI) * x);
    };
    p.init1d = [profile](Scalar x) { return PrimState<Scalar>(profile(x), Scalar(1), Scalar(1)); };
    p.exact = [profile](Scalar x, Scalar t) {
      Scalar xi = x - t;  // advected with u = 1, periodic on [0,1)
      xi -= std::floor(xi);
      return PrimState<Scalar>(profile(xi), Scalar(1), Scalar(1));
    };
    return p;
  }
  if (name == "quadrant_2d") {
    // Sod left/right pair arranged diagonally; symmetric under x <-> y.
    ProblemSpec<Scalar> p;
    p.name = name;
    p.dimension = 2;
    p.gas = GasModel<Scalar>::full_euler(Scalar(1.4));
    p.t_final = Scalar(0.15);
    p.reference = ReferenceKind::SelfConvergence;
    p.init2d = [](Scalar x, Scalar y) {
      const bool lo_x = x < Scalar(0.5);
      const bool lo_y = y < Scalar(0.5);
      if (lo_x == lo_y) return PrimState<Scalar>(1, 0, 0, 1);
      return PrimState<Scalar>(Scalar(0.125), 0, 0, Scalar(0.1));
    };
    return p;
  }
  if (name == "isentropic_sod") {
    ProblemSpec<Scalar> p;
    p.name = name;
    p.gas = GasModel<Scalar>::isentropic(Scalar(2), Scalar(1));
    p.t_final = Scalar(0.1);
    p.reference = ReferenceKind::SelfConvergence;
    p.init1d = [](Scalar x) {
      const Scalar rho = x < Scalar(0.5) ? Scalar(1) : Scalar(0.5);
      PrimState<Scalar> w(rho, Scalar(0), Scalar(0));
      w.p = std::pow(rho, Scalar(2));  // kappa0 = 1, gamma = 2
      return w;
    };
    return p;
  }
  fail(Err::UnknownProblem, "no catalog entry named '" + name + "'");
}

// Exact reference state at (x, t); the Riemann fan for two-state data,
// the advected profile for the smooth-wave family.
template <typename Scalar>
inline PrimState<Scalar> sample_reference(const ProblemSpec<Scalar>& spec, Scalar x, Scalar t) {
  if (spec.exact) return spec.exact(x, t);
  if (spec.reference == ReferenceKind::ExactRiemann && spec.has_riemann_data) {
    if (t <= Scalar(0)) return x < spec.x_jump ? spec.wL : spec.wR;
    const RiemannSolution<Scalar> sol = solve_exact(spec.gas, spec.wL, spec.wR);
    return sample(sol, spec.gas, spec.wL, spec.wR, (x - spec.x_jump) / t);
  }
  fail(Err::NoReference, "problem '" + spec.name + "' has no sampleable reference");
}

}  // namespace gasdyn

#endif  // GASDYN_PROBLEMS_HPP_
