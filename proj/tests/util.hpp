#ifndef GASDYN_TESTS_UTIL_HPP_
#define GASDYN_TESTS_UTIL_HPP_

#include <optional>
#include <random>

#include "gasdyn/gas.hpp"

namespace testutil {

// Runs f and reports the gasdyn error code it throws, if any.
template <typename F>
inline std::optional<gasdyn::Err> thrown_code(F&& f) {
  try {
    f();
  } catch (const gasdyn::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// Random valid primitive state with rho, p in [1e-3, 1e3], |v| <= 10.
template <typename Rng>
inline gasdyn::PrimState<double> random_prim(Rng& rng, int dim) {
  std::uniform_real_distribution<double> logu(-3.0, 3.0);
  std::uniform_real_distribution<double> vel(-10.0, 10.0);
  gasdyn::PrimState<double> w;
  w.rho = std::pow(10.0, logu(rng));
  w.p = std::pow(10.0, logu(rng));
  w.v.resize(dim);
  for (int j = 0; j < dim; ++j) w.v[j] = vel(rng);
  return w;
}

// Moderate-range states (rho, p in [0.1, 10], |v| <= 3) for checks whose
// finite-difference oracle degrades when eigenvalues nearly coincide.
template <typename Rng>
inline gasdyn::PrimState<double> random_prim_moderate(Rng& rng, int dim) {
  std::uniform_real_distribution<double> logu(-1.0, 1.0);
  std::uniform_real_distribution<double> vel(-3.0, 3.0);
  gasdyn::PrimState<double> w;
  w.rho = std::pow(10.0, logu(rng));
  w.p = std::pow(10.0, logu(rng));
  w.v.resize(dim);
  for (int j = 0; j < dim; ++j) w.v[j] = vel(rng);
  return w;
}

}  // namespace testutil

#endif  // GASDYN_TESTS_UTIL_HPP_
