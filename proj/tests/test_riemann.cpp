#include <doctest.h>

#include <cmath>
#include <random>

#include "gasdyn/riemann.hpp"
#include "oracles.hpp"
#include "util.hpp"

using namespace gasdyn;
using testutil::thrown_code;

namespace {
const GasModel<double> air = GasModel<double>::full_euler(1.4);
const PrimState<double> sod_L(1, 0, 1);
const PrimState<double> sod_R(0.125, 0, 0.1);
}

TEST_CASE("exact solver reproduces the bisection oracle on Sod") {
  const auto st = oracle::solve_bisection(1.4, {1, 0, 1}, {0.125, 0, 0.1});
  const RiemannSolution<double> sol = solve_exact(air, sod_L, sod_R);

  CHECK(sol.p_star == doctest::Approx(st.p_star).epsilon(1e-10));
  CHECK(sol.u_star == doctest::Approx(st.u_star).epsilon(1e-10));
  CHECK(sol.p_star == doctest::Approx(0.30313).epsilon(1e-4));
  CHECK(sol.u_star == doctest::Approx(0.92745).epsilon(1e-4));
  CHECK(sol.left_wave == WaveKind::Rarefaction);
  CHECK(sol.right_wave == WaveKind::Shock);
  CHECK(sol.rho_star_L == doctest::Approx(st.rho_star_L).epsilon(1e-10));
  CHECK(sol.rho_star_R == doctest::Approx(st.rho_star_R).epsilon(1e-10));
  CHECK(sol.right_head == doctest::Approx(st.right_speed).epsilon(1e-10));

  // ordering invariant
  CHECK(sol.left_head <= sol.left_tail);
  CHECK(sol.left_tail <= sol.u_star);
  CHECK(sol.u_star <= sol.right_tail);
  CHECK(sol.right_tail <= sol.right_head);
}

TEST_CASE("equal states give a zero-strength solution") {
  const PrimState<double> w(0.7, 1.3, 2.0);
  const RiemannSolution<double> sol = solve_exact(air, w, w);
  CHECK(sol.p_star == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(sol.u_star == doctest::Approx(1.3).epsilon(1e-12));
  CHECK(sol.rho_star_L == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(sol.rho_star_R == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("mirror symmetry") {
  std::mt19937 rng(11);
  int tested = 0;
  while (tested < 50) {
    const PrimState<double> a = testutil::random_prim_moderate(rng, 1);
    const PrimState<double> b = testutil::random_prim_moderate(rng, 1);
    const double du_crit = 2.0 * (sound_speed(air, a) + sound_speed(air, b)) / 0.4;
    if (b.v[0] - a.v[0] >= 0.9 * du_crit) continue;
    ++tested;
    PrimState<double> am = a, bm = b;
    am.v[0] = -a.v[0];
    bm.v[0] = -b.v[0];
    const RiemannSolution<double> s1 = solve_exact(air, a, b);
    const RiemannSolution<double> s2 = solve_exact(air, bm, am);
    CHECK(s2.p_star == doctest::Approx(s1.p_star).epsilon(1e-11));
    CHECK(s2.u_star == doctest::Approx(-s1.u_star).epsilon(1e-9));
    CHECK(s2.left_wave == s1.right_wave);
    CHECK(s2.right_wave == s1.left_wave);
    CHECK(s2.rho_star_L == doctest::Approx(s1.rho_star_R).epsilon(1e-10));
  }
}

TEST_CASE("sampling the Sod fan") {
  const RiemannSolution<double> sol = solve_exact(air, sod_L, sod_R);

  // unperturbed far field returns inputs exactly
  const PrimState<double> far_l = sample(sol, air, sod_L, sod_R, -100.0);
  CHECK(far_l.rho == sod_L.rho);
  CHECK(far_l.p == sod_L.p);
  const PrimState<double> far_r = sample(sol, air, sod_L, sod_R, 100.0);
  CHECK(far_r.rho == sod_R.rho);

  // state on the t-axis sits in the left star region
  const PrimState<double> ray0 = sample(sol, air, sod_L, sod_R, 0.0);
  CHECK(ray0.rho == doctest::Approx(0.42631942817849483).epsilon(1e-9));
  CHECK(ray0.v[0] == doctest::Approx(0.92745262004894964).epsilon(1e-9));
  CHECK(ray0.p == doctest::Approx(0.30313017805064646).epsilon(1e-9));

  // continuity at the rarefaction head and tail
  for (double s : {sol.left_head, sol.left_tail}) {
    const PrimState<double> lo = sample(sol, air, sod_L, sod_R, s - 1e-13);
    const PrimState<double> hi = sample(sol, air, sod_L, sod_R, s + 1e-13);
    CHECK(std::abs(lo.rho - hi.rho) <= 1e-10);
    CHECK(std::abs(lo.v[0] - hi.v[0]) <= 1e-10);
    CHECK(std::abs(lo.p - hi.p) <= 1e-10);
  }
}

TEST_CASE("transverse velocity switches at the contact") {
  PrimState<double> wl(1, 0, 0, 1);
  wl.v[1] = 3.0;
  PrimState<double> wr(0.125, 0, 0, 0.1);
  wr.v[1] = -4.0;
  const RiemannSolution<double> sol = solve_exact(air, wl, wr, 0);
  const PrimState<double> a = sample(sol, air, wl, wr, sol.u_star - 1e-6, 0);
  const PrimState<double> b = sample(sol, air, wl, wr, sol.u_star + 1e-6, 0);
  CHECK(a.v[1] == 3.0);
  CHECK(b.v[1] == -4.0);
}

TEST_CASE("vacuum formation is rejected") {
  CHECK(thrown_code([&] {
          solve_exact(air, PrimState<double>(1, -5, 0.4), PrimState<double>(1, 5, 0.4));
        }) == Err::VacuumFormation);
  // double rarefaction from the catalog stays clear of vacuum
  const RiemannSolution<double> sol =
      solve_exact(air, PrimState<double>(1, -2, 0.4), PrimState<double>(1, 2, 0.4));
  CHECK(sol.p_star == doctest::Approx(0.0018938734200487).epsilon(1e-8));
  CHECK(sol.u_star == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("newton agrees with the bisection oracle over random data") {
  std::mt19937 rng(321);
  int tested = 0;
  while (tested < 1000) {
    const PrimState<double> a = testutil::random_prim_moderate(rng, 1);
    const PrimState<double> b = testutil::random_prim_moderate(rng, 1);
    const double du_crit = 2.0 * (sound_speed(air, a) + sound_speed(air, b)) / 0.4;
    if (b.v[0] - a.v[0] >= 0.9 * du_crit) continue;  // skip near-vacuum data
    const auto st = oracle::solve_bisection(1.4, {a.rho, a.v[0], a.p}, {b.rho, b.v[0], b.p});
    const RiemannSolution<double> sol = solve_exact(air, a, b);
    CHECK(std::abs(sol.p_star - st.p_star) <= 1e-10 * st.p_star);
    ++tested;
  }
}

TEST_CASE("star states satisfy RH and Riemann invariants") {
  std::mt19937 rng(555);
  int tested = 0;
  while (tested < 300) {
    const PrimState<double> a = testutil::random_prim_moderate(rng, 1);
    const PrimState<double> b = testutil::random_prim_moderate(rng, 1);
    const double du_crit = 2.0 * (sound_speed(air, a) + sound_speed(air, b)) / 0.4;
    if (b.v[0] - a.v[0] >= 0.9 * du_crit) continue;
    const RiemannSolution<double> sol = solve_exact(air, a, b);
    if (!(sol.p_star > 1e-10)) continue;
    ++tested;

    const PrimState<double> star_l(sol.rho_star_L, sol.u_star, sol.p_star);
    const PrimState<double> star_r(sol.rho_star_R, sol.u_star, sol.p_star);
    if (sol.left_wave == WaveKind::Shock) {
      const StateVec<double> res = rankine_hugoniot_residual(
          air, sol.left_head, cons_from_prim(air, a), cons_from_prim(air, star_l));
      CHECK(res.lpNorm<Eigen::Infinity>() <= 1e-9 * (1.0 + std::abs(sol.p_star)));
    } else {
      // invariants across the left fan: u + 2c/(g-1) and p/rho^gamma
      const double cl = sound_speed(air, a);
      const double cs = sound_speed(air, star_l);
      CHECK(a.v[0] + 5.0 * cl == doctest::Approx(sol.u_star + 5.0 * cs).epsilon(1e-9));
      CHECK(a.p / std::pow(a.rho, 1.4) ==
            doctest::Approx(sol.p_star / std::pow(sol.rho_star_L, 1.4)).epsilon(1e-9));
    }
    if (sol.right_wave == WaveKind::Shock) {
      const StateVec<double> res = rankine_hugoniot_residual(
          air, sol.right_head, cons_from_prim(air, star_r), cons_from_prim(air, b));
      CHECK(res.lpNorm<Eigen::Infinity>() <= 1e-9 * (1.0 + std::abs(sol.p_star)));
    } else {
      const double cr = sound_speed(air, b);
      const double cs = sound_speed(air, star_r);
      CHECK(b.v[0] - 5.0 * cr == doctest::Approx(sol.u_star - 5.0 * cs).epsilon(1e-9));
    }
  }
}

TEST_CASE("hll flux consistency and upwind limits") {
  const ConsState<double> u = cons_from_prim(air, PrimState<double>(0.9, 0.4, 1.7));
  const StateVec<double> f = hll_flux(air, u, u);
  const StateVec<double> fe = flux_euler(air, u, Direction<double>::axis(1, 0));
  CHECK(f[0] == fe[0]);
  CHECK(f[1] == fe[1]);
  CHECK(f[2] == fe[2]);

  // supersonic right-moving: S_L > 0 picks the left flux
  const ConsState<double> fast = cons_from_prim(air, PrimState<double>(1, 5, 1));
  const ConsState<double> fast2 = cons_from_prim(air, PrimState<double>(0.9, 5.2, 1.1));
  const StateVec<double> fs = hll_flux(air, fast, fast2);
  const StateVec<double> fl = flux_euler(air, fast, Direction<double>::axis(1, 0));
  CHECK(fs[0] == fl[0]);
  CHECK(fs[1] == fl[1]);

  // Sod interface flux against an independent evaluation of the HLL
  // formula from primitive inputs
  const ConsState<double> ul = cons_from_prim(air, sod_L);
  const ConsState<double> ur = cons_from_prim(air, sod_R);
  const StateVec<double> fh = hll_flux(air, ul, ur);
  {
    const double cl = std::sqrt(1.4 * 1.0 / 1.0), cr = std::sqrt(1.4 * 0.1 / 0.125);
    const double sl = std::min(0.0 - cl, 0.0 - cr), sr = std::max(0.0 + cl, 0.0 + cr);
    const double El = 1.0 / 0.4, Er = 0.1 / 0.4;
    const double fl[3] = {0.0, 1.0, 0.0}, fr[3] = {0.0, 0.1, 0.0};
    const double du[3] = {0.125 - 1.0, 0.0, Er - El};
    for (int kk = 0; kk < 3; ++kk)
      CHECK(fh[kk] ==
            doctest::Approx((sr * fl[kk] - sl * fr[kk] + sl * sr * du[kk]) / (sr - sl))
                .epsilon(1e-13));
  }
  // HLL stays within 0.2 of the exact Godunov flux here (componentwise
  // differences evaluate to about 0.12, 0.12, 0.18)
  const RiemannSolution<double> sol = solve_exact(air, sod_L, sod_R);
  const PrimState<double> god = sample(sol, air, sod_L, sod_R, 0.0);
  const StateVec<double> fg =
      flux_euler(air, cons_from_prim(air, god), Direction<double>::axis(1, 0));
  for (int kk = 0; kk < 3; ++kk) CHECK(std::abs(fh[kk] - fg[kk]) < 0.2);
}

TEST_CASE("rankine-hugoniot residual") {
  // stationary contact: only density jumps, all fluxes equal
  const ConsState<double> cl = cons_from_prim(air, PrimState<double>(1, 0, 1));
  const ConsState<double> cr = cons_from_prim(air, PrimState<double>(0.5, 0, 1));
  const StateVec<double> res = rankine_hugoniot_residual(air, 0.0, cl, cr);
  CHECK(res.lpNorm<Eigen::Infinity>() == 0.0);

  // zero jump at any speed
  const StateVec<double> res2 = rankine_hugoniot_residual(air, 1.7, cl, cl);
  CHECK(res2.lpNorm<Eigen::Infinity>() == 0.0);

  // Sod right shock from the oracle star values
  const auto st = oracle::solve_bisection(1.4, {1, 0, 1}, {0.125, 0, 0.1});
  const ConsState<double> star =
      cons_from_prim(air, PrimState<double>(st.rho_star_R, st.u_star, st.p_star));
  const ConsState<double> right = cons_from_prim(air, sod_R);
  const StateVec<double> res3 = rankine_hugoniot_residual(air, st.right_speed, star, right);
  CHECK(res3.lpNorm<Eigen::Infinity>() <= 1e-9);
  CHECK(st.right_speed == doctest::Approx(1.7521557320301779).epsilon(1e-9));
}

TEST_CASE("entropy admissibility") {
  const auto st = oracle::solve_bisection(1.4, {1, 0, 1}, {0.125, 0, 0.1});
  const ConsState<double> star =
      cons_from_prim(air, PrimState<double>(st.rho_star_R, st.u_star, st.p_star));
  const ConsState<double> right = cons_from_prim(air, sod_R);

  // compressive shock passes
  CHECK(entropy_admissible(air, st.right_speed, star, right));
  // expansion shock (sides swapped, same speed satisfies RH) fails
  CHECK_FALSE(entropy_admissible(air, st.right_speed, right, star));

  // contact: admissible with zero production
  const ConsState<double> cl = cons_from_prim(air, PrimState<double>(1, 0.3, 1));
  const ConsState<double> cr = cons_from_prim(air, PrimState<double>(0.5, 0.3, 1));
  CHECK(entropy_admissible(air, 0.3, cl, cr));
  const double SL = entropy_S(air, prim_from_cons(air, cl));
  const double SR = entropy_S(air, prim_from_cons(air, cr));
  const double production =
      (cr.m[0] * SR - cl.m[0] * SL) - 0.3 * (cr.rho * SR - cl.rho * SL);
  CHECK(std::abs(production) <= 1e-12);

  // far-from-RH data is not a discontinuity
  CHECK(thrown_code([&] {
          entropy_admissible(air, 0.0, cons_from_prim(air, sod_L), cons_from_prim(air, sod_R));
        }) == Err::NotADiscontinuity);
}
