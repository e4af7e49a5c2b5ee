#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include <nhmorse/morse.hpp>
#include <nhmorse/residual.hpp>
#include <nhmorse/specfun.hpp>
#include <nhmorse/verify.hpp>

#include "test_support.hpp"

using namespace nhmorse;
using namespace nhmorse::verify;
using nhmorse::test::rel_err;
using C = ComplexScalar;
using std::numbers::pi;

namespace {

morse::MorseParameters fig(double K) {
  morse::MorseParameters p;
  p.K = K;
  return p;
}

}  // namespace

TEST_CASE("reference_kummer") {
  CHECK(rel_err(reference_kummer(1.0, 1.0, 1.0), C(std::exp(1.0))) < 1e-14);
  const C exact(19.0 / 24.0);
  CHECK(rel_err(reference_kummer(-3.0, 2.0, 5.0), exact) < 1e-14);
  CHECK(rel_err(specfun::kummer_m(-3.0, 2.0, 5.0), exact) < 1e-14);
  const auto v = reference_kummer_value(C(0.3, -1.2), C(2.5, 0.7), 14.0);
  CHECK(v.error_estimate <= 1e-14);
  CHECK(v.terms > 10);
  CHECK(rel_err(v.value, specfun::kummer_m(C(0.3, -1.2), C(2.5, 0.7), 14.0)) < 1e-12);
  CHECK_THROWS_AS(reference_kummer(0.5, -2.0, 1.0), ParameterPole);
  CHECK_THROWS(reference_kummer_value(1.0, 2.0, 1.0, 1e-20));
}

TEST_CASE("grid") {
  const Grid1D g{0.0, 3.0, 61};
  CHECK(g.at(0) == 0.0);
  CHECK(g.at(60) == 3.0);
  CHECK(g.points().size() == 61);
  CHECK(g.at(20) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(Grid1D({1.0, 1.0, 10}).validate(), DomainError);
  CHECK_THROWS_AS(Grid1D({0.0, 1.0, 1}).validate(), DomainError);
}

TEST_CASE("ode_residual: elementary solutions") {
  const Grid1D g{0.0, 3.0, 61};
  const auto exp_r = ode_residual([](double) { return C(-1.0); }, [](double x) { return C(std::exp(x)); },
                                  [](double x) { return C(std::exp(x)); }, g, 1e-12);
  CHECK(exp_r.pass);
  CHECK(exp_r.max_abs_residual == 0.0);
  const auto sin_r = ode_residual([](double) { return C(1.0); }, [](double x) { return C(std::sin(x)); },
                                  [](double x) { return C(-std::sin(x)); }, g, 1e-10);
  CHECK(sin_r.pass);
  CHECK(sin_r.grid_size == 61);
  CHECK(sin_r.max_rel_residual <= 1e-10);
  const auto wrong = ode_residual([](double) { return C(2.0); }, [](double x) { return C(std::sin(x)); },
                                  [](double x) { return C(-std::sin(x)); }, g, 1e-10);
  CHECK_FALSE(wrong.pass);
}

TEST_CASE("ode_residual: finite-difference path converges like h^4") {
  const Grid1D g{0.0, 3.0, 31};
  const auto Q = [](double) { return C(1.0); };
  const auto w = [](double x) { return C(std::sin(x) + 0.5 * std::cos(x)); };
  const auto coarse = ode_residual(Q, w, {}, g, 1e-6, "fd", 0.04);
  const auto fine = ode_residual(Q, w, {}, g, 1e-6, "fd", 0.02);
  const double ratio = coarse.max_abs_residual / fine.max_abs_residual;
  CHECK(ratio > 12.0);
  CHECK(ratio < 20.0);
  // Interior points only in this mode.
  CHECK(fine.grid_size == 29);
  CHECK(ode_residual(Q, w, {}, g, 1e-6).pass);
  CHECK_THROWS_AS(ode_residual(Q, w, {}, {0.0, 1.0, 2}, 1e-6), DomainError);
}

TEST_CASE("ode_residual: morse closed form, generic amplitudes") {
  auto p = fig(1.0);
  p.beta1 = C(0.5, 0.5);
  const auto r = ode_residual([&](double x) { return morse::ode_coefficient(p, Sector::fermionic, x); },
                              [&](double x) {
                                return morse::wavefunction(p, Sector::fermionic, ParameterMap::derived, x);
                              },
                              {}, {0.0, 3.0, 61}, 1e-6);
  // stencil rounding at h = 1e-4 sits near 1e-7 here
  CHECK(r.pass);
}

TEST_CASE("integrate_ode") {
  const auto one = [](double) { return C(1.0); };
  const auto s = integrate_ode(one, 0.0, 0.0, 1.0, pi / 2, 1e-4);
  CHECK(std::abs(s.w - 1.0) <= 1e-9);
  CHECK(std::abs(s.dw) <= 1e-9);
  // Backwards
  const auto b = integrate_ode(one, pi / 2, 1.0, 0.0, 0.0, 1e-3);
  CHECK(std::abs(b.w) <= 1e-9);
  CHECK(std::abs(b.dw - 1.0) <= 1e-9);
  // Step halving on the full state
  const auto err = [&](double h) {
    const auto e = integrate_ode(one, 0.0, 0.0, 1.0, pi / 2, h);
    return std::abs(e.w - 1.0) + std::abs(e.dw);
  };
  const double ratio = err(pi / 20) / err(pi / 40);
  CHECK(ratio > 12.0);
  CHECK(ratio < 20.0);
  CHECK_THROWS_AS(integrate_ode([](double) { return C(-1e6); }, 0.0, 1.0, 1.0, 10.0, 1e-1),
                  NonConvergence);
}

TEST_CASE("integrate_ode: morse closed form from x = 1 to 2") {
  const auto p = fig(1.0);
  for (Sector s : {Sector::fermionic, Sector::bosonic}) {
    const auto seed = morse::wavefunction_jet(p, s, ParameterMap::derived, 1.0);
    const auto end = integrate_ode([&](double x) { return morse::ode_coefficient(p, s, x); }, 1.0,
                                   seed.value, seed.d1, 2.0, 1e-4);
    CHECK(rel_err(end.w, morse::wavefunction(p, s, ParameterMap::derived, 2.0)) < 1e-6);
  }
}

TEST_CASE("wronskian_constancy") {
  const Grid1D g{0.0, 3.0, 61};
  const auto sin_f = [](double x) { return C(std::sin(x)); };
  const auto cos_f = [](double x) { return C(std::cos(x)); };
  const auto msin = [](double x) { return C(-std::sin(x)); };
  const auto r = wronskian_constancy(sin_f, cos_f, cos_f, msin, g);
  CHECK(r.pass);
  CHECK(r.max_rel_residual <= 1e-15);
  const auto [dev, mean] = relative_std({C(-1.0), C(-1.0)});
  CHECK(dev == 0.0);
  CHECK(mean == C(-1.0));

  const auto degenerate = wronskian_constancy(sin_f, cos_f, sin_f, cos_f, g);
  CHECK(degenerate.degenerate);
  CHECK_FALSE(degenerate.pass);
  CHECK(std::isinf(degenerate.max_rel_residual));
}

TEST_CASE("wronskian of M- and W-type morse solutions") {
  auto pm = fig(0.7);
  auto pw = pm;
  pw.alpha1 = pw.alpha2 = 0.0;
  pw.beta1 = pw.beta2 = 1.0;
  for (Sector s : {Sector::fermionic, Sector::bosonic}) {
    const auto jm = [&](double x) { return morse::wavefunction_jet(pm, s, ParameterMap::derived, x); };
    const auto jw = [&](double x) { return morse::wavefunction_jet(pw, s, ParameterMap::derived, x); };
    const auto r = wronskian_constancy([&](double x) { return jm(x).value; },
                                       [&](double x) { return jm(x).d1; },
                                       [&](double x) { return jw(x).value; },
                                       [&](double x) { return jw(x).d1; }, {0.0, 3.0, 61});
    CHECK(r.pass);
  }
}

TEST_CASE("intertwining") {
  const Grid1D g{0.2, 3.0, 57};
  const auto p = fig(1.0);
  const auto rep = intertwining_check(p, ParameterMap::derived, g);
  CHECK(rep.report.pass);
  const C mu = morse::indices(p, ParameterMap::derived).mu;
  const C expected = p.K + kI * (p.A - p.a * mu);
  CHECK(rel_err(rep.mean_ratio, expected) < 1e-10);
  CHECK(rel_err(rep.ratio_over_kprime, expected / p.Kprime) < 1e-10);

  const auto p0 = fig(0.0);
  const auto rep0 = intertwining_check(p0, ParameterMap::derived, g);
  CHECK(rep0.report.pass);
  const C mu0 = morse::indices(p0, ParameterMap::derived).mu;
  CHECK(rel_err(rep0.mean_ratio, kI * (p0.A - p0.a * mu0)) < 1e-10);
  CHECK(std::abs(rep0.mean_ratio.real()) <= 1e-12 * std::abs(rep0.mean_ratio));

  // Corrupted partner: w2 multiplied by x.
  const auto R = riccati::morse_riccati(p.riccati(), riccati::Sign::plus);
  const auto w1 = [&](double x) { return morse::wavefunction_jet(p, Sector::fermionic, ParameterMap::derived, x); };
  const auto bad = intertwining_ratio_check(
      R, p.K, [&](double x) { return w1(x).value; }, [&](double x) { return w1(x).d1; },
      [&](double x) { return x * morse::wavefunction(p, Sector::bosonic, ParameterMap::derived, x); }, g,
      p.Kprime);
  CHECK_FALSE(bad.report.pass);
  CHECK_THROWS_AS(intertwining_ratio_check(
                      R, p.K, [](double) { return C(1.0); }, [](double) { return C(0.0); },
                      [](double) { return C(0.0); }, g, p.Kprime),
                  DomainError);
}

TEST_CASE("reports are deterministic") {
  const auto p = fig(1.3);
  const auto a = intertwining_check(p, ParameterMap::derived, {0.2, 3.0, 57});
  const auto b = intertwining_check(p, ParameterMap::derived, {0.2, 3.0, 57});
  CHECK(a.report.max_rel_residual == b.report.max_rel_residual);
  CHECK(a.mean_ratio == b.mean_ratio);
}
