#include <nhmorse/acceptance.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include <nhmorse/grid.hpp>
#include <nhmorse/morse.hpp>
#include <nhmorse/riccati.hpp>
#include <nhmorse/specfun.hpp>
#include <nhmorse/susy.hpp>
#include <nhmorse/verify.hpp>

namespace nhmorse::acceptance {

namespace {

using morse::MorseParameters;
using verify::Grid1D;

constexpr double kKValues[] = {0.0, 0.5, 1.0, 2.0};
constexpr Sector kSectors[] = {Sector::fermionic, Sector::bosonic};

std::string fmt(double v) { return grid::format_number(v); }

// Canonical operating point: A = 1, B = 2, a = 0.5, K' = 2, alpha = 1.
MorseParameters canonical(double K = 0.0) {
  MorseParameters p;
  p.K = K;
  return p;
}

enum class Kind { m, w };

MorseParameters with_kind(MorseParameters p, Kind kind) {
  if (kind == Kind::w) {
    p.alpha1 = p.alpha2 = 0.0;
    p.beta1 = p.beta2 = 1.0;
  } else {
    p.beta1 = p.beta2 = 0.0;
  }
  return p;
}

const char* kind_name(Kind k) { return k == Kind::m ? "M" : "W"; }

CheckResult kummer_oracle() {
  CheckResult r;
  r.tolerance = "1e-10";
  constexpr int kSamples = 1000;
  std::mt19937_64 rng(20050101);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto disk = [&]() {
    const double rad = 10.0 * std::sqrt(unit(rng));
    const double theta = 2.0 * std::numbers::pi * unit(rng) - std::numbers::pi;
    return std::polar(rad, theta);
  };
  struct Sample {
    ComplexScalar a, b;
    double z;
  };
  std::vector<Sample> samples;
  while (samples.size() < kSamples) {
    const ComplexScalar a = disk();
    const ComplexScalar b = disk();
    const double z = 30.0 * (1.0 - unit(rng));
    // Admissible: keep b a fixed distance away from the parameter poles.
    const double nearest = std::min(0.0, std::round(b.real()));
    if (std::abs(b - nearest) < 0.25) continue;
    samples.push_back({a, b, z});
  }
  double worst = 0.0;
  int failures = 0;
#pragma omp parallel for reduction(max : worst) reduction(+ : failures) schedule(dynamic, 16)
  for (int i = 0; i < kSamples; ++i) {
    const Sample& s = samples[static_cast<std::size_t>(i)];
    try {
      const ComplexScalar ref = verify::reference_kummer(s.a, s.b, s.z);
      const ComplexScalar got = specfun::kummer_m(s.a, s.b, s.z);
      worst = std::max(worst, std::abs(got - ref) / std::abs(ref));
    } catch (const Error&) {
      ++failures;
    }
  }
  r.metric = worst;
  r.pass = failures == 0 && worst <= 1e-10;
  if (failures > 0) r.note = std::to_string(failures) + " samples raised";
  return r;
}

verify::ResidualReport morse_residual(const MorseParameters& p, Sector sector, ParameterMap map,
                                      const Grid1D& g) {
  const auto Q = [&](double x) { return morse::ode_coefficient(p, sector, x); };
  const auto w = [&](double x) { return morse::wavefunction(p, sector, map, x); };
  const auto w2 = [&](double x) { return morse::wavefunction_jet(p, sector, map, x).d2; };
  return verify::ode_residual(Q, w, w2, g, 1e-8);
}

CheckResult residual_sweep(ParameterMap map) {
  CheckResult r;
  const Grid1D g{0.0, 3.0, 301};
  double worst = 0.0;
  std::vector<std::string> raised;
  for (double K : kKValues) {
    for (Sector sector : kSectors) {
      for (Kind kind : {Kind::m, Kind::w}) {
        const MorseParameters p = with_kind(canonical(K), kind);
        try {
          worst = std::max(worst, morse_residual(p, sector, map, g).max_rel_residual);
        } catch (const Error& e) {
          raised.push_back(std::string(kind_name(kind)) + "/" + to_string(sector) +
                           "/K=" + fmt(K));
        }
      }
    }
  }
  r.metric = worst;
  if (map == ParameterMap::derived) {
    r.tolerance = "1e-8";
    r.pass = raised.empty() && worst <= 1e-8;
    if (!raised.empty()) r.note = "raised: " + raised.front();
  } else {
    // Report only: the printed index map is expected to miss the equation.
    r.tolerance = "inf";
    r.pass = true;
    std::ostringstream note;
    note << "report only; exceeds 1e-8: " << (worst > 1e-8 ? "yes" : "no");
    if (!raised.empty()) {
      note << "; not evaluable:";
      for (const auto& s : raised) note << ' ' << s;
    }
    r.note = note.str();
  }
  return r;
}

CheckResult integration() {
  CheckResult r;
  r.tolerance = "1e-6";
  const MorseParameters p = with_kind(canonical(1.0), Kind::m);
  const auto Q = [&](double x) { return morse::ode_coefficient(p, Sector::fermionic, x); };
  const auto seed = morse::wavefunction_jet(p, Sector::fermionic, ParameterMap::derived, 1.0);
  const auto end = morse::wavefunction_jet(p, Sector::fermionic, ParameterMap::derived, 2.0);
  const auto state = verify::integrate_ode(Q, 1.0, seed.value, seed.d1, 2.0, 1e-4);
  r.metric = std::max(std::abs(state.w - end.value) / std::abs(end.value),
                      std::abs(state.dw - end.d1) / std::abs(end.d1));
  r.pass = r.metric <= 1e-6;
  return r;
}

CheckResult intertwining() {
  CheckResult r;
  r.tolerance = "1e-8";
  const auto rep =
      verify::intertwining_check(canonical(1.0), ParameterMap::derived, Grid1D{0.2, 3.0, 141});
  r.metric = rep.report.max_rel_residual;
  r.pass = rep.report.pass;
  r.note = "mean ratio / K' = " + fmt(rep.ratio_over_kprime.real()) + "," +
           fmt(rep.ratio_over_kprime.imag());
  return r;
}

CheckResult riccati_closure() {
  CheckResult r;
  r.tolerance = "1e-12";
  const riccati::MorseRiccati families[] = {{1.0, 2.0, 0.5}, {-0.7, 0.3, 1.2}, {2.5, 4.0, 0.1}};
  const Grid1D g{-5.0, 10.0, 1501};
  double worst = 0.0;
  for (const auto& f : families) {
    for (auto sign : {riccati::Sign::plus, riccati::Sign::minus}) {
      const auto sol = riccati::morse_riccati(f, sign);
      for (double x : g.points()) worst = std::max(worst, riccati::riccati_residual(sol, x));
    }
  }
  r.metric = worst;
  r.pass = worst <= 1e-12;
  return r;
}

CheckResult expansion_identity() {
  CheckResult r;
  r.tolerance = "1e-12";
  double worst = 0.0;
  const Grid1D xs{-2.0, 6.0, 81};
  for (double A : {-1.5, 0.0, 1.0, 3.0}) {
    for (double B : {0.5, 2.0}) {
      for (double a : {0.25, 0.5, 1.5}) {
        for (double K : {0.0, 0.5, 1.0, 2.0}) {
          for (double Kp : {0.0, 1.0, 2.0}) {
            MorseParameters p;
            p.A = A;
            p.B = B;
            p.a = a;
            p.K = K;
            p.Kprime = Kp;
            const auto R = riccati::morse_riccati(p.riccati(), riccati::Sign::plus);
            for (Sector s : kSectors) {
              for (double x : xs.points()) {
                const ComplexScalar expanded = morse::ode_coefficient(p, s, x);
                const ComplexScalar bracket =
                    susy::complex_potential_coefficient(R, {K, Kp}, s, x);
                worst = std::max(worst, std::abs(expanded - bracket) /
                                            std::max(1.0, std::abs(bracket)));
              }
            }
          }
        }
      }
    }
  }
  r.metric = worst;
  r.pass = worst <= 1e-12;
  return r;
}

CheckResult whittaker_laguerre() {
  CheckResult r;
  r.tolerance = "1e-10";
  double worst = 0.0;
  for (int n : {0, 1, 2}) {
    for (double p : {1.0, 2.0, 3.0}) {
      double factor = 1.0;
      for (int k = 1; k <= n; ++k) factor *= k / (p + k);
      for (double y : {0.5, 1.0, 8.0}) {
        const auto id = morse::whittaker_laguerre_identity(n, p, y);
        worst = std::max(worst, std::abs(id.lhs - id.rhs_corrected) / std::abs(id.lhs));
        if (n >= 1) {
          worst = std::max(worst, std::abs(id.lhs / id.rhs_printed - factor) / factor);
        }
      }
    }
  }
  r.metric = worst;
  r.pass = worst <= 1e-10;
  return r;
}

double k0_imaginary(Sector sector) {
  const MorseParameters p = canonical(0.0);
  double worst = 0.0;
  for (double x : Grid1D{0.0, 3.0, 61}.points()) {
    worst = std::max(worst, std::abs(
                                morse::wavefunction_laguerre_form(p, sector, ParameterMap::printed, x)
                                    .imag()));
  }
  return worst;
}

CheckResult reality_k0() {
  CheckResult r;
  r.tolerance = "1e-12";
  r.metric = std::max(k0_imaginary(Sector::fermionic), k0_imaginary(Sector::bosonic));
  r.pass = r.metric <= 1e-12;
  return r;
}

CheckResult wronskian() {
  CheckResult r;
  r.tolerance = "1e-8";
  const Grid1D g{0.2, 3.0, 141};
  double worst = 0.0;
  for (double K : kKValues) {
    for (Sector s : kSectors) {
      const MorseParameters pm = with_kind(canonical(K), Kind::m);
      const MorseParameters pw = with_kind(canonical(K), Kind::w);
      const auto f = [&](double x) { return morse::wavefunction(pm, s, ParameterMap::derived, x); };
      const auto df = [&](double x) {
        return morse::wavefunction_jet(pm, s, ParameterMap::derived, x).d1;
      };
      const auto h = [&](double x) { return morse::wavefunction(pw, s, ParameterMap::derived, x); };
      const auto dh = [&](double x) {
        return morse::wavefunction_jet(pw, s, ParameterMap::derived, x).d1;
      };
      const auto rep = verify::wronskian_constancy(f, df, h, dh, g);
      if (rep.degenerate) {
        r.note = "degenerate pair";
        worst = std::numeric_limits<double>::infinity();
      }
      worst = std::max(worst, rep.max_rel_residual);
    }
  }
  r.metric = worst;
  r.pass = worst <= 1e-8;
  return r;
}

CheckResult grid_shape() {
  CheckResult r;
  r.tolerance = "1e-12";
  bool ok = true;
  double worst_im = 0.0;
  std::vector<std::string> problems;
  for (Sector s : kSectors) {
    grid::GridSpec spec;
    spec.component = s;
    const std::string first = grid::to_csv(grid::evaluate_grid(spec));
    const std::string second = grid::to_csv(grid::evaluate_grid(spec));
    const std::string serial = grid::to_csv(grid::evaluate_grid_serial(spec));
    if (first != second || first != serial) problems.push_back("non-deterministic");
    const long lines = std::count(first.begin(), first.end(), '\n');
    if (lines != 61 * 41 + 1) problems.push_back("row count " + std::to_string(lines));
    if (first.rfind("x,K,y,re,im\n", 0) != 0) problems.push_back("header");

    const auto g = grid::evaluate_grid(spec);
    for (std::size_t i = 0; i < g.x_values.size(); ++i) {
      worst_im = std::max(worst_im, std::abs(g.at(0, i).imag()));
    }
  }
  ok = problems.empty();
  r.metric = worst_im;
  r.pass = ok && worst_im <= 1e-12;
  if (!ok) r.note = problems.front();
  return r;
}

CheckResult rk4_order() {
  CheckResult r;
  r.tolerance = "[12,20]";
  const auto Q = [](double) { return ComplexScalar{1.0, 0.0}; };
  const double end = std::numbers::pi / 2.0;
  const double h = end / 10.0;
  // Error of the full state (w, w'): at pi/2 the phase error sits in w'.
  const auto state_error = [&](double step) {
    const auto s = verify::integrate_ode(Q, 0.0, 0.0, 1.0, end, step);
    return std::abs(s.w - 1.0) + std::abs(s.dw);
  };
  const double e1 = state_error(h);
  const double e2 = state_error(h / 2.0);
  r.metric = e1 / e2;
  r.pass = r.metric >= 12.0 && r.metric <= 20.0;
  return r;
}

CheckResult bound_state_shifted() {
  // The n = 0 shifted state solves the K = 0 bosonic equation once K'^2 is
  // taken as K'(n)^2 - A^2; the printed pairing K'^2 = K'(n)^2 does not.
  CheckResult r;
  r.tolerance = "1e-8";
  const double A = 1.0, B = 2.0, a = 0.5;
  MorseParameters p;
  p.A = A;
  p.B = B;
  p.a = a;
  p.K = 0.0;
  const double kp = morse::bound_state_kprime(A, a, 0, BoundStateConvention::shifted);
  const auto Q = [&](double x) {
    return morse::ode_coefficient_energy(p, kp * kp - A * A, Sector::bosonic, x);
  };
  const auto w = [&](double x) {
    return morse::hermitic_bound_state(A, B, a, 0, BoundStateConvention::shifted, x);
  };
  const auto w2 = [&](double x) {
    return morse::hermitic_bound_state_jet(A, B, a, 0, BoundStateConvention::shifted, x).d2;
  };
  const auto rep = verify::ode_residual(Q, w, w2, Grid1D{0.0, 3.0, 301}, 1e-8);
  r.metric = rep.max_rel_residual;
  r.pass = rep.pass;
  return r;
}

using CheckFn = std::function<CheckResult()>;

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> checks = {
      {"kummer-oracle", kummer_oracle},
      {"residual-derived", [] { return residual_sweep(ParameterMap::derived); }},
      {"residual-printed", [] { return residual_sweep(ParameterMap::printed); }},
      {"integration", integration},
      {"intertwining", intertwining},
      {"riccati-closure", riccati_closure},
      {"expansion-identity", expansion_identity},
      {"whittaker-laguerre", whittaker_laguerre},
      {"reality-k0", reality_k0},
      {"wronskian", wronskian},
      {"grid-shape", grid_shape},
      {"rk4-order", rk4_order},
      {"bound-state-shifted", bound_state_shifted},
  };
  return checks;
}

// Time budgets in seconds; checks without an entry are unbounded.
const std::map<std::string, double>& budgets() {
  static const std::map<std::string, double> b = {{"kummer-oracle", 5.0},
                                                  {"residual-derived", 5.0}};
  return b;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

bool is_check(const std::string& name) {
  const auto& names = check_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

CheckResult run_check(const std::string& name) {
  for (const auto& [check_name, fn] : registry()) {
    if (check_name != name) continue;
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = fn();
    } catch (const std::exception& e) {
      r.pass = false;
      r.metric = std::numeric_limits<double>::quiet_NaN();
      r.note = std::string("error: ") + e.what();
    }
    r.name = name;
    r.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (const auto it = budgets().find(name); it != budgets().end() && r.seconds > it->second) {
      r.pass = false;
      r.note += (r.note.empty() ? "" : "; ") + std::string("over time budget ") +
                fmt(it->second) + " s";
    }
    return r;
  }
  throw std::invalid_argument("unknown check: " + name);
}

std::vector<CheckResult> run_all() {
  std::vector<CheckResult> out;
  for (const auto& name : check_names()) out.push_back(run_check(name));
  return out;
}

std::string format_line(const CheckResult& r) {
  std::string line = (r.pass ? "PASS " : "FAIL ") + r.name + " max_rel_residual=" +
                     fmt(r.metric) + " tol=" + r.tolerance;
  if (!r.note.empty()) line += " (" + r.note + ")";
  return line;
}

}  // namespace nhmorse::acceptance
