#include <nhmorse/susy.hpp>
#include <nhmorse/verify.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "double_double.hpp"

namespace nhmorse::verify {

void Grid1D::validate() const {
  if (!(x_min < x_max)) throw DomainError("Grid1D: need x_min < x_max");
  if (n_points < 2) throw DomainError("Grid1D: need at least two points");
}

double Grid1D::at(int i) const {
  if (i == n_points - 1) return x_max;
  return x_min + (x_max - x_min) * static_cast<double>(i) / static_cast<double>(n_points - 1);
}

std::vector<double> Grid1D::points() const {
  validate();
  std::vector<double> xs(static_cast<std::size_t>(n_points));
  for (int i = 0; i < n_points; ++i) xs[static_cast<std::size_t>(i)] = at(i);
  return xs;
}

ResidualReport finish_report(ResidualReport report) {
  report.pass = !report.degenerate && report.max_rel_residual <= report.tolerance;
  return report;
}

ResidualReport ode_residual(const ComplexFn& Q, const ComplexFn& w, const ComplexFn& w2,
                            const Grid1D& grid, double tol, std::string name, double fd_scale) {
  grid.validate();
  const bool analytic = static_cast<bool>(w2);
  if (!analytic && grid.n_points < 3) {
    throw DomainError("ode_residual: grid too small for the 5-point stencil");
  }
  ResidualReport report;
  report.name = std::move(name);
  report.tolerance = tol;

  const int first = analytic ? 0 : 1;
  const int last = analytic ? grid.n_points - 1 : grid.n_points - 2;
  for (int i = first; i <= last; ++i) {
    const double x = grid.at(i);
    const ComplexScalar q = Q(x);
    const ComplexScalar wx = w(x);
    ComplexScalar second;
    if (analytic) {
      second = w2(x);
    } else {
      const double h = fd_scale * (1.0 + std::abs(x));
      second = (-w(x + 2.0 * h) + 16.0 * w(x + h) - 30.0 * wx + 16.0 * w(x - h) -
                w(x - 2.0 * h)) /
               (12.0 * h * h);
    }
    const double abs_res = std::abs(second + q * wx);
    const double rel_res = abs_res / (1.0 + std::abs(q) * std::abs(wx));
    report.max_abs_residual = std::max(report.max_abs_residual, abs_res);
    report.max_rel_residual = std::max(report.max_rel_residual, rel_res);
    ++report.grid_size;
  }
  return finish_report(report);
}

OdeState integrate_ode(const ComplexFn& Q, double x0, ComplexScalar w0, ComplexScalar dw0,
                       double x1, double step) {
  if (!(step > 0.0)) throw DomainError("integrate_ode: step must be positive");
  const double span = x1 - x0;
  const long steps = std::max(1L, static_cast<long>(std::ceil(std::abs(span) / step)));
  const double h = span / static_cast<double>(steps);

  ComplexScalar w = w0;
  ComplexScalar v = dw0;
  for (long k = 0; k < steps; ++k) {
    const double x = x0 + h * static_cast<double>(k);
    const double xm = x + 0.5 * h;
    const double xe = (k + 1 == steps) ? x1 : x + h;
    const ComplexScalar qm = Q(xm);

    const ComplexScalar k1w = v;
    const ComplexScalar k1v = -Q(x) * w;
    const ComplexScalar k2w = v + 0.5 * h * k1v;
    const ComplexScalar k2v = -qm * (w + 0.5 * h * k1w);
    const ComplexScalar k3w = v + 0.5 * h * k2v;
    const ComplexScalar k3v = -qm * (w + 0.5 * h * k2w);
    const ComplexScalar k4w = v + h * k3v;
    const ComplexScalar k4v = -Q(xe) * (w + h * k3w);

    w += h / 6.0 * (k1w + 2.0 * k2w + 2.0 * k3w + k4w);
    v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
  }
  if (!std::isfinite(std::abs(w)) || !std::isfinite(std::abs(v))) {
    throw NonConvergence("integrate_ode: state overflow");
  }
  return {w, v};
}

std::pair<double, ComplexScalar> relative_std(const std::vector<ComplexScalar>& values) {
  if (values.empty()) return {std::numeric_limits<double>::infinity(), 0.0};
  ComplexScalar mean = 0.0;
  for (const auto& v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double var = 0.0;
  for (const auto& v : values) var += std::norm(v - mean);
  var /= static_cast<double>(values.size());
  if (std::abs(mean) == 0.0) return {std::numeric_limits<double>::infinity(), mean};
  return {std::sqrt(var) / std::abs(mean), mean};
}

ResidualReport wronskian_constancy(const ComplexFn& f, const ComplexFn& df, const ComplexFn& g,
                                   const ComplexFn& dg, const Grid1D& grid, double tol,
                                   std::string name) {
  const std::vector<double> xs = grid.points();
  std::vector<ComplexScalar> wr;
  wr.reserve(xs.size());
  double largest = 0.0;
  for (double x : xs) {
    wr.push_back(f(x) * dg(x) - g(x) * df(x));
    largest = std::max(largest, std::abs(wr.back()));
  }
  ResidualReport report;
  report.name = std::move(name);
  report.tolerance = tol;
  report.grid_size = static_cast<int>(xs.size());
  if (largest == 0.0) {
    report.degenerate = true;
    report.max_rel_residual = std::numeric_limits<double>::infinity();
    report.note = "wronskian vanishes identically";
    return finish_report(report);
  }
  const auto [rel, mean] = relative_std(wr);
  for (const auto& v : wr) report.max_abs_residual = std::max(report.max_abs_residual, std::abs(v - mean));
  report.max_rel_residual = rel;
  return finish_report(report);
}

ReferenceValue reference_kummer_value(ComplexScalar a, ComplexScalar b, double z,
                                      double target_rel) {
  if (target_rel < 1e-14) throw DomainError("reference_kummer: target_rel must be >= 1e-14");
  constexpr int kMaxTerms = 20000;
  constexpr double kUnitRoundoff = 4.93038065763132e-32;  // 2^-104

  // Terminating when a is exactly a nonpositive integer.
  long last = -1;
  if (a.imag() == 0.0 && a.real() <= 0.0 && a.real() == std::floor(a.real())) {
    last = static_cast<long>(-a.real());
  }
  {
    const double nearest = std::min(0.0, std::round(b.real()));
    const bool blocks = last < 0 || static_cast<double>(last) > -nearest;
    if (blocks && std::abs(b - nearest) < 1e-6) {
      throw ParameterPole("reference_kummer: b at a nonpositive integer");
    }
  }

  const dd::Complex a_dd = dd::from(a.real(), a.imag());
  const dd::Complex b_dd = dd::from(b.real(), b.imag());
  const double abs_a = std::abs(a);
  const double abs_b = std::abs(b);
  const double abs_z = std::abs(z);

  std::vector<dd::Complex> terms{dd::from(1.0, 0.0)};
  dd::Complex partial = terms.front();
  double abs_total = 1.0;
  double tail = 0.0;
  bool done = z == 0.0 || last == 0;
  while (!done) {
    const long n = static_cast<long>(terms.size()) - 1;
    if (n + 1 >= kMaxTerms) throw NonConvergence("reference_kummer: term cap reached");
    const dd::Complex shift = dd::from(static_cast<double>(n), 0.0);
    const dd::Complex numer = dd::mul(dd::add(a_dd, shift), dd::from(z, 0.0));
    const dd::Complex denom =
        dd::mul(dd::add(b_dd, shift), dd::from(static_cast<double>(n + 1), 0.0));
    const dd::Complex ratio = dd::div(numer, denom);
    const dd::Complex next = dd::mul(terms.back(), ratio);
    terms.push_back(next);
    partial = dd::add(partial, next);
    const double mag = dd::magnitude(next);
    abs_total += mag;
    const long m = n + 1;

    if (last >= 0 && m >= last) {
      tail = 0.0;
      break;
    }
    if (static_cast<double>(m) > abs_b + 1.0) {
      const double majorant = abs_z * (abs_a + m) / ((m + 1.0) * (m - abs_b));
      if (majorant < 0.5) {
        tail = mag * majorant / (1.0 - majorant);
        const double s = dd::magnitude(partial);
        if (tail <= 0.5 * target_rel * std::max(s - tail, 0.0)) break;
      }
    }
  }

  dd::Complex sum = dd::from(0.0, 0.0);
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) sum = dd::add(sum, *it);

  ReferenceValue out;
  out.value = {dd::to_double(sum.re), dd::to_double(sum.im)};
  out.terms = static_cast<int>(terms.size());
  const double n_terms = static_cast<double>(terms.size());
  const double rounding = 16.0 * n_terms * kUnitRoundoff * abs_total;
  const double magnitude = std::abs(out.value);
  out.error_estimate = magnitude > 0.0 ? (tail + rounding) / magnitude
                                       : std::numeric_limits<double>::infinity();
  if (!(out.error_estimate <= target_rel)) {
    throw NonConvergence("reference_kummer: error estimate " +
                         std::to_string(out.error_estimate) + " above target");
  }
  return out;
}

IntertwiningReport intertwining_ratio_check(const riccati::RiccatiSolution& R, double K,
                                            const ComplexFn& w1, const ComplexFn& dw1,
                                            const ComplexFn& w2, const Grid1D& grid,
                                            double Kprime, double tol) {
  const std::vector<double> xs = grid.points();
  std::vector<ComplexScalar> ratios;
  ratios.reserve(xs.size());
  for (double x : xs) {
    const ComplexScalar denom = w2(x);
    if (std::abs(denom) <= 1e-12) continue;
    const ComplexScalar raised =
        susy::apply_first_order(susy::Direction::raise, R, K, w1(x), dw1(x), x);
    ratios.push_back(raised / denom);
  }
  if (ratios.empty()) throw DomainError("intertwining_check: every grid point is degenerate");

  const auto [rel, mean] = relative_std(ratios);
  IntertwiningReport out;
  out.report.name = "intertwining";
  out.report.tolerance = tol;
  out.report.grid_size = static_cast<int>(ratios.size());
  for (const auto& r : ratios) {
    out.report.max_abs_residual = std::max(out.report.max_abs_residual, std::abs(r - mean));
  }
  out.report.max_rel_residual = rel;
  out.report.degenerate = !std::isfinite(rel);
  out.report = finish_report(out.report);
  out.mean_ratio = mean;
  out.ratio_over_kprime = Kprime != 0.0 ? mean / Kprime
                                        : ComplexScalar{std::numeric_limits<double>::quiet_NaN(),
                                                        std::numeric_limits<double>::quiet_NaN()};
  return out;
}

IntertwiningReport intertwining_check(const morse::MorseParameters& params, ParameterMap map,
                                      const Grid1D& grid, double tol) {
  params.validate();
  morse::MorseParameters m_only = params;
  m_only.beta1 = 0.0;
  m_only.beta2 = 0.0;
  const auto R = riccati::morse_riccati(params.riccati(), riccati::Sign::plus);
  const auto w1 = [&](double x) {
    return morse::wavefunction(m_only, Sector::fermionic, map, x);
  };
  const auto dw1 = [&](double x) {
    return morse::wavefunction_jet(m_only, Sector::fermionic, map, x).d1;
  };
  const auto w2 = [&](double x) { return morse::wavefunction(m_only, Sector::bosonic, map, x); };
  return intertwining_ratio_check(R, params.K, w1, dw1, w2, grid, params.Kprime, tol);
}

}  // namespace nhmorse::verify
