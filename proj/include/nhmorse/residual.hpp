#pragma once

// Residual, Wronskian and integration oracles for complex linear
// second-order equations w'' + Q(x) w = 0. None of these use the equation
// itself to manufacture w''.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <nhmorse/errors.hpp>
#include <nhmorse/types.hpp>

namespace nhmorse::verify {

using ComplexFn = std::function<ComplexScalar(double)>;

/// Uniform grid, both endpoints included.
struct Grid1D {
  double x_min = 0.0;
  double x_max = 3.0;
  int n_points = 61;

  /// Throws DomainError unless x_min < x_max and n_points >= 2.
  void validate() const;
  double at(int i) const;
  std::vector<double> points() const;
};

struct ResidualReport {
  std::string name;
  int grid_size = 0;
  double max_abs_residual = 0.0;
  double max_rel_residual = 0.0;
  bool pass = false;
  double tolerance = 0.0;
  bool degenerate = false;  // zero-scale quantity, relative measure undefined
  std::string note;
};

/// Fill pass from max_rel_residual and tolerance.
ResidualReport finish_report(ResidualReport report);

/// max over the grid of |w'' + Q w| / (1 + |Q| |w|).
///
/// With w2 (analytic second derivative) every grid point is tested. Without
/// it, w'' comes from the 5-point central stencil with h = fd_scale (1 + |x|)
/// and only interior points are tested; fewer than three grid points is a
/// DomainError in that mode.
ResidualReport ode_residual(const ComplexFn& Q, const ComplexFn& w, const ComplexFn& w2,
                            const Grid1D& grid, double tol, std::string name = "ode-residual",
                            double fd_scale = 1e-4);

struct OdeState {
  ComplexScalar w;
  ComplexScalar dw;
};

/// Classical fixed-step RK4 on (w, w')' = (w', -Q w) from x0 to x1. The
/// interval is split into ceil(|x1 - x0| / step) equal steps, so the step
/// actually used never exceeds the requested one. Integration backwards
/// (x1 < x0) is allowed. Throws NonConvergence if the state overflows.
OdeState integrate_ode(const ComplexFn& Q, double x0, ComplexScalar w0, ComplexScalar dw0,
                       double x1, double step);

/// Relative standard deviation of f g' - g f' over the grid. A Wronskian that
/// vanishes identically is flagged degenerate and does not pass.
ResidualReport wronskian_constancy(const ComplexFn& f, const ComplexFn& df, const ComplexFn& g,
                                   const ComplexFn& dg, const Grid1D& grid, double tol = 1e-8,
                                   std::string name = "wronskian");

/// Relative standard deviation sqrt(mean |v - mean|^2) / |mean| together with
/// the mean. Returns +inf deviation when the mean vanishes.
std::pair<double, ComplexScalar> relative_std(const std::vector<ComplexScalar>& values);

}  // namespace nhmorse::verify
