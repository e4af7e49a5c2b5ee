#pragma once

// Independent numerical oracles: a double-double Kummer reference and the
// intertwining check between the two Morse components. The residual,
// Wronskian and integration oracles live in residual.hpp.

#include <nhmorse/morse.hpp>
#include <nhmorse/residual.hpp>
#include <nhmorse/riccati.hpp>

namespace nhmorse::verify {

struct ReferenceValue {
  ComplexScalar value;
  double error_estimate = 0.0;  // relative: tail bound plus rounding bound
  int terms = 0;
};

/// 1F1(a; b; z) for real z of either sign, independent of specfun::kummer_m.
///
/// Terms are generated and accumulated in double-double arithmetic and summed
/// tail-first. Summation stops once the remaining tail, majorized by the
/// geometric series with ratio z(|a|+n)/((n+1)(n-|b|)) (valid for n > |b|),
/// falls below half the target; the rounding bound 16 N u sum|t_n| with
/// u = 2^-104 is added to the estimate. Throws NonConvergence when the
/// estimate cannot be brought below target_rel (which must be >= 1e-14) or
/// after 20000 terms, ParameterPole for a non-terminating series with b at a
/// nonpositive integer.
ReferenceValue reference_kummer_value(ComplexScalar a, ComplexScalar b, double z,
                                      double target_rel = 1e-14);

inline ComplexScalar reference_kummer(ComplexScalar a, ComplexScalar b, double z,
                                      double target_rel = 1e-14) {
  return reference_kummer_value(a, b, z, target_rel).value;
}

struct IntertwiningReport {
  ResidualReport report;
  ComplexScalar mean_ratio;
  ComplexScalar ratio_over_kprime;  // mean_ratio / K'
};

/// r(x) = [i w1' + (K + iR) w1](x) / w2(x) at every grid point with
/// |w2| > 1e-12; passes when the relative standard deviation of r is <= tol.
/// Throws DomainError when every point is degenerate.
IntertwiningReport intertwining_ratio_check(const riccati::RiccatiSolution& R, double K,
                                            const ComplexFn& w1, const ComplexFn& dw1,
                                            const ComplexFn& w2, const Grid1D& grid,
                                            double Kprime, double tol = 1e-8);

/// The ratio check for the M-type Morse components (amplitudes alpha1,
/// alpha2; beta ignored) with analytic derivatives.
IntertwiningReport intertwining_check(const morse::MorseParameters& params, ParameterMap map,
                                      const Grid1D& grid, double tol = 1e-8);

}  // namespace nhmorse::verify
