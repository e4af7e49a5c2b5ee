#pragma once

// Witten-type Riccati superpotentials R' +/- R^2 = u.

#include <functional>
#include <initializer_list>

#include <nhmorse/errors.hpp>

namespace nhmorse::riccati {

enum class Sign { plus, minus };

inline double sign_value(Sign s) { return s == Sign::plus ? 1.0 : -1.0; }

/// A superpotential R with its derivative and the induced potential
/// u = R' +/- R^2. The sign is carried explicitly; the sector-to-sign binding
/// lives in the susy layer.
struct RiccatiSolution {
  std::function<double(double)> eval_R;
  std::function<double(double)> eval_dR;
  Sign sign = Sign::plus;
  std::function<double(double)> eval_u;
};

/// Build a solution from a user-supplied R and R'. u is assembled from them.
/// With validate set, R' is compared against a central difference of R at
/// the given probe points and DomainError is thrown past rel. 1e-6.
RiccatiSolution make_riccati(std::function<double(double)> R, std::function<double(double)> dR,
                             Sign sign, bool validate = false,
                             std::initializer_list<double> probes = {-1.0, 0.0, 0.5, 1.0, 2.0});

/// Morse superpotential R(x) = A - B e^{-a x}; requires a > 0, B > 0.
struct MorseRiccati {
  double A = 1.0;
  double B = 2.0;
  double a = 0.5;

  /// Throws DomainError unless a > 0, B > 0 and A is finite.
  void validate() const;
};

RiccatiSolution morse_riccati(const MorseRiccati& params, Sign sign);

/// |R' +/- R^2 - u| using the solution's own sign.
double riccati_residual(const RiccatiSolution& sol, double x);

/// Same with an explicitly chosen sign (used to expose sign mismatches).
double riccati_residual(const RiccatiSolution& sol, double x, Sign sign);

/// Morse variable y = (2B/a) e^{-a x}.
double morse_y(const MorseRiccati& params, double x);

/// Inverse map x = -(1/a) ln(a y / 2B).
double morse_x(const MorseRiccati& params, double y);

}  // namespace nhmorse::riccati
