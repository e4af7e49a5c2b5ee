#pragma once

// Closed-form solutions of the complex Morse problem with superpotential
// R(x) = A - B e^{-a x}:
//
//   w1'' + [-(B^2 e^{-2ax} - B(2A + a) e^{-ax}) + (K^2 - K'^2) - A^2
//           + 2iK(A - B e^{-ax})] w1 = 0                    (fermionic)
//
// and the same with B(2A - a) for the bosonic component w2. Under
// y = (2B/a) e^{-ax} and w = e^{ax/2} f(y) both reduce to the Whittaker
// equation, so the general solution is a superposition of M and W.
//
// Two index maps are offered. `printed` keeps mu^2 = (K'^2 - K^2 - 2iKA)/a^2
// as commonly quoted for this problem; `derived` uses
// mu^2 = (A^2 + K'^2 - K^2 - 2iKA)/a^2, which is what the reduction of the
// equation above actually produces. Both share kappa_{1,2}.

#include <nhmorse/riccati.hpp>
#include <nhmorse/specfun.hpp>
#include <nhmorse/types.hpp>

namespace nhmorse::morse {

struct MorseParameters {
  double A = 1.0;
  double B = 2.0;
  double a = 0.5;
  double K = 0.0;
  double Kprime = 2.0;
  ComplexScalar alpha1{1.0, 0.0};
  ComplexScalar beta1{0.0, 0.0};
  ComplexScalar alpha2{1.0, 0.0};
  ComplexScalar beta2{0.0, 0.0};

  double B_bar() const { return B * B; }
  double C_bar1() const { return B * (2.0 * A + a); }
  double C_bar2() const { return B * (2.0 * A - a); }

  riccati::MorseRiccati riccati() const { return {A, B, a}; }

  /// Throws DomainError unless a > 0, B > 0 and K, K' are finite.
  void validate() const;

  ComplexScalar alpha(Sector s) const { return s == Sector::fermionic ? alpha1 : alpha2; }
  ComplexScalar beta(Sector s) const { return s == Sector::fermionic ? beta1 : beta2; }
};

struct MorseIndices {
  ComplexScalar kappa1;
  ComplexScalar kappa2;
  ComplexScalar mu;

  specfun::WhittakerIndices sector(Sector s) const {
    return {s == Sector::fermionic ? kappa1 : kappa2, mu};
  }
};

/// Expanded equation coefficient Q_i(x) so that w'' + Q_i w = 0.
ComplexScalar ode_coefficient(const MorseParameters& params, Sector sector, double x);

/// As ode_coefficient but with K'^2 given directly (it may be negative).
ComplexScalar ode_coefficient_energy(const MorseParameters& params, double kprime_squared,
                                     Sector sector, double x);

/// kappa1 = A/a + 1/2 - iK/a, kappa2 = A/a - 1/2 - iK/a, mu per map.
/// mu is the square root with Re mu >= 0 (Im mu >= 0 when Re mu = 0).
MorseIndices indices(const MorseParameters& params, ParameterMap map);

/// Square root with Re >= 0, ties broken towards Im >= 0.
ComplexScalar regular_root(ComplexScalar z);

/// w(x) = e^{ax/2} [alpha M_{kappa_i,mu}(y) + beta W_{kappa_i,mu}(y)].
/// Zero amplitudes skip their function entirely, so an M-only solution never
/// touches the Tricomi connection formula.
ComplexScalar wavefunction(const MorseParameters& params, Sector sector, ParameterMap map,
                           double x);

/// w, dw/dx and d2w/dx2 from the Whittaker jets and the chain rule
/// dy/dx = -a y.
specfun::Jet wavefunction_jet(const MorseParameters& params, Sector sector, ParameterMap map,
                              double x);

/// alpha (2B/a)^{1/2} y^mu e^{-y/2} kummer_core(kappa_i - mu - 1/2, 2 mu, y).
/// Identical to the beta = 0 wavefunction.
ComplexScalar wavefunction_laguerre_form(const MorseParameters& params, Sector sector,
                                         ParameterMap map, double x);

/// Exponent of the hermitic bound state: A/a - n (paper) or A/a - n - 1
/// (shifted).
double bound_state_exponent(double A, double a, int n, BoundStateConvention convention);

/// K'(n) = A - a n (paper) or A - a (n + 1) (shifted); equals a * exponent.
double bound_state_kprime(double A, double a, int n, BoundStateConvention convention);

/// alpha2 (2B/a)^{1/2} y^mu e^{-y/2} L_n^{2 mu}(y), mu = bound_state_exponent.
/// Throws NonNormalizable when mu <= 0.
ComplexScalar hermitic_bound_state(double A, double B, double a, int n,
                                   BoundStateConvention convention, double x,
                                   ComplexScalar alpha2 = 1.0);

/// Same with x-derivatives (Laguerre derivative identities, no finite
/// differences).
specfun::Jet hermitic_bound_state_jet(double A, double B, double a, int n,
                                      BoundStateConvention convention, double x,
                                      ComplexScalar alpha2 = 1.0);

struct LaguerreIdentity {
  double lhs;            // M_{p/2+n+1/2, p/2}(y)
  double rhs_printed;    // y^{(p+1)/2} e^{-y/2} L_n^p(y)
  double rhs_corrected;  // rhs_printed * n! / (p+1)_n
};

/// Both sides of the Whittaker-Laguerre relation. The classical polynomial
/// needs the factor n!/(p+1)_n to match M; rhs_corrected applies it.
LaguerreIdentity whittaker_laguerre_identity(int n, double p, double y);

}  // namespace nhmorse::morse
