#include <nhmorse/morse.hpp>

#include <cmath>
#include <string>

namespace nhmorse::morse {

using specfun::Jet;
using specfun::WhittakerIndices;

void MorseParameters::validate() const {
  riccati().validate();
  if (!std::isfinite(K) || !std::isfinite(Kprime)) {
    throw DomainError("MorseParameters: K and K' must be finite");
  }
}

ComplexScalar ode_coefficient_energy(const MorseParameters& params, double kprime_squared,
                                     Sector sector, double x) {
  const double e1 = std::exp(-params.a * x);
  const double e2 = e1 * e1;
  const double c_bar = sector == Sector::fermionic ? params.C_bar1() : params.C_bar2();
  const double real_part = -(params.B_bar() * e2 - c_bar * e1) +
                           (params.K * params.K - kprime_squared) - params.A * params.A;
  return {real_part, 2.0 * params.K * (params.A - params.B * e1)};
}

ComplexScalar ode_coefficient(const MorseParameters& params, Sector sector, double x) {
  return ode_coefficient_energy(params, params.Kprime * params.Kprime, sector, x);
}

ComplexScalar regular_root(ComplexScalar z) {
  ComplexScalar r = std::sqrt(z);
  if (r.real() < 0.0 || (r.real() == 0.0 && r.imag() < 0.0)) r = -r;
  return r;
}

MorseIndices indices(const MorseParameters& params, ParameterMap map) {
  const double A = params.A;
  const double a = params.a;
  const double K = params.K;
  const double Kp = params.Kprime;
  const ComplexScalar shift{A / a, -K / a};

  double constant = Kp * Kp - K * K;
  if (map == ParameterMap::derived) constant += A * A;
  const ComplexScalar mu_squared = ComplexScalar{constant, -2.0 * K * A} / (a * a);
  return {shift + 0.5, shift - 0.5, regular_root(mu_squared)};
}

namespace {

Jet combine(const MorseParameters& params, Sector sector, ParameterMap map, double x,
            bool want_derivatives) {
  const MorseIndices idx = indices(params, map);
  const WhittakerIndices w_idx = idx.sector(sector);
  const double y = riccati::morse_y(params.riccati(), x);
  const ComplexScalar alpha = params.alpha(sector);
  const ComplexScalar beta = params.beta(sector);

  Jet g{0.0, 0.0, 0.0};
  if (alpha != 0.0) {
    if (want_derivatives) {
      const Jet m = specfun::whittaker_m_jet(w_idx, y);
      g = {alpha * m.value, alpha * m.d1, alpha * m.d2};
    } else {
      g.value = alpha * specfun::whittaker_m(w_idx, y);
    }
  }
  if (beta != 0.0) {
    if (want_derivatives) {
      const Jet w = specfun::whittaker_w_jet(w_idx, y);
      g.value += beta * w.value;
      g.d1 += beta * w.d1;
      g.d2 += beta * w.d2;
    } else {
      g.value += beta * specfun::whittaker_w(w_idx, y);
    }
  }

  const double a = params.a;
  const double envelope = std::exp(0.5 * a * x);
  Jet out;
  out.value = envelope * g.value;
  out.d1 = envelope * (0.5 * a * g.value - a * y * g.d1);
  out.d2 = envelope * a * a * (0.25 * g.value + y * y * g.d2);
  return out;
}

}  // namespace

ComplexScalar wavefunction(const MorseParameters& params, Sector sector, ParameterMap map,
                           double x) {
  return combine(params, sector, map, x, false).value;
}

Jet wavefunction_jet(const MorseParameters& params, Sector sector, ParameterMap map, double x) {
  return combine(params, sector, map, x, true);
}

ComplexScalar wavefunction_laguerre_form(const MorseParameters& params, Sector sector,
                                         ParameterMap map, double x) {
  const MorseIndices idx = indices(params, map);
  const ComplexScalar kappa = sector == Sector::fermionic ? idx.kappa1 : idx.kappa2;
  const ComplexScalar mu = idx.mu;
  const double y = riccati::morse_y(params.riccati(), x);
  const double scale = std::sqrt(2.0 * params.B / params.a);
  const ComplexScalar profile = std::exp(mu * std::log(y) - 0.5 * y);
  return params.alpha(sector) * scale * profile *
         specfun::kummer_core(kappa - mu - 0.5, 2.0 * mu, y);
}

double bound_state_exponent(double A, double a, int n, BoundStateConvention convention) {
  const int shift = convention == BoundStateConvention::paper ? 0 : 1;
  return A / a - static_cast<double>(n + shift);
}

double bound_state_kprime(double A, double a, int n, BoundStateConvention convention) {
  const int shift = convention == BoundStateConvention::paper ? 0 : 1;
  return A - a * static_cast<double>(n + shift);
}

Jet hermitic_bound_state_jet(double A, double B, double a, int n,
                             BoundStateConvention convention, double x, ComplexScalar alpha2) {
  const double mu = bound_state_exponent(A, a, n, convention);
  if (!(mu > 0.0)) {
    throw NonNormalizable("bound state n=" + std::to_string(n) + " has exponent " +
                          std::to_string(mu) + " <= 0");
  }
  const double y = riccati::morse_y(riccati::MorseRiccati{A, B, a}, x);
  const double order = 2.0 * mu;

  const double profile = std::pow(y, mu) * std::exp(-0.5 * y);
  const double r = mu / y - 0.5;
  const double l0 = specfun::laguerre_poly(n, order, y);
  const double l1 = -specfun::laguerre_poly(n - 1, order + 1.0, y);
  const double l2 = specfun::laguerre_poly(n - 2, order + 2.0, y);

  const double h0 = profile * l0;
  const double h1 = profile * (r * l0 + l1);
  const double h2 = profile * ((r * r - mu / (y * y)) * l0 + 2.0 * r * l1 + l2);

  const ComplexScalar c = alpha2 * std::sqrt(2.0 * B / a);
  return {c * h0, c * (-a * y * h1), c * (a * a * (y * h1 + y * y * h2))};
}

ComplexScalar hermitic_bound_state(double A, double B, double a, int n,
                                   BoundStateConvention convention, double x,
                                   ComplexScalar alpha2) {
  return hermitic_bound_state_jet(A, B, a, n, convention, x, alpha2).value;
}

LaguerreIdentity whittaker_laguerre_identity(int n, double p, double y) {
  const WhittakerIndices idx{0.5 * p + n + 0.5, 0.5 * p};
  const double lhs = specfun::whittaker_m(idx, y).real();
  const double rhs_printed =
      std::pow(y, 0.5 * (p + 1.0)) * std::exp(-0.5 * y) * specfun::laguerre_poly(n, p, y);
  double factor = 1.0;
  for (int k = 1; k <= n; ++k) factor *= static_cast<double>(k) / (p + k);
  return {lhs, rhs_printed, rhs_printed * factor};
}

}  // namespace nhmorse::morse
