#include <nhmorse/riccati.hpp>

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace nhmorse::riccati {

RiccatiSolution make_riccati(std::function<double(double)> R, std::function<double(double)> dR,
                             Sign sign, bool validate, std::initializer_list<double> probes) {
  if (validate) {
    for (double x : probes) {
      const double h = 1e-5 * (1.0 + std::abs(x));
      const double fd = (R(x + h) - R(x - h)) / (2.0 * h);
      const double exact = dR(x);
      const double scale = std::max({1.0, std::abs(exact), std::abs(fd)});
      if (std::abs(fd - exact) > 1e-6 * scale) {
        throw DomainError("make_riccati: supplied derivative disagrees with R at x=" +
                          std::to_string(x));
      }
    }
  }
  RiccatiSolution sol;
  sol.sign = sign;
  const double s = sign_value(sign);
  sol.eval_u = [R, dR, s](double x) {
    const double r = R(x);
    return dR(x) + s * r * r;
  };
  sol.eval_R = std::move(R);
  sol.eval_dR = std::move(dR);
  return sol;
}

void MorseRiccati::validate() const {
  if (!(a > 0.0)) throw DomainError("Morse superpotential needs a > 0");
  if (!(B > 0.0)) throw DomainError("Morse superpotential needs B > 0");
  if (!std::isfinite(A)) throw DomainError("Morse superpotential needs finite A");
}

RiccatiSolution morse_riccati(const MorseRiccati& params, Sign sign) {
  params.validate();
  const double A = params.A;
  const double B = params.B;
  const double a = params.a;
  return make_riccati([A, B, a](double x) { return A - B * std::exp(-a * x); },
                      [B, a](double x) { return a * B * std::exp(-a * x); }, sign);
}

double riccati_residual(const RiccatiSolution& sol, double x) {
  return riccati_residual(sol, x, sol.sign);
}

double riccati_residual(const RiccatiSolution& sol, double x, Sign sign) {
  const double r = sol.eval_R(x);
  return std::abs(sol.eval_dR(x) + sign_value(sign) * r * r - sol.eval_u(x));
}

double morse_y(const MorseRiccati& params, double x) {
  return 2.0 * params.B / params.a * std::exp(-params.a * x);
}

double morse_x(const MorseRiccati& params, double y) {
  if (!(y > 0.0)) throw DomainError("morse_x: y must be positive");
  return -std::log(params.a * y / (2.0 * params.B)) / params.a;
}

}  // namespace nhmorse::riccati
