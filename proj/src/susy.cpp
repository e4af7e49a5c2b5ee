#include <nhmorse/susy.hpp>

namespace nhmorse::susy {

double real_partner_potential(const RiccatiSolution& R, double m, Sector sector, double x) {
  const double r = R.eval_R(x);
  return (m + r) * (m + r) - m * m - sector_sign(sector) * R.eval_dR(x);
}

ComplexScalar complex_potential_coefficient(const RiccatiSolution& R, const ExtensionParams& ext,
                                            Sector sector, double x) {
  const double r = R.eval_R(x);
  const double real_part =
      sector_sign(sector) * R.eval_dR(x) + (ext.K * ext.K - ext.Kprime * ext.Kprime) - r * r;
  return {real_part, 2.0 * ext.K * r};
}

ComplexScalar single_k_coefficient(const RiccatiSolution& R, double K, Sector sector, double x) {
  return complex_potential_coefficient(R, ExtensionParams{K, K}, sector, x);
}

ComplexScalar apply_first_order(Direction direction, const RiccatiSolution& R, double K,
                                ComplexScalar f, ComplexScalar df, double x) {
  const ComplexScalar mass{K, R.eval_R(x)};
  const double d_sign = direction == Direction::raise ? 1.0 : -1.0;
  return d_sign * kI * df + mass * f;
}

ComplexScalar composed_second_order(Sector sector, const RiccatiSolution& R, double K,
                                    const PointJet& w, double x) {
  // Inner operator first: A+ for the fermionic order A-A+, A- for A+A-.
  const Direction inner = sector == Sector::fermionic ? Direction::raise : Direction::lower;
  const Direction outer = sector == Sector::fermionic ? Direction::lower : Direction::raise;
  const double inner_sign = inner == Direction::raise ? 1.0 : -1.0;

  const ComplexScalar mass{K, R.eval_R(x)};
  const ComplexScalar dmass{0.0, R.eval_dR(x)};
  const ComplexScalar g = apply_first_order(inner, R, K, w.value, w.d1, x);
  const ComplexScalar dg = inner_sign * kI * w.d2 + dmass * w.value + mass * w.d1;
  return apply_first_order(outer, R, K, g, dg, x) - K * K * w.value;
}

verify::ResidualReport hamiltonian_eigen_residual(const RiccatiSolution& R,
                                                  const ExtensionParams& ext, Sector sector,
                                                  const verify::ComplexFn& w,
                                                  const verify::ComplexFn& w2,
                                                  const verify::Grid1D& grid, double tol) {
  const auto Q = [&R, ext, sector](double x) {
    return complex_potential_coefficient(R, ext, sector, x);
  };
  return verify::ode_residual(Q, w, w2, grid, tol,
                              std::string("hamiltonian-") + to_string(sector));
}

}  // namespace nhmorse::susy
