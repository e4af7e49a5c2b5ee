#pragma once

// Complex special-function kernel: log-gamma, Kummer M and Tricomi U with
// complex parameters, Whittaker M/W of real positive argument, classical and
// generalized Laguerre functions.
//
// Branch convention: every complex power and square root is taken on the
// principal branch, argument in (-pi, pi]. Arguments y of the Whittaker
// functions are real and positive, so y^s = exp(s * ln y).

#include <nhmorse/errors.hpp>
#include <nhmorse/types.hpp>

namespace nhmorse::specfun {

struct WhittakerIndices {
  ComplexScalar kappa;
  ComplexScalar mu;
};

/// Value together with its first two derivatives with respect to the argument.
struct Jet {
  ComplexScalar value;
  ComplexScalar d1;
  ComplexScalar d2;
};

/// Principal branch of log Gamma(z), branch cut on the negative real axis
/// (the real axis itself is approached from above). Lanczos g = 7 for
/// Re z >= 1/2, reflection below.
/// Throws PoleError within 1e-12 of a nonpositive integer.
ComplexScalar log_gamma(ComplexScalar z);

/// 1 / Gamma(z); exactly zero at nonpositive integers.
ComplexScalar reciprocal_gamma(ComplexScalar z);

/// True if z is exactly a nonpositive integer (imaginary part zero).
bool is_nonpositive_integer(ComplexScalar z);

/// Confluent hypergeometric 1F1(a; b; z) for real z.
///
/// Direct series with term-ratio stopping (|term| <= 1e-17 |sum| for three
/// consecutive terms), accumulated in extended precision, capped at 10000
/// terms. Negative z goes through Kummer's transformation
/// e^z 1F1(b - a; b; -z) so that the summed series never alternates.
///
/// Throws ParameterPole if b is within 1e-6 of a nonpositive integer and the
/// series does not terminate first, NonConvergence at the term cap.
ComplexScalar kummer_m(ComplexScalar a, ComplexScalar b, double z);

/// Tricomi U(a, b, z), z > 0, from the two-term connection formula
///   U = G(1-b)/G(a-b+1) M(a,b,z) + G(b-1)/G(a) z^(1-b) M(a-b+1,2-b,z).
/// When the two terms cancel by more than a factor 1e4 (large z, where U is
/// recessive) the value instead comes from the asymptotic expansion at a
/// distant point, continued inward by Taylor steps of Kummer's equation.
/// Throws IntegerB when b is within 1e-6 of an integer.
ComplexScalar tricomi_u(ComplexScalar a, ComplexScalar b, double z);

/// M_{kappa,mu}(y) = e^{-y/2} y^{mu+1/2} 1F1(mu - kappa + 1/2; 2 mu + 1; y).
ComplexScalar whittaker_m(const WhittakerIndices& idx, double y);

/// W_{kappa,mu}(y) = e^{-y/2} y^{mu+1/2} U(mu - kappa + 1/2, 2 mu + 1, y).
ComplexScalar whittaker_w(const WhittakerIndices& idx, double y);

/// dM/dy from the product rule and d/dz 1F1(a;b;z) = (a/b) 1F1(a+1;b+1;z).
ComplexScalar whittaker_m_dy(const WhittakerIndices& idx, double y);

/// dW/dy from the product rule and d/dz U(a,b,z) = -a U(a+1,b+1,z).
ComplexScalar whittaker_w_dy(const WhittakerIndices& idx, double y);

/// M with its first and second y-derivatives, all from series identities
/// (the Whittaker equation itself is never used to form the second
/// derivative).
Jet whittaker_m_jet(const WhittakerIndices& idx, double y);
Jet whittaker_w_jet(const WhittakerIndices& idx, double y);

/// Classical associated Laguerre polynomial L_n^p(y), three-term recurrence.
/// Negative n returns 0 so derivative formulas stay uniform.
double laguerre_poly(int n, double p, double y);

/// Unnormalized Laguerre-like core 1F1(-nu; alpha + 1; y). With it,
///   M_{kappa,mu}(y) = y^{mu+1/2} e^{-y/2} kummer_core(kappa - mu - 1/2, 2 mu, y)
/// holds exactly.
ComplexScalar kummer_core(ComplexScalar nu, ComplexScalar alpha, double y);

/// Normalized generalized Laguerre function
///   G(nu+alpha+1) / (G(nu+1) G(alpha+1)) * kummer_core(nu, alpha, y),
/// equal to laguerre_poly for integer nu >= 0 and real alpha.
ComplexScalar laguerre_function(ComplexScalar nu, ComplexScalar alpha, double y);

}  // namespace nhmorse::specfun
