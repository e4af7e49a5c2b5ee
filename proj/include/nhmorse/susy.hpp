#pragma once

// Factorization layer. The real Dirac/Schroedinger partner potentials and the
// complex extension with parameters (K, K'); the single-K scheme is the
// K' = K specialization.
//
// Sector signs follow the complex bracket convention
//   w'' + Q_i w = 0,  Q_i = +/-R' + 2iKR + (K^2 - K'^2) - R^2,
// with + for the fermionic and - for the bosonic component. The real-case
// potentials U_i = (m + R)^2 - m^2 -/+ R' carry the opposite sign because
// there the bracket sits on the other side of the equation.

#include <nhmorse/residual.hpp>
#include <nhmorse/riccati.hpp>
#include <nhmorse/types.hpp>

namespace nhmorse::susy {

using riccati::RiccatiSolution;

struct RealCaseParams {
  double m = 0.0;
  double E = 0.0;

  double epsilon() const { return E * E - m * m; }
};

struct ExtensionParams {
  double K = 0.0;
  double Kprime = 0.0;
};

enum class Direction { raise, lower };

/// +1 for fermionic, -1 for bosonic: the sign of R' in Q_i.
inline double sector_sign(Sector s) { return s == Sector::fermionic ? 1.0 : -1.0; }

/// U_i(x) = (m + R)^2 - m^2 - R' (fermionic) or + R' (bosonic).
double real_partner_potential(const RiccatiSolution& R, double m, Sector sector, double x);

/// Q_i(x) = +/-R' + 2iK R + (K^2 - K'^2) - R^2.
ComplexScalar complex_potential_coefficient(const RiccatiSolution& R, const ExtensionParams& ext,
                                            Sector sector, double x);

/// Single-K bracket, i.e. complex_potential_coefficient at K' = K.
ComplexScalar single_k_coefficient(const RiccatiSolution& R, double K, Sector sector, double x);

/// A+ f = i f' + (K + iR) f  (raise),  A- f = -i f' + (K + iR) f  (lower).
ComplexScalar apply_first_order(Direction direction, const RiccatiSolution& R, double K,
                                ComplexScalar f, ComplexScalar df, double x);

/// Value and first two derivatives of a sampled function at one point.
struct PointJet {
  ComplexScalar value;
  ComplexScalar d1;
  ComplexScalar d2;
};

/// (A-A+ - K^2) w (fermionic) or (A+A- - K^2) w (bosonic), assembled from two
/// first-order applications. Needs w, w', w'' at x.
ComplexScalar composed_second_order(Sector sector, const RiccatiSolution& R, double K,
                                    const PointJet& w, double x);

/// Residual of w'' + Q_i w = 0 over the grid, i.e. of
/// (A-A+ - K^2) w = (K'^2 - K^2) w for the fermionic component and the
/// A+A- analogue for the bosonic one. w2 may be empty, in which case the
/// interior points are checked with a 5-point stencil. Throws DomainError on
/// an empty grid.
verify::ResidualReport hamiltonian_eigen_residual(const RiccatiSolution& R,
                                                  const ExtensionParams& ext, Sector sector,
                                                  const verify::ComplexFn& w,
                                                  const verify::ComplexFn& w2,
                                                  const verify::Grid1D& grid, double tol);

}  // namespace nhmorse::susy
