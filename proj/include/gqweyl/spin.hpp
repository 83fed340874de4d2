#ifndef GQWEYL_SPIN_HPP
#define GQWEYL_SPIN_HPP

#include <utility>

#include "gqweyl/clifford.hpp"
#include "gqweyl/errors.hpp"
#include "gqweyl/rng.hpp"
#include "gqweyl/types.hpp"

namespace gqw::spin {

// Point of the spinor manifold Sigma^6: bar(zeta) zeta = 1 and
// bar(zeta) gamma5 zeta = 0, equivalently zp^dag zs = 1.
struct SigmaPoint {
  DiracSpinor zeta;
};

// Element of Spin(3,1): G-unitary, commutes with gamma5 and with the
// quaternionic structure H.
struct SpinElement {
  Matrix4c A;
};

inline constexpr double kDegenerateTol = 1e-12;
inline constexpr double kSpinElementTol = 1e-12;
inline constexpr double kLorentzTol = 1e-10;

// Rescales zs so the pair lands on Sigma^6. Throws DegenerateSpinor when
// |zp^dag zs| <= 1e-12.
SigmaPoint sigma_project(const Vector2c& zp, const Vector2c& zs);

// Deterministic Gaussian sample projected onto Sigma^6.
SigmaPoint sample_sigma(RandomStream& rng);

// Max violation of both forms of the defining relations.
double sigma_residual(const DiracSpinor& zeta);

// Block-diagonal spin element diag(a, (a^dag)^{-1}) for a in SL(2,C).
SpinElement embed_sl2(const Matrix2c& a);

// The diffeomorphism Sigma^6 -> Spin(3,1) and its inverse S -> A1 + A3.
SpinElement zeta_to_spin(const SigmaPoint& z);
SigmaPoint spin_to_zeta(const SpinElement& A);

// Inverse via G-unitarity: A^{-1} = G^{-1} A^dag G.
Matrix4c spin_inverse(const Matrix4c& A);

// Max violation of the SpinElement invariants (G-unitarity, gamma5- and
// H-commutation).
double spin_element_residual(const Matrix4c& A);

// Covering homomorphism, extracted by the trace formula
// L^mu_nu = (1/4) g^{mumu} tr(gamma_mu A gamma_nu A^{-1}).
LorentzMatrix rho(const SpinElement& A);

// Max violation of L^T g L = g, det L = 1, L^4_4 >= 1.
double lorentz_residual(const LorentzMatrix& L);

// Null future-pointing momentum, P_mu = sqrt(2) bar(zeta) gamma_mu Pi zeta.
MinkowskiVector momentum_P(const SigmaPoint& z);

// Null partner with P.Q = -1.
MinkowskiVector momentum_Q(const SigmaPoint& z);

// Directional derivative of momentum_P in dzeta (analytic, by sesquilinearity).
MinkowskiVector momentum_P_derivative(const SigmaPoint& z, const Vector4c& dzeta);

// p = (1/sqrt2) zp^dag sigma zp and E = |p| = |zp|^2/sqrt2.
std::pair<Vector3d, double> momentum_3(const Vector2c& zp);

}  // namespace gqw::spin

#endif
