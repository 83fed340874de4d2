#ifndef GQWEYL_POLARIZATION_HPP
#define GQWEYL_POLARIZATION_HPP

#include <functional>
#include <map>
#include <string>

#include "gqweyl/prequantum.hpp"
#include "gqweyl/rng.hpp"
#include "gqweyl/symplectic.hpp"
#include "gqweyl/types.hpp"

namespace gqw::polarization {

// Polarizer 3-form phi = dp1^dp2^dp3 / |p| evaluated on three tangents.
double phi_eval(const symplectic::MotionPoint& m, const symplectic::TangentX& u1,
                const symplectic::TangentX& u2, const symplectic::TangentX& u3);

// Unit spinor with gamma(P) psi = 0 and gamma5 psi = i chi psi, for P null
// and future-pointing. Phase fixed by making the first component of modulus
// above 1e-12 real positive; the section is then continuous everywhere except
// one pole of S^2 (south for chi = -1, north for chi = +1).
Vector4c basis_solution(const MinkowskiVector& P, int chi);

// Helicity eigenvectors of sigma(u) on S^2 with the same phase convention.
Vector2c helicity_eigenvector(const Vector3d& u, int sign);

// Entrywise deviation of gamma(P(Z')) from its half-spinor outer-product
// block form.
double gamma_P_block_residual(const Vector2c& Zp);

// Singular values s3 >= s4 of the stacked system {gamma(P), gamma5 - i chi}:
// nullity 1 means s4 ~ 0 and s3 well separated.
std::pair<double, double> eq20_smallest_singular_values(const MinkowskiVector& P, int chi);

// Spinor-valued momentum amplitude on C+ subject to the chirality pair.
struct MomentumSpinor {
  std::function<Vector4c(const MinkowskiVector&)> psi;
  int chi = -1;
};

using Amplitude = std::function<cdouble(const MinkowskiVector&)>;

MomentumSpinor make_momentum_spinor(Amplitude f, int chi);

// U(1)-equivariant wave function on Y^7. eval is the section evaluator;
// eval_w the off-section extension bar(Z) psi(P(Z')) used by the polarized
// checks.
struct WaveFunction {
  Amplitude amplitude;
  int chi = -1;
  std::function<cdouble(const prequantum::PrequantumPoint&)> eval;
  std::function<cdouble(const DiracSpinor&, const Vector3d&)> eval_w;
};

// Polarized wave function for chi = -1 (the explicitly constructed case):
// Psi(Z', x) = bar(Z) psi(P), psi = f . basis solution. Throws on chi = +1.
WaveFunction make_polarized(Amplitude f, int chi, const ModelParams& params);

// Recovers psi(P) = (2Z', 0) Psi from the wave function.
Vector4c reconstruct_momentum_spinor(const WaveFunction& w,
                                     const prequantum::PrequantumPoint& y);

struct PolarizationGeometryReport {
  double wedge_omega_phi;   // 5-form omega^phi on random tangents
  double kernel_dp_leak;    // dp-components of the numerical kernel of phi
  double kernel_gap;        // smallest nonzero singular value (should be O(1))
  double isotropy;          // omega(F,F) on kernel pairs
};

PolarizationGeometryReport verify_polarization(const ModelParams& params,
                                               RandomStream& rng, int samples);

struct PolarizedReport {
  double wedge_residual;    // |phi ^ D Psi| on random 4-tuples
  double x_derivative;      // |dPsi/dx|
  double zprime_direction;  // derivative along the p-preserving direction iZ'
  double zsecond_pairing;   // |dPsi/dZ''bar - Z' Psi|
  double homogeneity;       // |Z''bar dPsi/dZ''bar - Psi|
};

// Finite-difference verification of the covariant-constancy equation
// phi ^ (d Psi - (i/hbar) alpha Psi) = 0 and the scalar conditions of its
// derivation. h is the central-difference step; samples are drawn with
// energies in [e_lo, e_hi], which should sit inside the amplitude support.
PolarizedReport check_polarized(const WaveFunction& w, const ModelParams& params,
                                RandomStream& rng, int samples, double h,
                                double e_lo = 1.2, double e_hi = 1.8);

// Named amplitude profiles: bump(a,b), gauss(mu,sigma,a,b) smoothly cut to
// (a,b), shell(e0,width). All smooth, compactly supported in energy.
Amplitude make_profile(const std::string& name,
                       const std::map<std::string, double>& kv);

// Support window [a,b] of a named profile (for quadrature placement).
std::pair<double, double> profile_support(const std::string& name,
                                          const std::map<std::string, double>& kv);

}  // namespace gqw::polarization

#endif
