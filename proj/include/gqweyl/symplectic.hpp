#ifndef GQWEYL_SYMPLECTIC_HPP
#define GQWEYL_SYMPLECTIC_HPP

#include <array>

#include "gqweyl/errors.hpp"
#include "gqweyl/spin.hpp"
#include "gqweyl/types.hpp"

namespace gqw::symplectic {

// Point of W^10 = Sigma^6 x E^4.
struct GroupPoint {
  spin::SigmaPoint zeta;
  MinkowskiVector R;
};

// Ambient tangent vector at a GroupPoint; dzeta must satisfy the linearized
// constraint zp^dag dzs + dzp^dag zs = 0.
struct TangentW {
  Vector4c dzeta;
  MinkowskiVector dR;
};

// Point of the space of motions X^6 = T*C+ (p != 0, x the Pryce coordinates).
struct MotionPoint {
  Vector3d p;
  Vector3d x;
};

struct TangentX {
  Vector3d dp;
  Vector3d dx;
};

inline constexpr double kTangentTol = 1e-10;

// |linearized Sigma^6 constraint| at the base point.
double tangent_residual(const GroupPoint& pt, const TangentW& t);

// Removes the constraint-normal component of an ambient dzeta.
Vector4c project_tangent(const GroupPoint& pt, const Vector4c& dzeta);

// Invariant 1-form of W^10: varpi(t) = -P.dR + (chi hbar/i) bar(zeta) dzeta.
// Throws NonTangentVector beyond 1e-10.
double varpi_eval(const GroupPoint& pt, const TangentW& t, const ModelParams& params);

// Same expression without the tangency gate; used by finite-difference
// oracles that evaluate at slightly off-manifold points.
double varpi_eval_unchecked(const GroupPoint& pt, const TangentW& t,
                            const ModelParams& params);

// Explicit bilinear evaluation of sigma = d varpi.
double sigma_eval(const GroupPoint& pt, const TangentW& t1, const TangentW& t2,
                  const ModelParams& params);
double sigma_eval_unchecked(const GroupPoint& pt, const TangentW& t1,
                            const TangentW& t2, const ModelParams& params);

// Deterministic basis of P-orthogonal directions, first vector P itself.
std::array<MinkowskiVector, 3> pperp_basis(const spin::SigmaPoint& z);

// Kernel tangent of sigma for a given dR in P-perp (lambda = 0 part) plus
// the gauge direction i lambda zeta.
TangentW kernel_vector(const GroupPoint& pt, const MinkowskiVector& dR,
                       double lambda, const ModelParams& params);

// Four generators of ker sigma: three with lambda = 0 and dR spanning P-perp
// (the first being dR = P), one with dR = 0, lambda = 1.
std::array<TangentW, 4> kernel_basis(const GroupPoint& pt, const ModelParams& params);

// Twisted symplectic form of X^6; the S^2 orientation is fixed by the
// curvature identity d alpha = pi* omega.
double omega_eval(const MotionPoint& m, const TangentX& u1, const TangentX& u2,
                  const ModelParams& params);

// pi_WX = pi_YX o pi_WY: momentum from zp, position from the leaf-to-section solve.
MotionPoint project_WX(const GroupPoint& pt, const ModelParams& params);

// Exact flow along the lambda = 0 kernel generator with direction dR in P-perp
// (the generator is constant along its own leaf, so the flow is affine).
GroupPoint flow_kernel(const GroupPoint& pt, const MinkowskiVector& dR, double s,
                       const ModelParams& params);

// Phase flow zeta -> e^{i theta} zeta of the U(1) action on W^10.
GroupPoint flow_phase(const GroupPoint& pt, double theta);

// Deterministic orthonormal-ish basis of the 10-dimensional tangent space:
// six constraint-tangent dzeta directions followed by the four dR axes.
std::array<TangentW, 10> tangent_basis(const GroupPoint& pt);

namespace detail {
// Shared leaf-to-section solve: the unique dr with (r + dr, 0) on the section
// through pt. Affine 3x3 system; throws SingularLeafSolve at cond > 1e12.
struct SectionShift {
  Vector3d dr;
  Vector2c zs_new;  // flowed zeta'' at the section point
};
SectionShift solve_section(const GroupPoint& pt, const ModelParams& params);
}  // namespace detail

}  // namespace gqw::symplectic

#endif
