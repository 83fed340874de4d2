#ifndef GQWEYL_PREQUANTUM_HPP
#define GQWEYL_PREQUANTUM_HPP

#include "gqweyl/symplectic.hpp"
#include "gqweyl/types.hpp"

namespace gqw::prequantum {

// Point of the prequantum bundle Y^7, in section coordinates (Z', x); the
// implied Z'' is Z'/|Z'|^2, so Z''^dag Z' = 1 identically.
struct PrequantumPoint {
  Vector2c Zp;
  Vector3d x;
};

// Y^7 is open in C^2 x R^3, so tangents are unconstrained.
struct TangentY {
  Vector2c dZp;
  Vector3d dx;
};

// Z-variables: Z = e^{-(i chi/hbar) P.R} zeta. The helicity factor in the
// phase makes varpi = R.dP + (chi hbar/i) bar(Z) dZ an identity for both
// signs of chi, and with it the reduction varpi = pi_WY* alpha.
DiracSpinor to_Z(const symplectic::GroupPoint& pt, const ModelParams& params);

// Unique section representative of the leaf through pt.
PrequantumPoint project_WY(const symplectic::GroupPoint& pt, const ModelParams& params);

// p = (1/sqrt2) Z'^dag sigma Z'.
Vector3d p_of_Z(const Vector2c& Zp);

// Connection form alpha = -x.dp - chi hbar d|p|/(2i|p|) + chi hbar (Z''bar dZ')/i,
// with dp and d|p| induced by dZ'. The imaginary parts cancel; asserted.
double alpha_eval(const PrequantumPoint& y, const TangentY& t, const ModelParams& params);

// Structure-group flow (e^{i chi theta} Z', x).
PrequantumPoint u1_action(double theta, const PrequantumPoint& y,
                          const ModelParams& params);

symplectic::MotionPoint project_YX(const PrequantumPoint& y);

// Analytic differential of pi_YX.
symplectic::TangentX dpi_YX(const PrequantumPoint& y, const TangentY& t);

// Fundamental vector field (i chi Z', 0) of the U(1) action.
TangentY fundamental_field(const PrequantumPoint& y, const ModelParams& params);

}  // namespace gqw::prequantum

#endif
