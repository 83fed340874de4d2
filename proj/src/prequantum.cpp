#include "gqweyl/prequantum.hpp"

#include <cmath>
#include <stdexcept>

#include "gqweyl/clifford.hpp"

namespace gqw::prequantum {

namespace {
constexpr cdouble kI{0.0, 1.0};
}

DiracSpinor to_Z(const symplectic::GroupPoint& pt, const ModelParams& params) {
  const MinkowskiVector P = spin::momentum_P(pt.zeta);
  const double phase = -params.chi * minkowski_dot(P, pt.R) / params.hbar;
  const cdouble f = std::exp(kI * phase);
  return DiracSpinor{f * pt.zeta.zeta.zp, f * pt.zeta.zeta.zs};
}

PrequantumPoint project_WY(const symplectic::GroupPoint& pt, const ModelParams& params) {
  const auto shift = symplectic::detail::solve_section(pt, params);
  const Vector3d x = spatial(pt.R) + shift.dr;
  // phase at the section point, where P.R = -p.x
  const auto [p, energy] = spin::momentum_3(pt.zeta.zeta.zp);
  (void)energy;
  const double phase = params.chi * p.dot(x) / params.hbar;
  return PrequantumPoint{std::exp(kI * phase) * pt.zeta.zeta.zp, x};
}

Vector3d p_of_Z(const Vector2c& Zp) {
  if (Zp.norm() == 0.0) throw std::invalid_argument("p_of_Z: zero spinor");
  return spin::momentum_3(Zp).first;
}

double alpha_eval(const PrequantumPoint& y, const TangentY& t, const ModelParams& params) {
  const double n = y.Zp.squaredNorm();
  if (n == 0.0) throw std::invalid_argument("alpha_eval: zero spinor");
  Vector3d dp;
  for (int k = 1; k <= 3; ++k)
    dp[k - 1] = kSqrt2 * (y.Zp.dot(clifford::pauli(k) * t.dZp)).real();
  const double dmag = kSqrt2 * (y.Zp.dot(t.dZp)).real();
  const double pmag = n / kSqrt2;
  const Vector3d p = p_of_Z(y.Zp);
  const double chih = params.chi * params.hbar;

  const cdouble zdz = y.Zp.dot(t.dZp) / n;  // Z''^dag dZ' on the section
  const cdouble value = -y.x.dot(dp) - chih * dmag / (2.0 * kI * pmag) +
                        chih * zdz / kI;
  if (std::abs(value.imag()) > 1e-12 * (1.0 + std::abs(value.real())))
    throw std::logic_error("alpha_eval: imaginary parts failed to cancel");
  (void)p;
  return value.real();
}

PrequantumPoint u1_action(double theta, const PrequantumPoint& y,
                          const ModelParams& params) {
  const cdouble f = std::exp(kI * static_cast<double>(params.chi) * theta);
  return PrequantumPoint{f * y.Zp, y.x};
}

symplectic::MotionPoint project_YX(const PrequantumPoint& y) {
  return symplectic::MotionPoint{p_of_Z(y.Zp), y.x};
}

symplectic::TangentX dpi_YX(const PrequantumPoint& y, const TangentY& t) {
  Vector3d dp;
  for (int k = 1; k <= 3; ++k)
    dp[k - 1] = kSqrt2 * (y.Zp.dot(clifford::pauli(k) * t.dZp)).real();
  return symplectic::TangentX{dp, t.dx};
}

TangentY fundamental_field(const PrequantumPoint& y, const ModelParams& params) {
  return TangentY{kI * static_cast<double>(params.chi) * y.Zp, Vector3d::Zero()};
}

}  // namespace gqw::prequantum
