#include "gqweyl/spin.hpp"

#include <cmath>
#include <stdexcept>

namespace gqw::spin {

namespace {

using clifford::bar_dot;
using clifford::gamma;
using clifford::gram;
using clifford::gram_inverse;
using clifford::projector_pi;
using clifford::quaternionic_H;

constexpr cdouble kI{0.0, 1.0};

// P-pairing sqrt(2) bar(z) gamma_mu Pi w per component; momentum_P is the
// diagonal, its derivative the polarization 2 Re(offdiagonal).
Vector4c momentum_pairing(const Vector4c& z, const Vector4c& w) {
  Vector4c out;
  const Vector4c piw = projector_pi(+1) * w;
  for (int mu = 1; mu <= 4; ++mu) {
    const cdouble lowered = kSqrt2 * (clifford::bar_spinor(z) * (gamma(mu) * piw))(0);
    out[mu - 1] = lowered;
  }
  // raise the index
  out.head<3>() *= -1.0;
  return out;
}

}  // namespace

SigmaPoint sigma_project(const Vector2c& zp, const Vector2c& zs) {
  const cdouble ip = zp.dot(zs);
  if (std::abs(ip) <= kDegenerateTol)
    throw DegenerateSpinor("sigma_project: |zp^dag zs| below 1e-12");
  return SigmaPoint{DiracSpinor{zp, zs / ip}};
}

SigmaPoint sample_sigma(RandomStream& rng) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    const Vector2c zp = rng.gaussian2c();
    const Vector2c zs = rng.gaussian2c();
    if (std::abs(zp.dot(zs)) <= kDegenerateTol) continue;
    if (zp.norm() < 1e-6 || zs.norm() < 1e-6) continue;
    return sigma_project(zp, zs);
  }
  throw std::logic_error("sample_sigma: no non-degenerate draw in 100 attempts");
}

double sigma_residual(const DiracSpinor& zeta) {
  const cdouble unit = bar_dot(zeta, zeta) - 1.0;
  const Vector4c z4 = zeta.to4();
  const cdouble chi5 = bar_dot(z4, Vector4c(gamma(5) * z4));
  const cdouble split = zeta.zp.dot(zeta.zs) - 1.0;
  return std::max({std::abs(unit), std::abs(chi5), std::abs(split)});
}

SpinElement embed_sl2(const Matrix2c& a) {
  if (std::abs(a.determinant() - 1.0) > 1e-10)
    throw NotUnimodular("embed_sl2: |det a - 1| > 1e-10");
  Matrix4c A = Matrix4c::Zero();
  A.block<2, 2>(0, 0) = a;
  A.block<2, 2>(2, 2) = a.adjoint().inverse();
  return SpinElement{A};
}

SpinElement zeta_to_spin(const SigmaPoint& z) {
  const Vector4c zeta = z.zeta.to4();
  const Vector4c hzeta = quaternionic_H(zeta);
  Matrix4c A;
  A.col(0) = projector_pi(+1) * zeta;
  A.col(1) = projector_pi(+1) * hzeta;
  A.col(2) = projector_pi(-1) * zeta;
  A.col(3) = projector_pi(-1) * hzeta;
  return SpinElement{A};
}

SigmaPoint spin_to_zeta(const SpinElement& A) {
  return SigmaPoint{DiracSpinor::from4(A.A.col(0) + A.A.col(2))};
}

Matrix4c spin_inverse(const Matrix4c& A) {
  return gram_inverse() * A.adjoint() * gram();
}

double spin_element_residual(const Matrix4c& A) {
  const double unitary =
      (spin_inverse(A) * A - Matrix4c::Identity()).cwiseAbs().maxCoeff();
  const double chirality = (A * gamma(5) - gamma(5) * A).cwiseAbs().maxCoeff();
  // A H = H A as antilinear maps: A Hj conj(z) = Hj conj(A z) for all z,
  // i.e. A Hj = Hj conj(A) with Hj the matrix part of H.
  Matrix4c hj = Matrix4c::Zero();
  const Matrix2c j = (Matrix2c() << 0, -1, 1, 0).finished();
  hj.block<2, 2>(0, 2) = j;
  hj.block<2, 2>(2, 0) = j;
  const double quat = (A * hj - hj * A.conjugate()).cwiseAbs().maxCoeff();
  return std::max({unitary, chirality, quat});
}

LorentzMatrix rho(const SpinElement& A) {
  const Matrix4c inv = spin_inverse(A.A);
  LorentzMatrix L;
  for (int mu = 1; mu <= 4; ++mu) {
    const double gup = metric()(mu - 1, mu - 1);  // g^{mumu} = g_{mumu}
    for (int nu = 1; nu <= 4; ++nu) {
      const cdouble tr = (gamma(mu) * A.A * gamma(nu) * inv).trace();
      L(mu - 1, nu - 1) = 0.25 * gup * tr.real();
    }
  }
  return L;
}

double lorentz_residual(const LorentzMatrix& L) {
  const double iso = (L.transpose() * metric() * L - metric()).cwiseAbs().maxCoeff();
  const double det = std::abs(L.determinant() - 1.0);
  const double neutral = std::max(0.0, 1.0 - L(3, 3));
  return std::max({iso, det, neutral});
}

MinkowskiVector momentum_P(const SigmaPoint& z) {
  const Vector4c pair = momentum_pairing(z.zeta.to4(), z.zeta.to4());
  return pair.real();
}

MinkowskiVector momentum_Q(const SigmaPoint& z) {
  const Vector4c z4 = z.zeta.to4();
  const Vector4c pibz = projector_pi(-1) * z4;
  MinkowskiVector Q;
  for (int mu = 1; mu <= 4; ++mu) {
    const cdouble lowered =
        -kSqrt2 * (clifford::bar_spinor(z4) * (gamma(mu) * pibz))(0);
    Q[mu - 1] = lowered.real();
  }
  Q.head<3>() *= -1.0;
  return Q;
}

MinkowskiVector momentum_P_derivative(const SigmaPoint& z, const Vector4c& dzeta) {
  const Vector4c pair = momentum_pairing(z.zeta.to4(), dzeta);
  return 2.0 * pair.real();
}

std::pair<Vector3d, double> momentum_3(const Vector2c& zp) {
  if (zp.norm() == 0.0) throw std::invalid_argument("momentum_3: zero spinor");
  Vector3d p;
  for (int k = 1; k <= 3; ++k)
    p[k - 1] = (zp.dot(clifford::pauli(k) * zp)).real() / kSqrt2;
  return {p, zp.squaredNorm() / kSqrt2};
}

}  // namespace gqw::spin
