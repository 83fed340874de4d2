#include "gqweyl/symplectic.hpp"

#include <Eigen/SVD>
#include <cmath>

#include "gqweyl/clifford.hpp"

namespace gqw::symplectic {

namespace {

using clifford::bar_dot;
using clifford::pauli_vec;
using clifford::projector_pi;

constexpr cdouble kI{0.0, 1.0};

double re_inner(const Vector4c& a, const Vector4c& b) { return a.dot(b).real(); }

// Real-linear normal directions of the linearized constraint
// zp^dag dzs + dzp^dag zs = 0 at zeta, under the inner product Re(a^dag b).
std::pair<Vector4c, Vector4c> constraint_normals(const DiracSpinor& zeta) {
  Vector4c v1 = Vector4c::Zero();
  v1(2) = zeta.zp(0);
  v1(3) = zeta.zp(1);
  Vector4c v2 = Vector4c::Zero();
  v2(0) = zeta.zs(0);
  v2(1) = zeta.zs(1);
  return {v1 + v2, kI * (v1 - v2)};
}

}  // namespace

double tangent_residual(const GroupPoint& pt, const TangentW& t) {
  const DiracSpinor d = DiracSpinor::from4(t.dzeta);
  const cdouble c = pt.zeta.zeta.zp.dot(d.zs) + d.zp.dot(pt.zeta.zeta.zs);
  return std::abs(c);
}

Vector4c project_tangent(const GroupPoint& pt, const Vector4c& dzeta) {
  auto [n1, n2] = constraint_normals(pt.zeta.zeta);
  // orthonormalize the two normals, then subtract components
  Vector4c u1 = n1 / std::sqrt(re_inner(n1, n1));
  Vector4c u2 = n2 - re_inner(u1, n2) * u1;
  u2 /= std::sqrt(re_inner(u2, u2));
  Vector4c out = dzeta;
  out -= re_inner(u1, out) * u1;
  out -= re_inner(u2, out) * u2;
  return out;
}

double varpi_eval_unchecked(const GroupPoint& pt, const TangentW& t,
                            const ModelParams& params) {
  const MinkowskiVector P = spin::momentum_P(pt.zeta);
  const cdouble zdz = bar_dot(pt.zeta.zeta.to4(), t.dzeta);
  return -minkowski_dot(P, t.dR) + params.chi * params.hbar * zdz.imag();
}

double varpi_eval(const GroupPoint& pt, const TangentW& t, const ModelParams& params) {
  if (tangent_residual(pt, t) > kTangentTol)
    throw NonTangentVector("varpi_eval: tangent violates linearized constraint");
  return varpi_eval_unchecked(pt, t, params);
}

double sigma_eval_unchecked(const GroupPoint& pt, const TangentW& t1,
                            const TangentW& t2, const ModelParams& params) {
  const MinkowskiVector dP1 = spin::momentum_P_derivative(pt.zeta, t1.dzeta);
  const MinkowskiVector dP2 = spin::momentum_P_derivative(pt.zeta, t2.dzeta);
  const double dPdR = minkowski_dot(dP1, t2.dR) - minkowski_dot(dP2, t1.dR);
  const cdouble zz = bar_dot(t1.dzeta, t2.dzeta);
  return -dPdR + 2.0 * params.chi * params.hbar * zz.imag();
}

double sigma_eval(const GroupPoint& pt, const TangentW& t1, const TangentW& t2,
                  const ModelParams& params) {
  if (tangent_residual(pt, t1) > kTangentTol || tangent_residual(pt, t2) > kTangentTol)
    throw NonTangentVector("sigma_eval: tangent violates linearized constraint");
  return sigma_eval_unchecked(pt, t1, t2, params);
}

std::array<MinkowskiVector, 3> pperp_basis(const spin::SigmaPoint& z) {
  const MinkowskiVector P = spin::momentum_P(z);
  const MinkowskiVector Q = spin::momentum_Q(z);
  std::array<MinkowskiVector, 3> basis;
  basis[0] = P;
  int count = 1;
  for (int mu = 0; mu < 4 && count < 3; ++mu) {
    MinkowskiVector v = MinkowskiVector::Unit(mu);
    v += minkowski_dot(P, v) * Q;  // now P.v = 0 since P.Q = -1
    // Euclidean Gram-Schmidt against what we already keep
    for (int k = 0; k < count; ++k) {
      const MinkowskiVector& b = basis[k];
      v -= (b.dot(v) / b.dot(b)) * b;
    }
    if (v.norm() > 1e-9) basis[count++] = v.normalized();
  }
  if (count < 3) throw std::logic_error("pperp_basis: degenerate construction");
  return basis;
}

TangentW kernel_vector(const GroupPoint& pt, const MinkowskiVector& dR,
                       double lambda, const ModelParams& params) {
  const Vector4c z4 = pt.zeta.zeta.to4();
  Vector4c dz = (kI * static_cast<double>(params.chi) / params.hbar) *
                (clifford::gamma_vec(dR) * (projector_pi(+1) * z4));
  dz += kI * lambda * z4;
  return TangentW{dz, dR};
}

std::array<TangentW, 4> kernel_basis(const GroupPoint& pt, const ModelParams& params) {
  const auto perp = pperp_basis(pt.zeta);
  std::array<TangentW, 4> out;
  for (int k = 0; k < 3; ++k) out[k] = kernel_vector(pt, perp[k], 0.0, params);
  out[3] = kernel_vector(pt, MinkowskiVector::Zero(), 1.0, params);
  return out;
}

double omega_eval(const MotionPoint& m, const TangentX& u1, const TangentX& u2,
                  const ModelParams& params) {
  const double pn = m.p.norm();
  if (pn <= 0.0) throw std::invalid_argument("omega_eval: zero momentum");
  const Vector3d u = m.p / pn;
  const auto du = [&](const TangentX& t) -> Vector3d {
    return (t.dp - u.dot(t.dp) * u) / pn;
  };
  const double canonical = u1.dp.dot(u2.dx) - u2.dp.dot(u1.dx);
  // Spin term orientation fixed by d alpha = pi* omega (and sigma = pi* omega).
  const double area = u.dot(du(u1).cross(du(u2)));
  return canonical + params.spin() * area;
}

namespace detail {

SectionShift solve_section(const GroupPoint& pt, const ModelParams& params) {
  const Vector2c& zp = pt.zeta.zeta.zp;
  const Vector2c& zs = pt.zeta.zeta.zs;
  const auto [p, energy] = spin::momentum_3(zp);
  const Vector3d u = p / energy;
  const double n = zp.squaredNorm();
  const double t = pt.R[3];

  // unit vector orthogonal to zp: J conj(zp)
  Vector2c zperp;
  zperp << -std::conj(zp(1)), std::conj(zp(0));
  zperp /= zperp.norm();

  Eigen::Matrix3d M;
  Eigen::Vector3d b;
  M.row(0) = u.transpose();
  b(0) = -t;
  const cdouble rhs = -kI * static_cast<double>(params.chi) * params.hbar *
                      zperp.dot(zs);
  for (int k = 1; k <= 3; ++k) {
    const cdouble ck = zperp.dot(clifford::pauli(k) * zp);
    M(1, k - 1) = ck.real();
    M(2, k - 1) = ck.imag();
  }
  b(1) = rhs.real();
  b(2) = rhs.imag();

  const Eigen::JacobiSVD<Eigen::Matrix3d> svd(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const double smin = svd.singularValues()(2);
  const double smax = svd.singularValues()(0);
  if (smin <= 0.0 || smax / smin > 1e12)
    throw SingularLeafSolve("solve_section: affine system condition > 1e12");
  const Vector3d dr = svd.solve(b);

  const double dt = -t;
  const Vector2c zs_new =
      zs + (kI * static_cast<double>(params.chi) / params.hbar) *
               ((-pauli_vec(dr) + dt * Matrix2c::Identity()) * zp);

  // verification pass
  const double res_t = std::abs(u.dot(dr) - dt);
  const double res_z = (zs_new - zp / n).norm();
  if (res_t > 1e-10 * (1.0 + std::abs(t)) || res_z > 1e-10 * (1.0 + zs.norm()))
    throw SingularLeafSolve("solve_section: verification residual above 1e-10");

  return SectionShift{dr, zs_new};
}

}  // namespace detail

MotionPoint project_WX(const GroupPoint& pt, const ModelParams& params) {
  const auto shift = detail::solve_section(pt, params);
  const auto [p, energy] = spin::momentum_3(pt.zeta.zeta.zp);
  (void)energy;
  return MotionPoint{p, spatial(pt.R) + shift.dr};
}

GroupPoint flow_kernel(const GroupPoint& pt, const MinkowskiVector& dR, double s,
                       const ModelParams& params) {
  const Vector2c& zp = pt.zeta.zeta.zp;
  const Vector2c zs_new =
      pt.zeta.zeta.zs +
      s * (kI * static_cast<double>(params.chi) / params.hbar) *
          ((-pauli_vec(spatial(dR)) + dR[3] * Matrix2c::Identity()) * zp);
  GroupPoint out;
  out.zeta = spin::sigma_project(zp, zs_new);
  out.R = pt.R + s * dR;
  return out;
}

GroupPoint flow_phase(const GroupPoint& pt, double theta) {
  const cdouble phase = std::exp(kI * theta);
  GroupPoint out = pt;
  out.zeta.zeta.zp *= phase;
  out.zeta.zeta.zs *= phase;
  return out;
}

std::array<TangentW, 10> tangent_basis(const GroupPoint& pt) {
  std::array<TangentW, 10> out;
  auto [n1, n2] = constraint_normals(pt.zeta.zeta);
  Vector4c u1 = n1 / std::sqrt(re_inner(n1, n1));
  Vector4c u2 = n2 - re_inner(u1, n2) * u1;
  u2 /= std::sqrt(re_inner(u2, u2));

  int count = 0;
  std::array<Vector4c, 6> kept;
  for (int a = 0; a < 8 && count < 6; ++a) {
    Vector4c v = Vector4c::Zero();
    if (a < 4)
      v(a) = 1.0;
    else
      v(a - 4) = kI;
    v -= re_inner(u1, v) * u1;
    v -= re_inner(u2, v) * u2;
    for (int k = 0; k < count; ++k) v -= re_inner(kept[k], v) * kept[k];
    const double nrm = std::sqrt(re_inner(v, v));
    if (nrm > 1e-9) kept[count++] = v / nrm;
  }
  if (count < 6) throw std::logic_error("tangent_basis: rank deficiency");
  for (int k = 0; k < 6; ++k) out[k] = TangentW{kept[k], MinkowskiVector::Zero()};
  for (int mu = 0; mu < 4; ++mu)
    out[6 + mu] = TangentW{Vector4c::Zero(), MinkowskiVector::Unit(mu)};
  return out;
}

}  // namespace gqw::symplectic
