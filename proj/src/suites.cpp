#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

#include "gqweyl/clifford.hpp"
#include "gqweyl/harness.hpp"
#include "gqweyl/lightcone.hpp"
#include "gqweyl/poincare.hpp"
#include "gqweyl/polarization.hpp"
#include "gqweyl/prequantum.hpp"
#include "gqweyl/spin.hpp"
#include "gqweyl/symplectic.hpp"

// Check bodies for the verify suites. Every check returns its max absolute
// error; the runner compares against the (overridable) tolerance.

namespace gqw::harness {

namespace {

namespace cl = gqw::clifford;
namespace sp = gqw::spin;
namespace sy = gqw::symplectic;
namespace pq = gqw::prequantum;
namespace po = gqw::polarization;
namespace lc = gqw::lightcone;
namespace pc = gqw::poincare;

constexpr cdouble kI{0.0, 1.0};

double relu(double x) { return x > 0.0 ? x : 0.0; }

sy::GroupPoint random_group_point(RandomStream& rng) {
  sy::GroupPoint pt;
  pt.zeta = sp::sample_sigma(rng);
  pt.R = MinkowskiVector(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2),
                         rng.uniform(-2, 2));
  return pt;
}

// random constraint-tangent vector, unit-normalized
sy::TangentW random_tangent(const sy::GroupPoint& pt, RandomStream& rng) {
  Vector4c dz;
  for (int a = 0; a < 4; ++a) dz(a) = rng.cgaussian();
  dz = sy::project_tangent(pt, dz);
  MinkowskiVector dR(rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian());
  const double nrm = std::sqrt(dz.squaredNorm() + dR.squaredNorm());
  return sy::TangentW{dz / nrm, dR / nrm};
}

sy::GroupPoint displace(const sy::GroupPoint& pt, const sy::TangentW& t, double h) {
  sy::GroupPoint out;
  out.zeta.zeta = DiracSpinor::from4(pt.zeta.zeta.to4() + h * t.dzeta);
  out.R = pt.R + h * t.dR;
  return out;
}

sy::GroupPoint displace_projected(const sy::GroupPoint& pt, const sy::TangentW& t,
                                  double h) {
  sy::GroupPoint out = displace(pt, t, h);
  out.zeta = sp::sigma_project(out.zeta.zeta.zp, out.zeta.zeta.zs);
  return out;
}

// FD exterior derivative of varpi with constant ambient extensions.
double fd_sigma(const sy::GroupPoint& pt, const sy::TangentW& t1,
                const sy::TangentW& t2, const ModelParams& mp, double h) {
  const auto d = [&](const sy::TangentW& along, const sy::TangentW& arg) {
    return (sy::varpi_eval_unchecked(displace(pt, along, h), arg, mp) -
            sy::varpi_eval_unchecked(displace(pt, along, -h), arg, mp)) /
           (2.0 * h);
  };
  return d(t1, t2) - d(t2, t1);
}

// FD exterior derivative of alpha on the flat Y coordinates.
double fd_dalpha(const pq::PrequantumPoint& y, const pq::TangentY& t1,
                 const pq::TangentY& t2, const ModelParams& mp, double h) {
  const auto shift = [&](const pq::TangentY& along, double s) {
    return pq::PrequantumPoint{y.Zp + s * along.dZp, y.x + s * along.dx};
  };
  const auto d = [&](const pq::TangentY& along, const pq::TangentY& arg) {
    return (pq::alpha_eval(shift(along, h), arg, mp) -
            pq::alpha_eval(shift(along, -h), arg, mp)) /
           (2.0 * h);
  };
  return d(t1, t2) - d(t2, t1);
}

sy::TangentX dpi_WX_fd(const sy::GroupPoint& pt, const sy::TangentW& t,
                       const ModelParams& mp, double h) {
  const sy::MotionPoint mplus = sy::project_WX(displace_projected(pt, t, h), mp);
  const sy::MotionPoint mminus = sy::project_WX(displace_projected(pt, t, -h), mp);
  return sy::TangentX{(mplus.p - mminus.p) / (2.0 * h), (mplus.x - mminus.x) / (2.0 * h)};
}

pq::TangentY dpi_WY_fd(const sy::GroupPoint& pt, const sy::TangentW& t,
                       const ModelParams& mp, double h) {
  const pq::PrequantumPoint yp = pq::project_WY(displace_projected(pt, t, h), mp);
  const pq::PrequantumPoint ym = pq::project_WY(displace_projected(pt, t, -h), mp);
  return pq::TangentY{(yp.Zp - ym.Zp) / (2.0 * h), (yp.x - ym.x) / (2.0 * h)};
}

pq::TangentY random_tangent_y(RandomStream& rng) {
  pq::TangentY t;
  t.dZp = rng.gaussian2c();
  t.dx = Vector3d(rng.gaussian(), rng.gaussian(), rng.gaussian());
  const double n = std::sqrt(t.dZp.squaredNorm() + t.dx.squaredNorm());
  t.dZp /= n;
  t.dx /= n;
  return t;
}

pq::PrequantumPoint random_prequantum_point(RandomStream& rng) {
  Vector2c zp = rng.gaussian2c();
  const double e = rng.uniform(0.5, 2.5);
  zp *= std::sqrt(kSqrt2 * e) / zp.norm();
  return pq::PrequantumPoint{
      zp, Vector3d(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5))};
}

LorentzMatrix rotation_oracle(int axis, double theta) {
  // independent construction: right-handed rotation about `axis` by theta
  LorentzMatrix L = LorentzMatrix::Identity();
  const int a = axis % 3, b = (axis + 1) % 3;  // axes after `axis-1`
  L(a, a) = std::cos(theta);
  L(b, b) = std::cos(theta);
  L(a, b) = -std::sin(theta);
  L(b, a) = std::sin(theta);
  return L;
}

LorentzMatrix boost_oracle(int axis, double eta) {
  LorentzMatrix L = LorentzMatrix::Identity();
  const int a = axis - 1;
  L(a, a) = std::cosh(eta);
  L(3, 3) = std::cosh(eta);
  L(a, 3) = std::sinh(eta);
  L(3, a) = std::sinh(eta);
  return L;
}

ModelParams params_of(const CheckContext& ctx) { return ctx.cfg->params; }

po::Amplitude default_bump() { return po::make_profile("bump", {{"a", 1.0}, {"b", 2.0}}); }

std::vector<MinkowskiVector> random_probes(RandomStream& rng, int count, double radius) {
  std::vector<MinkowskiVector> probes;
  probes.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    probes.push_back(MinkowskiVector(rng.uniform(-radius, radius),
                                     rng.uniform(-radius, radius),
                                     rng.uniform(-radius, radius),
                                     rng.uniform(-radius, radius)));
  return probes;
}

// ---------------------------------------------------------------------------
// clifford suite

double check_clifford_identities(CheckContext& ctx) {
  ctx.samples_run = 1;
  return cl::verify_clifford().worst();
}

double check_gamma_values(CheckContext& ctx) {
  ctx.samples_run = 1;
  double err = 0.0;
  Matrix4c g4 = Matrix4c::Zero();
  g4.block<2, 2>(0, 2) = Matrix2c::Identity();
  g4.block<2, 2>(2, 0) = Matrix2c::Identity();
  err = std::max(err, (cl::gamma(4) - g4).cwiseAbs().maxCoeff());
  Matrix4c g5 = Matrix4c::Zero();
  g5.diagonal() << -kI, -kI, kI, kI;
  err = std::max(err, (cl::gamma(5) - g5).cwiseAbs().maxCoeff());
  err = std::max(err, (cl::gamma(1) * cl::gamma(1) + Matrix4c::Identity())
                          .cwiseAbs()
                          .maxCoeff());
  // gamma(v) for v = e3 + e4
  const Matrix4c gv = cl::gamma_vec(make_minkowski(0, 0, 1, 1));
  err = std::max(err, (gv - (cl::gamma(3) + cl::gamma(4))).cwiseAbs().maxCoeff());
  err = std::max(err,
                 cl::gamma_vec(MinkowskiVector::Zero()).cwiseAbs().maxCoeff());
  return err;
}

double check_projectors(CheckContext& ctx) {
  ctx.samples_run = 1;
  const Matrix4c& pi = cl::projector_pi(+1);
  const Matrix4c& pibar = cl::projector_pi(-1);
  double err = (pi + pibar - Matrix4c::Identity()).cwiseAbs().maxCoeff();
  err = std::max(err, (pi * pi - pi).cwiseAbs().maxCoeff());
  err = std::max(err, (pibar * pibar - pibar).cwiseAbs().maxCoeff());
  err = std::max(err, (pi * pibar).cwiseAbs().maxCoeff());
  err = std::max(err, (pi * cl::gamma(4) - cl::gamma(4) * pibar).cwiseAbs().maxCoeff());
  Matrix4c diag = Matrix4c::Zero();
  diag(0, 0) = diag(1, 1) = 1.0;
  err = std::max(err, (pi - diag).cwiseAbs().maxCoeff());
  return err;
}

double check_bar_symmetry(CheckContext& ctx) {
  double err = 0.0;
  for (int s = 0; s < ctx.samples; ++s) {
    const DiracSpinor z{ctx.rng.gaussian2c(), ctx.rng.gaussian2c()};
    const DiracSpinor w{ctx.rng.gaussian2c(), ctx.rng.gaussian2c()};
    err = std::max(err, std::abs(cl::bar_dot(z, w) - std::conj(cl::bar_dot(w, z))));
    // split form of the pairing
    const cdouble split = 0.5 * (z.zs.dot(w.zp) + z.zp.dot(w.zs));
    err = std::max(err, std::abs(cl::bar_dot(z, w) - split));
    // bar(gamma_mu) = gamma_mu transfers to vectors: bar(z) gamma w = conj(bar(w) gamma z)
    const Vector4c z4 = z.to4(), w4 = w.to4();
    for (int mu = 1; mu <= 4; ++mu) {
      const cdouble a = cl::bar_dot(z4, Vector4c(cl::gamma(mu) * w4));
      const cdouble b = cl::bar_dot(w4, Vector4c(cl::gamma(mu) * z4));
      err = std::max(err, std::abs(a - std::conj(b)));
    }
  }
  return err;
}

double check_quaternionic(CheckContext& ctx) {
  double err = 0.0;
  // frozen value: H((1,0),(1,0)) = ((0,1),(0,1)) with J = -i sigma_2
  const DiracSpinor e{Vector2c(1, 0), Vector2c(1, 0)};
  const DiracSpinor he = cl::quaternionic_H(e);
  err = std::max(err, (he.zp - Vector2c(0, 1)).norm());
  err = std::max(err, (he.zs - Vector2c(0, 1)).norm());
  for (int s = 0; s < ctx.samples; ++s) {
    const DiracSpinor z{ctx.rng.gaussian2c(), ctx.rng.gaussian2c()};
    const Vector4c z4 = z.to4();
    const Vector4c hh = cl::quaternionic_H(cl::quaternionic_H(z4));
    err = std::max(err, (hh + z4).norm());
    // antilinearity
    const Vector4c hi = cl::quaternionic_H(Vector4c(kI * z4));
    err = std::max(err, (hi + kI * cl::quaternionic_H(z4)).norm());
    // H swaps the chirality projectors
    const Vector4c lhs = cl::projector_pi(+1) * cl::quaternionic_H(z4);
    const Vector4c rhs = cl::quaternionic_H(Vector4c(cl::projector_pi(-1) * z4));
    err = std::max(err, (lhs - rhs).norm());
  }
  return err;
}

// ---------------------------------------------------------------------------
// sigma suite

double check_sigma_constraints(CheckContext& ctx) {
  double err = 0.0;
  for (int s = 0; s < ctx.samples; ++s) {
    const sp::SigmaPoint z = sp::sample_sigma(ctx.rng);
    err = std::max(err, sp::sigma_residual(z.zeta));
  }
  // frozen projection examples
  const sp::SigmaPoint a = sp::sigma_project(Vector2c(1, 0), Vector2c(2, 0));
  err = std::max(err, (a.zeta.zs - Vector2c(1, 0)).norm());
  bool threw = false;
  try {
    sp::sigma_project(Vector2c(1, 0), Vector2c(0, 1));
  } catch (const DegenerateSpinor&) {
    threw = true;
  }
  if (!threw) err = std::max(err, 1.0);
  return err;
}

double check_constraint_equivalence(CheckContext& ctx) {
  double err = 0.0;
  for (int s = 0; s < ctx.samples; ++s) {
    DiracSpinor z{ctx.rng.gaussian2c(), ctx.rng.gaussian2c()};
    const cdouble ip = z.zp.dot(z.zs);
    const double split = std::abs(ip - 1.0);
    const double unit = std::abs(cl::bar_dot(z, z) - 1.0);
    const Vector4c z4 = z.to4();
    const double chi5 = std::abs(cl::bar_dot(z4, Vector4c(cl::gamma(5) * z4)));
    // bar zeta zeta - 1 = Re(ip) - 1 and bar zeta gamma5 zeta = -Im(ip), so
    // max(|.|,|.|) <= |ip - 1| <= sqrt(2) max(|.|,|.|)
    const double m = std::max(unit, chi5);
    err = std::max(err, relu(m - split));
    err = std::max(err, relu(split - kSqrt2 * m) );
  }
  return err;
}

double check_sample_determinism(CheckContext& ctx) {
  double err = 0.0;
  RandomStream r1(42), r2(42);
  for (int s = 0; s < 16; ++s) {
    const sp::SigmaPoint a = sp::sample_sigma(r1);
    const sp::SigmaPoint b = sp::sample_sigma(r2);
    err = std::max(err, (a.zeta.to4() - b.zeta.to4()).norm());
    err = std::max(err, relu(-(a.zeta.zp.squaredNorm() / kSqrt2)));  // E > 0
  }
  ctx.samples_run = 16;
  return err;
}

double check_momentum_null_future(CheckContext& ctx) {
  double err = 0.0;
  for (int s = 0; s < ctx.samples; ++s) {
    const sp::SigmaPoint z = sp::sample_sigma(ctx.rng);
    const MinkowskiVector P = sp::momentum_P(z);
    err = std::max(err, std::abs(minkowski_dot(P, P)));
    err = std::max(err, relu(-P[3]));
    const auto [p, e] = sp::momentum_3(z.zeta.zp);
    err = std::max(err, std::abs(P[3] - e));
    err = std::max(err, (spatial(P) - p).norm());
    err = std::max(err, std::abs(p.norm() - e));
  }
  // frozen: zp = (2^{1/4}, 0) gives P = (0,0,1,1)
  const double c = std::pow(2.0, 0.25);
  const sp::SigmaPoint z0 = sp::sigma_project(Vector2c(c, 0), Vector2c(c, 0));
  err = std::max(err, (sp::momentum_P(z0) - make_minkowski(0, 0, 1, 1)).norm());
  return err;
}

double check_q_null_pq(CheckContext& ctx) {
  double err = 0.0;
  for (int s = 0; s < ctx.samples; ++s) {
    const sp::SigmaPoint z = sp::sample_sigma(ctx.rng);
    const MinkowskiVector P = sp::momentum_P(z);
    const MinkowskiVector Q = sp::momentum_Q(z);
    err = std::max(err, std::abs(minkowski_dot(Q, Q)));
    err = std::max(err, std::abs(minkowski_dot(P, Q) + 1.0));
  }
  return err;
}

double check_phase_invariance(CheckContext& ctx) {
  double err = 0.0;
  for (int s = 0; s < ctx.samples; ++s) {
    const sp::SigmaPoint z = sp::sample_sigma(ctx.rng);
    const double theta = ctx.rng.uniform(0.0, 6.283185307179586);
    const cdouble f = std::exp(kI * theta);
    sp::SigmaPoint zr;
    zr.zeta.zp = f * z.zeta.zp;
    zr.zeta.zs = f * z.zeta.zs;
    err = std::max(err, (sp::momentum_P(zr) - sp::momentum_P(z)).norm());
    err = std::max(err, (sp::momentum_Q(zr) - sp::momentum_Q(z)).norm());
  }
  return err;
}

double check_halfspinor_projector(CheckContext& ctx) {
  double err = 0.0;
  for (int s = 0; s < ctx.samples; ++s) {
    const sp::SigmaPoint z = sp::sample_sigma(ctx.rng);
    const Vector2c xi = z.zeta.zp / z.zeta.zp.norm();
    const auto [p, e] = sp::momentum_3(z.zeta.zp);
    const Vector3d u = p / e;
    const Matrix2c lhs = cl::pauli_vec(u);
    const Matrix2c rhs = 2.0 * (xi * xi.adjoint()) - Matrix2c::Identity();
    err = std::max(err, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  return err;
}

double check_momentum3_values(CheckContext& ctx) {
  ctx.samples_run = 2;
  double err = 0.0;
  const double c = std::pow(2.0, 0.25);
  {
    const auto [p, e] = sp::momentum_3(Vector2c(c, 0));
    err = std::max(err, (p - Vector3d(0, 0, 1)).norm());
    err = std::max(err, std::abs(e - 1.0));
  }
  {
    const Vector2c zp = (c / std::sqrt(2.0)) * Vector2c(1, 1);
    const auto [p, e] = sp::momentum_3(zp);
    err = std::max(err, (p - Vector3d(1, 0, 0)).norm());
    err = std::max(err, std::abs(e - 1.0));
  }
  return err;
}

double check_momentum_equivariance(CheckContext& ctx) {
  double err = 0.0;
  for (int s = 0; s < ctx.samples; ++s) {
    const sp::SigmaPoint z = sp::sample_sigma(ctx.rng);
    const sp::SpinElement A = sp::zeta_to_spin(sp::sample_sigma(ctx.rng));
    const LorentzMatrix L = sp::rho(A);
    sp::SigmaPoint az;
    az.zeta = DiracSpinor::from4(A.A * z.zeta.to4());
    err = std::max(err, (sp::momentum_P(az) - L * sp::momentum_P(z)).norm());
  }
  return err;
}

// ---------------------------------------------------------------------------
// covering suite

double check_lorentz_membership(CheckContext& ctx) {
  double err = 0.0;
  for (int s = 0; s < ctx.samples; ++s) {
    const sp::SpinElement A = sp::zeta_to_spin(sp::sample_sigma(ctx.rng));
    const LorentzMatrix L = sp::rho(A);
    err = std::max(err, sp::lorentz_residual(L));
    // defining relation A gamma(v) A^{-1} = gamma(L v)
    const MinkowskiVector v(ctx.rng.gaussian(), ctx.rng.gaussian(),
                            ctx.rng.gaussian(), ctx.rng.gaussian());
    const Matrix4c lhs = A.A * cl::gamma_vec(v) * sp::spin_inverse(A.A);
    err = std::max(err, (lhs - cl::gamma_vec(L * v)).cwiseAbs().maxCoeff());
  }
  return err;
}

double check_homomorphism(CheckContext& ctx) {
  double err = 0.0;
  for (int s = 0; s < ctx.samples; ++s) {
    const sp::SpinElement A = sp::zeta_to_spin(sp::sample_sigma(ctx.rng));
    const sp::SpinElement B = sp::zeta_to_spin(sp::sample_sigma(ctx.rng));
    const sp::SpinElement AB{A.A * B.A};
    err = std::max(err, (sp::rho(AB) - sp::rho(A) * sp::rho(B)).cwiseAbs().maxCoeff());
  }
  return err;
}

double check_kernel_z2(CheckContext& ctx) {
  double err = 0.0;
  for (int s = 0; s < ctx.samples; ++s) {
    const sp::SpinElement A = sp::zeta_to_spin(sp::sample_sigma(ctx.rng));
    const sp::SpinElement mA{-A.A};
    err = std::max(err, (sp::rho(mA) - sp::rho(A)).cwiseAbs().maxCoeff());
  }
  err = std::max(err, (sp::rho(sp::SpinElement{Matrix4c::Identity()}) -
                       LorentzMatrix::Identity())
                          .cwiseAbs()
                          .maxCoeff());
  return err;
}

double check_sl2_rotation(CheckContext& ctx) {
  double err = 0.0;
  ctx.samples_run = 3 * 8;
  for (int axis = 1; axis <= 3; ++axis)
    for (int k = 0; k < 8; ++k) {
      const double theta = (k + 1) * 0.5;
      const Matrix2c a = std::cos(0.5 * theta) * Matrix2c::Identity() -
                         kI * std::sin(0.5 * theta) * cl::pauli(axis);
      const LorentzMatrix L = sp::rho(sp::embed_sl2(a));
      err = std::max(err, (L - rotation_oracle(axis, theta)).cwiseAbs().maxCoeff());
    }
  return err;
}

double check_sl2_boost(CheckContext& ctx) {
  double err = 0.0;
  ctx.samples_run = 3 * 8;
  for (int axis = 1; axis <= 3; ++axis)
    for (int k = 0; k < 8; ++k) {
      const double eta = 0.7 * (k - 3.5) / 3.5;
      const Matrix2c a = std::cosh(0.5 * eta) * Matrix2c::Identity() +
                         std::sinh(0.5 * eta) * cl::pauli(axis);
      const LorentzMatrix L = sp::rho(sp::embed_sl2(a));
      err = std::max(err, (L - boost_oracle(axis, eta)).cwiseAbs().maxCoeff());
    }
  return err;
}

double check_roundtrip(CheckContext& ctx) {
  double err = 0.0;
  // A = I maps to zp = zs = (1,0); zeta_to_spin of it gives back I
  const sp::SigmaPoint zid = sp::spin_to_zeta(sp::SpinElement{Matrix4c::Identity()});
  err = std::max(err, (zid.zeta.zp - Vector2c(1, 0)).norm());
  err = std::max(err, (zid.zeta.zs - Vector2c(1, 0)).norm());
  err = std::max(err,
                 (sp::zeta_to_spin(zid).A - Matrix4c::Identity()).cwiseAbs().maxCoeff());
  for (int s = 0; s < ctx.samples; ++s) {
    const sp::SigmaPoint z = sp::sample_sigma(ctx.rng);
    const sp::SigmaPoint back = sp::spin_to_zeta(sp::zeta_to_spin(z));
    err = std::max(err, (back.zeta.to4() - z.zeta.to4()).norm());
    // and through a random SL(2,C) element
    Matrix2c a;
    a << ctx.rng.cgaussian(), ctx.rng.cgaussian(), ctx.rng.cgaussian(), ctx.rng.cgaussian();
    a /= std::sqrt(a.determinant());
    const sp::SpinElement A = sp::embed_sl2(a);
    const sp::SpinElement A2 = sp::zeta_to_spin(sp::spin_to_zeta(A));
    err = std::max(err, (A2.A - A.A).cwiseAbs().maxCoeff());
  }
  return err;
}

double check_spin_invariants(CheckContext& ctx) {
  double err = 0.0;
  for (int s = 0; s < ctx.samples; ++s) {
    const sp::SpinElement A = sp::zeta_to_spin(sp::sample_sigma(ctx.rng));
    err = std::max(err, sp::spin_element_residual(A.A));
    // the action preserves Sigma^6
    const sp::SigmaPoint z = sp::sample_sigma(ctx.rng);
    err = std::max(err, sp::sigma_residual(
                            DiracSpinor::from4(A.A * z.zeta.to4())));
  }
  return err;
}

// ---------------------------------------------------------------------------
// presymplectic suite

double check_varpi_values(CheckContext& ctx) {
  ctx.samples_run = 3;
  const ModelParams mp = params_of(ctx);
  double err = 0.0;
  const double c = std::pow(2.0, 0.25);
  sy::GroupPoint pt;
  pt.zeta = sp::sigma_project(Vector2c(c, 0), Vector2c(c, 0));  // P = (0,0,1,1)
  pt.R = MinkowskiVector::Zero();
  // time displacement: varpi = -P.dR = -1
  sy::TangentW t1{Vector4c::Zero(), make_minkowski(0, 0, 0, 1)};
  err = std::max(err, std::abs(sy::varpi_eval(pt, t1, mp) + 1.0));
  // phase direction: varpi = chi hbar
  sy::TangentW t2{kI * pt.zeta.zeta.to4(), MinkowskiVector::Zero()};
  err = std::max(err, std::abs(sy::varpi_eval(pt, t2, mp) - mp.chi * mp.hbar));
  // zero tangent
  sy::TangentW t0{Vector4c::Zero(), MinkowskiVector::Zero()};
  err = std::max(err, std::abs(sy::varpi_eval(pt, t0, mp)));
  return err;
}

double check_kernel_annihilates(CheckContext& ctx) {
  const ModelParams mp = params_of(ctx);
  double err = 0.0;
  const int pts = std::max(1, ctx.samples / 50);
  for (int s = 0; s < pts; ++s) {
    const sy::GroupPoint pt = random_group_point(ctx.rng);
    const auto kernel = sy::kernel_basis(pt, mp);
    for (const auto& kv : kernel) {
      for (int k = 0; k < 50; ++k) {
        const sy::TangentW t = random_tangent(pt, ctx.rng);
        err = std::max(err, std::abs(sy::sigma_eval(pt, kv, t, mp)));
      }
    }
  }
  return err;
}

double check_kernel_fd_oracle(CheckContext& ctx) {
  const ModelParams mp = params_of(ctx);
  double err = 0.0;
  const int pts = std::max(1, ctx.samples / 10);
  for (int s = 0; s < pts; ++s) {
    const sy::GroupPoint pt = random_group_point(ctx.rng);
    const auto kernel = sy::kernel_basis(pt, mp);
    for (const auto& kv : kernel)
      for (int k = 0; k < 10; ++k) {
        const sy::TangentW t = random_tangent(pt, ctx.rng);
        err = std::max(err, std::abs(fd_sigma(pt, kv, t, mp, 1e-5)));
      }
  }
  return err;
}

double check_sigma_fd_oracle(CheckContext& ctx) {
  const ModelParams mp = params_of(ctx);
  double err = 0.0;
  for (int s = 0; s < ctx.samples; ++s) {
    const sy::GroupPoint pt = random_group_point(ctx.rng);
    const sy::TangentW t1 = random_tangent(pt, ctx.rng);
    const sy::TangentW t2 = random_tangent(pt, ctx.rng);
    const double explicit_val = sy::sigma_eval(pt, t1, t2, mp);
    err = std::max(err, std::abs(explicit_val - fd_sigma(pt, t1, t2, mp, 1e-5)));
    err = std::max(err, std::abs(sy::sigma_eval(pt, t1, t1, mp)));
    err = std::max(err,
                   std::abs(explicit_val + sy::sigma_eval(pt, t2, t1, mp)));
  }
  return err;
}

double check_kernel_momentum_flat(CheckContext& ctx) {
  const ModelParams mp = params_of(ctx);
  double err = 0.0;
  for (int s = 0; s < ctx.samples; ++s) {
    const sy::GroupPoint pt = random_group_point(ctx.rng);
    const auto kernel = sy::kernel_basis(pt, mp);
    for (const auto& kv : kernel)
      err = std::max(err, sp::momentum_P_derivative(pt.zeta, kv.dzeta).norm());
    // finite kernel flow keeps P (and zeta') fixed
    const auto perp = sy::pperp_basis(pt.zeta);
    const sy::GroupPoint moved = sy::flow_kernel(pt, perp[1], 0.37, mp);
    err = std::max(err, (sp::momentum_P(moved.zeta) - sp::momentum_P(pt.zeta)).norm());
    err = std::max(err, (moved.zeta.zeta.zp - pt.zeta.zeta.zp).norm());
  }
  return err;
}

double check_rank_nullity(CheckContext& ctx) {
  const ModelParams mp = params_of(ctx);
  double err = 0.0;
  for (int s = 0; s < ctx.samples; ++s) {
    const sy::GroupPoint pt = random_group_point(ctx.rng);
    const auto basis = sy::tangent_basis(pt);
    Eigen::Matrix<double, 10, 10> S;
    for (int i = 0; i < 10; ++i)
      for (int j = 0; j < 10; ++j)
        S(i, j) = sy::sigma_eval_unchecked(pt, basis[static_cast<std::size_t>(i)],
                                           basis[static_cast<std::size_t>(j)], mp);
    const Eigen::JacobiSVD<Eigen::Matrix<double, 10, 10>> svd(S);
    int rank = 0;
    for (int k = 0; k < 10; ++k)
      if (svd.singularValues()(k) > 1e-9) ++rank;
    err = std::max(err, std::abs(static_cast<double>(rank - 6)));
  }
  return err;
}

double check_pullback_omega(CheckContext& ctx) {
  const ModelParams mp = params_of(ctx);
  double err = 0.0;
  for (int s = 0; s < ctx.samples; ++s) {
    const sy::GroupPoint pt = random_group_point(ctx.rng);
    const sy::TangentW t1 = random_tangent(pt, ctx.rng);
    const sy::TangentW t2 = random_tangent(pt, ctx.rng);
    const sy::MotionPoint m = sy::project_WX(pt, mp);
    const sy::TangentX u1 = dpi_WX_fd(pt, t1, mp, 1e-5);
    const sy::TangentX u2 = dpi_WX_fd(pt, t2, mp, 1e-5);
    err = std::max(err, std::abs(sy::sigma_eval(pt, t1, t2, mp) -
                                 sy::omega_eval(m, u1, u2, mp)));
  }
  return err;
}

double check_varpi_kernel_values(CheckContext& ctx) {
  const ModelParams mp = params_of(ctx);
  double err = 0.0;
  for (int s = 0; s < ctx.samples; ++s) {
    const sy::GroupPoint pt = random_group_point(ctx.rng);
    const auto kernel = sy::kernel_basis(pt, mp);
    for (int k = 0; k < 3; ++k)
      err = std::max(err, std::abs(sy::varpi_eval(pt, kernel[static_cast<std::size_t>(k)], mp)));
    err = std::max(err,
                   std::abs(sy::varpi_eval(pt, kernel[3], mp) - mp.chi * mp.hbar));
  }
  return err;
}

double check_omega_closed(CheckContext& ctx) {
  const ModelParams mp = params_of(ctx);
  double err = 0.0;
  const double h = 1e-5;
  for (int s = 0; s < ctx.samples; ++s) {
    sy::MotionPoint m;
    m.p = ctx.rng.uniform(0.4, 2.5) * ctx.rng.unit3();
    m.x = Vector3d(ctx.rng.gaussian(), ctx.rng.gaussian(), ctx.rng.gaussian());
    sy::TangentX t[3];
    for (auto& tt : t) {
      tt.dp = Vector3d(ctx.rng.gaussian(), ctx.rng.gaussian(), ctx.rng.gaussian());
      tt.dx = Vector3d(ctx.rng.gaussian(), ctx.rng.gaussian(), ctx.rng.gaussian());
      const double nn = std::sqrt(tt.dp.squaredNorm() + tt.dx.squaredNorm());
      tt.dp /= nn;
      tt.dx /= nn;
    }
    const auto omega_at = [&](const Vector3d& dp_shift, const sy::TangentX& a,
                              const sy::TangentX& b) {
      sy::MotionPoint ms{m.p + dp_shift, m.x};
      return sy::omega_eval(ms, a, b, mp);
    };
    double d = 0.0;
    for (int c = 0; c < 3; ++c) {
      const sy::TangentX& along = t[c];
      const sy::TangentX& a = t[(c + 1) % 3];
      const sy::TangentX& b = t[(c + 2) % 3];
      const double dd =
          (omega_at(h * along.dp, a, b) - omega_at(-h * along.dp, a, b)) / (2.0 * h);
      d += dd;  // cyclic sum; omega has no x-dependence
    }
    err = std::max(err, std::abs(d));
  }
  return err;
}

double check_omega_values(CheckContext& ctx) {
  ctx.samples_run = 3;
  const ModelParams mp = params_of(ctx);
  double err = 0.0;
  sy::MotionPoint m{Vector3d(0, 0, 1), Vector3d::Zero()};
  const sy::TangentX dp1{Vector3d::UnitX(), Vector3d::Zero()};
  const sy::TangentX dx1{Vector3d::Zero(), Vector3d::UnitX()};
  const sy::TangentX dp2{Vector3d::UnitY(), Vector3d::Zero()};
  err = std::max(err, std::abs(sy::omega_eval(m, dp1, dx1, mp) - 1.0));
  // vertical pair
  const sy::TangentX f1{Vector3d::Zero(), Vector3d(0.3, -0.2, 0.9)};
  const sy::TangentX f2{Vector3d::Zero(), Vector3d(-1.1, 0.4, 0.2)};
  err = std::max(err, std::abs(sy::omega_eval(m, f1, f2, mp)));
  // pure-momentum pair picks up the spin term; orientation from d alpha = pi* omega
  err = std::max(err, std::abs(sy::omega_eval(m, dp1, dp2, mp) - mp.spin()));
  return err;
}

double check_project_wx(CheckContext& ctx) {
  const ModelParams mp = params_of(ctx);
  double err = 0.0;
  // a point already on the section projects to x = r
  {
    const sp::SigmaPoint z = sp::sample_sigma(ctx.rng);
    const Vector2c zp = z.zeta.zp;
    sy::GroupPoint pt;
    pt.zeta = sp::sigma_project(zp, zp / zp.squaredNorm());
    pt.R = make_minkowski(0.3, -1.2, 0.8, 0.0);
    const sy::MotionPoint m = sy::project_WX(pt, mp);
    err = std::max(err, (m.x - spatial(pt.R)).norm());
  }
  for (int s = 0; s < ctx.samples; ++s) {
    const sy::GroupPoint pt = random_group_point(ctx.rng);
    const sy::MotionPoint m0 = sy::project_WX(pt, mp);
    const auto [p, e] = sp::momentum_3(pt.zeta.zeta.zp);
    (void)e;
    err = std::max(err, (m0.p - p).norm());
    // invariance along all kernel flows (finite steps)
    const auto perp = sy::pperp_basis(pt.zeta);
    for (const auto& dR : perp) {
      const sy::GroupPoint moved = sy::flow_kernel(pt, dR, 0.23, mp);
      const sy::MotionPoint m1 = sy::project_WX(moved, mp);
      err = std::max(err, (m1.p - m0.p).norm() + (m1.x - m0.x).norm());
    }
    const sy::MotionPoint m2 = sy::project_WX(sy::flow_phase(pt, 0.81), mp);
    err = std::max(err, (m2.p - m0.p).norm() + (m2.x - m0.x).norm());
  }
  return err;
}

// ---------------------------------------------------------------------------
// prequantum suite (each body runs at the configured hbar and at 0.7)

std::array<ModelParams, 2> prequantum_params(const CheckContext& ctx) {
  ModelParams a = ctx.cfg->params;
  ModelParams b = a;
  b.hbar = 0.7;
  return {a, b};
}

double check_z_guise(CheckContext& ctx) {
  double err = 0.0;
  for (const ModelParams& mp : prequantum_params(ctx)) {
    // frozen phases
    {
      const sp::SigmaPoint z = sp::sample_sigma(ctx.rng);
      sy::GroupPoint pt{z, MinkowskiVector::Zero()};
      const DiracSpinor Z = pq::to_Z(pt, mp);
      err = std::max(err, (Z.to4() - z.zeta.to4()).norm());
      // translate along time so that P.R = pi hbar: R = (0,0,0, pi hbar / E)
      const MinkowskiVector P = sp::momentum_P(z);
      pt.R = make_minkowski(0, 0, 0, 3.141592653589793 * mp.hbar / P[3]);
      const DiracSpinor Z2 = pq::to_Z(pt, mp);
      err = std::max(err, (Z2.to4() + z.zeta.to4()).norm());
      for (int a = 0; a < 4; ++a)
        err = std::max(err, std::abs(std::abs(Z2.to4()(a)) -
                                     std::abs(z.zeta.to4()(a))));
    }
    // the one-form in the Z-guise: varpi(t) = R.dP(t) + chi hbar Im(barZ dZ(t))
    for (int s = 0; s < ctx.samples; ++s) {
      const sy::GroupPoint pt = random_group_point(ctx.rng);
      const sy::TangentW t = random_tangent(pt, ctx.rng);
      const double h = 1e-5;
      const Vector4c zp4 = pq::to_Z(displace_projected(pt, t, h), mp).to4();
      const Vector4c zm4 = pq::to_Z(displace_projected(pt, t, -h), mp).to4();
      const Vector4c dZ = (zp4 - zm4) / (2.0 * h);
      const Vector4c Z = pq::to_Z(pt, mp).to4();
      const MinkowskiVector dP = sp::momentum_P_derivative(pt.zeta, t.dzeta);
      const double guise = minkowski_dot(pt.R, dP) +
                           mp.chi * mp.hbar * cl::bar_dot(Z, dZ).imag();
      err = std::max(err, std::abs(guise - sy::varpi_eval(pt, t, mp)));
    }
  }
  return err;
}

double check_zprime_leaf_invariant(CheckContext& ctx) {
  double err = 0.0;
  for (const ModelParams& mp : prequantum_params(ctx)) {
    for (int s = 0; s < ctx.samples; ++s) {
      const sy::GroupPoint pt = random_group_point(ctx.rng);
      const Vector2c z0 = pq::to_Z(pt, mp).zp;
      const auto perp = sy::pperp_basis(pt.zeta);
      for (const auto& dR : perp) {
        // integrate the leaf flow in small projected steps
        sy::GroupPoint cur = pt;
        for (int k = 0; k < 100; ++k) cur = sy::flow_kernel(cur, dR, 1e-4, mp);
        err = std::max(err, (pq::to_Z(cur, mp).zp - z0).norm());
      }
    }
  }
  return err;
}

double check_section_solve(CheckContext& ctx) {
  double err = 0.0;
  for (const ModelParams& mp : prequantum_params(ctx)) {
    for (int s = 0; s < ctx.samples; ++s) {
      const sy::GroupPoint pt = random_group_point(ctx.rng);
      const pq::PrequantumPoint y0 = pq::project_WY(pt, mp);
      // identity on the section: rebuild the group point from (Z', x)
      {
        sy::GroupPoint sec;
        sec.zeta = sp::sigma_project(y0.Zp, y0.Zp / y0.Zp.squaredNorm());
        sec.R = make_minkowski(y0.x[0], y0.x[1], y0.x[2], 0.0);
        // the section phase is chi p.x/hbar; projecting must reproduce (Z', x)
        const pq::PrequantumPoint y1 = pq::project_WY(sec, mp);
        const auto [p, e] = sp::momentum_3(sec.zeta.zeta.zp);
        (void)e;
        const cdouble phase = std::exp(kI * (mp.chi * p.dot(y0.x) / mp.hbar));
        err = std::max(err, (y1.Zp - phase * y0.Zp).norm());
        err = std::max(err, (y1.x - y0.x).norm());
      }
      // leaf invariance
      const auto perp = sy::pperp_basis(pt.zeta);
      for (const auto& dR : perp) {
        const sy::GroupPoint moved = sy::flow_kernel(pt, dR, 0.31, mp);
        const pq::PrequantumPoint y1 = pq::project_WY(moved, mp);
        err = std::max(err, (y1.Zp - y0.Zp).norm() + (y1.x - y0.x).norm());
      }
      // phase flow multiplies Z' by the same phase, x unchanged
      const double theta = ctx.rng.uniform(0.0, 6.283185307179586);
      const pq::PrequantumPoint y2 = pq::project_WY(sy::flow_phase(pt, theta), mp);
      err = std::max(err, (y2.Zp - std::exp(kI * theta) * y0.Zp).norm());
      err = std::max(err, (y2.x - y0.x).norm());
    }
  }
  return err;
}

double check_p_of_z(CheckContext& ctx) {
  double err = 0.0;
  const double c = std::pow(2.0, 0.25);
  err = std::max(err, (pq::p_of_Z(Vector2c(c, 0)) - Vector3d(0, 0, 1)).norm());
  for (const ModelParams& mp : prequantum_params(ctx)) {
    for (int s = 0; s < ctx.samples; ++s) {
      const sy::GroupPoint pt = random_group_point(ctx.rng);
      const pq::PrequantumPoint y = pq::project_WY(pt, mp);
      const auto [p, e] = sp::momentum_3(pt.zeta.zeta.zp);
      (void)e;
      err = std::max(err, (pq::p_of_Z(y.Zp) - p).norm());
      const cdouble f = std::exp(kI * ctx.rng.uniform(0.0, 6.28));
      err = std::max(err, (pq::p_of_Z(Vector2c(f * y.Zp)) - pq::p_of_Z(y.Zp)).norm());
    }
  }
  return err;
}

double check_connection(CheckContext& ctx) {
  double err = 0.0;
  for (const ModelParams& mp : prequantum_params(ctx)) {
    for (int s = 0; s < ctx.samples; ++s) {
      const pq::PrequantumPoint y = random_prequantum_point(ctx.rng);
      err = std::max(err, std::abs(pq::alpha_eval(y, pq::fundamental_field(y, mp), mp) -
                                   mp.hbar));
      pq::TangentY tdx{Vector2c::Zero(),
                       Vector3d(ctx.rng.gaussian(), ctx.rng.gaussian(), ctx.rng.gaussian())};
      err = std::max(err, std::abs(pq::alpha_eval(y, tdx, mp)));
      // invariance of alpha under the structure flow
      const pq::TangentY t = random_tangent_y(ctx.rng);
      const double theta = ctx.rng.uniform(0.0, 6.283185307179586);
      const pq::PrequantumPoint yr = pq::u1_action(theta, y, mp);
      const cdouble f = std::exp(kI * static_cast<double>(mp.chi) * theta);
      const pq::TangentY tr{f * t.dZp, t.dx};  // pushforward of t along the flow
      err = std::max(err, std::abs(pq::alpha_eval(yr, tr, mp) - pq::alpha_eval(y, t, mp)));
    }
  }
  return err;
}

double check_curvature(CheckContext& ctx) {
  double err = 0.0;
  for (const ModelParams& mp : prequantum_params(ctx)) {
    for (int s = 0; s < ctx.samples; ++s) {
      const pq::PrequantumPoint y = random_prequantum_point(ctx.rng);
      const pq::TangentY t1 = random_tangent_y(ctx.rng);
      const pq::TangentY t2 = random_tangent_y(ctx.rng);
      const double lhs = fd_dalpha(y, t1, t2, mp, 1e-5);
      const double rhs = sy::omega_eval(pq::project_YX(y), pq::dpi_YX(y, t1),
                                        pq::dpi_YX(y, t2), mp);
      err = std::max(err, std::abs(lhs - rhs));
    }
  }
  return err;
}

double check_reduction(CheckContext& ctx) {
  double err = 0.0;
  for (const ModelParams& mp : prequantum_params(ctx)) {
    for (int s = 0; s < ctx.samples; ++s) {
      const sy::GroupPoint pt = random_group_point(ctx.rng);
      const sy::TangentW t = random_tangent(pt, ctx.rng);
      const pq::TangentY dy = dpi_WY_fd(pt, t, mp, 1e-5);
      const pq::PrequantumPoint y = pq::project_WY(pt, mp);
      err = std::max(err,
                     std::abs(sy::varpi_eval(pt, t, mp) - pq::alpha_eval(y, dy, mp)));
    }
  }
  return err;
}

double check_u1_action(CheckContext& ctx) {
  double err = 0.0;
  for (const ModelParams& mp : prequantum_params(ctx)) {
    for (int s = 0; s < ctx.samples; ++s) {
      const pq::PrequantumPoint y = random_prequantum_point(ctx.rng);
      const pq::PrequantumPoint y0 = pq::u1_action(0.0, y, mp);
      err = std::max(err, (y0.Zp - y.Zp).norm() + (y0.x - y.x).norm());
      const pq::PrequantumPoint y2pi = pq::u1_action(6.283185307179586476925286766559, y, mp);
      err = std::max(err, (y2pi.Zp - y.Zp).norm());
      // derivative at theta = 0 equals the fundamental field
      const double h = 1e-6;
      const Vector2c d =
          (pq::u1_action(h, y, mp).Zp - pq::u1_action(-h, y, mp).Zp) / (2.0 * h);
      err = std::max(err, (d - pq::fundamental_field(y, mp).dZp).norm());
      // p invariant along the flow
      const pq::PrequantumPoint yr = pq::u1_action(1.1, y, mp);
      err = std::max(err, (pq::p_of_Z(yr.Zp) - pq::p_of_Z(y.Zp)).norm());
      err = std::max(err, std::abs(pq::alpha_eval(yr, pq::fundamental_field(yr, mp), mp) -
                                   mp.hbar));
    }
  }
  return err;
}

double check_diagram(CheckContext& ctx) {
  double err = 0.0;
  for (const ModelParams& mp : prequantum_params(ctx)) {
    for (int s = 0; s < ctx.samples; ++s) {
      const sy::GroupPoint pt = random_group_point(ctx.rng);
      const sy::MotionPoint direct = sy::project_WX(pt, mp);
      const sy::MotionPoint via = pq::project_YX(pq::project_WY(pt, mp));
      err = std::max(err, (direct.p - via.p).norm() + (direct.x - via.x).norm());
    }
  }
  return err;
}

// ---------------------------------------------------------------------------
// polarization suite

double check_polarizer_values(CheckContext& ctx) {
  ctx.samples_run = 3;
  double err = 0.0;
  sy::MotionPoint m{Vector3d(0, 0, 1), Vector3d::Zero()};
  const sy::TangentX e1{Vector3d::UnitX(), Vector3d(0.4, 0, 0)};
  const sy::TangentX e2{Vector3d::UnitY(), Vector3d(0, -2, 0)};
  const sy::TangentX e3{Vector3d::UnitZ(), Vector3d(1, 1, 1)};
  err = std::max(err, std::abs(po::phi_eval(m, e1, e2, e3) - 1.0));
  err = std::max(err, std::abs(po::phi_eval(m, e1, e2, e1)));  // repeated tangent
  sy::MotionPoint m2{Vector3d(0, 0, 2), Vector3d::Zero()};
  err = std::max(err, std::abs(po::phi_eval(m2, e1, e2, e3) - 0.5));
  return err;
}

double check_polarization_geometry(CheckContext& ctx) {
  const po::PolarizationGeometryReport rep =
      po::verify_polarization(params_of(ctx), ctx.rng, ctx.samples);
  double err = std::max(rep.wedge_omega_phi, rep.kernel_dp_leak);
  err = std::max(err, relu(0.1 - rep.kernel_gap));
  return err;
}

double check_isotropy(CheckContext& ctx) {
  const po::PolarizationGeometryReport rep =
      po::verify_polarization(params_of(ctx), ctx.rng, ctx.samples);
  return rep.isotropy;
}

double check_nullspace(CheckContext& ctx) {
  double err = 0.0;
  for (int s = 0; s < ctx.samples; ++s) {
    const double e = ctx.rng.uniform(0.3, 3.0);
    const Vector3d u = ctx.rng.unit3();
    MinkowskiVector P;
    P << e * u[0], e * u[1], e * u[2], e;
    for (int chi : {-1, +1}) {
      const auto [s3, s4] = po::eq20_smallest_singular_values(P, chi);
      err = std::max(err, s4);
      err = std::max(err, relu(0.3 - s3));
      const Vector4c b = po::basis_solution(P, chi);
      err = std::max(err, std::abs(b.norm() - 1.0));
      err = std::max(err, (cl::gamma_vec(P) * b).norm());
      err = std::max(err, (cl::gamma(5) * b - kI * static_cast<double>(chi) * b).norm());
    }
  }
  // frozen examples at P = (0,0,1,1)
  const MinkowskiVector P0 = make_minkowski(0, 0, 1, 1);
  Vector4c bm = po::basis_solution(P0, -1);
  err = std::max(err, (bm - Vector4c(1, 0, 0, 0)).norm());
  Vector4c bp = po::basis_solution(P0, +1);
  err = std::max(err, (bp - Vector4c(0, 0, 0, 1)).norm());
  return err;
}

double check_basis_continuity(CheckContext& ctx) {
  // max discrete directional derivative along great circles that stay away
  // from the singular pole of each helicity chart
  double max_ratio = 0.0;
  const int steps = 200;
  for (int s = 0; s < ctx.samples; ++s) {
    const Vector3d axis = ctx.rng.unit3();
    Vector3d seed = ctx.rng.unit3();
    Vector3d b1 = (seed - seed.dot(axis) * axis);
    if (b1.norm() < 1e-3) continue;
    b1.normalize();
    const Vector3d b2 = axis.cross(b1);
    for (int chi : {-1, +1}) {
      const Vector3d pole = (chi == -1) ? Vector3d(0, 0, -1) : Vector3d(0, 0, 1);
      // skip circles that approach the pole
      double closest = 2.0;
      for (int k = 0; k <= steps; ++k) {
        const double a = 6.283185307179586 * k / steps;
        closest = std::min(closest,
                           (std::cos(a) * b1 + std::sin(a) * b2 - pole).norm());
      }
      if (closest < 0.5) continue;
      Vector4c prev;
      for (int k = 0; k <= steps; ++k) {
        const double a = 6.283185307179586 * k / steps;
        const Vector3d u = std::cos(a) * b1 + std::sin(a) * b2;
        MinkowskiVector P;
        P << 1.3 * u[0], 1.3 * u[1], 1.3 * u[2], 1.3;
        const Vector4c b = po::basis_solution(P, chi);
        if (k > 0)
          max_ratio = std::max(max_ratio, (b - prev).norm() /
                                              (6.283185307179586 / steps));
        prev = b;
      }
    }
  }
  return max_ratio;
}

double check_gamma_block(CheckContext& ctx) {
  double err = 0.0;
  const double c = std::pow(2.0, 0.25);
  err = std::max(err, po::gamma_P_block_residual(Vector2c(c, 0)));
  for (int s = 0; s < ctx.samples; ++s) {
    const Vector2c zp = ctx.rng.gaussian2c();
    if (zp.norm() < 1e-3) continue;
    err = std::max(err, po::gamma_P_block_residual(zp));
    const cdouble f = std::exp(kI * ctx.rng.uniform(0.0, 6.28));
    err = std::max(err, po::gamma_P_block_residual(Vector2c(f * zp)));
  }
  return err;
}

double check_wavefunction_build(CheckContext& ctx) {
  const ModelParams mp{-1, ctx.cfg->params.hbar};
  double err = 0.0;
  // zero amplitude gives the zero wave function
  const po::WaveFunction zero = po::make_polarized(
      [](const MinkowskiVector&) { return cdouble(0.0, 0.0); }, -1, mp);
  // reconstruction returns f * basis spinor
  const po::WaveFunction w = po::make_polarized(default_bump(), -1, mp);
  const auto f = default_bump();
  for (int s = 0; s < ctx.samples; ++s) {
    const pq::PrequantumPoint y = random_prequantum_point(ctx.rng);
    err = std::max(err, std::abs(zero.eval(y)));
    const auto [p, e] = sp::momentum_3(y.Zp);
    MinkowskiVector P;
    P << p[0], p[1], p[2], e;
    const Vector4c expected = f(P) * po::basis_solution(P, -1);
    err = std::max(err, (po::reconstruct_momentum_spinor(w, y) - expected).norm());
  }
  // the chi = +1 construction is not available
  bool threw = false;
  try {
    po::make_polarized(default_bump(), +1, mp);
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  if (!threw) err = std::max(err, 1.0);
  return err;
}

double check_equivariance(CheckContext& ctx) {
  const ModelParams mp{-1, ctx.cfg->params.hbar};
  const po::WaveFunction w = po::make_polarized(default_bump(), -1, mp);
  double err = 0.0;
  for (int s = 0; s < ctx.samples; ++s) {
    const pq::PrequantumPoint y = random_prequantum_point(ctx.rng);
    const cdouble base = w.eval(y);
    for (int k = 0; k < 12; ++k) {
      const double theta = 6.283185307179586 * k / 12.0;
      const cdouble rotated = w.eval(pq::u1_action(theta, y, mp));
      err = std::max(err, std::abs(rotated - std::exp(kI * theta) * base));
    }
  }
  return err;
}

double check_covariant_constancy(CheckContext& ctx) {
  const ModelParams mp{-1, ctx.cfg->params.hbar};
  const po::WaveFunction w = po::make_polarized(default_bump(), -1, mp);
  const auto rep = po::check_polarized(w, mp, ctx.rng, ctx.samples, 1e-5);
  return rep.wedge_residual;
}

double check_x_independence(CheckContext& ctx) {
  const ModelParams mp{-1, ctx.cfg->params.hbar};
  const po::WaveFunction w = po::make_polarized(default_bump(), -1, mp);
  const auto rep = po::check_polarized(w, mp, ctx.rng, ctx.samples, 1e-5);
  return rep.x_derivative;
}

double check_scalar_conditions(CheckContext& ctx) {
  const ModelParams mp{-1, ctx.cfg->params.hbar};
  const po::WaveFunction w = po::make_polarized(default_bump(), -1, mp);
  const auto rep = po::check_polarized(w, mp, ctx.rng, ctx.samples, 1e-5);
  return std::max(rep.zprime_direction, rep.zsecond_pairing);
}

double check_homogeneity(CheckContext& ctx) {
  const ModelParams mp{-1, ctx.cfg->params.hbar};
  const po::WaveFunction w = po::make_polarized(default_bump(), -1, mp);
  const auto rep = po::check_polarized(w, mp, ctx.rng, ctx.samples, 1e-5);
  return rep.homogeneity;
}

double check_step_convergence(CheckContext& ctx) {
  const ModelParams mp{-1, ctx.cfg->params.hbar};
  const po::WaveFunction w = po::make_polarized(default_bump(), -1, mp);
  const std::uint64_t snap = ctx.rng.next_u64();
  RandomStream r1(snap), r2(snap);
  const auto rep1 = po::check_polarized(w, mp, r1, ctx.samples, 1e-3);
  const auto rep2 = po::check_polarized(w, mp, r2, ctx.samples, 5e-4);
  const double ratio = rep1.wedge_residual / rep2.wedge_residual;
  return std::abs(ratio - 4.0);
}

double check_negative_control(CheckContext& ctx) {
  const ModelParams mp{-1, ctx.cfg->params.hbar};
  const po::WaveFunction clean = po::make_polarized(default_bump(), -1, mp);
  po::WaveFunction corrupt = clean;
  corrupt.eval = [inner = clean.eval](const pq::PrequantumPoint& y) {
    return inner(y) * (1.0 + 0.3 * std::sin(2.0 * y.x[0]));
  };
  corrupt.eval_w = [inner = clean.eval_w](const DiracSpinor& Z, const Vector3d& x) {
    return inner(Z, x) * (1.0 + 0.3 * std::sin(2.0 * x[0]));
  };
  const std::uint64_t snap = ctx.rng.next_u64();
  RandomStream r1(snap), r2(snap);
  const auto rep_clean = po::check_polarized(clean, mp, r1, ctx.samples, 1e-5);
  const auto rep_corrupt = po::check_polarized(corrupt, mp, r2, ctx.samples, 1e-5);
  const double ratio = rep_corrupt.wedge_residual /
                       std::max(rep_clean.wedge_residual, 1e-300);
  return relu(1000.0 - ratio);
}

// ---------------------------------------------------------------------------
// weyl suite

double check_node_measure(CheckContext& ctx) {
  ctx.samples_run = 1;
  double err = 0.0;
  lc::QuadratureSpec spec;
  spec.e_min = 1.0;
  spec.e_max = 2.0;
  spec.n_radial = 64;
  spec.n_angular = 48;
  const auto nodes = lc::build_nodes(spec);
  double total = 0.0;
  double nullness = 0.0;
  for (const auto& nd : nodes) {
    total += nd.w;
    nullness = std::max(nullness, std::abs(minkowski_dot(nd.P, nd.P)));
    nullness = std::max(nullness, relu(-nd.P[3]));
  }
  // int_1^2 E dE * 4pi = 6 pi
  err = std::max(err, std::abs(total - 6.0 * 3.141592653589793238462643));
  err = std::max(err, nullness);
  return err;
}

double check_gauss_exactness(CheckContext& ctx) {
  ctx.samples_run = 1;
  // n-point Gauss-Legendre integrates degree 2n-1 exactly
  std::vector<double> x, w;
  lc::gauss_legendre(6, 0.5, 2.5, x, w);
  double err = 0.0;
  for (int k = 0; k <= 11; ++k) {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) sum += w[i] * std::pow(x[i], k);
    const double exact =
        (std::pow(2.5, k + 1) - std::pow(0.5, k + 1)) / (k + 1.0);
    err = std::max(err, std::abs(sum - exact) / exact);
  }
  return err;
}

double check_transform_linearity(CheckContext& ctx) {
  const ModelParams mp = params_of(ctx);
  lc::QuadratureSpec spec = ctx.cfg->quad;
  spec.n_radial = 8;
  spec.n_angular = 6;
  const auto nodes = lc::build_nodes(spec);
  const auto f1 = default_bump();
  const auto f2 = po::make_profile("shell", {{"e0", 1.4}, {"width", 0.3}});
  const cdouble a{0.7, -0.3}, b{-1.1, 0.4};
  const auto psi1 = po::make_momentum_spinor(f1, mp.chi);
  const auto psi2 = po::make_momentum_spinor(f2, mp.chi);
  po::MomentumSpinor combo;
  combo.chi = mp.chi;
  combo.psi = [&, a, b](const MinkowskiVector& P) {
    return Vector4c(a * psi1.psi(P) + b * psi2.psi(P));
  };
  const auto fc = lc::make_field(combo, nodes, mp);
  const auto fa = lc::make_field(psi1, nodes, mp);
  const auto fb = lc::make_field(psi2, nodes, mp);
  double err = 0.0;
  for (const auto& R : random_probes(ctx.rng, ctx.samples, 1.0)) {
    const Vector4c lhs = fc.eval(R);
    const Vector4c rhs = a * fa.eval(R) + b * fb.eval(R);
    err = std::max(err, (lhs - rhs).norm() / std::max(1.0, lhs.norm()));
  }
  return err;
}

double check_translation_covariance(CheckContext& ctx) {
  const ModelParams mp = params_of(ctx);
  lc::QuadratureSpec spec = ctx.cfg->quad;
  spec.n_radial = 8;
  spec.n_angular = 6;
  const auto nodes = lc::build_nodes(spec);
  const auto psi = po::make_momentum_spinor(default_bump(), mp.chi);
  const auto field = lc::make_field(psi, nodes, mp);
  double err = 0.0;
  for (int s = 0; s < ctx.samples; ++s) {
    const MinkowskiVector C(ctx.rng.uniform(-1, 1), ctx.rng.uniform(-1, 1),
                            ctx.rng.uniform(-1, 1), ctx.rng.uniform(-1, 1));
    po::MomentumSpinor shifted;
    shifted.chi = mp.chi;
    shifted.psi = [&psi, C, &mp](const MinkowskiVector& P) {
      return Vector4c(psi.psi(P) *
                      std::exp(kI * (minkowski_dot(P, C) / mp.hbar)));
    };
    const auto field2 = lc::make_field(shifted, nodes, mp);
    const MinkowskiVector R(ctx.rng.uniform(-1, 1), ctx.rng.uniform(-1, 1),
                            ctx.rng.uniform(-1, 1), ctx.rng.uniform(-1, 1));
    const Vector4c lhs = field.eval(R + C);
    const Vector4c rhs = field2.eval(R);
    err = std::max(err, (lhs - rhs).norm() / std::max(1.0, lhs.norm()));
  }
  return err;
}

double check_plane_wave(CheckContext& ctx) {
  const ModelParams mp = params_of(ctx);
  double err = 0.0;
  for (int chi : {-1, +1}) {
    const auto psi = po::make_momentum_spinor(default_bump(), chi);
    const std::vector<lc::Node> single = {
        {make_minkowski(0.3, -0.4, 1.2, std::sqrt(0.09 + 0.16 + 1.44)), 0.8}};
    const auto field = lc::make_field(psi, single, mp);
    const auto grid = random_probes(ctx.rng, std::max(1, ctx.samples / 2), 2.0);
    const auto rep = lc::weyl_residual(field, grid, lc::DerivMethod::analytic);
    err = std::max(err, rep.residual4 / std::max(rep.scale, 1e-300));
    err = std::max(err, rep.chirality);
    // value is w psi(P) e^{i P.R / hbar}
    const Vector4c expected = single[0].w * psi.psi(single[0].P) *
                              std::exp(kI * (minkowski_dot(single[0].P, grid[0]) / mp.hbar));
    err = std::max(err, (field.eval(grid[0]) - expected).norm());
  }
  return err;
}

double check_quadrature_convergence(CheckContext& ctx) {
  const ModelParams mp = params_of(ctx);
  const auto psi = po::make_momentum_spinor(default_bump(), mp.chi);
  lc::QuadratureSpec coarse = ctx.cfg->quad;
  lc::QuadratureSpec fine = coarse;
  fine.n_radial *= 2;
  fine.n_angular *= 2;
  const auto fc = lc::make_field(psi, coarse, mp);
  const auto ff = lc::make_field(psi, fine, mp);
  double err = 0.0;
  const auto probes = random_probes(ctx.rng, 10, 1.2);
  ctx.samples_run = 10;
  for (const auto& R : probes) {
    const Vector4c a = fc.eval(R);
    const Vector4c b = ff.eval(R);
    err = std::max(err, (a - b).norm() / std::max(1e-12, b.norm()));
  }
  return err;
}

double check_dirac_analytic(CheckContext& ctx) {
  const ModelParams mp = params_of(ctx);
  double err = 0.0;
  for (int chi : {-1, +1}) {
    const auto psi = po::make_momentum_spinor(default_bump(), chi);
    const auto field = lc::make_field(psi, ctx.cfg->quad, mp);
    const auto grid = random_probes(ctx.rng, ctx.samples, 1.5);
    const auto rep = lc::weyl_residual(field, grid, lc::DerivMethod::analytic);
    err = std::max(err, rep.residual4 / std::max(rep.scale, 1e-300));
    // FD cross-check of the analytic gradient at a few probes
    for (int k = 0; k < 3; ++k) {
      const auto ga = lc::analytic_gradient(field, grid[static_cast<std::size_t>(k)]);
      const auto gf = lc::fd_gradient(field, grid[static_cast<std::size_t>(k)], 1e-4);
      for (int muu = 0; muu < 4; ++muu)
        err = std::max(err, (ga[static_cast<std::size_t>(muu)] -
                             gf[static_cast<std::size_t>(muu)]).norm() /
                                std::max(rep.scale, 1e-300) * 1e-5);
      // scaled so an agreement of ~1e-7 x scale stays below a 1e-12 gate
    }
  }
  return err;
}

double check_fd_ratio(CheckContext& ctx) {
  const ModelParams mp = params_of(ctx);
  lc::QuadratureSpec spec = ctx.cfg->quad;
  spec.n_radial = 12;
  spec.n_angular = 8;
  const auto psi = po::make_momentum_spinor(default_bump(), mp.chi);
  const auto field = lc::make_field(psi, spec, mp);
  const auto grid = random_probes(ctx.rng, std::max(4, ctx.samples / 10), 1.0);
  const auto r1 = lc::weyl_residual(field, grid, lc::DerivMethod::finite_difference, 1e-3);
  const auto r2 = lc::weyl_residual(field, grid, lc::DerivMethod::finite_difference, 5e-4);
  return std::abs(r1.residual4 / r2.residual4 - 4.0);
}

double check_chirality(CheckContext& ctx) {
  const ModelParams mp = params_of(ctx);
  double err = 0.0;
  for (int chi : {-1, +1}) {
    const auto psi = po::make_momentum_spinor(default_bump(), chi);
    lc::QuadratureSpec spec = ctx.cfg->quad;
    spec.n_radial = 12;
    spec.n_angular = 8;
    const auto field = lc::make_field(psi, spec, mp);
    const auto grid = random_probes(ctx.rng, ctx.samples, 1.5);
    const auto rep = lc::weyl_residual(field, grid, lc::DerivMethod::analytic);
    err = std::max(err, rep.chirality / std::max(1.0, rep.scale));
    // node-wise: the constraint holds at every quadrature point
    for (int k = 0; k < 20; ++k) {
      const auto& entry = (*field.table)[static_cast<std::size_t>(
          ctx.rng.uniform() * static_cast<double>(field.table->size()))];
      const Vector4c v = entry.a;
      err = std::max(err, (cl::gamma(5) * v - kI * static_cast<double>(chi) * v).norm() /
                              std::max(1.0, v.norm()));
    }
  }
  return err;
}

double check_two_component(CheckContext& ctx) {
  const ModelParams mp = params_of(ctx);
  double err = 0.0;
  for (int chi : {-1, +1}) {
    const auto psi = po::make_momentum_spinor(default_bump(), chi);
    lc::QuadratureSpec spec = ctx.cfg->quad;
    spec.n_radial = 12;
    spec.n_angular = 8;
    const auto field = lc::make_field(psi, spec, mp);
    const auto grid = random_probes(ctx.rng, ctx.samples, 1.5);
    const auto ra = lc::weyl_residual(field, grid, lc::DerivMethod::analytic);
    err = std::max(err, ra.block_mismatch / std::max(ra.scale, 1e-300));
    const auto rf = lc::weyl_residual(field, grid, lc::DerivMethod::finite_difference, 1e-3);
    err = std::max(err, rf.block_mismatch / std::max(rf.residual4, 1e-300) * 1e-12);
  }
  return err;
}

// ---------------------------------------------------------------------------
// poincare suite

double check_compose(CheckContext& ctx) {
  double err = 0.0;
  for (int s = 0; s < ctx.samples; ++s) {
    const pc::PoincareElement g1 = pc::random_element(ctx.rng, 1.0, true);
    const pc::PoincareElement g2 = pc::random_element(ctx.rng, 1.0, true);
    const pc::PoincareElement g3 = pc::random_element(ctx.rng, 1.0, true);
    const pc::PoincareElement id = pc::identity();
    const pc::PoincareElement gi = pc::compose(g1, id);
    err = std::max(err, (gi.A.A - g1.A.A).cwiseAbs().maxCoeff());
    err = std::max(err, (gi.C - g1.C).norm());
    // translations compose additively
    const MinkowskiVector c1(0.3, 1, -2, 0.5), c2(1, -1, 0.25, 2);
    const pc::PoincareElement tt = pc::compose(pc::translation(c2), pc::translation(c1));
    err = std::max(err, (tt.C - (c1 + c2)).norm());
    // associativity
    const pc::PoincareElement a = pc::compose(g3, pc::compose(g2, g1));
    const pc::PoincareElement b = pc::compose(pc::compose(g3, g2), g1);
    err = std::max(err, (a.A.A - b.A.A).cwiseAbs().maxCoeff());
    err = std::max(err, (a.C - b.C).norm());
    // action compatibility on group points
    const sy::GroupPoint pt = random_group_point(ctx.rng);
    const sy::GroupPoint lhs = pc::act_group(pc::compose(g2, g1), pt);
    const sy::GroupPoint rhs = pc::act_group(g2, pc::act_group(g1, pt));
    err = std::max(err, (lhs.zeta.zeta.to4() - rhs.zeta.zeta.to4()).norm());
    err = std::max(err, (lhs.R - rhs.R).norm());
  }
  return err;
}

double check_group_orbit(CheckContext& ctx) {
  double err = 0.0;
  for (int s = 0; s < ctx.samples; ++s) {
    const pc::PoincareElement g = pc::random_element(ctx.rng, 1.5, true);
    const sy::GroupPoint pt = random_group_point(ctx.rng);
    const sy::GroupPoint moved = pc::act_group(g, pt);
    err = std::max(err, sp::sigma_residual(moved.zeta.zeta));
    const MinkowskiVector lhs = sp::momentum_P(moved.zeta);
    const MinkowskiVector rhs = sp::rho(g.A) * sp::momentum_P(pt.zeta);
    err = std::max(err, (lhs - rhs).norm() / std::max(1.0, rhs.norm()));
  }
  return err;
}

double check_momentum_action(CheckContext& ctx) {
  const ModelParams mp = params_of(ctx);
  (void)mp;
  double err = 0.0;
  const auto psi = po::make_momentum_spinor(default_bump(), -1);
  for (int s = 0; s < ctx.samples; ++s) {
    const pc::PoincareElement g = pc::random_element(ctx.rng, 1.0, true);
    const auto moved = pc::act_momentum(g, psi);
    const double e = ctx.rng.uniform(0.5, 2.2);
    const Vector3d u = ctx.rng.unit3();
    MinkowskiVector P;
    P << e * u[0], e * u[1], e * u[2], e;
    const Vector4c v = moved.psi(P);
    err = std::max(err, (cl::gamma_vec(P) * v).norm() / std::max(1.0, v.norm()));
    err = std::max(err,
                   (cl::gamma(5) * v + kI * v).norm() / std::max(1.0, v.norm()));
    // pure translations act trivially at the momentum level
    const auto shifted = pc::act_momentum(
        pc::translation(make_minkowski(1, -2, 0.3, 0.7)), psi);
    err = std::max(err, (shifted.psi(P) - psi.psi(P)).norm());
  }
  // identity acts trivially
  const auto same = pc::act_momentum(pc::identity(), psi);
  err = std::max(err, (same.psi(make_minkowski(0, 0, 1.3, 1.3)) -
                       psi.psi(make_minkowski(0, 0, 1.3, 1.3)))
                          .norm());
  return err;
}

double check_anti_homomorphism(CheckContext& ctx) {
  const ModelParams mp = params_of(ctx);
  lc::QuadratureSpec spec = ctx.cfg->quad;
  spec.n_radial = 4;
  spec.n_angular = 4;
  const auto psi = po::make_momentum_spinor(default_bump(), mp.chi);
  const auto field = lc::make_field(psi, spec, mp);
  double err = 0.0;
  double scale = 1e-300;
  for (int s = 0; s < ctx.samples; ++s) {
    const pc::PoincareElement g1 = pc::random_element(ctx.rng, 1.5, true);
    const pc::PoincareElement g2 = pc::random_element(ctx.rng, 1.5, true);
    const auto lhs = pc::act_spacetime(g1, pc::act_spacetime(g2, field));
    const auto rhs = pc::act_spacetime(pc::compose(g2, g1), field);
    for (const auto& R : random_probes(ctx.rng, 5, 1.0)) {
      const Vector4c a = lhs.eval(R);
      const Vector4c b = rhs.eval(R);
      err = std::max(err, (a - b).norm());
      scale = std::max(scale, a.norm());
    }
  }
  return err / scale;
}

double check_covariance_square(CheckContext& ctx) {
  const ModelParams mp = params_of(ctx);
  const auto psi = po::make_momentum_spinor(default_bump(), mp.chi);
  const lc::QuadratureSpec base = ctx.cfg->quad;
  lc::QuadratureSpec widened = base;
  widened.e_min = base.e_min * std::exp(-1.5);
  widened.e_max = base.e_max * std::exp(1.5);
  widened.n_radial = 2 * base.n_radial;
  widened.n_angular = std::max(48, base.n_angular);
  const auto field = lc::make_field(psi, base, mp);

  std::vector<pc::PoincareElement> elements;
  elements.push_back(pc::rotation(2, 1.1));
  elements.push_back(pc::boost(3, 1.5));
  elements.push_back(pc::boost(1, -1.2));
  elements.push_back(pc::compose(pc::rotation(1, 0.7), pc::boost(2, 1.4)));
  const auto probes = random_probes(ctx.rng, 12, 0.8);
  ctx.samples_run = static_cast<long>(elements.size() * probes.size());

  double err = 0.0;
  for (const auto& g : elements) {
    const auto lhs = pc::act_spacetime(g, field);
    const auto rhs = lc::make_field(pc::act_momentum(g, psi), widened, mp);
    double scale = 1e-300;
    double diff = 0.0;
    for (const auto& R : probes) {
      const Vector4c a = lhs.eval(R);
      const Vector4c b = rhs.eval(R);
      diff = std::max(diff, (a - b).norm());
      scale = std::max(scale, a.norm());
    }
    err = std::max(err, diff / scale);
  }
  return err;
}

double check_weyl_repass(CheckContext& ctx) {
  const ModelParams mp = params_of(ctx);
  lc::QuadratureSpec spec = ctx.cfg->quad;
  spec.n_radial = 8;
  spec.n_angular = 6;
  const auto psi = po::make_momentum_spinor(default_bump(), mp.chi);
  const auto field = lc::make_field(psi, spec, mp);
  const auto grid = lc::lattice_grid(3, 0.4);
  const auto base = lc::weyl_residual(field, grid, lc::DerivMethod::finite_difference, 1e-3);
  double worst_ratio = 0.0;
  // rotations and mild boosts; FD truncation grows with the derivative scale,
  // so the 3x bound needs the rapidity kept small here
  std::vector<pc::PoincareElement> elements = {
      pc::rotation(1, 0.9), pc::rotation(3, 2.1), pc::boost(2, 0.25),
      pc::compose(pc::rotation(2, 1.3), pc::boost(1, -0.2)),
      pc::translation(make_minkowski(0.4, -0.3, 0.2, 0.6))};
  ctx.samples_run = static_cast<long>(elements.size());
  for (const auto& g : elements) {
    const auto moved = pc::act_spacetime(g, field);
    const auto rep = lc::weyl_residual(moved, grid, lc::DerivMethod::finite_difference, 1e-3);
    worst_ratio = std::max(worst_ratio, rep.residual4 / base.residual4);
  }
  return worst_ratio;
}

double check_action_chirality(CheckContext& ctx) {
  const ModelParams mp = params_of(ctx);
  double err = 0.0;
  for (int chi : {-1, +1}) {
    const auto psi = po::make_momentum_spinor(default_bump(), chi);
    lc::QuadratureSpec spec = ctx.cfg->quad;
    spec.n_radial = 6;
    spec.n_angular = 4;
    const auto field = lc::make_field(psi, spec, mp);
    for (int s = 0; s < std::max(1, ctx.samples / 10); ++s) {
      const pc::PoincareElement g = pc::random_element(ctx.rng, 1.0, true);
      const auto moved = pc::act_spacetime(g, field);
      for (const auto& R : random_probes(ctx.rng, 5, 1.0)) {
        const Vector4c v = moved.eval(R);
        err = std::max(err,
                       (cl::gamma(5) * v - kI * static_cast<double>(chi) * v).norm() /
                           std::max(1.0, v.norm()));
      }
    }
  }
  return err;
}

std::vector<CheckDef> build_registry() {
  std::vector<CheckDef> defs;
  const auto add = [&defs](std::string name, std::string anchor, std::string suite,
                           int samples, double tol, std::function<double(CheckContext&)> fn) {
    defs.push_back(CheckDef{std::move(name), std::move(anchor), std::move(suite),
                            samples, tol, std::move(fn)});
  };

  // clifford
  add("clifford.identities", "dirac-representation", "clifford", 1, 0.0,
      check_clifford_identities);
  add("clifford.gamma-values", "dirac-representation", "clifford", 1, 0.0,
      check_gamma_values);
  add("clifford.projectors", "dirac-representation", "clifford", 1, 0.0,
      check_projectors);
  add("clifford.bar-symmetry", "fundamental-relations", "clifford", 100, 0.0,
      check_bar_symmetry);
  add("clifford.quaternionic", "dirac-representation", "clifford", 100, 0.0,
      check_quaternionic);

  // sigma
  add("sigma.constraints", "fundamental-relations", "sigma", 1000, 1e-14,
      check_sigma_constraints);
  add("sigma.constraint-equivalence", "half-spinor-split", "sigma", 200, 0.0,
      check_constraint_equivalence);
  add("sigma.sample-determinism", "plumbing", "sigma", 16, 0.0,
      check_sample_determinism);
  add("sigma.momentum-null-future", "momentum-vector", "sigma", 1000, 1e-12,
      check_momentum_null_future);
  add("sigma.q-null-pq", "momentum-vector", "sigma", 1000, 1e-12, check_q_null_pq);
  add("sigma.phase-invariance", "momentum-vector", "sigma", 200, 1e-12,
      check_phase_invariance);
  add("sigma.halfspinor-projector", "energy-formula", "sigma", 200, 1e-12,
      check_halfspinor_projector);
  add("sigma.momentum3-values", "projection-motions", "sigma", 2, 1e-14,
      check_momentum3_values);
  add("sigma.equivariance", "momentum-vector", "sigma", 1000, 1e-10,
      check_momentum_equivariance);

  // covering
  add("covering.lorentz-membership", "covering-homomorphism", "covering", 100, 1e-10,
      check_lorentz_membership);
  add("covering.homomorphism", "covering-homomorphism", "covering", 100, 1e-10,
      check_homomorphism);
  add("covering.kernel-z2", "covering-homomorphism", "covering", 100, 0.0,
      check_kernel_z2);
  add("covering.sl2-rotation", "covering-homomorphism", "covering", 24, 1e-10,
      check_sl2_rotation);
  add("covering.sl2-boost", "covering-homomorphism", "covering", 24, 1e-10,
      check_sl2_boost);
  add("covering.roundtrip", "spin-diffeomorphism", "covering", 100, 1e-12,
      check_roundtrip);
  add("covering.spin-invariants", "spin-diffeomorphism", "covering", 100, 1e-12,
      check_spin_invariants);

  // presymplectic
  add("presymplectic.varpi-values", "invariant-one-form", "presymplectic", 3, 1e-12,
      check_varpi_values);
  add("presymplectic.kernel-annihilates", "kernel-distribution", "presymplectic",
      1000, 1e-10, check_kernel_annihilates);
  add("presymplectic.kernel-fd-oracle", "kernel-distribution", "presymplectic", 200,
      1e-7, check_kernel_fd_oracle);
  add("presymplectic.sigma-fd-oracle", "invariant-one-form", "presymplectic", 100,
      1e-7, check_sigma_fd_oracle);
  add("presymplectic.kernel-momentum-flat", "kernel-distribution", "presymplectic",
      100, 1e-10, check_kernel_momentum_flat);
  add("presymplectic.rank-nullity", "space-of-motions", "presymplectic", 100, 0.0,
      check_rank_nullity);
  add("presymplectic.pullback-omega", "twisted-symplectic-form", "presymplectic",
      100, 1e-6, check_pullback_omega);
  add("presymplectic.varpi-kernel-values", "kernel-distribution", "presymplectic",
      100, 1e-12, check_varpi_kernel_values);
  add("presymplectic.omega-closed", "twisted-symplectic-form", "presymplectic", 100,
      1e-6, check_omega_closed);
  add("presymplectic.omega-values", "twisted-symplectic-form", "presymplectic", 3,
      1e-12, check_omega_values);
  add("presymplectic.project-wx", "projection-motions", "presymplectic", 50, 1e-8,
      check_project_wx);

  // prequantum
  add("prequantum.z-guise", "z-variables", "prequantum", 100, 1e-7, check_z_guise);
  add("prequantum.zprime-leaf-invariant", "z-variables", "prequantum", 10, 1e-8,
      check_zprime_leaf_invariant);
  add("prequantum.section-solve", "bundle-section", "prequantum", 100, 1e-8,
      check_section_solve);
  add("prequantum.p-of-z", "momentum-from-z", "prequantum", 250, 1e-12, check_p_of_z);
  add("prequantum.connection", "connection-form", "prequantum", 500, 1e-12,
      check_connection);
  add("prequantum.curvature", "connection-form", "prequantum", 500, 1e-6,
      check_curvature);
  add("prequantum.reduction", "bundle-section", "prequantum", 200, 1e-6,
      check_reduction);
  add("prequantum.u1-action", "connection-form", "prequantum", 100, 1e-8,
      check_u1_action);
  add("prequantum.diagram-commutes", "projection-motions", "prequantum", 200, 1e-10,
      check_diagram);

  // polarization
  add("polarization.polarizer-values", "polarizer", "polarization", 3, 1e-15,
      check_polarizer_values);
  add("polarization.geometry", "polarizer", "polarization", 200, 1e-10,
      check_polarization_geometry);
  add("polarization.isotropy", "polarization-defining", "polarization", 200, 1e-15,
      check_isotropy);
  add("polarization.nullspace", "momentum-space-conditions", "polarization", 200,
      1e-12, check_nullspace);
  add("polarization.basis-continuity", "momentum-space-conditions", "polarization",
      40, 6.0, check_basis_continuity);
  add("polarization.gamma-block", "momentum-space-conditions", "polarization", 500,
      1e-12, check_gamma_block);
  add("polarization.wavefunction", "explicit-wavefunction", "polarization", 100,
      1e-12, check_wavefunction_build);
  add("polarization.equivariance", "equivariant-functions", "polarization", 100,
      1e-10, check_equivariance);
  add("polarization.covariant-constancy", "covariant-derivative", "polarization",
      200, 1e-6, check_covariant_constancy);
  add("polarization.x-independence", "polarization-defining", "polarization", 100,
      1e-10, check_x_independence);
  add("polarization.scalar-conditions", "covariant-derivative", "polarization", 100,
      1e-6, check_scalar_conditions);
  add("polarization.homogeneity", "explicit-wavefunction", "polarization", 100, 1e-8,
      check_homogeneity);
  add("polarization.step-convergence", "covariant-derivative", "polarization", 20,
      0.5, check_step_convergence);
  add("polarization.negative-control", "covariant-derivative", "polarization", 50,
      0.5, check_negative_control);

  // weyl
  add("weyl.node-measure", "polarizer", "weyl", 1, 1e-8, check_node_measure);
  add("weyl.gauss-exactness", "plumbing", "weyl", 1, 1e-12, check_gauss_exactness);
  add("weyl.linearity", "lightcone-transform", "weyl", 50, 1e-12,
      check_transform_linearity);
  add("weyl.translation-covariance", "lightcone-transform", "weyl", 25, 1e-12,
      check_translation_covariance);
  add("weyl.plane-wave", "weyl-equation", "weyl", 20, 1e-12, check_plane_wave);
  add("weyl.quadrature-convergence", "lightcone-transform", "weyl", 10, 1e-6,
      check_quadrature_convergence);
  add("weyl.dirac-analytic", "weyl-equation", "weyl", 200, 1e-12,
      check_dirac_analytic);
  add("weyl.fd-ratio", "weyl-equation", "weyl", 40, 0.4, check_fd_ratio);
  add("weyl.chirality", "momentum-space-conditions", "weyl", 50, 1e-12,
      check_chirality);
  add("weyl.two-component", "weyl-two-component", "weyl", 50, 1e-12,
      check_two_component);

  // poincare
  add("poincare.compose", "group-action", "poincare", 100, 1e-10, check_compose);
  add("poincare.group-orbit", "momentum-vector", "poincare", 100, 1e-10,
      check_group_orbit);
  add("poincare.momentum-action", "momentum-space-conditions", "poincare", 200,
      1e-10, check_momentum_action);
  add("poincare.anti-homomorphism", "group-action", "poincare", 100, 1e-10,
      check_anti_homomorphism);
  add("poincare.covariance-square", "group-action", "poincare", 48, 1e-6,
      check_covariance_square);
  add("poincare.weyl-repass", "weyl-equation", "poincare", 5, 3.0,
      check_weyl_repass);
  add("poincare.action-chirality", "momentum-space-conditions", "poincare", 50,
      1e-12, check_action_chirality);

  return defs;
}

}  // namespace

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = build_registry();
  return defs;
}

}  // namespace gqw::harness
