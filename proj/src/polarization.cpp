#include "gqweyl/polarization.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

#include "gqweyl/clifford.hpp"

namespace gqw::polarization {

namespace {

using clifford::bar_dot;
using clifford::gamma;
using clifford::gamma_vec;
using symplectic::MotionPoint;
using symplectic::TangentX;

constexpr cdouble kI{0.0, 1.0};

Vector2c phase_fix(Vector2c v) {
  for (int a = 0; a < 2; ++a) {
    const double m = std::abs(v(a));
    if (m > 1e-12) {
      v *= std::conj(v(a)) / m;
      return v;
    }
  }
  return v;
}

// parity of the permutation that lists `pair` then the remaining indices
// ascending; used for the 2+3 shuffle sum.
int shuffle_sign_23(int i, int j) {
  // permutation [i, j, rest...] of [0..4] with i < j
  int perm[5], pos = 0;
  perm[pos++] = i;
  perm[pos++] = j;
  for (int k = 0; k < 5; ++k)
    if (k != i && k != j) perm[pos++] = k;
  int inv = 0;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      if (perm[a] > perm[b]) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

}  // namespace

double phi_eval(const MotionPoint& m, const TangentX& u1, const TangentX& u2,
                const TangentX& u3) {
  const double pn = m.p.norm();
  if (pn <= 0.0) throw std::invalid_argument("phi_eval: zero momentum");
  Eigen::Matrix3d d;
  d.col(0) = u1.dp;
  d.col(1) = u2.dp;
  d.col(2) = u3.dp;
  return d.determinant() / pn;
}

Vector2c helicity_eigenvector(const Vector3d& u, int sign) {
  Vector2c v;
  if (sign == +1) {
    if (u[2] >= -0.9) {
      v << cdouble(1.0 + u[2], 0.0), cdouble(u[0], u[1]);
      v /= std::sqrt(2.0 * (1.0 + u[2]));
    } else {
      v << cdouble(u[0], -u[1]), cdouble(1.0 - u[2], 0.0);
      v /= std::sqrt(2.0 * (1.0 - u[2]));
    }
  } else if (sign == -1) {
    if (u[2] <= 0.9) {
      v << cdouble(1.0 - u[2], 0.0), cdouble(-u[0], -u[1]);
      v /= std::sqrt(2.0 * (1.0 - u[2]));
    } else {
      v << cdouble(u[0], -u[1]), cdouble(-(1.0 + u[2]), 0.0);
      v /= std::sqrt(2.0 * (1.0 + u[2]));
    }
  } else {
    throw std::invalid_argument("helicity_eigenvector: sign must be +-1");
  }
  return phase_fix(v);
}

Vector4c basis_solution(const MinkowskiVector& P, int chi) {
  if (chi != 1 && chi != -1)
    throw std::invalid_argument("basis_solution: chi must be +-1");
  const double e = P[3];
  if (!(e > 0.0) || std::abs(minkowski_dot(P, P)) > 1e-10 * e * e)
    throw std::domain_error("basis_solution: P not on the punctured future light cone");
  const Vector3d u = spatial(P) / e;
  Vector4c psi = Vector4c::Zero();
  if (chi == -1) {
    const Vector2c v = helicity_eigenvector(u, +1);
    psi(0) = v(0);
    psi(1) = v(1);
  } else {
    const Vector2c v = helicity_eigenvector(u, -1);
    psi(2) = v(0);
    psi(3) = v(1);
  }
  return psi;
}

double gamma_P_block_residual(const Vector2c& Zp) {
  if (Zp.norm() == 0.0) throw std::invalid_argument("gamma_P_block_residual: zero spinor");
  const auto [p, e] = spin::momentum_3(Zp);
  MinkowskiVector P;
  P << p[0], p[1], p[2], e;
  const Matrix4c lhs = gamma_vec(P);
  const Matrix2c outer = Zp * Zp.adjoint();
  Matrix4c rhs = Matrix4c::Zero();
  rhs.block<2, 2>(0, 2) = kSqrt2 * outer;
  rhs.block<2, 2>(2, 0) =
      kSqrt2 * (Zp.squaredNorm() * Matrix2c::Identity() - outer);
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

std::pair<double, double> eq20_smallest_singular_values(const MinkowskiVector& P,
                                                        int chi) {
  Eigen::Matrix<cdouble, 8, 4> stacked;
  stacked.topRows<4>() = gamma_vec(P);
  stacked.bottomRows<4>() =
      gamma(5) - kI * static_cast<double>(chi) * Matrix4c::Identity();
  const Eigen::JacobiSVD<Eigen::Matrix<cdouble, 8, 4>> svd(stacked);
  return {svd.singularValues()(2), svd.singularValues()(3)};
}

MomentumSpinor make_momentum_spinor(Amplitude f, int chi) {
  MomentumSpinor out;
  out.chi = chi;
  out.psi = [f = std::move(f), chi](const MinkowskiVector& P) -> Vector4c {
    return f(P) * basis_solution(P, chi);
  };
  return out;
}

WaveFunction make_polarized(Amplitude f, int chi, const ModelParams& params) {
  (void)params;
  if (chi != -1)
    throw std::invalid_argument(
        "make_polarized: the explicit construction exists for chi = -1 only");
  WaveFunction w;
  w.amplitude = f;
  w.chi = chi;
  w.eval_w = [f](const DiracSpinor& Z, const Vector3d& x) -> cdouble {
    (void)x;
    const auto [p, e] = spin::momentum_3(Z.zp);
    MinkowskiVector P;
    P << p[0], p[1], p[2], e;
    const Vector4c psi = f(P) * basis_solution(P, -1);
    return bar_dot(Z.to4(), psi);
  };
  w.eval = [ew = w.eval_w](const prequantum::PrequantumPoint& y) -> cdouble {
    const double n = y.Zp.squaredNorm();
    return ew(DiracSpinor{y.Zp, y.Zp / n}, y.x);
  };
  return w;
}

Vector4c reconstruct_momentum_spinor(const WaveFunction& w,
                                     const prequantum::PrequantumPoint& y) {
  const cdouble psi_val = w.eval(y);
  Vector4c out = Vector4c::Zero();
  out(0) = 2.0 * y.Zp(0) * psi_val;
  out(1) = 2.0 * y.Zp(1) * psi_val;
  return out;
}

PolarizationGeometryReport verify_polarization(const ModelParams& params,
                                               RandomStream& rng, int samples) {
  PolarizationGeometryReport rep{0.0, 0.0, 1e300, 0.0};
  for (int s = 0; s < samples; ++s) {
    MotionPoint m;
    m.p = rng.uniform(0.3, 3.0) * rng.unit3();
    m.x = Vector3d(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2));

    // (a) the 5-form omega ^ phi via the full 2+3 shuffle sum
    TangentX t[5];
    for (auto& tt : t) {
      for (int k = 0; k < 3; ++k) {
        tt.dp[k] = rng.gaussian();
        tt.dx[k] = rng.gaussian();
      }
      const double nn = std::sqrt(tt.dp.squaredNorm() + tt.dx.squaredNorm());
      tt.dp /= nn;
      tt.dx /= nn;
    }
    double wedge = 0.0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) {
        TangentX rest[3];
        int pos = 0;
        for (int k = 0; k < 5; ++k)
          if (k != i && k != j) rest[pos++] = t[k];
        wedge += shuffle_sign_23(i, j) *
                 symplectic::omega_eval(m, t[i], t[j], params) *
                 phi_eval(m, rest[0], rest[1], rest[2]);
      }
    rep.wedge_omega_phi = std::max(rep.wedge_omega_phi, std::abs(wedge));

    // (b) kernel of phi from the SVD of its flattened coefficient tensor
    Eigen::Matrix<double, 15, 6> contraction;
    std::array<TangentX, 6> basis;
    for (int k = 0; k < 3; ++k) {
      basis[k] = TangentX{Vector3d::Unit(k), Vector3d::Zero()};
      basis[3 + k] = TangentX{Vector3d::Zero(), Vector3d::Unit(k)};
    }
    int row = 0;
    for (int j = 0; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k, ++row)
        for (int i = 0; i < 6; ++i)
          contraction(row, i) = phi_eval(m, basis[i], basis[j], basis[k]);
    const Eigen::JacobiSVD<Eigen::Matrix<double, 15, 6>> svd(
        contraction, Eigen::ComputeFullV);
    rep.kernel_gap = std::min(rep.kernel_gap, svd.singularValues()(2));
    for (int k = 3; k < 6; ++k) {
      const Eigen::Matrix<double, 6, 1> v = svd.matrixV().col(k);
      rep.kernel_dp_leak = std::max(rep.kernel_dp_leak, v.head<3>().norm());
    }

    // (c) isotropy of the vertical distribution
    const TangentX f1{Vector3d::Zero(),
                      Vector3d(rng.gaussian(), rng.gaussian(), rng.gaussian())};
    const TangentX f2{Vector3d::Zero(),
                      Vector3d(rng.gaussian(), rng.gaussian(), rng.gaussian())};
    rep.isotropy = std::max(rep.isotropy,
                            std::abs(symplectic::omega_eval(m, f1, f2, params)));
  }
  return rep;
}

PolarizedReport check_polarized(const WaveFunction& w, const ModelParams& params,
                                RandomStream& rng, int samples, double h,
                                double e_lo, double e_hi) {
  PolarizedReport rep{0.0, 0.0, 0.0, 0.0, 0.0};
  for (int s = 0; s < samples; ++s) {
    const double e = rng.uniform(e_lo, e_hi);
    Vector2c zp = rng.gaussian2c();
    zp *= std::sqrt(kSqrt2 * e) / zp.norm();
    prequantum::PrequantumPoint y{zp, Vector3d(rng.uniform(-1, 1), rng.uniform(-1, 1),
                                               rng.uniform(-1, 1))};
    const cdouble psi0 = w.eval(y);

    const auto eval_shift = [&](const prequantum::TangentY& t, double step) {
      prequantum::PrequantumPoint ys{y.Zp + step * t.dZp, y.x + step * t.dx};
      return w.eval(ys);
    };
    const auto dpsi = [&](const prequantum::TangentY& t) {
      return (eval_shift(t, h) - eval_shift(t, -h)) / (2.0 * h);
    };
    const auto cov = [&](const prequantum::TangentY& t) {
      return dpsi(t) - (kI / params.hbar) * prequantum::alpha_eval(y, t, params) * psi0;
    };

    // phi ^ D Psi on four random unit tangents (3+1 shuffle, four terms)
    prequantum::TangentY t[4];
    for (auto& tt : t) {
      tt.dZp = rng.gaussian2c();
      tt.dx = Vector3d(rng.gaussian(), rng.gaussian(), rng.gaussian());
      const double nn = std::sqrt(tt.dZp.squaredNorm() + tt.dx.squaredNorm());
      tt.dZp /= nn;
      tt.dx /= nn;
    }
    const symplectic::MotionPoint m = prequantum::project_YX(y);
    cdouble wedge = 0.0;
    for (int l = 0; l < 4; ++l) {
      TangentX px[3];
      int pos = 0;
      for (int k = 0; k < 4; ++k)
        if (k != l) px[pos++] = prequantum::dpi_YX(y, t[k]);
      const double sign = ((3 - l) % 2 == 0) ? 1.0 : -1.0;
      wedge += sign * phi_eval(m, px[0], px[1], px[2]) * cov(t[l]);
    }
    rep.wedge_residual = std::max(rep.wedge_residual, std::abs(wedge));

    // dPsi/dx = 0
    for (int k = 0; k < 3; ++k) {
      prequantum::TangentY tx{Vector2c::Zero(), Vector3d::Unit(k)};
      rep.x_derivative = std::max(rep.x_derivative, std::abs(dpsi(tx)));
    }

    // derivative along the momentum-preserving direction i Z' at fixed Z''
    const double n = y.Zp.squaredNorm();
    const DiracSpinor z_sec{y.Zp, y.Zp / n};
    {
      const DiracSpinor zplus{y.Zp + h * (kI * y.Zp), z_sec.zs};
      const DiracSpinor zminus{y.Zp - h * (kI * y.Zp), z_sec.zs};
      const cdouble d = (w.eval_w(zplus, y.x) - w.eval_w(zminus, y.x)) / (2.0 * h);
      rep.zprime_direction = std::max(rep.zprime_direction, std::abs(d));
    }

    // Wirtinger dPsi/dZ''bar_a = (1/2)(d/dRe + i d/dIm), compared with Z' Psi
    cdouble homog = 0.0;
    for (int a = 0; a < 2; ++a) {
      DiracSpinor zr = z_sec, zi = z_sec;
      zr.zs(a) += h;
      DiracSpinor zr2 = z_sec;
      zr2.zs(a) -= h;
      zi.zs(a) += kI * h;
      DiracSpinor zi2 = z_sec;
      zi2.zs(a) -= kI * h;
      const cdouble dre = (w.eval_w(zr, y.x) - w.eval_w(zr2, y.x)) / (2.0 * h);
      const cdouble dim = (w.eval_w(zi, y.x) - w.eval_w(zi2, y.x)) / (2.0 * h);
      const cdouble wirt = 0.5 * (dre + kI * dim);
      rep.zsecond_pairing =
          std::max(rep.zsecond_pairing, std::abs(wirt - y.Zp(a) * psi0));
      homog += std::conj(z_sec.zs(a)) * wirt;
    }
    rep.homogeneity = std::max(rep.homogeneity, std::abs(homog - psi0));
  }
  return rep;
}

namespace {

double get_param(const std::map<std::string, double>& kv, const std::string& key,
                 double fallback) {
  const auto it = kv.find(key);
  return it == kv.end() ? fallback : it->second;
}

// smooth bump on (a,b), peak normalized to 1 at the midpoint
double bump(double e, double a, double b) {
  if (e <= a || e >= b) return 0.0;
  const double g = (e - a) * (b - e);
  const double gmax = 0.25 * (b - a) * (b - a);
  return std::exp(1.0 / gmax - 1.0 / g);
}

}  // namespace

Amplitude make_profile(const std::string& name,
                       const std::map<std::string, double>& kv) {
  if (name == "bump") {
    const double a = get_param(kv, "a", 1.0), b = get_param(kv, "b", 2.0);
    if (!(a > 0.0 && b > a)) throw std::invalid_argument("bump: need 0 < a < b");
    return [a, b](const MinkowskiVector& P) -> cdouble { return bump(P[3], a, b); };
  }
  if (name == "gauss") {
    const double a = get_param(kv, "a", 1.0), b = get_param(kv, "b", 2.0);
    const double mu = get_param(kv, "mu", 0.5 * (a + b));
    const double sigma = get_param(kv, "sigma", 0.25 * (b - a));
    if (!(a > 0.0 && b > a && sigma > 0.0))
      throw std::invalid_argument("gauss: need 0 < a < b and sigma > 0");
    return [a, b, mu, sigma](const MinkowskiVector& P) -> cdouble {
      const double e = P[3];
      const double g = std::exp(-0.5 * (e - mu) * (e - mu) / (sigma * sigma));
      return g * bump(e, a, b);
    };
  }
  if (name == "shell") {
    const double e0 = get_param(kv, "e0", 1.5);
    const double width = get_param(kv, "width", 0.25);
    if (!(e0 - width > 0.0 && width > 0.0))
      throw std::invalid_argument("shell: need e0 - width > 0");
    return [e0, width](const MinkowskiVector& P) -> cdouble {
      return bump(P[3], e0 - width, e0 + width);
    };
  }
  if (name == "zero") {
    return [](const MinkowskiVector&) -> cdouble { return 0.0; };
  }
  throw std::invalid_argument("unknown profile: " + name);
}

std::pair<double, double> profile_support(const std::string& name,
                                          const std::map<std::string, double>& kv) {
  if (name == "bump" || name == "gauss" || name == "zero")
    return {get_param(kv, "a", 1.0), get_param(kv, "b", 2.0)};
  if (name == "shell") {
    const double e0 = get_param(kv, "e0", 1.5);
    const double width = get_param(kv, "width", 0.25);
    return {e0 - width, e0 + width};
  }
  throw std::invalid_argument("unknown profile: " + name);
}

}  // namespace gqw::polarization
