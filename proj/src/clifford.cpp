#include "gqweyl/clifford.hpp"

#include <array>
#include <stdexcept>

namespace gqw::clifford {

namespace {

constexpr cdouble kI{0.0, 1.0};

Matrix2c make_pauli(int k) {
  Matrix2c s;
  switch (k) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -kI, kI, 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli index must be 1..3");
  }
  return s;
}

Matrix4c block(const Matrix2c& a, const Matrix2c& b, const Matrix2c& c,
               const Matrix2c& d) {
  Matrix4c m;
  m.block<2, 2>(0, 0) = a;
  m.block<2, 2>(0, 2) = b;
  m.block<2, 2>(2, 0) = c;
  m.block<2, 2>(2, 2) = d;
  return m;
}

std::array<Matrix4c, 6> make_gammas() {
  const Matrix2c z = Matrix2c::Zero();
  const Matrix2c id = Matrix2c::Identity();
  std::array<Matrix4c, 6> g;  // index 1..5 used
  for (int j = 1; j <= 3; ++j) g[j] = block(z, make_pauli(j), -make_pauli(j), z);
  g[4] = block(z, id, id, z);
  g[5] = block(-kI * id, z, z, kI * id);
  return g;
}

const Matrix2c kJ = (Matrix2c() << 0, -1, 1, 0).finished();  // -i sigma_2

}  // namespace

const Matrix2c& pauli(int k) {
  static const std::array<Matrix2c, 4> s = {Matrix2c::Zero(), make_pauli(1),
                                            make_pauli(2), make_pauli(3)};
  if (k < 1 || k > 3) throw std::invalid_argument("pauli index must be 1..3");
  return s[static_cast<std::size_t>(k)];
}

Matrix2c pauli_vec(const Vector3d& v) {
  Matrix2c m;
  m << v[2], cdouble(v[0], -v[1]), cdouble(v[0], v[1]), -v[2];
  return m;
}

const Matrix4c& gamma(int mu) {
  static const std::array<Matrix4c, 6> g = make_gammas();
  if (mu < 1 || mu > 5) throw std::invalid_argument("gamma index must be 1..5");
  return g[static_cast<std::size_t>(mu)];
}

Matrix4c gamma_vec(const MinkowskiVector& v) {
  Matrix4c m = Matrix4c::Zero();
  for (int mu = 1; mu <= 4; ++mu) m += gamma(mu) * v[mu - 1];
  return m;
}

const Matrix4c& gram() {
  static const Matrix4c g = [] {
    Matrix4c m = Matrix4c::Zero();
    m.block<2, 2>(0, 2) = 0.5 * Matrix2c::Identity();
    m.block<2, 2>(2, 0) = 0.5 * Matrix2c::Identity();
    return m;
  }();
  return g;
}

const Matrix4c& gram_inverse() {
  static const Matrix4c g = [] {
    Matrix4c m = Matrix4c::Zero();
    m.block<2, 2>(0, 2) = 2.0 * Matrix2c::Identity();
    m.block<2, 2>(2, 0) = 2.0 * Matrix2c::Identity();
    return m;
  }();
  return g;
}

const Matrix4c& projector_pi(int sign) {
  static const Matrix4c pi = 0.5 * (Matrix4c::Identity() + kI * gamma(5));
  static const Matrix4c pibar = 0.5 * (Matrix4c::Identity() - kI * gamma(5));
  if (sign != 1 && sign != -1) throw std::invalid_argument("projector sign must be +-1");
  return sign > 0 ? pi : pibar;
}

Eigen::RowVector4cd bar_spinor(const Vector4c& z) {
  return z.adjoint() * gram();
}

Eigen::RowVector4cd bar_spinor(const DiracSpinor& z) { return bar_spinor(z.to4()); }

cdouble bar_dot(const DiracSpinor& z, const DiracSpinor& w) {
  return 0.5 * (z.zs.dot(w.zp) + z.zp.dot(w.zs));
}

cdouble bar_dot(const Vector4c& z, const Vector4c& w) {
  return bar_dot(DiracSpinor::from4(z), DiracSpinor::from4(w));
}

Matrix4c bar_matrix(const Matrix4c& m) {
  return gram_inverse() * m.adjoint() * gram();
}

DiracSpinor quaternionic_H(const DiracSpinor& z) {
  return DiracSpinor{kJ * z.zs.conjugate(), kJ * z.zp.conjugate()};
}

Vector4c quaternionic_H(const Vector4c& z) {
  return quaternionic_H(DiracSpinor::from4(z)).to4();
}

double CliffordReport::worst() const {
  double w = 0.0;
  for (const auto& it : items) w = std::max(w, it.max_abs_error);
  return w;
}

CliffordReport verify_clifford() {
  CliffordReport rep;
  const Matrix4c id = Matrix4c::Identity();

  double anticomm = 0.0;
  for (int mu = 1; mu <= 4; ++mu)
    for (int nu = 1; nu <= 4; ++nu) {
      const Matrix4c lhs = gamma(mu) * gamma(nu) + gamma(nu) * gamma(mu);
      const Matrix4c rhs = 2.0 * metric()(mu - 1, nu - 1) * id;
      anticomm = std::max(anticomm, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  rep.items.push_back({"clifford-relations", anticomm});

  double trace = 0.0;
  for (int mu = 1; mu <= 4; ++mu)
    trace = std::max(trace, std::abs(gamma(mu).trace()));
  rep.items.push_back({"traceless", trace});

  double gsym = 0.0;
  for (int mu = 1; mu <= 4; ++mu)
    gsym = std::max(gsym, (bar_matrix(gamma(mu)) - gamma(mu)).cwiseAbs().maxCoeff());
  rep.items.push_back({"g-symmetric", gsym});

  const Matrix4c g5prod = gamma(1) * gamma(2) * gamma(3) * gamma(4);
  rep.items.push_back({"gamma5-product", (g5prod - gamma(5)).cwiseAbs().maxCoeff()});

  double chi = 0.0;
  for (int mu = 1; mu <= 4; ++mu) {
    const Matrix4c ac = gamma(5) * gamma(mu) + gamma(mu) * gamma(5);
    chi = std::max(chi, ac.cwiseAbs().maxCoeff());
  }
  rep.items.push_back({"gamma5-anticommutes", chi});

  return rep;
}

}  // namespace gqw::clifford
