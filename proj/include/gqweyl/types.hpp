#ifndef GQWEYL_TYPES_HPP
#define GQWEYL_TYPES_HPP

#include <Eigen/Dense>
#include <complex>
#include <cmath>

namespace gqw {

using cdouble = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;
using Vector2c = Eigen::Vector2cd;
using Vector3d = Eigen::Vector3d;
using Vector4c = Eigen::Vector4cd;

// Spacetime vector. Storage: [0..2] spatial, [3] time. The public index
// convention is mu = 1..4 with 4 = time; use component() for 1-based access.
using MinkowskiVector = Eigen::Vector4d;

// Real 4x4 matrix acting on MinkowskiVector, candidate element of O(3,1)_0.
using LorentzMatrix = Eigen::Matrix4d;

inline const Eigen::Matrix4d& metric() {
  static const Eigen::Matrix4d g =
      Eigen::Vector4d(-1.0, -1.0, -1.0, 1.0).asDiagonal();
  return g;
}

// g_{mu nu} a^mu b^nu = -a.b_spatial + a4 b4
inline double minkowski_dot(const MinkowskiVector& a, const MinkowskiVector& b) {
  return -a[0] * b[0] - a[1] * b[1] - a[2] * b[2] + a[3] * b[3];
}

inline double component(const MinkowskiVector& v, int mu) { return v[mu - 1]; }

inline MinkowskiVector make_minkowski(double v1, double v2, double v3, double v4) {
  return MinkowskiVector(v1, v2, v3, v4);
}

inline Vector3d spatial(const MinkowskiVector& v) { return v.head<3>(); }

inline MinkowskiVector lower_index(const MinkowskiVector& v) {
  return MinkowskiVector(-v[0], -v[1], -v[2], v[3]);
}

// Dirac spinor in the half-spinor split zeta = (zeta', zeta'').
struct DiracSpinor {
  Vector2c zp;  // zeta'
  Vector2c zs;  // zeta''

  Vector4c to4() const {
    Vector4c z;
    z << zp(0), zp(1), zs(0), zs(1);
    return z;
  }
  static DiracSpinor from4(const Vector4c& z) {
    return DiracSpinor{Vector2c(z(0), z(1)), Vector2c(z(2), z(3))};
  }
};

// Helicity sign chi and the action unit hbar; spin s = chi*hbar/2.
struct ModelParams {
  int chi = -1;
  double hbar = 1.0;
  double spin() const { return 0.5 * chi * hbar; }
  bool valid() const { return (chi == 1 || chi == -1) && hbar > 0.0; }
};

inline constexpr double kSqrt2 = 1.4142135623730951;

}  // namespace gqw

#endif
