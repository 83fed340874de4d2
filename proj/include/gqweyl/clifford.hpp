#ifndef GQWEYL_CLIFFORD_HPP
#define GQWEYL_CLIFFORD_HPP

#include <string>
#include <vector>

#include "gqweyl/types.hpp"

namespace gqw::clifford {

// Pauli matrices, k = 1..3.
const Matrix2c& pauli(int k);

// sigma(v) = sum_k v_k sigma_k
Matrix2c pauli_vec(const Vector3d& v);

// Dirac matrices in the fixed chiral representation; mu = 1..4 are the
// Minkowski directions (4 = time), mu = 5 is the chirality gamma_5.
const Matrix4c& gamma(int mu);

// gamma(v) = gamma_mu v^mu, mu = 1..4
Matrix4c gamma_vec(const MinkowskiVector& v);

// Gram matrix G of the spinor frame; bar(z) = conj(z)^T G.
const Matrix4c& gram();
const Matrix4c& gram_inverse();

// Supplementary chirality projectors: +1 -> Pi = (1+i gamma5)/2, -1 -> Pibar.
const Matrix4c& projector_pi(int sign);

Eigen::RowVector4cd bar_spinor(const DiracSpinor& z);
Eigen::RowVector4cd bar_spinor(const Vector4c& z);

// bar(z) . w = (zs^dag wp + zp^dag ws)/2
cdouble bar_dot(const DiracSpinor& z, const DiracSpinor& w);
cdouble bar_dot(const Vector4c& z, const Vector4c& w);

// G-adjoint of a matrix: barM = G^{-1} M^dag G.
Matrix4c bar_matrix(const Matrix4c& m);

// Antilinear quaternionic structure H(z) = (J conj(zs), J conj(zp)), J = -i sigma_2.
DiracSpinor quaternionic_H(const DiracSpinor& z);
Vector4c quaternionic_H(const Vector4c& z);

struct CliffordReport {
  struct Item {
    std::string name;
    double max_abs_error;
  };
  std::vector<Item> items;
  double worst() const;
};

// Checks the Clifford relations, tracelessness, G-symmetry and the
// gamma_5 algebra; deviations are exactly zero in this representation.
CliffordReport verify_clifford();

}  // namespace gqw::clifford

#endif
