#include "gqweyl/poincare.hpp"

#include <cmath>

#include "gqweyl/clifford.hpp"

namespace gqw::poincare {

namespace {
constexpr cdouble kI{0.0, 1.0};
}

PoincareElement identity() {
  return PoincareElement{spin::SpinElement{Matrix4c::Identity()},
                         MinkowskiVector::Zero()};
}

PoincareElement compose(const PoincareElement& g2, const PoincareElement& g1) {
  PoincareElement out;
  out.A = spin::SpinElement{g2.A.A * g1.A.A};
  out.C = spin::rho(g2.A) * g1.C + g2.C;
  return out;
}

symplectic::GroupPoint act_group(const PoincareElement& g,
                                 const symplectic::GroupPoint& pt) {
  symplectic::GroupPoint out;
  out.zeta.zeta = DiracSpinor::from4(g.A.A * pt.zeta.zeta.to4());
  out.R = spin::rho(g.A) * pt.R + g.C;
  return out;
}

polarization::MomentumSpinor act_momentum(const PoincareElement& g,
                                          const polarization::MomentumSpinor& psi) {
  const LorentzMatrix L = spin::rho(g.A);
  const Matrix4c ainv = spin::spin_inverse(g.A.A);
  polarization::MomentumSpinor out;
  out.chi = psi.chi;
  out.psi = [L, ainv, f = psi.psi](const MinkowskiVector& P) -> Vector4c {
    return ainv * f(L * P);
  };
  return out;
}

lightcone::SpacetimeField act_spacetime(const PoincareElement& g,
                                        const lightcone::SpacetimeField& field) {
  const LorentzMatrix L = spin::rho(g.A);
  const Matrix4c ainv = spin::spin_inverse(g.A.A);
  lightcone::SpacetimeField out;
  out.chi = field.chi;
  out.hbar = field.hbar;
  out.table = nullptr;
  out.eval = [L, ainv, C = g.C, f = field.eval](const MinkowskiVector& R) -> Vector4c {
    return ainv * f(L * R + C);
  };
  return out;
}

PoincareElement rotation(int axis, double angle) {
  if (axis < 1 || axis > 3) throw std::invalid_argument("rotation: axis must be 1..3");
  const Matrix2c a =
      (std::cos(0.5 * angle) * Matrix2c::Identity() -
       kI * std::sin(0.5 * angle) * clifford::pauli(axis));
  return PoincareElement{spin::embed_sl2(a), MinkowskiVector::Zero()};
}

PoincareElement boost(int axis, double rapidity) {
  if (axis < 1 || axis > 3) throw std::invalid_argument("boost: axis must be 1..3");
  const Matrix2c a =
      (std::cosh(0.5 * rapidity) * Matrix2c::Identity() +
       std::sinh(0.5 * rapidity) * clifford::pauli(axis));
  return PoincareElement{spin::embed_sl2(a), MinkowskiVector::Zero()};
}

PoincareElement translation(const MinkowskiVector& C) {
  return PoincareElement{spin::SpinElement{Matrix4c::Identity()}, C};
}

PoincareElement from_sl2(const Matrix2c& a, const MinkowskiVector& C) {
  return PoincareElement{spin::embed_sl2(a), C};
}

PoincareElement random_element(RandomStream& rng, double max_rapidity,
                               bool with_translation) {
  const double angle = rng.uniform(0.0, 6.283185307179586);
  const int raxis = 1 + static_cast<int>(rng.uniform() * 3.0);
  const int baxis = 1 + static_cast<int>(rng.uniform() * 3.0);
  const double eta = rng.uniform(-max_rapidity, max_rapidity);
  PoincareElement g = compose(rotation(std::min(raxis, 3), angle),
                              boost(std::min(baxis, 3), eta));
  if (with_translation)
    g.C = MinkowskiVector(rng.uniform(-1, 1), rng.uniform(-1, 1),
                          rng.uniform(-1, 1), rng.uniform(-1, 1));
  return g;
}

}  // namespace gqw::poincare
