#ifndef GQWEYL_POINCARE_HPP
#define GQWEYL_POINCARE_HPP

#include "gqweyl/lightcone.hpp"
#include "gqweyl/polarization.hpp"
#include "gqweyl/spin.hpp"
#include "gqweyl/symplectic.hpp"

namespace gqw::poincare {

// Element (A, C) of Spin(3,1) x R^{3,1}, the universal cover of the
// restricted Poincare group.
struct PoincareElement {
  spin::SpinElement A;
  MinkowskiVector C;
};

PoincareElement identity();

// (A2 A1, rho(A2) C1 + C2), the composition induced by the left action.
PoincareElement compose(const PoincareElement& g2, const PoincareElement& g1);

// g . (zeta, R) = (A zeta, rho(A) R + C)
symplectic::GroupPoint act_group(const PoincareElement& g,
                                 const symplectic::GroupPoint& pt);

// (g . psi)(P) = A^{-1} psi(rho(A) P)
polarization::MomentumSpinor act_momentum(const PoincareElement& g,
                                          const polarization::MomentumSpinor& psi);

// (g . psi~)(R) = A^{-1} psi~(rho(A) R + C); analytic gradients are dropped.
lightcone::SpacetimeField act_spacetime(const PoincareElement& g,
                                        const lightcone::SpacetimeField& field);

PoincareElement rotation(int axis, double angle);
PoincareElement boost(int axis, double rapidity);
PoincareElement translation(const MinkowskiVector& C);
PoincareElement from_sl2(const Matrix2c& a, const MinkowskiVector& C);

// Random rotation*boost (optionally with a translation), rapidity bounded.
PoincareElement random_element(RandomStream& rng, double max_rapidity,
                               bool with_translation);

}  // namespace gqw::poincare

#endif
