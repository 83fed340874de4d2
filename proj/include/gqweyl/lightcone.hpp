#ifndef GQWEYL_LIGHTCONE_HPP
#define GQWEYL_LIGHTCONE_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "gqweyl/polarization.hpp"
#include "gqweyl/types.hpp"

namespace gqw::lightcone {

enum class Scheme { product_gauss, monte_carlo };

// Discretization of the invariant measure phi = d^3p/|p| = E dE dOmega on
// the punctured future cone, restricted to an energy window.
struct QuadratureSpec {
  double e_min = 0.5;
  double e_max = 2.5;
  int n_radial = 48;
  int n_angular = 32;  // theta nodes; the phi grid has 2*n_angular points
  Scheme scheme = Scheme::product_gauss;
  std::uint64_t seed = 0;  // monte carlo only
};

struct Node {
  MinkowskiVector P;
  double w;
};

// Gauss-Legendre nodes/weights on [a,b] (Newton iteration on the recurrence).
void gauss_legendre(int n, double a, double b, std::vector<double>& x,
                    std::vector<double>& w);

// Nodes P = (E u, E) with weights summing to int E dE dOmega over the window.
// Node order is fixed (radial, then theta, then phi) so sums are reproducible.
std::vector<Node> build_nodes(const QuadratureSpec& spec);

// Superposition of light-cone plane waves. The node table (w_k psi(P_k)) is
// precomputed; evaluation and the analytic gradient sum over it in fixed
// order. Group actions drop the table, leaving only the evaluator.
struct SpacetimeField {
  std::function<Vector4c(const MinkowskiVector&)> eval;
  int chi = -1;
  double hbar = 1.0;
  struct TableEntry {
    MinkowskiVector P;
    Vector4c a;  // w * psi(P)
  };
  std::shared_ptr<const std::vector<TableEntry>> table;  // null after actions
  bool analytic() const { return table != nullptr; }
};

SpacetimeField make_field(const polarization::MomentumSpinor& psi,
                          const QuadratureSpec& spec, const ModelParams& params);
SpacetimeField make_field(const polarization::MomentumSpinor& psi,
                          const std::vector<Node>& nodes, const ModelParams& params);

// One-shot partial Fourier transform sum_k w_k psi(P_k) e^{(i/hbar) P_k . R}.
Vector4c transform(const polarization::MomentumSpinor& psi, const MinkowskiVector& R,
                   const QuadratureSpec& spec, const ModelParams& params);

// d_mu psi~(R) = (i/hbar) sum_k w_k P_{k,mu} psi(P_k) e^{...}, index lowered.
std::array<Vector4c, 4> analytic_gradient(const SpacetimeField& field,
                                          const MinkowskiVector& R);

std::array<Vector4c, 4> fd_gradient(const SpacetimeField& field,
                                    const MinkowskiVector& R, double h);

enum class DerivMethod { analytic, finite_difference };

struct WeylReport {
  double residual4;        // max |gamma^mu d_mu psi~|
  double residual2;        // max of the 2-component form
  double block_mismatch;   // |residual4 - residual2| from the same derivatives
  double chirality;        // max |gamma5 psi~ - i chi psi~|
  double scale;            // sum_k |w_k| |psi(P_k)| (analytic) or max |psi~|
};

WeylReport weyl_residual(const SpacetimeField& field,
                         const std::vector<MinkowskiVector>& grid,
                         DerivMethod method, double fd_step = 1e-4);

// n^4 lattice of the given spacing centered at the origin.
std::vector<MinkowskiVector> lattice_grid(int n, double step);

}  // namespace gqw::lightcone

#endif
