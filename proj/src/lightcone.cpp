#include "gqweyl/lightcone.hpp"

#include <cmath>
#include <stdexcept>

#include "gqweyl/clifford.hpp"
#include "gqweyl/rng.hpp"

namespace gqw::lightcone {

namespace {
constexpr cdouble kI{0.0, 1.0};
constexpr double kPi = 3.141592653589793238462643383279;
}  // namespace

void gauss_legendre(int n, double a, double b, std::vector<double>& x,
                    std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  const int m = (n + 1) / 2;
  const double xm = 0.5 * (b + a);
  const double xl = 0.5 * (b - a);
  for (int i = 0; i < m; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double z1, pp;
    do {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      z1 = z;
      z = z1 - p1 / pp;
    } while (std::abs(z - z1) > 1e-15);
    x[i] = xm - xl * z;
    x[n - 1 - i] = xm + xl * z;
    w[i] = 2.0 * xl / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
}

std::vector<Node> build_nodes(const QuadratureSpec& spec) {
  if (!(spec.e_min > 0.0 && spec.e_max > spec.e_min))
    throw std::invalid_argument("build_nodes: need 0 < e_min < e_max");
  if (spec.n_radial < 2 || spec.n_angular < 2)
    throw std::invalid_argument("build_nodes: node counts must be >= 2");

  std::vector<Node> nodes;
  if (spec.scheme == Scheme::monte_carlo) {
    const std::size_t total = static_cast<std::size_t>(spec.n_radial) *
                              spec.n_angular * (2 * spec.n_angular);
    nodes.reserve(total);
    RandomStream rng(spec.seed);
    const double m2 = 0.5 * (spec.e_max * spec.e_max - spec.e_min * spec.e_min);
    const double weight = 4.0 * kPi * m2 / static_cast<double>(total);
    for (std::size_t k = 0; k < total; ++k) {
      // density proportional to E on the window
      const double e = std::sqrt(spec.e_min * spec.e_min +
                                 rng.uniform() * 2.0 * m2);
      const Vector3d u = rng.unit3();
      Node nd;
      nd.P << e * u[0], e * u[1], e * u[2], e;
      nd.w = weight;
      nodes.push_back(nd);
    }
    return nodes;
  }

  std::vector<double> er, ew, cr, cw;
  gauss_legendre(spec.n_radial, spec.e_min, spec.e_max, er, ew);
  gauss_legendre(spec.n_angular, -1.0, 1.0, cr, cw);
  const int nphi = 2 * spec.n_angular;
  const double dphi = 2.0 * kPi / nphi;
  nodes.reserve(static_cast<std::size_t>(spec.n_radial) * spec.n_angular * nphi);
  for (int i = 0; i < spec.n_radial; ++i) {
    const double e = er[i];
    const double we = ew[i] * e;  // measure E dE
    for (int j = 0; j < spec.n_angular; ++j) {
      const double c = cr[j];
      const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
      for (int k = 0; k < nphi; ++k) {
        const double phi = dphi * k;
        Node nd;
        nd.P << e * s * std::cos(phi), e * s * std::sin(phi), e * c, e;
        nd.w = we * cw[j] * dphi;
        nodes.push_back(nd);
      }
    }
  }
  return nodes;
}

SpacetimeField make_field(const polarization::MomentumSpinor& psi,
                          const std::vector<Node>& nodes, const ModelParams& params) {
  auto table = std::make_shared<std::vector<SpacetimeField::TableEntry>>();
  table->reserve(nodes.size());
  for (const auto& nd : nodes)
    table->push_back({nd.P, nd.w * psi.psi(nd.P)});

  SpacetimeField field;
  field.chi = psi.chi;
  field.hbar = params.hbar;
  field.table = table;
  field.eval = [table, hbar = params.hbar](const MinkowskiVector& R) -> Vector4c {
    Vector4c acc = Vector4c::Zero();
    for (const auto& entry : *table)
      acc += entry.a * std::exp(kI * (minkowski_dot(entry.P, R) / hbar));
    return acc;
  };
  return field;
}

SpacetimeField make_field(const polarization::MomentumSpinor& psi,
                          const QuadratureSpec& spec, const ModelParams& params) {
  return make_field(psi, build_nodes(spec), params);
}

Vector4c transform(const polarization::MomentumSpinor& psi, const MinkowskiVector& R,
                   const QuadratureSpec& spec, const ModelParams& params) {
  return make_field(psi, spec, params).eval(R);
}

std::array<Vector4c, 4> analytic_gradient(const SpacetimeField& field,
                                          const MinkowskiVector& R) {
  if (!field.analytic())
    throw std::logic_error("analytic_gradient: field has no quadrature table");
  std::array<Vector4c, 4> grad;
  grad.fill(Vector4c::Zero());
  for (const auto& entry : *field.table) {
    const cdouble phase =
        (kI / field.hbar) * std::exp(kI * (minkowski_dot(entry.P, R) / field.hbar));
    const MinkowskiVector plow = lower_index(entry.P);
    for (int mu = 0; mu < 4; ++mu) grad[mu] += plow[mu] * phase * entry.a;
  }
  return grad;
}

std::array<Vector4c, 4> fd_gradient(const SpacetimeField& field,
                                    const MinkowskiVector& R, double h) {
  std::array<Vector4c, 4> grad;
  for (int mu = 0; mu < 4; ++mu) {
    MinkowskiVector rp = R, rm = R;
    rp[mu] += h;
    rm[mu] -= h;
    grad[mu] = (field.eval(rp) - field.eval(rm)) / (2.0 * h);
  }
  return grad;
}

namespace {

// Dirac contraction gamma^mu d_mu from a gradient; also the two-component
// residual sigma^j d_j psi_chi - chi d_t psi_chi built from the same arrays.
struct ResidualPair {
  double r4;
  double r2;
};

ResidualPair dirac_residuals(const std::array<Vector4c, 4>& grad, int chi) {
  Vector4c d = Vector4c::Zero();
  for (int mu = 1; mu <= 4; ++mu) {
    const double gup = metric()(mu - 1, mu - 1);
    d += gup * (clifford::gamma(mu) * grad[mu - 1]);
  }
  const double r4 = d.norm();

  Vector2c two = Vector2c::Zero();
  for (int j = 0; j < 3; ++j) {
    const Vector4c& g = grad[j];
    const Vector2c comp = (chi == -1) ? Vector2c(g(0), g(1)) : Vector2c(g(2), g(3));
    two += clifford::pauli(j + 1) * comp;
  }
  const Vector4c& gt = grad[3];
  const Vector2c tcomp =
      (chi == -1) ? Vector2c(gt(0), gt(1)) : Vector2c(gt(2), gt(3));
  two -= static_cast<double>(chi) * tcomp;
  const double r2 = two.norm();
  return {r4, r2};
}

}  // namespace

WeylReport weyl_residual(const SpacetimeField& field,
                         const std::vector<MinkowskiVector>& grid,
                         DerivMethod method, double fd_step) {
  WeylReport rep{0.0, 0.0, 0.0, 0.0, 0.0};
  if (method == DerivMethod::analytic && !field.analytic())
    throw std::logic_error("weyl_residual: analytic method needs a quadrature table");

  if (method == DerivMethod::analytic) {
    for (const auto& entry : *field.table) rep.scale += entry.a.norm();
  }

  for (const auto& R : grid) {
    const std::array<Vector4c, 4> grad = (method == DerivMethod::analytic)
                                             ? analytic_gradient(field, R)
                                             : fd_gradient(field, R, fd_step);
    const ResidualPair rr = dirac_residuals(grad, field.chi);
    rep.residual4 = std::max(rep.residual4, rr.r4);
    rep.residual2 = std::max(rep.residual2, rr.r2);
    rep.block_mismatch = std::max(rep.block_mismatch, std::abs(rr.r4 - rr.r2));

    const Vector4c v = field.eval(R);
    if (method != DerivMethod::analytic) rep.scale = std::max(rep.scale, v.norm());
    const Vector4c chir =
        clifford::gamma(5) * v - kI * static_cast<double>(field.chi) * v;
    rep.chirality = std::max(rep.chirality, chir.norm());
  }
  return rep;
}

std::vector<MinkowskiVector> lattice_grid(int n, double step) {
  std::vector<MinkowskiVector> grid;
  grid.reserve(static_cast<std::size_t>(n) * n * n * n);
  const double off = 0.5 * (n - 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          grid.push_back(MinkowskiVector((i - off) * step, (j - off) * step,
                                         (k - off) * step, (l - off) * step));
  return grid;
}

}  // namespace gqw::lightcone
