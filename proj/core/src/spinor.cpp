#include "spinorlab/spinor.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include "spinorlab/rng.hpp"

namespace spinorlab {

namespace {

constexpr double kGuardFactor = 10.0;

Complex metric_dot(const Vector& a, const Vector& b, const RealVector& metric) {
  Complex s = 0.0;
  for (int i = 0; i < a.size(); ++i) s += metric[i] * a[i] * b[i];
  return s;
}

}  // namespace

NullPlane null_plane_of(const Spinor& psi, const GammaRep& rep, double tol) {
  if (psi.components.size() != rep.dim())
    throw std::invalid_argument("null_plane_of: spinor dimension does not match rep");
  if (psi.norm() <= tol)
    throw std::invalid_argument("null_plane_of: spinor norm below tolerance");

  const int m = rep.vector_dim();
  Matrix constraint(rep.dim(), m);
  for (int a = 0; a < m; ++a) constraint.col(a) = rep.generators[a] * psi.components;

  Eigen::JacobiSVD<Matrix> svd(constraint, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double smax = sigma.size() ? sigma[0] : 0.0;

  NullPlane plane;
  for (int i = 0; i < m; ++i) {
    const double s = i < sigma.size() ? sigma[i] : 0.0;
    const double rel = smax > 0.0 ? s / smax : 0.0;
    if (rel <= tol) {
      plane.basis.push_back(svd.matrixV().col(i));
    } else if (rel <= kGuardFactor * tol) {
      throw RankAmbiguityError(rel, tol);
    }
  }
  plane.dim = static_cast<int>(plane.basis.size());

  // Re-verify total nullity (Eqs. of the Z^2 psi = 0 chain): every kernel
  // vector must be null and all pairs metric-orthogonal.
  for (std::size_t i = 0; i < plane.basis.size(); ++i) {
    for (std::size_t j = i; j < plane.basis.size(); ++j) {
      const double r = std::abs(metric_dot(plane.basis[i], plane.basis[j], rep.metric));
      if (i == j)
        plane.max_null_residual = std::max(plane.max_null_residual, r);
      else
        plane.max_ortho_residual = std::max(plane.max_ortho_residual, r);
    }
  }
  return plane;
}

PurityResult is_pure(const Spinor& psi, const GammaRep& rep, double tol) {
  if (psi.chirality == Chirality::none)
    throw std::invalid_argument("is_pure: purity is decided for Weyl (chiral) spinors");
  PurityResult out;
  out.plane = null_plane_of(psi, rep, tol);
  out.pure = out.plane.dim == rep.half_dim;
  return out;
}

Spinor reference_pure_spinor(const GammaRep& rep, Chirality chirality) {
  if (chirality == Chirality::none)
    throw std::invalid_argument("reference_pure_spinor: chirality required");
  Spinor s;
  s.components = Vector::Zero(rep.dim());
  // volume = sigma_3^(x n): e_0 has eigenvalue +1, e_1 has -1.
  s.components[chirality == Chirality::plus ? 0 : 1] = 1.0;
  s.chirality = chirality;
  return s;
}

Matrix random_spin_rotation(const GammaRep& rep, std::uint64_t seed, double scale) {
  SplitMix64 rng(seed);
  Matrix bivector = Matrix::Zero(rep.dim(), rep.dim());
  for (int a = 0; a < rep.vector_dim(); ++a) {
    for (int b = a + 1; b < rep.vector_dim(); ++b) {
      const double c = scale * rng.normal();
      bivector += c * 0.25 *
                  (rep.generators[a] * rep.generators[b] - rep.generators[b] * rep.generators[a]);
    }
  }
  return bivector.exp();
}

Spinor random_pure_spinor(const GammaRep& rep, Chirality chirality, std::uint64_t seed) {
  const Spinor ref = reference_pure_spinor(rep, chirality);
  const Matrix rot = random_spin_rotation(rep, seed);
  Spinor out;
  out.components = rot * ref.components;
  out.components /= out.components.norm();
  out.chirality = chirality;
  return out;
}

Spinor random_chiral_spinor(const GammaRep& rep, Chirality chirality, std::uint64_t seed) {
  if (chirality == Chirality::none)
    throw std::invalid_argument("random_chiral_spinor: chirality required");
  SplitMix64 rng(seed);
  Vector v(rep.dim());
  for (int i = 0; i < rep.dim(); ++i) v[i] = rng.complex_normal();
  const auto [pp, pm] = weyl_projectors(rep);
  v = (chirality == Chirality::plus ? pp : pm) * v;
  Spinor out;
  out.components = v / v.norm();
  out.chirality = chirality;
  return out;
}

int purity_constraint_count(int n) {
  if (n < 1 || n > 5)
    throw std::invalid_argument("purity_constraint_count: supported for 1 <= n <= 5");
  if (n <= 3) return 0;
  return n == 4 ? 1 : 10;
}

}  // namespace spinorlab
