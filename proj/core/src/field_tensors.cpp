#include "spinorlab/field_tensors.hpp"

#include <cmath>

namespace spinorlab {

namespace {

void require_minkowski(const GammaRep& rep, const char* who) {
  if (rep.half_dim != 2 || !rep.lorentzian())
    throw std::domain_error(std::string(who) + ": needs the 2n = 4 Lorentzian rep (1,3)");
}

Vector dirac_adjoint_row(const Spinor& psi, const GammaRep& rep) {
  // psi~ as a column: (psi^dagger g_0)^T = g_0^T conj(psi)
  return rep.generators[0].transpose() * psi.components.conjugate();
}

// Kernel of the slash operator restricted to one chirality block, phase-fixed
// (largest component real positive) for determinism.
std::vector<Vector> chiral_kernel(const Matrix& slash, const GammaRep& rep, Chirality chir,
                                  double tol) {
  std::vector<int> cols;
  for (int i = 0; i < rep.dim(); ++i) {
    const double v = rep.volume(i, i).real();
    if ((chir == Chirality::plus && v > 0) || (chir == Chirality::minus && v < 0))
      cols.push_back(i);
  }
  Matrix block(rep.dim(), cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) block.col(k) = slash.col(cols[k]);

  Eigen::JacobiSVD<Matrix> svd(block, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double smax = sigma.size() ? sigma[0] : 0.0;
  std::vector<Vector> out;
  for (int i = 0; i < block.cols(); ++i) {
    const double s = i < sigma.size() ? sigma[i] : 0.0;
    if (smax > 0.0 && s > tol * smax) continue;
    Vector full = Vector::Zero(rep.dim());
    for (std::size_t k = 0; k < cols.size(); ++k) full[cols[k]] = svd.matrixV()(k, i);
    int imax = 0;
    full.cwiseAbs().maxCoeff(&imax);
    full *= std::polar(1.0, -std::arg(full[imax]));
    out.push_back(full);
  }
  return out;
}

}  // namespace

Matrix feynman_slash(const Vector& z, const GammaRep& rep) {
  Matrix out = Matrix::Zero(rep.dim(), rep.dim());
  for (int a = 0; a < rep.vector_dim(); ++a)
    out += rep.metric[a] * z[a] * rep.generators[a];
  return out;
}

Matrix weyl_operator(const Vector& z, const GammaRep& rep, int sign) {
  const Matrix id = Matrix::Identity(rep.dim(), rep.dim());
  return feynman_slash(z, rep) * (id + static_cast<double>(sign) * rep.volume);
}

Eigen::Vector4d two_spinor_momentum(const Eigen::Vector2cd& phi) {
  if (phi.norm() == 0.0) throw std::invalid_argument("two_spinor_momentum: phi = 0");
  Eigen::Vector4d p;
  const Complex a = phi[0];
  const Complex b = phi[1];
  p[0] = std::norm(a) + std::norm(b);
  p[1] = 2.0 * (std::conj(a) * b).real();
  p[2] = 2.0 * (std::conj(a) * b).imag();
  p[3] = std::norm(a) - std::norm(b);
  return p;
}

WeylSolutionSet weyl_solutions(const Momentum& p, const GammaRep& rep, double tol) {
  require_minkowski(rep, "weyl_solutions");
  WeylSolutionSet out;
  const double pnorm = p.components.norm();
  if (pnorm <= tol) {
    out.degenerate = true;
    for (int i = 0; i < rep.dim(); ++i) {
      Spinor s;
      s.components = Vector::Zero(rep.dim());
      s.components[i] = 1.0;
      s.chirality = rep.volume(i, i).real() > 0 ? Chirality::plus : Chirality::minus;
      out.basis.push_back(std::move(s));
    }
    return out;
  }
  if (std::abs(minkowski_norm_squared(p)) > tol * pnorm * pnorm)
    throw std::domain_error("weyl_solutions: p is not null within tolerance");

  Vector z(4);
  for (int a = 0; a < 4; ++a) z[a] = p.components[a];
  const Matrix slash = feynman_slash(z, rep);
  for (Chirality chir : {Chirality::plus, Chirality::minus}) {
    for (Vector& v : chiral_kernel(slash, rep, chir, tol)) {
      Spinor s;
      s.components = std::move(v);
      s.chirality = chir;
      out.basis.push_back(std::move(s));
    }
  }
  return out;
}

Spinor embed_two_spinor(const Eigen::Vector2cd& phi, const GammaRep& rep) {
  require_minkowski(rep, "embed_two_spinor");
  if (phi.norm() == 0.0) throw std::invalid_argument("embed_two_spinor: phi = 0");

  // Basis: the positive-chirality Weyl solutions for p = (1,0,0,+-1); the
  // relative phase is fixed so the reduced bilinear matrices reproduce the
  // Pauli form, with conjugated coefficients absorbing the helicity
  // orientation of the + chirality block.
  Momentum pz;
  pz.metric = rep.metric;
  pz.components = RealVector(4);

  pz.components << 1, 0, 0, 1;
  Vector w1;
  for (const auto& s : weyl_solutions(pz, rep).basis)
    if (s.chirality == Chirality::plus) w1 = s.components;

  pz.components << 1, 0, 0, -1;
  Vector w2;
  for (const auto& s : weyl_solutions(pz, rep).basis)
    if (s.chirality == Chirality::plus) w2 = s.components;

  // Align phases so that w1~ g_1 w2 = 1 exactly.
  const Vector row = rep.generators[0].transpose() * w1.conjugate();
  const Complex h = row.transpose() * (rep.generators[1] * w2);
  w2 *= std::conj(h) / std::abs(h);

  Spinor out;
  out.components = std::conj(phi[0]) * w1 + std::conj(phi[1]) * w2;
  out.chirality = Chirality::plus;
  return out;
}

EmTensor em_tensor(const Spinor& psi, const GammaRep& rep, int sign) {
  require_minkowski(rep, "em_tensor");
  EmTensor out;
  out.chirality_sign = sign;
  out.f.setZero();
  const Matrix proj =
      Matrix::Identity(rep.dim(), rep.dim()) + static_cast<double>(sign) * rep.volume;
  const Vector left = dirac_adjoint_row(psi, rep);
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = mu + 1; nu < 4; ++nu) {
      const Matrix comm = rep.generators[mu] * rep.generators[nu] -
                          rep.generators[nu] * rep.generators[mu];
      const Complex val = left.transpose() * (comm * (proj * psi.components));
      out.f(mu, nu) = val;
      out.f(nu, mu) = -val;
    }
  }
  return out;
}

double levi_civita(int a, int b, int c, int d) {
  const int idx[4] = {a, b, c, d};
  int sign = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (idx[i] == idx[j]) return 0.0;
      if (idx[i] > idx[j]) sign = -sign;
    }
  return static_cast<double>(sign);
}

MaxwellResiduals maxwell_residuals(const Spinor& psi, const Momentum& p, const GammaRep& rep,
                                   double tol) {
  require_minkowski(rep, "maxwell_residuals");
  MaxwellResiduals out;

  Vector z(4);
  for (int a = 0; a < 4; ++a) z[a] = p.components[a];
  const double scale =
      std::max(p.components.norm() * psi.components.norm(), 1e-300);
  out.vacuum = max_abs(Vector(feynman_slash(z, rep) * psi.components)) <= tol * scale;

  const EmTensor fp = em_tensor(psi, rep, +1);
  const EmTensor fm = em_tensor(psi, rep, -1);

  out.divergence.setZero();
  for (int nu = 0; nu < 4; ++nu)
    for (int mu = 0; mu < 4; ++mu)
      out.divergence[nu] += p.metric[mu] * p.components[mu] * fp.f(mu, nu);

  out.dual_divergence.setZero();
  for (int rho = 0; rho < 4; ++rho)
    for (int mu = 0; mu < 4; ++mu)
      for (int tau = 0; tau < 4; ++tau)
        for (int lam = 0; lam < 4; ++lam)
          out.dual_divergence[rho] +=
              p.components[mu] * levi_civita(mu, rho, tau, lam) * fm.f(tau, lam);
  return out;
}

QuadTensor quad_tensor(const Spinor& psi1, const Spinor& psi2, const Spinor& psi3,
                       const Spinor& psi4, const GammaRep& rep) {
  require_minkowski(rep, "quad_tensor");
  const Matrix proj = Matrix::Identity(rep.dim(), rep.dim()) + rep.volume;
  const Vector left1 = dirac_adjoint_row(psi1, rep);
  const Vector left3 = dirac_adjoint_row(psi3, rep);
  QuadTensor out;
  for (int mu = 0; mu < 4; ++mu) {
    out.a[mu] = left1.transpose() * (rep.generators[mu] * (proj * psi2.components));
    out.b[mu] = left3.transpose() * (rep.generators[mu] * (proj * psi4.components));
  }
  out.j = out.a * out.b.transpose();
  return out;
}

Eigen::Matrix4cd quad_symmetrized(const QuadTensor& q) {
  return 0.5 * (q.j + q.j.transpose());
}

QuadResiduals divergence_residuals(const QuadTensor& q, const Momentum& p) {
  QuadResiduals out;
  out.first_slot.setZero();
  out.second_slot.setZero();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      out.first_slot[nu] += p.metric[mu] * p.components[mu] * q.j(mu, nu);
      out.second_slot[mu] += p.metric[nu] * p.components[nu] * q.j(mu, nu);
    }
  return out;
}

}  // namespace spinorlab
