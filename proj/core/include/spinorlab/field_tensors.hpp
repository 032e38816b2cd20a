#pragma once

#include <array>
#include <vector>

#include "spinorlab/bilinear.hpp"

namespace spinorlab {

/// Feynman slash of a covariant coefficient vector: sum_a metric[a] z_a g_a.
Matrix feynman_slash(const Vector& z, const GammaRep& rep);

/// Weyl operator  zslash (I + sign * volume).  Valid for any rep.
Matrix weyl_operator(const Vector& z, const GammaRep& rep, int sign);

/// Null future-pointing momentum bilinearly built from a two-component
/// spinor: p_0 = phi^dagger phi, p_k = phi^dagger sigma_k phi.
/// Throws on phi = 0.
Eigen::Vector4d two_spinor_momentum(const Eigen::Vector2cd& phi);

/// Solutions of p-slash (1 + g5) psi = 0 at 2n = 4 for null p.
///
/// The operator kernel additionally contains the whole negative-chirality
/// subspace as vacuous solutions; what is returned is the chirality-tagged
/// basis of ker(p-slash) -- one positive- and one negative-chirality spinor
/// for p != 0 -- whose linear combinations produce the nonzero field tensors
/// obeying the vacuum identities.  p = 0 returns the full spinor basis with
/// `degenerate` set.
struct WeylSolutionSet {
  std::vector<Spinor> basis;
  bool degenerate = false;
};

WeylSolutionSet weyl_solutions(const Momentum& p, const GammaRep& rep, double tol = kRankTol);

/// Deterministic embedding of a two-component spinor as a positive-chirality
/// Weyl spinor satisfying the Weyl equation for two_spinor_momentum(phi).
Spinor embed_two_spinor(const Eigen::Vector2cd& phi, const GammaRep& rep);

/// Cartan's electromagnetic bilinear F_{mu nu} = psi~ [g_mu, g_nu](1 +- g5) psi.
/// Antisymmetry is exact by construction (only mu < nu is computed).
struct EmTensor {
  Eigen::Matrix4cd f;
  int chirality_sign = +1;
};

EmTensor em_tensor(const Spinor& psi, const GammaRep& rep, int sign);

/// Rank-4 alternating symbol with eps^{0123} = +1.
double levi_civita(int a, int b, int c, int d);

/// Residuals of the two vacuum Maxwell identities:
///   r+_nu  = p^mu F^{(+)}_{mu nu}
///   r-_rho = p_mu eps^{mu rho tau lam} F^{(-)}_{tau lam}
/// Both vanish when psi solves the Weyl equation for p.  `vacuum` records
/// whether the precondition held; residuals are computed either way.
struct MaxwellResiduals {
  Eigen::Vector4cd divergence;
  Eigen::Vector4cd dual_divergence;
  bool vacuum = false;
};

MaxwellResiduals maxwell_residuals(const Spinor& psi, const Momentum& p, const GammaRep& rep,
                                   double tol = 1e-9);

/// Quadrilinear candidate tensor J_{mu nu} = a_mu b_nu with
/// a_mu = psi1~ g_mu (1+g5) psi2 and b_nu = psi3~ g_nu (1+g5) psi4.
/// Rank <= 1 by the factored construction.
struct QuadTensor {
  Eigen::Matrix4cd j;
  Eigen::Vector4cd a;
  Eigen::Vector4cd b;
};

QuadTensor quad_tensor(const Spinor& psi1, const Spinor& psi2, const Spinor& psi3,
                       const Spinor& psi4, const GammaRep& rep);

/// J^{sym} = (J + J^T) / 2.  The paper calls J itself symmetric; as written
/// it is only rank-1 with the swap symmetry J(1,2,3,4) = J^T(3,4,1,2), so the
/// symmetrized tensor is exposed separately.
Eigen::Matrix4cd quad_symmetrized(const QuadTensor& q);

/// Both contractions p^mu J_{mu nu} and p^nu J_{mu nu}; they vanish when the
/// four source spinors solve the Weyl equation for this same p.
struct QuadResiduals {
  Eigen::Vector4cd first_slot;   // p^mu J_{mu nu}
  Eigen::Vector4cd second_slot;  // p^nu J_{mu nu}
};

QuadResiduals divergence_residuals(const QuadTensor& q, const Momentum& p);

}  // namespace spinorlab
