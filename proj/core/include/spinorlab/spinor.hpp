#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "spinorlab/clifford.hpp"

namespace spinorlab {

enum class Chirality { plus, minus, none };

inline int chirality_sign(Chirality c) {
  return c == Chirality::plus ? +1 : (c == Chirality::minus ? -1 : 0);
}

/// Column spinor with an optional chirality tag.  A tagged spinor is expected
/// to satisfy P^(chirality) psi = psi up to rounding.
struct Spinor {
  Vector components;
  Chirality chirality = Chirality::none;

  double norm() const { return components.norm(); }
};

/// Basis of the totally null plane T_d(psi) = { Z : sum_a Z_a g_a psi = 0 },
/// with the re-verified nullity residuals (|Z.Z| and pairwise |Z.Z'| under
/// the metric's complex-bilinear form).
struct NullPlane {
  std::vector<Vector> basis;  // vectors in C^{2n}
  int dim = 0;
  double max_null_residual = 0.0;
  double max_ortho_residual = 0.0;
};

/// Thrown when singular values straddle the guard band [tol, 10 tol] relative
/// to the largest one, i.e. the kernel rank decision is not clean.  Callers
/// should tighten tol or regenerate the sample.
class RankAmbiguityError : public std::runtime_error {
 public:
  RankAmbiguityError(double relative_sigma, double tol)
      : std::runtime_error("null_plane_of: singular value inside the rank guard band"),
        relative_sigma_(relative_sigma),
        tol_(tol) {}

  double relative_sigma() const { return relative_sigma_; }
  double tol() const { return tol_; }

 private:
  double relative_sigma_;
  double tol_;
};

/// Kernel of the 2^n x 2n matrix whose a-th column is g_a psi, computed by
/// SVD.  Singular values below tol * sigma_max count as zero; anything inside
/// (tol, 10 tol) * sigma_max raises RankAmbiguityError.
NullPlane null_plane_of(const Spinor& psi, const GammaRep& rep, double tol = kRankTol);

struct PurityResult {
  bool pure = false;
  NullPlane plane;  // evidence for audit
};

/// Cartan purity: the null plane reaches the maximal dimension n.
/// Requires a chirality-tagged (Weyl) spinor.
PurityResult is_pure(const Spinor& psi, const GammaRep& rep, double tol = kRankTol);

/// Reference pure spinor: the first standard chiral basis vector of the
/// requested chirality in the tensor-product basis (e_0 for plus, e_1 for
/// minus).  Both annihilate a canonical maximal null plane by construction.
Spinor reference_pure_spinor(const GammaRep& rep, Chirality chirality);

/// Deterministic Spin-group element exp(sum c_ab [g_a, g_b] / 4) with seeded
/// small coefficients; preserves chirality and purity.
Matrix random_spin_rotation(const GammaRep& rep, std::uint64_t seed, double scale = 0.35);

/// Image of the reference pure spinor under a seeded Spin rotation;
/// normalized, passes is_pure, deterministic in the seed.
Spinor random_pure_spinor(const GammaRep& rep, Chirality chirality, std::uint64_t seed);

/// Generic chiral spinor: complex-Gaussian components projected onto the
/// requested chirality eigenspace and normalized.  For n >= 4 such samples
/// are non-pure with probability one (callers verify post hoc when needed).
Spinor random_chiral_spinor(const GammaRep& rep, Chirality chirality, std::uint64_t seed);

/// Number of constraint equations rendering a Weyl spinor pure:
/// 0 for n <= 3, 1 for n = 4, 10 for n = 5.  Throws outside 1..5.
int purity_constraint_count(int n);

}  // namespace spinorlab
