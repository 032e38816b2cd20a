#pragma once

#include <utility>
#include <vector>

#include "spinorlab/linalg.hpp"

namespace spinorlab {

/// Signature of the quadratic form: `plus` generators square to +1,
/// `minus` to -1.  The metric is ordered (+...+,-...-), so a Lorentzian
/// space in the paper's convention (+,-,-,-) is Signature{1, 2n-1} and the
/// distinguished timelike generator sits at index 0.
struct Signature {
  int plus = 0;
  int minus = 0;

  int total() const { return plus + minus; }
  static Signature euclidean(int n) { return {2 * n, 0}; }
  static Signature lorentzian(int n) { return {1, 2 * n - 1}; }
};

/// Explicit matrix representation of Cl(2n): 2n generators of size 2^n x 2^n
/// obeying  g_a g_b + g_b g_a = 2 metric[a] delta_ab.
///
/// Construction is the recursive tensor-product one seeded by the Hermitian
/// anticommuting pair (sigma_1, sigma_2); each extension step maps
///   g_a -> g_a (x) sigma_3   and appends   I (x) sigma_1, I (x) sigma_2.
/// Negative-signature generators are the Euclidean ones multiplied by i.
/// The basis is chiral: the normalized volume element comes out as the
/// diagonal matrix sigma_3^(x n) in every signature.
struct GammaRep {
  int half_dim = 0;  // n; vector dim is 2n, spinor dim 2^n
  Signature signature;
  std::vector<Matrix> generators;  // size 2n
  RealVector metric;               // diagonal +-1, size 2n
  Matrix volume;                   // phase-normalized, volume^2 = +I

  int dim() const { return 1 << half_dim; }
  int vector_dim() const { return 2 * half_dim; }

  /// True when the rep carries the paper's Dirac-adjoint structure: exactly
  /// one generator squares to +1 (metric (+,-,...,-)); that generator is
  /// Hermitian and all others are anti-Hermitian, so psi~ = psi^dagger g_0
  /// produces real vector bilinears.
  bool lorentzian() const { return signature.plus == 1 && signature.minus >= 1; }
};

/// Practical upper bound on n (spinor dimension 2^6 = 64).
inline constexpr int kMaxHalfDim = 6;

/// Build the representation.  Deterministic: identical arguments produce
/// bit-identical matrices.  Throws std::invalid_argument on n = 0, n > 6 or
/// a signature not summing to 2n.
GammaRep build_gamma_rep(int n, Signature sig);

/// Ordered product g_1 g_2 ... g_{2n} times the unique phase i^k that makes
/// its square +I (sign fixed so the first diagonal entry is +1).
Matrix volume_element(const GammaRep& rep);

/// Chiral projectors P+- = (I +- volume)/2.
std::pair<Matrix, Matrix> weyl_projectors(const GammaRep& rep);

/// Cl(2n+1) obtained by appending the normalized volume element as the
/// (2n+1)-th generator; its metric entry is +1 by the normalization.
struct OddExtension {
  std::vector<Matrix> generators;  // size 2n+1
  RealVector metric;               // size 2n+1
};

OddExtension extend_to_odd(const GammaRep& rep);

/// Intertwiner of the transpose representation: B g_a B^{-1} = g_a^T for all
/// generators.  Constructed as the ordered product of whichever symmetry
/// class of generators (antisymmetric if their count is even, else symmetric)
/// intertwines; `factors` records how many generators enter the product,
/// which fixes the chirality pairing parity of the associated bilinear.
struct Intertwiner {
  Matrix b;
  Matrix b_inverse;
  int factors = 0;
};

Intertwiner transpose_intertwiner(const GammaRep& rep);

/// Residuals of the defining identities, all in max-norm.
struct CliffordCheck {
  double anticommutator = 0.0;      // max over (a,b) of |{g_a,g_b} - 2 g_ab I|
  double volume_anticommute = 0.0;  // max over a of |{vol, g_a}|
  double volume_square = 0.0;       // |vol^2 - I|
  double projector_idempotent = 0.0;
  double projector_orthogonal = 0.0;
  double projector_complete = 0.0;
  double generator_trace = 0.0;  // max |tr g_a|

  double worst() const;
  bool pass(double tol = kIdentityTol) const { return worst() <= tol; }
};

CliffordCheck check_clifford(const GammaRep& rep);

/// Residual of the Cl(2n+1) relations for an odd extension, plus closure of
/// the even subalgebra generators E_a = g_a g_{2n+1} under anticommutator
/// ({E_a,E_b} must be a scalar multiple of I).
struct OddCheck {
  double anticommutator = 0.0;
  double even_closure = 0.0;

  bool pass(double tol = kIdentityTol) const {
    return anticommutator <= tol && even_closure <= tol;
  }
};

OddCheck check_odd_extension(const OddExtension& ext);

}  // namespace spinorlab
