#pragma once

#include <cstdint>
#include <vector>

#include "spinorlab/bilinear.hpp"
#include "spinorlab/field_tensors.hpp"
#include "spinorlab/fock.hpp"

namespace spinorlab {

// ---------------------------------------------------------------------------
// clifford

struct CliffordCaseResult {
  int n = 0;
  Signature signature;
  CliffordCheck check;
  OddCheck odd;
  bool pass = false;
};

struct CliffordSuiteResult {
  double tol = kIdentityTol;
  std::vector<CliffordCaseResult> cases;
  bool pass = false;
  double worst_residual = 0.0;
};

/// Identity checks for n = n_min..n_max, Euclidean and Lorentzian signature
/// each, including the odd extension closure.
CliffordSuiteResult run_clifford_suite(int n_min, int n_max, double tol = kIdentityTol);

// ---------------------------------------------------------------------------
// purity

struct PuritySuiteResult {
  int n = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  double tol = kRankTol;
  int baseline_pure = 0;     // random chiral spinors classified pure
  int orbit_pure = 0;        // Spin-orbit samples of the reference spinor
  int generic_nonpure = 0;   // generic samples classified non-pure
  int rank_ambiguities = 0;  // trials discarded for guard-band hits
  bool pass = false;
};

/// Purity baseline: at n <= 3 every chiral spinor must classify pure; at
/// n >= 4 the Spin-orbit of the reference spinor stays 100% pure while
/// generic samples are non-pure in >= 99% of trials.
PuritySuiteResult run_purity_suite(int n, int trials, std::uint64_t seed,
                                   double tol = kRankTol);

// ---------------------------------------------------------------------------
// maxwell (Eq. 17) and gravity-candidate (Eqs. 18-19)

struct ResidualTrial {
  std::uint64_t seed = 0;
  Eigen::Vector4d p;
  double residual_plus = 0.0;   // 17a (or first contraction of Eq. 19)
  double residual_minus = 0.0;  // 17b (or second contraction)
  bool vacuum = false;
  bool pass = false;
};

struct MaxwellSuiteResult {
  int trials = 0;
  std::uint64_t seed = 0;
  double pass_tol = 1e-10;
  double fail_tol = 1e-6;
  std::vector<ResidualTrial> solutions;        // all must pass
  std::vector<ResidualTrial> counterexamples;  // expected to exceed fail_tol
  int counterexample_exceed = 0;
  bool pass = false;
};

/// Seeded null momenta from two-component spinors, their Weyl solutions, and
/// both Eq. 17 residuals; plus a counterexample sweep with non-solutions.
MaxwellSuiteResult run_maxwell_suite(int trials, std::uint64_t seed);

struct GravitySuiteResult {
  int trials = 0;
  std::uint64_t seed = 0;
  double pass_tol = 1e-10;
  double fail_tol = 1e-6;
  double swap_tol = 1e-12;
  std::vector<ResidualTrial> solutions;
  std::vector<ResidualTrial> counterexamples;
  int counterexample_exceed = 0;
  double max_swap_residual = 0.0;  // J(1,2,3,4) vs J^T(3,4,1,2)
  double max_rank_ratio = 0.0;     // sigma_2 / sigma_1 of J
  bool pass = false;
};

/// Quadrilinear tensor conditions with all four spinors solving the Weyl
/// equation for one shared p, plus swap-symmetry and rank-1 verification and
/// a generic counterexample sweep.
GravitySuiteResult run_gravity_suite(int trials, std::uint64_t seed);

// ---------------------------------------------------------------------------
// momentum decomposition (Eqs. 13 / 14')

struct MomentumSuiteResult {
  int trials = 0;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  double max_msq_n2 = 0.0;        // |M^2| over pure-spinor momenta at n = 2
  double max_identity_n4 = 0.0;   // |p.p - (M^2 + sum extras^2)| at n = 4
  double max_imag_residual = 0.0;
  bool pass = false;
};

MomentumSuiteResult run_momentum_suite(int trials, std::uint64_t seed);

// ---------------------------------------------------------------------------
// fock

struct FockSuiteResult {
  SpectralResult spectrum;
  std::vector<double> balmer;
  double max_lambda_defect = 0.0;  // max |n lambda_n - 1| over the quadrature path
  bool nystrom_run = false;
  NystromResult nystrom;
  bool pass = false;
};

/// Spectrum via the analytic eigencondition, quadrature cross-check of
/// lambda_n for n = 1..max(20, n_max), Balmer ratios, and optionally the
/// Nystrom discretization (grid > 0).
FockSuiteResult run_fock_suite(int n_max, const PhysicalConstants& consts, int nystrom_grid,
                               int n_probe = 3);

}  // namespace spinorlab
