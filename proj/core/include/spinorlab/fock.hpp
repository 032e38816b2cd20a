#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "spinorlab/linalg.hpp"

namespace spinorlab {

/// Zonal harmonic of degree n-1 on S^3: C_{n-1}(cos t) = sin(n t)/sin(t),
/// evaluated through the Chebyshev three-term recurrence in cos t (stable at
/// the endpoint limits +-n).  Requires n >= 1 and 0 <= t <= pi.
double gegenbauer_zonal(int n, double theta);

class QuadratureError : public std::runtime_error {
 public:
  explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

/// Eigenvalue of the normalized kernel operator
///   psi -> (1 / 2 pi^2) int_{S3} psi(u') / (u - u')^2 dOmega'
/// on degree-(n-1) harmonics, via the zonal reduction
///   lambda_n = (1/(n pi)) int_0^pi cot(t/2) sin(n t) dt,
/// whose integrand is the bounded polynomial (1 + cos t) C_{n-1}(cos t).
/// Evaluated with adaptive Gauss-Kronrod quadrature; quad_points bounds the
/// refinement budget (>= 64).  Converges to 1/n.
double kernel_eigenvalue(int n, int quad_points = 1024);

struct PhysicalConstants {
  double alpha = 0.0;    // fine structure constant
  double mc2_ev = 0.0;   // electron rest energy, eV (raw or reduced)
  std::string source;    // e.g. "CODATA-2018"
  bool reduced_mass = false;

  static PhysicalConstants codata2018(bool reduced_mass);
};

enum class LevelMode { analytic, quadrature };

struct Level {
  int n = 0;
  double lambda = 0.0;   // kernel eigenvalue
  int degeneracy = 0;    // n^2 (SO(4))
  double p0c_ev = 0.0;   // alpha * mc^2 * lambda_n, momentum unit as energy
  double energy_ev = 0.0;  // binding energy magnitude: p0^2 / 2m
};

struct SpectralResult {
  std::vector<Level> levels;
  PhysicalConstants constants;
  LevelMode mode = LevelMode::analytic;
};

/// Energy levels from the eigencondition 1 = alpha (mc/p0) lambda_n:
/// p0 = alpha m c lambda_n and E_n = p0^2/(2m) = (alpha^2/2) mc^2 / n^2, with
/// degeneracy n^2 attached.  `analytic` uses lambda_n = 1/n exactly;
/// `quadrature` evaluates lambda_n by the zonal integral.
SpectralResult solve_levels(int n_max, const PhysicalConstants& consts,
                            LevelMode mode = LevelMode::analytic);

/// Balmer transition energies E_n - E_2 for n = 3..n_max, normalized to the
/// n = 3 line.  In analytic mode the ratio is computed from the integer form
/// 9 (n^2 - 4) / (5 n^2), so e.g. the n = 4 entry is exactly 27/20.
std::vector<double> balmer_ratios(const SpectralResult& result);

/// Product quadrature grid on S^3:
///   u = (cos chi, sin chi cos t, sin chi sin t cos phi, sin chi sin t sin phi)
/// with Gauss-Chebyshev (2nd kind) nodes in chi, Gauss-Legendre in cos t and
/// a uniform azimuth.  Total weight sums to V(S3) = 2 pi^2.
struct S3Grid {
  Eigen::Matrix<double, Eigen::Dynamic, 4> points;
  RealVector weights;
  int n_chi = 0, n_theta = 0, n_phi = 0;

  int size() const { return static_cast<int>(weights.size()); }
};

S3Grid build_s3_grid(int n_chi, int n_theta, int n_phi);

/// Apply the normalized kernel operator to sampled values by the grid rule
/// with zonal (value) subtraction:
///   (T psi)(x) ~ (1/2 pi^2) sum_j w_j K(x.u_j) (psi_j - psi(x)) + psi(x),
/// using the analytically reintegrated row integral (= 1) for the singular
/// zonal term.  Valid at nodes and at off-grid points alike.
double apply_zonal_operator(const S3Grid& grid, const RealVector& psi_at_nodes,
                            const Eigen::Vector4d& x, double psi_at_x);

struct NystromCluster {
  int n = 0;
  int count = 0;        // expected n^2
  double mean = 0.0;
  double max_rel_err = 0.0;  // max |lambda_hat * n - 1| over the cluster
  double spread = 0.0;
  /// Every member lies closer to 1/n than half the gap to 1/(n+1), i.e. the
  /// n^2-fold clustering is actually resolved.
  bool separated = false;
};

/// Grid at which the n <= 3 clusters hit 1e-3 relative accuracy per member.
inline constexpr int kReferenceNystromGrid = 32;

struct NystromResult {
  int grid_size = 0;
  int matrix_dim = 0;
  std::vector<double> eigenvalues;  // top sum-of-n^2 eigenvalues, descending
  std::vector<NystromCluster> clusters;
};

/// Independent cross-check: Nystrom discretization of the kernel operator on
/// the product grid (grid_size nodes per direction), with the diagonal
/// singularity handled by zonal subtraction.  The azimuthal uniformity makes
/// the (weight-symmetrized) matrix block-circulant, so its spectrum is
/// assembled exactly from n_phi Hermitian blocks of size
/// (n_chi n_theta)^2.  Returns the n_probe leading eigenvalue clusters,
/// each expected at 1/n with multiplicity n^2.
NystromResult nystrom_cross_check(int grid_size, int n_probe);

}  // namespace spinorlab
