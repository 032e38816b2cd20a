#include "spinorlab/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace spinorlab {

namespace {

constexpr double kPi = std::numbers::pi;

/// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration.
void gauss_legendre(int m, RealVector& x, RealVector& w) {
  x.resize(m);
  w.resize(m);
  for (int i = 0; i < m; ++i) {
    double t = std::cos(kPi * (i + 0.75) / (m + 0.5));
    double p0 = 0.0, p1 = 0.0;
    for (int it = 0; it < 100; ++it) {
      p0 = 1.0;
      p1 = 0.0;
      for (int k = 0; k < m; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k + 1.0) * t * p1 - k * p2) / (k + 1.0);
      }
      const double dp = m * (t * p0 - p1) / (t * t - 1.0);
      const double dt = p0 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    p1 = 0.0;
    p0 = 1.0;
    for (int k = 0; k < m; ++k) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * k + 1.0) * t * p1 - k * p2) / (k + 1.0);
    }
    const double dp = m * (t * p0 - p1) / (t * t - 1.0);
    x[m - 1 - i] = t;
    w[m - 1 - i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
}

double kernel_value(double dot) {
  return 1.0 / (2.0 * std::max(1.0 - dot, 1e-300));
}

}  // namespace

double gegenbauer_zonal(int n, double theta) {
  if (n < 1) throw std::invalid_argument("gegenbauer_zonal: n >= 1 required");
  if (theta < -1e-12 || theta > kPi + 1e-12)
    throw std::invalid_argument("gegenbauer_zonal: theta outside [0, pi]");
  const double c = std::cos(theta);
  double um2 = 1.0;  // U_0
  if (n == 1) return um2;
  double um1 = 2.0 * c;  // U_1
  for (int k = 2; k < n; ++k) {
    const double u = 2.0 * c * um1 - um2;
    um2 = um1;
    um1 = u;
  }
  return um1;
}

double kernel_eigenvalue(int n, int quad_points) {
  if (n < 1) throw std::invalid_argument("kernel_eigenvalue: n >= 1 required");
  if (quad_points < 64)
    throw std::invalid_argument("kernel_eigenvalue: quad_points >= 64 required");

  // cot(t/2) sin(n t) = (1 + cos t) C_{n-1}(cos t): bounded (|.| <= 2n).
  auto integrand = [n](double t) { return (1.0 + std::cos(t)) * gegenbauer_zonal(n, t); };

  int depth = 1;
  while ((15 << depth) < quad_points && depth < 18) ++depth;

  double error = 0.0;
  const double integral = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      integrand, 0.0, kPi, depth, 1e-12, &error);
  if (error > 1e-8 * std::max(std::abs(integral), 1.0))
    throw QuadratureError("kernel_eigenvalue: tolerance not met at max refinement");
  return integral / (n * kPi);
}

PhysicalConstants PhysicalConstants::codata2018(bool reduced) {
  PhysicalConstants c;
  c.alpha = 7.2973525693e-3;
  const double me_c2 = 510998.95000;          // eV
  const double me_over_mp = 1.0 / 1836.15267343;
  c.mc2_ev = reduced ? me_c2 / (1.0 + me_over_mp) : me_c2;
  c.source = "CODATA-2018";
  c.reduced_mass = reduced;
  return c;
}

SpectralResult solve_levels(int n_max, const PhysicalConstants& consts, LevelMode mode) {
  if (n_max < 1) throw std::invalid_argument("solve_levels: n_max >= 1 required");
  SpectralResult out;
  out.constants = consts;
  out.mode = mode;
  for (int n = 1; n <= n_max; ++n) {
    Level lv;
    lv.n = n;
    lv.lambda = mode == LevelMode::analytic ? 1.0 / n : kernel_eigenvalue(n);
    lv.degeneracy = n * n;
    lv.p0c_ev = consts.alpha * consts.mc2_ev * lv.lambda;
    // E = p0^2 / 2m = (alpha^2/2) mc^2 lambda^2; reported as the binding
    // energy magnitude.
    lv.energy_ev = 0.5 * consts.alpha * consts.alpha * consts.mc2_ev * lv.lambda * lv.lambda;
    out.levels.push_back(lv);
  }
  return out;
}

std::vector<double> balmer_ratios(const SpectralResult& result) {
  const int n_max = static_cast<int>(result.levels.size());
  if (n_max < 3) throw std::invalid_argument("balmer_ratios: needs n_max >= 3");
  std::vector<double> out;
  if (result.mode == LevelMode::analytic) {
    for (int n = 3; n <= n_max; ++n) {
      // (1/4 - 1/n^2) / (1/4 - 1/9) = 9 (n^2 - 4) / (5 n^2), exact integers.
      out.push_back(9.0 * (static_cast<double>(n) * n - 4.0) /
                    (5.0 * static_cast<double>(n) * n));
    }
    return out;
  }
  const double e2 = result.levels[1].energy_ev;
  const double line3 = result.levels[2].energy_ev - e2;
  for (int n = 3; n <= n_max; ++n)
    out.push_back((result.levels[n - 1].energy_ev - e2) / line3);
  return out;
}

S3Grid build_s3_grid(int n_chi, int n_theta, int n_phi) {
  if (n_chi < 2 || n_theta < 2 || n_phi < 2)
    throw std::invalid_argument("build_s3_grid: each direction needs >= 2 nodes");
  S3Grid grid;
  grid.n_chi = n_chi;
  grid.n_theta = n_theta;
  grid.n_phi = n_phi;

  // chi: int_0^pi f(chi) sin^2(chi) dchi by Gauss-Chebyshev (2nd kind).
  RealVector chi(n_chi), wchi(n_chi);
  for (int k = 1; k <= n_chi; ++k) {
    chi[k - 1] = k * kPi / (n_chi + 1);
    const double s = std::sin(chi[k - 1]);
    wchi[k - 1] = kPi / (n_chi + 1) * s * s;
  }

  RealVector ct, wt;
  gauss_legendre(n_theta, ct, wt);

  const double wphi = 2.0 * kPi / n_phi;

  grid.points.resize(n_chi * n_theta * n_phi, 4);
  grid.weights.resize(n_chi * n_theta * n_phi);
  int idx = 0;
  for (int i = 0; i < n_chi; ++i) {
    const double c = std::cos(chi[i]);
    const double s = std::sin(chi[i]);
    for (int j = 0; j < n_theta; ++j) {
      const double st = std::sqrt(std::max(0.0, 1.0 - ct[j] * ct[j]));
      for (int k = 0; k < n_phi; ++k) {
        const double phi = 2.0 * kPi * k / n_phi;
        grid.points(idx, 0) = c;
        grid.points(idx, 1) = s * ct[j];
        grid.points(idx, 2) = s * st * std::cos(phi);
        grid.points(idx, 3) = s * st * std::sin(phi);
        grid.weights[idx] = wchi[i] * wt[j] * wphi;
        ++idx;
      }
    }
  }
  return grid;
}

double apply_zonal_operator(const S3Grid& grid, const RealVector& psi_at_nodes,
                            const Eigen::Vector4d& x, double psi_at_x) {
  if (psi_at_nodes.size() != grid.size())
    throw std::invalid_argument("apply_zonal_operator: values/grid size mismatch");
  const double norm = 1.0 / (2.0 * kPi * kPi);
  double acc = 0.0;
  for (int j = 0; j < grid.size(); ++j) {
    const double dot = grid.points.row(j).dot(x);
    if (dot >= 1.0 - 1e-14) continue;  // coincident node: removed by subtraction
    acc += grid.weights[j] * kernel_value(dot) * (psi_at_nodes[j] - psi_at_x);
  }
  return norm * acc + psi_at_x;
}

NystromResult nystrom_cross_check(int grid_size, int n_probe) {
  if (grid_size < 8)
    throw std::invalid_argument("nystrom_cross_check: grid_size >= 8 required");
  if (n_probe < 1 || n_probe > 6)
    throw std::invalid_argument("nystrom_cross_check: n_probe must be in 1..6");

  const int n_chi = grid_size, n_theta = grid_size, n_phi = grid_size;
  const int m = n_chi * n_theta;  // nodes per azimuthal slice
  const int total = m * n_phi;
  int wanted = 0;
  for (int n = 1; n <= n_probe; ++n) wanted += n * n;
  // the rule must resolve degree-(n_probe - 1) harmonics with headroom
  if (8 * wanted > total || grid_size < 2 * n_probe)
    throw std::invalid_argument("nystrom_cross_check: grid too coarse for requested n_probe");

  // Slice geometry at phi = 0: u = (c, s ct, s st).
  RealVector chi(n_chi), wchi(n_chi);
  for (int k = 1; k <= n_chi; ++k) {
    chi[k - 1] = k * kPi / (n_chi + 1);
    const double s = std::sin(chi[k - 1]);
    wchi[k - 1] = kPi / (n_chi + 1) * s * s;
  }
  RealVector ct, wt;
  gauss_legendre(n_theta, ct, wt);

  RealVector pc(m), psct(m), psst(m), w(m);
  {
    int idx = 0;
    const double wphi = 2.0 * kPi / n_phi;
    for (int i = 0; i < n_chi; ++i)
      for (int j = 0; j < n_theta; ++j) {
        pc[idx] = std::cos(chi[i]);
        psct[idx] = std::sin(chi[i]) * ct[j];
        psst[idx] = std::sin(chi[i]) * std::sqrt(std::max(0.0, 1.0 - ct[j] * ct[j]));
        w[idx] = wchi[i] * wt[j] * wphi;
        ++idx;
      }
  }

  const double norm = 1.0 / (2.0 * kPi * kPi);
  // Weight-symmetrized kernel blocks per azimuthal offset d:
  //   C[d]_{PQ} = sqrt(w_P w_Q) K(u_P(0) . u_Q(phi_d)) / (2 pi^2).
  // The matrix is block-circulant over the azimuth, so the spectrum is the
  // union over wavenumbers of the Hermitian blocks sum_d C[d] e^{-i 2pi m d / n_phi}.
  std::vector<Eigen::MatrixXd> blocks(n_phi, Eigen::MatrixXd(m, m));
  RealVector rowsum = RealVector::Zero(m);
  const RealVector sw = w.cwiseSqrt();
  for (int d = 0; d < n_phi; ++d) {
    const double cphi = std::cos(2.0 * kPi * d / n_phi);
    for (int p = 0; p < m; ++p) {
      for (int q = 0; q < m; ++q) {
        const double dot = pc[p] * pc[q] + psct[p] * psct[q] + cphi * psst[p] * psst[q];
        double k = (d == 0 && p == q) ? 0.0 : norm * kernel_value(std::min(dot, 1.0 - 1e-300));
        rowsum[p] += w[q] * k;
        blocks[d](p, q) = sw[p] * k * sw[q];
      }
    }
  }
  // Zonal subtraction: the constant harmonic integrates to exactly 1, so the
  // diagonal absorbs the singular cell as 1 - (off-diagonal row integral).
  for (int p = 0; p < m; ++p) blocks[0](p, p) = 1.0 - rowsum[p];

  std::vector<double> eigs;
  eigs.reserve(total);
  const int half = n_phi / 2;
  for (int mode = 0; mode <= half; ++mode) {
    Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(m, m);
    for (int d = 0; d < n_phi; ++d) {
      const double ang = -2.0 * kPi * mode * d / n_phi;
      b += blocks[d] * Complex(std::cos(ang), std::sin(ang));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(b, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
      throw std::runtime_error("nystrom_cross_check: eigen-solver failure");
    const bool doubled = mode != 0 && !(n_phi % 2 == 0 && mode == half);
    for (int i = 0; i < m; ++i) {
      eigs.push_back(es.eigenvalues()[i]);
      if (doubled) eigs.push_back(es.eigenvalues()[i]);  // conjugate wavenumber
    }
  }
  std::sort(eigs.begin(), eigs.end(), std::greater<>());

  NystromResult out;
  out.grid_size = grid_size;
  out.matrix_dim = total;
  out.eigenvalues.assign(eigs.begin(), eigs.begin() + wanted);
  int pos = 0;
  for (int n = 1; n <= n_probe; ++n) {
    NystromCluster cl;
    cl.n = n;
    cl.count = n * n;
    cl.separated = true;
    const double half_gap = 0.5 / (n * (n + 1.0));
    double lo = out.eigenvalues[pos], hi = out.eigenvalues[pos];
    for (int i = 0; i < cl.count; ++i) {
      const double v = out.eigenvalues[pos + i];
      cl.mean += v;
      cl.max_rel_err = std::max(cl.max_rel_err, std::abs(v * n - 1.0));
      cl.separated = cl.separated && std::abs(v - 1.0 / n) < half_gap;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    cl.mean /= cl.count;
    cl.spread = hi - lo;
    out.clusters.push_back(cl);
    pos += cl.count;
  }
  return out;
}

}  // namespace spinorlab
