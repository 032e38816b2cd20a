#include "spinorlab/suites.hpp"

#include <cmath>

#include "spinorlab/rng.hpp"

namespace spinorlab {

CliffordSuiteResult run_clifford_suite(int n_min, int n_max, double tol) {
  if (n_min < 1 || n_max > kMaxHalfDim || n_min > n_max)
    throw std::invalid_argument("run_clifford_suite: need 1 <= n_min <= n_max <= 6");
  CliffordSuiteResult out;
  out.tol = tol;
  out.pass = true;
  for (int n = n_min; n <= n_max; ++n) {
    for (const Signature sig : {Signature::euclidean(n), Signature::lorentzian(n)}) {
      CliffordCaseResult c;
      c.n = n;
      c.signature = sig;
      const GammaRep rep = build_gamma_rep(n, sig);
      c.check = check_clifford(rep);
      c.odd = check_odd_extension(extend_to_odd(rep));
      c.pass = c.check.pass(tol) && c.odd.pass(tol);
      out.worst_residual = std::max(
          out.worst_residual,
          std::max(c.check.worst(), std::max(c.odd.anticommutator, c.odd.even_closure)));
      out.pass = out.pass && c.pass;
      out.cases.push_back(std::move(c));
    }
  }
  return out;
}

PuritySuiteResult run_purity_suite(int n, int trials, std::uint64_t seed, double tol) {
  if (n < 1 || n > kMaxHalfDim)
    throw std::invalid_argument("run_purity_suite: n out of supported range");
  if (trials < 1) throw std::invalid_argument("run_purity_suite: trials must be positive");

  PuritySuiteResult out;
  out.n = n;
  out.trials = trials;
  out.seed = seed;
  out.tol = tol;
  const GammaRep rep = build_gamma_rep(n, Signature::euclidean(n));
  for (int t = 0; t < trials; ++t) {
    const Chirality chir = t % 2 == 0 ? Chirality::plus : Chirality::minus;
    try {
      const Spinor baseline = random_chiral_spinor(rep, chir, derive_seed(seed, 1, t));
      if (is_pure(baseline, rep, tol).pure)
        ++out.baseline_pure;
      else
        ++out.generic_nonpure;
      const Spinor orbit = random_pure_spinor(rep, chir, derive_seed(seed, 2, t));
      if (is_pure(orbit, rep, tol).pure) ++out.orbit_pure;
    } catch (const RankAmbiguityError&) {
      ++out.rank_ambiguities;
    }
  }
  if (n <= 3) {
    // every chiral spinor is pure here
    out.pass = out.rank_ambiguities == 0 && out.baseline_pure == trials &&
               out.orbit_pure == trials;
  } else {
    out.pass = out.orbit_pure == trials &&
               out.generic_nonpure >= static_cast<int>(0.99 * trials);
  }
  return out;
}

namespace {

Spinor seeded_solution_combo(const WeylSolutionSet& sols, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Vector v = Vector::Zero(sols.basis.front().components.size());
  for (const auto& s : sols.basis) v += Complex(rng.normal(), rng.normal()) * s.components;
  Spinor out;
  out.components = v / v.norm();
  out.chirality = Chirality::none;
  return out;
}

Spinor seeded_dirac(int dim, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = rng.complex_normal();
  Spinor out;
  out.components = v / v.norm();
  out.chirality = Chirality::none;
  return out;
}

Momentum seeded_null_momentum(const GammaRep& rep, std::uint64_t seed, Eigen::Vector2cd* phi_out) {
  SplitMix64 rng(seed);
  Eigen::Vector2cd phi(rng.complex_normal(), rng.complex_normal());
  phi /= phi.norm();
  if (phi_out) *phi_out = phi;
  Momentum p;
  p.metric = rep.metric;
  p.components = two_spinor_momentum(phi);
  return p;
}

}  // namespace

MaxwellSuiteResult run_maxwell_suite(int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("run_maxwell_suite: trials must be positive");
  MaxwellSuiteResult out;
  out.trials = trials;
  out.seed = seed;
  out.pass = true;
  const GammaRep rep = build_gamma_rep(2, Signature::lorentzian(2));

  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = derive_seed(seed, 10, t);
    ResidualTrial trial;
    trial.seed = s;
    const Momentum p = seeded_null_momentum(rep, s, nullptr);
    trial.p = p.components.head<4>();
    const Spinor psi = seeded_solution_combo(weyl_solutions(p, rep), derive_seed(s, 1));
    const MaxwellResiduals r = maxwell_residuals(psi, p, rep);
    trial.residual_plus = r.divergence.norm();
    trial.residual_minus = r.dual_divergence.norm();
    trial.vacuum = r.vacuum;
    trial.pass = trial.vacuum && trial.residual_plus <= out.pass_tol &&
                 trial.residual_minus <= out.pass_tol;
    out.pass = out.pass && trial.pass;
    out.solutions.push_back(trial);
  }

  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = derive_seed(seed, 11, t);
    ResidualTrial trial;
    trial.seed = s;
    const Momentum p = seeded_null_momentum(rep, s, nullptr);
    trial.p = p.components.head<4>();
    const Spinor psi = seeded_dirac(rep.dim(), derive_seed(s, 1));
    const MaxwellResiduals r = maxwell_residuals(psi, p, rep);
    trial.residual_plus = r.divergence.norm();
    trial.residual_minus = r.dual_divergence.norm();
    trial.vacuum = r.vacuum;
    trial.pass = std::max(trial.residual_plus, trial.residual_minus) > out.fail_tol;
    if (trial.pass) ++out.counterexample_exceed;
    out.counterexamples.push_back(trial);
  }
  out.pass = out.pass && out.counterexample_exceed >= static_cast<int>(0.99 * trials);
  return out;
}

GravitySuiteResult run_gravity_suite(int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("run_gravity_suite: trials must be positive");
  GravitySuiteResult out;
  out.trials = trials;
  out.seed = seed;
  out.pass = true;
  const GammaRep rep = build_gamma_rep(2, Signature::lorentzian(2));

  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = derive_seed(seed, 20, t);
    ResidualTrial trial;
    trial.seed = s;
    const Momentum p = seeded_null_momentum(rep, s, nullptr);
    trial.p = p.components.head<4>();
    const WeylSolutionSet sols = weyl_solutions(p, rep);
    Spinor quad[4];
    for (int k = 0; k < 4; ++k) quad[k] = seeded_solution_combo(sols, derive_seed(s, k + 1));
    const QuadTensor j = quad_tensor(quad[0], quad[1], quad[2], quad[3], rep);
    const QuadResiduals r = divergence_residuals(j, p);
    trial.residual_plus = r.first_slot.norm();
    trial.residual_minus = r.second_slot.norm();
    trial.vacuum = true;
    trial.pass =
        trial.residual_plus <= out.pass_tol && trial.residual_minus <= out.pass_tol;
    out.pass = out.pass && trial.pass;

    const QuadTensor swapped = quad_tensor(quad[2], quad[3], quad[0], quad[1], rep);
    out.max_swap_residual = std::max(
        out.max_swap_residual, (j.j - swapped.j.transpose()).cwiseAbs().maxCoeff());
    Eigen::JacobiSVD<Eigen::Matrix4cd> svd(j.j);
    if (svd.singularValues()[0] > 0)
      out.max_rank_ratio = std::max(out.max_rank_ratio,
                                    svd.singularValues()[1] / svd.singularValues()[0]);
    out.solutions.push_back(trial);
  }

  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = derive_seed(seed, 21, t);
    ResidualTrial trial;
    trial.seed = s;
    const Momentum p = seeded_null_momentum(rep, s, nullptr);
    trial.p = p.components.head<4>();
    Spinor quad[4];
    for (int k = 0; k < 4; ++k) quad[k] = seeded_dirac(rep.dim(), derive_seed(s, k + 1));
    const QuadTensor j = quad_tensor(quad[0], quad[1], quad[2], quad[3], rep);
    const QuadResiduals r = divergence_residuals(j, p);
    trial.residual_plus = r.first_slot.norm();
    trial.residual_minus = r.second_slot.norm();
    trial.pass = std::max(trial.residual_plus, trial.residual_minus) > out.fail_tol;
    if (trial.pass) ++out.counterexample_exceed;
    out.counterexamples.push_back(trial);
  }
  out.pass = out.pass && out.max_swap_residual <= out.swap_tol &&
             out.max_rank_ratio <= 1e-12 &&
             out.counterexample_exceed >= static_cast<int>(0.99 * trials);
  return out;
}

MomentumSuiteResult run_momentum_suite(int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("run_momentum_suite: trials must be positive");
  MomentumSuiteResult out;
  out.trials = trials;
  out.seed = seed;

  const GammaRep rep2 = build_gamma_rep(2, Signature::lorentzian(2));
  const GammaRep rep4 = build_gamma_rep(4, Signature::lorentzian(4));
  for (int t = 0; t < trials; ++t) {
    // n = 2: every chiral spinor is pure and its momentum is null, so the
    // decomposition must return M^2 = 0 (no extras).
    const Spinor psi2 = random_chiral_spinor(rep2, Chirality::plus, derive_seed(seed, 30, t));
    const Momentum p2 = real_momentum(psi2, rep2);
    const MomentumSplit s2 = decompose_momentum(p2, 2);
    out.max_msq_n2 = std::max(out.max_msq_n2, std::abs(s2.msq));

    const Spinor psi4 = random_pure_spinor(rep4, Chirality::plus, derive_seed(seed, 31, t));
    const Momentum p4 = real_momentum(psi4, rep4);
    const MomentumSplit s4 = decompose_momentum(p4, 4);
    // P null: the Minkowski head norm must equal M^2 + sum extras^2.
    const double identity =
        std::abs(s4.head_norm_squared - (s4.msq + s4.extras_squared));
    out.max_identity_n4 = std::max(out.max_identity_n4, identity);
  }
  out.pass = out.max_msq_n2 <= out.tol && out.max_identity_n4 <= out.tol;
  return out;
}

FockSuiteResult run_fock_suite(int n_max, const PhysicalConstants& consts, int nystrom_grid,
                               int n_probe) {
  if (n_max < 1) throw std::invalid_argument("run_fock_suite: n_max >= 1 required");
  FockSuiteResult out;
  out.spectrum = solve_levels(n_max, consts, LevelMode::analytic);
  // quadrature path cross-check of the eigenvalue law
  for (int n = 1; n <= std::max(n_max, 20); ++n)
    out.max_lambda_defect =
        std::max(out.max_lambda_defect, std::abs(n * kernel_eigenvalue(n) - 1.0));
  if (n_max >= 3) out.balmer = balmer_ratios(out.spectrum);
  out.pass = out.max_lambda_defect <= 1e-8;
  if (nystrom_grid > 0) {
    out.nystrom = nystrom_cross_check(nystrom_grid, n_probe);
    out.nystrom_run = true;
    // Any grid must reproduce lambda_1 to 1e-3 and resolve the n^2 clusters;
    // the per-eigenvalue 1e-3 bound at n <= 3 is asserted at the reference
    // grid and beyond.
    out.pass = out.pass && std::abs(out.nystrom.eigenvalues.front() - 1.0) <= 1e-3;
    for (const auto& cl : out.nystrom.clusters) {
      out.pass = out.pass && cl.separated;
      if (cl.n <= 3 && nystrom_grid >= kReferenceNystromGrid)
        out.pass = out.pass && cl.max_rel_err <= 1e-3;
    }
  }
  return out;
}

}  // namespace spinorlab
