#include "spinorlab/bilinear.hpp"

#include <cmath>

#include "spinorlab/rng.hpp"

namespace spinorlab {

std::string to_string(PairingMode mode) {
  return mode == PairingMode::lorentzian_adjoint ? "lorentzian_adjoint"
                                                 : "transpose_intertwiner";
}

std::string to_string(AuditArm arm) {
  switch (arm) {
    case AuditArm::pure_pure:
      return "pure_pure";
    case AuditArm::pure_generic:
      return "pure_generic";
    case AuditArm::generic_pure:
      return "generic_pure";
    default:
      return "generic_generic";
  }
}

BilinearVector vector_bilinear(const Spinor& psi, const Spinor& phi, const GammaRep& rep,
                               PairingMode mode) {
  if (psi.components.size() != rep.dim() || phi.components.size() != rep.dim())
    throw std::invalid_argument("vector_bilinear: spinor dimensions do not match rep");

  BilinearVector z;
  z.mode = mode;
  z.components = Vector(rep.vector_dim());

  if (mode == PairingMode::lorentzian_adjoint) {
    if (!rep.lorentzian())
      throw std::domain_error(
          "vector_bilinear: lorentzian_adjoint needs a rep with a timelike generator "
          "(signature (1, 2n-1))");
    const Vector row = rep.generators[0].adjoint() * psi.components;  // g_0 psi
    for (int a = 0; a < rep.vector_dim(); ++a)
      z.components[a] = row.dot(rep.generators[a] * phi.components);
  } else {
    const Intertwiner bi = transpose_intertwiner(rep);
    const Vector left = bi.b.transpose() * psi.components;  // (psi^T B)^T
    for (int a = 0; a < rep.vector_dim(); ++a)
      z.components[a] = left.transpose() * (rep.generators[a] * phi.components);
  }
  return z;
}

Complex norm_squared(const BilinearVector& z, const RealVector& metric) {
  Complex s = 0.0;
  for (int a = 0; a < z.components.size(); ++a)
    s += metric[a] * z.components[a] * z.components[a];
  return s;
}

double norm_squared_hermitian(const BilinearVector& z, const RealVector& metric) {
  double s = 0.0;
  for (int a = 0; a < z.components.size(); ++a)
    s += metric[a] * std::norm(z.components[a]);
  return s;
}

Chirality nondegenerate_partner(const GammaRep& rep, PairingMode mode, Chirality lhs) {
  if (lhs == Chirality::none) return Chirality::none;
  const Chirality same = lhs;
  const Chirality opposite = lhs == Chirality::plus ? Chirality::minus : Chirality::plus;
  if (mode == PairingMode::lorentzian_adjoint) return same;
  // psi^T B g_a phi: g_a flips chirality once, B flips it `factors` times;
  // the plain transpose pairs equal chiralities.
  const int flips = transpose_intertwiner(rep).factors + 1;
  return flips % 2 == 0 ? same : opposite;
}

Momentum real_momentum(const Spinor& psi, const GammaRep& rep, double tol) {
  const BilinearVector z = vector_bilinear(psi, psi, rep, PairingMode::lorentzian_adjoint);
  const double scale = std::max(z.components.norm(), 1e-300);
  const double imag = z.components.imag().cwiseAbs().maxCoeff();
  if (imag > tol * scale)
    throw std::runtime_error(
        "real_momentum: imaginary residue above tolerance (pairing/signature mismatch)");
  Momentum p;
  p.components = z.components.real();
  p.metric = rep.metric;
  return p;
}

double minkowski_norm_squared(const Momentum& p) {
  double s = 0.0;
  for (int a = 0; a < p.components.size(); ++a)
    s += p.metric[a] * p.components[a] * p.components[a];
  return s;
}

MomentumSplit decompose_momentum(const Momentum& p, int n) {
  if (p.components.size() != 2 * n)
    throw std::invalid_argument("decompose_momentum: momentum size is not 2n");
  if (2 * n < 4) throw std::invalid_argument("decompose_momentum: needs 2n >= 4");

  MomentumSplit split;
  split.head = p.components.head(4);
  split.extras = p.components.tail(2 * n - 4);
  for (int mu = 0; mu < 4; ++mu)
    split.head_norm_squared += p.metric[mu] * split.head[mu] * split.head[mu];
  split.extras_squared = split.extras.squaredNorm();
  split.msq_plus = split.head_norm_squared - split.extras_squared;
  split.msq_minus = -split.head_norm_squared - split.extras_squared;
  // Both sign conventions are computed; keep the one consistent with M^2 >= 0
  // (preferring + when both qualify, e.g. on null momenta where M^2 = 0).
  if (split.msq_plus >= split.msq_minus && split.msq_plus >= -kIdentityTol) {
    split.sign = +1;
    split.msq = split.msq_plus;
  } else if (split.msq_minus > -kIdentityTol) {
    split.sign = -1;
    split.msq = split.msq_minus;
  } else {
    split.sign = +1;
    split.msq = split.msq_plus;
  }
  split.identity_residual = std::abs(split.sign * split.head_norm_squared -
                                     (split.msq + split.extras_squared));
  return split;
}

bool AuditReport::pure_arms_all_null() const {
  for (const auto& arm : arms) {
    if (arm.arm == AuditArm::generic_generic) continue;
    const int counted = arm.trials - arm.excluded_trivial;
    if (counted > 0 && arm.null_count != counted) return false;
  }
  return true;
}

double AuditReport::generic_fail_rate() const {
  double worst = 1.0;
  bool saw = false;
  for (const auto& arm : arms) {
    if (arm.arm != AuditArm::generic_generic) continue;
    const int counted = arm.trials - arm.excluded_trivial;
    if (counted == 0) continue;
    saw = true;
    worst = std::min(worst, static_cast<double>(arm.nonnull_count) / counted);
  }
  return saw ? worst : 0.0;
}

namespace {

Spinor sample_side(const GammaRep& rep, Chirality chir, bool pure, std::uint64_t seed) {
  if (pure) return random_pure_spinor(rep, chir, seed);
  // Generic draw; at n >= 4 verify non-purity post hoc (the pure variety has
  // measure zero, so redraws are essentially never needed).
  std::uint64_t s = seed;
  for (int attempt = 0; attempt < 8; ++attempt) {
    Spinor cand = random_chiral_spinor(rep, chir, s);
    if (rep.half_dim < 4) return cand;
    try {
      if (!is_pure(cand, rep).pure) return cand;
    } catch (const RankAmbiguityError&) {
      // fall through to redraw
    }
    s = derive_seed(s, 0xdeadu, attempt);
  }
  throw std::runtime_error("theorem_audit: could not sample a non-pure spinor");
}

}  // namespace

AuditReport theorem_audit(int n, int trials, std::uint64_t seed) {
  if (n < 1 || n > 5)
    throw std::invalid_argument("theorem_audit: supported for 1 <= n <= 5");
  if (trials < 1) throw std::invalid_argument("theorem_audit: trials must be positive");

  AuditReport report;
  report.n = n;
  report.trials = trials;
  report.seed = seed;

  const GammaRep euclid = build_gamma_rep(n, Signature::euclidean(n));
  const GammaRep lorentz = build_gamma_rep(n, Signature::lorentzian(n));

  const AuditArm arms[] = {AuditArm::pure_pure, AuditArm::pure_generic,
                           AuditArm::generic_pure, AuditArm::generic_generic};
  const PairingMode modes[] = {PairingMode::transpose_intertwiner,
                               PairingMode::lorentzian_adjoint};

  std::uint64_t stream = 0;
  for (PairingMode mode : modes) {
    const GammaRep& rep = mode == PairingMode::lorentzian_adjoint ? lorentz : euclid;
    const Chirality lhs = Chirality::plus;
    const Chirality rhs = nondegenerate_partner(rep, mode, lhs);
    for (AuditArm arm : arms) {
      ArmReport row;
      row.n = n;
      row.mode = mode;
      row.rep_signature = rep.signature;
      row.arm = arm;
      row.trials = trials;
      row.min_residual = 1.0;
      const bool left_pure = arm == AuditArm::pure_pure || arm == AuditArm::pure_generic;
      const bool right_pure = arm == AuditArm::pure_pure || arm == AuditArm::generic_pure;
      for (int t = 0; t < trials; ++t) {
        const std::uint64_t s = derive_seed(seed, stream, static_cast<std::uint64_t>(t));
        row.trial_seeds.push_back(s);
        const Spinor psi = sample_side(rep, lhs, left_pure, derive_seed(s, 1));
        const Spinor phi = sample_side(rep, rhs, right_pure, derive_seed(s, 2));
        const BilinearVector z = vector_bilinear(psi, phi, rep, mode);
        const double scale = z.components.squaredNorm();
        if (scale < 1e-24) {
          ++row.excluded_trivial;
          continue;
        }
        const double rel = std::abs(norm_squared(z, rep.metric)) / scale;
        row.max_residual = std::max(row.max_residual, rel);
        row.min_residual = std::min(row.min_residual, rel);
        if (rel <= report.null_tol)
          ++row.null_count;
        else if (rel > report.fail_tol)
          ++row.nonnull_count;
        else
          ++row.ambiguous_count;
      }
      if (row.trials == row.excluded_trivial) row.min_residual = 0.0;
      report.arms.push_back(std::move(row));
      ++stream;
    }
  }
  return report;
}

}  // namespace spinorlab
