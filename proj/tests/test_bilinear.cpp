#include <doctest.h>

#include "spinorlab/bilinear.hpp"
#include "spinorlab/rng.hpp"

using namespace spinorlab;

TEST_SUITE_BEGIN("bilinear");

TEST_CASE("n=2 adjoint bilinear of a chiral spinor with itself is real and null") {
  const GammaRep rep = build_gamma_rep(2, Signature::lorentzian(2));
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const Spinor psi = random_chiral_spinor(rep, Chirality::plus, seed);
    const BilinearVector z = vector_bilinear(psi, psi, rep, PairingMode::lorentzian_adjoint);
    CHECK(z.components.imag().cwiseAbs().maxCoeff() <= 1e-10 * z.components.norm());
    CHECK(std::abs(norm_squared(z, rep.metric)) <= 1e-12 * z.components.squaredNorm());
  }
}

TEST_CASE("degenerate pairing chirality gives identically zero Z (annihilation case)") {
  const GammaRep rep = build_gamma_rep(4, Signature::euclidean(4));
  // At n=4 the transpose pairing is nondegenerate on opposite chiralities, so
  // a same-chirality pair must vanish.
  REQUIRE(nondegenerate_partner(rep, PairingMode::transpose_intertwiner, Chirality::plus) ==
          Chirality::minus);
  const Spinor psi = random_chiral_spinor(rep, Chirality::plus, 4);
  const Spinor phi = random_chiral_spinor(rep, Chirality::plus, 5);
  const BilinearVector z = vector_bilinear(psi, phi, rep, PairingMode::transpose_intertwiner);
  CHECK(max_abs(z.components) <= 1e-12);
}

TEST_CASE("one pure spinor forces nullity at n=4 (both pairings, 200 seeded pairs)") {
  const GammaRep euclid = build_gamma_rep(4, Signature::euclidean(4));
  const GammaRep lorentz = build_gamma_rep(4, Signature::lorentzian(4));
  for (PairingMode mode :
       {PairingMode::transpose_intertwiner, PairingMode::lorentzian_adjoint}) {
    const GammaRep& rep = mode == PairingMode::lorentzian_adjoint ? lorentz : euclid;
    const Chirality partner = nondegenerate_partner(rep, mode, Chirality::plus);
    for (int t = 0; t < 200; ++t) {
      const Spinor psi = random_pure_spinor(rep, Chirality::plus, derive_seed(31, 1, t));
      const Spinor phi = random_chiral_spinor(rep, partner, derive_seed(31, 2, t));
      const BilinearVector z = vector_bilinear(psi, phi, rep, mode);
      const double scale = z.components.squaredNorm();
      REQUIRE(scale > 1e-24);
      CHECK(std::abs(norm_squared(z, rep.metric)) <= 1e-9 * scale);
    }
  }
}

TEST_CASE("generic pairs are non-null at n=4 (Monte-Carlo, both pairings)") {
  const GammaRep euclid = build_gamma_rep(4, Signature::euclidean(4));
  const GammaRep lorentz = build_gamma_rep(4, Signature::lorentzian(4));
  for (PairingMode mode :
       {PairingMode::transpose_intertwiner, PairingMode::lorentzian_adjoint}) {
    const GammaRep& rep = mode == PairingMode::lorentzian_adjoint ? lorentz : euclid;
    const Chirality partner = nondegenerate_partner(rep, mode, Chirality::plus);
    int nonnull = 0;
    const int trials = 200;
    for (int t = 0; t < trials; ++t) {
      const Spinor psi = random_chiral_spinor(rep, Chirality::plus, derive_seed(32, 1, t));
      const Spinor phi = random_chiral_spinor(rep, partner, derive_seed(32, 2, t));
      const BilinearVector z = vector_bilinear(psi, phi, rep, mode);
      if (std::abs(norm_squared(z, rep.metric)) > 1e-6 * z.components.squaredNorm()) ++nonnull;
    }
    CHECK(nonnull >= static_cast<int>(0.99 * trials));
  }
}

TEST_CASE("norm_squared: zero vector, Hermitian diagnostic") {
  const GammaRep rep = build_gamma_rep(2, Signature::euclidean(2));
  BilinearVector z;
  z.mode = PairingMode::transpose_intertwiner;
  z.components = Vector::Zero(4);
  CHECK(norm_squared(z, rep.metric) == Complex(0.0));
  CHECK(norm_squared_hermitian(z, rep.metric) == 0.0);
  z.components << Complex(1, 1), 0, 0, 0;
  CHECK(norm_squared(z, rep.metric) == Complex(0.0, 2.0));  // complex-bilinear, not Hermitian
  CHECK(norm_squared_hermitian(z, rep.metric) == doctest::Approx(2.0));
}

TEST_CASE("bilinearity: linear in phi, conjugate-linear (adjoint) or linear (transpose) in psi") {
  const GammaRep rep = build_gamma_rep(3, Signature::lorentzian(3));
  const Complex c(0.7, -1.3);
  for (PairingMode mode :
       {PairingMode::lorentzian_adjoint, PairingMode::transpose_intertwiner}) {
    const Spinor psi = random_chiral_spinor(rep, Chirality::plus, 61);
    const Spinor phi =
        random_chiral_spinor(rep, nondegenerate_partner(rep, mode, Chirality::plus), 62);
    Spinor psi_scaled = psi, phi_scaled = phi;
    psi_scaled.components *= c;
    phi_scaled.components *= c;
    const Vector base = vector_bilinear(psi, phi, rep, mode).components;
    const Vector rhs = vector_bilinear(psi, phi_scaled, rep, mode).components;
    CHECK(max_abs(Vector(rhs - c * base)) <= 1e-12 * base.norm());
    const Vector lhs = vector_bilinear(psi_scaled, phi, rep, mode).components;
    const Complex expected = mode == PairingMode::lorentzian_adjoint ? std::conj(c) : c;
    CHECK(max_abs(Vector(lhs - expected * base)) <= 1e-12 * base.norm());
  }
}

TEST_CASE("Dirac spinors decompose into chiral-pair contributions (cross-check)") {
  const GammaRep rep = build_gamma_rep(4, Signature::lorentzian(4));
  const Spinor up = random_chiral_spinor(rep, Chirality::plus, 71);
  const Spinor um = random_chiral_spinor(rep, Chirality::minus, 72);
  const Spinor vp = random_chiral_spinor(rep, Chirality::plus, 73);
  const Spinor vm = random_chiral_spinor(rep, Chirality::minus, 74);
  Spinor psi, phi;
  psi.components = up.components + um.components;
  phi.components = vp.components + vm.components;
  // adjoint pairing couples equal chiralities only
  const Vector whole = vector_bilinear(psi, phi, rep, PairingMode::lorentzian_adjoint).components;
  const Vector parts =
      vector_bilinear(up, vp, rep, PairingMode::lorentzian_adjoint).components +
      vector_bilinear(um, vm, rep, PairingMode::lorentzian_adjoint).components;
  CHECK(max_abs(Vector(whole - parts)) <= 1e-12 * whole.norm());
}

TEST_CASE("real_momentum: light-cone membership, phase and scale behavior") {
  const GammaRep rep = build_gamma_rep(2, Signature::lorentzian(2));
  for (std::uint64_t seed : {81u, 82u, 83u}) {
    const Spinor psi = random_chiral_spinor(rep, Chirality::plus, seed);
    const Momentum p = real_momentum(psi, rep);
    CHECK(p.components[0] > 0.0);  // forward light cone
    CHECK(std::abs(minkowski_norm_squared(p)) <= 1e-12);

    Spinor phased = psi;
    phased.components *= std::polar(1.0, 1.234);
    const Momentum p2 = real_momentum(phased, rep);
    CHECK((p2.components - p.components).cwiseAbs().maxCoeff() <= 1e-12);

    Spinor scaled = psi;
    scaled.components *= 3.0;
    const Momentum p3 = real_momentum(scaled, rep);
    CHECK((p3.components - 9.0 * p.components).cwiseAbs().maxCoeff() <= 1e-11);
  }
  const GammaRep euclid = build_gamma_rep(2, Signature::euclidean(2));
  const Spinor psi = random_chiral_spinor(euclid, Chirality::plus, 9);
  CHECK_THROWS_AS(real_momentum(psi, euclid), std::domain_error);
}

TEST_CASE("decompose_momentum: trivial head, null cases, sphere identity") {
  Momentum p;
  p.metric = RealVector(4);
  p.metric << 1, -1, -1, -1;
  p.components = RealVector(4);
  p.components << 1, 0, 0, 0;
  const MomentumSplit s = decompose_momentum(p, 2);
  CHECK(s.msq == doctest::Approx(1.0));
  CHECK(s.extras.size() == 0);
  CHECK(s.sign == +1);

  // n = 4 with nonzero extras: arithmetic identity of the decomposition
  Momentum q;
  q.metric = RealVector(8);
  q.metric << 1, -1, -1, -1, -1, -1, -1, -1;
  q.components = RealVector(8);
  q.components << 5, 1, 2, 0, 1, 1, 2, 3;
  const MomentumSplit sq = decompose_momentum(q, 4);
  CHECK(sq.head_norm_squared == doctest::Approx(20.0));
  CHECK(sq.extras_squared == doctest::Approx(15.0));
  CHECK(sq.msq == doctest::Approx(5.0));
  CHECK(sq.identity_residual <= 1e-12);
  // extras lie on the 3-sphere of radius sqrt(p.p - M^2)
  CHECK(sq.extras.squaredNorm() == doctest::Approx(sq.head_norm_squared - sq.msq));

  Momentum tiny;
  tiny.metric = RealVector(2);
  tiny.components = RealVector(2);
  CHECK_THROWS_AS(decompose_momentum(tiny, 1), std::invalid_argument);
}

TEST_CASE("pure-spinor momenta: M^2 = 0 at n=2, split identity at n=4") {
  const GammaRep rep2 = build_gamma_rep(2, Signature::lorentzian(2));
  const GammaRep rep4 = build_gamma_rep(4, Signature::lorentzian(4));
  for (std::uint64_t seed : {91u, 92u, 93u}) {
    const Spinor psi2 = random_chiral_spinor(rep2, Chirality::plus, seed);
    const MomentumSplit s2 = decompose_momentum(real_momentum(psi2, rep2), 2);
    CHECK(std::abs(s2.msq) <= 1e-10);

    const Spinor psi4 = random_pure_spinor(rep4, Chirality::plus, seed);
    const Momentum p4 = real_momentum(psi4, rep4);
    CHECK(std::abs(minkowski_norm_squared(p4)) <= 1e-10);  // theorem: pure => null
    const MomentumSplit s4 = decompose_momentum(p4, 4);
    CHECK(std::abs(s4.head_norm_squared - (s4.msq + s4.extras_squared)) <= 1e-10);
  }
}

TEST_CASE("theorem audit: n=2 all arms null; n=4 pure arms null, generic arm fails") {
  const AuditReport r2 = theorem_audit(2, 50, 1234);
  for (const auto& arm : r2.arms) {
    const int counted = arm.trials - arm.excluded_trivial;
    CHECK(arm.null_count == counted);
  }
  CHECK(r2.pure_arms_all_null());

  const AuditReport r4 = theorem_audit(4, 50, 1234);
  CHECK(r4.pure_arms_all_null());
  CHECK(r4.generic_fail_rate() >= 0.99);
  // replayability: trial seeds recorded per arm
  for (const auto& arm : r4.arms) CHECK(arm.trial_seeds.size() == 50);
  CHECK_THROWS_AS(theorem_audit(0, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(theorem_audit(6, 10, 1), std::invalid_argument);
}

TEST_SUITE_END();
