#include <doctest.h>

#include "spinorlab/rng.hpp"
#include "spinorlab/spinor.hpp"

using namespace spinorlab;

namespace {

// Independent rank oracle: column rank of the constraint matrix via
// full-pivot LU rather than the SVD path the implementation uses.
int kernel_dim_oracle(const Spinor& psi, const GammaRep& rep) {
  Matrix m(rep.dim(), rep.vector_dim());
  for (int a = 0; a < rep.vector_dim(); ++a) m.col(a) = rep.generators[a] * psi.components;
  Eigen::FullPivLU<Matrix> lu(m);
  lu.setThreshold(1e-9);
  return rep.vector_dim() - static_cast<int>(lu.rank());
}

}  // namespace

TEST_SUITE_BEGIN("spinor");

TEST_CASE("chiral basis spinors reach the maximal null plane (d = n)") {
  for (int n : {1, 2, 3, 4}) {
    const GammaRep rep = build_gamma_rep(n, Signature::euclidean(n));
    for (Chirality c : {Chirality::plus, Chirality::minus}) {
      const Spinor ref = reference_pure_spinor(rep, c);
      const NullPlane plane = null_plane_of(ref, rep);
      CAPTURE(n);
      CHECK(plane.dim == n);
      CHECK(plane.dim == kernel_dim_oracle(ref, rep));
    }
  }
}

TEST_CASE("null plane vectors are null and mutually orthogonal") {
  const GammaRep rep = build_gamma_rep(4, Signature::euclidean(4));
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const Spinor psi = random_pure_spinor(rep, Chirality::plus, seed);
    const NullPlane plane = null_plane_of(psi, rep);
    CHECK(plane.dim == 4);
    CHECK(plane.max_null_residual <= 1e-9);
    CHECK(plane.max_ortho_residual <= 1e-9);
  }
}

TEST_CASE("n=4: sum of two far chiral basis spinors is not pure") {
  const GammaRep rep = build_gamma_rep(4, Signature::euclidean(4));
  Spinor psi;
  psi.components = Vector::Zero(16);
  psi.components[0] = 1.0;   // volume eigenvalue +1
  psi.components[15] = 1.0;  // also +1: a valid Weyl spinor
  psi.chirality = Chirality::plus;
  const PurityResult r = is_pure(psi, rep);
  CHECK_FALSE(r.pure);
  CHECK(r.plane.dim < 4);
  CHECK(r.plane.dim == kernel_dim_oracle(psi, rep));
}

TEST_CASE("every chiral spinor with n <= 2 is pure") {
  for (int n : {1, 2}) {
    const GammaRep rep = build_gamma_rep(n, Signature::euclidean(n));
    for (int t = 0; t < 100; ++t) {
      const Chirality c = t % 2 ? Chirality::plus : Chirality::minus;
      const Spinor psi = random_chiral_spinor(rep, c, derive_seed(99, n, t));
      CHECK(is_pure(psi, rep).pure);
    }
  }
}

TEST_CASE("n=4: the purity quadric psi^T B psi is the single constraint (brute-force oracle)") {
  const GammaRep rep = build_gamma_rep(4, Signature::euclidean(4));
  const Intertwiner bi = transpose_intertwiner(rep);
  auto quadric = [&](const Spinor& s) {
    return std::abs(Complex(s.components.transpose() * bi.b * s.components));
  };
  int generic_nonpure = 0;
  for (int t = 0; t < 50; ++t) {
    const Spinor pure = random_pure_spinor(rep, Chirality::plus, derive_seed(7, 1, t));
    CHECK(quadric(pure) <= 1e-10);
    CHECK(is_pure(pure, rep).pure);

    const Spinor generic = random_chiral_spinor(rep, Chirality::plus, derive_seed(7, 2, t));
    const bool pure_by_rank = is_pure(generic, rep).pure;
    const bool pure_by_quadric = quadric(generic) <= 1e-10;
    CHECK(pure_by_rank == pure_by_quadric);
    if (!pure_by_rank) ++generic_nonpure;
  }
  CHECK(generic_nonpure == 50);  // measure-zero variety
}

TEST_CASE("n=4: constraint map has rank 1 at pure points (codimension oracle)") {
  const GammaRep rep = build_gamma_rep(4, Signature::euclidean(4));
  const Intertwiner bi = transpose_intertwiner(rep);
  for (std::uint64_t seed : {11u, 12u, 13u}) {
    const Spinor psi = random_pure_spinor(rep, Chirality::plus, seed);
    // gradient of Q(psi) = psi^T B psi is 2 B psi (B symmetric on this block)
    const Vector grad = (bi.b + bi.b.transpose()) * psi.components;
    CHECK(grad.norm() > 1e-3);  // nonvanishing differential: codimension 1
  }
  CHECK(purity_constraint_count(4) == 1);
}

TEST_CASE("purity constraint counts match the classification") {
  CHECK(purity_constraint_count(1) == 0);
  CHECK(purity_constraint_count(2) == 0);
  CHECK(purity_constraint_count(3) == 0);
  CHECK(purity_constraint_count(4) == 1);
  CHECK(purity_constraint_count(5) == 10);
  CHECK_THROWS_AS(purity_constraint_count(0), std::invalid_argument);
  CHECK_THROWS_AS(purity_constraint_count(6), std::invalid_argument);
}

TEST_CASE("random_pure_spinor: deterministic in the seed, 100/100 pure at n=4") {
  const GammaRep rep = build_gamma_rep(4, Signature::euclidean(4));
  const Spinor a = random_pure_spinor(rep, Chirality::plus, 42);
  const Spinor b = random_pure_spinor(rep, Chirality::plus, 42);
  CHECK(max_abs(Vector(a.components - b.components)) == 0.0);
  for (int t = 0; t < 100; ++t) {
    const Spinor psi =
        random_pure_spinor(rep, t % 2 ? Chirality::plus : Chirality::minus, derive_seed(5, 0, t));
    CHECK(is_pure(psi, rep).pure);
  }
}

TEST_CASE("Spin invariance: null plane dimension is orbit-invariant") {
  const GammaRep rep = build_gamma_rep(4, Signature::euclidean(4));
  for (std::uint64_t seed : {21u, 22u}) {
    for (bool pure : {true, false}) {
      Spinor psi = pure ? random_pure_spinor(rep, Chirality::plus, seed)
                        : random_chiral_spinor(rep, Chirality::plus, seed);
      const int d0 = null_plane_of(psi, rep).dim;
      const Matrix s = random_spin_rotation(rep, derive_seed(seed, 3));
      Spinor rotated;
      rotated.components = s * psi.components;
      rotated.chirality = psi.chirality;
      CHECK(null_plane_of(rotated, rep).dim == d0);
    }
  }
}

TEST_CASE("scale invariance of purity") {
  const GammaRep rep = build_gamma_rep(4, Signature::euclidean(4));
  const Spinor psi = random_pure_spinor(rep, Chirality::plus, 77);
  for (Complex c : {Complex(2.5, 0.0), Complex(0.0, -3.0), Complex(1e-4, 1e-4)}) {
    Spinor scaled;
    scaled.components = c * psi.components;
    scaled.chirality = psi.chirality;
    CHECK(is_pure(scaled, rep).pure);
  }
}

TEST_CASE("error paths: zero spinor, untagged purity query, ambiguous rank") {
  const GammaRep rep = build_gamma_rep(4, Signature::euclidean(4));
  Spinor zero;
  zero.components = Vector::Zero(16);
  zero.chirality = Chirality::plus;
  CHECK_THROWS_AS(null_plane_of(zero, rep), std::invalid_argument);

  Spinor untagged = random_chiral_spinor(rep, Chirality::plus, 5);
  untagged.chirality = Chirality::none;
  CHECK_THROWS_AS(is_pure(untagged, rep), std::invalid_argument);

  // Force a singular value into the guard band by choosing tol just below a
  // known nonzero relative singular value of a generic constraint matrix.
  const Spinor generic = random_chiral_spinor(rep, Chirality::plus, 6);
  Matrix m(rep.dim(), rep.vector_dim());
  for (int a = 0; a < rep.vector_dim(); ++a) m.col(a) = rep.generators[a] * generic.components;
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  const double rel_min = sv[sv.size() - 1] / sv[0];
  REQUIRE(rel_min > 0.0);
  CHECK_THROWS_AS(null_plane_of(generic, rep, rel_min / 5.0), RankAmbiguityError);
}

TEST_SUITE_END();
