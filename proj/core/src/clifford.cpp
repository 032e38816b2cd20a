#include "spinorlab/clifford.hpp"

#include <stdexcept>
#include <string>

namespace spinorlab {

namespace {

Matrix pauli(int k) {
  Matrix m(2, 2);
  const Complex i(0.0, 1.0);
  switch (k) {
    case 1:
      m << 0, 1, 1, 0;
      break;
    case 2:
      m << 0, -i, i, 0;
      break;
    default:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

std::vector<Matrix> euclidean_generators(int n) {
  std::vector<Matrix> gens = {pauli(1), pauli(2)};
  for (int m = 1; m < n; ++m) {
    const Matrix id = Matrix::Identity(1 << m, 1 << m);
    const Matrix s3 = pauli(3);
    for (auto& g : gens) g = kron(g, s3);
    gens.push_back(kron(id, pauli(1)));
    gens.push_back(kron(id, pauli(2)));
  }
  return gens;
}

// i^k as an exact complex unit.
Complex unit_phase(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

}  // namespace

GammaRep build_gamma_rep(int n, Signature sig) {
  if (n <= 0) throw std::invalid_argument("build_gamma_rep: n must be positive");
  if (n > kMaxHalfDim)
    throw std::invalid_argument("build_gamma_rep: n > " + std::to_string(kMaxHalfDim) +
                                " (spinor dimension beyond the practical bound)");
  if (sig.plus < 0 || sig.minus < 0 || sig.total() != 2 * n)
    throw std::invalid_argument("build_gamma_rep: signature must satisfy plus + minus = 2n");

  GammaRep rep;
  rep.half_dim = n;
  rep.signature = sig;
  rep.generators = euclidean_generators(n);
  rep.metric = RealVector(2 * n);
  const Complex i(0.0, 1.0);
  for (int a = 0; a < 2 * n; ++a) {
    const bool positive = a < sig.plus;
    rep.metric[a] = positive ? 1.0 : -1.0;
    if (!positive) rep.generators[a] *= i;
  }
  rep.volume = volume_element(rep);
  return rep;
}

Matrix volume_element(const GammaRep& rep) {
  Matrix prod = Matrix::Identity(rep.dim(), rep.dim());
  for (const auto& g : rep.generators) prod = prod * g;
  // The ordered Euclidean product is (i sigma_3)^(x n) up to factor ordering,
  // squaring to (-1)^n; each negative-signature generator contributes another
  // i.  The phase (-i)^(n + minus) makes the square +I and the leading
  // diagonal entry +1, i.e. volume = sigma_3^(x n) exactly.
  const Complex phase = unit_phase(-(rep.half_dim + rep.signature.minus));
  return phase * prod;
}

std::pair<Matrix, Matrix> weyl_projectors(const GammaRep& rep) {
  const Matrix id = Matrix::Identity(rep.dim(), rep.dim());
  return {0.5 * (id + rep.volume), 0.5 * (id - rep.volume)};
}

OddExtension extend_to_odd(const GammaRep& rep) {
  OddExtension ext;
  ext.generators = rep.generators;
  ext.generators.push_back(rep.volume);
  ext.metric = RealVector(2 * rep.half_dim + 1);
  ext.metric.head(2 * rep.half_dim) = rep.metric;
  ext.metric[2 * rep.half_dim] = 1.0;  // volume^2 = +I after normalization
  return ext;
}

Intertwiner transpose_intertwiner(const GammaRep& rep) {
  std::vector<int> symmetric;
  std::vector<int> antisymmetric;
  for (int a = 0; a < rep.vector_dim(); ++a) {
    const Matrix& g = rep.generators[a];
    if (max_abs(Matrix(g.transpose() - g)) <= kIdentityTol)
      symmetric.push_back(a);
    else
      antisymmetric.push_back(a);
  }
  // B = product over one symmetry class; moving g_b through k anticommuting
  // factors picks up (-1)^k or (-1)^(k-1), so the antisymmetric class works
  // when its size is even and the symmetric class when its size is odd.
  // Exactly one case applies since the classes partition 2n generators.
  const std::vector<int>& idx =
      (antisymmetric.size() % 2 == 0) ? antisymmetric : symmetric;

  Intertwiner out;
  out.b = Matrix::Identity(rep.dim(), rep.dim());
  for (int a : idx) out.b = out.b * rep.generators[a];
  out.b_inverse = out.b.inverse();
  out.factors = static_cast<int>(idx.size());
  return out;
}

double CliffordCheck::worst() const {
  double w = anticommutator;
  w = std::max(w, volume_anticommute);
  w = std::max(w, volume_square);
  w = std::max(w, projector_idempotent);
  w = std::max(w, projector_orthogonal);
  w = std::max(w, projector_complete);
  w = std::max(w, generator_trace);
  return w;
}

CliffordCheck check_clifford(const GammaRep& rep) {
  CliffordCheck c;
  const int d = rep.dim();
  const Matrix id = Matrix::Identity(d, d);
  for (int a = 0; a < rep.vector_dim(); ++a) {
    const Matrix& ga = rep.generators[a];
    c.generator_trace = std::max(c.generator_trace, std::abs(ga.trace()));
    for (int b = a; b < rep.vector_dim(); ++b) {
      const Matrix& gb = rep.generators[b];
      Matrix anti = ga * gb + gb * ga;
      if (a == b) anti -= 2.0 * rep.metric[a] * id;
      c.anticommutator = std::max(c.anticommutator, max_abs(anti));
    }
    c.volume_anticommute =
        std::max(c.volume_anticommute, max_abs(Matrix(rep.volume * ga + ga * rep.volume)));
  }
  c.volume_square = max_abs(Matrix(rep.volume * rep.volume - id));

  const auto [pp, pm] = weyl_projectors(rep);
  c.projector_idempotent =
      std::max(max_abs(Matrix(pp * pp - pp)), max_abs(Matrix(pm * pm - pm)));
  c.projector_orthogonal = max_abs(Matrix(pp * pm));
  c.projector_complete = max_abs(Matrix(pp + pm - id));
  return c;
}

OddCheck check_odd_extension(const OddExtension& ext) {
  OddCheck c;
  const int count = static_cast<int>(ext.generators.size());
  const int d = static_cast<int>(ext.generators.front().rows());
  const Matrix id = Matrix::Identity(d, d);
  for (int a = 0; a < count; ++a) {
    for (int b = a; b < count; ++b) {
      Matrix anti = ext.generators[a] * ext.generators[b] + ext.generators[b] * ext.generators[a];
      if (a == b) anti -= 2.0 * ext.metric[a] * id;
      c.anticommutator = std::max(c.anticommutator, max_abs(anti));
    }
  }
  // Even-subalgebra generators E_a = g_a g_{2n+1}: their anticommutators must
  // close on scalars, {E_a, E_b} = -2 metric[a] delta_ab I.
  const Matrix& odd = ext.generators.back();
  for (int a = 0; a + 1 < count; ++a) {
    const Matrix ea = ext.generators[a] * odd;
    for (int b = a; b + 1 < count; ++b) {
      const Matrix eb = ext.generators[b] * odd;
      Matrix anti = ea * eb + eb * ea;
      if (a == b) anti += 2.0 * ext.metric[a] * id;
      c.even_closure = std::max(c.even_closure, max_abs(anti));
    }
  }
  return c;
}

}  // namespace spinorlab
