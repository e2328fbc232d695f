#include <gtest/gtest.h>

#include "qcbound/linalg.hpp"
#include "qcbound/random.hpp"

using namespace qcbound;

namespace {

ComplexMatrix random_hermitian(int n, Rng& rng) {
  const ComplexMatrix g = rng.ginibre(n, n);
  return 0.5 * (g + g.adjoint());
}

ComplexMatrix random_psd(int n, Rng& rng) {
  const ComplexMatrix g = rng.ginibre(n, n);
  ComplexMatrix p = g * g.adjoint();
  return p / p.trace().real();
}

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(Kron, MatchesIndexFormula) {
  Rng rng(1);
  const ComplexMatrix a = rng.ginibre(2, 3);
  const ComplexMatrix b = rng.ginibre(3, 2);
  const ComplexMatrix k = kron(a, b);
  ASSERT_EQ(k.rows(), 6);
  ASSERT_EQ(k.cols(), 6);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j)
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 2; ++c) EXPECT_EQ(k(i * 3 + r, j * 2 + c), a(i, j) * b(r, c));
}

TEST(PartialTrace, ProductStateMarginals) {
  Rng rng(2);
  const ComplexMatrix a = random_psd(2, rng);
  const ComplexMatrix b = random_psd(3, rng);
  const ComplexMatrix c = random_psd(2, rng);
  const ComplexMatrix abc = kron(kron(a, b), c);
  const Dims dims{2, 3, 2};
  EXPECT_LT(max_abs(partial_trace(abc, dims, {0}) - a), 1e-13);
  EXPECT_LT(max_abs(partial_trace(abc, dims, {1}) - b), 1e-13);
  EXPECT_LT(max_abs(partial_trace(abc, dims, {0, 2}) - kron(a, c)), 1e-13);
  // keep order is normalized: {2, 0} is the same as {0, 2}
  EXPECT_LT(max_abs(partial_trace(abc, dims, {2, 0}) - kron(a, c)), 1e-13);
}

TEST(PartialTrace, PreservesTraceOnRandomInputs) {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    const Dims dims{2, 3, 2};
    const ComplexMatrix m = rng.ginibre(12, 12);
    for (const std::vector<int>& keep : {std::vector<int>{0}, {1}, {0, 1}, {1, 2}}) {
      EXPECT_NEAR(std::abs(partial_trace(m, dims, keep).trace() - m.trace()), 0.0, 1e-11);
    }
  }
}

TEST(Permute, RoundTripAndSwap) {
  Rng rng(4);
  const Dims dims{2, 3, 4};
  const ComplexMatrix m = rng.ginibre(24, 24);
  const std::vector<int> perm{2, 0, 1};
  const ComplexMatrix p = permute_subsystems(m, dims, perm);
  // inverse permutation: result position of input system k
  const std::vector<int> inv{1, 2, 0};
  EXPECT_LT(max_abs(permute_subsystems(p, permute_dims(dims, perm), inv) - m), 1e-14);

  const ComplexMatrix a = rng.ginibre(2, 2);
  const ComplexMatrix b = rng.ginibre(3, 3);
  EXPECT_LT(max_abs(permute_subsystems(kron(a, b), {2, 3}, {1, 0}) - kron(b, a)), 1e-14);
  EXPECT_THROW(permute_subsystems(m, dims, {0, 0, 1}), DimensionError);
}

TEST(PartialTranspose, SwapBecomesUnnormalizedMaxEntangled) {
  // (F)^{T_B} = d |Omega><Omega| with |Omega> = sum_i |ii>.
  for (int d : {2, 3}) {
    ComplexMatrix f = ComplexMatrix::Zero(d * d, d * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) f(i * d + j, j * d + i) = 1.0;
    ComplexVector omega = ComplexVector::Zero(d * d);
    for (int i = 0; i < d; ++i) omega(i * d + i) = 1.0;
    EXPECT_LT(max_abs(partial_transpose(f, {d, d}, {1}) - omega * omega.adjoint()), 1e-14);
  }
}

TEST(PartialTranspose, InvolutionAndFullTranspose) {
  Rng rng(5);
  const ComplexMatrix m = rng.ginibre(6, 6);
  const Dims dims{2, 3};
  EXPECT_LT(max_abs(partial_transpose(partial_transpose(m, dims, {0}), dims, {0}) - m), 1e-15);
  EXPECT_LT(max_abs(partial_transpose(m, dims, {0, 1}) - m.transpose()), 1e-15);
  // T_A then T_B equals full transpose.
  EXPECT_LT(max_abs(partial_transpose(partial_transpose(m, dims, {0}), dims, {1}) - m.transpose()),
            1e-15);
}

TEST(Spectral, TraceNormAgreesWithSingularValues) {
  Rng rng(6);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix h = random_hermitian(5, rng);
    const double by_eig = herm_eig(h).eigenvalues.cwiseAbs().sum();
    Eigen::BDCSVD<ComplexMatrix> svd(h);
    EXPECT_NEAR(trace_norm(h), svd.singularValues().sum(), 1e-11);
    EXPECT_NEAR(trace_norm(h), by_eig, 1e-11);
    EXPECT_NEAR(op_norm(h), svd.singularValues().maxCoeff(), 1e-11);
  }
}

TEST(Spectral, MatrixPowerComposes) {
  Rng rng(7);
  const ComplexMatrix p = random_psd(4, rng);
  const ComplexMatrix s = mat_power(p, 0.5);
  EXPECT_LT(max_abs(s * s - p), 1e-12);
  const ComplexMatrix inv = mat_power(p, -1.0);
  EXPECT_LT(max_abs(inv * p - identity(4)), 1e-9);
}

TEST(Spectral, PseudoInverseOnSupport) {
  ComplexMatrix p = ComplexMatrix::Zero(3, 3);
  p(0, 0) = 0.5;
  p(1, 1) = 0.5;
  const ComplexMatrix inv = mat_power(p, -1.0);
  EXPECT_NEAR(inv(0, 0).real(), 2.0, 1e-12);
  EXPECT_NEAR(std::abs(inv(2, 2)), 0.0, 1e-15);
  EXPECT_LT(max_abs(support_projector(p) - p * 2.0), 1e-12);
}

TEST(Fidelity, PureStatesAndIdentity) {
  Rng rng(8);
  for (int t = 0; t < 10; ++t) {
    ComplexVector a = rng.gaussian_vector(3);
    ComplexVector b = rng.gaussian_vector(3);
    a.normalize();
    b.normalize();
    EXPECT_NEAR(fidelity(a * a.adjoint(), b * b.adjoint()), std::norm(a.dot(b)), 1e-9);
    const ComplexMatrix r = random_psd(3, rng);
    EXPECT_NEAR(fidelity(r, r), 1.0, 1e-9);
  }
}

TEST(Random, HaarUnitaryIsUnitaryAndSeeded) {
  Rng a(9), b(9);
  const ComplexMatrix u = haar_unitary(4, a);
  EXPECT_LT(max_abs(u.adjoint() * u - identity(4)), 1e-12);
  EXPECT_EQ(u, haar_unitary(4, b));
  Rng c(10);
  const ComplexMatrix v = haar_isometry(6, 3, c);
  EXPECT_LT(max_abs(v.adjoint() * v - identity(3)), 1e-12);
}

TEST(Errors, DimensionMismatchesThrow) {
  const ComplexMatrix m = identity(4);
  EXPECT_THROW(partial_trace(m, {3, 2}, {0}), DimensionError);
  EXPECT_THROW(partial_transpose(m, {2, 2}, {2}), DimensionError);
}
