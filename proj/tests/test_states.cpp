#include <gtest/gtest.h>

#include "qcbound/states.hpp"

using namespace qcbound;

namespace {

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

void expect_state(const DensityMatrix& rho) {
  EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-12);
  EXPECT_GE(min_eigenvalue(rho.matrix()), -1e-12);
  EXPECT_LT(hermiticity_defect(rho.matrix()), 1e-14);
}

}  // namespace

TEST(DensityMatrix, RejectsInvalidInput) {
  ComplexMatrix m = identity(2);
  EXPECT_THROW(DensityMatrix(m, Dims{2}), DomainError);  // trace 2
  ComplexMatrix neg = ComplexMatrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  EXPECT_THROW(DensityMatrix(neg, Dims{2}), DomainError);
  EXPECT_THROW(DensityMatrix(identity(4) / 4.0, Dims{3}), DimensionError);
}

TEST(DensityMatrix, MarginalOfTensorProduct) {
  const DensityMatrix a = random_state({2}, 1);
  const DensityMatrix b = random_state({3}, 2);
  const DensityMatrix ab = tensor(a, b);
  EXPECT_EQ(ab.dims(), (Dims{2, 3}));
  EXPECT_LT(max_abs(ab.marginal({1}).matrix() - b.matrix()), 1e-13);
}

TEST(Families, MaxEntangledHasMixedMarginals) {
  for (int d : {2, 3, 5}) {
    const DensityMatrix w = max_entangled(d);
    expect_state(w);
    EXPECT_LT(max_abs(w.matrix() * w.matrix() - w.matrix()), 1e-13);
    EXPECT_LT(max_abs(w.marginal({0}).matrix() - identity(d) / static_cast<double>(d)), 1e-13);
  }
}

TEST(Families, AntisymmetricStateSwapExpectation) {
  for (int d : {2, 3, 4}) {
    const DensityMatrix a = antisymmetric_state(d);
    expect_state(a);
    EXPECT_NEAR((swap_operator(d) * a.matrix()).trace().real(), -1.0, 1e-12);
  }
}

TEST(Flower, IsAStateWithMixedInputMarginal) {
  for (int d : {2, 3, 4}) {
    const DensityMatrix f = flower_state(d);
    EXPECT_EQ(f.dims(), (Dims{d, 2, d, 2}));
    expect_state(f);
    const ComplexMatrix in = f.marginal({0, 1}).matrix();
    EXPECT_LT(max_abs(in - identity(2 * d) / (2.0 * d)), 1e-13);
  }
}

TEST(Flower, NegativityIsRootDPlusOne) {
  for (int d : {2, 4, 9}) {
    const DensityMatrix f = flower_state(d);
    const double n = trace_norm(partial_transpose(f.matrix(), f.dims(), {2, 3}));
    EXPECT_NEAR(n, std::sqrt(static_cast<double>(d)) + 1.0, 1e-8) << "d=" << d;
  }
}

TEST(Flower, DiscardingBPrimeLeavesDiagonalState) {
  // rho_{AA'B} = sum_{i,j} |i j i><i j i| / (2d), written out directly.
  for (int d : {2, 3}) {
    const ComplexMatrix r = flower_state(d).marginal({0, 1, 2}).matrix();
    ComplexMatrix expect = ComplexMatrix::Zero(2 * d * d, 2 * d * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < 2; ++j) {
        const int k = (i * 2 + j) * d + i;
        expect(k, k) = 1.0 / (2.0 * d);
      }
    EXPECT_LT(max_abs(r - expect), 1e-13);
  }
}

TEST(PrivateBit, PptAndClose) {
  for (int d : {4, 9}) {
    const DensityMatrix rho = approx_pbit(d);
    expect_state(rho);
    // Transpose B' and B: systems 2 and 3 of (A', A, B', B).
    EXPECT_GE(min_eigenvalue(partial_transpose(rho.matrix(), rho.dims(), {2, 3})), -1e-10);
    const DensityMatrix g = gamma2(d).state().permuted({0, 2, 1, 3});
    EXPECT_LE(trace_norm(rho.matrix() - g.matrix()), 2.0 * pbit_p(d) + 1e-9);
  }
}

TEST(PrivateBit, Gamma2UntwistsToProduct) {
  const PrivateState g = gamma2(3);
  expect_state(g.state());
  const ComplexMatrix expect = kron(max_entangled(2).matrix(), g.shield().matrix());
  EXPECT_LT(max_abs(g.untwisted().matrix() - expect), 1e-12);
}

TEST(PrivacyTest, PrivateStatePassesSeparableBounded) {
  const PrivateState g = gamma2(2);
  const PrivacyTest t = privacy_test(g);
  EXPECT_LT(max_abs(t.projector * t.projector - t.projector), 1e-12);
  EXPECT_NEAR(test_probability(t, g.state()), 1.0, 1e-12);
  // Separable across (A_k A_s) : (B_k B_s): pass probability <= 1/K.
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto [sep, dec] = random_separable(4, 4, 100 + s);
    // (A_k A_s, B_k B_s) -> (A_k, B_k, A_s, B_s)
    const DensityMatrix in{permute_subsystems(sep.matrix(), {2, 2, 2, 2}, {0, 2, 1, 3}),
                           Dims{2, 2, 2, 2}};
    EXPECT_LE(test_probability(t, in), 0.5 + 1e-9);
  }
}

TEST(PrivacyTest, FidelityLowerBound) {
  const PrivateState g = gamma2(2);
  const PrivacyTest t = privacy_test(g);
  for (std::uint64_t s = 0; s < 20; ++s) {
    const DensityMatrix rho = random_state({2, 2, 2, 2}, 200 + s);
    EXPECT_GE(test_probability(t, rho), fidelity(rho, g.state()) - 1e-9);
  }
}

TEST(Separable, DecompositionCertifiesItsState) {
  const auto [rho, dec] = random_separable(2, 3, 7);
  expect_state(rho);
  EXPECT_TRUE(dec.certifies(rho.matrix()));
  EXPECT_FALSE(dec.certifies(max_entangled(2).matrix()));
  EXPECT_GE(min_eigenvalue(partial_transpose(rho.matrix(), {2, 3}, {1})), -1e-12);
}

TEST(Random, SeedDeterminesState) {
  EXPECT_EQ(random_state({2, 2}, 5).matrix(), random_state({2, 2}, 5).matrix());
  EXPECT_NE(random_state({2, 2}, 5).matrix(), random_state({2, 2}, 6).matrix());
  expect_state(random_pure({3}, 1));
}

TEST(Distances, FuchsVanDeGraaf) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const DensityMatrix a = random_state({3}, 300 + s);
    const DensityMatrix b = random_state({3}, 400 + s);
    const double f = fidelity(a, b);
    const double t = trace_distance(a, b);
    EXPECT_LE(1.0 - std::sqrt(f), t + 1e-10);
    EXPECT_LE(t, std::sqrt(1.0 - f) + 1e-10);
  }
}
