#include <gtest/gtest.h>

#include "qcbound/channels.hpp"

using namespace qcbound;

namespace {

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

ComplexMatrix ket_bra(int d, int i, int j) {
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  m(i, j) = 1.0;
  return m;
}

void expect_channel(const ChoiMatrix& c) {
  EXPECT_GE(min_eigenvalue(c.matrix()), -1e-12);
  const ComplexMatrix in = partial_trace(c.matrix(), c.state().dims(), c.in_systems());
  EXPECT_LT(max_abs(in - identity(c.d_in()) / static_cast<double>(c.d_in())), 1e-12);
}

}  // namespace

TEST(Apply, IdentityChannelIsIdentity) {
  const DensityMatrix rho = random_state({3}, 1);
  EXPECT_LT(max_abs(apply(identity_channel(3), rho).matrix() - rho.matrix()), 1e-13);
}

TEST(Apply, DepolarizingMatchesFormula) {
  const DensityMatrix rho = random_state({3}, 2);
  const double p = 0.3;
  const ComplexMatrix expect = (1 - p) * rho.matrix() + p * identity(3) / 3.0;
  EXPECT_LT(max_abs(apply(depolarizing(3, p), rho).matrix() - expect), 1e-13);
}

TEST(Apply, ErasureMatchesFormula) {
  const DensityMatrix rho = random_state({2}, 3);
  const double p = 0.25;
  ComplexMatrix expect = ComplexMatrix::Zero(3, 3);
  expect.topLeftCorner(2, 2) = (1 - p) * rho.matrix();
  expect(2, 2) = p;
  EXPECT_LT(max_abs(apply(erasure(2, p), rho).matrix() - expect), 1e-13);
}

TEST(Apply, AmplitudeDampingDecaysExcitedState) {
  const double g = 0.37;
  const DensityMatrix one{ket_bra(2, 1, 1), Dims{2}};
  const ComplexMatrix out = apply(amplitude_damping(g), one).matrix();
  EXPECT_NEAR(out(0, 0).real(), g, 1e-13);
  EXPECT_NEAR(out(1, 1).real(), 1 - g, 1e-13);
  // Coherences shrink by sqrt(1 - g).
  ComplexMatrix plus = ComplexMatrix::Constant(2, 2, 0.5);
  const ComplexMatrix o2 = apply(amplitude_damping(g), DensityMatrix(plus, Dims{2})).matrix();
  EXPECT_NEAR(o2(0, 1).real(), 0.5 * std::sqrt(1 - g), 1e-13);
}

TEST(Apply, KrausAndChoiAgree) {
  // A unitary channel from its Kraus operator vs. direct conjugation.
  Rng rng(4);
  const ComplexMatrix u = haar_unitary(3, rng);
  const ChoiMatrix c = choi_from_kraus({u});
  const DensityMatrix rho = random_state({3}, 5);
  EXPECT_LT(max_abs(apply(c, rho).matrix() - u * rho.matrix() * u.adjoint()), 1e-12);
}

TEST(ApplyPartial, OnMaxEntangledGivesChoi) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const ChoiMatrix c = random_channel(2, 3, 2, 10 + s);
    expect_channel(c);
    const DensityMatrix out = apply_partial(c, max_entangled(2), 1);
    EXPECT_LT(max_abs(out.matrix() - c.matrix()), 1e-12);
  }
}

TEST(ApplyPartial, PreservesTraceAndOtherMarginal) {
  const ChoiMatrix c = random_channel(3, 2, 3, 20);
  const DensityMatrix rho = random_state({2, 3, 2}, 21);
  const DensityMatrix out = apply_partial(c, rho, 1);
  EXPECT_EQ(out.dims(), (Dims{2, 2, 2}));
  EXPECT_LT(max_abs(out.marginal({0, 2}).matrix() - rho.marginal({0, 2}).matrix()), 1e-12);
}

TEST(Construction, ChoiFromStateRejectsNonTracePreserving) {
  const DensityMatrix r = random_state({2, 2}, 30);
  EXPECT_THROW(choi_from_state(r, 2, 2), DomainError);
  EXPECT_NO_THROW(choi_from_state(max_entangled(2), 2, 2));
}

TEST(Construction, ParameterRangeChecked) {
  EXPECT_THROW(depolarizing(2, 1.5), DomainError);
  EXPECT_THROW(erasure(2, -0.1), DomainError);
  EXPECT_THROW(amplitude_damping(2.0), DomainError);
}

TEST(Families, StandardChannelsAreChannels) {
  expect_channel(depolarizing(3, 0.4));
  expect_channel(erasure(3, 0.4));
  expect_channel(amplitude_damping(0.2));
  expect_channel(flower_channel(3));
  expect_channel(pbit_channel(4));
  expect_channel(switch_channel(identity_channel(2), depolarizing(2, 0.5)));
}

TEST(Families, PptStatus) {
  EXPECT_FALSE(is_ppt_choi(identity_channel(2)).ppt);
  EXPECT_FALSE(is_ppt_choi(flower_channel(2)).ppt);
  EXPECT_TRUE(is_ppt_choi(pbit_channel(4)).ppt);
  // Qubit depolarizing is PPT (and EB) from p = 2/3.
  EXPECT_TRUE(is_ppt_choi(depolarizing(2, 2.0 / 3.0)).ppt);
  EXPECT_FALSE(is_ppt_choi(depolarizing(2, 0.6)).ppt);
}

TEST(Compose, TransposeOfPptChannelIsChannel) {
  const ChoiMatrix c = compose_transpose(pbit_channel(4), TransposeSide::Out);
  expect_channel(c);
  EXPECT_THROW(compose_transpose(identity_channel(2), TransposeSide::Out), DomainError);
  // transpose_output_map of the identity is the swap / d.
  const HermitianMapChoi t = transpose_output_map(identity_channel(2));
  EXPECT_LT(max_abs(t.matrix - swap_operator(2) / 2.0), 1e-14);
}

TEST(Reduce, FlowerReducedChannelIsPpt) {
  for (int d : {2, 3}) {
    const ChoiMatrix r = reduce_output(flower_channel(d), {0});
    EXPECT_EQ(r.out_dims(), (Dims{d}));
    expect_channel(r);
    EXPECT_TRUE(is_ppt_choi(r).ppt);
  }
}

TEST(Switch, ActsAccordingToFlag) {
  const ChoiMatrix s = switch_channel(identity_channel(2), depolarizing(2, 1.0));
  const DensityMatrix rho = random_state({2}, 40);
  for (int flag : {0, 1}) {
    const DensityMatrix in = tensor(rho, DensityMatrix(ket_bra(2, flag, flag), Dims{2}));
    const ComplexMatrix out = apply(s, in).matrix();
    const ComplexMatrix expect =
        kron(flag == 0 ? rho.matrix() : ComplexMatrix(identity(2) / 2.0), ket_bra(2, flag, flag));
    EXPECT_LT(max_abs(out - expect), 1e-13);
  }
}
