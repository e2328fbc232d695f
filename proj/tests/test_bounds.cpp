#include <gtest/gtest.h>

#include "qcbound/bounds.hpp"

using namespace qcbound;

namespace {

// Replacement channel rho -> 1/d_out with its product certificate.
std::pair<ChoiMatrix, SeparableDecomposition> replacement(int din, int dout) {
  SeparableDecomposition dec{din, dout, {}, {}, {}};
  for (int a = 0; a < din; ++a)
    for (int b = 0; b < dout; ++b) {
      dec.add(1.0 / (din * dout), detail::basis_vector(din, a), detail::basis_vector(dout, b));
    }
  const DensityMatrix s(identity(din * dout) / static_cast<double>(din * dout), Dims{din, dout});
  return {ChoiMatrix(s, Dims{din}, Dims{dout}), std::move(dec)};
}

}  // namespace

TEST(BinaryEntropy, EndpointsAndSymmetry) {
  EXPECT_EQ(binary_entropy(0.0), 0.0);
  EXPECT_EQ(binary_entropy(1.0), 0.0);
  EXPECT_DOUBLE_EQ(binary_entropy(0.5), 1.0);
  for (double x : {0.1, 0.25, 0.4}) EXPECT_NEAR(binary_entropy(x), binary_entropy(1 - x), 1e-15);
  EXPECT_THROW(binary_entropy(1.2), DomainError);
}

TEST(LogNegativity, IdentityChannel) {
  for (int d : {2, 3, 4}) {
    const BoundReport r = log_negativity(identity_channel(d));
    EXPECT_NEAR(r.bits(), std::log2(static_cast<double>(d)), 1e-12);
    EXPECT_EQ(r.direction, Direction::Lower);
  }
}

TEST(TranspositionBound, DominatesLogNegativity) {
  for (double p : {0.0, 0.2, 0.5}) {
    const BoundReport r = transposition_bound(amplitude_damping(p));
    EXPECT_GE(r.bits(), r.diagnostics.at("log_negativity") - 1e-6);
    EXPECT_EQ(r.targets, "Q_two_way");
  }
  EXPECT_NEAR(transposition_bound(identity_channel(2)).bits(), 1.0, 1e-5);
}

TEST(Flower, ReportsMatchClosedForms) {
  for (int d : {2, 3, 4, 9}) {
    const auto r = flower_reports(d);
    ASSERT_EQ(r.size(), 3u);
    EXPECT_EQ(r[0].bits(), 1.0 + 0.5 * std::log2(static_cast<double>(d)));
    EXPECT_NEAR(r[1].bits(), std::log2(std::sqrt(static_cast<double>(d)) + 1.0), 1e-15);
    EXPECT_NEAR(r[2].bits(), 2.0, 1e-9);
    EXPECT_EQ(r[2].direction, Direction::Upper);
  }
}

TEST(Flower, LogNegativityEqualsPrintedLowerBound) {
  for (int d : {2, 4}) {
    EXPECT_NEAR(log_negativity(flower_channel(d)).bits(),
                std::log2(std::sqrt(static_cast<double>(d)) + 1.0), 1e-9);
  }
}

TEST(Flower, ReducedCertificateIsSeparableDecomposition) {
  for (int d : {2, 3}) {
    const ChoiMatrix r = reduce_output(flower_channel(d), {0});
    EXPECT_TRUE(flower_reduced_certificate(d).certifies(r.matrix()));
  }
}

TEST(FixedSigma, RequiresCertificate) {
  const DensityMatrix rho = max_entangled(2);
  const auto [sep, dec] = random_separable(2, 2, 3);
  EXPECT_NO_THROW(emax_fixed_sigma(rho, sep, dec));
  EXPECT_THROW(emax_fixed_sigma(rho, maximally_mixed({2, 2}), dec), DomainError);
  // D_max(omega_2 || 1/4) = log2 4.
  const auto [mix, mdec] = replacement(2, 2);
  EXPECT_NEAR(emax_fixed_sigma(rho, mix.state(), mdec).bits(), 2.0, 1e-9);
}

TEST(FixedSigma, UpperBoundsPptRelaxation) {
  for (double p : {0.3, 0.7}) {
    const ChoiMatrix c = depolarizing(2, p);
    const auto [s, cert] = replacement(2, 2);
    const double upper = bmax_upper_fixed(c, s, cert).bits();
    const double lower = bmax_ppt(c).bits();
    EXPECT_LE(lower, upper + 1e-6) << p;
  }
}

TEST(ErrorFloor, FormulaGridAndMonotonicity) {
  for (double alpha : {1.5, 2.0, 10.0, kAlphaInfinity}) {
    const double f = std::isinf(alpha) ? 0.5 : (alpha - 1) / (2 * alpha);
    for (double k : {5.0, 10.0, 40.0}) {
      const double v = error_floor(k, 4.0, 1.0, alpha);
      EXPECT_EQ(v, k > 4.0 ? 1.0 - std::exp2(-f * (k - 4.0)) : 0.0);
    }
  }
  double prev = 0.0;
  for (double alpha : {1.1, 1.5, 3.0, 100.0, kAlphaInfinity}) {
    const double v = error_floor(20.0, 4.0, 1.0, alpha);
    EXPECT_GE(v, prev);
    prev = v;
  }
  prev = 0.0;
  for (double k = 4.0; k < 30.0; k += 1.0) {
    const double v = error_floor(k, 4.0, 1.0, 2.0);
    EXPECT_GE(v, prev);
    prev = v;
  }
  EXPECT_EQ(error_floor(3.0, 4.0, 1.0, 2.0), 0.0);
  EXPECT_THROW(error_floor(3.0, 1.0, 1.0, 1.0), DomainError);
}

TEST(PrivateBitGap, CsIsCertifiedChannel) {
  for (int d : {4, 9}) {
    const auto [cs, cert] = pbit_cs(d);
    EXPECT_TRUE(cert.certifies(cs.matrix()));
    const ComplexMatrix in = partial_trace(cs.matrix(), cs.state().dims(), cs.in_systems());
    EXPECT_LT((in - identity(2 * d) / (2.0 * d)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(PrivateBitGap, UpperAndLowerValues) {
  const PbitGap g4 = pbit_capacity_gap(4);
  const PbitGap g9 = pbit_capacity_gap(9);
  for (const auto& [d, g] : {std::pair{4, &g4}, std::pair{9, &g9}}) {
    const double p = pbit_p(d);
    EXPECT_LE(g->upper.bits(), std::log2(1.0 + p) + 1e-8);
    EXPECT_EQ(g->lower.bits(), 1.0 - binary_entropy(p));
  }
  EXPECT_NEAR(g4.upper.bits(), std::log2(4.0 / 3.0), 1e-8);
  // The gap opens with d: lower rises towards 1, upper falls towards 0.
  EXPECT_GT(g9.lower.bits(), g4.lower.bits());
  EXPECT_LT(g9.upper.bits(), g4.upper.bits());
}

TEST(Appendix, ClosedFormsAtTwentySixteen) {
  const AppendixTable t = appendix_dichotomy(20, 16);
  EXPECT_DOUBLE_EQ(t.esq_tau0_upper, 20.0 * std::log2(17.0 / 16.0));
  EXPECT_DOUBLE_EQ(t.esq_tau1, 0.5 + 10.0 + 10.0 * 4.0);
  EXPECT_DOUBLE_EQ(t.esq_tau1, t.esq_tau1_from_flower);
  EXPECT_DOUBLE_EQ(t.er_tau0_lower, 20.0 * (std::log2(std::sqrt(4.0 / 3.0)) - 0.5));
  EXPECT_TRUE(t.esq_flag);
  // The E_R bounds as printed do not separate: the lower bound is negative.
  EXPECT_LT(t.er_tau0_lower, 0.0);
  EXPECT_FALSE(t.er_flag);
}

TEST(NonLockability, RandomStatesWithinLimit) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const DensityMatrix rho = random_state({2, 2, 2}, 50 + s);
    EXPECT_LE(nonlockability_value(rho, {2}), 2.0 + 1e-8);
    EXPECT_NO_THROW(nonlockability_check(rho, {1}));
  }
}

TEST(NonLockability, SaturatedByMaxEntangledBPrime) {
  // omega_{AB'} (x) tau_B: discarding B' costs exactly 2 log2 d.
  for (int d : {2, 3}) {
    const DensityMatrix ab = tensor(max_entangled(d), random_state({2}, 7));
    // systems (A, B', B)
    EXPECT_NEAR(nonlockability_value(ab, {1}), 2.0 * std::log2(static_cast<double>(d)), 1e-8);
  }
}
