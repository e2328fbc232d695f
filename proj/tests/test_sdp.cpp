#include <gtest/gtest.h>

#include "qcbound/channels.hpp"
#include "qcbound/sdp_bounds.hpp"

using namespace qcbound;
using namespace qcbound::sdp;

namespace {

RealMatrix random_symmetric(int n, Rng& rng) {
  RealMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.normal();
  return 0.5 * (g + g.transpose());
}

Functional dense_functional(int block, const RealMatrix& c) {
  Functional f;
  for (int i = 0; i < c.rows(); ++i)
    for (int j = i; j < c.cols(); ++j) f.push_back({block, i, j, i == j ? c(i, j) : 2.0 * c(i, j)});
  return f;
}

Functional trace_functional(int block, int n) {
  Functional f;
  for (int i = 0; i < n; ++i) f.push_back({block, i, i, 1.0});
  return f;
}

// min or max <C, X> over density matrices: the extreme eigenvalues of C.
Problem eigen_problem(const RealMatrix& c, Sense sense) {
  Problem p;
  const int b = p.add_block(static_cast<int>(c.rows()));
  p.objective = dense_functional(b, c);
  p.add_constraint(trace_functional(b, static_cast<int>(c.rows())), 1.0);
  p.sense = sense;
  return p;
}

void expect_certificate(const Problem& p, const Solution& s, double tol) {
  // Primal feasibility and PSD, checked outside the solver.
  for (const auto& c : p.constraints) EXPECT_NEAR(evaluate(c.terms, s.primal_matrix), c.rhs, tol);
  for (const auto& x : s.primal_matrix) {
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(x);
    EXPECT_GE(es.eigenvalues().minCoeff(), -tol);
  }
  EXPECT_NEAR(evaluate(p.objective, s.primal_matrix), s.primal_value, tol);
}

}  // namespace

TEST(Solver, MinimumEigenvalueAsSdp) {
  Rng rng(1);
  for (int t = 0; t < 10; ++t) {
    const RealMatrix c = random_symmetric(5, rng);
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(c);
    const Problem p = eigen_problem(c, Sense::Minimize);
    const Solution s = solve(p);
    ASSERT_TRUE(s.optimal()) << format_log(s.log);
    EXPECT_NEAR(s.primal_value, es.eigenvalues().minCoeff(), 1e-6);
    EXPECT_NEAR(s.dual_value, es.eigenvalues().minCoeff(), 1e-6);
    expect_certificate(p, s, 1e-6);
  }
}

TEST(Solver, MaximizeReportsInOwnSense) {
  Rng rng(2);
  const RealMatrix c = random_symmetric(4, rng);
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(c);
  const Solution s = solve(eigen_problem(c, Sense::Maximize));
  ASSERT_TRUE(s.optimal());
  EXPECT_NEAR(s.primal_value, es.eigenvalues().maxCoeff(), 1e-6);
  // Weak duality for a maximization: dual >= primal (up to the tolerance).
  EXPECT_GE(s.dual_value, s.primal_value - 1e-7);
}

TEST(Solver, LinearProgramInOneByOneBlocks) {
  // min x + 2y s.t. x + y = 1, x - y <= 0.5 (slack z): optimum x = 0.75.
  Problem p;
  const int x = p.add_block(1), y = p.add_block(1), z = p.add_block(1);
  p.objective = {{x, 0, 0, 1.0}, {y, 0, 0, 2.0}};
  p.add_constraint({{x, 0, 0, 1.0}, {y, 0, 0, 1.0}}, 1.0);
  p.add_constraint({{x, 0, 0, 1.0}, {y, 0, 0, -1.0}, {z, 0, 0, 1.0}}, 0.5);
  const Solution s = solve(p);
  ASSERT_TRUE(s.optimal());
  EXPECT_NEAR(s.primal_value, 0.75 + 2 * 0.25, 1e-7);
  EXPECT_NEAR(s.primal_matrix[x](0, 0), 0.75, 1e-6);
}

TEST(Solver, DetectsPrimalInfeasibility) {
  Problem p;
  const int b = p.add_block(2);
  p.objective = trace_functional(b, 2);
  p.add_constraint(trace_functional(b, 2), -1.0);
  const Solution s = solve(p);
  EXPECT_EQ(s.status, Status::Infeasible);
  EXPECT_FALSE(s.optimal());
}

TEST(Solver, UnboundedIsNotOptimal) {
  Problem p;
  const int x = p.add_block(1), y = p.add_block(1);
  p.objective = {{x, 0, 0, -1.0}};
  p.add_constraint({{x, 0, 0, 1.0}, {y, 0, 0, -1.0}}, 0.0);
  const Solution s = solve(p);
  EXPECT_FALSE(s.optimal());
}

TEST(Solver, ValidatesProblemShape) {
  Problem p;
  p.add_block(2);
  p.add_constraint({{0, 2, 0, 1.0}}, 1.0);
  EXPECT_THROW(solve(p), DimensionError);
  EXPECT_THROW(p.add_block(0), DimensionError);
}

TEST(Solver, LogRecordsIterations) {
  Rng rng(3);
  const Solution s = solve(eigen_problem(random_symmetric(3, rng), Sense::Minimize));
  // One record per iterate, the starting point included.
  EXPECT_EQ(static_cast<int>(s.log.size()), s.iterations + 1);
  EXPECT_FALSE(format_log(s.log).empty());
  EXPECT_EQ(to_string(Status::DualInfeasible), "dual_infeasible");
}

TEST(Embedding, RoundTripAndDoubledSpectrum) {
  Rng rng(4);
  const ComplexMatrix g = rng.ginibre(3, 3);
  const ComplexMatrix h = 0.5 * (g + g.adjoint());
  const RealMatrix y = embed_hermitian(h);
  EXPECT_LT((extract_hermitian(y) - h).cwiseAbs().maxCoeff(), 1e-14);
  Eigen::SelfAdjointEigenSolver<RealMatrix> ey(y);
  const RealVector eh = herm_eig(h).eigenvalues;
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(ey.eigenvalues()(2 * i), eh(i), 1e-12);
    EXPECT_NEAR(ey.eigenvalues()(2 * i + 1), eh(i), 1e-12);
  }
  EXPECT_THROW(embed_hermitian(g), DomainError);
}

TEST(Embedding, ComplexMinimumEigenvalue) {
  // min tr(H X) over Hermitian density matrices X.
  Rng rng(5);
  const ComplexMatrix g = rng.ginibre(3, 3);
  const ComplexMatrix h = 0.5 * (g + g.adjoint());
  Problem p;
  const HermitianVar x = add_hermitian(p, 3);
  EntryConstraintSet::for_each(3, [&](int a, int b, bool imag) {
    // tr(H X) = sum_a H_aa X_aa + 2 sum_{a<b} (Re H_ab Re X_ab + Im H_ab Im X_ab)
    const double w = a == b ? 1.0 : 2.0;
    add_component(x, p.objective, a, b, imag, w * component(h, a, b, imag));
  });
  Functional tr;
  x.add_trace(tr, 1.0);
  p.add_constraint(tr, 1.0);
  const Solution s = solve(p);
  ASSERT_TRUE(s.optimal());
  EXPECT_NEAR(s.primal_value, min_eigenvalue(h), 1e-6);
  const ComplexMatrix xs = extract_hermitian(s.primal_matrix[x.block]);
  EXPECT_NEAR((h * xs).trace().real(), min_eigenvalue(h), 1e-6);
}

TEST(TraceNorm, SdpMatchesEigenvalues) {
  Rng rng(6);
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix g = rng.ginibre(4, 4);
    const ComplexMatrix h = 0.5 * (g + g.adjoint());
    const Solution s = trace_norm_sdp(h);
    ASSERT_TRUE(s.optimal());
    EXPECT_NEAR(s.primal_value, trace_norm(h), 1e-6);
  }
}

TEST(Diamond, IdentityAndTranspose) {
  for (DiamondForm f : {DiamondForm::Watrous, DiamondForm::Compact}) {
    EXPECT_NEAR(diamond_norm(identity_channel(2), f).diagnostics.at("norm"), 1.0, 1e-6);
    EXPECT_NEAR(diamond_norm(transpose_output_map(identity_channel(2)), f).diagnostics.at("norm"),
                2.0, 1e-5);
  }
}

TEST(Diamond, CovariantChannelAttainedAtMaxEntangledInput) {
  // For depolarizing channels the transposed map is covariant, so its diamond
  // norm is attained at the maximally entangled input: ||C^{T_B}||_1.
  for (double p : {0.1, 0.4}) {
    const ChoiMatrix c = depolarizing(2, p);
    const double neg = trace_norm(transpose_output_map(c).matrix);
    EXPECT_NEAR(diamond_norm(transpose_output_map(c)).diagnostics.at("norm"), neg, 1e-5);
  }
}

TEST(Diamond, ChannelsHaveNormOne) {
  for (std::uint64_t s = 0; s < 3; ++s) {
    const BoundReport r = diamond_norm(random_channel(2, 2, 2, 40 + s));
    EXPECT_NEAR(r.diagnostics.at("norm"), 1.0, 1e-6);
    EXPECT_NEAR(r.bits(), 0.0, 1e-6);
  }
}

TEST(PptRelaxation, KnownValues) {
  EXPECT_NEAR(dmax_over_ppt(max_entangled(2), {1}).bits(), 1.0, 1e-5);
  const DensityMatrix prod = tensor(random_state({2}, 1), random_state({2}, 2));
  EXPECT_NEAR(dmax_over_ppt(prod, {1}).bits(), 0.0, 1e-6);
  EXPECT_NEAR(bmax_ppt(identity_channel(2)).bits(), 1.0, 1e-5);
  EXPECT_NEAR(bmax_ppt(depolarizing(2, 1.0)).bits(), 0.0, 1e-6);
}

TEST(PptRelaxation, CertificateIsFeasible) {
  const DensityMatrix rho = random_state({2, 2}, 9);
  const BoundReport r = dmax_over_ppt(rho, {1});
  ASSERT_TRUE(r.certificate.has_value());
  const ComplexMatrix& m = *r.certificate;
  EXPECT_GE(min_eigenvalue(m - rho.matrix()), -1e-6);
  EXPECT_GE(min_eigenvalue(partial_transpose(m, {2, 2}, {1})), -1e-6);
  EXPECT_NEAR(std::log2(m.trace().real()), r.bits(), 1e-6);
  // Relaxation is below the fixed-sigma value for the separable product of marginals.
  const DensityMatrix marg = tensor(rho.marginal({0}), rho.marginal({1}));
  EXPECT_LE(r.bits(), d_max(rho, marg).value() + 1e-6);
}
