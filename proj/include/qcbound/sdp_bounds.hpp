#ifndef QCBOUND_SDP_BOUNDS_HPP
#define QCBOUND_SDP_BOUNDS_HPP

// The Hermitian SDPs behind the bounds: trace norm, the PPT relaxations of
// E_max and B_max, and the diamond norm of a Hermiticity-preserving map.

#include <string>
#include <utility>
#include <vector>

#include "qcbound/channels.hpp"
#include "qcbound/report.hpp"
#include "qcbound/sdp.hpp"

namespace qcbound {

namespace detail {

inline void require_optimal(const sdp::Solution& s, const std::string& op) {
  if (!s.optimal()) {
    throw NumericalError(op + ": solver finished with status " + sdp::to_string(s.status) + "\n" +
                         sdp::format_log(s.log));
  }
}

// Entry map of the partial transpose: (M^{T_S})_{pq} = M_{pt(p,q)}.
class PartialTransposeIndex {
 public:
  PartialTransposeIndex(const Dims& dims, const std::vector<int>& sys)
      : dims_(dims), strides_(strides(dims)), flip_(dims.size(), false) {
    for (int s : normalized_subset(sys, static_cast<int>(dims.size()), "partial transpose")) {
      flip_[s] = true;
    }
  }

  [[nodiscard]] std::pair<int, int> operator()(int p, int q) const {
    int pp = 0, qq = 0;
    for (std::size_t k = 0; k < dims_.size(); ++k) {
      const int dp = (p / strides_[k]) % dims_[k];
      const int dq = (q / strides_[k]) % dims_[k];
      pp += (flip_[k] ? dq : dp) * strides_[k];
      qq += (flip_[k] ? dp : dq) * strides_[k];
    }
    return {pp, qq};
  }

 private:
  Dims dims_;
  std::vector<int> strides_;
  std::vector<bool> flip_;
};

// Adds coeff * tr_out(H)_{a a'} (component) to f, for H on d_in x d_out.
inline void add_partial_trace_out(const sdp::HermitianVar& h, sdp::Functional& f, int a, int ap,
                                  bool imag, int d_out, double coeff) {
  for (int b = 0; b < d_out; ++b) {
    sdp::add_component(h, f, a * d_out + b, ap * d_out + b, imag, coeff);
  }
}

// X1 = M - rho >= 0 and X2 = M^{T_S} >= 0, tied by X2 - X1^{T_S} = rho^{T_S}.
inline void add_ppt_domination(sdp::Problem& pr, const sdp::HermitianVar& x1,
                               const sdp::HermitianVar& x2, const ComplexMatrix& rho,
                               const Dims& dims, const std::vector<int>& sys) {
  const int n = static_cast<int>(rho.rows());
  const PartialTransposeIndex pt(dims, sys);
  const ComplexMatrix rpt = partial_transpose(rho, dims, sys);
  sdp::EntryConstraintSet::for_each(n, [&](int p, int q, bool imag) {
    sdp::Functional f;
    sdp::add_component(x2, f, p, q, imag, 1.0);
    const auto [pp, qq] = pt(p, q);
    sdp::add_component(x1, f, pp, qq, imag, -1.0);
    pr.add_constraint(std::move(f), sdp::component(rpt, p, q, imag));
  });
}

}  // namespace detail

/// ||h||_1 as min tr(P + N) s.t. P - N = h, P, N >= 0. Used to cross-check
/// the solver against the eigenvalue formula.
inline sdp::Solution trace_norm_sdp(const ComplexMatrix& h, const sdp::Options& opts = {}) {
  if (!is_hermitian(h)) throw DomainError("trace_norm_sdp: matrix is not Hermitian");
  const int n = static_cast<int>(h.rows());
  sdp::Problem pr;
  const auto p = sdp::add_hermitian(pr, n);
  const auto m = sdp::add_hermitian(pr, n);
  p.add_trace(pr.objective, 1.0);
  m.add_trace(pr.objective, 1.0);
  sdp::EntryConstraintSet::for_each(n, [&](int a, int b, bool imag) {
    sdp::Functional f;
    sdp::add_component(p, f, a, b, imag, 1.0);
    sdp::add_component(m, f, a, b, imag, -1.0);
    pr.add_constraint(std::move(f), sdp::component(h, a, b, imag));
  });
  return sdp::solve(pr, opts);
}

/// PPT relaxation of E_max(rho): log2 min{tr M : M >= rho, M^{T_B} >= 0},
/// with B the listed systems. A lower bound on E_max; certificate M*.
inline BoundReport dmax_over_ppt(const DensityMatrix& rho, const std::vector<int>& b_systems,
                                 const sdp::Options& opts = {}) {
  if (rho.num_systems() < 2) throw DimensionError("dmax_over_ppt: state must be bipartite");
  const int n = rho.dim();
  sdp::Problem pr;
  const auto x1 = sdp::add_hermitian(pr, n);
  const auto x2 = sdp::add_hermitian(pr, n);
  x1.add_trace(pr.objective, 1.0);
  detail::add_ppt_domination(pr, x1, x2, rho.matrix(), rho.dims(), b_systems);
  const sdp::Solution s = sdp::solve(pr, opts);
  detail::require_optimal(s, "dmax_over_ppt");

  BoundReport r;
  r.bound_name = "emax-ppt";
  r.targets = "E_max";
  r.direction = Direction::Lower;
  r.method = Method::Sdp;
  r.relaxation = "ppt";
  r.certificate = sdp::extract_hermitian(s.primal_matrix[x1.block]) + rho.matrix();
  r.value_bits = bits_value(std::log2(1.0 + s.primal_value));
  add_solver_diagnostics(r, s);
  r.diagnostics["trace"] = 1.0 + s.primal_value;
  return r;
}

/// PPT relaxation of B_max(T): log2 min{tr M : M >= C_T, M^{T_B} >= 0,
/// tr_B M = (tr M / d_A) 1}, with t = tr M carried as its own 1x1 block.
/// The certificate M*/tr M* is a PPT Choi state with the right marginal.
inline BoundReport bmax_ppt(const ChoiMatrix& c, const sdp::Options& opts = {}) {
  const int din = c.d_in();
  const int dout = c.d_out();
  const int n = din * dout;
  sdp::Problem pr;
  const auto x1 = sdp::add_hermitian(pr, n);
  const auto x2 = sdp::add_hermitian(pr, n);
  const int tb = pr.add_block(1);
  pr.objective.push_back({tb, 0, 0, 1.0});
  detail::add_ppt_domination(pr, x1, x2, c.matrix(), c.state().dims(), c.out_systems());
  // tr_B X1 - (t/d_A) 1 = -tr_B C_T = -1/d_A
  sdp::EntryConstraintSet::for_each(din, [&](int a, int ap, bool imag) {
    sdp::Functional f;
    detail::add_partial_trace_out(x1, f, a, ap, imag, dout, 1.0);
    const bool diag = a == ap && !imag;
    if (diag) f.push_back({tb, 0, 0, -1.0 / din});
    pr.add_constraint(std::move(f), diag ? -1.0 / din : 0.0);
  });
  const sdp::Solution s = sdp::solve(pr, opts);
  detail::require_optimal(s, "bmax_ppt");

  const double t = s.primal_matrix[tb](0, 0);
  BoundReport r;
  r.bound_name = "bmax-ppt";
  r.targets = "B_max";
  r.direction = Direction::Lower;
  r.method = Method::Sdp;
  r.relaxation = "ppt";
  r.certificate = (sdp::extract_hermitian(s.primal_matrix[x1.block]) + c.matrix()) / t;
  r.value_bits = bits_value(std::log2(t));
  add_solver_diagnostics(r, s);
  r.diagnostics["trace"] = t;
  return r;
}

enum class DiamondForm { Auto, Watrous, Compact };

namespace detail {

// Block form: min (t0 + t1)/2 s.t. [[Y0, -J], [-J^dag, Y1]] >= 0 and
// t_i 1 >= tr_out Y_i. Handles any linear map.
inline sdp::Solution diamond_watrous(const ComplexMatrix& j, int din, int dout,
                                     const sdp::Options& opts) {
  const int n = din * dout;
  sdp::Problem pr;
  const auto k = sdp::add_hermitian(pr, 2 * n);
  const auto s0 = sdp::add_hermitian(pr, din);
  const auto s1 = sdp::add_hermitian(pr, din);
  const int t0 = pr.add_block(1);
  const int t1 = pr.add_block(1);
  pr.objective.push_back({t0, 0, 0, 0.5});
  pr.objective.push_back({t1, 0, 0, 0.5});
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      for (bool imag : {false, true}) {
        sdp::Functional f;
        sdp::add_component(k, f, p, n + q, imag, 1.0);
        pr.add_constraint(std::move(f), -sdp::component(j, p, q, imag));
      }
    }
  }
  const sdp::HermitianVar* slack[2] = {&s0, &s1};
  const int tblock[2] = {t0, t1};
  for (int side = 0; side < 2; ++side) {
    const int off = side * n;
    sdp::EntryConstraintSet::for_each(din, [&](int a, int ap, bool imag) {
      sdp::Functional f;
      sdp::add_component(*slack[side], f, a, ap, imag, 1.0);
      for (int b = 0; b < dout; ++b) {
        sdp::add_component(k, f, off + a * dout + b, off + ap * dout + b, imag, 1.0);
      }
      const bool diag = a == ap && !imag;
      if (diag) f.push_back({tblock[side], 0, 0, -1.0});
      pr.add_constraint(std::move(f), 0.0);
    });
  }
  return sdp::solve(pr, opts);
}

// Hermitian J only: min ||tr_out(P + N)||_inf s.t. P - N = J, P, N >= 0.
// Half the constraints of the block form.
inline sdp::Solution diamond_compact(const ComplexMatrix& j, int din, int dout,
                                     const sdp::Options& opts) {
  const int n = din * dout;
  sdp::Problem pr;
  const auto p = sdp::add_hermitian(pr, n);
  const auto m = sdp::add_hermitian(pr, n);
  const auto s = sdp::add_hermitian(pr, din);
  const int tb = pr.add_block(1);
  pr.objective.push_back({tb, 0, 0, 1.0});
  sdp::EntryConstraintSet::for_each(n, [&](int a, int b, bool imag) {
    sdp::Functional f;
    sdp::add_component(p, f, a, b, imag, 1.0);
    sdp::add_component(m, f, a, b, imag, -1.0);
    pr.add_constraint(std::move(f), sdp::component(j, a, b, imag));
  });
  sdp::EntryConstraintSet::for_each(din, [&](int a, int ap, bool imag) {
    sdp::Functional f;
    sdp::add_component(s, f, a, ap, imag, 1.0);
    add_partial_trace_out(p, f, a, ap, imag, dout, 1.0);
    add_partial_trace_out(m, f, a, ap, imag, dout, 1.0);
    const bool diag = a == ap && !imag;
    if (diag) f.push_back({tb, 0, 0, -1.0});
    pr.add_constraint(std::move(f), 0.0);
  });
  return sdp::solve(pr, opts);
}

}  // namespace detail

/// Largest Choi dimension for which DiamondForm::Auto uses the block form.
inline constexpr int kWatrousMaxDim = 16;

/// Diamond norm of the map with normalized Choi `map` (J = d_in * matrix).
/// value_bits is log2 of the norm, clamped at 0; the norm itself is in
/// diagnostics["norm"].
inline BoundReport diamond_norm(const HermitianMapChoi& map, DiamondForm form = DiamondForm::Auto,
                                const sdp::Options& opts = {}) {
  const int din = map.d_in();
  const int dout = map.d_out();
  if (map.matrix.rows() != din * dout || map.matrix.cols() != din * dout) {
    throw DimensionError("diamond_norm: Choi shape does not match dims");
  }
  if (!is_hermitian(map.matrix)) {
    throw DomainError("diamond_norm: Choi is not Hermitian (map not Hermiticity-preserving)");
  }
  const ComplexMatrix j = static_cast<double>(din) * hermitian_part(map.matrix);
  if (form == DiamondForm::Auto) {
    form = din * dout <= kWatrousMaxDim ? DiamondForm::Watrous : DiamondForm::Compact;
  }
  const sdp::Solution s = form == DiamondForm::Watrous ? detail::diamond_watrous(j, din, dout, opts)
                                                       : detail::diamond_compact(j, din, dout, opts);
  detail::require_optimal(s, "diamond_norm");
  BoundReport r;
  r.bound_name = "diamond-norm";
  r.targets = "diamond_norm";
  r.direction = Direction::Exact;
  r.method = Method::Sdp;
  const double norm = s.primal_value;
  r.value_bits = ExtendedReal::finite(std::max(0.0, std::log2(norm)));
  add_solver_diagnostics(r, s);
  r.diagnostics["norm"] = norm;
  r.diagnostics["watrous_form"] = form == DiamondForm::Watrous ? 1.0 : 0.0;
  return r;
}

inline BoundReport diamond_norm(const ChoiMatrix& c, DiamondForm form = DiamondForm::Auto,
                                const sdp::Options& opts = {}) {
  return diamond_norm(c.as_map(), form, opts);
}

}  // namespace qcbound

#endif  // QCBOUND_SDP_BOUNDS_HPP
