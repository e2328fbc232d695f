#ifndef QCBOUND_CHANNELS_HPP
#define QCBOUND_CHANNELS_HPP

// Channels are carried by their normalized Choi state C_T = (id (x) T)(omega),
// with the input reference systems first and the output systems last.

#include <string>
#include <utility>
#include <vector>

#include "qcbound/states.hpp"

namespace qcbound {

inline constexpr double kChoiTol = 1e-9;

/// Choi matrix of a (possibly non-positive) Hermiticity-preserving map, in the
/// same normalization as ChoiMatrix. Used for maps such as transpose (x) T.
struct HermitianMapChoi {
  ComplexMatrix matrix;
  Dims in_dims;
  Dims out_dims;

  [[nodiscard]] int d_in() const { return dim_product(in_dims); }
  [[nodiscard]] int d_out() const { return dim_product(out_dims); }
  [[nodiscard]] Dims dims() const {
    Dims d = in_dims;
    d.insert(d.end(), out_dims.begin(), out_dims.end());
    return d;
  }
  [[nodiscard]] std::vector<int> in_systems() const {
    std::vector<int> s(in_dims.size());
    std::iota(s.begin(), s.end(), 0);
    return s;
  }
  [[nodiscard]] std::vector<int> out_systems() const {
    std::vector<int> s(out_dims.size());
    std::iota(s.begin(), s.end(), static_cast<int>(in_dims.size()));
    return s;
  }
};

/// Normalized Choi state of a quantum channel.
class ChoiMatrix {
 public:
  ChoiMatrix(DensityMatrix state, Dims in_dims, Dims out_dims)
      : state_(std::move(state)), in_dims_(std::move(in_dims)), out_dims_(std::move(out_dims)) {
    Dims joined = in_dims_;
    joined.insert(joined.end(), out_dims_.begin(), out_dims_.end());
    if (joined != state_.dims()) {
      throw DimensionError("ChoiMatrix: input/output dims do not match state dims");
    }
    const ComplexMatrix marg = partial_trace(state_.matrix(), state_.dims(), in_systems());
    const double defect =
        (marg - identity(d_in()) / static_cast<double>(d_in())).cwiseAbs().maxCoeff();
    if (defect > kChoiTol) {
      throw DomainError("ChoiMatrix: not trace-preserving (marginal defect " +
                        std::to_string(defect) + ")");
    }
  }

  [[nodiscard]] const DensityMatrix& state() const { return state_; }
  [[nodiscard]] const ComplexMatrix& matrix() const { return state_.matrix(); }
  [[nodiscard]] const Dims& in_dims() const { return in_dims_; }
  [[nodiscard]] const Dims& out_dims() const { return out_dims_; }
  [[nodiscard]] int d_in() const { return dim_product(in_dims_); }
  [[nodiscard]] int d_out() const { return dim_product(out_dims_); }

  [[nodiscard]] std::vector<int> in_systems() const {
    std::vector<int> s(in_dims_.size());
    std::iota(s.begin(), s.end(), 0);
    return s;
  }
  [[nodiscard]] std::vector<int> out_systems() const {
    std::vector<int> s(out_dims_.size());
    std::iota(s.begin(), s.end(), static_cast<int>(in_dims_.size()));
    return s;
  }

  [[nodiscard]] HermitianMapChoi as_map() const { return {matrix(), in_dims_, out_dims_}; }

 private:
  DensityMatrix state_;
  Dims in_dims_;
  Dims out_dims_;
};

/// Applies the map with Choi c to subsystem sys of rho; the output systems of
/// the map take the place of sys. Works for any Hermiticity-preserving map.
inline ComplexMatrix apply_partial_map(const HermitianMapChoi& c, const ComplexMatrix& rho,
                                       const Dims& dims, int sys) {
  detail::check_dims(rho, dims, "apply_partial");
  const int n = static_cast<int>(dims.size());
  if (sys < 0 || sys >= n) throw DimensionError("apply_partial: subsystem out of range");
  const int din = c.d_in();
  const int dout = c.d_out();
  if (dims[sys] != din) {
    throw DimensionError("apply_partial: subsystem has dimension " + std::to_string(dims[sys]) +
                         ", channel expects " + std::to_string(din));
  }
  // Move sys to the end, act blockwise, move the output back.
  std::vector<int> perm;
  for (int k = 0; k < n; ++k) {
    if (k != sys) perm.push_back(k);
  }
  perm.push_back(sys);
  const ComplexMatrix r = permute_subsystems(rho, dims, perm);
  const int nr = dim_product(dims) / din;
  ComplexMatrix out = ComplexMatrix::Zero(nr * dout, nr * dout);
  for (int r1 = 0; r1 < nr; ++r1) {
    for (int r2 = 0; r2 < nr; ++r2) {
      auto blk = out.block(r1 * dout, r2 * dout, dout, dout);
      for (int a1 = 0; a1 < din; ++a1) {
        for (int a2 = 0; a2 < din; ++a2) {
          const Complex w = r(r1 * din + a1, r2 * din + a2);
          if (w == Complex(0.0, 0.0)) continue;
          blk += w * c.matrix.block(a1 * dout, a2 * dout, dout, dout);
        }
      }
    }
  }
  out *= static_cast<double>(din);
  // Output currently ordered (rest..., out); restore the original position.
  Dims out_dims;
  for (int k = 0; k < n; ++k) {
    if (k != sys) out_dims.push_back(dims[k]);
  }
  out_dims.push_back(dout);
  std::vector<int> back;
  for (int k = 0; k < n - 1; ++k) {
    if (k == sys) back.push_back(n - 1);
    back.push_back(k);
  }
  if (sys == n - 1) back.push_back(n - 1);
  return permute_subsystems(out, out_dims, back);
}

/// Channel applied to one factor of a multipartite state, identity elsewhere.
/// The output keeps the input's subsystem structure with dims[sys] replaced by
/// the channel's output dims.
inline DensityMatrix apply_partial(const ChoiMatrix& c, const DensityMatrix& rho, int sys) {
  const ComplexMatrix out = apply_partial_map(c.as_map(), rho.matrix(), rho.dims(), sys);
  Dims dims;
  for (int k = 0; k < rho.num_systems(); ++k) {
    if (k == sys) {
      dims.insert(dims.end(), c.out_dims().begin(), c.out_dims().end());
    } else {
      dims.push_back(rho.dims()[k]);
    }
  }
  return {out, dims};
}

/// T(rho) = d_in tr_in[(rho^T (x) 1) C_T].
inline DensityMatrix apply(const ChoiMatrix& c, const DensityMatrix& rho) {
  if (rho.dim() != c.d_in()) throw DimensionError("apply: input dimension mismatch");
  const ComplexMatrix out = apply_partial_map(c.as_map(), rho.matrix(), Dims{rho.dim()}, 0);
  return {out, c.out_dims()};
}

namespace detail {

inline std::pair<Dims, Dims> split_dims(const Dims& dims, int d_in, int d_out) {
  if (dims.size() == 1 && dims[0] == d_in * d_out) return {Dims{d_in}, Dims{d_out}};
  int acc = 1;
  for (std::size_t k = 0; k <= dims.size(); ++k) {
    if (acc == d_in) {
      Dims in(dims.begin(), dims.begin() + static_cast<long>(k));
      Dims out(dims.begin() + static_cast<long>(k), dims.end());
      if (dim_product(out) == d_out && !out.empty() && !in.empty()) return {in, out};
    }
    if (k < dims.size()) acc *= dims[k];
  }
  throw DimensionError("choi_from_state: subsystem dims do not split as d_in x d_out");
}

}  // namespace detail

/// Lifts a state whose input marginal is maximally mixed to the channel it is
/// the Choi state of.
inline ChoiMatrix choi_from_state(const DensityMatrix& rho, int d_in, int d_out) {
  auto [in, out] = detail::split_dims(rho.dims(), d_in, d_out);
  Dims joined = in;
  joined.insert(joined.end(), out.begin(), out.end());
  std::vector<int> in_sys(in.size());
  std::iota(in_sys.begin(), in_sys.end(), 0);
  const ComplexMatrix marg = partial_trace(rho.matrix(), joined, in_sys);
  const double defect = (marg - identity(d_in) / static_cast<double>(d_in)).cwiseAbs().maxCoeff();
  if (defect > 1e-8) {
    throw DomainError("choi_from_state: not trace-preserving (marginal defect " +
                      std::to_string(defect) + ")");
  }
  if (rho.dims() == joined) return {rho, in, out};  // already validated
  return {DensityMatrix(rho.matrix(), joined), in, out};
}

enum class TransposeSide { In, Out };

/// Choi of transpose o T (side Out) or T o transpose (side In). Both are
/// channels exactly when C_T has positive partial transpose.
inline ChoiMatrix compose_transpose(const ChoiMatrix& c, TransposeSide side) {
  const auto sys = side == TransposeSide::Out ? c.out_systems() : c.in_systems();
  const ComplexMatrix t = partial_transpose(c.matrix(), c.state().dims(), sys);
  const double lmin = min_eigenvalue(t);
  if (lmin < -kChoiTol) {
    throw DomainError("compose_transpose: composition not completely positive (min eigenvalue " +
                      std::to_string(lmin) + ")");
  }
  return {DensityMatrix(t, c.state().dims(), c.state().labels()), c.in_dims(), c.out_dims()};
}

/// Choi of transpose o T as a Hermiticity-preserving map (no positivity check).
inline HermitianMapChoi transpose_output_map(const ChoiMatrix& c) {
  return {partial_transpose(c.matrix(), c.state().dims(), c.out_systems()), c.in_dims(),
          c.out_dims()};
}

/// Reduced channel tr_C o T keeping the listed output factors (0-based among
/// the output systems).
inline ChoiMatrix reduce_output(const ChoiMatrix& c, const std::vector<int>& keep_out) {
  const int nout = static_cast<int>(c.out_dims().size());
  auto keep_sorted = detail::normalized_subset(keep_out, nout, "reduce_output");
  if (keep_sorted.empty()) throw DimensionError("reduce_output: must keep an output factor");
  std::vector<int> keep = c.in_systems();
  Dims out;
  for (int k : keep_sorted) {
    keep.push_back(static_cast<int>(c.in_dims().size()) + k);
    out.push_back(c.out_dims()[k]);
  }
  Dims joined = c.in_dims();
  joined.insert(joined.end(), out.begin(), out.end());
  return {DensityMatrix(partial_trace(c.matrix(), c.state().dims(), keep), joined), c.in_dims(),
          out};
}

/// Switch channel T0 (x) P0 + T1 (x) P1 with P_i(rho) = <i|rho|i> |i><i|; the
/// flag qubit is appended to both input and output.
inline ChoiMatrix switch_channel(const ChoiMatrix& c0, const ChoiMatrix& c1) {
  if (c0.d_in() != c1.d_in() || c0.d_out() != c1.d_out()) {
    throw DimensionError("switch_channel: channels must share input and output dimensions");
  }
  const int din = c0.d_in();
  const int dout = c0.d_out();
  ComplexMatrix acc = ComplexMatrix::Zero(4 * din * dout, 4 * din * dout);
  const ChoiMatrix* cs[2] = {&c0, &c1};
  for (int i = 0; i < 2; ++i) {
    ComplexMatrix flag = ComplexMatrix::Zero(4, 4);
    flag(3 * i, 3 * i) = 1.0;  // |ii><ii| on (a, b)
    acc += 0.5 * kron(cs[i]->matrix(), flag);
  }
  // (in, out, a, b) -> (in, a, out, b)
  const ComplexMatrix m = permute_subsystems(acc, Dims{din, dout, 2, 2}, {0, 2, 1, 3});
  return {DensityMatrix(m, Dims{din, 2, dout, 2}), Dims{din, 2}, Dims{dout, 2}};
}

/// Choi of rho -> sum_k K_k rho K_k^dag.
inline ChoiMatrix choi_from_kraus(const std::vector<ComplexMatrix>& kraus) {
  if (kraus.empty()) throw DomainError("choi_from_kraus: no Kraus operators");
  const int din = static_cast<int>(kraus.front().cols());
  const int dout = static_cast<int>(kraus.front().rows());
  const ComplexMatrix omega = max_entangled(din).matrix();
  ComplexMatrix c = ComplexMatrix::Zero(din * dout, din * dout);
  for (const auto& k : kraus) {
    if (k.cols() != din || k.rows() != dout) {
      throw DimensionError("choi_from_kraus: inconsistent Kraus shapes");
    }
    const ComplexMatrix lift = kron(identity(din), k);
    c += lift * omega * lift.adjoint();
  }
  return {DensityMatrix(c, Dims{din, dout}), Dims{din}, Dims{dout}};
}

inline ChoiMatrix identity_channel(int d) {
  return {max_entangled(d), Dims{d}, Dims{d}};
}

namespace detail {

inline void check_probability(double p, const char* op) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError(std::string(op) + ": parameter must lie in [0, 1]");
  }
}

}  // namespace detail

/// rho -> (1 - p) rho + p tr(rho) 1/d.
inline ChoiMatrix depolarizing(int d, double p) {
  detail::check_probability(p, "depolarizing");
  const ComplexMatrix c = (1.0 - p) * max_entangled(d).matrix() +
                          p * identity(d * d) / static_cast<double>(d * d);
  return {DensityMatrix(c, Dims{d, d}), Dims{d}, Dims{d}};
}

/// rho -> (1 - p) rho (+) p |e><e|, erasure flag is the last basis vector of
/// the (d+1)-dimensional output.
inline ChoiMatrix erasure(int d, double p) {
  detail::check_probability(p, "erasure");
  const int dout = d + 1;
  ComplexMatrix c = ComplexMatrix::Zero(d * dout, d * dout);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) c(i * dout + i, j * dout + j) += (1.0 - p) / d;
    c(i * dout + d, i * dout + d) += p / d;
  }
  return {DensityMatrix(c, Dims{d, dout}), Dims{d}, Dims{dout}};
}

inline ChoiMatrix amplitude_damping(double gamma) {
  detail::check_probability(gamma, "amplitude_damping");
  ComplexMatrix k0 = ComplexMatrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - gamma);
  ComplexMatrix k1 = ComplexMatrix::Zero(2, 2);
  k1(0, 1) = std::sqrt(gamma);
  return choi_from_kraus({k0, k1});
}

/// Channel rho -> tr_env(V rho V^dag) for a Haar-random isometry V.
inline ChoiMatrix random_channel(int d_in, int d_out, int d_env, std::uint64_t seed) {
  if (d_in < 1 || d_out < 1 || d_env < 1) throw DomainError("random_channel: dims must be >= 1");
  if (d_out * d_env < d_in) {
    throw DomainError("random_channel: d_out * d_env must be >= d_in for an isometry");
  }
  Rng rng(seed);
  const ComplexMatrix v = haar_isometry(d_out * d_env, d_in, rng);
  const ComplexMatrix lift = kron(identity(d_in), v);
  const ComplexMatrix full = lift * max_entangled(d_in).matrix() * lift.adjoint();
  const ComplexMatrix c = partial_trace(full, Dims{d_in, d_out, d_env}, {0, 1});
  return {DensityMatrix(c, Dims{d_in, d_out}), Dims{d_in}, Dims{d_out}};
}

struct PptCheck {
  bool ppt = false;
  double min_eigenvalue = 0.0;
};

inline PptCheck is_ppt_choi(const ChoiMatrix& c) {
  const double lmin =
      min_eigenvalue(partial_transpose(c.matrix(), c.state().dims(), c.out_systems()));
  return {lmin >= -kChoiTol, lmin};
}

/// Flower channel: the unital channel on C^{2d} whose Choi state is the flower
/// state, input (A, A'), output (B, B').
inline ChoiMatrix flower_channel(int d) { return choi_from_state(flower_state(d), 2 * d, 2 * d); }

/// T_d with Choi state approx_pbit(d), input (A', A), output (B', B).
inline ChoiMatrix pbit_channel(int d) { return choi_from_state(approx_pbit(d), 2 * d, 2 * d); }

}  // namespace qcbound

#endif  // QCBOUND_CHANNELS_HPP
