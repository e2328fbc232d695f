#ifndef QCBOUND_STATES_HPP
#define QCBOUND_STATES_HPP

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcbound/linalg.hpp"
#include "qcbound/random.hpp"

namespace qcbound {

/// Tolerance used to validate trace, Hermiticity and positivity of states.
inline constexpr double kStateTol = 1e-9;

/// Trace-one PSD matrix on an ordered list of subsystems.
class DensityMatrix {
 public:
  DensityMatrix(ComplexMatrix mat, Dims dims,
                std::vector<std::string> labels = {})
      : mat_(std::move(mat)), dims_(std::move(dims)), labels_(std::move(labels)) {
    validate();
    mat_ = hermitian_part(mat_);
  }

  /// Single-system state.
  explicit DensityMatrix(ComplexMatrix mat)
      : DensityMatrix(mat, Dims{static_cast<int>(mat.rows())}) {}

  [[nodiscard]] const ComplexMatrix& matrix() const { return mat_; }
  [[nodiscard]] const Dims& dims() const { return dims_; }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] int dim() const { return static_cast<int>(mat_.rows()); }
  [[nodiscard]] int num_systems() const { return static_cast<int>(dims_.size()); }

  [[nodiscard]] DensityMatrix marginal(const std::vector<int>& keep) const {
    auto sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::string> lab;
    if (!labels_.empty()) {
      for (int k : sorted) lab.push_back(labels_.at(k));
    }
    Dims d;
    for (int k : sorted) d.push_back(dims_.at(k));
    return {partial_trace(mat_, dims_, keep), d, lab};
  }

  [[nodiscard]] DensityMatrix permuted(const std::vector<int>& perm) const {
    std::vector<std::string> lab;
    if (!labels_.empty()) {
      for (int k : perm) lab.push_back(labels_.at(k));
    }
    return {permute_subsystems(mat_, dims_, perm), permute_dims(dims_, perm), lab};
  }

  [[nodiscard]] DensityMatrix with_labels(std::vector<std::string> labels) const {
    return {mat_, dims_, std::move(labels)};
  }

 private:
  void validate() const {
    if (!all_finite(mat_)) throw DomainError("DensityMatrix: non-finite entry");
    detail::check_dims(mat_, dims_, "DensityMatrix");
    if (!labels_.empty() && labels_.size() != dims_.size()) {
      throw DimensionError("DensityMatrix: label count does not match dims");
    }
    if (!is_hermitian(mat_, kStateTol)) {
      throw DomainError("DensityMatrix: not Hermitian");
    }
    const double tr = mat_.trace().real();
    if (std::abs(tr - 1.0) > kStateTol) {
      throw DomainError("DensityMatrix: trace " + std::to_string(tr) + " != 1");
    }
    const double lmin = min_eigenvalue(mat_);
    if (lmin < -kStateTol) {
      throw DomainError("DensityMatrix: negative eigenvalue " + std::to_string(lmin));
    }
  }

  ComplexMatrix mat_;
  Dims dims_;
  std::vector<std::string> labels_;
};

inline double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return fidelity(rho.matrix(), sigma.matrix());
}

inline double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return 0.5 * trace_norm(rho.matrix() - sigma.matrix());
}

inline DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  Dims d = a.dims();
  d.insert(d.end(), b.dims().begin(), b.dims().end());
  std::vector<std::string> lab;
  if (!a.labels().empty() && !b.labels().empty()) {
    lab = a.labels();
    lab.insert(lab.end(), b.labels().begin(), b.labels().end());
  }
  return {kron(a.matrix(), b.matrix()), d, lab};
}

inline DensityMatrix maximally_mixed(const Dims& dims) {
  const int n = dim_product(dims);
  return {identity(n) / static_cast<double>(n), dims};
}

inline DensityMatrix pure_state(const ComplexVector& psi, const Dims& dims) {
  const ComplexVector v = psi / psi.norm();
  return {v * v.adjoint(), dims};
}

/// Quantum Fourier transform with entries exp(2 pi i j k / d) / sqrt(d) for
/// 1-based labels j, k (so the 0-based entry (a, b) uses (a+1)(b+1)).
inline ComplexMatrix fourier_matrix(int d) {
  ComplexMatrix u(d, d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      const long long jk = static_cast<long long>(a + 1) * (b + 1) % d;
      const double phase = 2.0 * std::numbers::pi * static_cast<double>(jk) / d;
      u(a, b) = std::polar(norm, phase);
    }
  }
  return u;
}

/// Swap operator on C^d (x) C^d.
inline ComplexMatrix swap_operator(int d) {
  ComplexMatrix f = ComplexMatrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) f(i * d + j, j * d + i) = 1.0;
  }
  return f;
}

inline ComplexVector max_entangled_vector(int d) {
  ComplexVector v = ComplexVector::Zero(d * d);
  for (int i = 0; i < d; ++i) v(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
  return v;
}

/// omega_d = |Omega><Omega| with Omega = d^{-1/2} sum_i |ii>.
inline DensityMatrix max_entangled(int d) {
  if (d < 1) throw DomainError("max_entangled: d must be >= 1");
  const ComplexVector v = max_entangled_vector(d);
  return {v * v.adjoint(), Dims{d, d}, {"A'", "A"}};
}

namespace detail {

// Raw flower matrix, no state validation.
inline ComplexMatrix flower_matrix(int d) {
  const ComplexMatrix u[2] = {identity(d), fourier_matrix(d)};
  const Dims dims{d, 2, d, 2};
  const int n = dim_product(dims);
  ComplexMatrix rho = ComplexMatrix::Zero(n, n);
  auto index = [d](int i, int j) { return ((i * 2 + j) * d + i) * 2 + j; };
  for (int j = 0; j < 2; ++j) {
    for (int l = 0; l < 2; ++l) {
      const ComplexMatrix g = u[l].adjoint() * u[j];
      for (int i = 0; i < d; ++i) {
        for (int k = 0; k < d; ++k) {
          rho(index(i, j), index(k, l)) = g(k, i) / (2.0 * d);
        }
      }
    }
  }
  return rho;
}

}  // namespace detail

/// Flower state on (A, A', B, B') with dims {d, 2, d, 2}:
///   (1/2d) sum_{i,k,j,l} <k|U_l^dag U_j|i> |ii><kk|_AB (x) |jj><ll|_A'B'
/// with U_1 = identity and U_2 the Fourier matrix.
inline DensityMatrix flower_state(int d) {
  if (d < 2) throw DomainError("flower_state: d must be >= 2");
  return {detail::flower_matrix(d), Dims{d, 2, d, 2}, {"A", "A'", "B", "B'"}};
}

namespace detail {

// X = (1/(d sqrt d)) sum u_ij |ij><ji| on the d x d shield.
inline ComplexMatrix pbit_x(int d) {
  const ComplexMatrix u = fourier_matrix(d);
  ComplexMatrix x = ComplexMatrix::Zero(d * d, d * d);
  const double c = 1.0 / (d * std::sqrt(static_cast<double>(d)));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) x(i * d + j, j * d + i) = c * u(i, j);
  }
  return x;
}

// Y = (1/d) sum u_ij |ii><jj|.
inline ComplexMatrix pbit_y(int d) {
  const ComplexMatrix u = fourier_matrix(d);
  ComplexMatrix y = ComplexMatrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) y(i * d + i, j * d + j) = u(i, j) / static_cast<double>(d);
  }
  return y;
}

// Assembles a 4x4 block matrix over the key basis |00>,|01>,|10>,|11> of
// (A', B'), each block acting on the shield (A, B).
inline ComplexMatrix key_blocks(int d, const std::vector<std::pair<std::pair<int, int>, ComplexMatrix>>& blocks) {
  const int s = d * d;
  ComplexMatrix m = ComplexMatrix::Zero(4 * s, 4 * s);
  for (const auto& [rc, b] : blocks) m.block(rc.first * s, rc.second * s, s, s) = b;
  return m;
}

// Block layout (A', B', A, B) -> state layout (A', A, B', B).
inline const std::vector<int> kKeyFirstToPartyOrder{0, 2, 1, 3};

}  // namespace detail

/// p(d) = 1 / (sqrt(d) + 1).
inline double pbit_p(int d) { return 1.0 / (std::sqrt(static_cast<double>(d)) + 1.0); }

/// Approximate private bit rho_d on (A', A, B', B) with dims {2, d, 2, d}.
/// It has positive partial transpose across A'A : B'B.
inline DensityMatrix approx_pbit(int d) {
  if (d < 2) throw DomainError("approx_pbit: d must be >= 2");
  const double p = pbit_p(d);
  const int s = d * d;
  const ComplexMatrix x = detail::pbit_x(d);
  const ComplexMatrix y = detail::pbit_y(d);
  const ComplexMatrix mixed = identity(s) / static_cast<double>(s);
  const ComplexMatrix blocks = detail::key_blocks(
      d, {{{0, 0}, 0.5 * (1 - p) * mixed},
          {{0, 3}, 0.5 * (1 - p) * x},
          {{1, 1}, 0.5 * p * mat_power(y * y.adjoint(), 0.5)},
          {{2, 2}, 0.5 * p * mat_power(y.adjoint() * y, 0.5)},
          {{3, 0}, 0.5 * (1 - p) * x.adjoint()},
          {{3, 3}, 0.5 * (1 - p) * mixed}});
  const Dims key_first{2, 2, d, d};
  return {permute_subsystems(blocks, key_first, detail::kKeyFirstToPartyOrder),
          Dims{2, d, 2, d},
          {"A'", "A", "B'", "B"}};
}

/// alpha_d = (1 - F) / (d (d - 1)), the normalized projector onto the
/// antisymmetric subspace.
inline DensityMatrix antisymmetric_state(int d) {
  if (d < 2) throw DomainError("antisymmetric_state: d must be >= 2");
  return {(identity(d * d) - swap_operator(d)) / static_cast<double>(d * (d - 1)),
          Dims{d, d}};
}

/// Private state U_tw (omega_K (x) sigma) U_tw^dag on (A_k, B_k, A_s, B_s).
class PrivateState {
 public:
  using Twisting = std::vector<std::vector<ComplexMatrix>>;

  PrivateState(Twisting twisting, DensityMatrix shield, int key_dim)
      : twisting_(std::move(twisting)),
        shield_(std::move(shield)),
        key_dim_(key_dim),
        state_(build()) {}

  [[nodiscard]] const DensityMatrix& state() const { return state_; }
  [[nodiscard]] const DensityMatrix& shield() const { return shield_; }
  [[nodiscard]] const Twisting& twisting() const { return twisting_; }
  [[nodiscard]] int key_dim() const { return key_dim_; }

  /// U_tw = sum_ij |i><i| (x) |j><j| (x) U^{ij}.
  [[nodiscard]] ComplexMatrix twisting_unitary() const {
    const int ds = shield_.dim();
    const int K = key_dim_;
    ComplexMatrix u = ComplexMatrix::Zero(K * K * ds, K * K * ds);
    for (int i = 0; i < K; ++i) {
      for (int j = 0; j < K; ++j) {
        const int k = i * K + j;
        u.block(k * ds, k * ds, ds, ds) = twisting_[i][j];
      }
    }
    return u;
  }

  /// U_tw^dag gamma U_tw, which equals omega_K (x) sigma.
  [[nodiscard]] DensityMatrix untwisted() const {
    const ComplexMatrix u = twisting_unitary();
    return {u.adjoint() * state_.matrix() * u, state_.dims(), state_.labels()};
  }

 private:
  DensityMatrix build() const {
    const int K = key_dim_;
    if (K < 1) throw DomainError("private_state: key dimension must be >= 1");
    if (shield_.num_systems() != 2 || shield_.dims()[0] != shield_.dims()[1]) {
      throw DimensionError("private_state: shield must be bipartite with d_As = d_Bs");
    }
    if (static_cast<int>(twisting_.size()) != K) {
      throw DimensionError("private_state: twisting must be a K x K array");
    }
    const int ds = shield_.dim();
    for (const auto& row : twisting_) {
      if (static_cast<int>(row.size()) != K) {
        throw DimensionError("private_state: twisting must be a K x K array");
      }
      for (const auto& u : row) {
        if (u.rows() != ds || u.cols() != ds) {
          throw DimensionError("private_state: twisting unitary has wrong shape");
        }
        if ((u.adjoint() * u - identity(ds)).norm() > 1e-9 * ds) {
          throw DomainError("private_state: twisting entry is not unitary");
        }
      }
    }
    const ComplexMatrix u = twisting_unitary();
    const ComplexMatrix core = kron(max_entangled(K).matrix(), shield_.matrix());
    const int da = shield_.dims()[0];
    return {u * core * u.adjoint(), Dims{K, K, da, da}, {"A_k", "B_k", "A_s", "B_s"}};
  }

  Twisting twisting_;
  DensityMatrix shield_;
  int key_dim_;
  DensityMatrix state_;
};

inline PrivateState private_state(PrivateState::Twisting twisting,
                                  DensityMatrix shield, int key_dim) {
  return {std::move(twisting), std::move(shield), key_dim};
}

/// The private bit gamma_2 approximated by approx_pbit(d). Key systems come
/// first: (A_k, B_k, A_s, B_s) = (A', B', A, B).
inline PrivateState gamma2(int d) {
  if (d < 2) throw DomainError("gamma2: d must be >= 2");
  const int s = d * d;
  const ComplexMatrix twist11 = (static_cast<double>(s) * detail::pbit_x(d)).adjoint();
  PrivateState::Twisting tw{{identity(s), identity(s)}, {identity(s), twist11}};
  return {std::move(tw), maximally_mixed(Dims{d, d}), 2};
}

/// Two-outcome privacy test {Pi, 1 - Pi} for a private state.
struct PrivacyTest {
  ComplexMatrix projector;
  int key_dim = 0;
  Dims dims;
};

inline PrivacyTest privacy_test(const PrivateState& gamma) {
  const ComplexMatrix u = gamma.twisting_unitary();
  const ComplexMatrix core =
      kron(max_entangled(gamma.key_dim()).matrix(), identity(gamma.shield().dim()));
  return {hermitian_part(u * core * u.adjoint()), gamma.key_dim(), gamma.state().dims()};
}

/// Probability tr(Pi rho) of passing the test.
inline double test_probability(const PrivacyTest& t, const DensityMatrix& rho) {
  if (rho.dim() != t.projector.rows()) {
    throw DimensionError("test_probability: dimension mismatch");
  }
  return (t.projector * rho.matrix()).trace().real();
}

/// Hilbert-Schmidt random mixed state G G^dag / tr(G G^dag).
inline DensityMatrix random_state(const Dims& dims, std::uint64_t seed) {
  Rng rng(seed);
  const int n = dim_product(dims);
  const ComplexMatrix g = rng.ginibre(n, n);
  const ComplexMatrix m = g * g.adjoint();
  return {m / m.trace().real(), dims};
}

inline DensityMatrix random_pure(const Dims& dims, std::uint64_t seed) {
  Rng rng(seed);
  return pure_state(rng.gaussian_vector(dim_product(dims)), dims);
}

/// Explicit separable decomposition sigma = sum_k w_k |a_k><a_k| (x) |b_k><b_k|
/// across a bipartition with local dimensions (dim_a, dim_b).
struct SeparableDecomposition {
  int dim_a = 0;
  int dim_b = 0;
  std::vector<double> weights;
  std::vector<ComplexVector> left;
  std::vector<ComplexVector> right;

  void add(double w, ComplexVector a, ComplexVector b) {
    weights.push_back(w);
    left.push_back(std::move(a));
    right.push_back(std::move(b));
  }

  [[nodiscard]] ComplexMatrix reconstruct() const {
    const int n = dim_a * dim_b;
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    for (std::size_t k = 0; k < weights.size(); ++k) {
      const ComplexVector a = left[k] / left[k].norm();
      const ComplexVector b = right[k] / right[k].norm();
      const ComplexVector v = kron(a, b);
      m += weights[k] * v * v.adjoint();
    }
    return m;
  }

  /// True when all weights are nonnegative, every vector has the declared
  /// dimension and the decomposition reproduces target within tol (max entry).
  [[nodiscard]] bool certifies(const ComplexMatrix& target, double tol = 1e-9) const {
    if (target.rows() != dim_a * dim_b) return false;
    if (left.size() != weights.size() || right.size() != weights.size()) return false;
    for (std::size_t k = 0; k < weights.size(); ++k) {
      if (weights[k] < 0.0) return false;
      if (left[k].size() != dim_a || right[k].size() != dim_b) return false;
      if (left[k].norm() == 0.0 || right[k].norm() == 0.0) return false;
    }
    return (reconstruct() - target).cwiseAbs().maxCoeff() <= tol;
  }
};

/// Random separable state: a convex mixture of at most max_terms random pure
/// product states, returned with its decomposition.
inline std::pair<DensityMatrix, SeparableDecomposition> random_separable(
    int dim_a, int dim_b, std::uint64_t seed, int max_terms = 10) {
  Rng rng(seed);
  const int terms = rng.uniform_int(1, max_terms);
  SeparableDecomposition dec{dim_a, dim_b, {}, {}, {}};
  double total = 0.0;
  std::vector<double> w(terms);
  for (auto& x : w) {
    x = rng.uniform() + 1e-3;
    total += x;
  }
  for (int k = 0; k < terms; ++k) {
    ComplexVector a = rng.gaussian_vector(dim_a);
    ComplexVector b = rng.gaussian_vector(dim_b);
    dec.add(w[k] / total, a / a.norm(), b / b.norm());
  }
  return {DensityMatrix(dec.reconstruct(), Dims{dim_a, dim_b}), std::move(dec)};
}

}  // namespace qcbound

#endif  // QCBOUND_STATES_HPP
