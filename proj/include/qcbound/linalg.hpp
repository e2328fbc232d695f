#ifndef QCBOUND_LINALG_HPP
#define QCBOUND_LINALG_HPP

// Dense complex linear algebra on tensor-product spaces.
//
// Subsystems are 0-based and ordered left to right, so for dims {d0, d1, d2}
// the basis vector |i0 i1 i2> sits at index (i0 * d1 + i1) * d2 + i2.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "qcbound/error.hpp"

namespace qcbound {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Dims = std::vector<int>;

/// Relative cutoff below which eigenvalues count as zero in support,
/// pseudo-inverse and fractional-power computations.
inline constexpr double kSupportCutoff = 1e-10;
/// Relative tolerance for Hermiticity checks.
inline constexpr double kHermitianTol = 1e-9;

inline int dim_product(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<>());
}

inline bool all_finite(const ComplexMatrix& m) { return m.allFinite(); }

inline ComplexMatrix identity(int d) { return ComplexMatrix::Identity(d, d); }

namespace detail {

inline void check_square(const ComplexMatrix& m, const char* op) {
  if (m.rows() != m.cols()) {
    throw DimensionError(std::string(op) + ": matrix is " +
                         std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected square");
  }
}

inline void check_dims(const ComplexMatrix& m, const Dims& dims,
                       const char* op) {
  check_square(m, op);
  for (int d : dims) {
    if (d < 1) throw DimensionError(std::string(op) + ": subsystem dimension < 1");
  }
  if (dim_product(dims) != m.rows()) {
    throw DimensionError(std::string(op) + ": product of subsystem dims (" +
                         std::to_string(dim_product(dims)) +
                         ") does not match matrix dimension (" +
                         std::to_string(m.rows()) + ")");
  }
}

inline std::vector<int> strides(const Dims& dims) {
  std::vector<int> s(dims.size(), 1);
  for (int k = static_cast<int>(dims.size()) - 2; k >= 0; --k) {
    s[k] = s[k + 1] * dims[k + 1];
  }
  return s;
}

// Offsets of every multi-index over the listed subsystems, in row-major order
// of the listed subsystems.
inline std::vector<int> offsets(const Dims& dims, const std::vector<int>& sys) {
  const auto st = strides(dims);
  std::vector<int> out{0};
  for (int k : sys) {
    std::vector<int> next;
    next.reserve(out.size() * dims[k]);
    for (int base : out) {
      for (int i = 0; i < dims[k]; ++i) next.push_back(base + i * st[k]);
    }
    out = std::move(next);
  }
  return out;
}

inline std::vector<int> normalized_subset(const std::vector<int>& sys, int n,
                                          const char* op) {
  std::vector<int> s = sys;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw DimensionError(std::string(op) + ": repeated subsystem index");
  }
  for (int k : s) {
    if (k < 0 || k >= n) {
      throw DimensionError(std::string(op) + ": subsystem index " +
                           std::to_string(k) + " out of range");
    }
  }
  return s;
}

inline std::vector<int> complement(const std::vector<int>& sys, int n) {
  std::vector<int> rest;
  for (int k = 0; k < n; ++k) {
    if (!std::binary_search(sys.begin(), sys.end(), k)) rest.push_back(k);
  }
  return rest;
}

}  // namespace detail

/// Kronecker product a (x) b.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

inline ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

/// Reorders tensor factors: subsystem k of the result is subsystem perm[k] of
/// the input.
inline ComplexMatrix permute_subsystems(const ComplexMatrix& m,
                                        const Dims& dims,
                                        const std::vector<int>& perm) {
  detail::check_dims(m, dims, "permute_subsystems");
  const int n = static_cast<int>(dims.size());
  if (static_cast<int>(perm.size()) != n ||
      detail::normalized_subset(perm, n, "permute_subsystems").size() !=
          perm.size()) {
    throw DimensionError("permute_subsystems: not a permutation");
  }
  const std::vector<int> map = detail::offsets(dims, perm);
  const Eigen::Index N = m.rows();
  ComplexMatrix out(N, N);
  for (Eigen::Index j = 0; j < N; ++j) {
    for (Eigen::Index i = 0; i < N; ++i) out(i, j) = m(map[i], map[j]);
  }
  return out;
}

inline Dims permute_dims(const Dims& dims, const std::vector<int>& perm) {
  Dims out;
  for (int k : perm) out.push_back(dims.at(k));
  return out;
}

/// Partial trace keeping the listed subsystems, in their original order.
inline ComplexMatrix partial_trace(const ComplexMatrix& m, const Dims& dims,
                                   const std::vector<int>& keep) {
  detail::check_dims(m, dims, "partial_trace");
  const int n = static_cast<int>(dims.size());
  const auto kept = detail::normalized_subset(keep, n, "partial_trace");
  const auto traced = detail::complement(kept, n);
  const auto off_keep = detail::offsets(dims, kept);
  const auto off_trace = detail::offsets(dims, traced);
  const Eigen::Index K = static_cast<Eigen::Index>(off_keep.size());
  ComplexMatrix out = ComplexMatrix::Zero(K, K);
  for (Eigen::Index c = 0; c < K; ++c) {
    for (Eigen::Index r = 0; r < K; ++r) {
      Complex acc{0.0, 0.0};
      for (int t : off_trace) acc += m(off_keep[r] + t, off_keep[c] + t);
      out(r, c) = acc;
    }
  }
  return out;
}

/// Transposes the listed tensor factors in the computational basis.
inline ComplexMatrix partial_transpose(const ComplexMatrix& m,
                                       const Dims& dims,
                                       const std::vector<int>& sys) {
  detail::check_dims(m, dims, "partial_transpose");
  const int n = static_cast<int>(dims.size());
  const auto tsys = detail::normalized_subset(sys, n, "partial_transpose");
  const auto rest = detail::complement(tsys, n);
  const auto off_s = detail::offsets(dims, tsys);
  const auto off_r = detail::offsets(dims, rest);
  ComplexMatrix out(m.rows(), m.cols());
  for (int s1 : off_s) {
    for (int s2 : off_s) {
      for (int r1 : off_r) {
        for (int r2 : off_r) out(s2 + r1, s1 + r2) = m(s1 + r1, s2 + r2);
      }
    }
  }
  return out;
}

inline double hermiticity_defect(const ComplexMatrix& m) {
  return (m - m.adjoint()).norm();
}

inline bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTol) {
  return m.rows() == m.cols() &&
         hermiticity_defect(m) <= tol * std::max(1.0, m.norm());
}

inline ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  return 0.5 * (m + m.adjoint());
}

/// Eigendecomposition of a Hermitian matrix; eigenvalues ascending.
struct HermitianEig {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;

  [[nodiscard]] ComplexMatrix reconstruct() const {
    return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() *
           eigenvectors.adjoint();
  }
  [[nodiscard]] double max_abs() const {
    return eigenvalues.size() == 0 ? 0.0 : eigenvalues.cwiseAbs().maxCoeff();
  }
};

inline HermitianEig herm_eig(const ComplexMatrix& m) {
  detail::check_square(m, "herm_eig");
  if (!is_hermitian(m)) {
    throw DomainError("herm_eig: matrix is not Hermitian (defect " +
                      std::to_string(hermiticity_defect(m)) + ")");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(m));
  if (es.info() != Eigen::Success) {
    throw NumericalError("herm_eig: eigensolver did not converge");
  }
  return {es.eigenvalues(), es.eigenvectors()};
}

/// f applied to the spectrum of a Hermitian matrix.
inline ComplexMatrix apply_spectral(const HermitianEig& e,
                                    const std::function<double(double)>& f) {
  RealVector fv = e.eigenvalues.unaryExpr(f);
  return e.eigenvectors * fv.cast<Complex>().asDiagonal() *
         e.eigenvectors.adjoint();
}

namespace detail {

inline void check_psd_spectrum(const HermitianEig& e, const char* op) {
  const double scale = e.max_abs();
  if (e.eigenvalues.size() > 0 && e.eigenvalues(0) < -1e-9 * scale) {
    throw DomainError(std::string(op) + ": matrix is not PSD (eigenvalue " +
                      std::to_string(e.eigenvalues(0)) + ")");
  }
}

}  // namespace detail

/// Fractional power of a PSD matrix. Eigenvalues at or below
/// support_cutoff * lambda_max count as zero, so negative (and zero) powers
/// act on the support only (Moore-Penrose convention).
inline ComplexMatrix mat_power(const ComplexMatrix& m, double p,
                               double support_cutoff = kSupportCutoff) {
  const HermitianEig e = herm_eig(m);
  detail::check_psd_spectrum(e, "mat_power");
  const double thresh = support_cutoff * e.max_abs();
  return apply_spectral(e, [&](double x) {
    return (x > thresh && x > 0.0) ? std::pow(x, p) : 0.0;
  });
}

/// Orthogonal projector onto the span of eigenvectors with eigenvalue above
/// cutoff * lambda_max.
inline ComplexMatrix support_projector(const ComplexMatrix& m,
                                       double cutoff = kSupportCutoff) {
  const HermitianEig e = herm_eig(m);
  detail::check_psd_spectrum(e, "support_projector");
  const double thresh = cutoff * e.max_abs();
  return apply_spectral(
      e, [&](double x) { return (x > thresh && x > 0.0) ? 1.0 : 0.0; });
}

inline RealVector singular_values(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues();
}

/// Sum of singular values (sum of |eigenvalues| for Hermitian input).
inline double trace_norm(const ComplexMatrix& m) {
  if (is_hermitian(m)) return herm_eig(m).eigenvalues.cwiseAbs().sum();
  return singular_values(m).sum();
}

/// Largest singular value.
inline double op_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  if (is_hermitian(m)) return herm_eig(m).max_abs();
  return singular_values(m).maxCoeff();
}

inline double min_eigenvalue(const ComplexMatrix& m) {
  return herm_eig(m).eigenvalues(0);
}

/// F(rho, sigma) = ||sqrt(rho) sqrt(sigma)||_1^2.
inline double fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
    throw DimensionError("fidelity: shape mismatch");
  }
  const double s = singular_values(mat_power(rho, 0.5) * mat_power(sigma, 0.5)).sum();
  return s * s;
}

}  // namespace qcbound

#endif  // QCBOUND_LINALG_HPP
