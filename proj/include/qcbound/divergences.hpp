#ifndef QCBOUND_DIVERGENCES_HPP
#define QCBOUND_DIVERGENCES_HPP

// Sandwiched Renyi divergences in bits. alpha = 1 is the Umegaki relative
// entropy and alpha = inf the max-relative entropy; both endpoints have their
// own routines and the generic formula is only evaluated on (1, inf).

#include <cmath>
#include <limits>
#include <string>

#include "qcbound/states.hpp"

namespace qcbound {

/// Nonnegative real or +infinity. The infinite case is a tag, never a float
/// infinity, so arithmetic on finite values cannot silently overflow into it.
class ExtendedReal {
 public:
  static ExtendedReal finite(double v) { return ExtendedReal(v, true); }
  static ExtendedReal infinity() { return ExtendedReal(0.0, false); }

  [[nodiscard]] bool is_finite() const { return finite_; }
  /// The finite value; throws on +infinity.
  [[nodiscard]] double value() const {
    if (!finite_) throw DomainError("ExtendedReal: value() on +infinity");
    return value_;
  }
  /// Finite value or IEEE infinity, for printing and comparisons only.
  [[nodiscard]] double as_double() const {
    return finite_ ? value_ : std::numeric_limits<double>::infinity();
  }

  friend ExtendedReal operator+(ExtendedReal a, ExtendedReal b) {
    if (!a.finite_ || !b.finite_) return infinity();
    return finite(a.value_ + b.value_);
  }
  friend bool operator<=(ExtendedReal a, ExtendedReal b) {
    if (!b.finite_) return true;
    if (!a.finite_) return false;
    return a.value_ <= b.value_;
  }

 private:
  ExtendedReal(double v, bool f) : value_(v), finite_(f) {}
  double value_;
  bool finite_;
};

inline constexpr double kAlphaInfinity = std::numeric_limits<double>::infinity();

struct DivergenceValue {
  ExtendedReal bits = ExtendedReal::finite(0.0);
  double alpha = 1.0;

  [[nodiscard]] bool finite() const { return bits.is_finite(); }
  [[nodiscard]] double value() const { return bits.value(); }
};

/// Threshold on ||(1 - P_sigma) rho (1 - P_sigma)||_inf above which
/// supp(rho) is declared not contained in supp(sigma).
inline constexpr double kSupportViolationTol = 1e-9;

namespace detail {

inline void check_pair(const DensityMatrix& rho, const DensityMatrix& sigma, const char* op) {
  if (rho.dim() != sigma.dim()) {
    throw DimensionError(std::string(op) + ": states have different dimensions");
  }
}

inline bool support_contained(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  const ComplexMatrix q = identity(static_cast<int>(sigma.rows())) - support_projector(sigma);
  return op_norm(hermitian_part(q * rho * q)) <= kSupportViolationTol;
}

}  // namespace detail

/// D(rho||sigma) = tr rho (log rho - log sigma), in bits.
inline DivergenceValue relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  detail::check_pair(rho, sigma, "relative_entropy");
  if (!detail::support_contained(rho.matrix(), sigma.matrix())) {
    return {ExtendedReal::infinity(), 1.0};
  }
  const HermitianEig er = herm_eig(rho.matrix());
  const double rthresh = kSupportCutoff * er.max_abs();
  double neg_entropy = 0.0;
  for (double x : er.eigenvalues) {
    if (x > rthresh && x > 0.0) neg_entropy += x * std::log2(x);
  }
  const HermitianEig es = herm_eig(sigma.matrix());
  const double sthresh = kSupportCutoff * es.max_abs();
  const ComplexMatrix log_sigma = apply_spectral(
      es, [&](double x) { return (x > sthresh && x > 0.0) ? std::log2(x) : 0.0; });
  const double cross = (rho.matrix() * log_sigma).trace().real();
  return {ExtendedReal::finite(std::max(0.0, neg_entropy - cross)), 1.0};
}

/// D_max via both characterizations: log ||sigma^{-1/2} rho sigma^{-1/2}||_inf
/// and inf{lambda : rho <= 2^lambda sigma}, the latter by bisection on the
/// operator inequality restricted to supp(sigma). Throws if they disagree by
/// more than 1e-8 bits.
inline DivergenceValue d_max(const DensityMatrix& rho, const DensityMatrix& sigma) {
  detail::check_pair(rho, sigma, "d_max");
  if (!detail::support_contained(rho.matrix(), sigma.matrix())) {
    return {ExtendedReal::infinity(), kAlphaInfinity};
  }
  const ComplexMatrix s = mat_power(sigma.matrix(), -0.5);
  const double norm_form = std::log2(op_norm(hermitian_part(s * rho.matrix() * s)));

  // Compress to supp(sigma), where sigma is invertible.
  const HermitianEig es = herm_eig(sigma.matrix());
  const double thresh = kSupportCutoff * es.max_abs();
  int first = 0;
  while (first < es.eigenvalues.size() && !(es.eigenvalues(first) > thresh)) ++first;
  const int r = static_cast<int>(es.eigenvalues.size()) - first;
  const ComplexMatrix v = es.eigenvectors.rightCols(r);
  const ComplexMatrix rho_s = hermitian_part(v.adjoint() * rho.matrix() * v);
  const ComplexMatrix sig_s = es.eigenvalues.tail(r).cast<Complex>().asDiagonal();
  auto dominated = [&](double lambda) {
    return min_eigenvalue(hermitian_part(std::exp2(lambda) * sig_s - rho_s)) >= 0.0;
  };
  // Bracket around the norm form, widening until the inequality flips.
  double step = 1e-6;
  double lo = norm_form - step;
  double hi = norm_form + step;
  for (int i = 0; i < 60 && dominated(lo); ++i) {
    step *= 4.0;
    lo = norm_form - step;
  }
  step = 1e-6;
  for (int i = 0; i < 60 && !dominated(hi); ++i) {
    step *= 4.0;
    hi = norm_form + step;
  }
  for (int i = 0; i < 60 && hi - lo > 1e-11; ++i) {
    const double mid = 0.5 * (lo + hi);
    (dominated(mid) ? hi : lo) = mid;
  }
  const double ineq_form = hi;
  if (std::abs(ineq_form - norm_form) > 1e-8) {
    throw NumericalError("d_max: characterizations disagree (" + std::to_string(norm_form) +
                         " vs " + std::to_string(ineq_form) + ")");
  }
  return {ExtendedReal::finite(std::max(0.0, norm_form)), kAlphaInfinity};
}

/// Sandwiched Renyi divergence for alpha in (1, inf):
///   (1/(alpha-1)) log tr[(sigma^{(1-a)/2a} rho sigma^{(1-a)/2a})^alpha].
inline DivergenceValue sandwiched_renyi(const DensityMatrix& rho, const DensityMatrix& sigma,
                                        double alpha) {
  detail::check_pair(rho, sigma, "sandwiched_renyi");
  if (!(alpha > 1.0) || std::isinf(alpha)) {
    throw DomainError("sandwiched_renyi: alpha must lie in (1, inf); use relative_entropy or d_max");
  }
  if (!detail::support_contained(rho.matrix(), sigma.matrix())) {
    return {ExtendedReal::infinity(), alpha};
  }
  const ComplexMatrix s = mat_power(sigma.matrix(), (1.0 - alpha) / (2.0 * alpha));
  const HermitianEig e = herm_eig(hermitian_part(s * rho.matrix() * s));
  double q = 0.0;
  for (double x : e.eigenvalues) {
    if (x > 0.0) q += std::pow(x, alpha);
  }
  return {ExtendedReal::finite(std::max(0.0, std::log2(q) / (alpha - 1.0))), alpha};
}

/// D_alpha for alpha in [1, inf], routing the endpoints.
inline DivergenceValue renyi_divergence(const DensityMatrix& rho, const DensityMatrix& sigma,
                                        double alpha) {
  if (alpha == 1.0) return relative_entropy(rho, sigma);
  if (std::isinf(alpha) && alpha > 0) return d_max(rho, sigma);
  return sandwiched_renyi(rho, sigma, alpha);
}

/// Gamma_sigma(X) = sigma^{1/2} X sigma^{1/2}; the inverse uses the
/// pseudo-inverse square root on supp(sigma).
inline ComplexMatrix gamma_map(const DensityMatrix& sigma, const ComplexMatrix& x, bool inverse) {
  if (x.rows() != sigma.dim() || x.cols() != sigma.dim()) {
    throw DimensionError("gamma_map: shape mismatch");
  }
  const ComplexMatrix s = mat_power(sigma.matrix(), inverse ? -0.5 : 0.5);
  return s * x * s;
}

/// ||X||_{alpha,sigma} = tr[|sigma^{1/2a} X sigma^{1/2a}|^alpha]^{1/alpha}.
inline double weighted_norm(const ComplexMatrix& x, const DensityMatrix& sigma, double alpha) {
  if (!(alpha >= 1.0)) throw DomainError("weighted_norm: alpha must be >= 1");
  if (x.rows() != sigma.dim() || x.cols() != sigma.dim()) {
    throw DimensionError("weighted_norm: shape mismatch");
  }
  const ComplexMatrix s = mat_power(sigma.matrix(), 1.0 / (2.0 * alpha));
  const RealVector sv = singular_values(s * x * s);
  if (std::isinf(alpha)) return sv.size() ? sv.maxCoeff() : 0.0;
  double acc = 0.0;
  for (double v : sv) acc += std::pow(v, alpha);
  return std::pow(acc, 1.0 / alpha);
}

}  // namespace qcbound

#endif  // QCBOUND_DIVERGENCES_HPP
