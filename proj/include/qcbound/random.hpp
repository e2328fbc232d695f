#ifndef QCBOUND_RANDOM_HPP
#define QCBOUND_RANDOM_HPP

#include <cstdint>
#include <random>

#include "qcbound/linalg.hpp"

namespace qcbound {

/// Seeded source of complex Gaussian matrices. Every stochastic routine in the
/// library takes an explicit seed and draws from one of these.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }
  int uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }

  /// Entries with independent standard normal real and imaginary parts.
  ComplexMatrix ginibre(int rows, int cols) {
    ComplexMatrix g(rows, cols);
    for (int j = 0; j < cols; ++j) {
      for (int i = 0; i < rows; ++i) g(i, j) = Complex(normal(), normal());
    }
    return g;
  }

  ComplexVector gaussian_vector(int n) { return ginibre(n, 1).col(0); }

  std::uint64_t next_seed() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

/// Haar-random isometry (rows >= cols) from the QR factorization of a complex
/// Gaussian matrix, with the phases of R's diagonal absorbed into Q.
inline ComplexMatrix haar_isometry(int rows, int cols, Rng& rng) {
  if (rows < cols) {
    throw DimensionError("haar_isometry: need rows >= cols");
  }
  const ComplexMatrix g = rng.ginibre(rows, cols);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(rows, cols);
  const ComplexMatrix r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  for (int k = 0; k < cols; ++k) {
    const Complex diag = r(k, k);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(k) *= diag / mag;
  }
  return q;
}

inline ComplexMatrix haar_unitary(int d, Rng& rng) {
  return haar_isometry(d, d, rng);
}

}  // namespace qcbound

#endif  // QCBOUND_RANDOM_HPP
