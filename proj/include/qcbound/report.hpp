#ifndef QCBOUND_REPORT_HPP
#define QCBOUND_REPORT_HPP

#include <map>
#include <optional>
#include <string>

#include "qcbound/divergences.hpp"
#include "qcbound/sdp.hpp"

namespace qcbound {

enum class Direction { Upper, Lower, Exact };
enum class Method { Formula, Sdp, FixedSigma };

inline std::string to_string(Direction d) {
  switch (d) {
    case Direction::Upper: return "upper";
    case Direction::Lower: return "lower";
    case Direction::Exact: return "exact";
  }
  return "unknown";
}

inline std::string to_string(Method m) {
  switch (m) {
    case Method::Formula: return "formula";
    case Method::Sdp: return "sdp";
    case Method::FixedSigma: return "fixed-sigma";
  }
  return "unknown";
}

/// A named bound in bits. `targets` names the quantity bounded (Q_two_way,
/// P_two_way, E_max, B_max, ...), `direction` says which side it is on.
struct BoundReport {
  std::string bound_name;
  std::string targets;
  Direction direction = Direction::Upper;
  Method method = Method::Formula;
  std::optional<std::string> relaxation;
  ExtendedReal value_bits = ExtendedReal::finite(0.0);
  std::optional<ComplexMatrix> certificate;
  std::map<std::string, double> diagnostics;

  [[nodiscard]] double bits() const { return value_bits.value(); }
};

/// Nonnegative bit value; tiny negatives from rounding are clamped.
inline ExtendedReal bits_value(double v) {
  if (std::isnan(v)) throw NumericalError("bound value is NaN");
  if (v < -1e-6) throw NumericalError("bound value " + std::to_string(v) + " is negative");
  return ExtendedReal::finite(std::max(0.0, v));
}

inline void add_solver_diagnostics(BoundReport& r, const sdp::Solution& s) {
  r.diagnostics["primal"] = s.primal_value;
  r.diagnostics["dual"] = s.dual_value;
  r.diagnostics["gap"] = s.gap;
  r.diagnostics["iterations"] = s.iterations;
  r.diagnostics["primal_infeasibility"] = s.primal_infeasibility;
  r.diagnostics["dual_infeasibility"] = s.dual_infeasibility;
}

}  // namespace qcbound

#endif  // QCBOUND_REPORT_HPP
