#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ergolev {

using Vec = std::vector<double>;
using ConstSpan = std::span<const double>;

/// Thrown when an integral fails its tail/envelope finiteness test or a
/// radial expansion keeps growing instead of converging.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a user-supplied evaluator (custom drift/kernel) misbehaves.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline double dot(ConstSpan a, ConstSpan b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm2(ConstSpan a) { return dot(a, a); }

inline double norm(ConstSpan a) { return std::sqrt(norm2(a)); }

/// Surface measure of the unit sphere S^{d-1}: 2, 2*pi, 4*pi for d = 1,2,3.
inline double sphere_surface(int d) {
  if (d < 1) throw std::invalid_argument("sphere_surface: d must be >= 1");
  return 2.0 * std::pow(M_PI, 0.5 * d) / std::tgamma(0.5 * d);
}

inline bool nearly_equal(double a, double b, double rel, double abs = 0.0) {
  return std::abs(a - b) <= std::max(abs, rel * std::max(std::abs(a), std::abs(b)));
}

}  // namespace ergolev
