#include "ergolev/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace ergolev {

double CounterRng::next_exponential() { return -std::log(next_unit_pos()); }

double CounterRng::next_normal() {
  const double u1 = next_unit_pos();
  const double u2 = next_unit();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

namespace {

// Hormann (1993), "The transformed rejection method for generating Poisson
// random variables", algorithm PTRS. Valid for mean >= 10.
std::uint64_t poisson_ptrs(CounterRng& rng, double mu) {
  const double b = 0.931 + 2.53 * std::sqrt(mu);
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);
  const double log_mu = std::log(mu);

  for (;;) {
    const double u = rng.next_unit() - 0.5;
    const double v = rng.next_unit_pos();
    const double us = 0.5 - std::abs(u);
    const double kf = std::floor((2.0 * a / us + b) * u + mu + 0.43);
    if (us >= 0.07 && v <= v_r) return static_cast<std::uint64_t>(kf);
    if (kf < 0.0 || (us < 0.013 && v > us)) continue;
    const double k = kf;
    if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
        k * log_mu - mu - std::lgamma(k + 1.0)) {
      return static_cast<std::uint64_t>(kf);
    }
  }
}

}  // namespace

std::uint64_t CounterRng::next_poisson(double mean) {
  if (!(mean >= 0.0)) throw std::invalid_argument("next_poisson: mean must be >= 0");
  if (mean == 0.0) return 0;
  if (mean < 10.0) {
    // Knuth's product method.
    const double limit = std::exp(-mean);
    std::uint64_t k = 0;
    double prod = next_unit_pos();
    while (prod > limit) {
      ++k;
      prod *= next_unit_pos();
    }
    return k;
  }
  return poisson_ptrs(*this, mean);
}

}  // namespace ergolev
