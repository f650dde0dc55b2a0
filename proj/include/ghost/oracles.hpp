#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "ghost/errors.hpp"
#include "ghost/kinematics.hpp"
#include "ghost/register_algebra.hpp"
#include "ghost/spdc.hpp"

namespace ghost {

/// Side-by-side comparison record for a verification run.
struct OracleReport {
  std::string quantity;
  double oracle_value = 0.0;
  double pipeline_value = 0.0;

  double abs_dev() const { return std::abs(pipeline_value - oracle_value); }
  double rel_dev() const {
    return abs_dev() / std::max(std::abs(oracle_value), 1e-300);
  }
  bool finite() const {
    return std::isfinite(oracle_value) && std::isfinite(pipeline_value);
  }
};

/// Independent one-dimensional radial evaluation of
/// I1 = integral d^3p |F(p)|^2 for a single detector. Deliberately avoids
/// the windowed 3D engine: composite Simpson on the radial profile, which
/// is all that survives after the angular integral (|F| is radial).
inline double radial_norm_integral_oracle(const ModelConfig& cfg,
                                          const Detector& det) {
  if (cfg.d != 3)
    throw UsageError("radial oracle: closed-form reduction assumes d = 3");
  const double sigma = det.smearing.sigma;
  const double cutoff = 12.0 / sigma;
  const int segments = 20000;  // Simpson needs an even count
  const double h = cutoff / segments;
  const double pref =
      4.0 * std::numbers::pi /
      std::pow(2.0 * std::numbers::pi, 2.0 * cfg.d);

  const auto integrand = [&](double r) {
    if (r == 0.0 && cfg.m == 0.0) return 0.0;  // r^2/(2r) -> 0 at the origin
    Vec p = {0.0, 0.0, r};
    const double ft = smearing_ft(det.smearing, cfg.d, p);
    const double e = std::sqrt(r * r + cfg.m * cfg.m);
    return r * r * ft * ft / (2.0 * e);
  };

  double sum = integrand(0.0) + integrand(cutoff);
  for (int i = 1; i < segments; ++i)
    sum += integrand(i * h) * (i % 2 ? 4.0 : 2.0);
  return pref * sum * h / 3.0;
}

/// Single-detector vacuum excitation probability
/// (1 - exp(-2 lambda^2 gamma^2 I1)) / 2, with I1 from the radial oracle.
inline double vacuum_excitation_oracle(const ModelConfig& cfg,
                                       const Detector& det,
                                       double beta_scale = 1.0) {
  const double i1 = radial_norm_integral_oracle(cfg, det);
  const double s = det.lambda * beta_scale;
  return 0.5 * (1.0 - std::exp(-2.0 * s * s * i1));
}

/// Literal evaluation of a G cell with no caching and no use of the
/// c <-> -c symmetry: every term runs its own quadrature through the
/// provided fresh evaluator.
inline double brute_force_g(const SignVector& l, const SignVector& j,
                            const ModelConfig& cfg, const SpdcConfig& spdc,
                            const std::vector<Detector>& dets, double tau,
                            const QuadratureSpec& quad) {
  if (l.size() != j.size()) throw UsageError("brute_force_g: length mismatch");
  const std::size_t n = l.size();
  if (n > 3)
    throw UsageError("brute_force_g: limited to n <= 3 (2^{2n} quadratures)");
  const std::size_t cnt = SignVector::count(n);
  double sum = 0.0;
  for (std::size_t ki = 0; ki < cnt; ++ki) {
    const SignVector k = SignVector::from_index(ki, n);
    for (std::size_t mi = 0; mi < cnt; ++mi) {
      const SignVector m = SignVector::from_index(mi, n);
      int sign = 1;
      for (std::size_t t = 0; t < n; ++t)
        sign *= delta_tilde(l[t], m[t]) * delta_tilde(j[t], k[t]);
      const DiffVector c = DiffVector::difference(k, m);
      const double i_val = beta_norm_integral(cfg, spdc, dets, tau, c, quad).value;
      sum += sign * std::exp(-0.5 * i_val);
    }
  }
  return sum / static_cast<double>(cnt * cnt);
}

}  // namespace ghost
