#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <variant>
#include <vector>

#include "ghost/errors.hpp"

namespace ghost {

using Vec = std::vector<double>;

/// Global field/model parameters: spatial dimension, field mass, and the
/// pump momentum of the coherent source.
struct ModelConfig {
  int d = 3;
  double m = 0.0;
  Vec pump = {0.0, 0.0, -2.0 * std::numbers::pi};

  void validate() const {
    if (d < 1) throw ConfigError("model: d must be >= 1");
    if (m < 0.0) throw ConfigError("model: m must be >= 0");
    if (static_cast<int>(pump.size()) != d)
      throw ConfigError("model: pump momentum must have d components");
    for (double v : pump)
      if (!std::isfinite(v)) throw ConfigError("model: pump momentum not finite");
  }
};

/// Gaussian spatial profile N * exp(-|x|^2 / (2 sigma^2)).
struct SmearingProfile {
  double sigma = 0.1;
  double norm = 1.0;

  // Normalization chosen so the momentum-space profile is 1 at p = 0
  // (equivalently, unit spatial integral). Keeps lambda the only coupling
  // scale in the problem.
  static SmearingProfile unit_ft(double sigma, int d) {
    SmearingProfile s;
    s.sigma = sigma;
    s.norm = 1.0 / (std::pow(2.0 * std::numbers::pi, 0.5 * d) *
                    std::pow(sigma, d));
    return s;
  }

  void validate() const {
    if (!(sigma > 0.0)) throw ConfigError("smearing: sigma must be > 0");
    if (!(norm > 0.0)) throw ConfigError("smearing: norm must be > 0");
  }
};

/// Detector centre-of-mass trajectories, parametrized by lab time tau.
struct InertialWorldline {
  Vec position;  // fixed spatial position, length d
};

struct RindlerWorldline {
  double a = 1.0;       // proper acceleration, motion along x
  double y = 0.0;       // transverse offsets (d = 3)
  double z = 0.0;
};

using Worldline = std::variant<InertialWorldline, RindlerWorldline>;

struct SpacetimePoint {
  double t = 0.0;
  Vec x;  // spatial part, length d
};

inline SpacetimePoint worldline_position(const Worldline& w, double tau) {
  if (const auto* in = std::get_if<InertialWorldline>(&w)) {
    return {tau, in->position};
  }
  const auto& r = std::get<RindlerWorldline>(w);
  if (!(r.a > 0.0)) throw ConfigError("worldline: Rindler acceleration must be > 0");
  // T = sinh(a tau)/a, X = cosh(a tau)/a; X^2 - T^2 = 1/a^2 identically
  return {std::sinh(r.a * tau) / r.a,
          {std::cosh(r.a * tau) / r.a, r.y, r.z}};
}

/// One detector ("pixel"): two-level system with gap omega, coupling
/// strength lambda, Gaussian smearing, and a worldline.
struct Detector {
  double lambda = 1.0;
  double omega = 1.0;
  SmearingProfile smearing = SmearingProfile::unit_ft(0.1, 3);
  Worldline worldline = InertialWorldline{{0.0, 0.0, 0.0}};

  void validate(int d) const {
    if (!std::isfinite(lambda)) throw ConfigError("detector: lambda not finite");
    if (omega < 0.0) throw ConfigError("detector: omega must be >= 0");
    smearing.validate();
    if (const auto* in = std::get_if<InertialWorldline>(&worldline)) {
      if (static_cast<int>(in->position.size()) != d)
        throw ConfigError("detector: worldline position must have d components");
      for (double v : in->position)
        if (!std::isfinite(v)) throw ConfigError("detector: position not finite");
    } else {
      const auto& r = std::get<RindlerWorldline>(worldline);
      if (!(r.a > 0.0)) throw ConfigError("detector: Rindler a must be > 0");
      if (d != 3) throw ConfigError("detector: Rindler worldline requires d = 3");
    }
  }
};

inline double sq_norm(const Vec& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Relativistic dispersion E = sqrt(|k|^2 + m^2).
inline double dispersion(const ModelConfig& cfg, const Vec& k) {
  if (static_cast<int>(k.size()) != cfg.d)
    throw UsageError("dispersion: momentum must have d components");
  return std::sqrt(sq_norm(k) + cfg.m * cfg.m);
}

/// Momentum-space smearing profile: norm * (2 pi)^{d/2} sigma^d
/// * exp(-sigma^2 |p|^2 / 2), real and positive.
inline double smearing_ft(const SmearingProfile& profile, int d, const Vec& p) {
  if (static_cast<int>(p.size()) != d)
    throw UsageError("smearing_ft: momentum must have d components");
  const double amp = profile.norm *
                     std::pow(2.0 * std::numbers::pi, 0.5 * d) *
                     std::pow(profile.sigma, d);
  return amp * std::exp(-0.5 * profile.sigma * profile.sigma * sq_norm(p));
}

/// Per-detector momentum amplitude at coupling instant tau:
///   F(p) = ft(p) / ((2 pi)^d sqrt(2 E_p)) * exp(i (E_p tau - p . X(tau))).
/// The modulus depends only on |p|; the worldline enters through the phase.
/// At m = 0 this is singular at p = 0; the quadrature layer owns that
/// (the singularity is integrable in the radial measure).
inline std::complex<double> mode_amplitude_F(const ModelConfig& cfg,
                                             const Detector& det, double tau,
                                             const Vec& p) {
  const double e = dispersion(cfg, p);
  const double pref = smearing_ft(det.smearing, cfg.d, p) /
                      (std::pow(2.0 * std::numbers::pi, cfg.d) *
                       std::sqrt(2.0 * e));
  const Vec x = worldline_position(det.worldline, tau).x;
  const double phase = e * tau - dot(p, x);
  return std::polar(pref, phase);
}

/// Weighted combination sum_t c_t lambda_t F_t(p) over the detector list,
/// with c the per-detector difference coefficients in {-2, 0, 2}.
/// Exactly antisymmetric under c -> -c.
inline std::complex<double> weighted_F(const ModelConfig& cfg,
                                       const std::vector<Detector>& dets,
                                       double tau, const std::vector<int>& c,
                                       const Vec& p) {
  if (c.size() != dets.size())
    throw UsageError("weighted_F: coefficient/detector count mismatch");
  std::complex<double> f{0.0, 0.0};
  for (std::size_t t = 0; t < dets.size(); ++t) {
    if (c[t] == 0) continue;
    f += static_cast<double>(c[t]) * dets[t].lambda *
         mode_amplitude_F(cfg, dets[t], tau, p);
  }
  return f;
}

}  // namespace ghost
