#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "ghost/kinematics.hpp"

using namespace ghost;

TEST_CASE("dispersion") {
  ModelConfig cfg;
  cfg.m = 0.0;
  CHECK(dispersion(cfg, {3.0, 4.0, 0.0}) == doctest::Approx(5.0).epsilon(1e-15));
  cfg.m = 2.0;
  CHECK(dispersion(cfg, {0.0, 0.0, 0.0}) == doctest::Approx(2.0).epsilon(1e-15));
  cfg.m = 1.0;
  CHECK(dispersion(cfg, {1.0, 1.0, 1.0}) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS(dispersion(cfg, {1.0, 2.0}), UsageError);
}

TEST_CASE("dispersion is monotone in |k| and equals m at k = 0") {
  ModelConfig cfg;
  cfg.m = 0.7;
  CHECK(dispersion(cfg, {0.0, 0.0, 0.0}) == doctest::Approx(0.7).epsilon(1e-15));
  double prev = 0.0;
  for (double r = 0.1; r < 5.0; r += 0.3) {
    const double e = dispersion(cfg, {r, 0.0, 0.0});
    CHECK(e > prev);
    prev = e;
  }
}

TEST_CASE("smearing_ft under the unit-peak normalization") {
  const auto prof = SmearingProfile::unit_ft(0.1, 3);
  CHECK(smearing_ft(prof, 3, {0.0, 0.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-14));
  // |p| = 10 with sigma = 1/10 gives exp(-1/2)
  CHECK(smearing_ft(prof, 3, {10.0, 0.0, 0.0}) ==
        doctest::Approx(std::exp(-0.5)).epsilon(1e-14));

  // raw normalization: ft(0) = N (2 pi)^{3/2} sigma^3
  SmearingProfile raw;
  raw.sigma = 0.1;
  raw.norm = 2.5;
  const double expect = 2.5 * std::pow(2.0 * std::numbers::pi, 1.5) * 1e-3;
  CHECK(smearing_ft(raw, 3, {0.0, 0.0, 0.0}) == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("smearing_ft is positive, radial and monotone decreasing in |p|") {
  const auto prof = SmearingProfile::unit_ft(0.1, 3);
  CHECK(smearing_ft(prof, 3, {3.0, 0.0, 0.0}) ==
        doctest::Approx(smearing_ft(prof, 3, {0.0, 0.0, -3.0})).epsilon(1e-15));
  double prev = 2.0;
  for (double r = 0.0; r < 40.0; r += 2.5) {
    const double v = smearing_ft(prof, 3, {0.0, r, 0.0});
    CHECK(v > 0.0);
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("worldline positions") {
  const Worldline inert = InertialWorldline{{-1.0, 0.0, 0.0}};
  auto p = worldline_position(inert, 5.0);
  CHECK(p.t == 5.0);
  CHECK(p.x[0] == -1.0);

  const Worldline rind = RindlerWorldline{1.0, 0.25, -0.5};
  p = worldline_position(rind, 0.0);
  CHECK(p.t == doctest::Approx(0.0));
  CHECK(p.x[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(p.x[1] == 0.25);
  CHECK(p.x[2] == -0.5);

  p = worldline_position(rind, 1.0);
  CHECK(p.t == doctest::Approx(1.1752011936438014).epsilon(1e-14));
  CHECK(p.x[0] == doctest::Approx(1.5430806348152437).epsilon(1e-14));
}

TEST_CASE("Rindler hyperbola X^2 - T^2 = 1/a^2 at machine precision") {
  for (double a : {0.5, 1.0, 2.0}) {
    const Worldline w = RindlerWorldline{a, 0.0, 0.0};
    for (double tau = -2.0; tau <= 2.0; tau += 0.25) {
      const auto p = worldline_position(w, tau);
      CHECK(p.x[0] * p.x[0] - p.t * p.t ==
            doctest::Approx(1.0 / (a * a)).epsilon(1e-13));
    }
  }
}

TEST_CASE("mode_amplitude_F phase and modulus") {
  ModelConfig cfg;
  Detector det;
  det.smearing = SmearingProfile::unit_ft(0.1, 3);
  det.worldline = InertialWorldline{{0.0, 0.0, 0.0}};

  // zero phase at tau = 0, origin
  const auto f0 = mode_amplitude_F(cfg, det, 0.0, {0.0, 0.0, 1.0});
  CHECK(f0.imag() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(f0.real() > 0.0);

  // pinned modulus: exp(-0.005) / ((2 pi)^3 sqrt(2)) for |p| = 1, m = 0
  det.worldline = InertialWorldline{{1.0, 0.0, 0.0}};
  const auto f1 = mode_amplitude_F(cfg, det, 0.0, {0.0, 0.0, 1.0});
  CHECK(std::abs(f1) == doctest::Approx(0.0028364421124183687).epsilon(1e-13));

  // modulus is worldline- and tau-independent
  const double mod_ref = std::abs(f1);
  det.worldline = RindlerWorldline{2.0, 0.3, 0.0};
  for (double tau : {-1.0, 0.0, 0.7}) {
    const auto f = mode_amplitude_F(cfg, det, tau, {0.0, 0.0, 1.0});
    CHECK(std::abs(f) == doctest::Approx(mod_ref).epsilon(1e-13));
  }
}

TEST_CASE("weighted_F basics and antisymmetry") {
  ModelConfig cfg;
  std::vector<Detector> dets(2);
  dets[0].worldline = InertialWorldline{{1.0, 0.0, 0.0}};
  dets[1].worldline = InertialWorldline{{-1.0, 0.0, 0.0}};
  dets[0].lambda = 0.8;
  dets[1].lambda = 1.3;

  const Vec p = {0.3, -0.2, 1.0};
  CHECK(weighted_F(cfg, dets, 0.0, {0, 0}, p) == std::complex<double>{0.0, 0.0});

  // single term: c = (2, 0) gives 2 lambda_1 F_1
  const auto f1 = mode_amplitude_F(cfg, dets[0], 0.0, p);
  const auto w = weighted_F(cfg, dets, 0.0, {2, 0}, p);
  CHECK(std::abs(w - 2.0 * 0.8 * f1) < 1e-16);

  CHECK_THROWS_AS(weighted_F(cfg, dets, 0.0, {2}, p), UsageError);

  // property: exact antisymmetry under c -> -c for random c, p
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> ci(-1, 1);
  std::uniform_real_distribution<double> pr(-5.0, 5.0);
  for (int it = 0; it < 50; ++it) {
    std::vector<int> c = {2 * ci(rng), 2 * ci(rng)};
    const Vec q = {pr(rng), pr(rng), pr(rng)};
    std::vector<int> neg = {-c[0], -c[1]};
    const auto a = weighted_F(cfg, dets, 0.4, c, q);
    const auto b = weighted_F(cfg, dets, 0.4, neg, q);
    CHECK(std::abs(a + b) == doctest::Approx(0.0).epsilon(1e-18));
  }
}
