#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"
#include "ghost/oracles.hpp"
#include "ghost/register_algebra.hpp"

using namespace ghost;

namespace {

constexpr double kI1 = 0.005105880692270915;  // 100 / (64 pi^5)

// Exact vacuum-limit gexp for well-separated detectors: cross integrals
// vanish, so I(c) = sum_t c_t^2 lambda_t^2 I1. Always a valid Gram
// weight, handy as a fast synthetic provider.
GexpProvider separated_gexp(std::vector<double> lambdas) {
  return [lambdas](const DiffVector& c) {
    double i = 0.0;
    for (std::size_t t = 0; t < c.size(); ++t)
      i += c.c[t] * c.c[t] * lambdas[t] * lambdas[t] * kI1;
    return std::exp(-0.5 * i);
  };
}

}  // namespace

TEST_CASE("monopole_matrix") {
  // tau = 0 is Pauli-X
  const Matrix q0 = monopole_matrix(3.7, 0.0);
  CHECK(q0(0, 0) == cplx{0.0, 0.0});
  CHECK(q0(1, 1) == cplx{0.0, 0.0});
  CHECK(q0(0, 1) == cplx{1.0, 0.0});
  CHECK(q0(1, 0) == cplx{1.0, 0.0});

  // omega tau = pi/2: off-diagonals +-i
  const Matrix qi = monopole_matrix(1.0, std::numbers::pi / 2.0);
  CHECK(std::abs(qi(1, 0) - cplx{0.0, 1.0}) < 1e-15);
  CHECK(std::abs(qi(0, 1) - cplx{0.0, -1.0}) < 1e-15);

  // involution for random omega, tau
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int it = 0; it < 20; ++it) {
    const Matrix q = monopole_matrix(u(rng), u(rng));
    const Matrix sq = q * q;
    CHECK(sq.max_abs_diff(Matrix::identity(2)) < 1e-15);
  }
}

TEST_CASE("delta_operator") {
  CHECK(delta_operator(1, 2.0, 0.3).max_abs_diff(Matrix::identity(2)) == 0.0);
  CHECK(delta_operator(-1, 2.0, 0.0).max_abs_diff(monopole_matrix(2.0, 0.0)) ==
        0.0);
  const Matrix q = delta_operator(-1, 1.0, 1.0);
  CHECK(std::abs(q(0, 1) - std::polar(1.0, -1.0)) < 1e-15);
  CHECK(std::abs(q(1, 0) - std::polar(1.0, 1.0)) < 1e-15);
  CHECK_THROWS_AS(delta_operator(0, 1.0, 1.0), UsageError);
}

TEST_CASE("delta_tilde") {
  CHECK(delta_tilde(1, 1) == 1);
  CHECK(delta_tilde(-1, 1) == 1);
  CHECK(delta_tilde(1, -1) == 1);
  CHECK(delta_tilde(-1, -1) == -1);
  for (int j : {-1, 1})
    CHECK(delta_tilde(j, 1) + delta_tilde(j, -1) == 1 + j);
  CHECK_THROWS_AS(delta_tilde(1, 0), UsageError);
}

TEST_CASE("g_value at lambda = 0 factorizes to the all-plus projector") {
  const GexpProvider unity = [](const DiffVector&) { return 1.0; };
  for (std::size_t n : {1u, 2u, 3u}) {
    const std::size_t cnt = SignVector::count(n);
    for (std::size_t li = 0; li < cnt; ++li)
      for (std::size_t ji = 0; ji < cnt; ++ji) {
        const auto l = SignVector::from_index(li, n);
        const auto j = SignVector::from_index(ji, n);
        double expect = 1.0;
        for (std::size_t t = 0; t < n; ++t)
          expect *= 0.25 * (1 + l[t]) * (1 + j[t]);
        CHECK(g_value(l, j, unity) == doctest::Approx(expect).epsilon(1e-15));
      }
  }
}

TEST_CASE("single-detector vacuum G cells follow the (1 +- g)/2 pattern") {
  const double lam = 1.3;
  const auto gexp = separated_gexp({lam});
  const double g = std::exp(-2.0 * lam * lam * kI1);
  const auto plus = SignVector::from_index(0, 1);
  const auto minus = SignVector::from_index(1, 1);
  CHECK(g_value(plus, plus, gexp) == doctest::Approx((1 + g) / 2).epsilon(1e-14));
  CHECK(g_value(minus, minus, gexp) == doctest::Approx((1 - g) / 2).epsilon(1e-14));
  CHECK(g_value(plus, minus, gexp) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(g_value(minus, plus, gexp) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("G-table symmetry for a generic symmetric provider") {
  // any provider even under c -> -c must give a symmetric real table
  const GexpProvider gexp = [](const DiffVector& c) {
    double h = 1.0;
    for (std::size_t t = 0; t < c.size(); ++t)
      h *= std::exp(-0.01 * c.c[t] * c.c[t] * (t + 1.0)) *
           std::cos(0.05 * c.c[t] * c.c[t]);
    return h;
  };
  const std::size_t n = 3;
  const GTable gt = build_g_table(n, gexp);
  const std::size_t cnt = SignVector::count(n);
  for (std::size_t li = 0; li < cnt; ++li)
    for (std::size_t ji = 0; ji < cnt; ++ji)
      CHECK(gt.at(li, ji) == doctest::Approx(gt.at(ji, li)).epsilon(1e-13));
  // G(1...1, 1...1) in (0, 1]
  CHECK(gt.at(0, 0) > 0.0);
  CHECK(gt.at(0, 0) <= 1.0);
}

TEST_CASE("assemble_rho at lambda = 0 reproduces the initial projector exactly") {
  const GexpProvider unity = [](const DiffVector&) { return 1.0; };
  const auto reg = RegisterState::from_string("egge", 0.4);
  const GTable gt = build_g_table(4, unity);
  const auto rho = assemble_rho(reg, gt, {1.0, 1.0, 1.0, 1.0});
  const std::size_t e0 = reg.basis_index();
  for (std::size_t r = 0; r < rho.dim(); ++r)
    for (std::size_t c = 0; c < rho.dim(); ++c) {
      const cplx expect = (r == e0 && c == e0) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
      CHECK(rho.mat(r, c) == expect);  // exact, not approximate
    }
  CHECK(rho.pre_norm_trace == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("single-detector vacuum excitation from the assembled state") {
  for (double lam : {0.5, 1.0, 2.0}) {
    const auto gexp = separated_gexp({lam});
    const GTable gt = build_g_table(1, gexp);
    const auto reg = RegisterState::from_string("g", 0.0);
    const auto rho = assemble_rho(reg, gt, {1.0});
    const double expect = 0.5 * (1.0 - std::exp(-2.0 * lam * lam * kI1));
    CHECK(rho.mat(1, 1).real() == doctest::Approx(expect).epsilon(1e-12));
    rho.validate();
  }
}

TEST_CASE("assembled state is a valid density matrix for a mixed register") {
  const auto gexp = separated_gexp({0.7, 1.0, 1.4});
  const GTable gt = build_g_table(3, gexp);
  const auto reg = RegisterState::from_string("egg", 0.3);
  const auto rho = assemble_rho(reg, gt, {1.0, 2.0, 0.5});
  CHECK(rho.mat.hermiticity_defect() < 1e-12);
  CHECK(rho.pre_norm_trace == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(rho.min_eigenvalue() >= -1e-10);
  rho.validate();
}

TEST_CASE("omega drops out of the assembled state at tau = 0") {
  const auto gexp = separated_gexp({1.0, 1.0});
  const GTable gt = build_g_table(2, gexp);
  const auto reg = RegisterState::from_string("eg", 0.0);
  const auto rho1 = assemble_rho(reg, gt, {1.0, 1.0});
  const auto rho7 = assemble_rho(reg, gt, {7.0, 7.0});
  CHECK(rho1.mat.max_abs_diff(rho7.mat) == 0.0);
}

TEST_CASE("brute-force G equals the cached path") {
  ModelConfig cfg;
  SpdcConfig spdc;
  QuadratureSpec quad;

  std::mt19937 rng(11);
  std::uniform_real_distribution<double> pos(-1.5, 1.5);
  std::uniform_real_distribution<double> lam(0.5, 1.5);

  for (std::size_t n : {1u, 2u}) {
    std::vector<Detector> dets(n);
    for (auto& d : dets) {
      d.lambda = lam(rng);
      d.worldline = InertialWorldline{{pos(rng), pos(rng), pos(rng)}};
    }
    GexpCache cache(cfg, spdc, dets, 0.0, quad);
    const GexpProvider provider = [&](const DiffVector& c) { return cache(c); };
    const std::size_t cnt = SignVector::count(n);
    for (std::size_t li = 0; li < cnt; ++li)
      for (std::size_t ji = 0; ji < cnt; ++ji) {
        const auto l = SignVector::from_index(li, n);
        const auto j = SignVector::from_index(ji, n);
        const double cached = g_value(l, j, provider);
        const double brute = brute_force_g(l, j, cfg, spdc, dets, 0.0, quad);
        CHECK(std::abs(cached - brute) < 1e-12);
      }
    // at most (3^n + 1)/2 quadratures ran
    std::size_t bound = 1;
    for (std::size_t t = 0; t < n; ++t) bound *= 3;
    CHECK(cache.quadrature_count() <= (bound + 1) / 2);
  }
}
