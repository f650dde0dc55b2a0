#include <cmath>
#include <complex>

#include "doctest.h"
#include "ghost/protocol.hpp"

using namespace ghost;

namespace {

constexpr double kI1 = 0.005105880692270915;

DensityMatrix bell_state() {
  DensityMatrix dm;
  dm.mat = Matrix(4);
  dm.mat(0, 0) = 0.5;
  dm.mat(0, 3) = 0.5;
  dm.mat(3, 0) = 0.5;
  dm.mat(3, 3) = 0.5;
  return dm;
}

DensityMatrix product_state(double pe1, double pe2) {
  DensityMatrix dm;
  dm.mat = Matrix(4);
  dm.mat(0, 0) = (1 - pe1) * (1 - pe2);
  dm.mat(1, 1) = (1 - pe1) * pe2;
  dm.mat(2, 2) = pe1 * (1 - pe2);
  dm.mat(3, 3) = pe1 * pe2;
  return dm;
}

}  // namespace

TEST_CASE("partial_trace") {
  // tracing nothing is the identity map
  const auto bell = bell_state();
  CHECK(partial_trace(bell.mat, {}).max_abs_diff(bell.mat) == 0.0);

  // product state: tracing detector 1 leaves detector 2's marginal
  const auto prod = product_state(0.3, 0.8);
  const Matrix m2 = partial_trace(prod.mat, {0});
  CHECK(m2.dim() == 2);
  CHECK(m2(0, 0).real() == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(m2(1, 1).real() == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(std::abs(m2(0, 1)) == 0.0);

  // maximally entangled state: either marginal is maximally mixed
  for (std::size_t t : {0u, 1u}) {
    const Matrix m = partial_trace(bell.mat, {t});
    CHECK(std::abs(m(0, 0) - cplx{0.5, 0.0}) < 1e-15);
    CHECK(std::abs(m(1, 1) - cplx{0.5, 0.0}) < 1e-15);
    CHECK(std::abs(m(0, 1)) < 1e-15);
  }
}

TEST_CASE("post_select") {
  // product state: conditioning is a no-op on the other factor
  const auto prod = product_state(0.3, 0.8);
  const auto [st, prob] = post_select(prod, {0, true});
  CHECK(prob == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(st.mat(0, 0).real() == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(st.mat(1, 1).real() == doctest::Approx(0.8).epsilon(1e-14));

  // Bell state: detector 1 on g collapses detector 2 to g, prob 1/2
  const auto [bg, pbg] = post_select(bell_state(), {0, false});
  CHECK(pbg == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(bg.mat(0, 0).real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(bg.mat(1, 1)) < 1e-15);

  // orthogonal outcome has zero probability
  const auto pure_e = product_state(1.0, 0.5);
  CHECK_THROWS_AS(post_select(pure_e, {0, false}), ProtocolError);
}

TEST_CASE("ghost images") {
  DensityMatrix b1;
  b1.mat = Matrix(2);
  b1.mat(0, 0) = 0.75;
  b1.mat(1, 1) = 0.25;
  const auto img1 = ghost_image_1px(b1);
  CHECK(img1.pixels.size() == 1);
  CHECK(img1.pixels[0] == doctest::Approx(0.25).epsilon(1e-15));

  const auto img2 = ghost_image_2px(product_state(0.3, 0.8));
  CHECK(img2.pixels.size() == 2);
  CHECK(img2.pixels[0] == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(img2.pixels[1] == doctest::Approx(0.8).epsilon(1e-14));

  CHECK_THROWS_AS(ghost_image_1px(bell_state()), UsageError);
  CHECK_THROWS_AS(ghost_image_2px(b1), UsageError);
}

TEST_CASE("contrast") {
  CHECK(contrast(0.2, 0.2) == 0.0);
  CHECK(contrast(0.1, 0.3) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(contrast(0.3, 0.1) == doctest::Approx(1.0).epsilon(1e-15));
  // invariant under common rescaling
  CHECK(contrast(0.02, 0.06) == doctest::Approx(contrast(0.1, 0.3)).epsilon(1e-14));
  CHECK_THROWS_AS(contrast(0.0, 0.0), ProtocolError);
}

TEST_CASE("partial_transpose") {
  // product states stay PSD
  const auto prod = product_state(0.3, 0.8);
  const Matrix pt = partial_transpose(prod.mat, {1});
  CHECK(hermitian_eigenvalues(pt).front() >= -1e-15);

  // Bell state: spectrum {1/2, 1/2, 1/2, -1/2}
  const auto ev = hermitian_eigenvalues(partial_transpose(bell_state().mat, {1}));
  CHECK(ev[0] == doctest::Approx(-0.5).epsilon(1e-14));
  for (int i = 1; i < 4; ++i)
    CHECK(ev[i] == doctest::Approx(0.5).epsilon(1e-14));

  // involution
  const Matrix twice =
      partial_transpose(partial_transpose(bell_state().mat, {1}), {1});
  CHECK(twice.max_abs_diff(bell_state().mat) == 0.0);
}

TEST_CASE("negativity") {
  CHECK(negativity(product_state(0.3, 0.8), {1}) == 0.0);
  CHECK(negativity(bell_state(), {1}) == doctest::Approx(0.5).epsilon(1e-13));
  // independent of which side is transposed
  CHECK(negativity(bell_state(), {0}) ==
        doctest::Approx(negativity(bell_state(), {1})).epsilon(1e-13));
}

TEST_CASE("post-selection matches the direct conditional expansion") {
  // two detectors, Alice = detector 1 prepared e, Bob prepared g;
  // conditioning Alice on g must reproduce the explicit sum
  //   rho_B  propto  sum_{j2, l2} G((-1, l2), (-1, j2)) w_{j2} w_{l2}^dagger
  // with w_{+1} = |g>, w_{-1} = e^{i omega_2 tau} |e>.
  const double tau = 0.3;
  const std::vector<double> omegas = {1.0, 2.0};
  const GexpProvider gexp = [](const DiffVector& c) {
    double i = 0.0;
    for (std::size_t t = 0; t < c.size(); ++t)
      i += c.c[t] * c.c[t] * (t + 1.0) * kI1;
    return std::exp(-0.5 * i);
  };
  const GTable gt = build_g_table(2, gexp);
  const auto reg = RegisterState::from_string("eg", tau);
  const auto rho = assemble_rho(reg, gt, omegas);
  const auto [cond, prob] = post_select(rho, {0, false});

  const cplx wphase = std::polar(1.0, omegas[1] * tau);
  Matrix direct(2);
  // sign vector (-1, +1) has index 2, (-1, -1) has index 3
  const std::size_t idx[2] = {2, 3};
  const cplx w[2][2] = {{{1.0, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, wphase}};
  for (int j2 = 0; j2 < 2; ++j2)
    for (int l2 = 0; l2 < 2; ++l2)
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
          direct(r, c) += gt.at(idx[l2], idx[j2]) * w[j2][r] * std::conj(w[l2][c]);
  direct.scale(1.0 / direct.trace().real());

  CHECK(prob > 0.0);
  CHECK(cond.mat.max_abs_diff(direct) < 1e-13);
}
