#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ghost/errors.hpp"
#include "ghost/linalg.hpp"
#include "ghost/register_algebra.hpp"

namespace ghost {

inline std::size_t qubit_count(const Matrix& m) {
  std::size_t n = 0;
  while ((std::size_t{1} << n) < m.dim()) ++n;
  if ((std::size_t{1} << n) != m.dim())
    throw UsageError("matrix dimension is not a power of two");
  return n;
}

/// Trace out the detectors listed in `traced` (0-based indices, detector 0
/// is the most significant qubit). Remaining detectors keep their order.
inline Matrix partial_trace(const Matrix& rho,
                            const std::vector<std::size_t>& traced) {
  const std::size_t n = qubit_count(rho);
  std::vector<bool> is_traced(n, false);
  for (std::size_t t : traced) {
    if (t >= n) throw UsageError("partial_trace: detector index out of range");
    is_traced[t] = true;
  }
  std::vector<std::size_t> kept;
  for (std::size_t t = 0; t < n; ++t)
    if (!is_traced[t]) kept.push_back(t);

  const std::size_t nk = kept.size();
  const std::size_t nt = traced.size();
  const std::size_t dim_k = std::size_t{1} << nk;
  const std::size_t dim_t = std::size_t{1} << nt;

  const auto bit_of = [&](std::size_t det) { return n - 1 - det; };

  // compose a full index from kept-part and traced-part sub-indices
  const auto full_index = [&](std::size_t kpart, std::size_t tpart) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < nk; ++i)
      if (kpart & (std::size_t{1} << (nk - 1 - i)))
        idx |= std::size_t{1} << bit_of(kept[i]);
    std::size_t ti = 0;
    for (std::size_t t = 0; t < n; ++t) {
      if (!is_traced[t]) continue;
      if (tpart & (std::size_t{1} << (nt - 1 - ti)))
        idx |= std::size_t{1} << bit_of(t);
      ++ti;
    }
    return idx;
  };

  Matrix out(dim_k);
  for (std::size_t r = 0; r < dim_k; ++r)
    for (std::size_t c = 0; c < dim_k; ++c) {
      cplx s{0.0, 0.0};
      for (std::size_t x = 0; x < dim_t; ++x)
        s += rho(full_index(r, x), full_index(c, x));
      out(r, c) = s;
    }
  return out;
}

/// Transpose the indices of subsystem B (a set of detector indices).
/// Hermiticity and trace are preserved; the output need not be PSD.
inline Matrix partial_transpose(const Matrix& rho,
                                const std::vector<std::size_t>& subsystem_b) {
  const std::size_t n = qubit_count(rho);
  std::size_t bmask = 0;
  for (std::size_t t : subsystem_b) {
    if (t >= n) throw UsageError("partial_transpose: index out of range");
    bmask |= std::size_t{1} << (n - 1 - t);
  }
  Matrix out(rho.dim());
  for (std::size_t r = 0; r < rho.dim(); ++r)
    for (std::size_t c = 0; c < rho.dim(); ++c) {
      const std::size_t rr = (r & ~bmask) | (c & bmask);
      const std::size_t cc = (c & ~bmask) | (r & bmask);
      out(rr, cc) = rho(r, c);
    }
  return out;
}

/// Condition on a computational-basis-diagonal projector (keep(full index)
/// marks the retained subspace), trace out the listed detectors, and
/// renormalize. Returns the post-selected state and the branch probability.
inline std::pair<DensityMatrix, double> post_select_mask(
    const DensityMatrix& dm, const std::vector<std::size_t>& traced,
    const std::function<bool(std::size_t)>& keep,
    const std::string& label = "projector") {
  const Matrix& rho = dm.mat;
  Matrix masked(rho.dim());
  double prob = 0.0;
  for (std::size_t r = 0; r < rho.dim(); ++r) {
    if (!keep(r)) continue;
    prob += rho(r, r).real();
    for (std::size_t c = 0; c < rho.dim(); ++c)
      if (keep(c)) masked(r, c) = rho(r, c);
  }
  if (prob <= 1e-12)
    throw ProtocolError("post-selection on " + label +
                        " has (near-)zero probability");
  Matrix reduced = partial_trace(masked, traced);
  reduced.scale(1.0 / prob);
  DensityMatrix out;
  out.mat = std::move(reduced);
  out.pre_norm_trace = prob;
  return {std::move(out), prob};
}

/// Projective post-selection of one detector on g or e.
struct Projector {
  std::size_t detector = 0;
  bool excited = false;
};

inline std::pair<DensityMatrix, double> post_select(const DensityMatrix& dm,
                                                    const Projector& proj) {
  const std::size_t n = qubit_count(dm.mat);
  if (proj.detector >= n)
    throw UsageError("post_select: detector index out of range");
  const std::size_t bit = std::size_t{1} << (n - 1 - proj.detector);
  const std::string label = std::string("detector ") +
                            std::to_string(proj.detector + 1) + " outcome " +
                            (proj.excited ? "e" : "g");
  return post_select_mask(
      dm, {proj.detector},
      [=](std::size_t idx) { return ((idx & bit) != 0) == proj.excited; },
      label);
}

/// Reconstructed image: per-pixel intensities in [0, 1] (ground = black =
/// 0, excited = white = 1) plus the raw outcome probabilities they were
/// mixed from.
struct GhostImage {
  std::vector<double> pixels;
  std::vector<std::pair<std::string, double>> provenance;
};

inline GhostImage ghost_image_1px(const DensityMatrix& rho_b) {
  if (rho_b.dim() != 2) throw UsageError("ghost_image_1px: need a 2x2 state");
  const double pg = rho_b.mat(0, 0).real();
  const double pe = rho_b.mat(1, 1).real();
  GhostImage img;
  img.pixels = {pe};
  img.provenance = {{"g", pg}, {"e", pe}};
  return img;
}

inline GhostImage ghost_image_2px(const DensityMatrix& rho_b) {
  if (rho_b.dim() != 4) throw UsageError("ghost_image_2px: need a 4x4 state");
  const double pgg = rho_b.mat(0, 0).real();
  const double pge = rho_b.mat(1, 1).real();
  const double peg = rho_b.mat(2, 2).real();
  const double pee = rho_b.mat(3, 3).real();
  GhostImage img;
  // marginal excitation probability per pixel
  img.pixels = {peg + pee, pge + pee};
  img.provenance = {{"gg", pgg}, {"ge", pge}, {"eg", peg}, {"ee", pee}};
  return img;
}

/// Intensity difference over the average intensity of the two candidate
/// reconstructions.
inline double contrast(double intensity_g, double intensity_e) {
  const double avg = 0.5 * (intensity_g + intensity_e);
  if (!(avg > 0.0))
    throw ProtocolError("contrast undefined: average intensity is zero");
  return std::abs(intensity_e - intensity_g) / avg;
}

/// Negativity across the given bipartition: minus the sum of negative
/// eigenvalues of the partial transpose. Eigenvalues above -1e-10 count
/// as numerical noise.
inline double negativity(const DensityMatrix& rho,
                         const std::vector<std::size_t>& subsystem_b) {
  const Matrix pt = partial_transpose(rho.mat, subsystem_b);
  double neg = 0.0;
  for (double ev : hermitian_eigenvalues(pt))
    if (ev < -1e-10) neg -= ev;
  return neg;
}

}  // namespace ghost
