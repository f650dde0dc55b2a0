#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "ghost/errors.hpp"
#include "ghost/linalg.hpp"
#include "ghost/sign_vectors.hpp"

namespace ghost {

/// Initial product state of the detector register and the shared coupling
/// instant. Basis convention: detector 1 is the most significant qubit,
/// g maps to bit 0, e to bit 1.
struct RegisterState {
  std::size_t n = 1;
  std::vector<bool> initial_excited;  // per detector, g = false
  double tau = 0.0;

  static RegisterState from_string(const std::string& s, double tau) {
    RegisterState r;
    r.n = s.size();
    r.tau = tau;
    for (char ch : s) {
      if (ch == 'g')
        r.initial_excited.push_back(false);
      else if (ch == 'e')
        r.initial_excited.push_back(true);
      else
        throw ConfigError("register: initial state must be a string over {g, e}");
    }
    return r;
  }

  void validate() const {
    if (n < 1) throw ConfigError("register: need at least one detector");
    if (initial_excited.size() != n)
      throw ConfigError("register: initial state length mismatch");
  }

  std::size_t basis_index() const {
    std::size_t idx = 0;
    for (std::size_t t = 0; t < n; ++t)
      idx = (idx << 1) | (initial_excited[t] ? 1u : 0u);
    return idx;
  }
};

/// Detector flip operator in the (g, e) basis: zero diagonal,
/// off-diagonals exp(+-i omega tau). Squares to the identity.
inline Matrix monopole_matrix(double omega, double tau) {
  Matrix q(2);
  q(0, 1) = std::polar(1.0, -omega * tau);  // <g| row, |e> column
  q(1, 0) = std::polar(1.0, omega * tau);
  return q;
}

/// Identity for sign +1, monopole for -1.
inline Matrix delta_operator(int i_s, double omega, double tau) {
  if (i_s == 1) return Matrix::identity(2);
  if (i_s == -1) return monopole_matrix(omega, tau);
  throw UsageError("delta_operator: sign must be +1 or -1");
}

/// Sign coefficient: 1 when k = 1, j when k = -1.
inline int delta_tilde(int j, int k) {
  if (k == 1) return 1;
  if (k == -1) return j;
  throw UsageError("delta_tilde: sign must be +1 or -1");
}

/// Symmetric table of field overlap values G(l, j), indexed by the
/// canonical sign-vector enumeration.
class GTable {
 public:
  explicit GTable(std::size_t n)
      : n_(n), values_(SignVector::count(n) * SignVector::count(n), 0.0) {}

  std::size_t n() const { return n_; }

  double& at(std::size_t l_idx, std::size_t j_idx) {
    return values_[l_idx * SignVector::count(n_) + j_idx];
  }
  double at(std::size_t l_idx, std::size_t j_idx) const {
    return values_[l_idx * SignVector::count(n_) + j_idx];
  }

 private:
  std::size_t n_;
  std::vector<double> values_;
};

using GexpProvider = std::function<double(const DiffVector&)>;

/// One G-table cell: the 2^{2n}-term sum over sign vectors k, m of the
/// delta_tilde products times exp(-I(k - m)/2).
inline double g_value(const SignVector& l, const SignVector& j,
                      const GexpProvider& gexp) {
  if (l.size() != j.size()) throw UsageError("g_value: length mismatch");
  const std::size_t n = l.size();
  const std::size_t cnt = SignVector::count(n);
  double sum = 0.0;
  for (std::size_t ki = 0; ki < cnt; ++ki) {
    const SignVector k = SignVector::from_index(ki, n);
    for (std::size_t mi = 0; mi < cnt; ++mi) {
      const SignVector m = SignVector::from_index(mi, n);
      int sign = 1;
      for (std::size_t t = 0; t < n; ++t)
        sign *= delta_tilde(l[t], m[t]) * delta_tilde(j[t], k[t]);
      sum += sign * gexp(DiffVector::difference(k, m));
    }
  }
  return sum / static_cast<double>(cnt * cnt);
}

/// Fill the whole table. Cells reuse the shared gexp provider, so a warm
/// cache makes this cheap.
inline GTable build_g_table(std::size_t n, const GexpProvider& gexp) {
  GTable gt(n);
  const std::size_t cnt = SignVector::count(n);
  for (std::size_t li = 0; li < cnt; ++li) {
    const SignVector l = SignVector::from_index(li, n);
    for (std::size_t ji = 0; ji < cnt; ++ji) {
      const SignVector j = SignVector::from_index(ji, n);
      gt.at(li, ji) = g_value(l, j, gexp);
    }
  }
  return gt;
}

/// Post-coupling state of the detector register, with the trace recorded
/// before renormalization.
struct DensityMatrix {
  Matrix mat;
  double pre_norm_trace = 1.0;

  std::size_t dim() const { return mat.dim(); }

  double min_eigenvalue() const {
    const auto ev = hermitian_eigenvalues(mat);
    return ev.empty() ? 0.0 : ev.front();
  }

  void validate() const {
    if (mat.hermiticity_defect() > 1e-10)
      throw NumericalError("density matrix: not Hermitian within 1e-10");
    if (std::abs(mat.trace().real() - 1.0) > 1e-8 ||
        std::abs(mat.trace().imag()) > 1e-8)
      throw NumericalError("density matrix: trace deviates from 1");
    if (min_eigenvalue() < -1e-8)
      throw NumericalError("density matrix: spectrum below -1e-8");
  }
};

/// Assemble the 2^n x 2^n register state from the G-table:
/// rho = sum over sign vectors j, l of G(l, j) v_j v_l^dagger, where
/// v_j applies the per-detector flip (with its monopole phase) to the
/// initial product state wherever j_t = -1.
inline DensityMatrix assemble_rho(const RegisterState& reg, const GTable& gt,
                                  const std::vector<double>& omegas) {
  reg.validate();
  const std::size_t n = reg.n;
  if (gt.n() != n) throw UsageError("assemble_rho: G-table size mismatch");
  if (omegas.size() != n) throw UsageError("assemble_rho: omega list mismatch");

  const std::size_t cnt = SignVector::count(n);
  const std::size_t e0 = reg.basis_index();

  // v_j: basis index after flipping detectors with j_t = -1, and the
  // accumulated monopole phase. Q|g> = e^{+i omega tau}|e>,
  // Q|e> = e^{-i omega tau}|g>.
  std::vector<std::size_t> vidx(cnt);
  std::vector<cplx> vphase(cnt);
  for (std::size_t ji = 0; ji < cnt; ++ji) {
    const SignVector j = SignVector::from_index(ji, n);
    std::size_t b = e0;
    cplx phase{1.0, 0.0};
    for (std::size_t t = 0; t < n; ++t) {
      if (j[t] != -1) continue;
      const std::size_t bit = std::size_t{1} << (n - 1 - t);
      const bool was_excited = (b & bit) != 0;
      phase *= std::polar(1.0, (was_excited ? -1.0 : 1.0) * omegas[t] * reg.tau);
      b ^= bit;
    }
    vidx[ji] = b;
    vphase[ji] = phase;
  }

  Matrix rho(std::size_t{1} << n);
  for (std::size_t ji = 0; ji < cnt; ++ji)
    for (std::size_t li = 0; li < cnt; ++li)
      rho(vidx[ji], vidx[li]) +=
          gt.at(li, ji) * vphase[ji] * std::conj(vphase[li]);

  DensityMatrix dm;
  dm.pre_norm_trace = rho.trace().real();
  if (std::abs(dm.pre_norm_trace) < 1e-12)
    throw NumericalError("assemble_rho: degenerate scenario, trace below 1e-12");
  rho.scale(1.0 / dm.pre_norm_trace);
  dm.mat = std::move(rho);
  return dm;
}

}  // namespace ghost
