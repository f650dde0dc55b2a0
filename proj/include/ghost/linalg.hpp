#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "ghost/errors.hpp"

namespace ghost {

using cplx = std::complex<double>;

/// Small dense complex matrix, row-major. Everything in this project is
/// at most 16x16, so no attempt is made at blocking or expression templates.
class Matrix {
 public:
  Matrix() : dim_(0) {}
  explicit Matrix(std::size_t dim) : dim_(dim), a_(dim * dim, cplx{0.0, 0.0}) {}

  std::size_t dim() const { return dim_; }

  cplx& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return a_[r * dim_ + c];
  }

  cplx trace() const {
    cplx t{0.0, 0.0};
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  Matrix adjoint() const {
    Matrix m(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
  }

  // max |entry| of (this - other)
  double max_abs_diff(const Matrix& other) const {
    double m = 0.0;
    for (std::size_t i = 0; i < a_.size(); ++i)
      m = std::max(m, std::abs(a_[i] - other.a_[i]));
    return m;
  }

  double hermiticity_defect() const { return max_abs_diff(adjoint()); }

  void scale(double s) {
    for (auto& x : a_) x *= s;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix m(a.dim_);
    for (std::size_t r = 0; r < a.dim_; ++r)
      for (std::size_t k = 0; k < a.dim_; ++k) {
        const cplx ark = a(r, k);
        if (ark == cplx{}) continue;
        for (std::size_t c = 0; c < a.dim_; ++c) m(r, c) += ark * b(k, c);
      }
    return m;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix m(a.dim_);
    for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = a.a_[i] + b.a_[i];
    return m;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix m(a.dim_);
    for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = a.a_[i] - b.a_[i];
    return m;
  }

  static Matrix identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

 private:
  std::size_t dim_;
  std::vector<cplx> a_;
};

/// Eigenvalues of a complex Hermitian matrix by cyclic Jacobi sweeps.
/// Each pivot (p,q) is reduced to a real 2x2 problem by factoring out the
/// phase of A(p,q), then annihilated with the usual stable rotation.
/// Returns the spectrum sorted ascending. Intended for dim <= 16.
inline std::vector<double> hermitian_eigenvalues(Matrix a) {
  const std::size_t n = a.dim();
  if (n == 0) return {};
  if (a.hermiticity_defect() > 1e-8)
    throw UsageError("hermitian_eigenvalues: matrix is not Hermitian");

  // force exact Hermitian symmetry so rotations stay consistent
  for (std::size_t p = 0; p < n; ++p) {
    a(p, p) = cplx{a(p, p).real(), 0.0};
    for (std::size_t q = p + 1; q < n; ++q) {
      const cplx avg = 0.5 * (a(p, q) + std::conj(a(q, p)));
      a(p, q) = avg;
      a(q, p) = std::conj(avg);
    }
  }

  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(a(i, j)));
  if (scale == 0.0) return std::vector<double>(n, 0.0);
  const double tol = 1e-15 * scale;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
    if (off <= tol) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag <= tol) continue;
        const cplx phase = apq / mag;  // A(p,q) = mag * phase
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();

        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // combined unitary V = diag(1, conj(phase)) * [[c, s], [-s, c]]
        // in the (p,q) plane; conj(V) A V annihilates A(p,q)
        const cplx vqp = -s * std::conj(phase);
        const cplx vqq = c * std::conj(phase);

        a(p, p) = cplx{app - t * mag, 0.0};
        a(q, q) = cplx{aqq + t * mag, 0.0};
        a(p, q) = cplx{0.0, 0.0};
        a(q, p) = cplx{0.0, 0.0};

        for (std::size_t i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const cplx aip = a(i, p);
          const cplx aiq = a(i, q);
          a(i, p) = aip * c + aiq * vqp;
          a(i, q) = aip * s + aiq * vqq;
          a(p, i) = std::conj(a(i, p));
          a(q, i) = std::conj(a(i, q));
        }
      }
    }
  }

  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

}  // namespace ghost
