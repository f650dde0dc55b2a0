#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ghost/errors.hpp"

namespace ghost {

/// Element of {-1, +1}^n. Canonical enumeration order: index i in
/// [0, 2^n) with detector 1 as the most significant bit; a set bit
/// means -1, so index 0 is the all +1 vector.
struct SignVector {
  std::vector<int> s;

  std::size_t size() const { return s.size(); }
  int operator[](std::size_t i) const { return s[i]; }

  static SignVector from_index(std::size_t idx, std::size_t n) {
    SignVector v;
    v.s.resize(n);
    for (std::size_t t = 0; t < n; ++t)
      v.s[t] = (idx >> (n - 1 - t)) & 1u ? -1 : 1;
    return v;
  }

  std::size_t to_index() const {
    std::size_t idx = 0;
    for (std::size_t t = 0; t < s.size(); ++t)
      idx = (idx << 1) | (s[t] == -1 ? 1u : 0u);
    return idx;
  }

  static std::size_t count(std::size_t n) { return std::size_t{1} << n; }
};

/// Per-detector differences c_t = k_t - m_t with k, m sign vectors;
/// entries live in {-2, 0, 2}. Used as the cache key for the field
/// overlap integrals, identifying c with -c.
struct DiffVector {
  std::vector<int> c;

  explicit DiffVector(std::vector<int> entries) : c(std::move(entries)) {
    for (int v : c)
      if (v != -2 && v != 0 && v != 2)
        throw UsageError("DiffVector: entries must be in {-2, 0, 2}");
  }

  static DiffVector difference(const SignVector& k, const SignVector& m) {
    if (k.size() != m.size())
      throw UsageError("DiffVector: sign vector length mismatch");
    std::vector<int> c(k.size());
    for (std::size_t t = 0; t < k.size(); ++t) c[t] = k[t] - m[t];
    return DiffVector(std::move(c));
  }

  std::size_t size() const { return c.size(); }

  bool all_zero() const {
    for (int v : c)
      if (v != 0) return false;
    return true;
  }

  DiffVector negated() const {
    std::vector<int> n(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) n[i] = -c[i];
    return DiffVector(std::move(n));
  }

  // Representative of the {c, -c} pair: first nonzero entry positive.
  DiffVector canonical() const {
    for (int v : c) {
      if (v > 0) return *this;
      if (v < 0) return negated();
    }
    return *this;
  }

  bool operator==(const DiffVector& o) const { return c == o.c; }
  bool operator<(const DiffVector& o) const { return c < o.c; }
};

}  // namespace ghost
