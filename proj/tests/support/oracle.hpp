#pragma once

// Test-only reference arithmetic, independent of lieforge: 64-bit fractions,
// plain Gaussian elimination, and structure constants written out by hand.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

struct Frac {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Frac() = default;
  Frac(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {  // NOLINT
    if (den == 0) throw std::domain_error("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const auto g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  bool zero() const { return num == 0; }
  friend Frac operator+(Frac a, Frac b) { return Frac(a.num * b.den + b.num * a.den, a.den * b.den); }
  friend Frac operator-(Frac a, Frac b) { return Frac(a.num * b.den - b.num * a.den, a.den * b.den); }
  friend Frac operator*(Frac a, Frac b) { return Frac(a.num * b.num, a.den * b.den); }
  friend Frac operator/(Frac a, Frac b) { return Frac(a.num * b.den, a.den * b.num); }
  friend bool operator==(Frac a, Frac b) { return a.num == b.num && a.den == b.den; }
};

using Mat = std::vector<std::vector<Frac>>;

inline std::size_t rank(Mat m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c].zero()) continue;
      const Frac f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    ++r;
  }
  return r;
}

inline Frac det(Mat m) {
  const std::size_t n = m.size();
  Frac d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = d * Frac(-1);
    }
    d = d * m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      const Frac f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] = m[i][j] - f * m[c][j];
    }
  }
  return d;
}

/// c[i][j][k] = coefficient of e_k in [e_i, e_j].
using Tensor = std::vector<std::vector<std::vector<std::int64_t>>>;

inline Tensor empty_tensor(std::size_t n) {
  return Tensor(n, std::vector<std::vector<std::int64_t>>(n, std::vector<std::int64_t>(n, 0)));
}

inline void rel(Tensor& t, std::size_t i, std::size_t j, std::size_t k, std::int64_t c) {
  t[i][j][k] += c;
  t[j][i][k] -= c;
}

// Hand-copied defining relations, not taken from the library catalog.
inline Tensor sl2_ehf() {
  Tensor t = empty_tensor(3);  // e=0, h=1, f=2
  rel(t, 1, 0, 0, 2);          // [h,e] = 2e
  rel(t, 1, 2, 2, -2);         // [h,f] = -2f
  rel(t, 0, 2, 1, 1);          // [e,f] = h
  return t;
}

inline Tensor heisenberg1() {
  Tensor t = empty_tensor(3);  // x, y, z
  rel(t, 0, 1, 2, 1);
  return t;
}

inline Tensor nonabelian2() {
  Tensor t = empty_tensor(2);  // a, b
  rel(t, 0, 1, 1, 1);
  return t;
}

inline std::vector<Frac> bracket(const Tensor& t, const std::vector<Frac>& x, const std::vector<Frac>& y) {
  const std::size_t n = t.size();
  std::vector<Frac> r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (t[i][j][k] != 0) r[k] = r[k] + x[i] * y[j] * Frac(t[i][j][k]);
  return r;
}

inline std::vector<Frac> unit(std::size_t n, std::size_t i) {
  std::vector<Frac> v(n);
  v[i] = 1;
  return v;
}

/// dim Der(L) by brute force: every matrix unit E_pq (d e_q = e_p) is pushed
/// through the derivation identity on all basis pairs, giving one column of a
/// linear map whose kernel is Der(L).
inline std::size_t derivation_dimension(const Tensor& t) {
  const std::size_t n = t.size();
  auto apply = [&](std::size_t p, std::size_t q, const std::vector<Frac>& v) {
    std::vector<Frac> r(n);
    r[p] = v[q];
    return r;
  };
  const std::size_t unknowns = n * n;
  Mat system;  // rows: (i, j, k); columns: unknown index q * n + p (column-major)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) system.emplace_back(unknowns);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const std::size_t col = q * n + p;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const auto ei = unit(n, i), ej = unit(n, j);
          const auto lhs = apply(p, q, bracket(t, ei, ej));
          const auto r1 = bracket(t, apply(p, q, ei), ej);
          const auto r2 = bracket(t, ei, apply(p, q, ej));
          for (std::size_t k = 0; k < n; ++k) system[(i * n + j) * n + k][col] = lhs[k] - r1[k] - r2[k];
        }
    }
  return unknowns - rank(system);
}

/// Killing Gram matrix Tr(ad e_i ad e_j).
inline Mat killing(const Tensor& t) {
  const std::size_t n = t.size();
  // ad e_i has entry (k, j) = c[i][j][k].
  Mat k(n, std::vector<Frac>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Frac tr = 0;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) tr = tr + Frac(t[a][s][r]) * Frac(t[b][r][s]);
      k[a][b] = tr;
    }
  return k;
}

}  // namespace oracle
