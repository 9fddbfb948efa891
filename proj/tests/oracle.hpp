#pragma once

// Naive reference computations used only by the tests.  Everything here works
// on plain mpq_class arrays read off the structure constants, so it shares no
// code path with the library's linear algebra.

#include <gmpxx.h>

#include <random>
#include <vector>

#include "jordan/algebra.hpp"
#include "jordan/cohomology.hpp"

namespace oracle {

using Q = mpq_class;
using Vec = std::vector<Q>;

struct Table {
  std::size_t n = 0;
  std::vector<std::vector<Vec>> c;  // c[i][j] = e_i e_j, full square

  Vec mul(const Vec& x, const Vec& y) const {
    Vec z(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (y[j] == 0) continue;
        Q s = x[i] * y[j];
        for (std::size_t k = 0; k < n; ++k) z[k] += s * c[i][j][k];
      }
    }
    return z;
  }
};

inline Table table_of(const jordan::Algebra& A) {
  Table t;
  t.n = A.dim();
  t.c.assign(t.n, std::vector<Vec>(t.n, Vec(t.n, 0)));
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j)
      for (std::size_t k = 0; k < t.n; ++k) t.c[i][j][k] = A.constant(i, j, k).rational();
  return t;
}

/// Table of A (+) k^s with the bilinear forms theta_t landing on the new coordinates.
inline Table extended(const jordan::Algebra& A, const std::vector<std::vector<Vec>>& forms) {
  Table base = table_of(A);
  Table t;
  t.n = A.dim() + forms.size();
  t.c.assign(t.n, std::vector<Vec>(t.n, Vec(t.n, 0)));
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      for (std::size_t k = 0; k < A.dim(); ++k) t.c[i][j][k] = base.c[i][j][k];
      for (std::size_t s = 0; s < forms.size(); ++s) t.c[i][j][A.dim() + s] = forms[s][i][j];
    }
  return t;
}

inline Vec random_vec(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  Vec v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

/// (x^2 y) x = x^2 (y x) at random integer points.  The identity is
/// polynomial of degree 4, so a failure at any point is a certificate.
inline bool jordan_random(const Table& t, int trials = 60, std::uint64_t seed = 7) {
  std::mt19937_64 rng(seed);
  for (int r = 0; r < trials; ++r) {
    Vec x = random_vec(t.n, rng), y = random_vec(t.n, rng);
    Vec x2 = t.mul(x, x);
    if (t.mul(t.mul(x2, y), x) != t.mul(x2, t.mul(y, x))) return false;
  }
  return true;
}

inline bool commutative(const Table& t) {
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j)
      if (t.c[i][j] != t.c[j][i]) return false;
  return true;
}

inline bool associative(const Table& t) {
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j)
      for (std::size_t k = 0; k < t.n; ++k) {
        Vec ei(t.n, 0), ek(t.n, 0);
        ei[i] = 1;
        ek[k] = 1;
        if (t.mul(t.c[i][j], ek) != t.mul(ei, t.c[j][k])) return false;
      }
  return true;
}

/// Rank over Q by plain Gaussian elimination.
inline std::size_t rank(std::vector<Vec> rows) {
  std::size_t r = 0;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t q = 0; q < rows.size(); ++q) {
      if (q == r || rows[q][c] == 0) continue;
      Q f = rows[q][c] / rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[q][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

/// dim of the span of all products of length >= k (left and right nested), by brute force.
inline std::size_t span_dim(const std::vector<Vec>& vs) { return rank(vs); }

/// Elements annihilating everything: solved as the kernel of the multiplication map.
inline std::size_t annihilator_dim(const Table& t) {
  std::vector<Vec> rows;
  for (std::size_t j = 0; j < t.n; ++j)
    for (std::size_t k = 0; k < t.n; ++k) {
      Vec r(t.n);
      for (std::size_t i = 0; i < t.n; ++i) r[i] = t.c[i][j][k];
      rows.push_back(r);
    }
  return t.n - rank(rows);
}

inline std::vector<Vec> form_of(const jordan::Cocycle& c) {
  std::size_t n = c.dim();
  std::vector<Vec> m(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = c.matrix()(i, j).rational();
  return m;
}

/// A symmetric form is a Jordan cocycle exactly when the extension it defines is Jordan.
inline bool is_cocycle(const jordan::Algebra& A, const jordan::Cocycle& c) {
  return jordan_random(extended(A, {form_of(c)}));
}

}  // namespace oracle
