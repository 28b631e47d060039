// Small exact integer/rational linear algebra used throughout parflag.
// Matrices are row-major, dense, and tiny (rank of the torus, <= ~8).

#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace parflag {

using Int = long long;
using Vec = std::vector<Int>;
using Mat = std::vector<Vec>;
using Rat = boost::rational<Int>;

inline void fail(const std::string& msg) { throw std::runtime_error(msg); }

inline Int dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail("dot: size mismatch");
  Int s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

inline Mat identity_mat(int n) {
  Mat m(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
  std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  Mat c(n, Vec(p, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      Int aij = a[i][t];
      if (aij == 0) continue;
      for (std::size_t j = 0; j < p; ++j) c[i][j] += aij * b[t][j];
    }
  return c;
}

inline Vec mat_apply(const Mat& m, const Vec& v) {
  Vec r(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
  return r;
}

inline Mat mat_transpose(const Mat& m) {
  if (m.empty()) return m;
  Mat t(m[0].size(), Vec(m.size(), 0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[0].size(); ++j) t[j][i] = m[i][j];
  return t;
}

// Fraction-free determinant (Bareiss).
inline Int mat_det(Mat m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) { swap = i; break; }
      if (swap < 0) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Exact inverse via Gauss-Jordan over Q; true iff invertible.
inline bool mat_inverse_rat(const Mat& m, std::vector<std::vector<Rat>>& out) {
  int n = static_cast<int>(m.size());
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
    a[i][n + i] = Rat(1);
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (a[i][col] != Rat(0)) { piv = i; break; }
    if (piv < 0) return false;
    std::swap(a[col], a[piv]);
    Rat d = a[col][col];
    for (int j = 0; j < 2 * n; ++j) a[col][j] /= d;
    for (int i = 0; i < n; ++i) {
      if (i == col || a[i][col] == Rat(0)) continue;
      Rat f = a[i][col];
      for (int j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  out.assign(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return true;
}

// Inverse of an integer matrix that is invertible over Z (det = +-1).
inline bool mat_inverse_int(const Mat& m, Mat& out) {
  std::vector<std::vector<Rat>> inv;
  if (!mat_inverse_rat(m, inv)) return false;
  int n = static_cast<int>(m.size());
  out.assign(n, Vec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (inv[i][j].denominator() != 1) return false;
      out[i][j] = inv[i][j].numerator();
    }
  return true;
}

}  // namespace parflag
