#pragma once

// Test-side reference computations, written independently of the library's elimination code.

#include <gmpxx.h>

#include <vector>

#include "symc/symc.hpp"

namespace oracle {

using QMat = std::vector<std::vector<mpq_class>>;

// rank by textbook Gaussian elimination over Q
inline int rank_q(QMat a) {
  const int m = static_cast<int>(a.size());
  if (m == 0) return 0;
  const int n = static_cast<int>(a[0].size());
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int piv = -1;
    for (int i = r; i < m; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[r]);
    for (int i = r + 1; i < m; ++i) {
      if (a[i][c] == 0) continue;
      mpq_class f = a[i][c] / a[r][c];
      for (int j = c; j < n; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

// realification: A + iB -> [[A, -B], [B, A]] has twice the complex rank
inline int rank_gaussian(const symc::Matrix& m) {
  QMat a(2 * m.rows, std::vector<mpq_class>(2 * m.cols));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      a[i][j] = m(i, j).re;
      a[i][j + m.cols] = -m(i, j).im;
      a[i + m.rows][j] = m(i, j).im;
      a[i + m.rows][j + m.cols] = m(i, j).re;
    }
  return rank_q(a) / 2;
}

inline symc::Matrix random_matrix(symc::Rng& rng, int r, int c, bool complex, int rank_cap = -1) {
  // optional low rank: product of r x k and k x c factors
  auto fill = [&](int a, int b) {
    symc::Matrix m(a, b);
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j) {
        if (rng.uniform(0, 3) == 0) continue;
        m(i, j) = complex ? symc::Scalar(rng.rational(4).re, rng.rational(4).re) : rng.rational(4);
      }
    return m;
  };
  if (rank_cap < 0) return fill(r, c);
  return fill(r, rank_cap) * fill(rank_cap, c);
}

inline bool symmetric(const symc::Matrix& m) { return m == m.transpose(); }
inline bool antisymmetric(const symc::Matrix& m) { return m == -m.transpose(); }

// x^T T + T x = 0
inline bool preserves_form(const symc::Matrix& x, const symc::Matrix& T) { return (x.transpose() * T + T * x).is_zero(); }

// Jordan partition of a nilpotent matrix from ranks of its powers
inline std::vector<int> jordan_partition(const symc::Matrix& z) {
  std::vector<int> rk{z.rows};
  symc::Matrix p = symc::Matrix::identity(z.rows);
  while (rk.back() > 0) {
    p = p * z;
    rk.push_back(rank_gaussian(p));
  }
  std::vector<int> parts;
  const int K = static_cast<int>(rk.size()) - 1;
  for (int k = 1; k <= K; ++k) {
    int at_least_k = rk[k - 1] - rk[k];
    int at_least_k1 = k + 1 <= K ? rk[k] - rk[k + 1] : 0;
    for (int t = 0; t < at_least_k - at_least_k1; ++t) parts.push_back(k);
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

inline std::vector<int> row_lengths(const symc::ABDiagram& d) {
  std::vector<int> r;
  for (const auto& row : d.rows) r.push_back(static_cast<int>(row.size()));
  std::sort(r.rbegin(), r.rend());
  return r;
}

}  // namespace oracle
