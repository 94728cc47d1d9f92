#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace symc {

using Vector = std::vector<Scalar>;

inline bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline bool is_real(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_real()) return false;
  return true;
}

// Positive rational multiple of v with coprime integer entries (zero stays zero).
// Products of such vectors avoid the gcd work of general rationals.
inline Vector primitive(const Vector& v) {
  mpz_class l = 1, g = 0;
  for (const auto& x : v) {
    if (sgn(x.re) != 0) l = lcm(l, mpz_class(x.re.get_den()));
    if (sgn(x.im) != 0) l = lcm(l, mpz_class(x.im.get_den()));
  }
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    mpq_class re = v[i].re * l, im = v[i].im * l;
    r[i] = Scalar(re, im);
    if (sgn(re) != 0) g = gcd(g, mpz_class(re.get_num()));
    if (sgn(im) != 0) g = gcd(g, mpz_class(im.get_num()));
  }
  if (g > 1) {
    mpq_class gi(1, 1);
    gi /= g;
    for (auto& x : r)
      if (!x.is_zero()) x = Scalar(x.re * gi, x.im * gi);
  }
  return r;
}

// Dense row-major matrix.  An n x n matrix doubles as a flat vector of length n^2.
class Matrix {
 public:
  int rows = 0, cols = 0;
  Vector a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  Matrix(int r, int c, Vector entries) : rows(r), cols(c), a(std::move(entries)) {
    if (a.size() != static_cast<std::size_t>(r) * c) throw DimensionError("matrix entry count mismatch");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix unit(int n, int i, int j) {
    Matrix m(n, n);
    m(i, j) = 1;
    return m;
  }
  static Matrix from_flat(int n, const Vector& v) { return Matrix(n, n, v); }
  static Matrix from_rows(const std::vector<Vector>& rws) {
    if (rws.empty()) return Matrix();
    Matrix m(static_cast<int>(rws.size()), static_cast<int>(rws[0].size()));
    for (int i = 0; i < m.rows; ++i) {
      if (static_cast<int>(rws[i].size()) != m.cols) throw DimensionError("ragged rows");
      for (int j = 0; j < m.cols; ++j) m(i, j) = rws[i][j];
    }
    return m;
  }

  Scalar& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Scalar& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  bool square() const { return rows == cols; }
  bool is_zero() const { return symc::is_zero(a); }
  bool is_real() const { return symc::is_real(a); }
  const Vector& flat() const { return a; }

  Vector row(int i) const { return Vector(a.begin() + static_cast<long>(i) * cols, a.begin() + static_cast<long>(i + 1) * cols); }
  Vector col(int j) const {
    Vector v(rows);
    for (int i = 0; i < rows; ++i) v[i] = (*this)(i, j);
    return v;
  }
  std::vector<Vector> row_list() const {
    std::vector<Vector> out;
    out.reserve(rows);
    for (int i = 0; i < rows; ++i) out.push_back(row(i));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Scalar trace() const {
    Scalar t;
    for (int i = 0; i < std::min(rows, cols); ++i) t += (*this)(i, i);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!o.a[i].is_zero()) a[i] += o.a[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!o.a[i].is_zero()) a[i] -= o.a[i];
    return *this;
  }
  Matrix& operator*=(const Scalar& s) {
    for (auto& x : a)
      if (!x.is_zero()) x *= s;
    return *this;
  }
  friend Matrix operator+(Matrix x, const Matrix& y) { return x += y; }
  friend Matrix operator-(Matrix x, const Matrix& y) { return x -= y; }
  friend Matrix operator*(Matrix x, const Scalar& s) { return x *= s; }
  friend Matrix operator*(const Scalar& s, Matrix x) { return x *= s; }
  Matrix operator-() const {
    Matrix m = *this;
    for (auto& x : m.a) x = -x;
    return m;
  }

  // Skips zero entries; most matrices here are sparse basis elements.
  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols != y.rows) throw DimensionError("matrix product shape mismatch");
    Matrix r(x.rows, y.cols);
    Scalar t;
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        const Scalar& xik = x(i, k);
        if (xik.is_zero()) continue;
        for (int j = 0; j < y.cols; ++j) {
          const Scalar& ykj = y(k, j);
          if (ykj.is_zero()) continue;
          if (xik.is_real() && ykj.is_real()) {
            mpq_mul(t.re.get_mpq_t(), xik.re.get_mpq_t(), ykj.re.get_mpq_t());
            r(i, j).re += t.re;
          } else {
            r(i, j) += xik * ykj;
          }
        }
      }
    return r;
  }

  Vector operator*(const Vector& v) const {
    if (static_cast<int>(v.size()) != cols) throw DimensionError("matrix-vector shape mismatch");
    Vector r(rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (!(*this)(i, j).is_zero() && !v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) { return x.rows == y.rows && x.cols == y.cols && x.a == y.a; }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

 private:
  void check_same(const Matrix& o) const {
    if (rows != o.rows || cols != o.cols) throw DimensionError("matrix shape mismatch");
  }
};

inline Matrix commutator(const Matrix& x, const Matrix& y) { return x * y - y * x; }

inline Matrix power(const Matrix& m, int e) {
  Matrix r = Matrix::identity(m.rows), b = m;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

inline bool is_nilpotent(const Matrix& m) { return power(m, m.rows).is_zero(); }

}  // namespace symc
