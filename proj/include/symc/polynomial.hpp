#pragma once

#include <string>
#include <vector>

#include "linalg.hpp"

namespace symc {

// Coefficients in increasing degree; the zero polynomial has no coefficients.
class Polynomial {
 public:
  std::vector<Scalar> c;

  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : c(std::move(coeffs)) { trim(); }

  static Polynomial monomial(int deg, Scalar coef = 1) {
    std::vector<Scalar> v(deg + 1);
    v[deg] = std::move(coef);
    return Polynomial(std::move(v));
  }
  // product of (x - r) over the roots
  static Polynomial from_roots(const std::vector<Scalar>& roots) {
    Polynomial p({Scalar(1)});
    for (const auto& r : roots) p = p * Polynomial({-r, Scalar(1)});
    return p;
  }

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const Scalar& lead() const { return c.back(); }

  Polynomial derivative() const {
    if (c.size() <= 1) return {};
    std::vector<Scalar> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * Scalar(static_cast<long>(i));
    return Polynomial(std::move(d));
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    Scalar inv = lead().inverse();
    std::vector<Scalar> d = c;
    for (auto& x : d) x *= inv;
    return Polynomial(std::move(d));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> r(a.c.size() + b.c.size() - 1);
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Scalar> r(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
    return Polynomial(std::move(r));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c == b.c; }

  // (quotient, remainder)
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) throw ArgumentError("polynomial division by zero");
    std::vector<Scalar> r = c;
    if (degree() < d.degree()) return {Polynomial(), *this};
    std::vector<Scalar> q(degree() - d.degree() + 1);
    Scalar inv = d.lead().inverse();
    for (int k = degree() - d.degree(); k >= 0; --k) {
      Scalar f = r[k + d.degree()] * inv;
      q[k] = f;
      if (f.is_zero()) continue;
      for (int j = 0; j <= d.degree(); ++j) r[k + j] -= f * d.c[j];
    }
    r.resize(d.degree());
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
  }

  Matrix evaluate(const Matrix& m) const {
    Matrix r(m.rows, m.cols);
    for (int k = degree(); k >= 0; --k) {
      r = r * m;
      for (int i = 0; i < m.rows; ++i) r(i, i) += c[k];
    }
    return r;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      if (c[k].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + c[k].str() + ")";
      if (k > 0) out += k == 1 ? "x" : "x^" + std::to_string(k);
    }
    return out;
  }

 private:
  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
};

inline Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline bool is_squarefree(const Polynomial& p) {
  if (p.is_zero()) throw ArgumentError("squarefree test of the zero polynomial");
  return gcd(p, p.derivative()).degree() == 0;
}

// p / gcd(p, p'): same roots, all simple.
inline Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw ArgumentError("squarefree part of the zero polynomial");
  Polynomial g = gcd(p, p.derivative());
  return p.divmod(g).first.monic();
}

// Krylov approach: first power of m dependent on the lower ones, read off one RREF.
inline Polynomial minimal_polynomial(const Matrix& m) {
  if (!m.square()) throw DimensionError("minimal polynomial of non-square matrix");
  const int n = m.rows;
  if (n == 0) return Polynomial({Scalar(1)});
  const int len = n * n;
  std::vector<Vector> powers;
  Matrix cur = Matrix::identity(n);
  for (int k = 0; k <= n; ++k) {
    powers.push_back(cur.flat());
    if (k < n) cur = cur * m;
  }
  // columns are the powers; rows are the n^2 matrix positions
  std::vector<Vector> rows(len, Vector(n + 1));
  for (int k = 0; k <= n; ++k)
    for (int i = 0; i < len; ++i) rows[i][k] = powers[k][i];
  Echelon e = rref(rows, n + 1);
  int d = 0;
  while (d < static_cast<int>(e.pivots.size()) && e.pivots[d] == d) ++d;
  std::vector<Scalar> coeffs(d + 1);
  coeffs[d] = 1;
  for (int j = 0; j < d; ++j) coeffs[j] = -e.rows[j][d];
  return Polynomial(std::move(coeffs));
}

inline bool is_semisimple(const Matrix& m) { return is_squarefree(minimal_polynomial(m)); }

}  // namespace symc
