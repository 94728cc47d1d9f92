#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace symc {

// Reduced row echelon form: pivot entries are 1, pivot columns strictly increase.
struct Echelon {
  std::vector<Vector> rows;
  std::vector<int> pivots;
  int ncols = 0;
};

namespace detail {

using IntRow = std::vector<mpz_class>;

// Clears denominators row by row; only valid for real input.
inline IntRow to_int_row(const Vector& v) {
  mpz_class l = 1;
  for (const auto& x : v)
    if (sgn(x.re) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.re.get_den_mpz_t());
  IntRow r(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (sgn(v[j].re) == 0) continue;
    mpz_divexact(r[j].get_mpz_t(), l.get_mpz_t(), v[j].re.get_den_mpz_t());
    r[j] *= v[j].re.get_num();
  }
  return r;
}

inline void remove_content(IntRow& r) {
  mpz_class g;
  for (const auto& x : r) {
    if (sgn(x) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g == 0 || g == 1) return;
  for (auto& x : r)
    if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// target <- p*target - a*src on columns >= from; then strip content.
inline void combine_rows(IntRow& target, const IntRow& src, const mpz_class& p, const mpz_class& a, int from) {
  const int n = static_cast<int>(target.size());
  const bool p_one = (p == 1);
  for (int j = from; j < n; ++j) {
    mpz_ptr t = target[j].get_mpz_t();
    if (!p_one && mpz_sgn(t) != 0) mpz_mul(t, t, p.get_mpz_t());
    mpz_srcptr s = src[j].get_mpz_t();
    if (mpz_sgn(s) != 0) mpz_submul(t, a.get_mpz_t(), s);
  }
  remove_content(target);
}

inline std::size_t entry_weight(const IntRow& r) {
  std::size_t w = 0;
  for (const auto& x : r)
    if (sgn(x) != 0) w += mpz_size(x.get_mpz_t());
  return w;
}

// Fraction-free elimination over Z.  full = true gives Gauss-Jordan (RREF up to
// row scaling); otherwise forward elimination only.  Returns pivot columns, and
// leaves the first pivots.size() rows as the echelon rows.
inline std::vector<int> int_eliminate(std::vector<IntRow>& rows, int ncols, bool full) {
  std::vector<int> pivots;
  const int m = static_cast<int>(rows.size());
  int r = 0;
  mpz_class g, p, a;
  for (int c = 0; c < ncols && r < m; ++c) {
    int best = -1;
    std::size_t best_w = 0;
    for (int i = r; i < m; ++i) {
      if (sgn(rows[i][c]) == 0) continue;
      std::size_t w = entry_weight(rows[i]);
      if (best < 0 || w < best_w) {
        best = i;
        best_w = w;
      }
    }
    if (best < 0) continue;
    std::swap(rows[r], rows[best]);
    const IntRow& pr = rows[r];
    for (int i = full ? 0 : r + 1; i < m; ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      mpz_gcd(g.get_mpz_t(), pr[c].get_mpz_t(), rows[i][c].get_mpz_t());
      mpz_divexact(p.get_mpz_t(), pr[c].get_mpz_t(), g.get_mpz_t());
      mpz_divexact(a.get_mpz_t(), rows[i][c].get_mpz_t(), g.get_mpz_t());
      // rows above r have zeros left of their own pivot only, so start at 0 for them
      combine_rows(rows[i], pr, p, a, i < r ? 0 : c);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Plain Gauss-Jordan over the field; used when entries are not all real.
inline std::vector<int> field_eliminate(std::vector<Vector>& rows, int ncols, bool full) {
  std::vector<int> pivots;
  const int m = static_cast<int>(rows.size());
  int r = 0;
  for (int c = 0; c < ncols && r < m; ++c) {
    int best = -1;
    for (int i = r; i < m; ++i)
      if (!rows[i][c].is_zero()) {
        best = i;
        break;
      }
    if (best < 0) continue;
    std::swap(rows[r], rows[best]);
    Scalar inv = rows[r][c].inverse();
    for (auto& x : rows[r])
      if (!x.is_zero()) x *= inv;
    for (int i = full ? 0 : r + 1; i < m; ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Scalar f = rows[i][c];
      for (int j = 0; j < ncols; ++j)
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline bool all_real(const std::vector<Vector>& rows) {
  for (const auto& r : rows)
    if (!is_real(r)) return false;
  return true;
}

}  // namespace detail

inline Echelon rref(const std::vector<Vector>& rows, int ncols) {
  Echelon e;
  e.ncols = ncols;
  if (detail::all_real(rows)) {
    std::vector<detail::IntRow> ir;
    ir.reserve(rows.size());
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != ncols) throw DimensionError("row length mismatch");
      ir.push_back(detail::to_int_row(r));
    }
    e.pivots = detail::int_eliminate(ir, ncols, true);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      const mpz_class& d = ir[i][e.pivots[i]];
      Vector v(ncols);
      for (int j = 0; j < ncols; ++j) {
        if (sgn(ir[i][j]) == 0) continue;
        v[j].re = mpq_class(ir[i][j], d);
        v[j].re.canonicalize();
      }
      e.rows.push_back(std::move(v));
    }
    return e;
  }
  std::vector<Vector> fr = rows;
  for (const auto& r : fr)
    if (static_cast<int>(r.size()) != ncols) throw DimensionError("row length mismatch");
  e.pivots = detail::field_eliminate(fr, ncols, true);
  fr.resize(e.pivots.size());
  e.rows = std::move(fr);
  return e;
}

inline int rank_rows(const std::vector<Vector>& rows, int ncols) {
  if (detail::all_real(rows)) {
    std::vector<detail::IntRow> ir;
    ir.reserve(rows.size());
    for (const auto& r : rows) ir.push_back(detail::to_int_row(r));
    return static_cast<int>(detail::int_eliminate(ir, ncols, false).size());
  }
  std::vector<Vector> fr = rows;
  return static_cast<int>(detail::field_eliminate(fr, ncols, false).size());
}

inline int rank(const Matrix& m) { return rank_rows(m.row_list(), m.cols); }

// Echelonized basis of a subspace of Q^n (or Q(i)^n).
class Subspace {
 public:
  int ambient = 0;
  std::vector<Vector> basis;
  std::vector<int> pivots;

  Subspace() = default;
  explicit Subspace(int n) : ambient(n) {}

  static Subspace span(int n, const std::vector<Vector>& vecs) {
    Subspace s(n);
    if (vecs.empty()) return s;
    Echelon e = rref(vecs, n);
    s.basis = std::move(e.rows);
    s.pivots = std::move(e.pivots);
    return s;
  }
  static Subspace zero(int n) { return Subspace(n); }
  static Subspace full(int n) {
    std::vector<Vector> v;
    for (int i = 0; i < n; ++i) {
      Vector e(n);
      e[i] = 1;
      v.push_back(std::move(e));
    }
    return span(n, v);
  }

  int dim() const { return static_cast<int>(basis.size()); }

  // v minus its projection along the echelon basis; zero iff v lies in the span.
  Vector reduce(Vector v) const {
    check(v);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      Scalar f = v[pivots[i]];
      if (f.is_zero()) continue;
      for (int j = 0; j < ambient; ++j)
        if (!basis[i][j].is_zero()) v[j] -= f * basis[i][j];
    }
    return v;
  }
  bool contains(const Vector& v) const { return is_zero(reduce(v)); }
  bool contains(const Subspace& o) const {
    for (const auto& b : o.basis)
      if (!contains(b)) return false;
    return true;
  }

  // Coordinates of a member of the span: its entries at the pivot columns.
  Vector coords(const Vector& v) const {
    check(v);
    Vector c(dim());
    for (int i = 0; i < dim(); ++i) c[i] = v[pivots[i]];
    return c;
  }
  Vector coords_checked(const Vector& v) const {
    if (!contains(v)) throw ArgumentError("vector not in subspace");
    return coords(v);
  }

  Vector combine(const Vector& c) const {
    if (static_cast<int>(c.size()) != dim()) throw DimensionError("coefficient count mismatch");
    Vector v(ambient);
    for (int i = 0; i < dim(); ++i) {
      if (c[i].is_zero()) continue;
      for (int j = 0; j < ambient; ++j)
        if (!basis[i][j].is_zero()) v[j] += c[i] * basis[i][j];
    }
    return v;
  }

  friend bool operator==(const Subspace& x, const Subspace& y) { return x.ambient == y.ambient && x.basis == y.basis; }
  friend bool operator!=(const Subspace& x, const Subspace& y) { return !(x == y); }

 private:
  void check(const Vector& v) const {
    if (static_cast<int>(v.size()) != ambient) throw DimensionError("vector length does not match ambient dimension");
  }
};

// Right kernel {v : m v = 0}.
inline Subspace kernel(const Matrix& m) {
  Echelon e = rref(m.row_list(), m.cols);
  std::vector<char> is_pivot(m.cols, 0);
  for (int c : e.pivots) is_pivot[c] = 1;
  std::vector<Vector> vecs;
  for (int f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      if (!e.rows[i][f].is_zero()) v[e.pivots[i]] = -e.rows[i][f];
    vecs.push_back(std::move(v));
  }
  return Subspace::span(m.cols, vecs);
}

// Kernel of the linear map given by its column images (columns need not be stored as a Matrix).
inline Subspace kernel_of_columns(const std::vector<Vector>& columns, int rows) {
  Matrix m(rows, static_cast<int>(columns.size()));
  for (int j = 0; j < m.cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  return kernel(m);
}

// Some solution of m x = b, or nothing if the system is inconsistent.
inline std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (static_cast<int>(b.size()) != m.rows) throw DimensionError("right-hand side length mismatch");
  std::vector<Vector> aug = m.row_list();
  for (int i = 0; i < m.rows; ++i) aug[i].push_back(b[i]);
  Echelon e = rref(aug, m.cols + 1);
  Vector x(m.cols);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == m.cols) return std::nullopt;
    x[e.pivots[i]] = e.rows[i][m.cols];
  }
  return x;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.square()) throw DimensionError("inverse of non-square matrix");
  const int n = m.rows;
  std::vector<Vector> aug = m.row_list();
  for (int i = 0; i < n; ++i) {
    aug[i].resize(2 * n);
    aug[i][n + i] = 1;
  }
  Echelon e = rref(aug, 2 * n);
  if (static_cast<int>(e.pivots.size()) < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = e.rows[i][n + j];
  return r;
}

inline void check_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient) throw DimensionError("ambient dimension mismatch");
}

inline Subspace sum(const Subspace& a, const Subspace& b) {
  check_ambient(a, b);
  std::vector<Vector> v = a.basis;
  v.insert(v.end(), b.basis.begin(), b.basis.end());
  return Subspace::span(a.ambient, v);
}

// Solves sum(alpha_i a_i) = sum(beta_j b_j) and maps the alphas back.
inline Subspace intersect(const Subspace& a, const Subspace& b) {
  check_ambient(a, b);
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient);
  std::vector<Vector> cols = a.basis;
  for (const auto& v : b.basis) {
    Vector w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = -v[i];
    cols.push_back(std::move(w));
  }
  Subspace k = kernel_of_columns(cols, a.ambient);
  std::vector<Vector> out;
  for (const auto& kv : k.basis) out.push_back(a.combine(Vector(kv.begin(), kv.begin() + a.dim())));
  return Subspace::span(a.ambient, out);
}

/*
 * Deterministic generator: std::mt19937_64 with our own rejection-sampled
 * integer draws (the standard distributions are implementation defined).
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // uniform in [lo, hi]
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(eng_());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do x = eng_();
    while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  Scalar rational(int height) {
    std::int64_t num = uniform(-height, height);
    std::int64_t den = uniform(1, height);
    return Scalar::frac(num, den);
  }

  std::uint64_t next() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

// Derives an independent seed from a base seed and a stream tag.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (tag + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline Vector random_combination(const Subspace& s, Rng& rng, int height) {
  if (height < 1) throw ArgumentError("height must be >= 1");
  Vector c(s.dim());
  for (auto& x : c) x = rng.rational(height);
  return s.combine(c);
}

inline Vector random_vector(const Subspace& s, std::uint64_t seed, int height = 20) {
  Rng rng(seed);
  return random_combination(s, rng, height);
}

}  // namespace symc
