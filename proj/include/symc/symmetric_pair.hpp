#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "family.hpp"
#include "polynomial.hpp"

namespace symc {

// theta(x) = sign * A op(x) A^{-1}, with op either the identity or transposition.
struct Involution {
  Matrix A, Ainv;
  bool transpose = false;
  int sign = 1;

  Matrix apply(const Matrix& x) const {
    Matrix y = A * (transpose ? x.transpose() : x) * Ainv;
    if (sign < 0) y = -y;
    return y;
  }
};

enum class Space { G, K, P };

inline std::string space_name(Space s) { return s == Space::G ? "g" : s == Space::K ? "k" : "p"; }

/*
 * A symmetric pair realized inside gl_N.  Subspaces of gl_N are stored as
 * echelonized flat vectors of length N^2.  Derived pairs (reduced Levis,
 * centralizers of triples) reuse the parent's involution and carry no family.
 */
struct SymmetricPair {
  std::optional<Family> family;
  std::string label;
  int N = 0;
  std::string field = "Q";
  Subspace g, k, p;
  Involution theta;
  Matrix theta_g;  // theta in g-coordinates
  std::optional<Matrix> form_T, J;
  std::optional<std::pair<Subspace, Subspace>> va_vb;
  int dim_g = 0, dim_k = 0, dim_p = 0, rk_sym = 0, dim_m = 0;
  Subspace cartan;
  Matrix regular_element;  // the regular semisimple element that produced the Cartan subspace

  const Subspace& space(Space s) const { return s == Space::G ? g : s == Space::K ? k : p; }
  Matrix element(const Vector& flat) const { return Matrix::from_flat(N, flat); }
  std::vector<Matrix> basis_matrices(Space s) const {
    std::vector<Matrix> out;
    for (const auto& b : space(s).basis) out.push_back(element(b));
    return out;
  }
  bool in(Space s, const Matrix& x) const { return x.rows == N && x.cols == N && space(s).contains(x.flat()); }
  int closed_form_rank() const { return family ? family->closed_form_rank() : -1; }
};

/*
 * Centralizer of elems inside the subspace w (all living in pair.g).  The
 * bracket images are read in coordinates of the smallest of g, k, p known to
 * contain them.
 */
inline Subspace centralizer_in(const SymmetricPair& pair, const Subspace& w, Space w_kind, const std::vector<Matrix>& elems) {
  if (w.dim() == 0) return w;
  std::vector<const Subspace*> targets;
  std::vector<Matrix> live;
  for (const auto& e : elems) {
    if (e.is_zero()) continue;
    const Subspace* t = &pair.g;
    if (w_kind != Space::G) {
      bool e_in_p = pair.p.contains(e.flat());
      bool e_in_k = !e_in_p && pair.k.contains(e.flat());
      if (e_in_p) t = w_kind == Space::K ? &pair.p : &pair.k;
      if (e_in_k) t = w_kind == Space::K ? &pair.k : &pair.p;
    }
    targets.push_back(t);
    live.push_back(e);
  }
  if (live.empty()) return w;
  for (auto& e : live) e = pair.element(primitive(e.flat()));
  int nrows = 0;
  for (auto* t : targets) nrows += t->dim();
  Matrix m(nrows, w.dim());
  std::vector<Vector> wb;
  for (const auto& b : w.basis) wb.push_back(primitive(b));
  for (int j = 0; j < w.dim(); ++j) {
    Matrix b = pair.element(wb[j]);
    int r = 0;
    for (std::size_t e = 0; e < live.size(); ++e) {
      Matrix br = commutator(b, live[e]);
      for (int piv : targets[e]->pivots) m(r++, j) = br.a[piv];
    }
  }
  Subspace ker = kernel(m);
  std::vector<Vector> vecs;
  for (const auto& c : ker.basis) {
    Vector v(w.ambient);
    for (int j = 0; j < w.dim(); ++j) {
      if (c[j].is_zero()) continue;
      for (int i = 0; i < w.ambient; ++i)
        if (!wb[j][i].is_zero()) v[i] += c[j] * wb[j][i];
    }
    vecs.push_back(std::move(v));
  }
  return Subspace::span(w.ambient, vecs);
}

inline Subspace centralizer_in(const SymmetricPair& pair, Space s, const std::vector<Matrix>& elems) {
  // theta-homogeneous elements: g^A = k^A + p^A, two smaller systems
  if (s == Space::G && pair.dim_k > 0 && pair.dim_p > 0 &&
      std::all_of(elems.begin(), elems.end(), [&](const Matrix& e) { return pair.k.contains(e.flat()) || pair.p.contains(e.flat()); })) {
    Subspace kc = centralizer_in(pair, pair.k, Space::K, elems);
    Subspace pc = centralizer_in(pair, pair.p, Space::P, elems);
    std::vector<Vector> v = kc.basis;
    v.insert(v.end(), pc.basis.begin(), pc.basis.end());
    return Subspace::span(pair.g.ambient, v);
  }
  return centralizer_in(pair, pair.space(s), s, elems);
}

// Span of [w, y] over w in the subspace.
inline int bracket_image_dim(const SymmetricPair& pair, const Subspace& w, const Matrix& y) {
  std::vector<Vector> rows;
  Matrix yp = pair.element(primitive(y.flat()));
  for (const auto& b : w.basis) rows.push_back(commutator(pair.element(primitive(b)), yp).flat());
  return rank_rows(rows, pair.N * pair.N);
}

namespace detail {

inline Matrix diag(const std::vector<int>& d) {
  Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

// Linear conditions on flat x for x^T T + T x = 0.
inline std::vector<Vector> form_conditions(const Matrix& T) {
  const int N = T.rows;
  std::vector<Vector> rows;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      Vector r(N * N);
      // (x^T T)_{ij} = sum_k x_{ki} T_{kj};  (T x)_{ij} = sum_k T_{ik} x_{kj}
      for (int k = 0; k < N; ++k) {
        if (!T(k, j).is_zero()) r[k * N + i] += T(k, j);
        if (!T(i, k).is_zero()) r[k * N + j] += T(i, k);
      }
      if (!is_zero(r)) rows.push_back(std::move(r));
    }
  return rows;
}

inline Vector trace_condition(int N, int from, int to) {
  Vector r(N * N);
  for (int i = from; i < to; ++i) r[i * N + i] = 1;
  return r;
}

inline Subspace solution_space(int N, const std::vector<Vector>& conditions) {
  if (conditions.empty()) return Subspace::full(N * N);
  return kernel(Matrix::from_rows(conditions));
}

inline Subspace diagonal_support(int N, const std::vector<int>& idx) {
  std::vector<Vector> v;
  for (int i : idx) {
    Vector e(N);
    e[i] = 1;
    v.push_back(std::move(e));
  }
  return Subspace::span(N, v);
}

}  // namespace detail

/*
 * Certifies a rank by a single element: x semisimple gives rk <= dim p^x, and
 * p^x abelian with a semisimple generic element makes p^x toral, so rk >= dim p^x.
 */
struct RankWitness {
  Matrix x;
  Subspace cartan;
  int rank = -1;
  int attempts = 0;
};

inline std::optional<Subspace> certify_toral(const SymmetricPair& pair, const Subspace& a, std::uint64_t seed) {
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j)
      if (!commutator(pair.element(a.basis[i]), pair.element(a.basis[j])).is_zero()) return std::nullopt;
  if (a.dim() > 0 && !is_semisimple(pair.element(random_vector(a, seed, 20)))) return std::nullopt;
  return a;
}

// Regular-element method; expected < 0 means "no closed form to compare with".
inline RankWitness find_regular_semisimple(const SymmetricPair& pair, std::uint64_t seed, int expected = -1, int budget = 32) {
  RankWitness w;
  if (pair.p.dim() == 0) {
    w.x = Matrix(pair.N, pair.N);
    w.cartan = pair.p;
    w.rank = 0;
    return w;
  }
  std::string log;
  for (int attempt = 0; attempt < budget; ++attempt) {
    const int height = 3 + 4 * attempt;
    Matrix x = pair.element(random_vector(pair.p, mix_seed(seed, 1000 + attempt), height));
    w.attempts = attempt + 1;
    if (!is_semisimple(x)) {
      log += " [" + std::to_string(attempt) + ": not semisimple]";
      continue;
    }
    Subspace px = centralizer_in(pair, Space::P, {x});
    if (expected >= 0 && px.dim() < expected)
      throw InternalError(pair.label + ": semisimple x with dim p^x = " + std::to_string(px.dim()) + " below the closed-form rank " + std::to_string(expected));
    if (expected >= 0 && px.dim() != expected) {
      log += " [" + std::to_string(attempt) + ": dim p^x = " + std::to_string(px.dim()) + "]";
      continue;
    }
    if (!certify_toral(pair, px, mix_seed(seed, 5000 + attempt))) {
      log += " [" + std::to_string(attempt) + ": p^x not toral]";
      continue;
    }
    w.x = x;
    w.cartan = px;
    w.rank = px.dim();
    return w;
  }
  throw InternalError(pair.label + ": regular semisimple sampling failed after " + std::to_string(budget) + " attempts:" + log);
}

inline int dim_m_direct(const SymmetricPair& pair, const Subspace& cartan) {
  std::vector<Matrix> a;
  for (const auto& b : cartan.basis) a.push_back(pair.element(b));
  return centralizer_in(pair, Space::K, a).dim();
}

// Fills k, p, theta_g, rank data from g and theta.  rank_expected < 0 for derived pairs.
inline void complete_pair(SymmetricPair& pr, std::uint64_t seed, int rank_expected) {
  std::vector<Vector> kv, pv;
  pr.theta_g = Matrix(pr.g.dim(), pr.g.dim());
  for (int j = 0; j < pr.g.dim(); ++j) {
    Matrix b = pr.element(pr.g.basis[j]);
    Matrix tb = pr.theta.apply(b);
    if (!pr.g.contains(tb.flat())) throw InternalError(pr.label + ": theta does not preserve g");
    Vector c = pr.g.coords(tb.flat());
    for (int i = 0; i < pr.g.dim(); ++i) pr.theta_g(i, j) = c[i];
    if (pr.theta.apply(tb) != b) throw InternalError(pr.label + ": theta is not an involution");
    Matrix plus = b + tb, minus = b - tb;
    if (!plus.is_zero()) kv.push_back(plus.flat());
    if (!minus.is_zero()) pv.push_back(minus.flat());
  }
  const int len = pr.N * pr.N;
  pr.k = Subspace::span(len, kv);
  pr.p = Subspace::span(len, pv);
  pr.dim_g = pr.g.dim();
  pr.dim_k = pr.k.dim();
  pr.dim_p = pr.p.dim();
  if (pr.dim_k + pr.dim_p != pr.dim_g) throw InternalError(pr.label + ": dim k + dim p != dim g");
  RankWitness w = find_regular_semisimple(pr, seed, rank_expected);
  pr.rk_sym = w.rank;
  pr.cartan = w.cartan;
  pr.regular_element = w.x;
  pr.dim_m = pr.dim_k - pr.dim_p + pr.rk_sym;
  int direct = dim_m_direct(pr, pr.cartan);
  if (direct != pr.dim_m)
    throw InternalError(pr.label + ": dim m formula " + std::to_string(pr.dim_m) + " != centralizer of Cartan in k " + std::to_string(direct));
}

inline SymmetricPair build_pair(const Family& f, std::uint64_t seed = 1) {
  f.validate();
  SymmetricPair pr;
  pr.family = f;
  pr.label = f.name();
  const int N = f.matrix_size();
  pr.N = N;
  std::vector<Vector> cond;
  auto sign_diag = [&](const std::vector<int>& d) {
    pr.theta.A = detail::diag(d);
    pr.theta.Ainv = pr.theta.A;
    pr.J = pr.theta.A;
    std::vector<int> ia, ib;
    for (int i = 0; i < N; ++i) (d[i] > 0 ? ia : ib).push_back(i);
    pr.va_vb = std::make_pair(detail::diagonal_support(N, ia), detail::diagonal_support(N, ib));
  };
  switch (f.tag) {
    case Tag::A0: {
      const int n = f.n;
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
          if ((i < n) != (j < n)) {
            Vector r(N * N);
            r[i * N + j] = 1;
            cond.push_back(std::move(r));
          }
      cond.push_back(detail::trace_condition(N, 0, n));
      cond.push_back(detail::trace_condition(N, n, N));
      Matrix S(N, N);
      for (int i = 0; i < n; ++i) S(i, n + i) = S(n + i, i) = 1;
      pr.theta.A = S;
      pr.theta.Ainv = S;
      pr.J = S;
      break;
    }
    case Tag::AI: {
      cond.push_back(detail::trace_condition(N, 0, N));
      pr.theta.A = pr.theta.Ainv = Matrix::identity(N);
      pr.theta.transpose = true;
      pr.theta.sign = -1;
      break;
    }
    case Tag::AII: {
      cond.push_back(detail::trace_condition(N, 0, N));
      const int n = f.n;
      Matrix Js(N, N);
      for (int i = 0; i < n; ++i) {
        Js(i, n + i) = 1;
        Js(n + i, i) = -1;
      }
      pr.theta.A = Js;
      pr.theta.Ainv = -Js;  // J^{-1} = -J
      pr.theta.transpose = true;
      pr.theta.sign = -1;
      pr.form_T = Js;
      break;
    }
    case Tag::AIII: {
      cond.push_back(detail::trace_condition(N, 0, N));
      std::vector<int> d(N, -1);
      for (int i = 0; i < f.p; ++i) d[i] = 1;
      sign_diag(d);
      break;
    }
    case Tag::BDI: {
      Matrix T = Matrix::identity(N);
      cond = detail::form_conditions(T);
      pr.form_T = T;
      std::vector<int> d(N, -1);
      for (int i = 0; i < f.p; ++i) d[i] = 1;
      sign_diag(d);
      break;
    }
    case Tag::CI: {
      const int n = f.n;
      Matrix Om(N, N);
      for (int i = 0; i < n; ++i) {
        Om(i, n + i) = 1;
        Om(n + i, i) = -1;
      }
      cond = detail::form_conditions(Om);
      pr.form_T = Om;
      std::vector<int> d(N, -1);
      for (int i = 0; i < n; ++i) d[i] = 1;
      sign_diag(d);
      break;
    }
    case Tag::CII: {
      // T v_i = (-1)^i v_{N+1-i} (1-based); J constant on the T-pairs {i, N+1-i}
      Matrix T(N, N);
      for (int i = 1; i <= N; ++i) T(N - i, i - 1) = (i % 2 == 0) ? 1 : -1;
      cond = detail::form_conditions(T);
      pr.form_T = T;
      const int half = N / 2, alt = 2 * std::min(f.p, f.q);
      std::vector<int> d(N);
      for (int i = 1; i <= half; ++i) {
        int s = i <= alt ? (i % 2 == 1 ? 1 : -1) : (f.p > f.q ? 1 : -1);
        d[i - 1] = d[N - i] = s;
      }
      sign_diag(d);
      break;
    }
    case Tag::DIII: {
      // T v_i = (-1)^i v_{N+1-i} for i <= n, (-1)^{i+1} v_{N+1-i} beyond; J v_i = sqrt(-1) (-1)^{i+1} v_i
      const int n = f.n;
      Matrix T(N, N);
      for (int i = 1; i <= N; ++i) {
        int e = i <= n ? i : i + 1;
        T(N - i, i - 1) = (e % 2 == 0) ? 1 : -1;
      }
      cond = detail::form_conditions(T);
      pr.form_T = T;
      pr.field = "Q(i)";
      Matrix Jc(N, N), Jinv(N, N);
      std::vector<int> ia, ib;
      for (int i = 1; i <= N; ++i) {
        int s = (i % 2 == 1) ? 1 : -1;
        Jc(i - 1, i - 1) = Scalar(mpq_class(0), mpq_class(s));
        Jinv(i - 1, i - 1) = Scalar(mpq_class(0), mpq_class(-s));
        (s > 0 ? ia : ib).push_back(i - 1);
      }
      pr.theta.A = Jc;
      pr.theta.Ainv = Jinv;
      pr.J = Jc;
      pr.va_vb = std::make_pair(detail::diagonal_support(N, ia), detail::diagonal_support(N, ib));
      break;
    }
  }
  pr.g = detail::solution_space(N, cond);
  if (pr.g.dim() != f.closed_form_dim_g())
    throw InternalError(pr.label + ": dim g = " + std::to_string(pr.g.dim()) + ", expected " + std::to_string(f.closed_form_dim_g()));
  complete_pair(pr, seed, f.closed_form_rank());
  if (pr.dim_k != f.closed_form_dim_k())
    throw InternalError(pr.label + ": dim k = " + std::to_string(pr.dim_k) + ", expected " + std::to_string(f.closed_form_dim_k()));
  return pr;
}

// Sub-symmetric pair (g', theta|g') of a built pair; g' must be theta-stable.
inline SymmetricPair derived_pair(const SymmetricPair& parent, const Subspace& gsub, const std::string& label, std::uint64_t seed = 1) {
  SymmetricPair pr;
  pr.label = label;
  pr.N = parent.N;
  pr.field = parent.field;
  pr.theta = parent.theta;
  pr.form_T = parent.form_T;
  pr.J = parent.J;
  pr.va_vb = parent.va_vb;
  pr.g = gsub;
  complete_pair(pr, seed, -1);
  return pr;
}

inline int symmetric_rank(const SymmetricPair& pair) { return pair.rk_sym; }
inline const Subspace& cartan_subspace(const SymmetricPair& pair) { return pair.cartan; }
inline int dim_m(const SymmetricPair& pair) { return pair.dim_m; }

// Exhaustive check of [k,k] in k, [k,p] in p, [p,p] in k (quadratic in dim g).
inline bool verify_bracket_closure(const SymmetricPair& pair) {
  auto K = pair.basis_matrices(Space::K), P = pair.basis_matrices(Space::P);
  auto fixed = [&](const Matrix& x, int s) {
    Matrix t = pair.theta.apply(x);
    return s > 0 ? t == x : t == -x;
  };
  for (std::size_t i = 0; i < K.size(); ++i)
    for (std::size_t j = i + 1; j < K.size(); ++j) {
      Matrix b = commutator(K[i], K[j]);
      if (!fixed(b, 1) || !pair.g.contains(b.flat())) return false;
    }
  for (const auto& a : K)
    for (const auto& b : P) {
      Matrix c = commutator(a, b);
      if (!fixed(c, -1) || !pair.g.contains(c.flat())) return false;
    }
  for (std::size_t i = 0; i < P.size(); ++i)
    for (std::size_t j = i + 1; j < P.size(); ++j) {
      Matrix b = commutator(P[i], P[j]);
      if (!fixed(b, 1) || !pair.g.contains(b.flat())) return false;
    }
  return true;
}

}  // namespace symc
