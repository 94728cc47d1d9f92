#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symmetric_pair.hpp"

namespace symc {

inline void require_in(const SymmetricPair& pair, Space s, const Matrix& x, const std::string& what) {
  if (x.rows != pair.N || x.cols != pair.N) throw DimensionError(what + " has the wrong size for " + pair.label);
  if (!pair.space(s).contains(x.flat())) throw ArgumentError(what + " does not lie in " + space_name(s) + " of " + pair.label);
}

inline Matrix bracket(const SymmetricPair& pair, const Matrix& x, const Matrix& y) {
  require_in(pair, Space::G, x, "x");
  require_in(pair, Space::G, y, "y");
  return commutator(x, y);
}

inline Subspace centralizer(const SymmetricPair& pair, Space s, const std::vector<Matrix>& elems) {
  for (const auto& e : elems) require_in(pair, Space::G, e, "centralized element");
  return centralizer_in(pair, s, elems);
}

// Jordan-Chevalley by Newton iteration on the squarefree part f of the minimal polynomial.
inline std::pair<Matrix, Matrix> jordan_decomposition(const SymmetricPair& pair, const Matrix& x) {
  require_in(pair, Space::G, x, "x");
  Polynomial f = squarefree_part(minimal_polynomial(x));
  Polynomial fp = f.derivative();
  Matrix xs = x;
  for (int it = 0; it < 64; ++it) {
    Matrix fx = f.evaluate(xs);
    if (fx.is_zero()) break;
    auto inv = inverse(fp.evaluate(xs));
    if (!inv) throw InternalError("Newton step: f'(x_s) is singular");
    xs = xs - fx * *inv;
  }
  Matrix xn = x - xs;
  if (!f.evaluate(xs).is_zero() || !is_semisimple(xs) || !is_nilpotent(xn) || !commutator(xs, xn).is_zero())
    throw InternalError("Jordan decomposition failed its checks");
  if (!pair.g.contains(xs.flat())) throw InternalError("semisimple part left g");
  if (pair.p.contains(x.flat()) && !pair.p.contains(xs.flat())) throw InternalError("semisimple part left p");
  return {xs, xn};
}

namespace detail {

inline Subspace theta_part(const SymmetricPair& pair, const Subspace& w, int sign) {
  std::vector<Vector> v;
  for (const auto& b : w.basis) {
    Matrix m = pair.element(b);
    Matrix t = pair.theta.apply(m);
    Matrix r = sign > 0 ? m + t : m - t;
    if (!r.is_zero()) v.push_back(r.flat());
  }
  return Subspace::span(w.ambient, v);
}

inline bool theta_stable(const SymmetricPair& pair, const Subspace& w) {
  for (const auto& b : w.basis)
    if (!w.contains(pair.theta.apply(pair.element(b)).flat())) return false;
  return true;
}

// basis as primitive integer matrices (same spans, cheaper products)
inline std::vector<Matrix> as_matrices(const SymmetricPair& pair, const Subspace& w) {
  std::vector<Matrix> out;
  for (const auto& b : w.basis) out.push_back(pair.element(primitive(b)));
  return out;
}

inline bool commutes_with_all(const Matrix& z, const std::vector<Matrix>& elems) {
  for (const auto& e : elems)
    if (!commutator(z, e).is_zero()) return false;
  return true;
}

/*
 * Centre and derived algebra of a theta-stable reductive L = L_k + L_p.
 * Z_p = c_p(L_p) and Z_k = elements of L_k killing L_p and a few random elements
 * of L_k, verified against all of L_k.  [L,L] is grown from brackets with
 * random elements until it reaches dim L - dim Z.
 */
struct ReductiveSplit {
  Subspace z_k, z_p, d_k, d_p;
};

inline Subspace grow_span(int ambient, std::vector<Vector>& acc) {
  Subspace d = Subspace::span(ambient, acc);
  acc = d.basis;
  return d;
}

inline ReductiveSplit reductive_split(const SymmetricPair& pair, const Subspace& Lk, const Subspace& Lp, std::uint64_t seed) {
  ReductiveSplit r;
  const int amb = pair.N * pair.N;
  auto Kb = as_matrices(pair, Lk), Pb = as_matrices(pair, Lp);
  r.z_p = Pb.empty() ? Lp : centralizer_in(pair, Lp, Space::P, Pb);
  r.z_k = Lk;
  if (Lk.dim() > 0) {
    std::vector<Matrix> gens = Pb;
    bool done = false;
    for (int round = 0; round < 6 && !done; ++round) {
      gens.push_back(pair.element(random_vector(Lk, mix_seed(seed, 77 + round), 3)));
      r.z_k = centralizer_in(pair, Lk, Space::K, gens);
      done = true;
      for (const auto& zb : r.z_k.basis)
        if (!commutes_with_all(pair.element(primitive(zb)), Kb)) {
          done = false;
          break;
        }
    }
    if (!done) {
      gens = Pb;
      gens.insert(gens.end(), Kb.begin(), Kb.end());
      r.z_k = centralizer_in(pair, Lk, Space::K, gens);
    }
  }
  for (const auto& zb : r.z_p.basis)
    if (!commutes_with_all(pair.element(primitive(zb)), Kb)) throw InternalError("c_p(p^s) does not centralize k^s");
  const int tk = Lk.dim() - r.z_k.dim(), tp = Lp.dim() - r.z_p.dim();
  std::vector<Vector> vk, vp;
  r.d_k = Subspace::zero(amb);
  r.d_p = Subspace::zero(amb);
  for (int round = 0; round < 6 && (r.d_k.dim() < tk || r.d_p.dim() < tp); ++round) {
    Matrix rk = Lk.dim() ? pair.element(primitive(random_vector(Lk, mix_seed(seed, 300 + round), 3))) : Matrix(pair.N, pair.N);
    Matrix rp = Lp.dim() ? pair.element(primitive(random_vector(Lp, mix_seed(seed, 400 + round), 3))) : Matrix(pair.N, pair.N);
    for (const auto& b : Kb) {
      Matrix c = commutator(rk, b);
      if (!c.is_zero()) vk.push_back(c.flat());
      c = commutator(rp, b);
      if (!c.is_zero()) vp.push_back(c.flat());
    }
    for (const auto& b : Pb) {
      Matrix c = commutator(rk, b);
      if (!c.is_zero()) vp.push_back(c.flat());
      c = commutator(rp, b);
      if (!c.is_zero()) vk.push_back(c.flat());
    }
    r.d_k = grow_span(amb, vk);
    r.d_p = grow_span(amb, vp);
  }
  if (r.d_k.dim() != tk || r.d_p.dim() != tp) {
    std::vector<Vector> ak, ap;
    for (std::size_t i = 0; i < Kb.size(); ++i)
      for (std::size_t j = i + 1; j < Kb.size(); ++j) ak.push_back(commutator(Kb[i], Kb[j]).flat());
    for (std::size_t i = 0; i < Pb.size(); ++i)
      for (std::size_t j = i + 1; j < Pb.size(); ++j) ak.push_back(commutator(Pb[i], Pb[j]).flat());
    for (const auto& x : Kb)
      for (const auto& y : Pb) ap.push_back(commutator(x, y).flat());
    r.d_k = Subspace::span(amb, ak);
    r.d_p = Subspace::span(amb, ap);
  }
  return r;
}

}  // namespace detail

// Span of all brackets of basis elements (one pass suffices for the first derived algebra).
inline Subspace derived_subalgebra(const SymmetricPair& pair, const Subspace& sub) {
  std::vector<Matrix> b;
  for (const auto& v : sub.basis) b.push_back(pair.element(v));
  std::vector<Vector> br;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      Matrix c = commutator(b[i], b[j]);
      if (c.is_zero()) continue;
      if (!sub.contains(c.flat())) throw ArgumentError("subspace is not closed under the bracket");
      br.push_back(c.flat());
    }
  Subspace d = Subspace::span(sub.ambient, br);
  // the derived series stabilises at once for the reductive inputs used here; iterate anyway
  while (true) {
    std::vector<Vector> nb;
    std::vector<Matrix> dm;
    for (const auto& v : d.basis) dm.push_back(pair.element(v));
    for (std::size_t i = 0; i < dm.size(); ++i)
      for (std::size_t j = i + 1; j < dm.size(); ++j) {
        Matrix c = commutator(dm[i], dm[j]);
        if (!c.is_zero()) nb.push_back(c.flat());
      }
    Subspace next = Subspace::span(sub.ambient, nb);
    if (next.dim() == d.dim()) return d;
    d = next;
  }
}

/*
 * p-Levi data of a semisimple s in p: g^s, p^s, its centre part c_p(g^s) and
 * the reduced Levi g_s = [g^s, g^s] as a symmetric pair in its own right.
 */
struct SubPair {
  Matrix s;
  Subspace g_centralizer, p_centralizer;  // g^s, p^s
  Subspace center_g;                      // c_g(g^s)
  Subspace c_p_gs;                        // c_p(g^s)
  Subspace g_s, k_s, p_s;
  SymmetricPair reduced;                  // (g_s, k_s)
};

// k^s and p^s may be handed in when the caller already has them.
inline SubPair p_levi(const SymmetricPair& pair, const Matrix& s, std::uint64_t seed = 1, const Subspace* ks_known = nullptr,
                      const Subspace* ps_known = nullptr) {
  require_in(pair, Space::P, s, "s");
  if (!is_semisimple(s)) throw ArgumentError("p_levi needs a semisimple element");
  SubPair sp;
  sp.s = s;
  Subspace ks = ks_known ? *ks_known : centralizer_in(pair, Space::K, {s});
  sp.p_centralizer = ps_known ? *ps_known : centralizer_in(pair, Space::P, {s});
  auto join = [&](const Subspace& a, const Subspace& b) {
    std::vector<Vector> v = a.basis;
    v.insert(v.end(), b.basis.begin(), b.basis.end());
    return Subspace::span(pair.N * pair.N, v);
  };
  sp.g_centralizer = join(ks, sp.p_centralizer);
  detail::ReductiveSplit rs = detail::reductive_split(pair, ks, sp.p_centralizer, seed);
  sp.center_g = join(rs.z_k, rs.z_p);
  sp.c_p_gs = rs.z_p;
  sp.k_s = rs.d_k;
  sp.p_s = rs.d_p;
  sp.g_s = join(rs.d_k, rs.d_p);
  // both parts live in g^s by construction; check they are complementary
  auto complementary = [&](const Subspace& a, const Subspace& b, const Subspace& whole) {
    return a.dim() + b.dim() == whole.dim() && join(a, b).dim() == whole.dim();
  };
  if (!complementary(rs.z_k, rs.d_k, ks)) throw InternalError("k^s is not c_k(g^s) + k_s");
  if (!complementary(rs.z_p, rs.d_p, sp.p_centralizer)) throw InternalError("p^s is not c_p(g^s) + p_s");
  sp.reduced = derived_pair(pair, sp.g_s, "reduced Levi of " + pair.label, seed);
  return sp;
}

struct NormalTriple {
  Matrix e, h, f;
};

inline bool check_triple(const NormalTriple& t) {
  return commutator(t.h, t.e) == t.e * Scalar(2) && commutator(t.h, t.f) == t.f * Scalar(-2) && commutator(t.e, t.f) == t.h;
}

inline NormalTriple normal_sl2_triple(const SymmetricPair& pair, const Matrix& e) {
  require_in(pair, Space::P, e, "e");
  if (e.is_zero()) throw ArgumentError("normal_sl2_triple needs e != 0");
  if (!is_nilpotent(e)) throw ArgumentError("normal_sl2_triple needs a nilpotent e");
  const auto P = pair.basis_matrices(Space::P);
  const int dp = pair.dim_p;
  // u in p with [[e,u],e] = 2e; then h = [e,u] lies in k and in [e,p]
  Matrix A(dp, dp);
  for (int j = 0; j < dp; ++j) {
    Vector c = pair.p.coords(commutator(commutator(e, P[j]), e).flat());
    for (int i = 0; i < dp; ++i) A(i, j) = c[i];
  }
  auto u = solve(A, pair.p.coords((e * Scalar(2)).flat()));
  if (!u) throw InternalError("no h in [e,p] with [h,e] = 2e");
  Matrix h = commutator(e, pair.element(pair.p.combine(*u)));
  // f in p with [e,f] = h and [h,f] = -2f
  const int dk = pair.dim_k;
  Matrix B(dk + dp, dp);
  for (int j = 0; j < dp; ++j) {
    Vector c1 = pair.k.coords(commutator(e, P[j]).flat());
    Vector c2 = pair.p.coords((commutator(h, P[j]) + P[j] * Scalar(2)).flat());
    for (int i = 0; i < dk; ++i) B(i, j) = c1[i];
    for (int i = 0; i < dp; ++i) B(dk + i, j) = c2[i];
  }
  Vector rhs(dk + dp);
  Vector hc = pair.k.coords(h.flat());
  for (int i = 0; i < dk; ++i) rhs[i] = hc[i];
  auto fsol = solve(B, rhs);
  if (!fsol) throw InternalError("no f completing the normal triple");
  NormalTriple t{e, h, pair.element(pair.p.combine(*fsol))};
  if (!check_triple(t) || !pair.k.contains(h.flat())) throw InternalError("triple relations fail");
  return t;
}

// ad h eigenspaces of g, k, p and the graded pieces w(e,i) = w(h,i) cap w^e.
struct Grading {
  std::map<int, Subspace> g, k, p;
  std::map<int, Subspace> ge, ke, pe;
  std::map<int, Subspace>& by_space(Space s) { return s == Space::G ? g : s == Space::K ? k : p; }
  const std::map<int, Subspace>& by_space(Space s) const { return s == Space::G ? g : s == Space::K ? k : p; }
  const std::map<int, Subspace>& centralizer_pieces(Space s) const { return s == Space::G ? ge : s == Space::K ? ke : pe; }
  int dim(Space s, int i) const {
    auto& m = by_space(s);
    auto it = m.find(i);
    return it == m.end() ? 0 : it->second.dim();
  }
  int dim_e(Space s, int i) const {
    auto& m = centralizer_pieces(s);
    auto it = m.find(i);
    return it == m.end() ? 0 : it->second.dim();
  }
};

inline std::vector<int> integer_eigenvalues(const Matrix& h) {
  const int N = h.rows;
  std::vector<int> ev;
  int total = 0;
  for (int j = -2 * N; j <= 2 * N; ++j) {
    Matrix m = h - Matrix::identity(N) * Scalar(j);
    int d = N - rank(m);
    if (d > 0) ev.push_back(j);
    total += d;
  }
  if (total != N) throw InternalError("h is not diagonalizable with integer eigenvalues");
  return ev;
}

inline Grading characteristic_grading(const SymmetricPair& pair, const NormalTriple& t) {
  if (!check_triple(t)) throw ArgumentError("invalid triple");
  std::vector<int> ev = integer_eigenvalues(t.h);
  std::vector<int> cand;
  for (int a : ev)
    for (int b : ev) cand.push_back(a - b);
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  Grading gr;
  for (Space s : {Space::G, Space::K, Space::P}) {
    const Subspace& w = pair.space(s);
    Subspace we = centralizer_in(pair, s, {t.e});
    int total = 0;
    for (int i : cand) {
      Matrix m(w.dim(), w.dim());
      for (int j = 0; j < w.dim(); ++j) {
        Matrix b = pair.element(w.basis[j]);
        Vector c = w.coords((commutator(t.h, b) - b * Scalar(i)).flat());
        for (int r = 0; r < w.dim(); ++r) m(r, j) = c[r];
      }
      Subspace ker = kernel(m);
      if (ker.dim() == 0) continue;
      std::vector<Vector> vecs;
      for (const auto& c : ker.basis) vecs.push_back(w.combine(c));
      Subspace piece = Subspace::span(w.ambient, vecs);
      total += piece.dim();
      gr.by_space(s)[i] = piece;
      Subspace pe = intersect(piece, we);
      if (pe.dim() > 0) (s == Space::G ? gr.ge : s == Space::K ? gr.ke : gr.pe)[i] = pe;
    }
    if (total != w.dim()) throw InternalError("ad h has a non-integer eigenvalue on " + space_name(s));
  }
  return gr;
}

// Centralizer of the triple; e = 0 means the whole pair.
inline SymmetricPair triple_centralizer_pair(const SymmetricPair& pair, const Matrix& e, std::uint64_t seed = 1) {
  if (e.is_zero()) return pair;
  NormalTriple t = normal_sl2_triple(pair, e);
  Subspace g0 = centralizer_in(pair, Space::G, {t.e, t.h, t.f});
  return derived_pair(pair, g0, "centralizer of a triple in " + pair.label, seed);
}

inline int defect(const SymmetricPair& pair, const Matrix& e, std::uint64_t seed = 1) {
  require_in(pair, Space::P, e, "e");
  if (e.is_zero()) return pair.rk_sym;
  if (!is_nilpotent(e)) throw ArgumentError("defect needs a nilpotent element");
  return triple_centralizer_pair(pair, e, seed).rk_sym;
}

inline bool is_p_distinguished(const SymmetricPair& pair, const Matrix& e, int samples = 40, std::uint64_t seed = 1) {
  const int d = defect(pair, e, seed);
  Subspace pe = centralizer_in(pair, Space::P, {e});
  bool all_nilpotent = true;
  for (int s = 0; s < samples && all_nilpotent; ++s)
    if (!is_nilpotent(pair.element(random_vector(pe, mix_seed(seed, 900 + s), 20)))) all_nilpotent = false;
  if ((d == 0) != all_nilpotent)
    throw InternalError("defect " + std::to_string(d) + " disagrees with nilpotency sampling of p^e");
  return d == 0;
}

/*
 * ab-diagram: one row per Jordan chain of z on V = V_a + V_b, labels read from
 * the top of the chain (the generator) down to the vector killed by z.
 */
struct ABDiagram {
  std::vector<std::string> rows;

  static ABDiagram canonical(std::vector<std::string> r) {
    std::sort(r.begin(), r.end(), [](const std::string& x, const std::string& y) {
      if (x.size() != y.size()) return x.size() > y.size();
      return x < y;
    });
    return ABDiagram{std::move(r)};
  }
  int count(char c) const {
    int n = 0;
    for (const auto& r : rows) n += static_cast<int>(std::count(r.begin(), r.end(), c));
    return n;
  }
  bool valid() const {
    for (const auto& r : rows) {
      if (r.empty()) return false;
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] != 'a' && r[i] != 'b') return false;
        if (i > 0 && r[i] == r[i - 1]) return false;
      }
    }
    return true;
  }
  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < rows.size(); ++i) s += (i ? "," : "") + rows[i];
    return s + ")";
  }
  friend bool operator==(const ABDiagram& x, const ABDiagram& y) { return x.rows == y.rows; }
};

inline ABDiagram ab_diagram_of(const SymmetricPair& pair, const Matrix& z) {
  if (!pair.va_vb || (pair.family && !pair.family->has_grading()))
    throw UnsupportedFamily("ab-diagrams need a graded natural module; " + pair.label + " has none");
  require_in(pair, Space::P, z, "z");
  if (!is_nilpotent(z)) throw ArgumentError("ab_diagram_of needs a nilpotent element");
  const auto& [Va, Vb] = *pair.va_vb;
  // A[k] = dim(ker z^k cap V_a), B[k] likewise
  std::vector<int> A{0}, B{0};
  Matrix zk = Matrix::identity(pair.N);
  while (A.back() < Va.dim() || B.back() < Vb.dim()) {
    zk = zk * z;
    auto kdim = [&](const Subspace& V) {
      std::vector<Vector> img;
      for (const auto& v : V.basis) img.push_back(zk * v);
      return V.dim() - rank_rows(img, pair.N);
    };
    A.push_back(kdim(Va));
    B.push_back(kdim(Vb));
  }
  const int K = static_cast<int>(A.size()) - 1;
  // R[c][k]: rows of length >= k whose bottom label is c (0 = a, 1 = b)
  std::vector<std::vector<int>> R(2, std::vector<int>(K + 2, 0));
  for (int k = 1; k <= K; ++k) {
    int da = A[k] - A[k - 1], db = B[k] - B[k - 1];
    if (k % 2 == 1) {
      R[0][k] = da;
      R[1][k] = db;
    } else {
      R[1][k] = da;
      R[0][k] = db;
    }
  }
  std::vector<std::string> rows;
  for (int c = 0; c < 2; ++c)
    for (int len = 1; len <= K; ++len) {
      int cnt = R[c][len] - R[c][len + 1];
      if (cnt < 0) throw InternalError("inconsistent kernel flags for ab-diagram");
      // bottom label c; top label is c for odd length, the other one for even length
      int top = (len % 2 == 1) ? c : 1 - c;
      std::string row;
      for (int i = 0; i < len; ++i) row.push_back(((top + i) % 2 == 0) ? 'a' : 'b');
      for (int t = 0; t < cnt; ++t) rows.push_back(row);
    }
  ABDiagram d = ABDiagram::canonical(rows);
  if (d.count('a') != Va.dim() || d.count('b') != Vb.dim()) throw InternalError("ab-diagram label counts do not match dim V_a, dim V_b");
  return d;
}

// AIII only: V_a = first p coordinates, V_b = last q.
inline Matrix build_nilpotent_from_ab(const SymmetricPair& pair, const ABDiagram& d) {
  if (!pair.family || pair.family->tag != Tag::AIII) throw UnsupportedFamily("build_nilpotent_from_ab is implemented for AIII only");
  const int p = pair.family->p, q = pair.family->q;
  if (!d.valid() || d.count('a') != p || d.count('b') != q)
    throw ArgumentError("ab-diagram " + d.str() + " is inconsistent with " + pair.label);
  int next_a = 0, next_b = p;
  Matrix z(pair.N, pair.N);
  for (const auto& row : d.rows) {
    std::vector<int> idx;
    for (char c : row) idx.push_back(c == 'a' ? next_a++ : next_b++);
    for (std::size_t i = 0; i + 1 < idx.size(); ++i) z(idx[i + 1], idx[i]) = 1;
  }
  return z;
}

}  // namespace symc
