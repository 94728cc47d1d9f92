#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "pair_analysis.hpp"

namespace symc {

struct CheckRow {
  std::string name, expected, got;
  bool ok = false;
};

struct Certificate {
  std::string kind;  // rank1_d | rigid_pair | subregular_dichotomy | codim_slice | reducibility
  std::string id;
  std::optional<Family> family;
  std::string realization;
  std::vector<std::pair<std::string, Matrix>> elements;
  std::map<std::string, long> claimed;
  std::map<std::string, long> recorded;  // informational, not checked
  std::vector<CheckRow> transcript;
  bool verified = false;

  void check(const std::string& name, long expected, long got) {
    transcript.push_back({name, std::to_string(expected), std::to_string(got), expected == got});
  }
  void check_bool(const std::string& name, bool expected, bool got) {
    transcript.push_back({name, expected ? "true" : "false", got ? "true" : "false", expected == got});
  }
  void check_str(const std::string& name, const std::string& expected, const std::string& got) {
    transcript.push_back({name, expected, got, expected == got});
  }
  // "got" satisfies a relation to "expected"; rel is printed into the expected column
  void check_rel(const std::string& name, const std::string& rel, long bound, long got, bool ok) {
    transcript.push_back({name, rel + " " + std::to_string(bound), std::to_string(got), ok});
  }
  void finish() {
    verified = !transcript.empty();
    for (const auto& r : transcript) verified = verified && r.ok;
  }
  std::vector<std::string> failures() const {
    std::vector<std::string> f;
    for (const auto& r : transcript)
      if (!r.ok) f.push_back(id + ": " + r.name + " expected " + r.expected + ", got " + r.got);
    return f;
  }
};

// x.v_from = c v_to, 1-based
struct Action {
  int from, to;
  long coef = 1;
};

inline Matrix from_actions(int N, const std::vector<Action>& acts) {
  Matrix m(N, N);
  for (const auto& a : acts) m(a.to - 1, a.from - 1) += Scalar(a.coef);
  return m;
}

namespace catalog_data {

inline Matrix sp8_z() {
  std::vector<Action> a;
  for (int i = 2; i <= 8; i += 2) a.push_back({i, i - 1});
  return from_actions(8, a);
}

inline Matrix sp12_z() {
  std::vector<Action> a;
  for (int i : {2, 3, 5, 9, 11, 12}) a.push_back({i, i - 1});
  return from_actions(12, a);
}

inline Matrix sp12_y() {
  return from_actions(12, {{2, 8}, {7, 8}, {3, 9}, {4, 10, -1}, {5, 6}, {5, 11, -1}, {6, 1}, {12, 7}});
}

// horizontal arrows of the so12 display
inline Matrix so12_z() { return from_actions(12, {{12, 11}, {11, 10}, {5, 4}, {9, 8}, {3, 2}, {2, 1}}); }

// vertical arrows: v12 -> -v5, v11 -> -v4, -v5 -> -v6, v7 -> v8 -> v1, v9 -> v2
inline Matrix so12_y() { return from_actions(12, {{12, 5, -1}, {11, 4, -1}, {5, 6}, {7, 8}, {8, 1}, {9, 2}}); }

inline ABDiagram diagram(std::vector<std::string> rows) { return ABDiagram::canonical(std::move(rows)); }

}  // namespace catalog_data

// Moves a matrix living on indices 1..n to indices off+1..off+n of an N x N matrix.
inline Matrix embed_block(const Matrix& m, int N, int off) {
  Matrix r(N, N);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r(i + off, j + off) = m(i, j);
  return r;
}

// Sub-pair of matrices supported on idx x idx (0-based); the index set must be
// stable under the form and the grading of the realization.
inline SymmetricPair block_subpair(const SymmetricPair& pair, const std::vector<int>& idx, const std::string& label, std::uint64_t seed = 1) {
  std::vector<char> in(pair.N, 0);
  for (int i : idx) in[i] = 1;
  // g cap {supported on idx x idx}: kernel of the outside coordinates restricted to g
  std::vector<int> outside;
  for (int i = 0; i < pair.N; ++i)
    for (int j = 0; j < pair.N; ++j)
      if (!(in[i] && in[j])) outside.push_back(i * pair.N + j);
  Matrix m(static_cast<int>(outside.size()), pair.dim_g);
  for (int c = 0; c < pair.dim_g; ++c)
    for (std::size_t r = 0; r < outside.size(); ++r) m(static_cast<int>(r), c) = pair.g.basis[c][outside[r]];
  Subspace ker = kernel(m);
  std::vector<Vector> v;
  for (const auto& c : ker.basis) v.push_back(pair.g.combine(c));
  return derived_pair(pair, Subspace::span(pair.N * pair.N, v), label, seed);
}

// Indices (0-based) of the T-pairs {i, N+1-i} for the given 1-based first-half indices.
inline std::vector<int> mirrored(int N, const std::vector<int>& first_half) {
  std::vector<int> r;
  for (int i : first_half) {
    r.push_back(i - 1);
    r.push_back(N - i);
  }
  std::sort(r.begin(), r.end());
  return r;
}

inline std::vector<int> range1(int from, int to) {
  std::vector<int> r;
  for (int i = from; i <= to; ++i) r.push_back(i);
  return r;
}

inline std::vector<std::string> failures_of(const std::vector<Certificate>& cs) {
  std::vector<std::string> f;
  for (const auto& c : cs) {
    auto x = c.failures();
    f.insert(f.end(), x.begin(), x.end());
  }
  return f;
}

// ---------------------------------------------------------------- rank one

inline bool has_subregular(const Family& f) {
  return (f.tag == Tag::AIII && f.q == 1 && f.p >= 2) || (f.tag == Tag::CII && f.q == 1 && f.p >= 2);
}

// Reference cells of the rank-one table.
inline std::optional<long> table3_expected(const Family& f) {
  switch (f.tag) {
    case Tag::A0: if (f.n == 2) return 4; break;
    case Tag::AI: if (f.n == 2) return 3; break;
    case Tag::AII: if (f.n == 2) return 6; break;
    case Tag::AIII: if (f.q == 1) return f.p == 1 ? 3 : f.p; break;
    case Tag::BDI: if (f.q == 1) return f.p + 1; break;
    case Tag::CII: if (f.q == 1) return f.p == 1 ? 5 : 2 * f.p - 1; break;
    default: break;
  }
  return std::nullopt;
}

inline std::string table3_cell(const Family& f) {
  const std::string m = std::to_string(f.p);
  switch (f.tag) {
    case Tag::A0: return "(sl2+sl2, sl2)";
    case Tag::AI: return "(sl2, so2)";
    case Tag::AII: return "(sl4, sp4)";
    case Tag::AIII: return "(sl" + std::to_string(f.p + 1) + ", sl" + m + "+t1)";
    case Tag::BDI: return "(so" + std::to_string(f.p + 1) + ", so" + m + ")";
    case Tag::CII: return "(sp" + std::to_string(2 * f.p + 2) + ", sp" + std::to_string(2 * f.p) + "+sp2)";
    default: return f.name();
  }
}

/*
 * Subregular representatives of the two classical carriers:
 * AIII(q,1) from the diagram (ab, a, ..., a); CII(q,1) from (ab, ba, a, ..., a),
 * realized as E_{2,1} + E_{N,N-1} (v1 -> v2 and v_{N-1} -> v_N).
 */
inline Matrix subregular_element(const SymmetricPair& pair) {
  const Family& f = *pair.family;
  if (f.tag == Tag::AIII) {
    std::vector<std::string> rows{"ab"};
    for (int i = 0; i < f.p - 1; ++i) rows.push_back("a");
    return build_nilpotent_from_ab(pair, ABDiagram::canonical(rows));
  }
  if (f.tag == Tag::CII) return from_actions(pair.N, {{1, 2}, {pair.N - 1, pair.N}});
  throw UnsupportedFamily(f.name() + " carries no classical subregular orbit");
}

inline ABDiagram subregular_witness(const Family& f) {
  std::vector<std::string> rows{"ab"};
  if (f.tag == Tag::CII) rows.push_back("ba");
  int extra = f.tag == Tag::CII ? 2 * f.p - 2 : f.p - 1;
  for (int i = 0; i < extra; ++i) rows.push_back("a");
  return ABDiagram::canonical(rows);
}

inline std::pair<long, Certificate> rank1_d_value(const Family& f, std::uint64_t seed = 1) {
  SymmetricPair pair = build_pair(f, seed);
  if (pair.rk_sym != 1) throw ArgumentError(f.name() + " has symmetric rank " + std::to_string(pair.rk_sym) + ", not 1");
  Certificate c;
  c.kind = "rank1_d";
  c.id = "table3 " + f.name();
  c.family = f;
  c.realization = pair.label;
  c.check("rk_sym", 1, pair.rk_sym);
  long d;
  if (has_subregular(f)) {
    Matrix z = subregular_element(pair);
    c.elements.push_back({"z", z});
    c.check_bool("z in p", true, pair.in(Space::P, z));
    c.check_bool("z nilpotent", true, is_nilpotent(z));
    c.check_str("ab-diagram of z", subregular_witness(f).str(), ab_diagram_of(pair, z).str());
    int pz = centralizer_in(pair, Space::P, {z}).dim();
    c.check_rel("z non-regular: dim p^z", ">", 1, pz, pz > 1);
    c.check("defect of z", 0, defect(pair, z, seed));
    NormalTriple t = normal_sl2_triple(pair, z);
    Grading gr = characteristic_grading(pair, t);
    int high = 0;
    for (const auto& [i, s] : gr.g)
      if (i >= 3) high += s.dim();
    c.check("dim g(h,i), i >= 3", 0, high);
    c.check("dim p(z,2)", 1, gr.dim_e(Space::P, 2));
    c.recorded["dim_p(z,1)"] = gr.dim_e(Space::P, 1);
    c.recorded["dim_k(z,0)"] = gr.dim_e(Space::K, 0);
    d = pz;
    c.recorded["dim_p^z"] = pz;
  } else {
    d = pair.dim_p + 1;
    c.recorded["dim_p"] = pair.dim_p;
  }
  c.recorded["d"] = d;
  c.check_rel("d >= 2", ">=", 2, d, d >= 2);
  if (auto e = table3_expected(f)) {
    c.claimed["d"] = *e;
    c.check("d vs " + table3_cell(f), *e, d);
  }
  c.finish();
  return {d, c};
}

inline std::vector<Family> table3_grid() {
  std::vector<Family> g{Family::one(Tag::A0, 2), Family::one(Tag::AI, 2), Family::one(Tag::AII, 2)};
  for (int q = 1; q <= 5; ++q) g.push_back(Family::two(Tag::AIII, q, 1));
  for (int q = 1; q <= 5; ++q) g.push_back(Family::two(Tag::BDI, q, 1));
  for (int q = 1; q <= 4; ++q) g.push_back(Family::two(Tag::CII, q, 1));
  return g;
}

inline std::vector<Certificate> table3_report(std::uint64_t seed = 1) {
  std::vector<Certificate> out;
  for (const auto& f : table3_grid()) out.push_back(rank1_d_value(f, seed).second);
  return out;
}

inline Matrix random_off_line(const SymmetricPair& pair, const Subspace& w, const Matrix& z, std::uint64_t seed) {
  for (int a = 0; a < 64; ++a) {
    Matrix y = pair.element(random_vector(w, mix_seed(seed, a), 5));
    if (rank_rows({y.flat(), z.flat()}, pair.N * pair.N) == 2) return y;
  }
  throw InternalError("could not sample outside a line");
}

inline Certificate subregular_dichotomy(const Family& f, int samples = 40, std::uint64_t seed = 1) {
  if (!has_subregular(f)) throw UnsupportedFamily(f.name() + " is not a classical rank-one subregular carrier");
  SymmetricPair pair = build_pair(f, seed);
  Certificate c;
  c.kind = "subregular_dichotomy";
  c.id = "dichotomy " + f.name();
  c.family = f;
  c.realization = pair.label;
  Matrix z = subregular_element(pair);
  c.elements.push_back({"z", z});
  Subspace pz = centralizer_in(pair, Space::P, {z});
  c.recorded["dim_p^z"] = pz.dim();
  c.claimed["i(z,y generic)"] = -1;
  c.claimed["i(z,lambda z)"] = pz.dim() - 1;
  for (long lambda : {1L, 2L}) c.check("i(z," + std::to_string(lambda) + "z)", pz.dim() - 1, irregularity_number(pair, z, z * Scalar(lambda)));
  int bad = 0;
  for (int s = 0; s < samples; ++s) {
    Matrix y = random_off_line(pair, pz, z, mix_seed(seed, 7000 + s));
    if (irregularity_number(pair, z, y) != -1) ++bad;
  }
  c.check("samples y off k.z with i != -1 (of " + std::to_string(samples) + ")", 0, bad);
  c.finish();
  return c;
}

// ---------------------------------------------------------------- rigid pairs

inline void rigid_pair_checks(Certificate& c, const SymmetricPair& pair, const Matrix& z, const Matrix& y, long k_zy, long i,
                              const std::optional<ABDiagram>& diagram, std::uint64_t seed) {
  c.elements.push_back({"z", z});
  c.elements.push_back({"y", y});
  c.claimed["dim_k^{z,y}"] = k_zy;
  c.claimed["i"] = i;
  c.check_bool("z in p", true, pair.in(Space::P, z));
  c.check_bool("y in p", true, pair.in(Space::P, y));
  bool comm = commutator(z, y).is_zero();
  c.check_bool("[z,y] = 0", true, comm);
  if (!comm || !pair.in(Space::P, z) || !pair.in(Space::P, y)) return;
  c.check_bool("z nilpotent", true, is_nilpotent(z));
  c.check_bool("y nilpotent", true, is_nilpotent(y));
  PairReport r = basic_report(pair, z, y);
  c.check("dim k^{z,y}", k_zy, r.k_xy);
  c.check("i", i, r.irregularity);
  c.check("rk_sym", -i, r.rk_sym);
  c.check_str("classification", "rigid", class_name(r.classification));
  c.check_bool("density check", true, r.density);
  c.check("moment kernel (direct = formula)", r.moment.formula, r.moment.direct);
  c.recorded["dim_m"] = r.dim_m;
  c.recorded["dim_p^z"] = r.p_x;
  c.recorded["dim_k^z"] = r.k_x;
  c.check_bool("z p-distinguished", true, is_p_distinguished(pair, z, 40, seed));
  ABDiagram dz = ab_diagram_of(pair, z), dy = ab_diagram_of(pair, y);
  if (diagram) c.check_str("ab-diagram of z", diagram->str(), dz.str());
  c.check_str("ab-diagram of y", dz.str(), dy.str());
}

inline Certificate cii_sp12_rigid_pair(std::uint64_t seed = 1) {
  SymmetricPair pair = build_pair(Family::two(Tag::CII, 3, 3), seed);
  Certificate c;
  c.kind = "rigid_pair";
  c.id = "sp12";
  c.family = pair.family;
  c.realization = pair.label;
  rigid_pair_checks(c, pair, catalog_data::sp12_z(), catalog_data::sp12_y(), 6, -3,
                    catalog_data::diagram({"aba", "aba", "ab", "ba", "b", "b"}), seed);
  c.finish();
  return c;
}

inline Certificate diii_so12_rigid_pair(std::uint64_t seed = 1) {
  SymmetricPair pair = build_pair(Family::one(Tag::DIII, 6), seed);
  Certificate c;
  c.kind = "rigid_pair";
  c.id = "so12";
  c.family = pair.family;
  c.realization = pair.label;
  rigid_pair_checks(c, pair, catalog_data::so12_z(), catalog_data::so12_y(), 6, -3,
                    catalog_data::diagram({"aba", "bab", "ab", "ab", "a", "b"}), seed);
  c.finish();
  return c;
}

struct TableauPair {
  int n_a = 0, n_b = 0;
  Matrix z, y;
};

/*
 * Triangular tableau: v^i_j (i in [2, M], j <= floor(i/2)) span V_b, w^i_j
 * (i in [1, M], j <= ceil(i/2)) and r extra w' span V_a, M = 2l+1+eps.
 * z: v^i_j -> w^i_j, w^i_j -> v^i_{j-1};  y: v^i_j -> w^{i-1}_j, w^i_j -> v^{i-1}_{j-1}.
 */
inline TableauPair aiii_tableau(int l, int eps, int r) {
  if (l < 0 || r < 0 || (eps != 0 && eps != 1) || l + eps == 0)
    throw ArgumentError("tableau parameters need l >= 0, eps in {0,1}, r >= 0 and n_b > 0");
  TableauPair t;
  t.n_b = (l + eps) * (l + 1);
  t.n_a = t.n_b + l + 1 + r;
  const int M = 2 * l + 1 + eps;
  std::map<std::pair<int, int>, int> w, v;
  int na = 0, nb = 0;
  for (int i = 1; i <= M; ++i)
    for (int j = 1; j <= (i + 1) / 2; ++j) w[{i, j}] = na++;
  for (int i = 2; i <= M; ++i)
    for (int j = 1; j <= i / 2; ++j) v[{i, j}] = t.n_a + nb++;
  if (na + r != t.n_a || nb != t.n_b) throw InternalError("tableau count mismatch");
  const int N = t.n_a + t.n_b;
  t.z = Matrix(N, N);
  t.y = Matrix(N, N);
  auto set = [&](Matrix& m, int from, int to) { m(to, from) = 1; };
  for (const auto& [ij, idx] : v) {
    auto [i, j] = ij;
    set(t.z, idx, w.at({i, j}));
    set(t.y, idx, w.at({i - 1, j}));
  }
  for (const auto& [ij, idx] : w) {
    auto [i, j] = ij;
    if (j == 1) continue;
    set(t.z, idx, v.at({i, j - 1}));
    set(t.y, idx, v.at({i - 1, j - 1}));
  }
  return t;
}

inline Certificate aiii_rigid_pair(int l, int eps, int r, std::uint64_t seed = 1) {
  TableauPair t = aiii_tableau(l, eps, r);
  SymmetricPair pair = build_pair(Family::two(Tag::AIII, t.n_a, t.n_b), seed);
  Certificate c;
  c.kind = "rigid_pair";
  c.id = "aiii l=" + std::to_string(l) + " eps=" + std::to_string(eps) + " r=" + std::to_string(r);
  c.family = pair.family;
  c.realization = pair.label;
  c.check("n_b = rk_sym", t.n_b, pair.rk_sym);
  long k_zy = (long)(l + 1 + r) * (l + 1 + r) - 1;
  rigid_pair_checks(c, pair, t.z, t.y, k_zy, -t.n_b, std::nullopt, seed);
  c.finish();
  return c;
}

// ---------------------------------------------------------------- sp8 slices

inline Certificate cii_sp8_c_value(int samples = 40, std::uint64_t seed = 1) {
  if (samples < 20) throw ArgumentError("the slice protocol needs at least 20 samples");
  SymmetricPair pair = build_pair(Family::two(Tag::CII, 2, 2), seed);
  Certificate c;
  c.kind = "codim_slice";
  c.id = "sp8";
  c.family = pair.family;
  c.realization = pair.label;
  Matrix z = catalog_data::sp8_z();
  c.elements.push_back({"z", z});
  c.check_bool("z in p", true, pair.in(Space::P, z));
  c.check_str("ab-diagram of z", catalog_data::diagram({"ab", "ba", "ab", "ba"}).str(), ab_diagram_of(pair, z).str());
  c.check("dim m", 6, pair.dim_m);
  Subspace pz = centralizer_in(pair, Space::P, {z});
  // slices of p^z cut out by y.v1 = 0 and/or y.v5 = 0 (columns 1 and 5)
  auto slice = [&](const std::vector<int>& cols) {
    Matrix m(static_cast<int>(cols.size()) * pair.N, pz.dim());
    for (int j = 0; j < pz.dim(); ++j)
      for (std::size_t t = 0; t < cols.size(); ++t)
        for (int i = 0; i < pair.N; ++i) m(static_cast<int>(t) * pair.N + i, j) = pz.basis[j][i * pair.N + cols[t]];
    Subspace ker = kernel(m);
    std::vector<Vector> v;
    for (const auto& k : ker.basis) v.push_back(pz.combine(k));
    return Subspace::span(pz.ambient, v);
  };
  Subspace both = slice({0, 4}), s1 = slice({0}), s5 = slice({4});
  const int codim = pz.dim() - both.dim();
  c.recorded["dim_p^z"] = pz.dim();
  c.recorded["dim_locus"] = both.dim();
  auto column_zero = [&](const Matrix& y, int col) {
    for (int i = 0; i < pair.N; ++i)
      if (!y(i, col).is_zero()) return false;
    return true;
  };
  // dim k^{z,y} >= 7 exactly on the locus, 6 elsewhere
  auto count = [&](const Subspace& w, std::uint64_t tag) {
    int bad = 0;
    for (int s = 0; s < samples; ++s) {
      Matrix y = pair.element(random_vector(w, mix_seed(seed, tag + s), 5));
      const int d = centralizer_in(pair, Space::K, {z, y}).dim();
      const bool on_locus = column_zero(y, 0) && column_zero(y, 4);
      if (on_locus ? d < 7 : d != 6) ++bad;
    }
    return bad;
  };
  const std::string rule = " violating [dim k^{z,y} >= 7 iff y.v1 = y.v5 = 0]";
  c.check("samples of p^z" + rule, 0, count(pz, 100));
  c.check("samples of {y.v1 = y.v5 = 0}" + rule, 0, count(both, 200));
  c.check("samples of {y.v1 = 0}" + rule, 0, count(s1, 300));
  c.check("samples of {y.v5 = 0}" + rule, 0, count(s5, 400));
  c.check_rel("single-condition slices properly contain the locus", ">", both.dim(), std::min(s1.dim(), s5.dim()),
              std::min(s1.dim(), s5.dim()) > both.dim());
  c.check("codim of the locus in p^z", 2, codim);
  c.claimed["c_t"] = 4;
  c.check("c_t = codim + rk_sym", 4, codim + pair.rk_sym);
  c.finish();
  return c;
}

// ---------------------------------------------------------------- reducibility

inline bool reducibility_covered(const Family& f) {
  switch (f.tag) {
    case Tag::AIII: return f.p != f.q;
    case Tag::CII: return f.p != f.q || f.p >= 3;
    case Tag::DIII: return f.n == 3 || f.n >= 5;
    default: return false;
  }
}

/*
 * Levi block carrying a semi-rigid pair, an outer block whose Cartan subspace
 * supplies s, and x = s + z.  Blocks are 1-based first-half indices for CII/DIII
 * (mirrored by the form) and plain index lists for AIII.
 */
inline Certificate reducibility_certificate(const Family& f, std::uint64_t seed = 1) {
  if (!reducibility_covered(f)) throw UnsupportedFamily("no reducibility certificate for " + f.name());
  SymmetricPair pair = build_pair(f, seed);
  const int N = pair.N;
  std::vector<int> outer, middle;  // 0-based
  Matrix z(N, N), y(N, N);
  bool y_given = false;
  std::string levi_name;
  if (f.tag == Tag::AIII) {
    const int m = std::min(f.p, f.q);
    // a_k = k-1, b_k = p+k-1 (0-based)
    for (int k = 1; k < m; ++k) {
      outer.push_back(k - 1);
      outer.push_back(f.p + k - 1);
    }
    for (int i = 0; i < N; ++i)
      if (std::find(outer.begin(), outer.end(), i) == outer.end()) middle.push_back(i);
    // one vector on the short side mapped to two on the long side
    int a = m - 1, b = f.p + m - 1;
    if (f.p < f.q) {
      z(b, a) = 1;
      y(b + 1, a) = 1;
    } else {
      z(a, b) = 1;
      y(a + 1, b) = 1;
    }
    y_given = true;
    levi_name = f.p < f.q ? "AIII(1," + std::to_string(f.q - f.p + 1) + ")" : "AIII(" + std::to_string(f.p - f.q + 1) + ",1)";
  } else if (f.tag == Tag::CII && f.p != f.q) {
    const int m = std::min(f.p, f.q), half = f.p + f.q;
    outer = mirrored(N, range1(1, 2 * m - 2));
    middle = mirrored(N, range1(2 * m - 1, half));
    const int i = 2 * m - 1, j = 2 * m;  // a-index, b-index
    z = from_actions(N, {{i, j}, {N + 1 - j, N + 1 - i}});
    levi_name = f.p < f.q ? "CII(1," + std::to_string(f.q - f.p + 1) + ")" : "CII(" + std::to_string(f.p - f.q + 1) + ",1)";
  } else if (f.tag == Tag::CII) {
    const int off = 2 * (f.p - 3);
    outer = mirrored(N, range1(1, off));
    middle = mirrored(N, range1(off + 1, off + 6));
    z = embed_block(catalog_data::sp12_z(), N, off);
    y = embed_block(catalog_data::sp12_y(), N, off);
    y_given = true;
    levi_name = "CII(3,3)";
  } else if (f.n % 2 == 0) {  // DIII, n >= 6 even
    const int off = f.n - 6;
    outer = mirrored(N, range1(1, off));
    middle = mirrored(N, range1(off + 1, off + 6));
    z = embed_block(catalog_data::so12_z(), N, off);
    y = embed_block(catalog_data::so12_y(), N, off);
    y_given = true;
    levi_name = "DIII(6)";
  } else {  // DIII, n odd: middle DIII(3), rank one with a subregular orbit
    const int off = f.n - 3;
    outer = mirrored(N, range1(1, off));
    middle = mirrored(N, range1(off + 1, off + 3));
    levi_name = "DIII(3)";
  }
  SymmetricPair levi = block_subpair(pair, middle, levi_name + " block of " + pair.label, seed);
  if (f.tag == Tag::DIII && f.n % 2 == 1) {
    // z in p cap Hom(V_a, V_b): rows even, columns odd (1-based)
    for (const auto& b : levi.p.basis) {
      bool ok = true;
      for (int r = 0; r < N && ok; ++r)
        for (int col = 0; col < N && ok; ++col)
          if (!b[r * N + col].is_zero() && !((r % 2 == 1) && (col % 2 == 0))) ok = false;
      if (ok) {
        z = pair.element(b);
        break;
      }
    }
  }
  if (!y_given) {
    Subspace pz = centralizer_in(levi, Space::P, {z});
    y = random_off_line(levi, pz, z, mix_seed(seed, 8100));
  }
  Matrix s(N, N);
  if (!outer.empty()) {
    SymmetricPair op = block_subpair(pair, outer, "outer block of " + pair.label, seed);
    s = pair.element(random_vector(op.cartan, mix_seed(seed, 8200), 5));
  }
  Matrix x = s + z;
  Certificate c;
  c.kind = "reducibility";
  c.id = "reducibility " + f.name();
  c.family = f;
  c.realization = pair.label + " with Levi block " + levi_name;
  c.elements = {{"s", s}, {"z", z}, {"y", y}, {"x", x}};
  c.check_bool("z, y in p of the Levi block", true, levi.in(Space::P, z) && levi.in(Space::P, y));
  c.check_bool("[z,y] = 0", true, commutator(z, y).is_zero());
  c.check_bool("[s,z] = [s,y] = 0", true, commutator(s, z).is_zero() && commutator(s, y).is_zero());
  c.check_bool("s semisimple", true, is_semisimple(s));
  c.check_bool("z nilpotent", true, is_nilpotent(z));
  if (!c.transcript.empty() && std::all_of(c.transcript.begin(), c.transcript.end(), [](const CheckRow& r) { return r.ok; })) {
    const int i_levi = irregularity_number(levi, z, y);
    c.recorded["i_levi"] = i_levi;
    c.recorded["rk_levi"] = levi.rk_sym;
    c.check_rel("i in the Levi block", "<", 0, i_levi, i_levi < 0);
    Reduction red = reduction_check(pair, x, y, seed);
    const int k_xy = red.big.k_xy;
    c.recorded["dim_k^{x,y}"] = k_xy;
    c.recorded["dim_m"] = pair.dim_m;
    c.recorded["i"] = red.big.irregularity;
    c.check_rel("i in the big pair", "<", 0, red.big.irregularity, red.big.irregularity < 0);
    c.check_rel("dim k^{x,y} vs dim m", "<", pair.dim_m, k_xy, k_xy < pair.dim_m);
    c.check("i after reduction to the p-Levi of x_s", red.big.irregularity, red.small.irregularity);
    if (!s.is_zero()) {
      SubPair sl = p_levi(pair, s, seed);
      c.check_bool("Levi block inside the reduced p-Levi of s", true, sl.g_s.contains(levi.g));
      c.check("rk_sym of the reduced p-Levi vs block", levi.rk_sym, sl.reduced.rk_sym);
    }
  }
  c.finish();
  return c;
}

inline std::vector<std::string> catalog_cases() { return {"sp12", "so12", "sp8", "aiii", "table3", "dichotomy"}; }

}  // namespace symc
