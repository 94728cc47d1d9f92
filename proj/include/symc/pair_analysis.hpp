#pragma once

#include <optional>
#include <string>
#include <vector>

#include "structure.hpp"

namespace symc {

enum class PairClass { IrregularPlus, Principal, StrictSemiRigid, Rigid };

inline std::string class_name(PairClass c) {
  switch (c) {
    case PairClass::IrregularPlus: return "irregular_plus";
    case PairClass::Principal: return "principal";
    case PairClass::StrictSemiRigid: return "strict_semi_rigid";
    case PairClass::Rigid: return "rigid";
  }
  return "?";
}

inline PairClass classify_irregularity(int i, int rk) {
  if (i > 0) return PairClass::IrregularPlus;
  if (i == 0) return PairClass::Principal;
  if (i == -rk) return PairClass::Rigid;
  if (i < -rk) throw InternalError("irregularity number below -rk_sym");
  return PairClass::StrictSemiRigid;
}

struct MomentKernel {
  int formula = 0, direct = 0;
};

struct PairReport {
  std::string label;
  int rk_sym = 0, dim_m = 0, dim_k = 0, dim_p = 0;
  int k_xy = 0, p_xy = 0, k_x = 0, p_x = 0, k_y = 0, p_y = 0;
  int irregularity = 0;
  PairClass classification = PairClass::Principal;
  bool density = false;
  MomentKernel moment;
  std::vector<PairReport> reduction;  // at most one: the report in the reduced p-Levi of x_s
};

inline std::string first_nonzero_entry(const Matrix& m) {
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (!m(i, j).is_zero()) return "[x,y](" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " + m(i, j).str();
  return "";
}

inline void require_commuting_pair(const SymmetricPair& pair, const Matrix& x, const Matrix& y) {
  require_in(pair, Space::P, x, "x");
  require_in(pair, Space::P, y, "y");
  Matrix c = commutator(x, y);
  if (!c.is_zero()) throw NonCommutingError("x and y do not commute: " + first_nonzero_entry(c));
}

inline int irregularity_number(const SymmetricPair& pair, const Matrix& x, const Matrix& y) {
  require_commuting_pair(pair, x, y);
  return centralizer_in(pair, Space::K, {x, y}).dim() - pair.dim_m;
}

// K^x.y dense in p^x, tested on tangent spaces: [k^x, y] = p^x.
inline bool rigidity_density_check(const SymmetricPair& pair, const Matrix& x, const Matrix& y) {
  require_commuting_pair(pair, x, y);
  Subspace kx = centralizer_in(pair, Space::K, {x});
  Subspace px = centralizer_in(pair, Space::P, {x});
  return bracket_image_dim(pair, kx, y) == px.dim();
}

// kernel of (a,b) -> [a,y] + [x,b] on p x p, against 2 dim p - dim k + dim k^{x,y}
inline MomentKernel moment_kernel_direct(const SymmetricPair& pair, const Matrix& x, const Matrix& y, int k_xy) {
  MomentKernel mk;
  mk.formula = 2 * pair.dim_p - pair.dim_k + k_xy;
  std::vector<Vector> rows;
  for (const auto& b : pair.basis_matrices(Space::P)) {
    rows.push_back(pair.k.coords(commutator(b, y).flat()));
    rows.push_back(pair.k.coords(commutator(x, b).flat()));
  }
  mk.direct = 2 * pair.dim_p - rank_rows(rows, pair.dim_k);
  if (mk.direct != mk.formula)
    throw InternalError("moment kernel: direct " + std::to_string(mk.direct) + " != formula " + std::to_string(mk.formula));
  return mk;
}

inline MomentKernel moment_kernel_dim(const SymmetricPair& pair, const Matrix& x, const Matrix& y) {
  require_commuting_pair(pair, x, y);
  return moment_kernel_direct(pair, x, y, centralizer_in(pair, Space::K, {x, y}).dim());
}

inline PairReport basic_report(const SymmetricPair& pair, const Matrix& x, const Matrix& y, Subspace* kx_out = nullptr,
                               Subspace* px_out = nullptr) {
  require_commuting_pair(pair, x, y);
  PairReport r;
  r.label = pair.label;
  r.rk_sym = pair.rk_sym;
  r.dim_m = pair.dim_m;
  r.dim_k = pair.dim_k;
  r.dim_p = pair.dim_p;
  Subspace kx = centralizer_in(pair, Space::K, {x});
  Subspace px = centralizer_in(pair, Space::P, {x});
  Subspace kxy = centralizer_in(pair, kx, Space::K, {y});
  r.k_xy = kxy.dim();
  r.p_xy = centralizer_in(pair, px, Space::P, {y}).dim();
  r.k_x = kx.dim();
  r.p_x = px.dim();
  r.k_y = centralizer_in(pair, Space::K, {y}).dim();
  r.p_y = centralizer_in(pair, Space::P, {y}).dim();
  r.irregularity = r.k_xy - r.dim_m;
  r.classification = classify_irregularity(r.irregularity, r.rk_sym);
  r.density = bracket_image_dim(pair, kx, y) == r.p_x;
  r.moment = moment_kernel_direct(pair, x, y, r.k_xy);
  if (kx_out) *kx_out = std::move(kx);
  if (px_out) *px_out = std::move(px);
  return r;
}

struct Reduction {
  PairReport big, small;
  Matrix xs, xn, y1, y2;
  int c_p_dim = 0, pxn_dim = 0;  // dim c_p(g^{x_s}), dim (p_{x_s})^{x_n}
};

/*
 * x = x_s + x_n, y = y1 + y2 with y1 in c_p(g^{x_s}) and y2 in p_{x_s}; the
 * irregularity number of (x,y) is compared with that of (x_n, y2) in the
 * reduced p-Levi of x_s.
 */
inline Reduction reduction_check(const SymmetricPair& pair, const Matrix& x, const Matrix& y, std::uint64_t seed = 1) {
  Reduction red;
  Subspace kx, px;
  red.big = basic_report(pair, x, y, &kx, &px);
  auto [xs, xn] = jordan_decomposition(pair, x);
  red.xs = xs;
  red.xn = xn;
  if (xs.is_zero()) {
    red.y1 = Matrix(pair.N, pair.N);
    red.y2 = y;
    red.small = red.big;
    red.pxn_dim = red.big.p_x;
    return red;
  }
  SubPair sl = xn.is_zero() ? p_levi(pair, xs, seed, &kx, &px) : p_levi(pair, xs, seed);
  // coordinates of y in the basis c_p(g^{x_s}) then p_s
  const int dc = sl.c_p_gs.dim(), ds = sl.p_s.dim();
  std::vector<Vector> cols;
  for (const auto& b : sl.c_p_gs.basis) cols.push_back(b);
  for (const auto& b : sl.p_s.basis) cols.push_back(b);
  const int len = pair.N * pair.N;
  Matrix A(len, dc + ds);
  for (int j = 0; j < dc + ds; ++j)
    for (int i = 0; i < len; ++i) A(i, j) = cols[j][i];
  auto c = solve(A, y.flat());
  if (!c) throw InternalError("y does not lie in p^{x_s}");
  Vector v1(len), v2(len);
  for (int j = 0; j < dc + ds; ++j) {
    if ((*c)[j].is_zero()) continue;
    Vector& t = j < dc ? v1 : v2;
    for (int i = 0; i < len; ++i) t[i] += (*c)[j] * cols[j][i];
  }
  red.y1 = pair.element(v1);
  red.y2 = pair.element(v2);
  // p^x = c_p(g^{x_s}) + (p_{x_s})^{x_n}
  Subspace pxn = centralizer_in(pair, sl.p_s, Space::P, {xn});
  red.c_p_dim = dc;
  red.pxn_dim = pxn.dim();
  if (intersect(sl.c_p_gs, pxn).dim() != 0 || dc + pxn.dim() != px.dim() || !px.contains(sl.c_p_gs) || !px.contains(pxn))
    throw InternalError("p^x is not c_p(g^{x_s}) + (p_{x_s})^{x_n}");
  red.small = basic_report(sl.reduced, xn, red.y2);
  if (red.small.irregularity != red.big.irregularity)
    throw InternalError("irregularity changed under reduction: " + std::to_string(red.big.irregularity) + " vs " +
                        std::to_string(red.small.irregularity));
  return red;
}

inline PairReport classify_pair(const SymmetricPair& pair, const Matrix& x, const Matrix& y, std::uint64_t seed = 1) {
  Reduction red = reduction_check(pair, x, y, seed);
  PairReport r = red.big;
  if (!red.xs.is_zero()) r.reduction.push_back(red.small);
  return r;
}

// x from one of a few shapes, y generic in p^x.
inline std::pair<Matrix, Matrix> random_commuting_pair(const SymmetricPair& pair, std::uint64_t seed, int shape) {
  Rng rng(mix_seed(seed, 4242));
  Matrix x(pair.N, pair.N);
  const int dp = pair.dim_p;
  if (dp == 0) return {x, x};
  auto sparse = [&]() {
    int terms = 1 + static_cast<int>(rng.uniform(0, 2));
    Vector v(pair.N * pair.N);
    for (int t = 0; t < terms; ++t) {
      int j = static_cast<int>(rng.uniform(0, dp - 1));
      Scalar c = rng.rational(3);
      for (std::size_t i = 0; i < v.size(); ++i)
        if (!pair.p.basis[j][i].is_zero()) v[i] += c * pair.p.basis[j][i];
    }
    return pair.element(v);
  };
  switch (shape % 4) {
    case 0:  // generic
      x = pair.element(random_combination(pair.p, rng, 3));
      break;
    case 1:  // a few basis vectors of p
      x = sparse();
      break;
    case 2: {  // a semisimple s plus an element of p^s
      Matrix s = jordan_decomposition(pair, sparse()).first;
      if (s.is_zero() && pair.cartan.dim() > 0)
        s = pair.element(primitive(pair.cartan.basis[static_cast<int>(rng.uniform(0, pair.cartan.dim() - 1))]));
      Subspace ps = centralizer_in(pair, Space::P, {s});
      x = s + pair.element(primitive(ps.basis[static_cast<int>(rng.uniform(0, ps.dim() - 1))])) * rng.rational(3);
      break;
    }
    default:  // zero x: y is any element of p
      break;
  }
  Subspace px = centralizer_in(pair, Space::P, {x});
  Matrix y = pair.element(random_combination(px, rng, 3));
  return {x, y};
}

}  // namespace symc
