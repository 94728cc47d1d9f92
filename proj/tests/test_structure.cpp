#include <gtest/gtest.h>

#include <functional>

#include "oracles.hpp"

using namespace symc;

namespace {

Matrix unit(int N, int i, int j) {
  Matrix m(N, N);
  m(i, j) = 1;
  return m;
}

// every valid ab-diagram with the given label counts
std::vector<ABDiagram> all_diagrams(int a, int b) {
  std::vector<std::string> rows_pool;
  for (int len = 1; len <= a + b; ++len)
    for (char top : {'a', 'b'}) {
      std::string r;
      for (int i = 0; i < len; ++i) r.push_back(((top == 'a') == (i % 2 == 0)) ? 'a' : 'b');
      rows_pool.push_back(r);
    }
  std::vector<ABDiagram> out;
  std::vector<std::string> cur;
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t from, int ra, int rb) {
    if (ra == 0 && rb == 0) {
      out.push_back(ABDiagram::canonical(cur));
      return;
    }
    for (std::size_t k = from; k < rows_pool.size(); ++k) {
      const auto& r = rows_pool[k];
      int ca = static_cast<int>(std::count(r.begin(), r.end(), 'a')), cb = static_cast<int>(r.size()) - ca;
      if (ca > ra || cb > rb) continue;
      cur.push_back(r);
      rec(k, ra - ca, rb - cb);
      cur.pop_back();
    }
  };
  rec(0, a, b);
  return out;
}

}  // namespace

TEST(Structure, JordanDecompositionKnownSplit) {
  // AIII(2,2): s rotates span{e0,e2}, n maps e1 -> e3; they commute, so x = s + n is the split
  SymmetricPair pr = build_pair(Family::two(Tag::AIII, 2, 2));
  Matrix s = unit(4, 0, 2) + unit(4, 2, 0), n = unit(4, 3, 1);
  ASSERT_TRUE(commutator(s, n).is_zero());
  auto [xs, xn] = jordan_decomposition(pr, s + n);
  EXPECT_EQ(xs, s);
  EXPECT_EQ(xn, n);

  SymmetricPair sp8 = build_pair(Family::two(Tag::CII, 2, 2));
  Matrix z = catalog_data::sp8_z();
  auto [zs, zn] = jordan_decomposition(sp8, z);
  EXPECT_TRUE(zs.is_zero());
  EXPECT_EQ(zn, z);
  Matrix c = sp8.element(random_vector(sp8.cartan, 4, 20));
  auto [cs, cn] = jordan_decomposition(sp8, c);
  EXPECT_EQ(cs, c);
  EXPECT_TRUE(cn.is_zero());

  EXPECT_THROW(jordan_decomposition(pr, Matrix::identity(4)), ArgumentError);
}

TEST(Structure, DerivedSubalgebra) {
  SymmetricPair pr = build_pair(Family::two(Tag::AIII, 2, 3));
  EXPECT_EQ(derived_subalgebra(pr, pr.cartan).dim(), 0);
  EXPECT_EQ(derived_subalgebra(pr, pr.g).dim(), pr.dim_g);
  EXPECT_EQ(derived_subalgebra(pr, pr.k).dim(), pr.dim_k - 1);  // s(u2 + u3) has a 1-dim centre
  EXPECT_THROW(derived_subalgebra(pr, pr.p), ArgumentError);
}

TEST(Structure, PLeviExtremes) {
  for (const auto& f : {Family::two(Tag::AIII, 2, 3), Family::two(Tag::CII, 2, 2), Family::one(Tag::AI, 3), Family::one(Tag::DIII, 4)}) {
    SCOPED_TRACE(f.name());
    SymmetricPair pr = build_pair(f);
    SubPair zero = p_levi(pr, Matrix(pr.N, pr.N));
    EXPECT_EQ(zero.g_s.dim(), pr.dim_g);
    EXPECT_EQ(zero.c_p_gs.dim(), 0);
    EXPECT_EQ(zero.reduced.rk_sym, pr.rk_sym);
    Matrix s = pr.element(random_vector(pr.cartan, 8, 20));
    SubPair reg = p_levi(pr, s);
    EXPECT_EQ(reg.p_centralizer.dim(), pr.rk_sym);
    EXPECT_EQ(reg.c_p_gs.dim(), pr.rk_sym);
    EXPECT_EQ(reg.p_s.dim(), 0);
    EXPECT_EQ(reg.reduced.rk_sym, 0);
    EXPECT_EQ(reg.g_centralizer.dim(), pr.dim_m + pr.rk_sym);
  }
  SymmetricPair sp8 = build_pair(Family::two(Tag::CII, 2, 2));
  EXPECT_THROW(p_levi(sp8, catalog_data::sp8_z()), ArgumentError);
}

TEST(Structure, NormalTripleAndGrading) {
  SymmetricPair sp8 = build_pair(Family::two(Tag::CII, 2, 2));
  NormalTriple t = normal_sl2_triple(sp8, catalog_data::sp8_z());
  EXPECT_TRUE(check_triple(t));
  EXPECT_TRUE(sp8.in(Space::K, t.h));
  EXPECT_TRUE(sp8.in(Space::P, t.f));
  Grading gr = characteristic_grading(sp8, t);
  for (Space s : {Space::G, Space::K, Space::P}) {
    int total = 0, total_e = 0;
    for (const auto& [i, w] : gr.by_space(s)) total += w.dim();
    for (const auto& [i, w] : gr.centralizer_pieces(s)) {
      total_e += w.dim();
      EXPECT_GE(i, 0);
    }
    EXPECT_EQ(total, sp8.space(s).dim());
    EXPECT_EQ(total_e, centralizer_in(sp8, s, {t.e}).dim());
  }
  // all Jordan blocks have size 2, so ad h lives in degrees -2, 0, 2
  for (int i = 3; i <= 8; ++i) {
    EXPECT_EQ(gr.dim(Space::G, i), 0);
    EXPECT_EQ(gr.dim(Space::G, -i), 0);
  }
  EXPECT_EQ(gr.dim(Space::G, 1), 0);
  EXPECT_EQ(gr.dim(Space::G, 2), gr.dim(Space::G, -2));

  SymmetricPair pr = build_pair(Family::two(Tag::AIII, 2, 2));
  EXPECT_THROW(normal_sl2_triple(pr, Matrix(4, 4)), ArgumentError);
  EXPECT_THROW(normal_sl2_triple(pr, unit(4, 0, 2) + unit(4, 2, 0)), ArgumentError);
}

TEST(Structure, DefectAndDistinguished) {
  SymmetricPair pr = build_pair(Family::two(Tag::AIII, 2, 2));
  EXPECT_EQ(defect(pr, Matrix(4, 4)), 2);
  Matrix reg = build_nilpotent_from_ab(pr, ABDiagram::canonical({"abab"}));
  EXPECT_EQ(defect(pr, reg), 0);
  EXPECT_TRUE(is_p_distinguished(pr, reg));
  EXPECT_FALSE(is_p_distinguished(pr, Matrix(4, 4)));
  Matrix min = build_nilpotent_from_ab(pr, ABDiagram::canonical({"ab", "a", "b"}));
  EXPECT_EQ(defect(pr, min), 1);
  EXPECT_FALSE(is_p_distinguished(pr, min));

  SymmetricPair sp8 = build_pair(Family::two(Tag::CII, 2, 2));
  EXPECT_EQ(defect(sp8, catalog_data::sp8_z()), 1);
  EXPECT_FALSE(is_p_distinguished(sp8, catalog_data::sp8_z()));
  EXPECT_THROW(defect(pr, unit(4, 0, 2) + unit(4, 2, 0)), ArgumentError);
}

TEST(Structure, AbDiagramsKnownElements) {
  SymmetricPair a23 = build_pair(Family::two(Tag::AIII, 2, 3));
  EXPECT_EQ(ab_diagram_of(a23, Matrix(5, 5)), ABDiagram::canonical({"a", "a", "b", "b", "b"}));
  SymmetricPair sp8 = build_pair(Family::two(Tag::CII, 2, 2));
  EXPECT_EQ(ab_diagram_of(sp8, catalog_data::sp8_z()), ABDiagram::canonical({"ab", "ab", "ba", "ba"}));
  SymmetricPair sp12 = build_pair(Family::two(Tag::CII, 3, 3));
  EXPECT_EQ(ab_diagram_of(sp12, catalog_data::sp12_z()), ABDiagram::canonical({"aba", "aba", "ab", "ba", "b", "b"}));
  EXPECT_EQ(ab_diagram_of(sp12, catalog_data::sp12_y()), ABDiagram::canonical({"aba", "aba", "ab", "ba", "b", "b"}));
  SymmetricPair so12 = build_pair(Family::one(Tag::DIII, 6));
  EXPECT_EQ(ab_diagram_of(so12, catalog_data::so12_z()), ABDiagram::canonical({"aba", "bab", "ab", "ab", "a", "b"}));
  EXPECT_EQ(ab_diagram_of(so12, catalog_data::so12_y()), ABDiagram::canonical({"aba", "bab", "ab", "ab", "a", "b"}));
  EXPECT_EQ(ABDiagram::canonical({"b", "ab", "bab"}).str(), "(bab,ab,b)");
}

TEST(Structure, AbDiagramRoundTripAgainstJordanOracle) {
  for (auto [p, q] : {std::pair{2, 3}, std::pair{3, 3}, std::pair{1, 4}}) {
    SymmetricPair pr = build_pair(Family::two(Tag::AIII, p, q));
    auto ds = all_diagrams(p, q);
    EXPECT_GT(ds.size(), 3u);
    for (const auto& d : ds) {
      SCOPED_TRACE(pr.label + " " + d.str());
      Matrix z = build_nilpotent_from_ab(pr, d);
      ASSERT_TRUE(pr.in(Space::P, z));
      EXPECT_EQ(ab_diagram_of(pr, z), d);
      EXPECT_EQ(oracle::jordan_partition(z), oracle::row_lengths(d));
    }
  }
  // the same check on the catalog nilpotents outside type AIII
  EXPECT_EQ(oracle::jordan_partition(catalog_data::sp12_z()), (std::vector<int>{3, 3, 2, 2, 1, 1}));
  EXPECT_EQ(oracle::jordan_partition(catalog_data::so12_y()), (std::vector<int>{3, 3, 2, 2, 1, 1}));
}

TEST(Structure, AbDiagramErrors) {
  SymmetricPair ai3 = build_pair(Family::one(Tag::AI, 3));
  Matrix s(3, 3);
  s(0, 1) = s(1, 0) = 1;
  EXPECT_THROW(ab_diagram_of(ai3, s), UnsupportedFamily);
  SymmetricPair a22 = build_pair(Family::two(Tag::AIII, 2, 2));
  EXPECT_THROW(ab_diagram_of(a22, unit(4, 0, 2) + unit(4, 2, 0)), ArgumentError);
  EXPECT_THROW(build_nilpotent_from_ab(a22, ABDiagram::canonical({"aa", "bb"})), ArgumentError);
  EXPECT_THROW(build_nilpotent_from_ab(a22, ABDiagram::canonical({"ab", "a"})), ArgumentError);
  SymmetricPair sp8 = build_pair(Family::two(Tag::CII, 2, 2));
  EXPECT_THROW(build_nilpotent_from_ab(sp8, ABDiagram::canonical({"ab", "ab", "ba", "ba"})), UnsupportedFamily);
}
