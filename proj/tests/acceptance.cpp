#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "invariants.hpp"
#include "oracles.hpp"

using namespace symc;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;
  void fail(const std::string& s) {
    ok = false;
    notes.push_back(s);
  }
  void need(bool cond, const std::string& s) {
    if (!cond) fail(s);
  }
  void certificate(const Certificate& c) {
    if (!c.verified) {
      auto f = c.failures();
      if (f.empty()) fail(c.id + ": not verified");
      for (const auto& x : f) fail(x);
    }
  }
};

int run(int id, const std::string& title, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0 && secs > budget_s) o.fail("runtime " + std::to_string(secs) + " s over the " + std::to_string(budget_s) + " s target");
  std::printf("%s criterion %d: %s (%.1f s)\n", o.ok ? "PASS" : "FAIL", id, title.c_str(), secs);
  for (std::size_t i = 0; i < o.notes.size() && i < 20; ++i) std::printf("    %s\n", o.notes[i].c_str());
  if (o.notes.size() > 20) std::printf("    ... %zu more\n", o.notes.size() - 20);
  std::fflush(stdout);
  return o.ok ? 0 : 1;
}

}  // namespace

int main() {
  int failed = 0;

  failed += run(1, "rank-one table d values", 60, [](Outcome& o) {
    std::vector<std::pair<Family, long>> want{{Family::one(Tag::A0, 2), 4}, {Family::one(Tag::AI, 2), 3}, {Family::one(Tag::AII, 2), 6},
                                              {Family::two(Tag::AIII, 1, 1), 3}, {Family::two(Tag::CII, 1, 1), 5}};
    for (int m = 2; m <= 5; ++m) want.push_back({Family::two(Tag::AIII, m, 1), m});
    for (int q = 1; q <= 5; ++q) want.push_back({Family::two(Tag::BDI, q, 1), q + 1});
    for (int q = 2; q <= 4; ++q) want.push_back({Family::two(Tag::CII, q, 1), 2 * q - 1});
    o.need(want.size() == 17, "expected 17 cells");
    for (const auto& [f, d] : want) {
      auto [got, cert] = rank1_d_value(f);
      o.certificate(cert);
      o.need(got == d, f.name() + ": d = " + std::to_string(got) + ", want " + std::to_string(d));
    }
  });

  failed += run(2, "rigid pairs in sp12, so12 and the AIII tableaux", 120, [](Outcome& o) {
    SymmetricPair sp12 = build_pair(Family::two(Tag::CII, 3, 3));
    SymmetricPair so12 = build_pair(Family::one(Tag::DIII, 6));
    struct Item {
      const SymmetricPair* pr;
      Matrix z, y;
      std::string diagram;
    };
    for (const Item& it : {Item{&sp12, catalog_data::sp12_z(), catalog_data::sp12_y(), "(aba,aba,ab,ba,b,b)"},
                           Item{&so12, catalog_data::so12_z(), catalog_data::so12_y(), "(aba,bab,ab,ab,a,b)"}}) {
      PairReport r = classify_pair(*it.pr, it.z, it.y);
      const std::string n = it.pr->label;
      o.need(r.k_xy == 6, n + ": dim k^{z,y} = " + std::to_string(r.k_xy));
      o.need(r.irregularity == -3, n + ": i = " + std::to_string(r.irregularity));
      o.need(r.classification == PairClass::Rigid, n + ": not rigid");
      o.need(r.density, n + ": density check false");
      o.need(ab_diagram_of(*it.pr, it.z).str() == it.diagram, n + ": ab-diagram of z " + ab_diagram_of(*it.pr, it.z).str());
      o.need(ab_diagram_of(*it.pr, it.y).str() == it.diagram, n + ": ab-diagram of y " + ab_diagram_of(*it.pr, it.y).str());
    }
    o.certificate(cii_sp12_rigid_pair());
    o.certificate(diii_so12_rigid_pair());
    for (auto [l, eps, r] : {std::tuple{0, 1, 0}, std::tuple{1, 0, 0}, std::tuple{1, 1, 0}, std::tuple{1, 1, 1}, std::tuple{2, 0, 1}}) {
      TableauPair t = aiii_tableau(l, eps, r);
      SymmetricPair pr = build_pair(Family::two(Tag::AIII, t.n_a, t.n_b));
      PairReport rep = classify_pair(pr, t.z, t.y);
      const std::string n = pr.label;
      o.need(rep.k_xy == (l + 1 + r) * (l + 1 + r) - 1, n + ": dim k^{z,y} = " + std::to_string(rep.k_xy));
      o.need(rep.irregularity == -t.n_b, n + ": i = " + std::to_string(rep.irregularity));
      o.certificate(aiii_rigid_pair(l, eps, r));
    }
  });

  failed += run(3, "sp8 slice protocol, 40 samples per slice, c_t = 4", 0, [](Outcome& o) {
    Certificate c = cii_sp8_c_value(40);
    o.certificate(c);
    o.need(c.claimed.count("c_t") && c.claimed.at("c_t") == 4, "c_t not reported as 4");
  });

  failed += run(4, "subregular dichotomy, 40 samples", 0, [](Outcome& o) {
    for (const auto& f : {Family::two(Tag::AIII, 2, 1), Family::two(Tag::AIII, 3, 1), Family::two(Tag::AIII, 4, 1), Family::two(Tag::CII, 2, 1),
                          Family::two(Tag::CII, 3, 1)})
      o.certificate(subregular_dichotomy(f, 40));
  });

  failed += run(5, "reducibility certificates", 0, [](Outcome& o) {
    for (const auto& f : {Family::two(Tag::CII, 3, 3), Family::one(Tag::DIII, 6), Family::two(Tag::AIII, 2, 3), Family::two(Tag::CII, 1, 2)}) {
      Certificate c = reducibility_certificate(f);
      o.certificate(c);
      if (c.recorded.count("dim_k^{x,y}"))
        o.need(c.recorded.at("dim_k^{x,y}") < c.recorded.at("dim_m"), f.name() + ": dim k^{x,y} not below dim m");
      else
        o.fail(f.name() + ": no dim k^{x,y} recorded");
    }
  });

  failed += run(6, "invariant suites, 100 samples per pair", 0, [](Outcome& o) {
    int pairs = 0, samples = 0, reduced = 0;
    for (const auto& f : symc::testing::invariant_grid()) {
      SymmetricPair pr = build_pair(f);
      auto res = symc::testing::run_invariants(pr, 100, 2024);
      ++pairs;
      samples += res.samples;
      reduced += res.reduced;
      o.need(res.samples >= 100, f.name() + ": too few samples");
      for (const auto& v : res.violations) o.fail(v);
    }
    std::printf("    %d pairs, %d samples, %d with nonzero semisimple part\n", pairs, samples, reduced);
  });

  failed += run(7, "Satake suite", 0, [](Outcome& o) {
    for (const auto& f : symc::testing::invariant_grid()) {
      SatakeDiagram d = satake_diagram(f);
      SymmetricPair pr = build_pair(f);
      o.need(d.whites() - static_cast<int>(d.arrows.size()) + d.center_rank == pr.rk_sym, f.name() + ": white - arrows != rk_sym");
      auto subs = enumerate_subdiagrams(d);
      const std::size_t full = subs.size() - 1;  // mask with every orbit
      for (std::size_t i = 0; i < subs.size(); ++i) {
        if (i == full) continue;
        bool maximal = true;
        for (std::size_t j = 0; j < subs.size() && maximal; ++j) {
          if (j == full || j == i) continue;
          if ((i & j) == i) maximal = false;  // subs[j] strictly contains subs[i]
        }
        o.need(maximal == (dim_c_a(d, subs[i]) == 1), f.name() + " " + subdiagram_str(subs[i]) + ": maximality vs dim c_a");
      }
    }
    o.need(enumerate_subdiagrams(satake_diagram(Family::one(Tag::AI, 2))).size() == 2, "AI(2) count");
    o.need(enumerate_subdiagrams(satake_diagram(Family::two(Tag::AIII, 1, 2))).size() == 2, "AIII(1,2) count");
    o.need(enumerate_subdiagrams(satake_diagram(Family::one(Tag::AI, 3))).size() == 4, "AI(3) count");
  });

  failed += run(8, "linear-algebra kernel: dual rank and Grassmann identity", 0, [](Outcome& o) {
    Rng rng(8080);
    for (int t = 0; t < 120; ++t) {
      int r = static_cast<int>(rng.uniform(1, 12)), c = static_cast<int>(rng.uniform(1, 12));
      int cap = t % 3 == 0 ? static_cast<int>(rng.uniform(0, std::min(r, c))) : -1;
      Matrix m = oracle::random_matrix(rng, r, c, t % 4 == 0, cap);
      o.need(rank(m) == oracle::rank_gaussian(m), "rank mismatch on trial " + std::to_string(t));
    }
    for (int t = 0; t < 120; ++t) {
      const int n = static_cast<int>(rng.uniform(1, 12));
      auto random_sub = [&]() {
        int k = static_cast<int>(rng.uniform(0, n));
        Matrix m = oracle::random_matrix(rng, k, n, t % 5 == 0, k > 1 && t % 3 == 0 ? k - 1 : -1);
        return Subspace::span(n, m.row_list());
      };
      Subspace u = random_sub(), w = random_sub();
      if (t % 4 == 0 && u.dim() > 0) w = sum(w, Subspace::span(n, {u.basis[0]}));
      Subspace s = sum(u, w), i = intersect(u, w);
      o.need(s.dim() + i.dim() == u.dim() + w.dim(), "Grassmann identity fails on trial " + std::to_string(t));
      o.need(u.contains(i) && w.contains(i), "intersection not contained on trial " + std::to_string(t));
    }
  });

  std::printf("%s: %d of 8 criteria failed\n", failed ? "FAIL" : "PASS", failed);
  return failed ? 1 : 0;
}
