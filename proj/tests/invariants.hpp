#pragma once

#include <string>
#include <vector>

#include "symc/symc.hpp"

namespace symc::testing {

struct SuiteResult {
  int samples = 0, rigid = 0, strict_semi_rigid = 0, principal = 0, irregular = 0, reduced = 0;
  std::vector<std::string> violations;
};

inline std::vector<Family> invariant_grid() {
  std::vector<Family> g;
  for (int n = 2; n <= 6; ++n) g.push_back(Family::one(Tag::A0, n));
  for (int n = 2; n <= 6; ++n) g.push_back(Family::one(Tag::AI, n));
  for (int n = 2; n <= 6; ++n) g.push_back(Family::one(Tag::AII, n));
  for (int n = 1; n <= 6; ++n) g.push_back(Family::one(Tag::CI, n));
  for (int n = 2; n <= 6; ++n) g.push_back(Family::one(Tag::DIII, n));
  for (Tag t : {Tag::AIII, Tag::BDI, Tag::CII})
    for (int p = 1; p <= 4; ++p)
      for (int q = p; q <= 4; ++q) g.push_back(Family::two(t, p, q));
  return g;
}

// Sample-level identities and bounds; every exception from an internal consistency check counts as a violation.
inline SuiteResult run_invariants(const SymmetricPair& pair, int samples, std::uint64_t seed) {
  SuiteResult res;
  auto bad = [&](int s, const std::string& what) { res.violations.push_back(pair.label + " sample " + std::to_string(s) + ": " + what); };
  const int kr = pair.dim_k - pair.dim_p;
  for (int s = 0; s < samples; ++s) {
    ++res.samples;
    try {
      auto [x, y] = random_commuting_pair(pair, mix_seed(seed, 50000 + s), s);
      Reduction red = reduction_check(pair, x, y, seed);
      const PairReport& r = red.big;
      if (r.k_x - r.p_x != kr) bad(s, "dim k^x - dim p^x");
      if (r.k_y - r.p_y != kr) bad(s, "dim k^y - dim p^y");
      if (r.irregularity < -r.rk_sym) bad(s, "i below -rk_sym");
      if (r.k_xy < pair.dim_k - pair.dim_p) bad(s, "dim k^{x,y} below dim k - dim p");
      if (r.moment.direct != r.moment.formula) bad(s, "moment kernel");
      if ((r.classification == PairClass::Rigid) != r.density) bad(s, "rigidity vs density");
      if (red.small.irregularity != r.irregularity) bad(s, "reduction changed i");
      if (!red.xs.is_zero()) {
        ++res.reduced;
        if (red.c_p_dim + red.pxn_dim != r.p_x) bad(s, "p^x decomposition");
      }
      switch (r.classification) {
        case PairClass::Rigid: ++res.rigid; break;
        case PairClass::StrictSemiRigid: ++res.strict_semi_rigid; break;
        case PairClass::Principal: ++res.principal; break;
        case PairClass::IrregularPlus: ++res.irregular; break;
      }
    } catch (const std::exception& e) {
      bad(s, e.what());
    }
  }
  return res;
}

}  // namespace symc::testing
