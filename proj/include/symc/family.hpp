#pragma once

#include <algorithm>
#include <string>

#include "errors.hpp"

namespace symc {

enum class Tag { A0, AI, AII, AIII, BDI, CI, CII, DIII };

inline std::string tag_name(Tag t) {
  switch (t) {
    case Tag::A0: return "A0";
    case Tag::AI: return "AI";
    case Tag::AII: return "AII";
    case Tag::AIII: return "AIII";
    case Tag::BDI: return "BDI";
    case Tag::CI: return "CI";
    case Tag::CII: return "CII";
    case Tag::DIII: return "DIII";
  }
  return "?";
}

inline Tag parse_tag(const std::string& s) {
  for (Tag t : {Tag::A0, Tag::AI, Tag::AII, Tag::AIII, Tag::BDI, Tag::CI, Tag::CII, Tag::DIII})
    if (tag_name(t) == s) return t;
  throw UnsupportedFamily("unsupported family: " + s);
}

// Families with one parameter use n; the others use (p, q).
struct Family {
  Tag tag = Tag::AI;
  int n = 0, p = 0, q = 0;

  static Family one(Tag t, int n) {
    Family f{t, n, 0, 0};
    f.validate();
    return f;
  }
  static Family two(Tag t, int p, int q) {
    Family f{t, 0, p, q};
    f.validate();
    return f;
  }
  static Family make(const std::string& tag, int n, int p, int q) {
    Tag t = parse_tag(tag);
    return uses_pq(t) ? two(t, p, q) : one(t, n);
  }

  static bool uses_pq(Tag t) { return t == Tag::AIII || t == Tag::BDI || t == Tag::CII; }
  bool uses_pq() const { return uses_pq(tag); }

  void validate() const {
    auto bad = [&](const std::string& why) { throw ArgumentError(name() + ": " + why); };
    switch (tag) {
      case Tag::A0: if (n < 2) bad("needs n >= 2"); break;
      case Tag::AI: if (n < 2) bad("needs n >= 2"); break;
      case Tag::AII: if (n < 2) bad("needs n >= 2"); break;
      case Tag::CI: if (n < 1) bad("needs n >= 1"); break;
      case Tag::DIII: if (n < 2) bad("needs n >= 2"); break;
      case Tag::AIII:
      case Tag::CII: if (p < 1 || q < 1) bad("needs p, q >= 1"); break;
      // so_2 = BDI(1,1) is admitted because the rank-one table uses it
      case Tag::BDI: if (p < 1 || q < 1 || p + q < 2) bad("needs p, q >= 1"); break;
    }
  }

  std::string name() const {
    if (uses_pq()) return tag_name(tag) + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    return tag_name(tag) + "(" + std::to_string(n) + ")";
  }

  // size of the natural module of the realization
  int matrix_size() const {
    switch (tag) {
      case Tag::A0: return 2 * n;
      case Tag::AI: return n;
      case Tag::AII: return 2 * n;
      case Tag::AIII: return p + q;
      case Tag::BDI: return p + q;
      case Tag::CI: return 2 * n;
      case Tag::CII: return 2 * (p + q);
      case Tag::DIII: return 2 * n;
    }
    return 0;
  }

  int closed_form_rank() const {
    switch (tag) {
      case Tag::A0: return n - 1;
      case Tag::AI: return n - 1;
      case Tag::AII: return n - 1;
      case Tag::AIII: return std::min(p, q);
      case Tag::BDI: return std::min(p, q);
      case Tag::CI: return n;
      case Tag::CII: return std::min(p, q);
      case Tag::DIII: return n / 2;
    }
    return 0;
  }

  int closed_form_dim_g() const {
    const int N = matrix_size();
    switch (tag) {
      case Tag::A0: return 2 * (n * n - 1);
      case Tag::AI:
      case Tag::AII:
      case Tag::AIII: return N * N - 1;
      case Tag::BDI:
      case Tag::DIII: return N * (N - 1) / 2;
      case Tag::CI:
      case Tag::CII: return (N / 2) * (N + 1);
    }
    return 0;
  }

  int closed_form_dim_k() const {
    switch (tag) {
      case Tag::A0: return n * n - 1;
      case Tag::AI: return n * (n - 1) / 2;
      case Tag::AII: return n * (2 * n + 1);
      case Tag::AIII: return p * p + q * q - 1;
      case Tag::BDI: return p * (p - 1) / 2 + q * (q - 1) / 2;
      case Tag::CI: return n * n;
      case Tag::CII: return p * (2 * p + 1) + q * (2 * q + 1);
      case Tag::DIII: return n * n;
    }
    return 0;
  }

  // natural module splits as V_a + V_b (eigenspaces of J)
  bool has_grading() const { return tag == Tag::AIII || tag == Tag::BDI || tag == Tag::CI || tag == Tag::CII || tag == Tag::DIII; }

  friend bool operator==(const Family& a, const Family& b) { return a.tag == b.tag && a.n == b.n && a.p == b.p && a.q == b.q; }
};

}  // namespace symc
