#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "structure.hpp"

namespace symc {

enum class NodeColor { White, Black };

struct DynkinEdge {
  int u = 0, v = 0;  // 1-based node ids
  int mult = 1;
  int longer = 0;  // id of the longer root for mult > 1, else 0
};

// Colored Dynkin diagram with arrows; node ids are 1-based in Bourbaki order.
struct SatakeDiagram {
  std::string label;
  std::vector<NodeColor> colors;  // colors[id-1]
  std::vector<DynkinEdge> edges;
  std::vector<std::pair<int, int>> arrows;
  int center_rank = 0;  // dim c_p(g), nonzero only for so_2
  std::string source = "literature";

  int size() const { return static_cast<int>(colors.size()); }
  bool white(int id) const { return colors[id - 1] == NodeColor::White; }
  std::optional<int> partner(int id) const {
    for (auto [a, b] : arrows) {
      if (a == id) return b;
      if (b == id) return a;
    }
    return std::nullopt;
  }
  int whites() const { return static_cast<int>(std::count(colors.begin(), colors.end(), NodeColor::White)); }
  std::string colors_str() const {
    std::string s;
    for (auto c : colors) s.push_back(c == NodeColor::White ? 'w' : 'b');
    return s;
  }

  void validate() const {
    std::set<int> used;
    for (auto [a, b] : arrows) {
      if (a == b || a < 1 || b < 1 || a > size() || b > size()) throw InternalError(label + ": bad arrow");
      if (!white(a) || !white(b)) throw InternalError(label + ": arrow on a black node");
      if (!used.insert(a).second || !used.insert(b).second) throw InternalError(label + ": node in two arrows");
    }
  }
};

struct SubDiagram {
  std::vector<int> nodes;  // sorted ids
  bool has(int id) const { return std::binary_search(nodes.begin(), nodes.end(), id); }
};

namespace detail {

inline SatakeDiagram chain(const std::string& label, const std::string& colors) {
  SatakeDiagram d;
  d.label = label;
  for (char c : colors) d.colors.push_back(c == 'w' ? NodeColor::White : NodeColor::Black);
  for (int i = 1; i < d.size(); ++i) d.edges.push_back({i, i + 1, 1, 0});
  return d;
}

// type B (short last node) or C (long last node) on a chain of l nodes
inline SatakeDiagram chain_bc(const std::string& label, const std::string& colors, bool type_c) {
  SatakeDiagram d = chain(label, colors);
  const int l = d.size();
  if (l >= 2) {
    d.edges.back().mult = 2;
    d.edges.back().longer = type_c ? l : l - 1;
  }
  return d;
}

// type D: chain 1..l-1, node l attached to l-2
inline SatakeDiagram fork_d(const std::string& label, const std::string& colors) {
  SatakeDiagram d;
  d.label = label;
  for (char c : colors) d.colors.push_back(c == 'w' ? NodeColor::White : NodeColor::Black);
  const int l = d.size();
  for (int i = 1; i + 1 <= l - 1; ++i) d.edges.push_back({i, i + 1, 1, 0});
  if (l >= 3) d.edges.push_back({l - 2, l, 1, 0});
  return d;
}

inline std::string repeat(char c, int k) { return std::string(static_cast<std::size_t>(std::max(k, 0)), c); }

inline SatakeDiagram bdi_diagram(const std::string& label, int p, int q) {
  const int N = p + q, m = std::min(p, q);
  if (N == 2) {
    SatakeDiagram d;
    d.label = label;
    d.center_rank = 1;
    return d;
  }
  if (N % 2 == 1) {
    const int l = (N - 1) / 2;
    return chain_bc(label, repeat('w', m) + repeat('b', l - m), false);
  }
  const int l = N / 2;
  if (l == 2) {  // D2 = A1 + A1, two unjoined nodes
    SatakeDiagram d;
    d.label = label;
    d.colors = {NodeColor::White, NodeColor::White};
    if (m == 1) d.arrows.push_back({1, 2});
    return d;
  }
  if (m <= l - 2) return fork_d(label, repeat('w', m) + repeat('b', l - m));
  SatakeDiagram d = fork_d(label, repeat('w', l));
  if (m == l - 1) d.arrows.push_back({l - 1, l});
  return d;
}

}  // namespace detail

inline SatakeDiagram satake_diagram(const Family& f) {
  using namespace detail;
  SatakeDiagram d;
  const std::string label = f.name();
  switch (f.tag) {
    case Tag::A0: {
      const int k = f.n - 1;
      d = chain(label, repeat('w', 2 * k));
      d.edges.clear();
      for (int i = 1; i < k; ++i) {
        d.edges.push_back({i, i + 1, 1, 0});
        d.edges.push_back({k + i, k + i + 1, 1, 0});
      }
      for (int i = 1; i <= k; ++i) d.arrows.push_back({i, k + i});
      break;
    }
    case Tag::AI: d = chain(label, repeat('w', f.n - 1)); break;
    case Tag::AII: {
      std::string c;
      for (int i = 1; i <= 2 * f.n - 1; ++i) c.push_back(i % 2 == 1 ? 'b' : 'w');
      d = chain(label, c);
      break;
    }
    case Tag::AIII: {
      const int N = f.p + f.q, m = std::min(f.p, f.q);
      if (f.p == f.q) {
        d = chain(label, repeat('w', N - 1));
        for (int i = 1; i < m; ++i) d.arrows.push_back({i, N - i});
      } else {
        d = chain(label, repeat('w', m) + repeat('b', N - 1 - 2 * m) + repeat('w', m));
        for (int i = 1; i <= m; ++i) d.arrows.push_back({i, N - i});
      }
      break;
    }
    case Tag::BDI: d = bdi_diagram(label, f.p, f.q); break;
    case Tag::CI: d = chain_bc(label, repeat('w', f.n), true); break;
    case Tag::CII: {
      const int n = f.p + f.q, m = std::min(f.p, f.q);
      std::string c;
      for (int i = 1; i <= n; ++i) c.push_back(i <= 2 * m && i % 2 == 0 ? 'w' : 'b');
      d = chain_bc(label, c, true);
      break;
    }
    case Tag::DIII: {
      const int n = f.n;
      if (n == 2) {  // D2: node 1 black, node 2 white, no edge
        d.label = label;
        d.colors = {NodeColor::Black, NodeColor::White};
        break;
      }
      std::string c;
      for (int i = 1; i <= n - 2; ++i) c.push_back(i % 2 == 1 ? 'b' : 'w');
      c += n % 2 == 0 ? "bw" : "ww";
      d = fork_d(label, c);
      if (n % 2 == 1) d.arrows.push_back({n - 1, n});
      break;
    }
  }
  d.label = label;
  d.validate();
  return d;
}

inline int white_minus_arrows(const SatakeDiagram& d, const std::vector<int>& nodes) {
  std::set<int> in(nodes.begin(), nodes.end());
  int w = 0, a = 0;
  for (int id : nodes)
    if (d.white(id)) ++w;
  for (auto [x, y] : d.arrows)
    if (in.count(x) && in.count(y)) ++a;
  return w - a;
}

inline void validate_subdiagram(const SatakeDiagram& d, const SubDiagram& s) {
  for (int id : s.nodes)
    if (id < 1 || id > d.size()) throw ArgumentError("sub-diagram node " + std::to_string(id) + " is not in " + d.label);
  for (int id = 1; id <= d.size(); ++id) {
    if (!d.white(id) && !s.has(id)) throw ArgumentError("sub-diagram misses black node " + std::to_string(id));
    if (s.has(id))
      if (auto p = d.partner(id); p && !s.has(*p)) throw ArgumentError("sub-diagram is not closed under the arrow at " + std::to_string(id));
  }
}

// arrow orbits of white nodes: singletons and arrowed pairs, ordered by smallest id
inline std::vector<std::vector<int>> white_orbits(const SatakeDiagram& d) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(d.size() + 1, 0);
  for (int id = 1; id <= d.size(); ++id) {
    if (!d.white(id) || seen[id]) continue;
    std::vector<int> o{id};
    seen[id] = 1;
    if (auto p = d.partner(id)) {
      o.push_back(*p);
      seen[*p] = 1;
    }
    out.push_back(o);
  }
  return out;
}

inline SubDiagram subdiagram_from_orbits(const SatakeDiagram& d, const std::vector<std::vector<int>>& orbits, std::uint64_t mask) {
  SubDiagram s;
  for (int id = 1; id <= d.size(); ++id)
    if (!d.white(id)) s.nodes.push_back(id);
  for (std::size_t k = 0; k < orbits.size(); ++k)
    if (mask >> k & 1U) s.nodes.insert(s.nodes.end(), orbits[k].begin(), orbits[k].end());
  std::sort(s.nodes.begin(), s.nodes.end());
  return s;
}

inline std::vector<SubDiagram> enumerate_subdiagrams(const SatakeDiagram& d) {
  auto orbits = white_orbits(d);
  if (orbits.size() > 20) throw ArgumentError("too many arrow orbits to enumerate");
  std::vector<SubDiagram> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << orbits.size()); ++mask) out.push_back(subdiagram_from_orbits(d, orbits, mask));
  return out;
}

inline int levi_rank(const SatakeDiagram& d, const SubDiagram& s) {
  validate_subdiagram(d, s);
  return white_minus_arrows(d, s.nodes);
}

inline int dim_c_a(const SatakeDiagram& d, const SubDiagram& s) {
  validate_subdiagram(d, s);
  std::vector<int> rest;
  for (int id = 1; id <= d.size(); ++id)
    if (!s.has(id)) rest.push_back(id);
  return white_minus_arrows(d, rest);
}

// induced diagram on a node subset, renumbered 1..k in increasing id order
inline SatakeDiagram induced(const SatakeDiagram& d, const std::vector<int>& nodes) {
  SatakeDiagram r;
  r.label = d.label + " restricted";
  std::vector<int> pos(d.size() + 1, 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    pos[nodes[i]] = static_cast<int>(i) + 1;
    r.colors.push_back(d.colors[nodes[i] - 1]);
  }
  for (const auto& e : d.edges)
    if (pos[e.u] && pos[e.v]) r.edges.push_back({pos[e.u], pos[e.v], e.mult, e.longer ? pos[e.longer] : 0});
  for (auto [a, b] : d.arrows)
    if (pos[a] && pos[b]) r.arrows.push_back({pos[a], pos[b]});
  return r;
}

// Isomorphism of colored diagrams (edges with multiplicity and root lengths, arrows).
inline bool diagrams_isomorphic(const SatakeDiagram& x, const SatakeDiagram& y) {
  const int n = x.size();
  if (n != y.size() || x.edges.size() != y.edges.size() || x.arrows.size() != y.arrows.size() || x.whites() != y.whites()) return false;
  auto edge_code = [](const SatakeDiagram& d, int a, int b) {
    for (const auto& e : d.edges)
      if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return e.mult == 1 ? 1 : (e.longer == a ? 2 : 3);
    return 0;
  };
  auto arrowed = [](const SatakeDiagram& d, int a, int b) { return d.partner(a) == std::optional<int>(b); };
  std::vector<int> map(n + 1, 0);
  std::vector<char> used(n + 1, 0);
  std::function<bool(int)> extend = [&](int i) {
    if (i > n) return true;
    for (int j = 1; j <= n; ++j) {
      if (used[j] || x.colors[i - 1] != y.colors[j - 1]) continue;
      bool ok = true;
      for (int k = 1; k < i && ok; ++k)
        ok = edge_code(x, i, k) == edge_code(y, j, map[k]) && arrowed(x, i, k) == arrowed(y, j, map[k]);
      if (!ok) continue;
      map[i] = j;
      used[j] = 1;
      if (extend(i + 1)) return true;
      used[j] = 0;
    }
    return false;
  };
  return extend(1);
}

struct ComponentClass {
  std::vector<int> nodes;  // ids in the parent diagram
  bool compact = false;
  std::optional<Family> family;
  std::string shape;  // colors string of the component
};

// Families whose diagram has exactly k nodes, in matching priority order.
inline std::vector<Family> families_with_nodes(int k) {
  std::vector<Family> out;
  if (k >= 1) out.push_back(Family::one(Tag::AI, k + 1));
  if (k % 2 == 1 && k >= 3) out.push_back(Family::one(Tag::AII, (k + 1) / 2));
  for (int p = 1; p <= (k + 1) / 2; ++p) out.push_back(Family::two(Tag::AIII, p, k + 1 - p));
  if (k % 2 == 0) out.push_back(Family::one(Tag::A0, k / 2 + 1));
  out.push_back(Family::one(Tag::CI, k));
  for (int p = 1; p <= k / 2; ++p) out.push_back(Family::two(Tag::CII, p, k - p));
  for (int N : {2 * k + 1, 2 * k})
    for (int p = 1; p <= N / 2; ++p) out.push_back(Family::two(Tag::BDI, p, N - p));
  if (k >= 2) out.push_back(Family::one(Tag::DIII, k));
  return out;
}

inline std::vector<ComponentClass> classify_subdiagram(const SatakeDiagram& d, const SubDiagram& s) {
  validate_subdiagram(d, s);
  // components: Dynkin edges and arrows both connect
  std::vector<int> comp(d.size() + 1, -1);
  int nc = 0;
  for (int id : s.nodes) {
    if (comp[id] >= 0) continue;
    std::vector<int> stack{id};
    comp[id] = nc;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      std::vector<int> nb;
      for (const auto& e : d.edges) {
        if (e.u == u) nb.push_back(e.v);
        if (e.v == u) nb.push_back(e.u);
      }
      if (auto p = d.partner(u)) nb.push_back(*p);
      for (int v : nb)
        if (s.has(v) && comp[v] < 0) {
          comp[v] = nc;
          stack.push_back(v);
        }
    }
    ++nc;
  }
  std::vector<ComponentClass> out(nc);
  for (int id : s.nodes) out[comp[id]].nodes.push_back(id);
  for (auto& c : out) {
    SatakeDiagram sub = induced(d, c.nodes);
    c.shape = sub.colors_str();
    if (sub.whites() == 0) {
      c.compact = true;
      continue;
    }
    for (const auto& f : families_with_nodes(sub.size())) {
      SatakeDiagram cand = satake_diagram(f);
      if (cand.center_rank == 0 && diagrams_isomorphic(sub, cand)) {
        c.family = f;
        break;
      }
    }
    if (!c.family)
      throw ClassificationError("unrecognized Satake component with colors " + c.shape + " and " + std::to_string(sub.arrows.size()) +
                                " arrows in " + d.label);
  }
  return out;
}

inline std::string subdiagram_str(const SubDiagram& s) {
  std::string r = "{";
  for (std::size_t i = 0; i < s.nodes.size(); ++i) r += (i ? "," : "") + std::to_string(s.nodes[i]);
  return r + "}";
}

/*
 * AIII / CII: explicit Cartan elements h_k (k = 1..m) pairing the k-th a-vector
 * with the k-th b-vector; white orbit k corresponds to e_k - e_{k+1} for k < m and
 * to the last restricted simple root for k = m.
 */
inline std::vector<Matrix> standard_cartan(const SymmetricPair& pair) {
  if (!pair.family || (pair.family->tag != Tag::AIII && pair.family->tag != Tag::CII))
    throw UnsupportedFamily("explicit Cartan elements are implemented for AIII and CII only");
  const Family& f = *pair.family;
  const int N = pair.N, m = std::min(f.p, f.q);
  std::vector<Matrix> hs;
  for (int k = 1; k <= m; ++k) {
    if (f.tag == Tag::AIII) {
      Matrix h(N, N);
      h(k - 1, f.p + k - 1) = 1;
      h(f.p + k - 1, k - 1) = 1;
      hs.push_back(h);
      continue;
    }
    const int i = 2 * k - 1, j = 2 * k;
    Matrix z(N, N), w(N, N);
    z(j - 1, i - 1) = 1;
    z(N - i, N - j) = 1;
    // the p-element on the transposed support
    Subspace supp = detail::diagonal_support(N * N, {(i - 1) * N + (j - 1), (N - j) * N + (N - i)});
    Subspace cap = intersect(supp, pair.p);
    if (cap.dim() != 1 || !pair.in(Space::P, z)) throw InternalError("unexpected CII Cartan support");
    w = pair.element(primitive(cap.basis[0]));
    bool found = false;
    for (long c : {1L, -1L}) {
      Matrix h = z + w * Scalar(c);
      if (h * h * h == h) {
        hs.push_back(h);
        found = true;
        break;
      }
    }
    if (!found) throw InternalError("no Cartan element with eigenvalues in {-1,0,1}");
  }
  return hs;
}

struct LeviCrossCheck {
  SubDiagram sub;
  Matrix s;
  int dim_c_a = 0, levi_rank = 0;
  int computed_c_p = 0, computed_rank = 0;
  bool ok() const { return dim_c_a == computed_c_p && levi_rank == computed_rank; }
};

// s generic among Cartan elements killed by the restricted roots of the sub-diagram's white orbits.
inline LeviCrossCheck satake_levi_cross_check(const SymmetricPair& pair, const SubDiagram& sub, std::uint64_t seed = 1) {
  SatakeDiagram d = satake_diagram(*pair.family);
  validate_subdiagram(d, sub);
  auto orbits = white_orbits(d);
  std::vector<Matrix> hs = standard_cartan(pair);
  const int m = static_cast<int>(hs.size());
  if (static_cast<int>(orbits.size()) != m) throw InternalError("orbit count differs from the rank");
  // orbit k (1-based) is the one containing node k (AIII) or node 2k (CII)
  auto orbit_in = [&](int k) {
    int node = pair.family->tag == Tag::AIII ? k : 2 * k;
    return sub.has(node);
  };
  // equal values inside a block of killed roots, zero on the block of the last root when killed
  std::vector<long> t(m + 1, 0);
  t[m] = orbit_in(m) ? 0 : 1;
  for (int k = m - 1; k >= 1; --k) t[k] = orbit_in(k) ? t[k + 1] : t[k + 1] + 1;
  Matrix s(pair.N, pair.N);
  for (int k = 1; k <= m; ++k) s += hs[k - 1] * Scalar(t[k]);
  LeviCrossCheck r;
  r.sub = sub;
  r.s = s;
  r.dim_c_a = dim_c_a(d, sub);
  r.levi_rank = levi_rank(d, sub);
  if (s.is_zero()) {
    r.computed_c_p = 0;
    r.computed_rank = pair.rk_sym;
    return r;
  }
  SubPair sp = p_levi(pair, s, seed);
  r.computed_c_p = sp.c_p_gs.dim();
  r.computed_rank = sp.reduced.rk_sym;
  return r;
}

struct SatakeSummary {
  std::string colors;
  std::vector<std::pair<int, int>> arrows;
  int white = 0, arrow_count = 0, rank = 0, center_rank = 0;
  std::size_t subdiagrams = 0;
};

inline SatakeSummary satake_summary(const Family& f) {
  SatakeDiagram d = satake_diagram(f);
  SatakeSummary s;
  s.colors = d.colors_str();
  s.arrows = d.arrows;
  s.white = d.whites();
  s.arrow_count = static_cast<int>(d.arrows.size());
  s.rank = s.white - s.arrow_count + d.center_rank;
  s.center_rank = d.center_rank;
  s.subdiagrams = std::size_t{1} << white_orbits(d).size();
  return s;
}

}  // namespace symc
