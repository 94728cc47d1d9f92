#pragma once

#include <fstream>
#include <string>

#include "json.hpp"

#include "catalog.hpp"
#include "satake.hpp"

namespace symc {

using json = nlohmann::ordered_json;

inline json to_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json r = json::array();
    for (int j = 0; j < m.cols; ++j) r.push_back(m(i, j).str());
    rows.push_back(r);
  }
  return rows;
}

// ElementFile: {"n": .., "field": "Q" | "Q(i)", "entries": [[...]]}
inline json element_file(const Matrix& m) {
  return {{"n", m.rows}, {"field", m.is_real() ? "Q" : "Q(i)"}, {"entries", to_json(m)}};
}

inline Matrix parse_element(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries")) throw ArgumentError("element file needs \"n\" and \"entries\"");
  const int n = j.at("n").get<int>();
  const std::string field = j.value("field", "Q");
  if (field != "Q" && field != "Q(i)") throw ArgumentError("unknown field " + field);
  const json& e = j.at("entries");
  if (n < 1 || !e.is_array() || static_cast<int>(e.size()) != n) throw ArgumentError("entries must be an n x n grid");
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    if (!e[i].is_array() || static_cast<int>(e[i].size()) != n) throw ArgumentError("row " + std::to_string(i + 1) + " has the wrong length");
    for (int k = 0; k < n; ++k) {
      const json& c = e[i][k];
      m(i, k) = c.is_string() ? Scalar::parse(c.get<std::string>()) : c.is_number_integer() ? Scalar(c.get<long>()) : throw ArgumentError("entries must be strings or integers");
    }
  }
  if (field == "Q" && !m.is_real()) throw ArgumentError("imaginary entry in a file declared over Q");
  return m;
}

inline Matrix load_element(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ArgumentError(path + ": " + e.what());
  }
  return parse_element(j);
}

inline json to_json(const Family& f) {
  json j{{"tag", tag_name(f.tag)}, {"name", f.name()}};
  if (f.uses_pq()) {
    j["p"] = f.p;
    j["q"] = f.q;
  } else {
    j["n"] = f.n;
  }
  return j;
}

inline json to_json(const PairReport& r) {
  json j{{"label", r.label},
         {"rk_sym", r.rk_sym},
         {"dim_m", r.dim_m},
         {"dim_k", r.dim_k},
         {"dim_p", r.dim_p},
         {"dim_k_xy", r.k_xy},
         {"dim_p_xy", r.p_xy},
         {"dim_k_x", r.k_x},
         {"dim_p_x", r.p_x},
         {"dim_k_y", r.k_y},
         {"dim_p_y", r.p_y},
         {"irregularity", r.irregularity},
         {"classification", class_name(r.classification)},
         {"density_check", r.density},
         {"moment_kernel", {{"formula", r.moment.formula}, {"direct", r.moment.direct}}}};
  json red = json::array();
  for (const auto& s : r.reduction) red.push_back(to_json(s));
  j["reduction"] = red;
  return j;
}

inline json to_json(const Certificate& c) {
  json el = json::object();
  for (const auto& [name, m] : c.elements) el[name] = to_json(m);
  json tr = json::array();
  for (const auto& r : c.transcript) tr.push_back({{"check", r.name}, {"expected", r.expected}, {"got", r.got}, {"ok", r.ok}});
  json j{{"kind", c.kind}, {"id", c.id}};
  j["family"] = c.family ? to_json(*c.family) : json(nullptr);
  j["realization"] = c.realization;
  j["claimed"] = c.claimed;
  j["recorded"] = c.recorded;
  j["transcript"] = tr;
  j["elements"] = el;
  j["verified"] = c.verified;
  return j;
}

inline json to_json(const SatakeDiagram& d) {
  json nodes = json::array();
  for (int id = 1; id <= d.size(); ++id) nodes.push_back({{"id", id}, {"color", d.white(id) ? "white" : "black"}});
  json edges = json::array();
  for (const auto& e : d.edges) {
    json x{{"u", e.u}, {"v", e.v}, {"multiplicity", e.mult}};
    if (e.mult > 1) x["longer"] = e.longer;
    edges.push_back(x);
  }
  json arrows = json::array();
  for (auto [a, b] : d.arrows) arrows.push_back({a, b});
  return {{"label", d.label}, {"source", d.source}, {"nodes", nodes}, {"edges", edges}, {"arrows", arrows}, {"center_rank", d.center_rank}};
}

inline json to_json(const ComponentClass& c) {
  json j{{"nodes", c.nodes}, {"colors", c.shape}, {"compact", c.compact}};
  j["family"] = c.family ? to_json(*c.family) : json(nullptr);
  return j;
}

inline json pair_info(const SymmetricPair& pair) {
  json j{{"label", pair.label}, {"field", pair.field}, {"matrix_size", pair.N}, {"dim_g", pair.dim_g}, {"dim_k", pair.dim_k},
         {"dim_p", pair.dim_p},   {"rk_sym", pair.rk_sym}, {"dim_m", pair.dim_m}};
  if (pair.family) {
    j["family"] = to_json(*pair.family);
    SatakeSummary s = satake_summary(*pair.family);
    json arrows = json::array();
    for (auto [a, b] : s.arrows) arrows.push_back({a, b});
    j["satake"] = {{"colors", s.colors}, {"arrows", arrows}, {"white", s.white}, {"arrow_count", s.arrow_count},
                   {"rank", s.rank}, {"center_rank", s.center_rank}, {"subdiagrams", s.subdiagrams}, {"source", "literature"}};
  }
  return j;
}

}  // namespace symc
