#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "symc/symc.hpp"

using namespace symc;

namespace {

constexpr const char* kVersion = "1.0.0";

enum Exit { Ok = 0, Failed = 1, BadArgs = 2, NonCommuting = 3 };

struct FamilyArgs {
  std::string tag;
  int n = 0, p = 0, q = 0;

  void add(CLI::App* app) {
    app->add_option("--family", tag, "A0 AI AII AIII BDI CI CII DIII")->required();
    app->add_option("--n", n, "size parameter for A0 AI AII CI DIII");
    app->add_option("--p", p, "first parameter for AIII BDI CII");
    app->add_option("--q", q, "second parameter for AIII BDI CII");
  }
  Family family() const { return Family::make(tag, n, p, q); }
};

struct Output {
  bool as_json = false;
  std::uint64_t seed = 1;
  std::string command;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void emit(const json& payload, const std::string& text) const {
    if (as_json) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
      json env{{"tool_version", kVersion}, {"command", command}, {"seed", seed}, {"wall_time_ms", ms}, {"payload", payload}};
      std::cout << env.dump(2) << "\n";
    } else {
      std::cout << text;
    }
  }
};

std::string cert_line(const Certificate& c) {
  std::ostringstream os;
  os << (c.verified ? "verified  " : "FAILED    ") << c.id;
  for (const auto& [k, v] : c.claimed) os << "  " << k << "=" << v;
  os << "\n";
  return os.str();
}

std::string cert_text(const Certificate& c) {
  std::ostringstream os;
  os << cert_line(c);
  if (!c.realization.empty()) os << "  realization: " << c.realization << "\n";
  for (const auto& r : c.transcript) os << "  [" << (r.ok ? "ok" : "FAIL") << "] " << r.name << ": expected " << r.expected << ", got " << r.got << "\n";
  for (const auto& [k, v] : c.recorded) os << "  (recorded) " << k << " = " << v << "\n";
  return os.str();
}

int finish_certificates(const Output& out, const std::vector<Certificate>& cs, bool detailed) {
  std::vector<Certificate> sorted = cs;
  std::stable_sort(sorted.begin(), sorted.end(), [](const Certificate& a, const Certificate& b) { return a.id < b.id; });
  json arr = json::array();
  std::string text;
  for (const auto& c : sorted) {
    arr.push_back(to_json(c));
    text += detailed ? cert_text(c) : cert_line(c);
  }
  auto fails = failures_of(cs);
  text += std::to_string(cs.size() - std::count_if(cs.begin(), cs.end(), [](const Certificate& c) { return !c.verified; })) + "/" +
          std::to_string(cs.size()) + " certificates verified\n";
  out.emit(json{{"certificates", arr}, {"all_verified", fails.empty()}, {"failures", fails}}, text);
  for (const auto& f : fails) std::cerr << "failing: " << f << "\n";
  return fails.empty() ? Ok : Failed;
}

std::string report_text(const PairReport& r, const std::string& indent = "") {
  std::ostringstream os;
  os << indent << r.label << "\n"
     << indent << "  dim k^{x,y} = " << r.k_xy << ", dim m = " << r.dim_m << ", rk_sym = " << r.rk_sym << "\n"
     << indent << "  irregularity number i = " << r.irregularity << " (" << class_name(r.classification) << ")\n"
     << indent << "  dim k^x = " << r.k_x << ", dim p^x = " << r.p_x << ", dim k^y = " << r.k_y << ", dim p^y = " << r.p_y
     << ", dim p^{x,y} = " << r.p_xy << "\n"
     << indent << "  density check: " << (r.density ? "true" : "false") << "\n"
     << indent << "  moment-map kernel: " << r.moment.direct << " (formula " << r.moment.formula << ")\n";
  for (const auto& s : r.reduction) os << indent << "  reduced to the p-Levi of x_s:\n" << report_text(s, indent + "    ");
  return os.str();
}

void dump_elements(const Certificate& c, const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& [name, m] : c.elements) {
    std::string id = c.id;
    for (char& ch : id)
      if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
    std::ofstream f(std::filesystem::path(dir) / (id + "_" + name + ".json"));
    f << element_file(m).dump(1) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations on classical symmetric pairs and their commuting varieties"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_option("--seed", out.seed, "seed for all sampling")->envname("SYMC_SEED");
  app.add_flag("--json", out.as_json, "print a JSON envelope");
  app.set_version_flag("--version", kVersion);

  FamilyArgs info_f, analyze_f, red_f, sat_f;
  auto* info = app.add_subcommand("info", "dimensions, symmetric rank, dim m and Satake summary");
  info_f.add(info);

  auto* analyze = app.add_subcommand("analyze", "irregularity number and invariants of a commuting pair");
  analyze_f.add(analyze);
  std::string x_file, y_file;
  analyze->add_option("--x", x_file, "element file for x")->required();
  analyze->add_option("--y", y_file, "element file for y")->required();

  auto* table3 = app.add_subcommand("table3", "rank-one d values");
  bool t3_detail = false;
  table3->add_flag("--detail", t3_detail, "print transcripts");

  auto* catalog = app.add_subcommand("catalog", "explicit constructions");
  std::string cat_case = "all", dump_dir;
  int samples = 40;
  std::optional<int> l_opt, eps_opt, r_opt;
  catalog->add_option("--case", cat_case, "sp12 so12 sp8 aiii dichotomy table3 all")
      ->check(CLI::IsMember({"sp12", "so12", "sp8", "aiii", "dichotomy", "table3", "all"}));
  catalog->add_option("--samples", samples, "samples for sp8 and dichotomy");
  catalog->add_option("--l", l_opt, "tableau l");
  catalog->add_option("--eps", eps_opt, "tableau eps");
  catalog->add_option("--r", r_opt, "tableau r");
  catalog->add_option("--dump", dump_dir, "write the certificate elements as element files to this directory");

  auto* red = app.add_subcommand("reducibility", "witness pair outside the principal component");
  red_f.add(red);

  auto* sat = app.add_subcommand("satake", "Satake diagram and sub-diagrams");
  sat_f.add(sat);
  bool enumerate = false, cross = false;
  sat->add_flag("--enumerate", enumerate, "list all sub-diagrams");
  sat->add_flag("--cross-check", cross, "compare with computed p-Levis (AIII, CII)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? Ok : BadArgs;
  }

  try {
    if (*info) {
      out.command = "info";
      SymmetricPair pair = build_pair(info_f.family(), out.seed);
      json j = pair_info(pair);
      std::ostringstream os;
      os << pair.label << " over " << pair.field << "\n"
         << "  dim g = " << pair.dim_g << ", dim k = " << pair.dim_k << ", dim p = " << pair.dim_p << "\n"
         << "  rk_sym = " << pair.rk_sym << ", dim m = " << pair.dim_m << "\n";
      if (j.contains("satake"))
        os << "  Satake: colors " << j["satake"]["colors"].get<std::string>() << ", arrows " << j["satake"]["arrows"].dump() << ", "
           << j["satake"]["subdiagrams"].get<std::size_t>() << " sub-diagrams\n";
      out.emit(j, os.str());
      return Ok;
    }
    if (*analyze) {
      out.command = "analyze";
      SymmetricPair pair = build_pair(analyze_f.family(), out.seed);
      Matrix x = load_element(x_file), y = load_element(y_file);
      if (x.rows != pair.N || y.rows != pair.N)
        throw DimensionError("elements must be " + std::to_string(pair.N) + " x " + std::to_string(pair.N) + " for " + pair.label);
      PairReport r = classify_pair(pair, x, y, out.seed);
      out.emit(to_json(r), report_text(r));
      return Ok;
    }
    if (*table3) {
      out.command = "table3";
      return finish_certificates(out, table3_report(out.seed), t3_detail);
    }
    if (*catalog) {
      out.command = "catalog " + cat_case;
      std::vector<Certificate> cs;
      const bool all = cat_case == "all";
      if (all || cat_case == "sp12") cs.push_back(cii_sp12_rigid_pair(out.seed));
      if (all || cat_case == "so12") cs.push_back(diii_so12_rigid_pair(out.seed));
      if (all || cat_case == "sp8") cs.push_back(cii_sp8_c_value(samples, out.seed));
      if (all || cat_case == "aiii") {
        if (l_opt || eps_opt || r_opt) {
          cs.push_back(aiii_rigid_pair(l_opt.value_or(1), eps_opt.value_or(0), r_opt.value_or(0), out.seed));
        } else {
          for (auto [l, e, r] : std::vector<std::tuple<int, int, int>>{{0, 1, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {2, 0, 1}})
            cs.push_back(aiii_rigid_pair(l, e, r, out.seed));
        }
      }
      if (all || cat_case == "dichotomy")
        for (const auto& f : {Family::two(Tag::AIII, 2, 1), Family::two(Tag::AIII, 3, 1), Family::two(Tag::AIII, 4, 1),
                              Family::two(Tag::CII, 2, 1), Family::two(Tag::CII, 3, 1)})
          cs.push_back(subregular_dichotomy(f, samples, out.seed));
      if (all || cat_case == "table3")
        for (auto& c : table3_report(out.seed)) cs.push_back(std::move(c));
      if (!dump_dir.empty())
        for (const auto& c : cs) dump_elements(c, dump_dir);
      return finish_certificates(out, cs, !all);
    }
    if (*red) {
      out.command = "reducibility";
      return finish_certificates(out, {reducibility_certificate(red_f.family(), out.seed)}, true);
    }
    if (*sat) {
      out.command = "satake";
      Family f = sat_f.family();
      SatakeDiagram d = satake_diagram(f);
      json j{{"diagram", to_json(d)}, {"white", d.whites()}, {"arrows", d.arrows.size()},
             {"rank", d.whites() - static_cast<int>(d.arrows.size()) + d.center_rank}};
      std::ostringstream os;
      os << d.label << ": colors " << d.colors_str() << " (" << d.source << " data), " << d.arrows.size() << " arrows, rank "
         << j["rank"].get<int>() << "\n";
      bool ok = true;
      std::optional<SymmetricPair> pair;
      if (cross) pair = build_pair(f, out.seed);
      if (enumerate || cross) {
        json subs = json::array();
        auto all = enumerate_subdiagrams(d);
        os << all.size() << " sub-diagrams\n";
        for (const auto& s : all) {
          json comps = json::array();
          std::string ctext;
          for (const auto& c : classify_subdiagram(d, s)) {
            comps.push_back(to_json(c));
            ctext += " " + (c.compact ? "compact(" + c.shape + ")" : c.family->name());
          }
          json e{{"nodes", s.nodes}, {"levi_rank", levi_rank(d, s)}, {"dim_c_a", dim_c_a(d, s)}, {"components", comps}};
          os << "  " << subdiagram_str(s) << "  levi_rank " << levi_rank(d, s) << "  dim_c_a " << dim_c_a(d, s) << "  components:" << ctext;
          if (cross) {
            LeviCrossCheck c = satake_levi_cross_check(*pair, s, out.seed);
            e["cross_check"] = {{"computed_dim_c_p", c.computed_c_p}, {"computed_rk_sym", c.computed_rank}, {"ok", c.ok()}};
            os << "  computed (" << c.computed_c_p << ", " << c.computed_rank << ")" << (c.ok() ? "" : " MISMATCH");
            ok = ok && c.ok();
          }
          os << "\n";
          subs.push_back(e);
        }
        j["subdiagrams"] = subs;
      }
      out.emit(j, os.str());
      return ok ? Ok : Failed;
    }
  } catch (const NonCommutingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return NonCommuting;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return BadArgs;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return Failed;
  }
  return BadArgs;
}
