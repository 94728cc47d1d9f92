#include <gtest/gtest.h>

#include "symc/symc.hpp"

using namespace symc;

namespace {
std::string data(const std::string& f) { return std::string(SYMC_TEST_DATA) + "/" + f; }
}  // namespace

TEST(Io, ElementRoundTrip) {
  for (const Matrix& m : {catalog_data::so12_y(), catalog_data::sp12_y() * Scalar::frac(-2, 7)}) {
    json j = element_file(m);
    EXPECT_EQ(j["field"], "Q");
    EXPECT_EQ(parse_element(json::parse(j.dump())), m);
  }
  Matrix c = catalog_data::so12_y() * Scalar(mpq_class(1), mpq_class(-3, 2));
  ASSERT_FALSE(c.is_real());
  json j = element_file(c);
  EXPECT_EQ(j["field"], "Q(i)");
  EXPECT_EQ(parse_element(json::parse(j.dump())), c);
}

TEST(Io, ParseAcceptsIntegersAndStrings) {
  Matrix m = parse_element(json::parse(R"({"n": 2, "entries": [[1, "1/2"], ["-3", 0]]})"));
  EXPECT_EQ(m(0, 1), Scalar::frac(1, 2));
  EXPECT_EQ(m(1, 0), Scalar(-3));
  Matrix c = parse_element(json::parse(R"j({"n": 1, "field": "Q(i)", "entries": [["2-i"]]})j"));
  EXPECT_EQ(c(0, 0), Scalar(mpq_class(2), mpq_class(-1)));
}

TEST(Io, ParseErrors) {
  const char* bad[] = {
      R"({"entries": [[1]]})",
      R"({"n": 2, "entries": [[1, 2]]})",
      R"({"n": 2, "entries": [[1, 2], [3]]})",
      R"({"n": 1, "entries": [[1.5]]})",
      R"({"n": 1, "field": "R", "entries": [[1]]})",
      R"({"n": 1, "entries": [["i"]]})",
      R"({"n": 0, "entries": []})",
      R"([1, 2])",
  };
  for (const char* s : bad) EXPECT_THROW(parse_element(json::parse(s)), ArgumentError) << s;
}

TEST(Io, LoadFromFiles) {
  Matrix h = load_element(data("ai2_h.json"));
  EXPECT_EQ(h(0, 0), Scalar(1));
  EXPECT_EQ(h(1, 1), Scalar(-1));
  EXPECT_TRUE(load_element(data("ai2_zero.json")).is_zero());
  EXPECT_THROW(load_element(data("malformed.json")), ArgumentError);
  EXPECT_THROW(load_element(data("does_not_exist.json")), ArgumentError);
}

TEST(Io, ReportAndCertificateFields) {
  SymmetricPair sp12 = build_pair(Family::two(Tag::CII, 3, 3));
  json r = to_json(classify_pair(sp12, catalog_data::sp12_z(), catalog_data::sp12_y()));
  for (const char* k : {"label", "rk_sym", "dim_m", "dim_k_xy", "irregularity", "classification", "density_check", "moment_kernel", "reduction"})
    EXPECT_TRUE(r.contains(k)) << k;
  EXPECT_EQ(r["classification"], "rigid");
  EXPECT_EQ(r["irregularity"], -3);
  EXPECT_EQ(r["moment_kernel"]["direct"], 36);

  json c = to_json(cii_sp12_rigid_pair());
  EXPECT_EQ(c["kind"], "rigid_pair");
  EXPECT_EQ(c["verified"], true);
  EXPECT_EQ(c["family"]["name"], "CII(3,3)");
  EXPECT_TRUE(c["elements"].contains("z"));
  EXPECT_TRUE(c["transcript"].is_array());
  EXPECT_FALSE(c["transcript"].empty());

  json info = pair_info(sp12);
  EXPECT_EQ(info["dim_g"], 78);
  EXPECT_EQ(info["satake"]["colors"], "bwbwbw");
  EXPECT_EQ(info["satake"]["rank"], 3);

  json d = to_json(satake_diagram(Family::two(Tag::AIII, 2, 5)));
  EXPECT_EQ(d["nodes"].size(), 6u);
  EXPECT_EQ(d["arrows"].size(), 2u);
  EXPECT_EQ(d["source"], "literature");
  json b = to_json(satake_diagram(Family::two(Tag::BDI, 2, 5)));
  EXPECT_EQ(b["edges"][1]["longer"], 2);
}
