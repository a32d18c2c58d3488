#include <gtest/gtest.h>

#include "autz/corpus.hpp"
#include "autz/harness.hpp"

using namespace autz;

namespace {

Manifest manifest(std::vector<ManifestEntry> entries) {
  Manifest m;
  m.entries = std::move(entries);
  return m;
}

}  // namespace

TEST(Harness, QuaternionEight) {
  auto rep = run_verification(manifest({{"Q8", "builtin:quaternion:8", Decision::Minimal}}));
  ASSERT_EQ(rep.records.size(), 1U);
  const auto& r = rep.records[0];
  EXPECT_EQ(r.status, RecordStatus::Ok);
  ASSERT_TRUE(r.verdict);
  EXPECT_EQ(r.verdict->decision, Decision::Minimal);
  EXPECT_EQ(r.agreement, true);
  EXPECT_EQ(r.verdict->brute_force_agrees, true);
  EXPECT_EQ(rep.summary.mismatches, 0U);
  EXPECT_EQ(rep.summary.minimal, 1U);
  EXPECT_TRUE(rep.clean());
}

TEST(Harness, EmptyManifest) {
  auto rep = run_verification(manifest({}), {.jobs = 4});
  EXPECT_TRUE(rep.records.empty());
  const auto& s = rep.summary;
  EXPECT_EQ(s.minimal + s.not_minimal + s.undecided + s.mismatches + s.skipped + s.errors, 0U);
  EXPECT_TRUE(rep.clean());
  auto json = nlohmann::json::parse(format_report(rep, ReportFormat::Json));
  EXPECT_TRUE(json["records"].empty());
  EXPECT_EQ(json["summary"]["skipped"], 0);
}

TEST(Harness, OverCapIsSkipped) {
  VerifyOptions opts;
  opts.order_cap = 100;
  auto rep = run_verification(manifest({{"D128", "builtin:dihedral:128", std::nullopt}}), opts);
  EXPECT_EQ(rep.records[0].status, RecordStatus::Skipped);
  EXPECT_EQ(rep.summary.skipped, 1U);
  EXPECT_FALSE(rep.records[0].agreement);
  EXPECT_TRUE(rep.clean());
}

TEST(Harness, EnumerationCapSkipsBruteForceOnly) {
  VerifyOptions opts;
  opts.enumeration_cap = 8;
  auto rep = run_verification(manifest({{"ES32+", "builtin:extraspecial:2:32:plus", Decision::Minimal}}), opts);
  const auto& r = rep.records[0];
  EXPECT_EQ(r.status, RecordStatus::Skipped);
  EXPECT_FALSE(r.central);
  ASSERT_TRUE(r.verdict);
  EXPECT_EQ(r.verdict->decision, Decision::Minimal);
  EXPECT_FALSE(r.agreement);
  EXPECT_TRUE(r.expectation_met);
  auto json = record_json(r, false);
  EXPECT_EQ(json["centralAutomorphisms"], "skipped");
}

TEST(Harness, UndecidedHasNoAgreement) {
  auto rep = run_verification(manifest({{"U", "builtin:elementary:2:2*unitriangular4:2", Decision::Undecided}}));
  const auto& r = rep.records[0];
  ASSERT_TRUE(r.verdict);
  EXPECT_EQ(r.verdict->decision, Decision::Undecided);
  EXPECT_FALSE(r.agreement);
  EXPECT_TRUE(r.central);
  EXPECT_EQ(rep.summary.undecided, 1U);
  EXPECT_TRUE(rep.clean());
}

TEST(Harness, ExpectationFailureMakesReportUnclean) {
  auto rep = run_verification(manifest({{"Q8", "builtin:quaternion:8", Decision::NotMinimal}}));
  EXPECT_EQ(rep.summary.expectation_failures, 1U);
  EXPECT_EQ(rep.summary.mismatches, 0U);
  EXPECT_FALSE(rep.clean());
}

TEST(Harness, PerEntryErrorsAreRecorded) {
  auto rep = run_verification(manifest({{"bad", "builtin:nosuch:1", std::nullopt},
                                        {"missing", "/nonexistent/group.json", std::nullopt},
                                        {"C8", "builtin:cyclic:8", std::nullopt},
                                        {"Q8", "builtin:quaternion:8", std::nullopt}}));
  ASSERT_EQ(rep.records.size(), 4U);
  EXPECT_EQ(rep.records[0].status, RecordStatus::Error);
  EXPECT_NE(rep.records[0].message.find("UnknownBuiltin"), std::string::npos);
  EXPECT_EQ(rep.records[1].status, RecordStatus::Error);
  // abelian input: structure and brute force are reported, no verdict
  EXPECT_EQ(rep.records[2].status, RecordStatus::Ok);
  EXPECT_FALSE(rep.records[2].verdict);
  EXPECT_TRUE(rep.records[2].central);
  EXPECT_EQ(rep.records[3].verdict->decision, Decision::Minimal);
  EXPECT_EQ(rep.summary.errors, 2U);
  EXPECT_TRUE(rep.clean());
}

TEST(Harness, ReportsIdenticalAcrossJobCounts) {
  Manifest m = default_corpus();
  m.entries.resize(30);
  auto one = run_verification(m, {.jobs = 1});
  auto three = run_verification(m, {.jobs = 3});
  for (auto fmt : {ReportFormat::Json, ReportFormat::Csv, ReportFormat::Table})
    EXPECT_EQ(format_report(one, fmt), format_report(three, fmt));
  for (std::size_t i = 0; i < m.entries.size(); ++i) EXPECT_EQ(one.records[i].name, m.entries[i].name);
}

TEST(Harness, FormatsCarryTheSameRecords) {
  auto rep = run_verification(manifest({{"Q8", "builtin:quaternion:8", std::nullopt},
                                        {"D16", "builtin:dihedral:16", std::nullopt}}));
  const std::string csv = format_report(rep, ReportFormat::Csv);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
  EXPECT_NE(csv.find("\"D16\",ok,16,2,4,3,1"), std::string::npos) << csv;
  const std::string table = format_report(rep, ReportFormat::Table);
  EXPECT_NE(table.find("MaximalClass"), std::string::npos);
  auto json = nlohmann::json::parse(format_report(rep, ReportFormat::Json));
  EXPECT_EQ(json["records"][1]["verdict"]["rule"], "MaximalClass");
  EXPECT_EQ(json["records"][1]["centralAutomorphisms"]["autCount"], 4);
  EXPECT_FALSE(json["records"][0].contains("seconds"));
  auto timed = nlohmann::json::parse(format_report(rep, ReportFormat::Json, true));
  EXPECT_TRUE(timed["records"][0].contains("seconds"));
}

TEST(Harness, CsvEscapesQuotesInNames) {
  auto rep = run_verification(manifest({{"say \"Q8\"", "builtin:quaternion:8", std::nullopt}}));
  EXPECT_NE(format_report(rep, ReportFormat::Csv).find("\n\"say \"\"Q8\"\"\",ok,8,"), std::string::npos);
}
