#include <gtest/gtest.h>

#include <cmath>

#include "cli.hpp"

using namespace tpt;
using namespace tpt::cli;

namespace {

// Suspect iff the printed value fails |f(E)| <= 1e-6 for its labelled state, or the row label is blank.
bool residual_suspect(const TablePreset& preset, const RefRow& row) {
  if (!row.C) return true;
  ModelParams p = preset.params;
  p.M = row.M;
  p.C = *row.C;
  p.A = row.A;
  const QuantumState s = make_state(row.n, row.kappa, p.limit);
  for (double e : row.E) {
    const Residual r = quantization_residual(p, s, e);
    if (!r.valid || std::fabs(r.value) > 1e-6) return true;
  }
  return false;
}

}  // namespace

TEST(Reference, AllTablesBundled) {
  const auto names = reference_table_names();
  ASSERT_EQ(names.size(), 8u);
  for (int i = 1; i <= 8; ++i) {
    const RefTable& t = reference_table("table" + std::to_string(i));
    EXPECT_FALSE(t.rows.empty());
    EXPECT_EQ(table_preset(t.name).name, t.name);
  }
  EXPECT_THROW(reference_table("table9"), std::invalid_argument);
  EXPECT_THROW(table_preset("fig1"), std::invalid_argument);
}

TEST(Reference, EntryCounts) {
  auto entries = [](const std::string& name) {
    int c = 0;
    for (const RefRow& r : reference_table(name).rows) c += static_cast<int>(r.E.size());
    return c;
  };
  EXPECT_EQ(entries("table1"), 96);
  EXPECT_EQ(entries("table2"), 48);
  EXPECT_EQ(entries("table3"), 168);
  EXPECT_EQ(entries("table4"), 84);
  EXPECT_EQ(entries("table5"), 200);
  EXPECT_EQ(entries("table6"), 200);
  EXPECT_EQ(entries("table7"), 100);
  EXPECT_EQ(entries("table8"), 100);
}

TEST(Reference, StaticTablesReproduceExactly) {
  for (const char* name : {"table1", "table2", "table3", "table4"}) {
    const CompareReport rep = compare_table(generate_table(table_preset(name)), reference_table(name));
    EXPECT_EQ(rep.matched, rep.entries) << name;
    EXPECT_EQ(rep.mismatched(), 0) << name;
    EXPECT_LE(rep.max_abs_delta, 5e-9) << name;
  }
}

TEST(Reference, EveryMismatchIsFlaggedSuspect) {
  for (const std::string& name : reference_table_names()) {
    const CompareReport rep = compare_table(generate_table(table_preset(name)), reference_table(name));
    EXPECT_EQ(rep.suspect_mismatched, rep.mismatched()) << name;
  }
}

TEST(Reference, SuspectFlagsFollowResidualCheck) {
  for (const std::string& name : reference_table_names()) {
    const TablePreset& preset = table_preset(name);
    for (const RefRow& row : reference_table(name).rows)
      EXPECT_EQ(row.suspect, residual_suspect(preset, row)) << name << " " << row.label << " M=" << row.M;
  }
}

TEST(Reference, SuspectCounts) {
  auto count = [](const std::string& name) {
    int c = 0;
    for (const RefRow& r : reference_table(name).rows) c += r.suspect ? 1 : 0;
    return c;
  };
  EXPECT_EQ(count("table1") + count("table2") + count("table3") + count("table4"), 0);
  EXPECT_EQ(count("table5"), 5);
  EXPECT_EQ(count("table6"), 100);
  EXPECT_EQ(count("table7"), 44);
  EXPECT_EQ(count("table8"), 50);
}

TEST(Reference, CompareCountsPlantedError) {
  RefTable t = reference_table("table2");
  t.rows[0].E[0] += 1e-6;
  const CompareReport rep = compare_table(generate_table(table_preset("table2")), t);
  EXPECT_EQ(rep.mismatched(), 1);
  EXPECT_EQ(rep.suspect_mismatched, 0);
  EXPECT_NEAR(rep.max_abs_delta, 1e-6, 1e-8);
}
