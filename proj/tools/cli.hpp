#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tpt/model.hpp"

namespace tpt::cli {

enum ExitCode { kOk = 0, kConfigError = 1, kNoRoot = 2, kMismatch = 3 };

// 12 significant digits, C locale.
std::string format_number(double x);

struct RefRow {
  std::string label;
  int n = 0;
  int kappa = -1;
  double A = 0.0;
  double M = 1.0;
  std::optional<double> C;  // empty where the printed row label is blank
  std::vector<double> E;
  bool suspect = false;
};

struct RefTable {
  std::string name;
  std::map<std::string, std::string> meta;
  std::vector<RefRow> rows;
};

std::vector<std::string> reference_table_names();
const RefTable& reference_table(const std::string& name);  // throws std::invalid_argument

enum class Sweep { None, M, C };

struct TablePreset {
  std::string name;
  ModelParams params;
  std::vector<std::pair<int, int>> states;  // (n, kappa)
  std::vector<double> A_values;
  Sweep sweep = Sweep::None;
  std::vector<double> sweep_values;
};

std::vector<std::string> table_preset_names();
const TablePreset& table_preset(const std::string& name);  // throws std::invalid_argument

struct TableRow {
  QuantumState state;
  double A = 0.0;
  double M = 0.0;
  double C = 0.0;
  std::vector<double> roots;
};

std::vector<TableRow> generate_table(const TablePreset& preset, Convention convention = Convention::Tabulated,
                                     int grid = 4000);

struct Mismatch {
  std::string label;
  int n = 0;
  int kappa = 0;
  double A = 0.0;
  double M = 0.0;
  std::optional<double> C;
  double printed = 0.0;
  std::optional<double> nearest;
  bool suspect = false;
};

struct CompareReport {
  int entries = 0;
  int matched = 0;
  int suspect_mismatched = 0;
  double max_abs_delta = 0.0;  // over entries with a generated row
  std::vector<Mismatch> mismatches;

  int mismatched() const { return static_cast<int>(mismatches.size()); }
};

CompareReport compare_table(const std::vector<TableRow>& generated, const RefTable& ref, double tol = 5e-9);

// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tpt::cli
