#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "cli.hpp"

namespace tpt::cli {

namespace detail {
extern const std::pair<std::string_view, std::string_view> kReferenceCsv[];
extern const int kReferenceCsvCount;
}  // namespace detail

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

double to_double(const std::string& s) {
  std::size_t pos = 0;
  const double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad number '" + s + "'");
  return v;
}

RefTable parse_table(std::string_view name, std::string_view text) {
  RefTable t;
  t.name = std::string(name);
  std::istringstream in{std::string(text)};
  std::string line;
  std::getline(in, line);
  if (line.rfind("# ", 0) != 0) throw std::runtime_error("reference table without header: " + t.name);
  for (const std::string& tok : split(line.substr(2), ' ')) {
    const auto eq = tok.find('=');
    if (eq != std::string::npos) t.meta[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  std::getline(in, line);
  const std::vector<std::string> cols = split(line, ',');
  auto col = [&](const std::string& c) {
    const auto it = std::find(cols.begin(), cols.end(), c);
    if (it == cols.end()) throw std::runtime_error("reference table " + t.name + " lacks column " + c);
    return static_cast<std::size_t>(it - cols.begin());
  };
  const std::size_t iL = col("label"), iN = col("n"), iK = col("kappa"), iA = col("A"), iM = col("M"),
                    iC = col("C"), iE1 = col("E1"), iE2 = col("E2"), iS = col("suspect");
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const std::vector<std::string> f = split(line, ',');
    if (f.size() != cols.size()) throw std::runtime_error("ragged row in reference table " + t.name);
    RefRow r;
    r.label = f[iL];
    r.n = std::stoi(f[iN]);
    r.kappa = std::stoi(f[iK]);
    r.A = to_double(f[iA]);
    r.M = to_double(f[iM]);
    if (!f[iC].empty()) r.C = to_double(f[iC]);
    for (std::size_t i : {iE1, iE2})
      if (!f[i].empty()) r.E.push_back(to_double(f[i]));
    r.suspect = f[iS] == "1";
    t.rows.push_back(std::move(r));
  }
  return t;
}

const std::vector<RefTable>& all_tables() {
  static const std::vector<RefTable> tables = [] {
    std::vector<RefTable> v;
    for (int i = 0; i < detail::kReferenceCsvCount; ++i)
      v.push_back(parse_table(detail::kReferenceCsv[i].first, detail::kReferenceCsv[i].second));
    return v;
  }();
  return tables;
}

std::vector<double> steps(double first, double last, double step) {
  std::vector<double> v;
  const int count = static_cast<int>(std::lround((last - first) / step));
  for (int i = 0; i <= count; ++i) v.push_back(std::round((first + i * step) * 1e6) / 1e6);
  return v;
}

std::vector<TablePreset> build_presets() {
  ModelParams pspin;
  pspin.limit = Limit::Pseudospin;
  pspin.M = 1.0;
  pspin.V1 = -0.002;
  pspin.V2 = 0.003;
  pspin.alpha = 0.01;
  pspin.C = -5.0;

  ModelParams spin;
  spin.limit = Limit::Spin;
  spin.M = 1.0;
  spin.V1 = 0.002;
  spin.V2 = -0.003;
  spin.alpha = 0.01;
  spin.C = 5.0;

  const std::vector<std::pair<int, int>> pspin_states = {{1, -1}, {1, -2}, {1, -3}, {1, -4}, {2, -1}, {2, -2},
                                                         {2, -3}, {2, -4}, {1, 2},  {1, 3},  {1, 4},  {1, 5},
                                                         {2, 2},  {2, 3},  {2, 4},  {2, 5}};
  std::vector<std::pair<int, int>> spin_states;
  for (int kappa : {-1, -2, -3, -4, 1, 2, 3})
    for (int n = 0; n <= 3; ++n) spin_states.emplace_back(n, kappa);
  const std::vector<double> a_cols = {0.0, 0.5, 1.0};

  std::vector<TablePreset> v;
  v.push_back({"table1", pspin, pspin_states, a_cols, Sweep::None, {}});
  ModelParams p2 = pspin;
  p2.C = 0.0;
  v.push_back({"table2", p2, pspin_states, a_cols, Sweep::None, {}});
  v.push_back({"table3", spin, spin_states, a_cols, Sweep::None, {}});
  ModelParams s4 = spin;
  s4.C = 0.0;
  v.push_back({"table4", s4, spin_states, a_cols, Sweep::None, {}});

  ModelParams p5 = pspin;
  p5.A = 1.0;
  const std::vector<std::pair<int, int>> sweep_pspin = {{1, -1}, {1, -2}, {1, -3}, {1, -4}, {2, -2}};
  v.push_back({"table5", p5, sweep_pspin, {1.0}, Sweep::M, steps(0.1, 2.0, 0.1)});
  ModelParams s6 = spin;
  s6.A = 1.0;
  v.push_back({"table6", s6, {{1, -1}, {1, -2}, {0, 1}, {2, -4}, {1, 3}}, {1.0}, Sweep::M, steps(0.1, 2.0, 0.1)});
  // Row values as printed in the C_ps column.
  v.push_back({"table7", p5, sweep_pspin, {1.0}, Sweep::C, steps(-40.0, -5.0, 5.0)});
  ModelParams s8 = spin;
  s8.A = 1.0;
  v.push_back({"table8", s8, {{0, -1}, {0, -2}, {2, -3}, {0, -4}, {3, 1}}, {1.0}, Sweep::C, steps(5.0, 50.0, 5.0)});
  return v;
}

const std::vector<TablePreset>& all_presets() {
  static const std::vector<TablePreset> presets = build_presets();
  return presets;
}

bool same(double a, double b) { return std::fabs(a - b) <= 1e-9 * std::max(1.0, std::fabs(a)); }

}  // namespace

std::vector<std::string> reference_table_names() {
  std::vector<std::string> v;
  for (const RefTable& t : all_tables()) v.push_back(t.name);
  return v;
}

const RefTable& reference_table(const std::string& name) {
  for (const RefTable& t : all_tables())
    if (t.name == name) return t;
  throw std::invalid_argument("no reference data for '" + name + "'");
}

std::vector<std::string> table_preset_names() {
  std::vector<std::string> v;
  for (const TablePreset& p : all_presets()) v.push_back(p.name);
  return v;
}

const TablePreset& table_preset(const std::string& name) {
  for (const TablePreset& p : all_presets())
    if (p.name == name) return p;
  throw std::invalid_argument("unknown table preset '" + name + "'");
}

std::vector<TableRow> generate_table(const TablePreset& preset, Convention convention, int grid) {
  std::vector<double> sweep = preset.sweep_values;
  if (preset.sweep == Sweep::None) sweep = {0.0};
  std::vector<TableRow> rows;
  for (double s : sweep) {
    ModelParams p = preset.params;
    if (preset.sweep == Sweep::M) p.M = s;
    if (preset.sweep == Sweep::C) p.C = s;
    for (const auto& [n, kappa] : preset.states) {
      for (double A : preset.A_values) {
        p.A = A;
        TableRow row;
        row.state = make_state(n, kappa, p.limit);
        row.A = A;
        row.M = p.M;
        row.C = p.C;
        try {
          for (const EnergyRoot& r : solve_energies(p, row.state, default_window(p), grid, convention).roots)
            row.roots.push_back(r.E);
        } catch (const WindowError&) {
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

CompareReport compare_table(const std::vector<TableRow>& generated, const RefTable& ref, double tol) {
  CompareReport rep;
  for (const RefRow& r : ref.rows) {
    const TableRow* match = nullptr;
    if (r.C) {
      for (const TableRow& g : generated)
        if (g.state.n == r.n && g.state.kappa == r.kappa && same(g.A, r.A) && same(g.M, r.M) && same(g.C, *r.C)) {
          match = &g;
          break;
        }
    }
    for (double e : r.E) {
      ++rep.entries;
      std::optional<double> nearest;
      if (match)
        for (double x : match->roots)
          if (!nearest || std::fabs(x - e) < std::fabs(*nearest - e)) nearest = x;
      const double delta = nearest ? std::fabs(*nearest - e) : std::numeric_limits<double>::infinity();
      if (match) rep.max_abs_delta = std::max(rep.max_abs_delta, delta);
      if (delta <= tol) {
        ++rep.matched;
        continue;
      }
      rep.mismatches.push_back({r.label, r.n, r.kappa, r.A, r.M, r.C, e, nearest, r.suspect});
      if (r.suspect) ++rep.suspect_mismatched;
    }
  }
  return rep;
}

}  // namespace tpt::cli
