#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "tpt/aim.hpp"
#include "tpt/wavefn.hpp"

namespace tpt::cli {

namespace {

struct Options {
  std::string limit = "pspin";
  double M = 1.0, C = 0.0, V1 = 0.0, V2 = 0.0, alpha = 0.01, A = 0.0;
  std::vector<int> n{0};
  std::vector<int> kappa{-1};
  double emin = 0.0, emax = 0.0;
  int grid = 4000;
  std::string preset;
  bool compare = false;
  std::string output;
  std::string convention;
  double E = 0.0;
  int samples = 0;
  double rmin = 0.0, rmax = 0.0;
  int depth = 0;
};

struct Given {
  CLI::Option *limit, *M, *C, *V1, *V2, *alpha, *A, *n, *kappa, *emin, *emax, *grid, *preset, *convention, *E,
      *samples, *rmin, *rmax, *depth;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool given(const CLI::Option* o) { return o->count() > 0; }

std::string echo(const std::string& cmd, const ModelParams& p) {
  std::ostringstream s;
  s << "# tpt " << cmd << " limit=" << to_string(p.limit) << " M=" << format_number(p.M)
    << " C=" << format_number(p.C) << " V1=" << format_number(p.V1) << " V2=" << format_number(p.V2)
    << " alpha=" << format_number(p.alpha) << " A=" << format_number(p.A);
  return s.str();
}

// Base parameters from a table preset, then explicit flags on top.
ModelParams resolve_params(const Options& o, const Given& g) {
  ModelParams p;
  bool from_preset = false;
  if (given(g.preset) && o.preset.rfind("table", 0) == 0) {
    p = table_preset(o.preset).params;
    from_preset = true;
  }
  if (!from_preset || given(g.limit)) p.limit = parse_limit(o.limit);
  if (!from_preset || given(g.M)) p.M = o.M;
  if (!from_preset || given(g.C)) p.C = o.C;
  if (!from_preset || given(g.V1)) p.V1 = o.V1;
  if (!from_preset || given(g.V2)) p.V2 = o.V2;
  if (!from_preset || given(g.alpha)) p.alpha = o.alpha;
  if (!from_preset || given(g.A)) p.A = o.A;
  p.validate();
  return p;
}

Convention resolve_convention(const Options& o, const Given& g, Convention fallback) {
  return given(g.convention) ? parse_convention(o.convention) : fallback;
}

Window resolve_window(const Options& o, const Given& g, const ModelParams& p) {
  Window w = default_window(p);
  if (given(g.emin)) w.lo = o.emin;
  if (given(g.emax)) w.hi = o.emax;
  if (!(w.lo < w.hi)) throw ConfigError("emin must be below emax");
  return w;
}

void check_preset_known(const Options& o, const Given& g, const std::vector<std::string>& allowed) {
  if (!given(g.preset)) return;
  if (std::find(allowed.begin(), allowed.end(), o.preset) == allowed.end())
    throw ConfigError("unknown preset '" + o.preset + "' for this command");
}

int cmd_solve(const Options& o, const Given& g, std::ostream& out, std::ostream& err) {
  check_preset_known(o, g, table_preset_names());
  const ModelParams p = resolve_params(o, g);
  const Convention conv = resolve_convention(o, g, Convention::Tabulated);
  const Window w = resolve_window(o, g, p);
  if (o.grid < 2) throw ConfigError("grid must be at least 2");

  out << echo("solve", p) << " convention=" << to_string(conv) << " emin=" << format_number(w.lo)
      << " emax=" << format_number(w.hi) << " grid=" << o.grid << "\n";
  out << "label,n,kappa,E,residual,valid\n";
  bool all_found = true;
  for (int kappa : o.kappa) {
    for (int n : o.n) {
      const QuantumState s = make_state(n, kappa, p.limit);
      std::vector<EnergyRoot> roots;
      try {
        roots = solve_energies(p, s, w, o.grid, conv).roots;
      } catch (const WindowError& e) {
        err << "state " << s.label << ": " << e.what() << "\n";
      }
      if (roots.empty()) {
        all_found = false;
        err << "state " << s.label << " (n=" << n << ", kappa=" << kappa << "): no root in window\n";
      }
      for (const EnergyRoot& r : roots)
        out << s.label << ',' << n << ',' << kappa << ',' << format_number(r.E) << ',' << format_number(r.residual)
            << ',' << (r.valid ? 1 : 0) << "\n";
    }
  }
  return all_found ? kOk : kNoRoot;
}

std::string sweep_name(Sweep s) { return s == Sweep::M ? "M" : s == Sweep::C ? "C" : "none"; }

int cmd_table(const Options& o, const Given& g, std::ostream& out, std::ostream& err) {
  if (!given(g.preset)) throw ConfigError("table needs --preset (table1..table8)");
  check_preset_known(o, g, table_preset_names());
  TablePreset preset = table_preset(o.preset);
  const Convention conv = resolve_convention(o, g, Convention::Tabulated);
  if (given(g.V1)) preset.params.V1 = o.V1;
  if (given(g.V2)) preset.params.V2 = o.V2;
  if (given(g.alpha)) preset.params.alpha = o.alpha;
  if (given(g.M) && preset.sweep != Sweep::M) preset.params.M = o.M;
  if (given(g.C) && preset.sweep != Sweep::C) preset.params.C = o.C;
  if (given(g.A)) preset.A_values = {o.A};
  preset.params.validate();
  if (o.grid < 2) throw ConfigError("grid must be at least 2");

  const std::vector<TableRow> rows = generate_table(preset, conv, o.grid);
  std::size_t ncols = 1;
  for (const TableRow& r : rows) ncols = std::max(ncols, r.roots.size());

  out << echo("table", preset.params) << " preset=" << preset.name << " sweep=" << sweep_name(preset.sweep)
      << " convention=" << to_string(conv) << " grid=" << o.grid << "\n";
  out << "label,n,kappa,A,M,C";
  for (std::size_t i = 1; i <= ncols; ++i) out << ",E" << i;
  out << "\n";
  for (const TableRow& r : rows) {
    out << r.state.label << ',' << r.state.n << ',' << r.state.kappa << ',' << format_number(r.A) << ','
        << format_number(r.M) << ',' << format_number(r.C);
    for (std::size_t i = 0; i < ncols; ++i) out << ',' << (i < r.roots.size() ? format_number(r.roots[i]) : "");
    out << "\n";
  }

  if (!o.compare) return kOk;
  const CompareReport rep = compare_table(rows, reference_table(preset.name));
  err << "compare " << preset.name << ": entries=" << rep.entries << " matched=" << rep.matched
      << " mismatched=" << rep.mismatched() << " (suspect " << rep.suspect_mismatched << ")"
      << " max_abs_delta=" << format_number(rep.max_abs_delta) << "\n";
  for (const Mismatch& m : rep.mismatches) {
    err << "  mismatch " << m.label << " n=" << m.n << " kappa=" << m.kappa << " A=" << format_number(m.A)
        << " M=" << format_number(m.M) << " C=" << (m.C ? format_number(*m.C) : std::string("(blank)"))
        << " printed=" << format_number(m.printed)
        << " nearest=" << (m.nearest ? format_number(*m.nearest) : std::string("none"))
        << (m.suspect ? " suspect" : "") << "\n";
  }
  return rep.mismatched() == 0 ? kOk : kMismatch;
}

int cmd_wavefn(const Options& o, const Given& g, std::ostream& out, std::ostream& err) {
  check_preset_known(o, g, table_preset_names());
  const ModelParams p = resolve_params(o, g);
  const Convention conv = resolve_convention(o, g, Convention::Analytic);
  const QuantumState s = make_state(o.n.front(), o.kappa.front(), p.limit);
  const int samples = given(g.samples) ? o.samples : 2000;
  if (samples < 2) throw ConfigError("samples must be at least 2");

  double E = o.E;
  if (!given(g.E)) {
    const Window w = resolve_window(o, g, p);
    std::vector<EnergyRoot> roots;
    try {
      roots = solve_energies(p, s, w, o.grid, conv).roots;
    } catch (const WindowError&) {
    }
    bool picked = false;
    for (const EnergyRoot& r : roots) {
      try {
        exponents(p, r.E, s.kappa);
      } catch (const std::domain_error&) {
        continue;
      }
      E = r.E;
      picked = true;
      break;
    }
    if (!picked) {
      err << "state " << s.label << ": no root with a bound wavefunction in the window\n";
      return kNoRoot;
    }
  }

  const double L = std::numbers::pi / (2.0 * p.alpha);
  std::vector<double> grid(samples);
  for (int i = 0; i < samples; ++i) grid[i] = (i + 0.5) * L / samples;
  SpinorSolution sol;
  try {
    sol = sample_radial(p, s, E, grid);
  } catch (const std::domain_error& e) {
    err << "state " << s.label << ": " << e.what() << "\n";
    return kNoRoot;
  }
  const Exponents& e = sol.exponents;
  out << echo("wavefn", p) << " convention=" << to_string(conv) << " state=" << s.label << " n=" << s.n
      << " kappa=" << s.kappa << " E=" << format_number(E) << " p=" << format_number(e.p)
      << " q=" << format_number(e.q) << " u=" << format_number(e.u) << " v=" << format_number(e.v)
      << " norm=" << format_number(sol.norm) << " norm_method=" << to_string(sol.norm_method)
      << " closed_form=" << to_string(sol.closed_form_status) << "\n";
  out << "r,z,F,G,dominant_sq\n";
  for (const SpinorSample& x : sol.samples) {
    const double d = sol.dominant(x);
    out << format_number(x.r) << ',' << format_number(x.z) << ',' << format_number(x.F) << ','
        << format_number(x.G) << ',' << format_number(d * d) << "\n";
  }
  return kOk;
}

int cmd_potential(const Options& o, const Given& g, std::ostream& out, std::ostream&) {
  check_preset_known(o, g, {"fig1", "fig2"});
  ModelParams p;
  p.V1 = 5.0;
  p.V2 = 3.0;
  p.alpha = 0.02;
  if (given(g.preset) && o.preset == "fig2") p.alpha = 0.03;
  if (!given(g.preset)) {
    p.V1 = o.V1;
    p.V2 = o.V2;
    p.alpha = o.alpha;
  }
  if (given(g.V1)) p.V1 = o.V1;
  if (given(g.V2)) p.V2 = o.V2;
  if (given(g.alpha)) p.alpha = o.alpha;
  p.validate();

  const double L = std::numbers::pi / (2.0 * p.alpha);
  const double rmin = given(g.rmin) ? o.rmin : 0.005 * L;
  const double rmax = given(g.rmax) ? o.rmax : 0.995 * L;
  const int samples = given(g.samples) ? o.samples : 400;
  if (!(rmin < rmax)) throw ConfigError("rmin must be below rmax");
  if (samples < 2) throw ConfigError("samples must be at least 2");
  // Poles at alpha r = k pi/2.
  const double half_pi = std::numbers::pi / 2.0;
  for (double k = std::floor(p.alpha * rmin / half_pi); k <= std::ceil(p.alpha * rmax / half_pi); k += 1.0) {
    const double pole = k * half_pi;
    if (pole >= p.alpha * rmin - 1e-9 && pole <= p.alpha * rmax + 1e-9)
      throw ConfigError("r range touches a pole of the potential at r=" + format_number(pole / p.alpha));
  }

  out << "# tpt potential V1=" << format_number(p.V1) << " V2=" << format_number(p.V2)
      << " alpha=" << format_number(p.alpha) << " rmin=" << format_number(rmin) << " rmax=" << format_number(rmax)
      << " samples=" << samples << "\n";
  out << "r,alpha_r,V\n";
  for (int i = 0; i < samples; ++i) {
    const double r = rmin + (rmax - rmin) * i / (samples - 1);
    out << format_number(r) << ',' << format_number(p.alpha * r) << ',' << format_number(potential_tpt(r, p)) << "\n";
  }
  return kOk;
}

int cmd_aim_check(const Options& o, const Given& g, std::ostream& out, std::ostream& err) {
  check_preset_known(o, g, table_preset_names());
  const ModelParams p = resolve_params(o, g);
  const Window w = resolve_window(o, g, p);
  const int kappa = o.kappa.front();
  std::vector<int> ns = given(g.n) ? o.n : std::vector<int>{0, 1, 2, 3};
  if (given(g.depth) && o.depth < 1) throw ConfigError("depth must be positive");

  out << echo("aim-check", p) << " kappa=" << kappa << " x0=0.5\n";
  out << "n,k,E_closed,E_aim,abs_delta,converged\n";
  int worst = kOk;
  const double tol = 1e-13;
  for (int n : ns) {
    const QuantumState s = make_state(n, kappa, p.limit);
    const std::vector<int> depths = given(g.depth) ? std::vector<int>{o.depth} : std::vector<int>{n + 2, n + 3};
    const std::vector<AimCheckEntry> entries = aim_check_state(p, s, depths, w, o.grid, tol);
    if (entries.empty()) {
      err << "n=" << n << ": closed form has no root in the window\n";
      worst = kNoRoot;
      continue;
    }
    for (const AimCheckEntry& e : entries) {
      if (!e.found) {
        out << n << ',' << e.k << ',' << format_number(e.E_closed) << ",,,0\n";
        err << "n=" << n << " k=" << e.k << ": AIM found no root near " << format_number(e.E_closed) << "\n";
        worst = kNoRoot;
        continue;
      }
      const double d = std::fabs(e.E_aim - e.E_closed);
      out << n << ',' << e.k << ',' << format_number(e.E_closed) << ',' << format_number(e.E_aim) << ','
          << format_number(d) << ',' << (e.converged ? 1 : 0) << "\n";
      if (!e.converged) {
        err << "n=" << n << " k=" << e.k << ": AIM root not converged between depths " << e.k << " and " << e.k + 1
            << "\n";
        worst = kNoRoot;
      } else if (d > 1e-8 && worst == kOk) {
        worst = kMismatch;
      }
    }
  }
  return worst;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Dirac bound states of the trigonometric Poschl-Teller potential with a tensor term", "tpt"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key=value file; keys are the long flag names");

  Given g{};
  g.limit = app.add_option("--limit", o.limit, "Symmetry limit: spin or pspin");
  g.M = app.add_option("--M", o.M, "Mass (fm^-1)");
  g.C = app.add_option("--C", o.C, "C_s (spin) or C_ps (pspin) (fm^-1)");
  g.V1 = app.add_option("--V1", o.V1, "Potential strength V1 (fm^-1)");
  g.V2 = app.add_option("--V2", o.V2, "Potential strength V2 (fm^-1)");
  g.alpha = app.add_option("--alpha", o.alpha, "Range parameter alpha (fm^-1)");
  g.A = app.add_option("--A", o.A, "Tensor strength A");
  g.n = app.add_option("--n", o.n, "Radial quantum number(s), comma separated")->delimiter(',');
  g.kappa = app.add_option("--kappa", o.kappa, "Spin-orbit quantum number(s), comma separated")->delimiter(',');
  g.emin = app.add_option("--emin", o.emin, "Lower end of the energy scan window");
  g.emax = app.add_option("--emax", o.emax, "Upper end of the energy scan window");
  g.grid = app.add_option("--grid", o.grid, "Energy scan grid points")->capture_default_str();
  g.preset = app.add_option("--preset", o.preset, "table1..table8, or fig1/fig2 for potential");
  app.add_flag("--compare", o.compare, "Diff a generated table against the bundled reference data");
  app.add_option("--output", o.output, "Write CSV here instead of standard output");
  g.convention = app.add_option("--convention", o.convention, "Quantization condition: tabulated or analytic");
  g.E = app.add_option("--E", o.E, "Energy for wavefn (solved when omitted)");
  g.samples = app.add_option("--samples", o.samples, "Number of r samples for wavefn and potential");
  g.rmin = app.add_option("--rmin", o.rmin, "Lower r for potential");
  g.rmax = app.add_option("--rmax", o.rmax, "Upper r for potential");
  g.depth = app.add_option("--depth", o.depth, "AIM depth for aim-check (default n+2 and n+3)");

  auto* solve = app.add_subcommand("solve", "Energy eigenvalues of the requested states")->fallthrough();
  auto* table = app.add_subcommand("table", "Regenerate a reference eigenvalue table")->fallthrough();
  auto* wavefn = app.add_subcommand("wavefn", "Sample the normalized spinor components")->fallthrough();
  auto* potential = app.add_subcommand("potential", "Sample the potential V(r)")->fallthrough();
  auto* aimcheck = app.add_subcommand("aim-check", "Compare AIM roots with the closed-form spectrum")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.output.empty()) {
    file.open(o.output, std::ios::binary);
    if (!file) {
      err << "cannot open " << o.output << " for writing\n";
      return kConfigError;
    }
    sink = &file;
  }

  try {
    if (*solve) return cmd_solve(o, g, *sink, err);
    if (*table) return cmd_table(o, g, *sink, err);
    if (*wavefn) return cmd_wavefn(o, g, *sink, err);
    if (*potential) return cmd_potential(o, g, *sink, err);
    if (*aimcheck) return cmd_aim_check(o, g, *sink, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const aim::OrderExhausted& e) {
    err << "error: " << e.what() << "\n";
    return kNoRoot;
  }
  return kConfigError;
}

}  // namespace tpt::cli
