#include "cpsplit/cli.hpp"

#include "cpsplit/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

namespace cpsplit {

namespace {

std::string sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool is_case_1d(const std::string& name) {
  for (const CaseSpec& c : case_registry())
    if (c.name == name) return true;
  return false;
}

bool is_case_2d(const std::string& name) {
  for (const Case2D& c : case_registry_2d())
    if (c.name == name) return true;
  return false;
}

// Output sink: the named file, or `fallback` when no path is given.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (path.empty()) return;
    file_.open(path, std::ios::out | std::ios::trunc);
    if (!file_) throw ConfigError("cannot write '" + path + "'");
    os_ = &file_;
  }
  std::ostream& get() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

std::string snapshot_path(const std::string& out, double t) {
  namespace fs = std::filesystem;
  const fs::path p(out);
  std::ostringstream tag;
  tag << "_t" << t;
  return (p.parent_path() / (p.stem().string() + tag.str() + p.extension().string())).string();
}

std::string bc_name(Boundary b) {
  switch (b) {
    case Boundary::Transmissive: return "transmissive";
    case Boundary::Reflective: return "reflective";
    case Boundary::Periodic: return "periodic";
  }
  return "?";
}

int run_1d(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const GasModel gas(1.4);
  const CaseSpec spec = find_case(cfg.case_name);
  if (cfg.grid) throw ConfigError("--grid applies to 2D cases; use --cells for '" + spec.name + "'");
  if (cfg.mach) throw ConfigError("--mach applies to the half-cylinder case only");
  RunOptions opts;
  opts.scheme = cfg.scheme;
  opts.order = cfg.order;
  if (cfg.limiter_k) opts.limiter_k = *cfg.limiter_k;
  opts.cells = cfg.cells;
  opts.cfl = cfg.cfl;
  opts.t_final = cfg.t_final;

  if (cfg.format == OutputFormat::Eoc) {
    if (spec.reference == ReferenceKind::None)
      throw ConfigError("case '" + spec.name + "' has no reference solution for an EOC table");
    const int base = cfg.cells.value_or(40);
    std::vector<int> cells;
    for (int k = 0; k < 5; ++k) cells.push_back(base << k);
    const auto rows = convergence_study(spec, opts, cells, gas);
    Sink sink(cfg.out, out);
    write_eoc_table(sink.get(), rows);
    return kExitOk;
  }

  const Result1D res = run_case(spec, opts, gas);
  if (!res.completed) {
    err << "error: step limit reached at t=" << res.time << "\n";
    return kExitBlowUp;
  }

  if (cfg.format == OutputFormat::Csv) {
    Sink sink(cfg.out, out);
    write_csv_1d(sink.get(), res.grid, res.w, gas);
    for (const Snapshot& s : res.snapshots) {
      if (cfg.out.empty()) break;
      Sink snap(snapshot_path(cfg.out, s.time), out);
      write_csv_1d(snap.get(), res.grid, s.w, gas);
    }
    return kExitOk;
  }

  Sink sink(cfg.out, out);
  std::ostream& os = sink.get();
  double min_rho = std::numeric_limits<double>::infinity(), min_p = min_rho;
  for (const Primitive& w : res.w) {
    min_rho = std::min(min_rho, w.rho);
    min_p = std::min(min_p, w.p);
  }
  os << "case " << spec.name << "\n"
     << "scheme " << scheme_label(cfg.scheme) << "\n"
     << "order " << cfg.order << "\n"
     << "cells " << res.grid.n_cells << "\n"
     << "time " << res.time << "\n"
     << "steps " << res.steps << "\n"
     << "dt_min " << res.dt_min << "\n"
     << "dt_max " << res.dt_max << "\n"
     << "min_rho " << min_rho << "\n"
     << "min_p " << min_p << "\n";
  if (spec.reference != ReferenceKind::None) {
    const auto ref = reference_solution(spec, res.time, gas);
    const ErrorReport e = error_norms(res.grid, res.w, ref);
    os << "density_L1 " << e.l1 << "\n"
       << "density_L2 " << e.l2 << "\n"
       << "density_Linf " << e.linf << "\n";
  }
  if (spec.name == "sonic-point") {
    const FanCheck fan = rarefaction_monotonicity(spec, res, gas);
    os << "fan_cells " << fan.cells_checked << "\n"
       << "fan_worst_ratio " << fan.worst_ratio << "\n"
       << "fan_monotone " << (fan.pass ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int run_2d(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const GasModel gas(1.4);
  if (cfg.cells) throw ConfigError("--cells applies to 1D cases; use --grid NIxNJ for '" + cfg.case_name + "'");
  if (cfg.scheme != SchemeKind::ZbsFds) throw ConfigError("2D cases use the zbs scheme only");
  if (cfg.format == OutputFormat::Eoc) throw ConfigError("--format eoc applies to 1D cases");
  Case2D c = find_case_2d(cfg.case_name);
  if (cfg.mach) {
    if (c.name != "half-cylinder") throw ConfigError("--mach applies to the half-cylinder case only");
    c = half_cylinder_case(*cfg.mach);
  }
  const auto [ni, nj] = cfg.grid.value_or(std::pair<int, int>{c.default_ni, c.default_nj});
  const StructuredGrid2D grid = c.make_grid(ni, nj);

  Solver2DConfig sc;
  sc.order = cfg.order;
  if (cfg.limiter_k) sc.limiter_k = *cfg.limiter_k;
  sc.cfl = cfg.cfl.value_or(c.cfl);
  sc.t_final = cfg.t_final.value_or(c.t_final);
  sc.steady_drop = c.steady_drop;
  const Result2D res = advance_2d(grid, initial_cells_2d(c, grid), c.bc, sc, gas);
  if (!res.completed) {
    err << "error: step limit reached at t=" << res.time << "\n";
    return kExitBlowUp;
  }

  Sink sink(cfg.out, out);
  std::ostream& os = sink.get();
  if (cfg.format == OutputFormat::Csv) {
    write_field_2d(os, grid, res.w, c);
    return kExitOk;
  }
  os << "case " << c.name << "\n"
     << "summary " << c.summary << "\n"
     << "scheme " << scheme_label(cfg.scheme) << "\n"
     << "order " << cfg.order << "\n"
     << "grid " << ni << "x" << nj << "\n"
     << "time " << res.time << "\n"
     << "steps " << res.steps << "\n"
     << "steady " << (res.steady ? "yes" : "no") << "\n"
     << "min_rho " << res.min_rho << "\n"
     << "min_p " << res.min_p << "\n";
  if (!res.residual.empty()) os << "final_residual " << res.residual.back() << "\n";
  if (c.name == "shock-reflection") {
    const PostShockCheck ps = incident_shock_pressure(grid, res.w);
    os << "post_shock_cells " << ps.cells << "\n"
       << "post_shock_mean_p " << ps.mean << "\n"
       << "post_shock_worst_rel " << ps.worst << "\n";
  }
  if (c.name == "half-cylinder") {
    const std::vector<double> line = stagnation_line_pressure(grid, res.w);
    os << "stagnation_line_p";
    for (double p : line) os << " " << p;
    os << "\nstagnation_line_monotone " << (nondecreasing(line) ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

// Inserts config-file options right after the subcommand so that options on
// the command line, which come later, take precedence.
std::vector<std::string> expand_config(int argc, const char* const* argv) {
  std::vector<std::string> args(argv, argv + argc);
  std::string path;
  for (std::size_t k = 1; k < args.size(); ++k) {
    if (args[k] == "--config") {
      if (k + 1 >= args.size()) throw ConfigError("--config needs a file name");
      path = args[k + 1];
      args.erase(args.begin() + k, args.begin() + k + 2);
      break;
    }
    if (args[k].rfind("--config=", 0) == 0) {
      path = args[k].substr(9);
      args.erase(args.begin() + k);
      break;
    }
  }
  if (path.empty()) return args;
  std::vector<std::string> extra;
  for (const auto& [key, value] : read_config_file(path)) {
    extra.push_back("--" + key);
    extra.push_back(value);
  }
  const auto sub = std::find_if(args.begin() + 1, args.end(), [](const std::string& a) {
    return a == "run" || a == "list-cases" || a == "verify";
  });
  if (sub == args.end()) throw ConfigError("--config needs a subcommand");
  args.insert(sub + 1, extra.begin(), extra.end());
  return args;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "eoc") return OutputFormat::Eoc;
  if (name == "report") return OutputFormat::Report;
  throw ConfigError("unknown format '" + name + "' (expected csv, eoc or report)");
}

std::pair<int, int> parse_grid(const std::string& text) {
  const auto x = text.find_first_of("xX");
  if (x == std::string::npos) throw ConfigError("grid must look like NIxNJ, got '" + text + "'");
  try {
    std::size_t used_i = 0, used_j = 0;
    const std::string a = text.substr(0, x), b = text.substr(x + 1);
    const int ni = std::stoi(a, &used_i), nj = std::stoi(b, &used_j);
    if (used_i != a.size() || used_j != b.size() || ni < 1 || nj < 1) throw std::invalid_argument(text);
    return {ni, nj};
  } catch (const std::exception&) {
    throw ConfigError("grid must look like NIxNJ with positive sizes, got '" + text + "'");
  }
}

std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos || trim(t.substr(0, eq)).empty())
      throw ConfigError(path + ":" + std::to_string(number) + ": expected key=value");
    std::string key = trim(t.substr(0, eq));
    std::replace(key.begin(), key.end(), '_', '-');
    out.emplace_back(key, trim(t.substr(eq + 1)));
  }
  return out;
}

std::string scheme_label(SchemeKind scheme) {
  return scheme == SchemeKind::ZbsFds ? "ZBS-FDS" : "TVS-FDS";
}

void write_csv_1d(std::ostream& os, const Grid1D& grid, const std::vector<Primitive>& w,
                  const GasModel& gas) {
  os << "x,rho,u,p,e\n";
  for (int i = 0; i < grid.n_cells; ++i) {
    os << sci(grid.center(i)) << ',' << sci(w[i].rho) << ',' << sci(w[i].u) << ',' << sci(w[i].p) << ','
       << sci(internal_energy(w[i], gas)) << '\n';
  }
}

void write_field_2d(std::ostream& os, const StructuredGrid2D& grid, const std::vector<Prim2D>& w,
                    const Case2D& c) {
  os << grid.ni() << ',' << grid.nj() << '\n';
  os << "contour," << (c.contour_variable.empty() ? "none" : c.contour_variable) << ','
     << (c.contour_levels.empty() ? "auto" : c.contour_levels) << '\n';
  os << "x,y,rho,u,v,p\n";
  for (int j = 0; j < grid.nj(); ++j) {
    for (int i = 0; i < grid.ni(); ++i) {
      const Point2 p = grid.centroid(i, j);
      const Prim2D& s = w[grid.cell_index(i, j)];
      os << sci(p.x) << ',' << sci(p.y) << ',' << sci(s.rho) << ',' << sci(s.u) << ',' << sci(s.v) << ','
         << sci(s.p) << '\n';
    }
  }
}

void write_eoc_table(std::ostream& os, const std::vector<ConvergenceRow>& rows) {
  os << "cells,h,L1,L2,Linf,eoc_L1,eoc_L2,eoc_Linf\n";
  for (const ConvergenceRow& r : rows) {
    os << r.cells << ',' << sci(r.h) << ',' << sci(r.err.l1) << ',' << sci(r.err.l2) << ',' << sci(r.err.linf);
    if (r.order)
      os << ',' << sci(r.order->l1) << ',' << sci(r.order->l2) << ',' << sci(r.order->linf);
    else
      os << ",,,";
    os << '\n';
  }
}

void list_cases(std::ostream& os, bool tsv) {
  if (tsv) {
    os << "name\tdim\tdomain\tt_final\tresolution\tboundaries\treference\tsummary\n";
  } else {
    os << "1D cases\n";
  }
  for (const CaseSpec& c : case_registry()) {
    std::ostringstream dom, bc;
    dom << "[" << c.x_min << "," << c.x_max << "]";
    bc << bc_name(c.bc.left) << "/" << bc_name(c.bc.right);
    if (tsv) {
      os << c.name << "\t1\t" << dom.str() << "\t" << c.t_final << "\t" << c.default_cells << "\t" << bc.str()
         << "\t" << to_string(c.reference) << "\t" << c.summary << "\n";
    } else {
      os << "  " << std::left << std::setw(20) << c.name << std::right << dom.str() << " t=" << c.t_final
         << " cells=" << c.default_cells << " cfl=" << c.default_cfl << " bc=" << bc.str()
         << " ref=" << to_string(c.reference) << "\n      " << c.summary << "\n";
    }
  }
  if (!tsv) os << "2D cases\n";
  for (const Case2D& c : case_registry_2d()) {
    std::ostringstream res, bc;
    res << c.default_ni << "x" << c.default_nj;
    bc << to_string(c.bc.i_min.kind) << "/" << to_string(c.bc.i_max.kind) << "/" << to_string(c.bc.j_min.kind)
       << "/" << to_string(c.bc.j_max.kind);
    const std::string t = c.steady_drop > 0.0 ? "steady" : [&] {
      std::ostringstream os2;
      os2 << c.t_final;
      return os2.str();
    }();
    const std::string contour =
        c.contour_levels.empty() ? c.contour_variable : c.contour_variable + ":" + c.contour_levels;
    if (tsv) {
      os << c.name << "\t2\tgrid\t" << t << "\t" << res.str() << "\t" << bc.str() << "\t" << contour << "\t"
         << c.summary << "\n";
    } else {
      os << "  " << std::left << std::setw(20) << c.name << std::right << "grid=" << res.str() << " t=" << t
         << " bc(imin/imax/jmin/jmax)=" << bc.str() << " contours=" << contour << "\n      " << c.summary
         << "\n";
    }
  }
}

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (is_case_1d(cfg.case_name)) return run_1d(cfg, out, err);
    if (is_case_2d(cfg.case_name)) return run_2d(cfg, out, err);
    throw ConfigError("unknown case '" + cfg.case_name + "' (see list-cases)");
  } catch (const SolverBlowUp& e) {
    err << scheme_label(cfg.scheme) << " scheme blew up: " << e.what() << "\n";
    return kExitBlowUp;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  try {
    args = expand_config(argc, argv);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  }

  CLI::App app{"Convection-pressure split FDS solvers for the Euler equations"};
  app.name(args.empty() ? "cpsplit" : std::filesystem::path(args[0]).filename().string());
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  RunConfig cfg;
  std::string scheme = "zbs", format = "csv", grid;
  int cells = 0;
  double cfl = 0.0, t_final = 0.0, limiter_k = 0.0, mach = 0.0;
  std::uint64_t seed = kDefaultSeed;

  CLI::App* run = app.add_subcommand("run", "run one benchmark case");
  run->add_option("--case", cfg.case_name, "case name (see list-cases)")->required();
  run->add_option("--scheme", scheme, "zbs or tvs")->check(CLI::IsMember({"zbs", "tvs"}));
  run->add_option("--order", cfg.order, "spatial order, 1 or 2")->check(CLI::IsMember({1, 2}));
  auto* o_cells = run->add_option("--cells", cells, "1D cell count")->check(CLI::Range(4, 100000000));
  auto* o_grid = run->add_option("--grid", grid, "2D grid NIxNJ");
  auto* o_cfl = run->add_option("--cfl", cfl, "CFL number in (0, 1]");
  auto* o_t = run->add_option("--t-final", t_final, "final time");
  auto* o_k = run->add_option("--limiter-k", limiter_k, "limiter constant K");
  auto* o_mach = run->add_option("--mach", mach, "free-stream Mach number (half-cylinder)");
  run->add_option("--out", cfg.out, "output file (default: stdout)");
  run->add_option("--format", format, "csv, eoc or report")->check(CLI::IsMember({"csv", "eoc", "report"}));
  run->add_option("--seed", seed, "accepted for symmetry with verify; runs are deterministic");
  o_cells->excludes(o_grid);

  bool tsv = false;
  CLI::App* ls = app.add_subcommand("list-cases", "print the case registries");
  ls->add_flag("--tsv", tsv, "one tab-separated case per line");

  std::string suite = "all";
  CLI::App* ver = app.add_subcommand("verify", "run the property suites");
  ver->add_option("suite", suite, "algebra, oracle, conservation or all")
      ->check(CLI::IsMember({"algebra", "oracle", "conservation", "all"}));
  ver->add_option("--seed", seed, "random seed");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  if (*ls) {
    list_cases(out, tsv);
    return kExitOk;
  }
  if (*ver) {
    bool ok = true;
    for (const SuiteReport& r : run_suites(suite, seed)) {
      print_report(out, r);
      ok = ok && r.pass();
    }
    return ok ? kExitOk : kExitVerifyFailed;
  }

  try {
    cfg.scheme = parse_scheme(scheme);
    cfg.format = parse_format(format);
    if (o_cells->count()) cfg.cells = cells;
    if (o_grid->count()) cfg.grid = parse_grid(grid);
    if (o_cfl->count()) cfg.cfl = cfl;
    if (o_t->count()) cfg.t_final = t_final;
    if (o_k->count()) cfg.limiter_k = limiter_k;
    if (o_mach->count()) cfg.mach = mach;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return run_command(cfg, out, err);
}

}  // namespace cpsplit
