#pragma once

// Command-line front end: `run`, `list-cases` and `verify`.

#include "cpsplit/bench1d.hpp"
#include "cpsplit/cases2d.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cpsplit {

enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitConfigError = 2, kExitBlowUp = 3 };

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { Csv, Eoc, Report };

OutputFormat parse_format(const std::string& name);

struct RunConfig {
  std::string case_name;
  SchemeKind scheme = SchemeKind::ZbsFds;
  int order = 1;
  std::optional<int> cells;
  std::optional<std::pair<int, int>> grid;
  std::optional<double> cfl;
  std::optional<double> t_final;
  std::optional<double> limiter_k;
  /// Free-stream Mach number of the half-cylinder case.
  std::optional<double> mach;
  std::string out;
  OutputFormat format = OutputFormat::Csv;
};

/// "NIxNJ" -> (ni, nj). Throws ConfigError.
std::pair<int, int> parse_grid(const std::string& text);

/// Reads `key = value` lines; blank lines and lines starting with '#' are
/// skipped. Throws ConfigError for a malformed line or unreadable file.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path);

/// "ZBS-FDS" or "TVS-FDS".
std::string scheme_label(SchemeKind scheme);

/// Header "x,rho,u,p,e" and one row per cell in 17-digit scientific notation.
void write_csv_1d(std::ostream& os, const Grid1D& grid, const std::vector<Primitive>& w,
                  const GasModel& gas);

/// "ni,nj" line, a "contour,<var>,<levels>" line, header "x,y,rho,u,v,p",
/// then one row per cell centroid with i fastest.
void write_field_2d(std::ostream& os, const StructuredGrid2D& grid, const std::vector<Prim2D>& w,
                    const Case2D& c);

/// Convergence table with columns cells,h,L1,L2,Linf,eoc_L1,eoc_L2,eoc_Linf.
void write_eoc_table(std::ostream& os, const std::vector<ConvergenceRow>& rows);

/// Prints the registries; with `tsv` one case per line, tab separated.
void list_cases(std::ostream& os, bool tsv);

/// Runs one configured case and writes its output. Returns an ExitCode.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full command line entry point. Returns an ExitCode.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cpsplit
