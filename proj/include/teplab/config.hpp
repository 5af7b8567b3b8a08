#pragma once

// Flat key=value run configuration: reproducible, diff-able experiment
// records. parse -> serialize -> parse is the identity.

#include <iosfwd>
#include <string>
#include <vector>

namespace teplab {

struct RunConfig {
  std::string experiment;                  // rates|table1|profile-error|singular-limit|oracle-compare
  std::vector<int> dims = {1, 2, 3, 4, 5, 6};
  double t_log_min = -2.0;                 // singular-limit t-grid: 10^min .. 10^max
  double t_log_max = 3.0;
  int t_count = 61;
  std::vector<double> eps_grid = {1e-1, 3.16227766016838e-2, 1e-2, 3.16227766016838e-3, 1e-3};
  std::string preset = "gaussian";
  double tol = 1e-8;
  int order = 1;
  int threads = 1;
  std::string out;                         // output directory; empty -> stdout
  std::string quantity = "u";              // rates: u | theta

  void validate() const;                   // grids nonempty, tol > 0, preset known
};

RunConfig parse_config(const std::string& text);
std::string serialize_config(const RunConfig& cfg);

/// Apply a single "key=value" override (same keys as the config file).
void apply_override(RunConfig& cfg, const std::string& keyval);

/// Execute the configured experiment; CSV goes to <out>/<experiment>.csv or
/// to `fallback` when out is empty. Returns a process exit status.
int run(const RunConfig& cfg, std::ostream& fallback);

}  // namespace teplab
