#include "teplab/config.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "teplab/csv.hpp"
#include "teplab/experiments.hpp"
#include "teplab/presets.hpp"

namespace teplab {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  const auto b = s.find_last_not_of(" \t\r");
  return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string join_doubles(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += format_g15(v[i]);
  }
  return out;
}

}  // namespace

void RunConfig::validate() const {
  if (experiment.empty()) throw std::invalid_argument("config: experiment name missing");
  if (dims.empty()) throw std::invalid_argument("config: empty dimension list");
  if (t_count < 2) throw std::invalid_argument("config: t grid needs at least 2 points");
  if (eps_grid.empty()) throw std::invalid_argument("config: empty epsilon grid");
  if (!(tol > 0.0)) throw std::invalid_argument("config: tolerance must be positive");
  if (order != 1 && order != 2) throw std::invalid_argument("config: order must be 1 or 2");
  if (threads < 1) throw std::invalid_argument("config: threads must be >= 1");
  radial_preset(preset);  // throws on unknown preset
  if (quantity != "u" && quantity != "theta")
    throw std::invalid_argument("config: quantity must be u or theta");
}

void apply_override(RunConfig& cfg, const std::string& keyval) {
  const auto eq = keyval.find('=');
  if (eq == std::string::npos) throw std::invalid_argument("override must be key=value: " + keyval);
  const std::string key = trim(keyval.substr(0, eq));
  const std::string value = trim(keyval.substr(eq + 1));
  if (key == "experiment") cfg.experiment = value;
  else if (key == "dims") {
    cfg.dims.clear();
    for (const auto& tok : split(value, ',')) cfg.dims.push_back(std::stoi(tok));
  } else if (key == "t_log_min") cfg.t_log_min = std::stod(value);
  else if (key == "t_log_max") cfg.t_log_max = std::stod(value);
  else if (key == "t_count") cfg.t_count = std::stoi(value);
  else if (key == "eps") {
    cfg.eps_grid.clear();
    for (const auto& tok : split(value, ',')) cfg.eps_grid.push_back(std::stod(tok));
  } else if (key == "preset") cfg.preset = value;
  else if (key == "tol") cfg.tol = std::stod(value);
  else if (key == "order") cfg.order = std::stoi(value);
  else if (key == "threads") cfg.threads = std::stoi(value);
  else if (key == "out") cfg.out = value;
  else if (key == "quantity") cfg.quantity = value;
  else throw std::invalid_argument("unknown config key: " + key);
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    apply_override(cfg, line);
  }
  return cfg;
}

std::string serialize_config(const RunConfig& cfg) {
  std::ostringstream out;
  out << "experiment=" << cfg.experiment << '\n'
      << "dims=" << join_ints(cfg.dims) << '\n'
      << "t_log_min=" << format_g15(cfg.t_log_min) << '\n'
      << "t_log_max=" << format_g15(cfg.t_log_max) << '\n'
      << "t_count=" << cfg.t_count << '\n'
      << "eps=" << join_doubles(cfg.eps_grid) << '\n'
      << "preset=" << cfg.preset << '\n'
      << "tol=" << format_g15(cfg.tol) << '\n'
      << "order=" << cfg.order << '\n'
      << "threads=" << cfg.threads << '\n'
      << "out=" << cfg.out << '\n'
      << "quantity=" << cfg.quantity << '\n';
  return out.str();
}

namespace {

std::vector<double> log_grid(double lo, double hi, int count) {
  std::vector<double> g(count);
  for (int i = 0; i < count; ++i)
    g[i] = std::pow(10.0, lo + (hi - lo) * i / (count - 1));
  return g;
}

void emit(const RunConfig& cfg, const std::string& csv, std::ostream& fallback) {
  if (cfg.out.empty()) {
    fallback << csv;
    return;
  }
  std::filesystem::create_directories(cfg.out);
  const auto path = std::filesystem::path(cfg.out) / (cfg.experiment + ".csv");
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path.string());
  f << csv;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& fallback) {
  cfg.validate();
  if (cfg.experiment == "rates") {
    const auto which = cfg.quantity == "u" ? NormOf::displacement : NormOf::temperature;
    emit(cfg, run_rates_experiment(cfg.dims, which, cfg.tol).csv, fallback);
  } else if (cfg.experiment == "table1") {
    emit(cfg, run_table1(cfg.dims), fallback);
  } else if (cfg.experiment == "profile-error") {
    std::vector<int> dims;
    for (int n : cfg.dims)
      if (n <= 4) dims.push_back(n);
    if (dims.empty()) throw std::invalid_argument("profile-error: needs dimensions <= 4");
    emit(cfg, run_profile_error_experiment(dims, cfg.tol).csv, fallback);
  } else if (cfg.experiment == "singular-limit") {
    const int n = cfg.dims.front();
    const auto tg = log_grid(cfg.t_log_min, cfg.t_log_max, cfg.t_count);
    emit(cfg,
         run_singular_limit_experiment(cfg.order, n, cfg.eps_grid, cfg.preset, cfg.tol,
                                       cfg.threads, tg)
             .csv,
         fallback);
  } else if (cfg.experiment == "oracle-compare") {
    emit(cfg, run_oracle_compare().csv, fallback);
  } else {
    throw std::invalid_argument("unknown experiment: " + cfg.experiment);
  }
  return 0;
}

}  // namespace teplab
