// teplab — semi-analytic Fourier-side laboratory for the thermoelastic plate
// system: exact kernels, large-time rate sweeps and vanishing-thermal-
// parameter experiments, all emitted as CSV.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "teplab/config.hpp"
#include "teplab/experiments.hpp"
#include "teplab/parallel.hpp"

namespace {

std::string out_dir_from_env() {
  const char* d = std::getenv("TEPLAB_OUT_DIR");
  return d ? d : "";
}

int emit(const teplab::RunConfig& cfg, std::ostream& os) {
  try {
    return teplab::run(cfg, os);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier-side thermoelastic plate laboratory"};
  app.require_subcommand(1);

  teplab::RunConfig cfg;
  cfg.out = out_dir_from_env();
  cfg.threads = teplab::default_threads();
  double tol = 1e-8;
  int threads = cfg.threads;
  app.add_option("--tol", tol, "quadrature relative tolerance")->capture_default_str();
  app.add_option("--threads", threads, "worker threads for sweeps")->capture_default_str();

  std::vector<double> ts{0.0, 0.5, 1.0, 2.0, 5.0};
  std::vector<double> rs{0.0, 0.1, 0.5, 1.0, 2.0};

  auto* roots = app.add_subcommand("roots", "characteristic constants as one CSV row");

  auto* kernels = app.add_subcommand("kernels", "kernel/multiplier table over a (t, r) grid");
  bool lagrange = false;
  kernels->add_option("--t", ts, "time list")->expected(-1);
  kernels->add_option("--r", rs, "frequency list")->expected(-1);
  kernels->add_flag("--lagrange", lagrange, "naive Lagrange-sum mode instead of stabilized");

  auto* profiles = app.add_subcommand("profiles", "profile multipliers over a (t, r) grid");
  profiles->add_option("--t", ts, "time list")->expected(-1);
  profiles->add_option("--r", rs, "frequency list")->expected(-1);

  auto* rates = app.add_subcommand("rates", "fitted large-time exponents per dimension");
  std::vector<int> dims{1, 2, 3, 4, 5, 6};
  std::string quantity = "u";
  rates->add_option("--n", dims, "dimension list")->expected(-1);
  rates->add_option("--quantity", quantity, "u | theta")->capture_default_str();

  auto* table1 = app.add_subcommand("table1", "dimension classification table");
  table1->add_option("--n", dims, "dimension list")->expected(-1);

  auto* perr = app.add_subcommand("profile-error", "profile-improvement exponents");
  std::vector<int> pdims{1, 2, 3, 4};
  perr->add_option("--n", pdims, "dimension list (<= 4)")->expected(-1);

  auto* slim = app.add_subcommand("singular-limit", "epsilon sweep of the error norms");
  int order = 1, sdim = 3;
  std::vector<double> eps = cfg.eps_grid;
  std::string preset = "mean-zero-gaussian-derivative";
  slim->add_option("--order", order, "1: u^eps - u^0, 2: minus eps u^{I,1} as well")
      ->check(CLI::IsMember({1, 2}));
  slim->add_option("--n", sdim, "dimension");
  slim->add_option("--eps", eps, "epsilon list")->expected(-1);
  slim->add_option("--preset", preset, "u1 preset (theta0 = -u1)")->capture_default_str();

  auto* ocmp = app.add_subcommand("oracle-compare", "closed forms vs RK4 oracle, max rel err");

  auto* th1d = app.add_subcommand("thermo1d", "1D thermoelasticity reduction table");
  double alpha = 1.0, kappa = 1.0, g1 = 1.0, g2 = 1.0;
  std::vector<double> data_flat{1, 0, 0, 0, 0, 0};
  th1d->add_option("--alpha", alpha)->capture_default_str();
  th1d->add_option("--kappa", kappa)->capture_default_str();
  th1d->add_option("--g1", g1)->capture_default_str();
  th1d->add_option("--g2", g2)->capture_default_str();
  th1d->add_option("--r", rs, "frequency list")->expected(-1);
  th1d->add_option("--t", ts, "time list")->expected(-1);
  th1d->add_option("--data", data_flat, "u0re u0im u1re u1im th0re th0im")->expected(6);

  auto* runcmd = app.add_subcommand("run", "execute a key=value config file");
  std::string config_path;
  std::vector<std::string> overrides;
  runcmd->add_option("--config", config_path, "config file")->required()->check(CLI::ExistingFile);
  runcmd->add_option("--set", overrides, "key=value overrides");

  CLI11_PARSE(app, argc, argv);
  cfg.tol = tol;
  cfg.threads = threads;

  try {
    if (*roots) {
      std::cout << teplab::roots_csv();
    } else if (*kernels) {
      std::cout << teplab::kernels_csv(ts, rs, lagrange);
    } else if (*profiles) {
      std::cout << teplab::profiles_csv(ts, rs);
    } else if (*rates) {
      cfg.experiment = "rates";
      cfg.dims = dims;
      cfg.quantity = quantity;
      return emit(cfg, std::cout);
    } else if (*table1) {
      cfg.experiment = "table1";
      cfg.dims = dims;
      return emit(cfg, std::cout);
    } else if (*perr) {
      cfg.experiment = "profile-error";
      cfg.dims = pdims;
      return emit(cfg, std::cout);
    } else if (*slim) {
      cfg.experiment = "singular-limit";
      cfg.dims = {sdim};
      cfg.order = order;
      cfg.eps_grid = eps;
      cfg.preset = preset;
      return emit(cfg, std::cout);
    } else if (*ocmp) {
      cfg.experiment = "oracle-compare";
      return emit(cfg, std::cout);
    } else if (*th1d) {
      const std::array<teplab::complexd, 3> data{
          teplab::complexd{data_flat[0], data_flat[1]},
          teplab::complexd{data_flat[2], data_flat[3]},
          teplab::complexd{data_flat[4], data_flat[5]}};
      std::cout << teplab::thermo1d_csv(alpha, kappa, g1, g2, rs, ts, data);
    } else if (*runcmd) {
      std::ifstream f(config_path);
      std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
      teplab::RunConfig file_cfg = teplab::parse_config(text);
      if (file_cfg.out.empty()) file_cfg.out = cfg.out;
      for (const auto& kv : overrides) teplab::apply_override(file_cfg, kv);
      return emit(file_cfg, std::cout);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
