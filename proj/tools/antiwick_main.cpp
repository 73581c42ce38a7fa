// Experiment runner: product-identity suites, heat-equation representation
// checks, and micro-benchmarks, with machine-readable reports.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "aw/io.hpp"
#include "aw/suites.hpp"

namespace {

constexpr int kExitFailedCheck = 1;
constexpr int kExitConfigError = 2;

void add_common_options(CLI::App* cmd, aw::RunConfig& cfg, std::string& output) {
  cmd->add_option("-m,--grid-size", cfg.grid_cells, "Grid cells of [0,T]")
      ->check(CLI::PositiveNumber);
  cmd->add_option("-N,--order", cfg.order_cap, "Chaos order cap")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("-T,--horizon", cfg.horizon, "Time horizon")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", cfg.seed, "Run seed");
  cmd->add_option("--samples", cfg.samples, "Monte Carlo sample count")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tolerance", cfg.tolerance, "Pass tolerance for coefficient identities");
  cmd->add_option("-o,--output", output, "Write the report to this path instead of stdout");
  cmd->add_option("--format", cfg.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}));
}

int emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file '" << output << "'\n";
    return kExitConfigError;
  }
  out << text;
  return 0;
}

int emit_records(const aw::RunConfig& cfg, const std::vector<aw::CheckRecord>& records,
                 const std::string& output) {
  const std::string text = cfg.format == "csv"
                               ? aw::render_csv(records)
                               : aw::render_json(aw::config_to_json(cfg), records);
  const int rc = emit(text, output);
  if (rc != 0) return rc;
  for (const aw::CheckRecord& r : records) {
    if (!r.pass) return kExitFailedCheck;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truncated chaos-expansion calculus: identity suites, heat-equation "
               "checks, and benchmarks"};
  app.require_subcommand(1);

  aw::RunConfig cfg;
  std::string output;

  CLI::App* identities = app.add_subcommand(
      "identities", "Verify the product identities and norm estimates");
  add_common_options(identities, cfg, output);

  CLI::App* heat =
      app.add_subcommand("heat", "Heat-equation representation and pairing checks");
  add_common_options(heat, cfg, output);
  aw::HeatJob job;
  heat->add_option("-f,--f", job.f_spec,
                   "Initial datum: x, x^k, poly:c0,c1,..., cos, exp")
      ->required();
  heat->add_option("-g,--g", job.g_spec, "Second datum for the product check");
  heat->add_option("--h-spec", job.h_spec, "Pairing direction, e.g. 0, e1, e1+e2, 0.5*e1");
  heat->add_option("-t,--t", job.times, "Times to check (grid nodes)");
  heat->add_option("--taylor-order", job.taylor_order,
                   "Taylor truncation degree for analytic data");
  heat->add_option("--quad-nodes", job.quad_nodes, "Gauss-Hermite node count");
  std::string curve_path;
  heat->add_option("--emit-curve", curve_path, "Write sampled (t,x,u) rows to this CSV file");

  CLI::App* bench = app.add_subcommand("bench", "Time the core products across (m,N) sweeps");
  add_common_options(bench, cfg, output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfigError;
  }

  try {
    if (identities->parsed()) {
      return emit_records(cfg, aw::run_identities(cfg), output);
    }
    if (heat->parsed()) {
      const std::vector<aw::CheckRecord> records = aw::run_heat(cfg, job);
      if (!curve_path.empty()) {
        const int rc = emit(aw::heat_curve_csv(cfg, job), curve_path);
        if (rc != 0) return rc;
      }
      return emit_records(cfg, records, output);
    }
    if (bench->parsed()) {
      return emit(aw::run_bench_csv(cfg), output);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return kExitConfigError;
}
