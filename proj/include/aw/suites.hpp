#pragma once

#include <random>
#include <string>
#include <vector>

#include "aw/heat.hpp"
#include "aw/io.hpp"

// Reproducible verification suites behind the CLI subcommands. Every check
// derives its random stream from the run seed through fixed stream ids, so
// a RunConfig determines the report bytes.

namespace aw {

struct RunConfig {
  int grid_cells = 8;
  int order_cap = 12;
  double horizon = 1.0;
  std::uint64_t seed = 42;
  std::int64_t samples = 100000;
  double tolerance = 1e-9;
  std::string format = "json";
};

nlohmann::json config_to_json(const RunConfig& cfg);

// Sparse random vector with max total degree exactly `degree` (when
// degree > 0) and about `terms` stored coefficients in [-1,1].
ChaosVector sample_chaos(std::mt19937_64& engine, int modes, int order_cap, int degree,
                         int terms);

L2Function sample_l2(std::mt19937_64& engine, const TimeGrid& grid);

// Product identities: the two anti-Wick routes, associativity, the
// pointwise/Wick embeddings, the Wick<->anti-Wick conversion formulas, the
// derivative norm identity with its L1 estimate, and the scalar
// associativity probes.
std::vector<CheckRecord> run_identities(const RunConfig& cfg);

struct HeatJob {
  std::string f_spec;            // "x^k", "poly:c0,c1,...", "cos", "exp"
  std::string g_spec = "x^1";    // second datum for the product check
  std::string h_spec = "0";      // pairing direction, e.g. "e1", "e1+e2", "0.5*e1"
  std::vector<double> times{0.25, 0.5, 1.0};
  int taylor_order = 16;
  int quad_nodes = 40;
};

std::vector<CheckRecord> run_heat(const RunConfig& cfg, const HeatJob& job);

// Sampled (t, x, u(t,x)) rows for external plotting.
std::string heat_curve_csv(const RunConfig& cfg, const HeatJob& job);

std::string run_bench_csv(const RunConfig& cfg);

// Parsed initial datum: exactly one representation is active.
struct InitialDatum {
  bool is_poly = true;
  Poly1D poly;
  AnalyticFunction analytic;
};

// Throws std::invalid_argument for unknown specs.
InitialDatum parse_datum(const std::string& spec, int taylor_order);
L2Function parse_l2_spec(const std::string& spec, const TimeGrid& grid);

}  // namespace aw
