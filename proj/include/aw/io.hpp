#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "aw/chaos.hpp"

namespace aw {

// {"m": int, "N": int, "coeffs": [[exponents, value], ...]} with entries in
// graded-lex order.
nlohmann::json chaos_to_json(const ChaosVector& x);
ChaosVector chaos_from_json(const nlohmann::json& j);

// One check outcome, as emitted by the CLI suites.
struct CheckRecord {
  std::string check;
  nlohmann::json params;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  std::optional<double> sigma;
  bool pass = false;
};

nlohmann::json record_to_json(const CheckRecord& r);

// Records sorted by (check, params); deterministic for a fixed input set.
void sort_records(std::vector<CheckRecord>& records);

std::string render_json(const nlohmann::json& config, std::vector<CheckRecord> records);
std::string render_csv(std::vector<CheckRecord> records);

}  // namespace aw
