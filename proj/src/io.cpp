#include "aw/io.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>

namespace aw {

nlohmann::json chaos_to_json(const ChaosVector& x) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Term& t : x.terms()) {
    nlohmann::json exps = nlohmann::json::array();
    for (int i = 0; i < x.modes(); ++i) exps.push_back(t.index[i]);
    coeffs.push_back(nlohmann::json::array({exps, t.coeff}));
  }
  return nlohmann::json{{"m", x.modes()}, {"N", x.order_cap()}, {"coeffs", coeffs}};
}

ChaosVector chaos_from_json(const nlohmann::json& j) {
  const int m = j.at("m").get<int>();
  const int cap = j.at("N").get<int>();
  ChaosVector::Builder b(m, cap);
  for (const auto& entry : j.at("coeffs")) {
    if (!entry.is_array() || entry.size() != 2) {
      throw std::invalid_argument("chaos_from_json: malformed coefficient entry");
    }
    const auto exps = entry[0].get<std::vector<int>>();
    if (static_cast<int>(exps.size()) != m) {
      throw std::invalid_argument("chaos_from_json: exponent vector length mismatch");
    }
    b.add(MultiIndex::from_exponents(exps), entry[1].get<double>());
  }
  return std::move(b).build();
}

nlohmann::json record_to_json(const CheckRecord& r) {
  nlohmann::json j{{"check", r.check}, {"params", r.params}, {"lhs", r.lhs},
                   {"rhs", r.rhs},     {"residual", r.residual}, {"pass", r.pass}};
  if (r.sigma.has_value()) {
    j["sigma"] = *r.sigma;
  } else {
    j["sigma"] = nullptr;
  }
  return j;
}

void sort_records(std::vector<CheckRecord>& records) {
  std::sort(records.begin(), records.end(), [](const CheckRecord& a, const CheckRecord& b) {
    if (a.check != b.check) return a.check < b.check;
    return a.params.dump() < b.params.dump();
  });
}

std::string render_json(const nlohmann::json& config, std::vector<CheckRecord> records) {
  sort_records(records);
  bool all_pass = true;
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckRecord& r : records) {
    all_pass = all_pass && r.pass;
    checks.push_back(record_to_json(r));
  }
  nlohmann::json report{{"config", config}, {"checks", checks}, {"pass", all_pass}};
  return report.dump(2) + "\n";
}

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string render_csv(std::vector<CheckRecord> records) {
  sort_records(records);
  std::string out = "check,params,lhs,rhs,residual,sigma,pass\n";
  for (const CheckRecord& r : records) {
    out += r.check;
    out += ',';
    out += csv_quote(r.params.dump());
    out += ',';
    out += format_double(r.lhs);
    out += ',';
    out += format_double(r.rhs);
    out += ',';
    out += format_double(r.residual);
    out += ',';
    if (r.sigma.has_value()) out += format_double(*r.sigma);
    out += ',';
    out += r.pass ? "true" : "false";
    out += '\n';
  }
  return out;
}

}  // namespace aw
