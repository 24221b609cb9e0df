// JSON and CSV renderings of reports. Every JSON document produced here is
// meant to be wrapped by the caller with a top-level "schema" version.

#ifndef PEANO_IO_HPP
#define PEANO_IO_HPP

#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"

#include "peano/eval.hpp"
#include "peano/goldbach.hpp"
#include "peano/kernel.hpp"
#include "peano/models.hpp"

namespace peano {

inline constexpr int kJsonSchemaVersion = 1;

// "%.12g"
inline std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline nlohmann::json witness_json(const std::vector<Binding>& ws) {
  if (ws.empty()) return nullptr;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& b : ws) arr.push_back({{"var", "x" + std::to_string(b.var)}, {"index", b.index}});
  return arr;
}

inline nlohmann::json to_json(const EvalResult& r) {
  return {{"verdict", std::string(to_string(r.value))}, {"witness", witness_json(r.witnesses)}};
}

inline nlohmann::json to_json(const std::vector<AxiomReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports)
    arr.push_back({{"axiom", r.axiom},
                   {"verdict", std::string(to_string(r.result.value))},
                   {"witness", witness_json(r.result.witnesses)}});
  return arr;
}

inline nlohmann::json to_json(const goldbach::FrakNReport& r) {
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [alpha, n] : r.partition_counts) counts[std::to_string(alpha)] = n;
  nlohmann::json j = {{"limit", r.limit}, {"members", r.members}, {"verified", r.verified}, {"partition_counts", counts}};
  j["first_failure"] = r.first_failure ? nlohmann::json(*r.first_failure) : nlohmann::json(nullptr);
  return j;
}

inline std::string to_csv(const goldbach::FrakNReport& r) {
  std::string out = "alpha,count\n";
  for (const auto& [alpha, n] : r.partition_counts) out += std::to_string(alpha) + ',' + std::to_string(n) + '\n';
  return out;
}

inline nlohmann::json to_json(const Verdict& v) {
  nlohmann::json lines = nlohmann::json::array();
  for (const auto& l : v.lines) {
    nlohmann::json e = {{"line", l.line}, {"ok", l.ok}};
    e["reason"] = l.ok ? nlohmann::json(nullptr) : nlohmann::json(l.reason);
    lines.push_back(e);
  }
  return {{"accepted", v.accepted}, {"lines", lines}};
}

// Header alpha,u,n,psi,deviation; reals to 12 significant digits.
inline std::string to_csv(std::uint64_t alpha, const std::vector<LimitRow>& rows) {
  std::string out = "alpha,u,n,psi,deviation\n";
  for (const auto& r : rows)
    out += std::to_string(alpha) + ',' + format_real(r.u) + ',' + std::to_string(r.n) + ',' + format_real(r.psi) + ',' +
           format_real(r.deviation) + '\n';
  return out;
}

}  // namespace peano

#endif  // PEANO_IO_HPP
