#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hyperex::cli {

using Json = nlohmann::ordered_json;

/// Machine-readable record of one command invocation. Key order is fixed so
/// that identical inputs produce byte-identical output.
struct RunReport {
  std::string command;
  Json inputs = Json::object();
  Json outputs = Json::object();
  Json error_estimates = Json::object();
  std::uint64_t seed = 0;
  std::int64_t wall_time_ms = 0;

  Json to_json() const;
};

/// Seed from HYPEREX_SEED, or 0 when unset or unparsable.
std::uint64_t default_seed();

/// Fixed 17-significant-digit rendering used for CSV cells.
std::string format_number(double v);

/// Writes rows as CSV with a header row.
void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

}  // namespace hyperex::cli
