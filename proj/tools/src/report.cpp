#include "report.hpp"

#include <cstdio>
#include <cstdlib>
#include <ostream>

namespace hyperex::cli {

Json RunReport::to_json() const {
  Json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["outputs"] = outputs;
  j["error_estimates"] = error_estimates;
  j["seed"] = seed;
  j["wall_time_ms"] = wall_time_ms;
  return j;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("HYPEREX_SEED");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  return (end != nullptr && *end == '\0') ? v : 0;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << ',';
      os << cells[i];
    }
    os << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

}  // namespace hyperex::cli
