#pragma once

// Command execution and deterministic report documents.
//
// Every command renders both a text report and a structured JSON document
// with stable key order; identical (input, seed, caps) produce byte-equal
// output. Exit code 0 on success, 2 when undecided candidates are present
// (file and parse errors are raised as exceptions and map to exit 1 in the
// CLI front end).

#include <optional>
#include <string>

#include <json.hpp>

#include "repvar/components.hpp"

namespace repvar {

inline constexpr const char* kToolName = "repvar";
inline constexpr const char* kToolVersion = "0.1.0";

struct JobConfig {
  std::string command;
  std::string algebra_path;
  std::optional<std::string> dim_text;
  std::optional<std::string> layering_text;
  Mode mode = Mode::auto_detect;
  OracleConfig oracle;
  std::optional<uint32_t> small_prime;  // overrides the filtration ladder
  std::string format = "text";          // "text" or "structured"
};

struct ReportDocument {
  std::string text;
  nlohmann::ordered_json json;
  int exit_code = 0;

  std::string rendered(const std::string& format) const;
};

ReportDocument run(const JobConfig& job);

}  // namespace repvar
