#pragma once

#include "isoclass/intmath.hpp"

#include <json.hpp>

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace isoclass {

/// Everything a run needs to be reproducible: the subcommand, its typed
/// parameters, the seed (always present, default 0), the output format, and
/// the worker count. Identical configs must produce identical output bytes.
struct ExperimentConfig {
    std::string command;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    u64 seed = 0;
    std::string output_format = "json"; ///< "json" or "csv"
    unsigned workers = 1;
};

/// Throws std::invalid_argument unless the format is json/csv and the worker
/// count is positive.
void validate(const ExperimentConfig& cfg);

/// One experiment outcome. `claim` names the mathematical statement the run
/// exercises and must come from claim_registry(); `verdict` is present for
/// pass/fail style experiments and absent for pure measurements.
struct ReportRecord {
    std::string experiment;
    std::string claim;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    nlohmann::ordered_json outputs = nlohmann::ordered_json::object();
    std::optional<bool> verdict;
    double wall_ms = 0.0;
};

/// The closed list of claim labels experiments may cite. Keeping the labels
/// centralized lets reports be grouped and audited by claim.
const std::vector<std::string>& claim_registry();
bool known_claim(const std::string& claim);

/// Serializes with a fixed key order so identical records give identical
/// bytes. Throws std::invalid_argument for an unregistered claim.
nlohmann::ordered_json to_json(const ReportRecord& rec);

/// RFC-4180 style CSV: fields containing commas, quotes, or newlines are
/// quoted, embedded quotes doubled. One header row, then data rows.
std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows);

class Stopwatch {
  public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

} // namespace isoclass
