#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rispla/mc.hpp"
#include "rispla/optim.hpp"

namespace rispla::cli {

inline constexpr const char* kSweepHeader = "lq_db,threshold,analytical,empirical,half_width_95,n_trials";
inline constexpr const char* kRocHeader = "epsilon,pfa,pd";
inline constexpr const char* kTraceHeader = "coordinate,value,pmd";

/// Shortest round-trip decimal form; NaN and absent values become empty fields.
std::string format_number(std::optional<double> v);

struct SweepRow {
  double lq_db;
  double threshold;
  std::optional<double> analytical;
  mc::ErrorEstimate empirical;
};

std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string roc_csv(const mc::RocCurve& curve);
std::string trace_csv(const std::vector<optim::TracePoint>& trace);

/// Writes `contents` to `path`, throwing std::runtime_error on failure.
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace rispla::cli
