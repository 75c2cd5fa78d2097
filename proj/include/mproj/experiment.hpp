#pragma once

// Table-row pipeline: snapshots -> POD -> DEIM -> errors and bounds.

#include "mproj/bounds.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mproj {

enum class ExampleKind { One, Two, External };
enum class OutputFormat { Csv, Json };

class ConfigError : public Error {
 public:
  using Error::Error;
};

struct ExperimentConfig {
  ExampleKind example = ExampleKind::One;
  int nx = 30;
  int ny = 30;  ///< Example 1 only
  int n_train = 225;
  int n_test = 400;
  std::vector<int> m_list;
  std::string output;
  OutputFormat format = OutputFormat::Csv;
  std::uint64_t seed = 0;
  /// Parameter interval; defaults to the example's domain when unset.
  std::optional<double> mu_lo;
  std::optional<double> mu_hi;
  std::string train_file;  ///< External only
  std::string test_file;   ///< External only
};

/// Ambient dimension n implied by the config (reads the header of the
/// training file for external problems).
Index config_dimension(const ExperimentConfig& cfg);

/// Throws ConfigError on any violated invariant. Cheap: no snapshots built.
void validate(const ExperimentConfig& cfg);

/// Preset reproducing one of the four benchmark tables (1..4).
ExperimentConfig table_preset(int table);

struct ExperimentRow {
  BoundReport report;
  bool ok = true;
  std::string failure;
};

/// Runs every m in cfg.m_list; a row whose m cannot be realized (rank
/// deficiency, singular mask) is marked failed and the run continues.
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg);

inline constexpr const char* kTableHeader =
    "m,avg_err,b_thm1,b_thm2,b_qdeim,sigma_min,n,N,runtime_ms";

/// When include_timing is false runtime_ms is written as 0, making output
/// bit-reproducible.
std::string to_csv(const std::vector<ExperimentRow>& rows,
                   bool include_timing = true);
nlohmann::json to_json(const std::vector<ExperimentRow>& rows,
                       bool include_timing = true);
std::vector<ExperimentRow> rows_from_json(const nlohmann::json& j);

/// Writes rows to path ("-" for stdout). Throws on an empty row list or an
/// unwritable path.
void emit_table(const std::vector<ExperimentRow>& rows, OutputFormat format,
                const std::string& path, bool include_timing = true);

}  // namespace mproj
