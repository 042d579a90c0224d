#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "asda/config.hpp"
#include "asda/metrics.hpp"

namespace asda {

enum class SweepAxis : std::uint8_t
{
  NodeCount,
  MisbehavingRatio,
  SimTime,
  AttackInterval,
};

std::string_view to_string (SweepAxis axis);
std::optional<SweepAxis> parse_axis (std::string_view text);

/// Sets the field an axis controls.
void apply_axis (SimConfig &config, SweepAxis axis, double value);

struct SweepSpec
{
  SweepAxis axis = SweepAxis::MisbehavingRatio;
  std::vector<double> values;
  std::uint32_t replications = 1;
  SimConfig base;

  /// Throws ConfigError unless values are non-empty and strictly increasing
  /// and replications >= 1.
  void validate () const;
};

/// Misbehaving-ratio grid 0, 0.05, 0.15, ..., 0.75.
std::vector<double> default_ratio_grid ();

/// Named presets: ratio, nodes, time, interval, baseline.
std::optional<SweepSpec> scenario (std::string_view name);

/// Result of a config file: the run parameters and, when the file names an
/// axis, a sweep over them.
struct ConfigFile
{
  SimConfig config;
  std::optional<SweepSpec> sweep;
};

/// Assigns one `key = value` pair; throws ConfigError naming the key.
void set_config_value (SimConfig &config, std::string_view key, std::string_view value);

/// Flat `key = value` lines, `#` comments. Errors read "line N: key: message".
ConfigFile parse_config_text (std::string_view text);
ConfigFile parse_config (const std::filesystem::path &path);

enum class DefenseSelection : std::uint8_t
{
  On,
  Off,
  Both,
};

std::optional<DefenseSelection> parse_defense_selection (std::string_view text);

struct ResultRow
{
  std::string axis;
  double value = 0.0;
  std::uint64_t seed = 0;
  bool defense = true;
  double throughput_kbps = 0.0;
  double pdr_pct = 0.0;
  double lifetime_s = 0.0;
  double residual_pct = 0.0;
  double dr_pct = 0.0;
  double tpr_pct = 0.0;
  double tnr_pct = 0.0;
  double fpr_pct = 0.0;
  double fnr_pct = 0.0;
};

/// Folds one run into a row; undefined metrics (zero-length run, no
/// traffic) become NaN.
ResultRow make_row (std::string_view axis, double value, std::uint64_t seed, bool defense,
                    const RunMetrics &metrics);

/// A sweep cell failed; the message names axis, value, seed, and defense flag.
class CellError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Rows ordered by value, then seed (base seed + replication), then defense
/// (on before off). `jobs` > 1 runs cells on worker threads; the order of the
/// result does not depend on it.
std::vector<ResultRow> run_sweep (const SweepSpec &spec,
                                  DefenseSelection defense = DefenseSelection::Both,
                                  unsigned jobs = 1);

inline constexpr std::string_view kCsvHeader
    = "axis,value,seed,defense,throughput_kbps,pdr_pct,lifetime_s,residual_pct,dr_pct,tpr_pct,"
      "tnr_pct,fpr_pct,fnr_pct";

std::string format_csv (const std::vector<ResultRow> &rows);
/// Throws std::runtime_error when the file cannot be written.
void write_csv (const std::vector<ResultRow> &rows, const std::filesystem::path &path);
/// Throws std::invalid_argument on a malformed document.
std::vector<ResultRow> parse_csv (std::string_view text);
std::vector<ResultRow> read_csv (const std::filesystem::path &path);

/// Per (value, defense) means across seeds; NaN entries are skipped.
struct SummaryRow
{
  std::string axis;
  double value = 0.0;
  bool defense = true;
  std::uint32_t runs = 0;
  double throughput_kbps = 0.0;
  double pdr_pct = 0.0;
  double lifetime_s = 0.0;
  double residual_pct = 0.0;
  double dr_pct = 0.0;
  double tpr_pct = 0.0;
  double tnr_pct = 0.0;
  double fpr_pct = 0.0;
  double fnr_pct = 0.0;
};

std::vector<SummaryRow> summarize (const std::vector<ResultRow> &rows);
std::string format_summary_csv (const std::vector<SummaryRow> &rows);
void write_summary_csv (const std::vector<SummaryRow> &rows, const std::filesystem::path &path);

/// results.csv -> results_summary.csv
std::filesystem::path summary_path (const std::filesystem::path &csv_path);

} // namespace asda
