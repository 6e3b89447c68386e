#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "liederiv/twolocal.hpp"

namespace liederiv {

inline constexpr int kSchemaVersion = 1;

/// One line of the sweep: every check the library runs for a single n.
struct SweepRow {
  long long n = 0;
  std::size_t dim_der = 0;
  std::size_t dim_ider = 0;
  bool all_inner = false;
  std::size_t dim_bder = 0;
  /// Nonzero graded dimensions of Bder, keyed by weight.
  std::map<long long, std::size_t> bder_weights;
  bool sym_part_zero = false;
  bool skew_matches_inner = false;
  bool thm1_pass = false;
  std::int64_t elapsed_ms = 0;

  bool operator==(const SweepRow&) const = default;

  /// Every per-n check folded into one flag.
  bool all_checks_pass() const;
};

struct Config {
  long long n_max = 12;
  std::size_t samples_per_stratum = 100;
  std::uint64_t seed = 42;
  std::string output_format = "json";
  std::optional<std::string> cache_dir;
  std::optional<std::string> fixture_path;
};

/// Runs the full battery for one n. Deterministic for fixed (n, samples,
/// seed).
SweepRow compute_sweep_row(long long n, std::size_t samples_per_stratum,
                           std::uint64_t seed);

nlohmann::json row_to_json(const SweepRow& row);
/// Inverse of row_to_json; throws InputError on malformed data.
SweepRow row_from_json(const nlohmann::json& j);

nlohmann::json config_to_json(const Config& config);

/// Column order: n, dim_der, dim_ider, all_inner, dim_bder, bder_weights,
/// sym_part_zero, skew_matches_inner, thm1_pass, elapsed_ms. The weights map
/// is embedded as a quoted JSON object.
std::string csv_header();
std::string row_to_csv(const SweepRow& row);

/// Whole-report serialization: {"schema_version":1, "rows":[...],
/// "config":{...}} for json, header plus one line per row for csv.
std::string render_report(const std::vector<SweepRow>& rows,
                          const Config& config);

/// Cached row for (n, samples, seed), when the cache holds a matching entry
/// of the current schema version. Reruns served from cache are byte-identical
/// (elapsed_ms included).
std::optional<SweepRow> cache_lookup(const std::string& cache_dir, long long n,
                                     std::size_t samples_per_stratum,
                                     std::uint64_t seed);

void cache_store(const std::string& cache_dir, const SweepRow& row,
                 std::size_t samples_per_stratum, std::uint64_t seed);

/// All rows n = 0..config.n_max, through the cache when one is configured.
std::vector<SweepRow> run_sweep(const Config& config);

nlohmann::json two_local_report_to_json(const TwoLocalReport& report);

}  // namespace liederiv
