#include "liederiv/report.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "liederiv/bideriv.hpp"
#include "liederiv/errors.hpp"

namespace liederiv {

namespace {

using nlohmann::json;

json weights_to_json(const std::map<long long, std::size_t>& weights) {
  json out = json::object();
  for (const auto& [weight, dim] : weights) {
    out[std::to_string(weight)] = dim;
  }
  return out;
}

std::map<long long, std::size_t> weights_from_json(const json& j) {
  std::map<long long, std::size_t> out;
  for (const auto& [key, value] : j.items()) {
    out[std::stoll(key)] = value.get<std::size_t>();
  }
  return out;
}

std::string cache_file_name(long long n, std::size_t samples,
                            std::uint64_t seed) {
  std::ostringstream name;
  name << "row_n" << n << "_s" << samples << "_seed" << seed << ".json";
  return name.str();
}

}  // namespace

bool SweepRow::all_checks_pass() const {
  std::size_t graded_total = 0;
  for (const auto& [weight, dim] : bder_weights) {
    graded_total += dim;
  }
  return all_inner && dim_der == dim_ider && graded_total == dim_bder &&
         sym_part_zero && skew_matches_inner && thm1_pass;
}

SweepRow compute_sweep_row(long long n, std::size_t samples_per_stratum,
                           std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  SweepRow row;
  row.n = n;

  const LieAlgebra l = build_sl2();
  const Module v = build_Vn(n);
  const std::size_t hom_ambient = l.dim() * v.dim();

  const DerivationSpace ds = der_space(l, v);
  const std::vector<LinearMap> inner = ider_space(l, v);
  row.dim_der = ds.basis.size();
  row.dim_ider = inner.size();
  {
    std::vector<Vec> der_coords;
    std::vector<Vec> ider_coords;
    for (const auto& d : ds.basis) {
      der_coords.push_back(d.coords);
    }
    for (const auto& d : inner) {
      ider_coords.push_back(d.coords);
    }
    row.all_inner = span_equal(der_coords, ider_coords, hom_ambient);
    for (const auto& d : ds.basis) {
      if (!is_inner(d, l, v)) {
        row.all_inner = false;
      }
    }
  }

  const BiderivationSpace bs = bder_space(l, v);
  row.dim_bder = bs.basis.size();
  for (const auto& [gamma, maps] : bder_graded_decomposition(bs)) {
    if (!maps.empty()) {
      row.bder_weights[gamma] = maps.size();
    }
  }

  row.sym_part_zero = true;
  row.skew_matches_inner = true;
  for (const auto& g : bs.basis) {
    const auto [sym, skew] = split_sym_skew(g);
    if (!sym.is_zero()) {
      row.sym_part_zero = false;
    }
    try {
      if (!match_inner(skew, l, v)) {
        row.skew_matches_inner = false;
      }
    } catch (const UnsupportedError&) {
      // No inner biderivation exists, so a nonzero skew part cannot match.
      if (!skew.is_zero()) {
        row.skew_matches_inner = false;
      }
    }
  }

  const TwoLocalReport thm1 = verify_theorem1(n, samples_per_stratum, seed);
  row.thm1_pass = thm1.pass && thm1.cohomology_trivial;

  const auto elapsed = std::chrono::steady_clock::now() - start;
  row.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  return row;
}

json row_to_json(const SweepRow& row) {
  json j;
  j["n"] = row.n;
  j["dim_der"] = row.dim_der;
  j["dim_ider"] = row.dim_ider;
  j["all_inner"] = row.all_inner;
  j["dim_bder"] = row.dim_bder;
  j["bder_weights"] = weights_to_json(row.bder_weights);
  j["sym_part_zero"] = row.sym_part_zero;
  j["skew_matches_inner"] = row.skew_matches_inner;
  j["thm1_pass"] = row.thm1_pass;
  j["elapsed_ms"] = row.elapsed_ms;
  return j;
}

SweepRow row_from_json(const json& j) {
  try {
    SweepRow row;
    row.n = j.at("n").get<long long>();
    row.dim_der = j.at("dim_der").get<std::size_t>();
    row.dim_ider = j.at("dim_ider").get<std::size_t>();
    row.all_inner = j.at("all_inner").get<bool>();
    row.dim_bder = j.at("dim_bder").get<std::size_t>();
    row.bder_weights = weights_from_json(j.at("bder_weights"));
    row.sym_part_zero = j.at("sym_part_zero").get<bool>();
    row.skew_matches_inner = j.at("skew_matches_inner").get<bool>();
    row.thm1_pass = j.at("thm1_pass").get<bool>();
    row.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    return row;
  } catch (const std::exception& e) {
    throw InputError(std::string("malformed sweep row: ") + e.what());
  }
}

json config_to_json(const Config& config) {
  json j;
  j["n_max"] = config.n_max;
  j["samples_per_stratum"] = config.samples_per_stratum;
  j["seed"] = config.seed;
  j["output_format"] = config.output_format;
  j["cache_dir"] = config.cache_dir ? json(*config.cache_dir) : json(nullptr);
  j["fixture_path"] =
      config.fixture_path ? json(*config.fixture_path) : json(nullptr);
  return j;
}

std::string csv_header() {
  return "n,dim_der,dim_ider,all_inner,dim_bder,bder_weights,sym_part_zero,"
         "skew_matches_inner,thm1_pass,elapsed_ms";
}

namespace {

std::string csv_quote(const std::string& raw) {
  std::string out = "\"";
  for (char c : raw) {
    if (c == '"') {
      out += "\"\"";
    } else {
      out += c;
    }
  }
  out += "\"";
  return out;
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string row_to_csv(const SweepRow& row) {
  std::ostringstream line;
  line << row.n << ',' << row.dim_der << ',' << row.dim_ider << ','
       << bool_text(row.all_inner) << ',' << row.dim_bder << ','
       << csv_quote(weights_to_json(row.bder_weights).dump()) << ','
       << bool_text(row.sym_part_zero) << ','
       << bool_text(row.skew_matches_inner) << ','
       << bool_text(row.thm1_pass) << ',' << row.elapsed_ms;
  return line.str();
}

std::string render_report(const std::vector<SweepRow>& rows,
                          const Config& config) {
  if (config.output_format == "csv") {
    std::ostringstream out;
    out << csv_header() << '\n';
    for (const auto& row : rows) {
      out << row_to_csv(row) << '\n';
    }
    return out.str();
  }
  if (config.output_format != "json") {
    throw InputError("unknown output format: " + config.output_format);
  }
  json j;
  j["schema_version"] = kSchemaVersion;
  json row_array = json::array();
  for (const auto& row : rows) {
    row_array.push_back(row_to_json(row));
  }
  j["rows"] = std::move(row_array);
  j["config"] = config_to_json(config);
  return j.dump(2) + "\n";
}

std::optional<SweepRow> cache_lookup(const std::string& cache_dir, long long n,
                                     std::size_t samples_per_stratum,
                                     std::uint64_t seed) {
  const std::filesystem::path path =
      std::filesystem::path(cache_dir) /
      cache_file_name(n, samples_per_stratum, seed);
  std::ifstream in(path);
  if (!in) {
    return std::nullopt;
  }
  try {
    json j;
    in >> j;
    if (j.value("schema_version", -1) != kSchemaVersion ||
        j.value("samples_per_stratum", std::size_t(0)) !=
            samples_per_stratum ||
        j.value("seed", std::uint64_t(0)) != seed) {
      return std::nullopt;
    }
    SweepRow row = row_from_json(j.at("row"));
    if (row.n != n) {
      return std::nullopt;
    }
    return row;
  } catch (const std::exception&) {
    // Unreadable cache entries are treated as misses and recomputed.
    return std::nullopt;
  }
}

void cache_store(const std::string& cache_dir, const SweepRow& row,
                 std::size_t samples_per_stratum, std::uint64_t seed) {
  std::error_code ec;
  std::filesystem::create_directories(cache_dir, ec);
  const std::filesystem::path path =
      std::filesystem::path(cache_dir) /
      cache_file_name(row.n, samples_per_stratum, seed);
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot write cache entry: " + path.string());
  }
  json j;
  j["schema_version"] = kSchemaVersion;
  j["samples_per_stratum"] = samples_per_stratum;
  j["seed"] = seed;
  j["row"] = row_to_json(row);
  out << j.dump(2) << '\n';
}

std::vector<SweepRow> run_sweep(const Config& config) {
  if (config.n_max < 0) {
    throw InputError("sweep needs n_max >= 0");
  }
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(config.n_max) + 1);
  for (long long n = 0; n <= config.n_max; ++n) {
    std::optional<SweepRow> cached;
    if (config.cache_dir) {
      cached = cache_lookup(*config.cache_dir, n, config.samples_per_stratum,
                            config.seed);
    }
    if (cached) {
      rows.push_back(*cached);
      continue;
    }
    SweepRow row =
        compute_sweep_row(n, config.samples_per_stratum, config.seed);
    if (config.cache_dir) {
      cache_store(*config.cache_dir, row, config.samples_per_stratum,
                  config.seed);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json two_local_report_to_json(const TwoLocalReport& report) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = report.n;
  j["pass"] = report.pass;
  j["trivial_module"] = report.trivial_module;
  j["cohomology_trivial"] = report.cohomology_trivial;
  j["seed"] = report.seed;
  j["stratum_seeds"] = json::object();
  for (const auto& [name, value] : report.stratum_seeds) {
    j["stratum_seeds"][name] = value;
  }
  j["samples_per_stratum"] = json::object();
  for (const auto& [name, value] : report.samples_per_stratum) {
    j["samples_per_stratum"][name] = value;
  }
  json probes = json::array();
  for (const auto& record : report.probes) {
    json p;
    p["stratum"] = record.stratum;
    json coords = json::array();
    for (const auto& c : record.probe) {
      coords.push_back(format_rational(c));
    }
    p["probe"] = std::move(coords);
    p["value_set_empty"] = record.value_set_empty;
    p["value_set_dim"] = record.value_set_dim;
    p["forced_zero"] = record.forced_zero;
    probes.push_back(std::move(p));
  }
  j["probes"] = std::move(probes);
  return j;
}

}  // namespace liederiv
