// Command line front end: der / bider / twolocal / sweep / load.
// Exit codes: 0 all requested checks pass, 1 a check failed, 2 usage or
// runtime error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "liederiv/bideriv.hpp"
#include "liederiv/errors.hpp"
#include "liederiv/fixture.hpp"
#include "liederiv/report.hpp"

namespace {

using nlohmann::json;
using namespace liederiv;

int cmd_der(long long n) {
  const LieAlgebra l = build_sl2();
  const Module v = build_Vn(n);
  const DerivationSpace ds = der_space(l, v);
  const std::vector<LinearMap> inner = ider_space(l, v);

  std::vector<Vec> der_coords;
  std::vector<Vec> ider_coords;
  for (const auto& d : ds.basis) {
    der_coords.push_back(d.coords);
  }
  for (const auto& d : inner) {
    ider_coords.push_back(d.coords);
  }
  bool all_inner = span_equal(der_coords, ider_coords, l.dim() * v.dim());
  for (const auto& d : ds.basis) {
    if (!is_inner(d, l, v)) {
      all_inner = false;
    }
  }

  json weights = json::object();
  std::size_t graded_total = 0;
  for (const auto& [gamma, maps] : der_graded_decomposition(ds)) {
    graded_total += maps.size();
    if (!maps.empty()) {
      weights[std::to_string(gamma)] = maps.size();
    }
  }

  json out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = "der";
  out["n"] = n;
  out["dim_der"] = ds.basis.size();
  out["dim_ider"] = inner.size();
  out["all_inner"] = all_inner;
  out["der_weights"] = std::move(weights);
  std::cout << out.dump(2) << "\n";
  return (all_inner && graded_total == ds.basis.size()) ? 0 : 1;
}

int cmd_bider(long long n) {
  const LieAlgebra l = build_sl2();
  const Module v = build_Vn(n);
  const BiderivationSpace bs = bder_space(l, v);

  json weights = json::object();
  std::size_t graded_total = 0;
  for (const auto& [gamma, maps] : bder_graded_decomposition(bs)) {
    graded_total += maps.size();
    if (!maps.empty()) {
      weights[std::to_string(gamma)] = maps.size();
    }
  }

  bool sym_part_zero = true;
  bool skew_matches_inner = true;
  std::optional<Rational> lambda;
  for (const auto& g : bs.basis) {
    const auto [sym, skew] = split_sym_skew(g);
    if (!sym.is_zero()) {
      sym_part_zero = false;
    }
    try {
      const auto matched = match_inner(skew, l, v);
      if (matched) {
        lambda = matched;
      } else {
        skew_matches_inner = false;
      }
    } catch (const UnsupportedError&) {
      if (!skew.is_zero()) {
        skew_matches_inner = false;
      }
    }
  }

  json out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = "bider";
  out["n"] = n;
  out["dim_bder"] = bs.basis.size();
  out["bder_weights"] = std::move(weights);
  out["sym_part_zero"] = sym_part_zero;
  out["skew_matches_inner"] = skew_matches_inner;
  if (lambda) {
    out["lambda"] = format_rational(*lambda);
  }
  std::cout << out.dump(2) << "\n";
  const bool ok =
      sym_part_zero && skew_matches_inner && graded_total == bs.basis.size();
  return ok ? 0 : 1;
}

int cmd_twolocal(long long n, std::size_t samples, std::uint64_t seed,
                 bool corrupt) {
  const TwoLocalReport report = verify_theorem1(n, samples, seed, corrupt);
  std::cout << two_local_report_to_json(report).dump(2) << "\n";
  return (report.pass && report.cohomology_trivial) ? 0 : 1;
}

int cmd_sweep(Config config, const std::optional<std::string>& out_path) {
  const std::vector<SweepRow> rows = run_sweep(config);
  const std::string rendered = render_report(rows, config);
  if (out_path) {
    std::ofstream out(*out_path, std::ios::binary);
    if (!out) {
      throw IoError("cannot write report: " + *out_path);
    }
    out << rendered;
  } else {
    std::cout << rendered;
  }
  for (const auto& row : rows) {
    if (!row.all_checks_pass()) {
      return 1;
    }
  }
  return 0;
}

int cmd_load(const std::string& path) {
  const Fixture fixture = load_fixture(path);
  const LieAlgebra& l = fixture.algebra;

  json out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = "load";
  bool ok = true;

  json algebra;
  algebra["dim"] = l.dim();
  const bool antisymmetric = check_antisymmetry(l);
  const bool jacobi = check_jacobi(l);
  algebra["antisymmetry"] = antisymmetric;
  algebra["jacobi"] = jacobi;
  algebra["has_weights"] = l.has_basis_weights();
  ok = ok && antisymmetric && jacobi;
  out["algebra"] = std::move(algebra);

  if (fixture.module) {
    const Module& v = *fixture.module;
    json module;
    module["dim"] = v.dim();
    const bool axiom = check_module(l, v);
    module["module_axiom"] = axiom;
    ok = ok && axiom;
    module["trivial_submodule_dim"] = trivial_submodule(l, v).dim();
    if (l.cartan_index()) {
      try {
        json weight_dims = json::object();
        for (const auto& [weight, indices] : weight_spaces(v)) {
          weight_dims[std::to_string(weight)] = indices.size();
        }
        module["weights"] = std::move(weight_dims);
      } catch (const UnsupportedError&) {
        module["weights"] = nullptr;
      }
    }
    out["module"] = std::move(module);
  }

  out["valid"] = ok;
  std::cout << out.dump(2) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact derivation and biderivation computations for sl(2) "
               "modules"};
  app.require_subcommand(1);

  long long n = 0;
  auto* der = app.add_subcommand("der", "Derivation space of sl(2) on V(n)");
  der->add_option("--n", n, "Highest weight n")->required();

  auto* bider =
      app.add_subcommand("bider", "Biderivation space of sl(2) on V(n)");
  bider->add_option("--n", n, "Highest weight n")->required();

  std::size_t samples = 100;
  std::uint64_t seed = 42;
  bool corrupt = false;
  auto* twolocal = app.add_subcommand(
      "twolocal", "Two-local derivation certificate for sl(2) on V(n)");
  twolocal->add_option("--n", n, "Highest weight n")->required();
  twolocal->add_option("--samples", samples, "Samples per stratum");
  twolocal->add_option("--seed", seed, "PRNG seed");
  twolocal->add_flag("--corrupt-der", corrupt,
                     "Negative control: enlarge the derivation space by a "
                     "non-derivation and expect failure");

  Config config;
  std::optional<std::string> out_path;
  std::optional<std::string> cache_flag;
  auto* sweep = app.add_subcommand("sweep", "Full check battery for n = 0..n_max");
  sweep->add_option("--n-max", config.n_max, "Largest n (default 12)");
  sweep->add_option("--samples", config.samples_per_stratum,
                    "Samples per stratum for the two-local certificate");
  sweep->add_option("--seed", config.seed, "PRNG seed (default 42)");
  sweep->add_option("--format", config.output_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  sweep->add_option("--out", out_path, "Output file (stdout when omitted)");
  sweep->add_option("--cache", cache_flag, "Cache directory for sweep rows");

  std::string fixture_path;
  auto* load = app.add_subcommand("load", "Validate a JSON fixture");
  load->add_option("--fixture", fixture_path, "Fixture file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (der->parsed()) {
      return cmd_der(n);
    }
    if (bider->parsed()) {
      return cmd_bider(n);
    }
    if (twolocal->parsed()) {
      return cmd_twolocal(n, samples, seed, corrupt);
    }
    if (sweep->parsed()) {
      // The environment variable takes precedence over the flag.
      if (const char* env = std::getenv("LIEDERIV_CACHE")) {
        config.cache_dir = std::string(env);
      } else if (cache_flag) {
        config.cache_dir = cache_flag;
      }
      return cmd_sweep(config, out_path);
    }
    if (load->parsed()) {
      config.fixture_path = fixture_path;
      return cmd_load(fixture_path);
    }
  } catch (const liederiv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
