// Acceptance battery: one line per criterion, nonzero exit on any failure.
// Each criterion recomputes what it needs so the checks stay independent.

#include <chrono>
#include <exception>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "liederiv/bideriv.hpp"
#include "liederiv/twolocal.hpp"
#include "test_util.hpp"

using namespace liederiv;
using testutil::random_qmat;
using testutil::random_qvec;

namespace {

struct Checker {
  bool ok = true;
  std::ostringstream log;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      log << "    failed: " << what << "\n";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

std::vector<Vec> map_coords(const std::vector<LinearMap>& maps) {
  std::vector<Vec> out;
  out.reserve(maps.size());
  for (const auto& m : maps) {
    out.push_back(m.coords);
  }
  return out;
}

std::vector<Vec> map_coords(const std::vector<BilinearMap>& maps) {
  std::vector<Vec> out;
  out.reserve(maps.size());
  for (const auto& m : maps) {
    out.push_back(m.coords);
  }
  return out;
}

std::string at_n(const char* what, long long n) {
  return std::string(what) + " at n=" + std::to_string(n);
}

// Residuals of both defining biderivation conditions on every basis triple,
// evaluated directly through the bilinear/action interfaces. This is the
// independent route used to cross-check the assembled kernel systems.
Vec biderivation_residuals(const BilinearMap& g, const LieAlgebra& l,
                           const Module& v) {
  const std::size_t dl = l.dim();
  Vec out;
  for (std::size_t j = 0; j < dl; ++j) {
    for (std::size_t k = 0; k < dl; ++k) {
      for (std::size_t m = 0; m < dl; ++m) {
        // g([b_j,b_k], b_m) - b_j.g(b_k,b_m) + b_k.g(b_j,b_m)
        const Vec r1 = add_vec(
            g.value(Element{l.bracket_basis(j, k)}, basis_element(l, m)),
            sub_vec(v.act_basis(k, g.value_basis(j, m)),
                    v.act_basis(j, g.value_basis(k, m))));
        out.insert(out.end(), r1.begin(), r1.end());
        // g(b_j, [b_k,b_m]) - b_k.g(b_j,b_m) + b_m.g(b_j,b_k)
        const Vec r2 = add_vec(
            g.value(basis_element(l, j), Element{l.bracket_basis(k, m)}),
            sub_vec(v.act_basis(m, g.value_basis(j, k)),
                    v.act_basis(k, g.value_basis(j, m))));
        out.insert(out.end(), r2.begin(), r2.end());
      }
    }
  }
  return out;
}

// criterion 1: dim Der = dim Ider = n+1 with span equality for n = 1..30,
// both zero at n = 0, in under ten seconds.
void criterion1(Checker& c) {
  const auto start = std::chrono::steady_clock::now();
  {
    const Module v0 = build_Vn(0);
    c.require(der_space(v0.algebra(), v0).dim() == 0, "dim Der(V(0)) == 0");
    c.require(ider_space(v0.algebra(), v0).empty(), "dim Ider(V(0)) == 0");
  }
  for (long long n = 1; n <= 30; ++n) {
    const Module v = build_Vn(n);
    const LieAlgebra& l = v.algebra();
    const DerivationSpace ds = der_space(l, v);
    const std::vector<LinearMap> inner = ider_space(l, v);
    c.require(ds.dim() == static_cast<std::size_t>(n) + 1,
              at_n("dim Der == n+1", n));
    c.require(inner.size() == static_cast<std::size_t>(n) + 1,
              at_n("dim Ider == n+1", n));
    c.require(span_equal(map_coords(ds.basis), map_coords(inner),
                         l.dim() * v.dim()),
              at_n("Der == Ider as spans", n));
  }
  const double elapsed = seconds_since(start);
  c.require(elapsed < 10.0,
            "runtime " + std::to_string(elapsed) + "s under 10s");
}

// criterion 2: dim Bder(V(n)) = [n == 2], and the n = 2 generator is a
// nonzero rational multiple of the inner biderivation, in under thirty
// seconds.
void criterion2(Checker& c) {
  const auto start = std::chrono::steady_clock::now();
  for (long long n = 0; n <= 12; ++n) {
    const Module v = build_Vn(n);
    const LieAlgebra& l = v.algebra();
    const BiderivationSpace bs = bder_space(l, v);
    c.require(bs.dim() == (n == 2 ? 1u : 0u), at_n("dim Bder", n));
    if (n == 2) {
      c.require(bs.dim() == 1, "Bder(V(2)) has a single generator");
      if (bs.dim() == 1) {
        const auto lambda = match_inner(bs.basis[0], l, v);
        c.require(lambda.has_value(),
                  "generator proportional to the inner biderivation");
        if (lambda) {
          c.require(*lambda != 0, "proportionality factor is nonzero");
          c.require(bs.basis[0] == inner_biderivation(l, v, *lambda),
                    "generator reproduced from the factor");
        }
      }
    }
  }
  const double elapsed = seconds_since(start);
  c.require(elapsed < 30.0,
            "runtime " + std::to_string(elapsed) + "s under 30s");
}

// criterion 3: every graded component of Bder with weight outside the module
// weight set is zero, support enumerated exhaustively, n <= 12.
void criterion3(Checker& c) {
  for (long long n = 0; n <= 12; ++n) {
    const Module v = build_Vn(n);
    const LieAlgebra& l = v.algebra();
    const std::vector<long long> flat = module_basis_weights(v);
    const std::set<long long> module_weights(flat.begin(), flat.end());
    const auto graded = bder_graded_decomposition(bder_space(l, v));
    std::vector<long long> seen;
    for (const auto& [gamma, maps] : graded) {
      seen.push_back(gamma);
      if (!module_weights.count(gamma)) {
        c.require(maps.empty(), at_n("Bder component off the module weights",
                                     n) +
                                    " gamma=" + std::to_string(gamma));
      }
    }
    c.require(seen == blin_weight_support(l, v),
              at_n("support enumeration is exhaustive", n));
  }
}

// criterion 4: graded sums match the monolithic dimensions for Der and Bder
// (n <= 12), and the per-weight assembly of Bder agrees with the monolithic
// kernel as a span via the direct-residual oracle (n <= 8).
void criterion4(Checker& c) {
  for (long long n = 0; n <= 12; ++n) {
    const Module v = build_Vn(n);
    const LieAlgebra& l = v.algebra();
    const DerivationSpace ds = der_space(l, v);
    std::size_t der_total = 0;
    for (const auto& [gamma, maps] : der_graded_decomposition(ds)) {
      der_total += maps.size();
    }
    c.require(der_total == ds.dim(), at_n("graded Der dims sum to dim Der", n));
    const BiderivationSpace bs = bder_space(l, v);
    std::size_t bder_total = 0;
    for (const auto& [gamma, maps] : bder_graded_decomposition(bs)) {
      bder_total += maps.size();
    }
    c.require(bder_total == bs.dim(),
              at_n("graded Bder dims sum to dim Bder", n));
  }

  for (long long n = 0; n <= 8; ++n) {
    const Module v = build_Vn(n);
    const LieAlgebra& l = v.algebra();
    const BiderivationSpace bs = bder_space(l, v);
    const auto graded = bder_graded_decomposition(bs);
    std::vector<Vec> assembled;
    for (long long gamma : blin_weight_support(l, v)) {
      const AffineSubspace component = blin_weight_component(l, v, gamma);
      std::vector<Vec> residual_columns;
      for (const Vec& dir : component.directions()) {
        residual_columns.push_back(biderivation_residuals(
            BilinearMap::from_coords(l.dim(), v.dim(), dir), l, v));
      }
      std::size_t oracle_dim = 0;
      if (!residual_columns.empty()) {
        Matrix system(residual_columns[0].size(), residual_columns.size());
        for (std::size_t t = 0; t < residual_columns.size(); ++t) {
          system.set_column(t, residual_columns[t]);
        }
        for (const Vec& combo : kernel(system)) {
          ++oracle_dim;
          Vec flatmap = zero_vec(l.dim() * l.dim() * v.dim());
          for (std::size_t t = 0; t < combo.size(); ++t) {
            axpy(flatmap, combo[t], component.directions()[t]);
          }
          assembled.push_back(std::move(flatmap));
        }
      }
      c.require(oracle_dim == graded.at(gamma).size(),
                at_n("oracle dimension per weight", n) +
                    " gamma=" + std::to_string(gamma));
    }
    c.require(span_equal(assembled, map_coords(bs.basis),
                         l.dim() * l.dim() * v.dim()),
              at_n("assembled components span the monolithic kernel", n));
  }
}

// criterion 5: the symmetric part of every biderivation vanishes (n <= 12),
// the guarded coefficient relations force zero for every position with
// n >= 1, and the skew part is the inner biderivation exactly at n = 2.
void criterion5(Checker& c) {
  c.require(bder_space(build_sl2(), build_Vn(0)).dim() == 0,
            "n = 0 is settled directly: Bder(V(0)) == 0");
  for (long long n = 1; n <= 12; ++n) {
    const Module v = build_Vn(n);
    const LieAlgebra& l = v.algebra();
    const BiderivationSpace bs = bder_space(l, v);
    for (const auto& g : bs.basis) {
      const auto [sym, skew] = split_sym_skew(g);
      c.require(sym.is_zero(), at_n("symmetric part is zero", n));
      if (n == 2) {
        const auto lambda = match_inner(skew, l, v);
        c.require(lambda.has_value() && *lambda != 0,
                  "skew part is a nonzero inner biderivation at n=2");
      } else {
        c.require(skew.is_zero(), at_n("skew part is zero", n));
      }
    }
    for (long long i = 0; i <= n; ++i) {
      c.require(solve_graded_coefficients(n, i).component_forced_zero,
                at_n("coefficients forced to zero", n) +
                    " i=" + std::to_string(i));
    }
  }
}

// criterion 6: the theorem-1 certificate passes for n = 0..12 at 100 samples
// per stratum and seed 42, the step-3 line pattern shows up at n = 2, and the
// corrupted space fails; the positive sweep stays under sixty seconds.
void criterion6(Checker& c) {
  const auto start = std::chrono::steady_clock::now();
  for (long long n = 0; n <= 12; ++n) {
    const TwoLocalReport report = verify_theorem1(n, 100, 42);
    c.require(report.pass, at_n("certificate passes", n));
    c.require(report.cohomology_trivial, at_n("Der == Ider", n));
    std::size_t fixed_seen = 0;
    for (const auto& record : report.probes) {
      if (record.stratum == "fixed") {
        ++fixed_seen;
        c.require(record.forced_zero, at_n("fixed probe forced to zero", n));
      }
    }
    c.require(fixed_seen == 3, at_n("three fixed probes", n));
    c.require(report.samples_per_stratum.size() == 3,
              at_n("three sampling strata", n));
    for (const auto& [stratum, count] : report.samples_per_stratum) {
      c.require(count == 100, at_n("stratum sample count", n));
    }
  }
  const double elapsed = seconds_since(start);
  c.require(elapsed < 60.0,
            "runtime " + std::to_string(elapsed) + "s under 60s");

  {
    const Module v = build_Vn(2);
    const LieAlgebra& l = v.algebra();
    const DerivationSpace ds = der_space(l, v);
    const Element e = basis_element(l, 0);
    const Element h = basis_element(l, 1);
    const Element f = basis_element(l, 2);
    const Vec zero = zero_vec(3);
    Vec v1 = zero_vec(3);
    v1[1] = 1;
    Vec v2 = zero_vec(3);
    v2[2] = 1;
    const AffineSubspace from_e = constrained_values(f, {{e, zero}}, ds);
    const AffineSubspace from_h = constrained_values(f, {{h, zero}}, ds);
    c.require(from_e == AffineSubspace::linear_span(3, {v1}),
              "step-3 ingredient: values at f under D(e)=0 are the v_1 line");
    c.require(from_h == AffineSubspace::linear_span(3, {v2}),
              "step-3 ingredient: values at f under D(h)=0 are the v_2 line");
    c.require(intersect(from_e, from_h).is_zero_point(),
              "step-3 intersection forces the value at f to zero");
  }

  c.require(!verify_theorem1(2, 100, 42, true).pass,
            "corrupted derivation space fails the certificate");
}

// criterion 7: the property suites behind the oracles.
void criterion7(Checker& c) {
  const LieAlgebra l = build_sl2();
  c.require(check_antisymmetry(l), "sl(2) table is antisymmetric");
  c.require(check_jacobi(l), "sl(2) table satisfies Jacobi");
  for (long long n = 0; n <= 12; ++n) {
    c.require(check_module(l, build_Vn(n)), at_n("V(n) module axiom", n));
  }
  c.require(check_module(l, adjoint_module(l)), "adjoint module axiom");
  c.require(check_module(l, direct_sum(build_Vn(2), build_Vn(0))),
            "direct sum module axiom");

  for (long long n = 0; n <= 8; ++n) {
    const Module v = build_Vn(n);
    for (const auto& d : der_space(l, v).basis) {
      c.require(is_derivation(d, l, v),
                at_n("derivation identity on the Der basis", n));
    }
  }

  {
    const Module v = build_Vn(2);
    const BiderivationSpace bs = bder_space(l, v);
    for (const auto& g : bs.basis) {
      for (std::size_t j = 0; j < 3; ++j) {
        c.require(is_derivation(g.left_slice(j), l, v),
                  "left slice lands in Der");
        c.require(is_derivation(g.right_slice(j), l, v),
                  "right slice lands in Der");
      }
    }
  }

  for (long long n = 1; n <= 8; ++n) {
    const Module v = build_Vn(n);
    const std::size_t dv = v.dim();
    SplitMix64 rng(9000 + static_cast<std::uint64_t>(n));
    for (int family = 0; family < 50; ++family) {
      const std::size_t count = 1 + rng.next() % dv;
      std::vector<Vec> vectors;
      std::vector<Vec> images;
      for (std::size_t t = 0; t < count; ++t) {
        vectors.push_back(random_qvec(rng, dv));
        images.push_back(inner_derivation(v, vectors.back()).coords);
      }
      c.require(span_rank(vectors, dv) == span_rank(images, 3 * dv),
                at_n("inner-map basis correspondence", n));
    }
  }

  SplitMix64 rng(4242);
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = 1 + rng.next() % 6;
    const std::size_t cols = 1 + rng.next() % 6;
    const Matrix m = random_qmat(rng, rows, cols);
    const std::vector<Vec> null_basis = kernel(m);
    c.require(rank(m) + null_basis.size() == cols, "rank-nullity");
    for (const Vec& k : null_basis) {
      c.require(is_zero_vec(m.apply(k)), "kernel membership");
    }
  }
}

}  // namespace

int main() {
  using Criterion = void (*)(Checker&);
  const std::vector<std::pair<std::string, Criterion>> criteria = {
      {"derivation dimensions and Der = Ider, n <= 30", criterion1},
      {"biderivation classification, n <= 12", criterion2},
      {"graded support of Bder", criterion3},
      {"graded completeness and assembly oracle", criterion4},
      {"symmetric/skew pipeline and coefficient relations", criterion5},
      {"two-local certificate with negative control", criterion6},
      {"algebraic property suites", criterion7},
  };

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Checker checker;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[k].second(checker);
    } catch (const std::exception& e) {
      checker.ok = false;
      checker.log << "    exception: " << e.what() << "\n";
    }
    const double elapsed = seconds_since(start);
    std::cout << "[acceptance] criterion " << (k + 1) << ": "
              << (checker.ok ? "PASS" : "FAIL") << " — " << criteria[k].first
              << " (" << elapsed << "s)\n";
    if (!checker.ok) {
      std::cout << checker.log.str();
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}
