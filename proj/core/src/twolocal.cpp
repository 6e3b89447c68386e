#include "liederiv/twolocal.hpp"

#include <algorithm>

#include "liederiv/errors.hpp"
#include "liederiv/prng.hpp"

namespace liederiv {

namespace {

// Column t = basis[t](x); maps derivation coefficients to values at x.
Matrix evaluation_matrix(const DerivationSpace& ds, const Element& x) {
  const std::size_t dv = ds.module.dim();
  Matrix m(dv, ds.basis.size());
  for (std::size_t t = 0; t < ds.basis.size(); ++t) {
    m.set_column(t, ds.basis[t].value(x));
  }
  return m;
}

// { c : sum_t c_t basis[t](y) = w for every anchor (y, w) } in coefficient
// space.
AffineSubspace feasible_coefficients(const AnchorSet& anchors,
                                     const DerivationSpace& ds) {
  const std::size_t dv = ds.module.dim();
  std::vector<Matrix> blocks;
  Vec rhs;
  blocks.reserve(anchors.size());
  for (const auto& anchor : anchors) {
    if (anchor.at.coordinates.size() != ds.module.algebra().dim() ||
        anchor.value.size() != dv) {
      throw InputError("anchor dimension mismatch");
    }
    blocks.push_back(evaluation_matrix(ds, anchor.at));
    rhs.insert(rhs.end(), anchor.value.begin(), anchor.value.end());
  }
  if (blocks.empty()) {
    // No constraints: the whole coefficient space.
    return AffineSubspace::linear_span(
        ds.basis.size(),
        kernel(Matrix(0, ds.basis.size())));
  }
  return solve_affine(Matrix::vstack(blocks, ds.basis.size()), rhs);
}

std::size_t basis_index_of(const Element& x, const DerivationSpace& ds,
                           const char* what) {
  const std::size_t dl = ds.module.algebra().dim();
  for (std::size_t j = 0; j < dl; ++j) {
    if (x == basis_element(ds.module.algebra(), j)) {
      return j;
    }
  }
  throw InputError(std::string(what) +
                   ": normalization entries must be basis elements");
}

struct Step3Data {
  AffineSubspace set;
  Vec anchor_value;
  std::size_t remaining_index = 0;
};

// The step-3 value set at the basis element outside the normalization pair:
// the two single-anchor value sets there, intersected.
Step3Data step3_intersection(const DerivationSpace& ds,
                             const Element& norm_first,
                             const Element& norm_second) {
  const std::size_t dl = ds.module.algebra().dim();
  const std::size_t first = basis_index_of(norm_first, ds, "forced_value_set");
  const std::size_t second =
      basis_index_of(norm_second, ds, "forced_value_set");
  if (first == second) {
    throw InputError("forced_value_set: normalization pair must be distinct");
  }
  std::size_t remaining = dl;
  for (std::size_t j = 0; j < dl; ++j) {
    if (j != first && j != second) {
      remaining = j;
      break;
    }
  }
  if (remaining == dl) {
    throw InputError("forced_value_set: algebra has no third basis element");
  }
  const Vec zero = zero_vec(ds.module.dim());
  const Element probe = basis_element(ds.module.algebra(), remaining);
  const AffineSubspace from_second =
      constrained_values(probe, {{norm_second, zero}}, ds);
  const AffineSubspace from_first =
      constrained_values(probe, {{norm_first, zero}}, ds);
  Step3Data data{intersect(from_second, from_first), zero, remaining};
  if (!data.set.empty() && !data.set.is_zero_point()) {
    data.anchor_value = data.set.point();
  }
  return data;
}

}  // namespace

AffineSubspace constrained_values(const Element& x, const AnchorSet& anchors,
                                  const DerivationSpace& ds) {
  const AffineSubspace feasible = feasible_coefficients(anchors, ds);
  return feasible.image(evaluation_matrix(ds, x));
}

AffineSubspace forced_value_set(
    const Element& x, const DerivationSpace& ds,
    const std::pair<Element, Element>& normalization) {
  const Step3Data step3 =
      step3_intersection(ds, normalization.first, normalization.second);
  const Vec zero = zero_vec(ds.module.dim());
  const Element remaining =
      basis_element(ds.module.algebra(), step3.remaining_index);
  AffineSubspace out =
      constrained_values(x, {{normalization.second, zero}}, ds);
  out = intersect(out,
                  constrained_values(x, {{normalization.first, zero}}, ds));
  return intersect(
      out, constrained_values(x, {{remaining, step3.anchor_value}}, ds));
}

PairwiseResult pairwise_compatible(const AnchorSet& assignment,
                                   const DerivationSpace& ds) {
  PairwiseResult result;
  result.compatible = true;
  for (std::size_t a = 0; a < assignment.size(); ++a) {
    for (std::size_t b = a + 1; b < assignment.size(); ++b) {
      const AffineSubspace joint =
          feasible_coefficients({assignment[a], assignment[b]}, ds);
      PairWitness witness{a, b, std::nullopt};
      if (joint.empty()) {
        result.compatible = false;
      } else {
        witness.witness = joint.point();
      }
      result.witnesses.push_back(std::move(witness));
    }
  }
  return result;
}

AffineSubspace global_extension(const AnchorSet& assignment,
                                const DerivationSpace& ds) {
  return feasible_coefficients(assignment, ds);
}

DerivationSpace corrupt_derivation_space(const DerivationSpace& ds) {
  const std::size_t dl = ds.module.algebra().dim();
  const std::size_t dv = ds.module.dim();
  for (std::size_t j = dl; j-- > 0;) {
    for (std::size_t i = 0; i < dv; ++i) {
      LinearMap unit = LinearMap::zero(dl, dv);
      unit.coords[j * dv + i] = 1;
      if (!is_derivation(unit, ds.module.algebra(), ds.module)) {
        DerivationSpace corrupted = ds;
        corrupted.basis.push_back(std::move(unit));
        return corrupted;
      }
    }
  }
  throw UnsupportedError(
      "corrupt_derivation_space: every unit map is a derivation here");
}

TwoLocalReport verify_theorem1(long long n, std::size_t samples_per_stratum,
                               std::uint64_t seed, bool corrupt_space) {
  if (n < 0) {
    throw InputError("verify_theorem1 needs n >= 0");
  }
  const LieAlgebra l = build_sl2();
  const Module v = build_Vn(n);
  const DerivationSpace honest = der_space(l, v);

  TwoLocalReport report;
  report.n = n;
  report.seed = seed;
  report.trivial_module = (n == 0);

  {
    std::vector<Vec> der_coords;
    std::vector<Vec> ider_coords;
    for (const auto& d : honest.basis) {
      der_coords.push_back(d.coords);
    }
    for (const auto& d : ider_space(l, v)) {
      ider_coords.push_back(d.coords);
    }
    report.cohomology_trivial =
        span_equal(der_coords, ider_coords, l.dim() * v.dim());
  }

  const DerivationSpace ds =
      corrupt_space ? corrupt_derivation_space(honest) : honest;

  const Element e = basis_element(l, 0);
  const Element h = basis_element(l, 1);
  const Element f = basis_element(l, 2);
  const Vec zero = zero_vec(v.dim());

  const Step3Data step3 = step3_intersection(ds, h, e);
  {
    ProbeRecord record;
    record.stratum = "step3";
    record.probe = f.coordinates;
    record.value_set_empty = step3.set.empty();
    record.value_set_dim = step3.set.dim();
    record.forced_zero = step3.set.is_zero_point();
    report.probes.push_back(std::move(record));
  }

  // The anchor constraints do not depend on the probe, so their feasible
  // coefficient sets are shared across all probes below.
  const AffineSubspace feas_e = feasible_coefficients({{e, zero}}, ds);
  const AffineSubspace feas_h = feasible_coefficients({{h, zero}}, ds);
  const AffineSubspace feas_f =
      feasible_coefficients({{f, step3.anchor_value}}, ds);

  const auto forced_at = [&](const Element& x) {
    const Matrix eval = evaluation_matrix(ds, x);
    return intersect(intersect(feas_e.image(eval), feas_h.image(eval)),
                     feas_f.image(eval));
  };
  const auto record_probe = [&](const std::string& stratum, const Element& x) {
    const AffineSubspace value_set = forced_at(x);
    ProbeRecord record;
    record.stratum = stratum;
    record.probe = x.coordinates;
    record.value_set_empty = value_set.empty();
    record.value_set_dim = value_set.dim();
    record.forced_zero = value_set.is_zero_point();
    report.probes.push_back(std::move(record));
  };

  record_probe("fixed", e);
  record_probe("fixed", h);
  record_probe("fixed", f);

  const std::vector<std::string> strata = {"xf_nonzero", "xf_zero_xe_xh_nonzero",
                                           "generic"};
  for (std::size_t s = 0; s < strata.size(); ++s) {
    const std::uint64_t sub_seed = derive_subseed(seed, s);
    report.stratum_seeds[strata[s]] = sub_seed;
    report.samples_per_stratum[strata[s]] = samples_per_stratum;
    SplitMix64 rng(sub_seed);
    for (std::size_t t = 0; t < samples_per_stratum; ++t) {
      Vec x = zero_vec(3);
      if (s == 0) {
        do {
          for (std::size_t c = 0; c < 3; ++c) {
            x[c] = Rational(rng.next_in_range(-9, 9));
          }
        } while (x[2] == 0);
      } else if (s == 1) {
        do {
          x[0] = Rational(rng.next_in_range(-9, 9));
          x[1] = Rational(rng.next_in_range(-9, 9));
        } while (x[0] == 0 || x[1] == 0);
        x[2] = 0;
      } else {
        for (std::size_t c = 0; c < 3; ++c) {
          x[c] = Rational(rng.next_in_range(-9, 9));
        }
      }
      record_probe(strata[s], Element{std::move(x)});
    }
  }

  report.pass = true;
  for (const auto& record : report.probes) {
    if (!record.forced_zero) {
      report.pass = false;
    }
  }
  return report;
}

}  // namespace liederiv
