#include "liederiv/deriv.hpp"

#include <algorithm>
#include <set>

#include "liederiv/errors.hpp"

namespace liederiv {

LinearMap LinearMap::zero(std::size_t algebra_dim, std::size_t module_dim) {
  return LinearMap{algebra_dim, module_dim, zero_vec(algebra_dim * module_dim)};
}

LinearMap LinearMap::from_coords(std::size_t algebra_dim,
                                 std::size_t module_dim, Vec coords) {
  if (coords.size() != algebra_dim * module_dim) {
    throw InputError("linear map coordinate length mismatch");
  }
  return LinearMap{algebra_dim, module_dim, std::move(coords)};
}

LinearMap LinearMap::from_values(const std::vector<Vec>& values) {
  const std::size_t dl = values.size();
  const std::size_t dv = dl == 0 ? 0 : values[0].size();
  Vec coords;
  coords.reserve(dl * dv);
  for (const auto& image : values) {
    if (image.size() != dv) {
      throw InputError("linear map images have inconsistent lengths");
    }
    coords.insert(coords.end(), image.begin(), image.end());
  }
  return LinearMap{dl, dv, std::move(coords)};
}

Vec LinearMap::value_basis(std::size_t j) const {
  Vec out(module_dim);
  for (std::size_t i = 0; i < module_dim; ++i) {
    out[i] = coords[j * module_dim + i];
  }
  return out;
}

Vec LinearMap::value(const Element& x) const {
  if (x.coordinates.size() != algebra_dim) {
    throw InputError("element dimension does not match the map's domain");
  }
  Vec out = zero_vec(module_dim);
  for (std::size_t j = 0; j < algebra_dim; ++j) {
    if (x.coordinates[j] != 0) {
      axpy(out, x.coordinates[j], value_basis(j));
    }
  }
  return out;
}

LinearMap LinearMap::operator+(const LinearMap& rhs) const {
  return LinearMap{algebra_dim, module_dim, add_vec(coords, rhs.coords)};
}

LinearMap LinearMap::operator-(const LinearMap& rhs) const {
  return LinearMap{algebra_dim, module_dim, sub_vec(coords, rhs.coords)};
}

LinearMap LinearMap::scaled(const Rational& c) const {
  return LinearMap{algebra_dim, module_dim, scale_vec(c, coords)};
}

namespace {

void require_same_algebra(const LieAlgebra& l, const Module& v,
                          const char* what) {
  if (!(l == v.algebra())) {
    throw InputError(std::string(what) +
                     ": algebra does not match the module's algebra");
  }
}

// Rows of the derivation identity D([b_j,b_k]) - b_j.D(b_k) + b_k.D(b_j) = 0
// for one pair, appended to `rows`. Unknown layout: D(b_j)_i at j*dv + i.
void derivation_rows(const LieAlgebra& l, const Module& v, std::size_t j,
                     std::size_t k, std::vector<Vec>& rows) {
  const std::size_t dl = l.dim();
  const std::size_t dv = v.dim();
  const Vec& bracket = l.bracket_basis(j, k);
  for (std::size_t i = 0; i < dv; ++i) {
    Vec row = zero_vec(dl * dv);
    for (std::size_t m = 0; m < dl; ++m) {
      if (bracket[m] != 0) {
        row[m * dv + i] += bracket[m];
      }
    }
    for (std::size_t s = 0; s < dv; ++s) {
      if (v.action(j)(i, s) != 0) {
        row[k * dv + s] -= v.action(j)(i, s);
      }
      if (v.action(k)(i, s) != 0) {
        row[j * dv + s] += v.action(k)(i, s);
      }
    }
    rows.push_back(std::move(row));
  }
}

}  // namespace

DerivationSpace der_space(const LieAlgebra& l, const Module& v) {
  require_same_algebra(l, v, "der_space");
  const std::size_t dl = l.dim();
  const std::size_t dv = v.dim();
  // Bilinearity and antisymmetry make the pairs j < k sufficient.
  std::vector<Vec> rows;
  for (std::size_t j = 0; j < dl; ++j) {
    for (std::size_t k = j + 1; k < dl; ++k) {
      derivation_rows(l, v, j, k, rows);
    }
  }
  const std::vector<Vec> basis_coords =
      kernel(Matrix::from_rows(rows, dl * dv));
  DerivationSpace ds{v, {}};
  ds.basis.reserve(basis_coords.size());
  for (auto& coords : basis_coords) {
    ds.basis.push_back(LinearMap::from_coords(dl, dv, coords));
  }
  return ds;
}

bool is_derivation(const LinearMap& d, const LieAlgebra& l, const Module& v) {
  require_same_algebra(l, v, "is_derivation");
  if (d.algebra_dim != l.dim() || d.module_dim != v.dim()) {
    throw InputError("is_derivation: map shape mismatch");
  }
  for (std::size_t j = 0; j < l.dim(); ++j) {
    for (std::size_t k = j + 1; k < l.dim(); ++k) {
      const Vec lhs = d.value(Element{l.bracket_basis(j, k)});
      const Vec rhs = sub_vec(v.act_basis(j, d.value_basis(k)),
                              v.act_basis(k, d.value_basis(j)));
      if (lhs != rhs) {
        return false;
      }
    }
  }
  return true;
}

LinearMap inner_derivation(const Module& v, const Vec& w) {
  if (w.size() != v.dim()) {
    throw InputError("inner_derivation: vector dimension mismatch");
  }
  std::vector<Vec> values;
  values.reserve(v.algebra().dim());
  for (std::size_t j = 0; j < v.algebra().dim(); ++j) {
    values.push_back(v.act_basis(j, w));
  }
  return LinearMap::from_values(values);
}

std::vector<LinearMap> ider_space(const LieAlgebra& l, const Module& v) {
  require_same_algebra(l, v, "ider_space");
  const std::size_t ambient = l.dim() * v.dim();
  std::vector<LinearMap> basis;
  std::vector<Vec> kept_coords;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    LinearMap candidate = inner_derivation(v, unit_vec(v.dim(), i));
    std::vector<Vec> trial = kept_coords;
    trial.push_back(candidate.coords);
    if (span_rank(trial, ambient) > kept_coords.size()) {
      kept_coords.push_back(candidate.coords);
      basis.push_back(std::move(candidate));
    }
  }
  return basis;
}

std::optional<Vec> is_inner(const LinearMap& d, const LieAlgebra& l,
                            const Module& v) {
  if (!is_derivation(d, l, v)) {
    throw InputError("is_inner: the map is not a derivation");
  }
  // Solve x.w = d(x) for all basis x at once via the stacked action.
  const AffineSubspace solutions = solve_affine(v.stacked_action(), d.coords);
  if (solutions.empty()) {
    return std::nullopt;
  }
  return solutions.point();
}

AffineSubspace hom_weight_component(const LieAlgebra& l, const Module& v,
                                    long long gamma) {
  require_same_algebra(l, v, "hom_weight_component");
  const std::vector<long long>& algebra_weights = l.basis_weights();
  const std::vector<long long> module_weights = module_basis_weights(v);
  const std::size_t dv = v.dim();
  std::vector<Vec> units;
  for (std::size_t j = 0; j < l.dim(); ++j) {
    for (std::size_t i = 0; i < dv; ++i) {
      if (module_weights[i] - algebra_weights[j] == gamma) {
        units.push_back(unit_vec(l.dim() * dv, j * dv + i));
      }
    }
  }
  return AffineSubspace::linear_span(l.dim() * dv, units);
}

std::vector<long long> hom_weight_support(const LieAlgebra& l,
                                          const Module& v) {
  require_same_algebra(l, v, "hom_weight_support");
  const std::vector<long long>& algebra_weights = l.basis_weights();
  const std::vector<long long> module_weights = module_basis_weights(v);
  std::set<long long> offsets;
  for (long long wj : algebra_weights) {
    for (long long wi : module_weights) {
      offsets.insert(wi - wj);
    }
  }
  return {offsets.begin(), offsets.end()};
}

LinearMap hom_action(const LieAlgebra& l, const Module& v, const Element& x,
                     const LinearMap& f) {
  require_same_algebra(l, v, "hom_action");
  if (x.coordinates.size() != l.dim() || f.algebra_dim != l.dim() ||
      f.module_dim != v.dim()) {
    throw InputError("hom_action: shape mismatch");
  }
  std::vector<Vec> values;
  values.reserve(l.dim());
  for (std::size_t k = 0; k < l.dim(); ++k) {
    const Vec bracket = l.bracket(x.coordinates, unit_vec(l.dim(), k));
    values.push_back(
        sub_vec(v.act(x.coordinates, f.value_basis(k)), f.value(Element{bracket})));
  }
  return LinearMap::from_values(values);
}

std::map<long long, std::vector<LinearMap>> der_graded_decomposition(
    const DerivationSpace& ds) {
  const LieAlgebra& l = ds.module.algebra();
  const Module& v = ds.module;
  const std::size_t ambient = l.dim() * v.dim();
  std::vector<Vec> der_coords;
  der_coords.reserve(ds.basis.size());
  for (const auto& d : ds.basis) {
    der_coords.push_back(d.coords);
  }
  const AffineSubspace der_span =
      AffineSubspace::linear_span(ambient, der_coords);
  std::map<long long, std::vector<LinearMap>> graded;
  for (long long gamma : hom_weight_support(l, v)) {
    const AffineSubspace piece =
        intersect(der_span, hom_weight_component(l, v, gamma));
    std::vector<LinearMap>& maps = graded[gamma];
    for (const auto& dir : piece.directions()) {
      maps.push_back(LinearMap::from_coords(l.dim(), v.dim(), dir));
    }
  }
  return graded;
}

}  // namespace liederiv
