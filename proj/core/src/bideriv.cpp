#include "liederiv/bideriv.hpp"

#include <set>

#include "liederiv/errors.hpp"

namespace liederiv {

BilinearMap BilinearMap::zero(std::size_t algebra_dim, std::size_t module_dim) {
  return BilinearMap{algebra_dim, module_dim,
                     zero_vec(algebra_dim * algebra_dim * module_dim)};
}

BilinearMap BilinearMap::from_coords(std::size_t algebra_dim,
                                     std::size_t module_dim, Vec coords) {
  if (coords.size() != algebra_dim * algebra_dim * module_dim) {
    throw InputError("bilinear map coordinate length mismatch");
  }
  return BilinearMap{algebra_dim, module_dim, std::move(coords)};
}

Vec BilinearMap::value_basis(std::size_t j, std::size_t k) const {
  Vec out(module_dim);
  const std::size_t base = (j * algebra_dim + k) * module_dim;
  for (std::size_t i = 0; i < module_dim; ++i) {
    out[i] = coords[base + i];
  }
  return out;
}

Vec BilinearMap::value(const Element& x, const Element& y) const {
  if (x.coordinates.size() != algebra_dim ||
      y.coordinates.size() != algebra_dim) {
    throw InputError("element dimension does not match the map's domain");
  }
  Vec out = zero_vec(module_dim);
  for (std::size_t j = 0; j < algebra_dim; ++j) {
    if (x.coordinates[j] == 0) {
      continue;
    }
    for (std::size_t k = 0; k < algebra_dim; ++k) {
      if (y.coordinates[k] != 0) {
        axpy(out, x.coordinates[j] * y.coordinates[k], value_basis(j, k));
      }
    }
  }
  return out;
}

LinearMap BilinearMap::left_slice(std::size_t j) const {
  std::vector<Vec> values;
  values.reserve(algebra_dim);
  for (std::size_t k = 0; k < algebra_dim; ++k) {
    values.push_back(value_basis(j, k));
  }
  return LinearMap::from_values(values);
}

LinearMap BilinearMap::right_slice(std::size_t k) const {
  std::vector<Vec> values;
  values.reserve(algebra_dim);
  for (std::size_t j = 0; j < algebra_dim; ++j) {
    values.push_back(value_basis(j, k));
  }
  return LinearMap::from_values(values);
}

BilinearMap BilinearMap::flipped() const {
  BilinearMap out = zero(algebra_dim, module_dim);
  for (std::size_t j = 0; j < algebra_dim; ++j) {
    for (std::size_t k = 0; k < algebra_dim; ++k) {
      const Vec v = value_basis(k, j);
      const std::size_t base = (j * algebra_dim + k) * module_dim;
      for (std::size_t i = 0; i < module_dim; ++i) {
        out.coords[base + i] = v[i];
      }
    }
  }
  return out;
}

BilinearMap BilinearMap::operator+(const BilinearMap& rhs) const {
  return BilinearMap{algebra_dim, module_dim, add_vec(coords, rhs.coords)};
}

BilinearMap BilinearMap::operator-(const BilinearMap& rhs) const {
  return BilinearMap{algebra_dim, module_dim, sub_vec(coords, rhs.coords)};
}

BilinearMap BilinearMap::scaled(const Rational& c) const {
  return BilinearMap{algebra_dim, module_dim, scale_vec(c, coords)};
}

namespace {

void require_same_algebra(const LieAlgebra& l, const Module& v,
                          const char* what) {
  if (!(l == v.algebra())) {
    throw InputError(std::string(what) +
                     ": algebra does not match the module's algebra");
  }
}

std::size_t flat(std::size_t j, std::size_t k, std::size_t i, std::size_t dl,
                 std::size_t dv) {
  return (j * dl + k) * dv + i;
}

// First condition g([b_j,b_k], b_m) = b_j.g(b_k,b_m) - b_k.g(b_j,b_m) for one
// (j,k,m); antisymmetric in (j,k).
void first_condition_rows(const LieAlgebra& l, const Module& v, std::size_t j,
                          std::size_t k, std::size_t m, std::vector<Vec>& rows) {
  const std::size_t dl = l.dim();
  const std::size_t dv = v.dim();
  const Vec& bracket = l.bracket_basis(j, k);
  for (std::size_t i = 0; i < dv; ++i) {
    Vec row = zero_vec(dl * dl * dv);
    for (std::size_t p = 0; p < dl; ++p) {
      if (bracket[p] != 0) {
        row[flat(p, m, i, dl, dv)] += bracket[p];
      }
    }
    for (std::size_t s = 0; s < dv; ++s) {
      if (v.action(j)(i, s) != 0) {
        row[flat(k, m, s, dl, dv)] -= v.action(j)(i, s);
      }
      if (v.action(k)(i, s) != 0) {
        row[flat(j, m, s, dl, dv)] += v.action(k)(i, s);
      }
    }
    rows.push_back(std::move(row));
  }
}

// Second condition g(b_j, [b_k,b_m]) = b_k.g(b_j,b_m) - b_m.g(b_j,b_k) for one
// (j,k,m); antisymmetric in (k,m).
void second_condition_rows(const LieAlgebra& l, const Module& v, std::size_t j,
                           std::size_t k, std::size_t m,
                           std::vector<Vec>& rows) {
  const std::size_t dl = l.dim();
  const std::size_t dv = v.dim();
  const Vec& bracket = l.bracket_basis(k, m);
  for (std::size_t i = 0; i < dv; ++i) {
    Vec row = zero_vec(dl * dl * dv);
    for (std::size_t p = 0; p < dl; ++p) {
      if (bracket[p] != 0) {
        row[flat(j, p, i, dl, dv)] += bracket[p];
      }
    }
    for (std::size_t s = 0; s < dv; ++s) {
      if (v.action(k)(i, s) != 0) {
        row[flat(j, m, s, dl, dv)] -= v.action(k)(i, s);
      }
      if (v.action(m)(i, s) != 0) {
        row[flat(j, k, s, dl, dv)] += v.action(m)(i, s);
      }
    }
    rows.push_back(std::move(row));
  }
}

}  // namespace

BiderivationSpace bder_space(const LieAlgebra& l, const Module& v) {
  require_same_algebra(l, v, "bder_space");
  const std::size_t dl = l.dim();
  const std::size_t dv = v.dim();
  std::vector<Vec> rows;
  // Each condition is antisymmetric in its bracketed pair, so ordered
  // representatives carry the full system.
  for (std::size_t j = 0; j < dl; ++j) {
    for (std::size_t k = j + 1; k < dl; ++k) {
      for (std::size_t m = 0; m < dl; ++m) {
        first_condition_rows(l, v, j, k, m, rows);
      }
    }
  }
  for (std::size_t j = 0; j < dl; ++j) {
    for (std::size_t k = 0; k < dl; ++k) {
      for (std::size_t m = k + 1; m < dl; ++m) {
        second_condition_rows(l, v, j, k, m, rows);
      }
    }
  }
  const std::vector<Vec> basis_coords =
      kernel(Matrix::from_rows(rows, dl * dl * dv));
  BiderivationSpace bs{v, {}};
  bs.basis.reserve(basis_coords.size());
  for (const auto& coords : basis_coords) {
    bs.basis.push_back(BilinearMap::from_coords(dl, dv, coords));
  }
  return bs;
}

bool check_biderivation(const BilinearMap& g, const LieAlgebra& l,
                        const Module& v) {
  require_same_algebra(l, v, "check_biderivation");
  if (g.algebra_dim != l.dim() || g.module_dim != v.dim()) {
    throw InputError("check_biderivation: map shape mismatch");
  }
  const std::size_t d = l.dim();
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t m = 0; m < d; ++m) {
        const Element ej{unit_vec(d, j)};
        const Element em{unit_vec(d, m)};
        const Vec first_lhs =
            g.value(Element{l.bracket_basis(j, k)}, em);
        const Vec first_rhs = sub_vec(v.act_basis(j, g.value_basis(k, m)),
                                      v.act_basis(k, g.value_basis(j, m)));
        if (first_lhs != first_rhs) {
          return false;
        }
        const Vec second_lhs =
            g.value(ej, Element{l.bracket_basis(k, m)});
        const Vec second_rhs = sub_vec(v.act_basis(k, g.value_basis(j, m)),
                                       v.act_basis(m, g.value_basis(j, k)));
        if (second_lhs != second_rhs) {
          return false;
        }
      }
    }
  }
  return true;
}

BilinearMap inner_biderivation(const LieAlgebra& l, const Module& v,
                               const Rational& lambda) {
  require_same_algebra(l, v, "inner_biderivation");
  const Module adjoint = adjoint_module(l);
  const std::optional<Matrix> iso = find_isomorphism(v, adjoint);
  if (!iso) {
    throw UnsupportedError(
        "inner_biderivation: module is not isomorphic to the adjoint module");
  }
  // Anchor the identification: T(v_0) must be a multiple of the first algebra
  // basis element, and is rescaled to hit it exactly.
  Matrix t = *iso;
  Rational alpha = t(0, 0);
  for (std::size_t r = 1; r < t.rows(); ++r) {
    if (t(r, 0) != 0) {
      throw UnsupportedError(
          "inner_biderivation: intertwiner cannot be anchored at v_0");
    }
  }
  if (alpha == 0) {
    throw UnsupportedError(
        "inner_biderivation: intertwiner cannot be anchored at v_0");
  }
  t = t.scaled(Rational(1) / alpha);
  const std::optional<Matrix> t_inv = inverse(t);
  if (!t_inv) {
    throw UnsupportedError("inner_biderivation: intertwiner is singular");
  }
  const std::size_t dl = l.dim();
  const std::size_t dv = v.dim();
  BilinearMap g = BilinearMap::zero(dl, dv);
  for (std::size_t j = 0; j < dl; ++j) {
    for (std::size_t k = 0; k < dl; ++k) {
      const Vec image = scale_vec(lambda, t_inv->apply(l.bracket_basis(j, k)));
      const std::size_t base = (j * dl + k) * dv;
      for (std::size_t i = 0; i < dv; ++i) {
        g.coords[base + i] = image[i];
      }
    }
  }
  return g;
}

std::pair<BilinearMap, BilinearMap> split_sym_skew(const BilinearMap& g) {
  const BilinearMap transposed = g.flipped();
  const Rational half(1, 2);
  return {(g + transposed).scaled(half), (g - transposed).scaled(half)};
}

std::optional<Rational> match_inner(const BilinearMap& g2, const LieAlgebra& l,
                                    const Module& v) {
  const BilinearMap unit = inner_biderivation(l, v, 1);
  // g2 = lambda * unit has a unique candidate lambda read off any nonzero
  // coordinate of unit.
  std::size_t witness = unit.coords.size();
  for (std::size_t t = 0; t < unit.coords.size(); ++t) {
    if (unit.coords[t] != 0) {
      witness = t;
      break;
    }
  }
  if (witness == unit.coords.size()) {
    return g2.is_zero() ? std::optional<Rational>(Rational(0)) : std::nullopt;
  }
  const Rational lambda = g2.coords[witness] / unit.coords[witness];
  if (g2 == unit.scaled(lambda)) {
    return lambda;
  }
  return std::nullopt;
}

AffineSubspace blin_weight_component(const LieAlgebra& l, const Module& v,
                                     long long gamma) {
  require_same_algebra(l, v, "blin_weight_component");
  const std::vector<long long>& wl = l.basis_weights();
  const std::vector<long long> wv = module_basis_weights(v);
  const std::size_t dl = l.dim();
  const std::size_t dv = v.dim();
  std::vector<Vec> units;
  for (std::size_t j = 0; j < dl; ++j) {
    for (std::size_t k = 0; k < dl; ++k) {
      for (std::size_t i = 0; i < dv; ++i) {
        if (wv[i] - wl[j] - wl[k] == gamma) {
          units.push_back(unit_vec(dl * dl * dv, flat(j, k, i, dl, dv)));
        }
      }
    }
  }
  return AffineSubspace::linear_span(dl * dl * dv, units);
}

std::vector<long long> blin_weight_support(const LieAlgebra& l,
                                           const Module& v) {
  require_same_algebra(l, v, "blin_weight_support");
  const std::vector<long long>& wl = l.basis_weights();
  const std::vector<long long> wv = module_basis_weights(v);
  std::set<long long> offsets;
  for (long long wj : wl) {
    for (long long wk : wl) {
      for (long long wi : wv) {
        offsets.insert(wi - wj - wk);
      }
    }
  }
  return {offsets.begin(), offsets.end()};
}

std::map<long long, std::vector<BilinearMap>> bder_graded_decomposition(
    const BiderivationSpace& bs) {
  const LieAlgebra& l = bs.module.algebra();
  const Module& v = bs.module;
  const std::size_t ambient = l.dim() * l.dim() * v.dim();
  std::vector<Vec> bder_coords;
  bder_coords.reserve(bs.basis.size());
  for (const auto& g : bs.basis) {
    bder_coords.push_back(g.coords);
  }
  const AffineSubspace bder_span =
      AffineSubspace::linear_span(ambient, bder_coords);
  std::map<long long, std::vector<BilinearMap>> graded;
  for (long long gamma : blin_weight_support(l, v)) {
    const AffineSubspace piece =
        intersect(bder_span, blin_weight_component(l, v, gamma));
    std::vector<BilinearMap>& maps = graded[gamma];
    for (const auto& dir : piece.directions()) {
      maps.push_back(BilinearMap::from_coords(l.dim(), v.dim(), dir));
    }
  }
  return graded;
}

std::optional<std::pair<LinearMap, LinearMap>> graded_component_factorization(
    const BilinearMap& g, const LieAlgebra& l, const Module& v) {
  require_same_algebra(l, v, "graded_component_factorization");
  if (g.algebra_dim != l.dim() || g.module_dim != v.dim()) {
    throw InputError("graded_component_factorization: map shape mismatch");
  }
  const AffineSubspace fixed = trivial_submodule(l, v);
  if (!fixed.is_zero_point()) {
    throw HypothesisError(
        "graded_component_factorization needs a module without nonzero fixed "
        "points");
  }
  {
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
    if (!span_equal(der_coords, ider_coords, l.dim() * v.dim())) {
      throw HypothesisError(
          "graded_component_factorization needs Der = Ider for this module");
    }
  }
  const std::size_t dl = l.dim();
  const std::size_t dv = v.dim();
  const Matrix stacked = v.stacked_action();
  // phi(b_k): x.phi(b_k) = g(x, b_k) across all basis x; psi(b_j) likewise
  // from the second argument.
  std::vector<Vec> phi_values;
  std::vector<Vec> psi_values;
  for (std::size_t k = 0; k < dl; ++k) {
    Vec rhs;
    rhs.reserve(dl * dv);
    for (std::size_t j = 0; j < dl; ++j) {
      const Vec value = g.value_basis(j, k);
      rhs.insert(rhs.end(), value.begin(), value.end());
    }
    const AffineSubspace sol = solve_affine(stacked, rhs);
    if (sol.empty()) {
      return std::nullopt;
    }
    phi_values.push_back(sol.point());
  }
  for (std::size_t j = 0; j < dl; ++j) {
    Vec rhs;
    rhs.reserve(dl * dv);
    for (std::size_t k = 0; k < dl; ++k) {
      const Vec value = g.value_basis(j, k);
      rhs.insert(rhs.end(), value.begin(), value.end());
    }
    const AffineSubspace sol = solve_affine(stacked, rhs);
    if (sol.empty()) {
      return std::nullopt;
    }
    psi_values.push_back(sol.point());
  }
  return std::make_pair(LinearMap::from_values(phi_values),
                        LinearMap::from_values(psi_values));
}

GradedCoefficientSolution solve_graded_coefficients(long long n, long long i) {
  if (n < 0 || i < 0 || i > n) {
    throw InputError("solve_graded_coefficients needs 0 <= i <= n");
  }
  const Rational guard_top(i == n ? 0 : 1);
  const Rational guard_bottom(i == 0 ? 0 : 1);
  // Unknown order (a_h, a_e, a_f).
  Matrix relations(3, 3);
  relations(0, 0) = guard_top;
  relations(0, 2) = -guard_top * Rational(n - 2 * i - 2);
  relations(1, 0) = -guard_bottom * Rational(i * (n + 1 - i));
  relations(1, 1) = guard_bottom * Rational(n - 2 * i + 2);
  relations(2, 1) = guard_bottom;
  relations(2, 2) = -Rational((i + 1) * (n - i));
  GradedCoefficientSolution out;
  out.relations = relations;
  out.solutions = kernel(relations);
  std::vector<std::size_t> relevant = {0};
  if (i >= 1) {
    relevant.push_back(1);
  }
  if (i <= n - 1) {
    relevant.push_back(2);
  }
  out.component_forced_zero = true;
  for (const auto& solution : out.solutions) {
    for (std::size_t idx : relevant) {
      if (solution[idx] != 0) {
        out.component_forced_zero = false;
      }
    }
  }
  return out;
}

}  // namespace liederiv
