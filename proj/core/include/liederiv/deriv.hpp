#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "liederiv/algstruct.hpp"

namespace liederiv {

/// Linear map L -> V in flattened coordinates: the coefficient of v_i in the
/// image of b_j sits at index j*dim(V) + i.
struct LinearMap {
  std::size_t algebra_dim = 0;
  std::size_t module_dim = 0;
  Vec coords;

  static LinearMap zero(std::size_t algebra_dim, std::size_t module_dim);
  static LinearMap from_coords(std::size_t algebra_dim, std::size_t module_dim,
                               Vec coords);
  /// One image vector per algebra basis element.
  static LinearMap from_values(const std::vector<Vec>& values);

  /// Image of b_j.
  Vec value_basis(std::size_t j) const;
  /// Image of an arbitrary element.
  Vec value(const Element& x) const;

  bool is_zero() const { return is_zero_vec(coords); }

  LinearMap operator+(const LinearMap& rhs) const;
  LinearMap operator-(const LinearMap& rhs) const;
  LinearMap scaled(const Rational& c) const;

  bool operator==(const LinearMap&) const = default;
};

/// The space Der(L, V) of derivations D([x,y]) = x.D(y) - y.D(x), carried as
/// a canonical kernel basis of the defining linear system.
struct DerivationSpace {
  Module module;
  std::vector<LinearMap> basis;

  std::size_t dim() const { return basis.size(); }
};

DerivationSpace der_space(const LieAlgebra& l, const Module& v);

/// True when d satisfies the derivation identity on all basis pairs.
bool is_derivation(const LinearMap& d, const LieAlgebra& l, const Module& v);

/// The inner derivation D^w(x) = x.w.
LinearMap inner_derivation(const Module& v, const Vec& w);

/// Basis of Ider(L, V): the spanning set {D^{v_i}} reduced to a maximal
/// independent subset (kept as inner maps, not re-echelonized).
std::vector<LinearMap> ider_space(const LieAlgebra& l, const Module& v);

/// The canonical w with d = D^w, or nullopt when d is not inner.
/// Throws InputError when d is not a derivation at all.
std::optional<Vec> is_inner(const LinearMap& d, const LieAlgebra& l,
                            const Module& v);

/// Weight component Hom(L,V)_gamma = span of the basis maps b_j -> v_i with
/// weight(v_i) - weight(b_j) = gamma, as a linear subspace of the flattened
/// coordinate space. Requires graded inputs.
AffineSubspace hom_weight_component(const LieAlgebra& l, const Module& v,
                                    long long gamma);

/// Sorted distinct offsets weight(v_i) - weight(b_j); every weight component
/// outside this list is zero for support reasons.
std::vector<long long> hom_weight_support(const LieAlgebra& l, const Module& v);

/// Module action on Hom(L,V): (x.f)(y) = x.f(y) - f([x,y]).
LinearMap hom_action(const LieAlgebra& l, const Module& v, const Element& x,
                     const LinearMap& f);

/// gamma -> basis of Der(L,V)_gamma, one entry per offset in the support
/// (zero components included as empty lists). The pieces always sum to the
/// whole space.
std::map<long long, std::vector<LinearMap>> der_graded_decomposition(
    const DerivationSpace& ds);

}  // namespace liederiv
