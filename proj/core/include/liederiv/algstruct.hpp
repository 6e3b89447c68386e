#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liederiv/affine.hpp"
#include "liederiv/matrix.hpp"

namespace liederiv {

/// Finite-dimensional Lie algebra over Q, presented by a basis and the full
/// structure-constant table c[j][k] = coordinates of [b_j, b_k].
///
/// Construction only checks shapes; antisymmetry and the Jacobi identity are
/// validated by check_antisymmetry / check_jacobi so that deliberately broken
/// tables can be built and rejected by those checks.
class LieAlgebra {
 public:
  LieAlgebra(std::vector<std::string> basis_labels,
             std::vector<std::vector<Vec>> structure_constants,
             std::optional<std::size_t> cartan_index = std::nullopt);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }

  /// Coordinates of [b_j, b_k].
  const Vec& bracket_basis(std::size_t j, std::size_t k) const;
  /// Bilinear extension to arbitrary coordinate vectors.
  Vec bracket(const Vec& x, const Vec& y) const;

  /// Index of the distinguished grading element, when one was designated.
  std::optional<std::size_t> cartan_index() const { return cartan_; }

  /// True when a grading element exists and its adjoint action is diagonal on
  /// the basis with integer eigenvalues; the weights are then available.
  bool has_basis_weights() const { return weights_.has_value(); }
  /// Weight of each basis element. Throws UnsupportedError when absent.
  const std::vector<long long>& basis_weights() const;

  /// Matrix of ad(b_j) in the basis.
  Matrix adjoint_matrix(std::size_t j) const;

  bool operator==(const LieAlgebra&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::vector<Vec>> constants_;
  std::optional<std::size_t> cartan_;
  std::optional<std::vector<long long>> weights_;
};

/// Algebra element given by coordinates in the algebra basis.
struct Element {
  Vec coordinates;

  bool operator==(const Element&) const = default;
};

Element basis_element(const LieAlgebra& l, std::size_t j);

/// c[j][k] == -c[k][j] for all pairs.
bool check_antisymmetry(const LieAlgebra& l);

/// Jacobi identity [[x,y],z] + [[y,z],x] + [[z,x],y] = 0 on all basis
/// triples, evaluated through the stored table.
bool check_jacobi(const LieAlgebra& l);

/// The standard basis (e, h, f) with [e,f] = h, [h,e] = 2e, [h,f] = -2f and
/// h designated as the grading element.
LieAlgebra build_sl2();

/// Finite-dimensional module, stored as one action matrix per algebra basis
/// element. Carries its algebra by value; all module data is immutable after
/// construction.
class Module {
 public:
  Module(LieAlgebra algebra, std::vector<Matrix> action,
         std::optional<std::vector<long long>> weight_labels = std::nullopt);

  const LieAlgebra& algebra() const { return algebra_; }
  std::size_t dim() const { return dim_; }

  const Matrix& action(std::size_t j) const { return action_[j]; }
  /// b_j . v
  Vec act_basis(std::size_t j, const Vec& v) const;
  /// x . v for x given by algebra coordinates.
  Vec act(const Vec& x, const Vec& v) const;

  /// Declared weight of each module basis vector, when the builder knew it.
  const std::optional<std::vector<long long>>& weight_labels() const {
    return weights_;
  }

  /// All action matrices stacked vertically (dim(L)*dim(V) x dim(V)).
  Matrix stacked_action() const;

  bool operator==(const Module&) const = default;

 private:
  LieAlgebra algebra_;
  std::size_t dim_ = 0;
  std::vector<Matrix> action_;
  std::optional<std::vector<long long>> weights_;
};

/// The simple sl(2)-module V(n) on basis v_0..v_n:
///   e.v_i = i(n+1-i) v_{i-1},  h.v_i = (n-2i) v_i,  f.v_i = v_{i+1},
/// with v_{-1} = v_{n+1} = 0.
Module build_Vn(long long n);

/// rho([x,y]) == [rho(x), rho(y)] on all basis pairs.
bool check_module(const LieAlgebra& l, const Module& v);

/// Fixed points { v : L.v = 0 } as a linear subspace of the module.
AffineSubspace trivial_submodule(const LieAlgebra& l, const Module& v);

/// Block-diagonal sum; both summands must be modules over structurally equal
/// algebras.
Module direct_sum(const Module& v1, const Module& v2);

/// weight -> indices of the module basis vectors in that weight space.
using WeightDecomposition = std::map<long long, std::vector<std::size_t>>;

/// Decomposes the module by the grading element's eigenvalues. Requires a
/// designated grading element acting diagonally with integer eigenvalues.
WeightDecomposition weight_spaces(const Module& v);

/// Per-index weight of each module basis vector (same data as weight_spaces,
/// flattened).
std::vector<long long> module_basis_weights(const Module& v);

/// The algebra acting on itself through ad.
Module adjoint_module(const LieAlgebra& l);

/// An invertible intertwiner T with T rho_v(x) = rho_w(x) T, or nullopt.
/// Searches the intertwiner space: each kernel basis vector first, then
/// small integer combinations (coefficients in [-3,3], bounded enumeration).
std::optional<Matrix> find_isomorphism(const Module& v, const Module& w);

}  // namespace liederiv
