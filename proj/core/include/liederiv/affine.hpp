#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "liederiv/matrix.hpp"

namespace liederiv {

/// An affine subspace of Q^d held in canonical form: either empty, or a base
/// point together with the unique RREF basis of its direction space, the base
/// point reduced against the directions so its pivot coordinates vanish.
/// Two objects are structurally equal exactly when they describe the same
/// point set, so operator== decides subspace equality.
class AffineSubspace {
 public:
  static AffineSubspace make_empty(std::size_t ambient_dim);
  static AffineSubspace single_point(Vec point);
  static AffineSubspace linear_span(std::size_t ambient_dim,
                                    const std::vector<Vec>& directions);

  AffineSubspace(Vec point, const std::vector<Vec>& directions);

  std::size_t ambient_dim() const { return ambient_; }
  bool empty() const { return empty_; }
  /// Number of directions; 0 both for points and for empty subspaces, so
  /// check empty() first when the distinction matters.
  std::size_t dim() const { return directions_.size(); }

  /// Canonical base point. Requires a nonempty subspace.
  const Vec& point() const;
  const std::vector<Vec>& directions() const { return directions_; }

  bool contains(const Vec& x) const;
  /// Subset test: every point of `other` lies in this subspace.
  bool contains(const AffineSubspace& other) const;
  /// True exactly when the subspace is the single point 0.
  bool is_zero_point() const;

  /// Image under a linear map given as a matrix with ambient_dim() columns.
  AffineSubspace image(const Matrix& map) const;

  /// Constraint form: a pair (a, b) with the subspace equal to {x : a x = b}.
  /// Requires a nonempty subspace.
  std::pair<Matrix, Vec> constraint_system() const;

  bool operator==(const AffineSubspace&) const = default;

 private:
  AffineSubspace() = default;

  std::size_t ambient_ = 0;
  bool empty_ = true;
  Vec point_;
  std::vector<Vec> directions_;
};

/// Exact solution set of a x = b, empty when inconsistent.
AffineSubspace solve_affine(const Matrix& a, const Vec& b);

/// Intersection, computed by stacking the two constraint systems.
AffineSubspace intersect(const AffineSubspace& s1, const AffineSubspace& s2);

/// Same as operator==; named form for call sites that read better with it.
bool subspace_equal(const AffineSubspace& s1, const AffineSubspace& s2);

}  // namespace liederiv
