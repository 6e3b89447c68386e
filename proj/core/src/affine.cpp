#include "liederiv/affine.hpp"

#include "liederiv/errors.hpp"

namespace liederiv {

AffineSubspace AffineSubspace::make_empty(std::size_t ambient_dim) {
  AffineSubspace s;
  s.ambient_ = ambient_dim;
  s.empty_ = true;
  return s;
}

AffineSubspace AffineSubspace::single_point(Vec point) {
  return AffineSubspace(std::move(point), {});
}

AffineSubspace AffineSubspace::linear_span(std::size_t ambient_dim,
                                           const std::vector<Vec>& directions) {
  return AffineSubspace(zero_vec(ambient_dim), directions);
}

AffineSubspace::AffineSubspace(Vec point, const std::vector<Vec>& directions)
    : ambient_(point.size()), empty_(false), point_(std::move(point)) {
  for (const auto& d : directions) {
    if (d.size() != ambient_) {
      throw InputError("direction dimension does not match the base point");
    }
  }
  const RrefResult r = rref(Matrix::from_rows(directions, ambient_));
  directions_.reserve(r.rank);
  for (std::size_t t = 0; t < r.rank; ++t) {
    directions_.push_back(r.reduced.row(t));
  }
  // Zero the point on the pivot coordinates; the result is the unique
  // representative, which is what makes operator== decide set equality.
  for (std::size_t t = 0; t < r.rank; ++t) {
    const Rational c = point_[r.pivot_columns[t]];
    if (c != 0) {
      axpy(point_, -c, directions_[t]);
    }
  }
}

const Vec& AffineSubspace::point() const {
  if (empty_) {
    throw InputError("empty affine subspace has no base point");
  }
  return point_;
}

bool AffineSubspace::contains(const Vec& x) const {
  if (x.size() != ambient_) {
    throw InputError("membership test dimension mismatch");
  }
  if (empty_) {
    return false;
  }
  Vec residual = sub_vec(x, point_);
  for (const auto& d : directions_) {
    // Each canonical direction has a leading 1 in its pivot column and all
    // other directions vanish there, so one elimination pass suffices.
    std::size_t pivot = 0;
    while (pivot < ambient_ && d[pivot] == 0) {
      ++pivot;
    }
    if (pivot < ambient_ && residual[pivot] != 0) {
      axpy(residual, -residual[pivot], d);
    }
  }
  return is_zero_vec(residual);
}

bool AffineSubspace::contains(const AffineSubspace& other) const {
  if (other.empty_) {
    return true;
  }
  if (empty_ || !contains(other.point_)) {
    return false;
  }
  for (const auto& d : other.directions_) {
    if (!contains(add_vec(point_, d))) {
      return false;
    }
  }
  return true;
}

bool AffineSubspace::is_zero_point() const {
  return !empty_ && directions_.empty() && is_zero_vec(point_);
}

AffineSubspace AffineSubspace::image(const Matrix& map) const {
  if (map.cols() != ambient_) {
    throw InputError("linear map domain does not match the ambient space");
  }
  if (empty_) {
    return make_empty(map.rows());
  }
  std::vector<Vec> mapped;
  mapped.reserve(directions_.size());
  for (const auto& d : directions_) {
    mapped.push_back(map.apply(d));
  }
  return AffineSubspace(map.apply(point_), mapped);
}

std::pair<Matrix, Vec> AffineSubspace::constraint_system() const {
  if (empty_) {
    throw InputError("empty affine subspace has no constraint form");
  }
  // Constraints = kernel of the direction span; any x in the set satisfies
  // C x = C p because x - p is a combination of directions.
  const std::vector<Vec> rows =
      kernel(Matrix::from_rows(directions_, ambient_));
  const Matrix c = Matrix::from_rows(rows, ambient_);
  return {c, c.apply(point_)};
}

AffineSubspace solve_affine(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) {
    throw InputError("right-hand side length does not match the system");
  }
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      aug(r, c) = a(r, c);
    }
    aug(r, n) = b[r];
  }
  const RrefResult red = rref(aug);
  for (std::size_t p : red.pivot_columns) {
    if (p == n) {
      return AffineSubspace::make_empty(n);
    }
  }
  // Consistent system: the left block of the reduced augmented matrix is
  // rref(a), so the particular solution and the kernel both read off it.
  Vec point = zero_vec(n);
  for (std::size_t t = 0; t < red.rank; ++t) {
    point[red.pivot_columns[t]] = red.reduced(t, n);
  }
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : red.pivot_columns) {
    is_pivot[p] = true;
  }
  std::vector<Vec> directions;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) {
      continue;
    }
    Vec x = zero_vec(n);
    x[free_col] = 1;
    for (std::size_t t = 0; t < red.rank; ++t) {
      x[red.pivot_columns[t]] = -red.reduced(t, free_col);
    }
    directions.push_back(std::move(x));
  }
  return AffineSubspace(std::move(point), directions);
}

AffineSubspace intersect(const AffineSubspace& s1, const AffineSubspace& s2) {
  if (s1.ambient_dim() != s2.ambient_dim()) {
    throw InputError("intersect needs a common ambient space");
  }
  if (s1.empty() || s2.empty()) {
    return AffineSubspace::make_empty(s1.ambient_dim());
  }
  const auto [c1, b1] = s1.constraint_system();
  const auto [c2, b2] = s2.constraint_system();
  const Matrix stacked = Matrix::vstack({c1, c2}, s1.ambient_dim());
  Vec rhs = b1;
  rhs.insert(rhs.end(), b2.begin(), b2.end());
  return solve_affine(stacked, rhs);
}

bool subspace_equal(const AffineSubspace& s1, const AffineSubspace& s2) {
  return s1 == s2;
}

}  // namespace liederiv
