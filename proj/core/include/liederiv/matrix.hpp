#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "liederiv/rational.hpp"

namespace liederiv {

/// Dense row-major matrix over exact rationals. Zero rows and zero columns
/// are legal; the solvers below rely on that for degenerate systems.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  /// Builds from row vectors; `cols` disambiguates the empty-row-list case.
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  /// Stacks blocks vertically. Every block must have `cols` columns.
  static Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  void set_row(std::size_t r, const Vec& values);
  void set_column(std::size_t c, const Vec& values);

  /// Matrix-vector product; x must have cols() entries.
  Vec apply(const Vec& x) const;

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(const Rational& c) const;
  Matrix transpose() const;

  bool is_zero() const;
  bool is_diagonal() const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// ab - ba.
Matrix commutator(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank = 0;
};

/// Reduced row echelon form with deterministic pivoting: leftmost nonzero
/// column, first nonzero row in it, leading entry normalized to 1. Exact,
/// no tolerances anywhere.
RrefResult rref(const Matrix& m);

/// Canonical kernel basis of { x : m x = 0 }: one vector per free column,
/// that free variable set to 1, pivot variables back-substituted.
std::vector<Vec> kernel(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Exact inverse, or nullopt when singular (or non-square).
std::optional<Matrix> inverse(const Matrix& m);

/// Rank of the span of a vector list inside Q^ambient.
std::size_t span_rank(const std::vector<Vec>& vectors, std::size_t ambient);

/// True when the two lists span the same subspace of Q^ambient.
bool span_equal(const std::vector<Vec>& a, const std::vector<Vec>& b,
                std::size_t ambient);

/// True when every vector of `inner` lies in the span of `outer`.
bool span_contains(const std::vector<Vec>& outer, const std::vector<Vec>& inner,
                   std::size_t ambient);

}  // namespace liederiv
