#include "liederiv/matrix.hpp"

#include "liederiv/errors.hpp"

namespace liederiv {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw InputError("row length does not match the requested column count");
    }
    m.set_row(r, rows[r]);
  }
  return m;
}

Matrix Matrix::vstack(const std::vector<Matrix>& blocks, std::size_t cols) {
  std::size_t total = 0;
  for (const auto& block : blocks) {
    if (block.cols() != cols) {
      throw InputError("vstack blocks disagree on column count");
    }
    total += block.rows();
  }
  Matrix m(total, cols);
  std::size_t offset = 0;
  for (const auto& block : blocks) {
    for (std::size_t r = 0; r < block.rows(); ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        m(offset + r, c) = block(r, c);
      }
    }
    offset += block.rows();
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  Vec out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) {
    out[c] = (*this)(r, c);
  }
  return out;
}

Vec Matrix::column(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    out[r] = (*this)(r, c);
  }
  return out;
}

void Matrix::set_row(std::size_t r, const Vec& values) {
  if (values.size() != cols_) {
    throw InputError("set_row length mismatch");
  }
  for (std::size_t c = 0; c < cols_; ++c) {
    (*this)(r, c) = values[c];
  }
}

void Matrix::set_column(std::size_t c, const Vec& values) {
  if (values.size() != rows_) {
    throw InputError("set_column length mismatch");
  }
  for (std::size_t r = 0; r < rows_; ++r) {
    (*this)(r, c) = values[r];
  }
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) {
    throw InputError("matrix-vector dimension mismatch");
  }
  Vec out = zero_vec(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& a = (*this)(r, c);
      if (a != 0 && x[c] != 0) {
        out[r] += a * x[c];
      }
    }
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) {
    throw InputError("matrix product dimension mismatch");
  }
  Matrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (a == 0) {
        continue;
      }
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        if (rhs(k, c) != 0) {
          out(r, c) += a * rhs(k, c);
        }
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw InputError("matrix sum dimension mismatch");
  }
  Matrix out(*this);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] += rhs.entries_[i];
  }
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw InputError("matrix difference dimension mismatch");
  }
  Matrix out(*this);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] -= rhs.entries_[i];
  }
  return out;
}

Matrix Matrix::scaled(const Rational& c) const {
  Matrix out(*this);
  for (auto& entry : out.entries_) {
    entry *= c;
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      out(c, r) = (*this)(r, c);
    }
  }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& entry : entries_) {
    if (entry != 0) {
      return false;
    }
  }
  return true;
}

bool Matrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (r != c && (*this)(r, c) != 0) {
        return false;
      }
    }
  }
  return true;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

RrefResult rref(const Matrix& m) {
  RrefResult result;
  result.reduced = m;
  Matrix& a = result.reduced;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t found = a.rows();
    for (std::size_t r = pivot_row; r < a.rows(); ++r) {
      if (a(r, col) != 0) {
        found = r;
        break;
      }
    }
    if (found == a.rows()) {
      continue;
    }
    if (found != pivot_row) {
      for (std::size_t c = 0; c < a.cols(); ++c) {
        std::swap(a(pivot_row, c), a(found, c));
      }
    }
    const Rational lead = a(pivot_row, col);
    if (lead != 1) {
      for (std::size_t c = col; c < a.cols(); ++c) {
        a(pivot_row, c) /= lead;
      }
    }
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pivot_row || a(r, col) == 0) {
        continue;
      }
      const Rational factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (a(pivot_row, c) != 0) {
          a(r, c) -= factor * a(pivot_row, c);
        }
      }
    }
    result.pivot_columns.push_back(col);
    ++pivot_row;
  }
  result.rank = result.pivot_columns.size();
  return result;
}

namespace {

// Kernel basis from an already reduced system (only the first `cols` columns
// of `reduced` are read, so an augmented matrix works when consistent).
std::vector<Vec> kernel_from_rref(const Matrix& reduced,
                                  const std::vector<std::size_t>& pivots,
                                  std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) {
    is_pivot[p] = true;
  }
  std::vector<Vec> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) {
      continue;
    }
    Vec x = zero_vec(cols);
    x[free_col] = 1;
    for (std::size_t t = 0; t < pivots.size(); ++t) {
      x[pivots[t]] = -reduced(t, free_col);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace

std::vector<Vec> kernel(const Matrix& m) {
  const RrefResult r = rref(m);
  return kernel_from_rref(r.reduced, r.pivot_columns, m.cols());
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) {
    return std::nullopt;
  }
  const std::size_t n = m.rows();
  if (n == 0) {
    return Matrix(0, 0);
  }
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      aug(r, c) = m(r, c);
    }
    aug(r, n + r) = 1;
  }
  const RrefResult red = rref(aug);
  if (red.rank < n || red.pivot_columns[n - 1] != n - 1) {
    return std::nullopt;
  }
  Matrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      out(r, c) = red.reduced(r, n + c);
    }
  }
  return out;
}

std::size_t span_rank(const std::vector<Vec>& vectors, std::size_t ambient) {
  return rank(Matrix::from_rows(vectors, ambient));
}

bool span_equal(const std::vector<Vec>& a, const std::vector<Vec>& b,
                std::size_t ambient) {
  const RrefResult ra = rref(Matrix::from_rows(a, ambient));
  const RrefResult rb = rref(Matrix::from_rows(b, ambient));
  if (ra.rank != rb.rank) {
    return false;
  }
  for (std::size_t r = 0; r < ra.rank; ++r) {
    if (ra.reduced.row(r) != rb.reduced.row(r)) {
      return false;
    }
  }
  return true;
}

bool span_contains(const std::vector<Vec>& outer, const std::vector<Vec>& inner,
                   std::size_t ambient) {
  const std::size_t base = span_rank(outer, ambient);
  std::vector<Vec> joint = outer;
  joint.insert(joint.end(), inner.begin(), inner.end());
  return span_rank(joint, ambient) == base;
}

}  // namespace liederiv
