#include "liederiv/algstruct.hpp"

#include <algorithm>

#include "liederiv/errors.hpp"

namespace liederiv {

namespace {

// Weights exist when ad(cartan) is diagonal on the basis with integer
// eigenvalues; anything else leaves them unset rather than failing, so that
// purely non-graded algebras still construct.
std::optional<std::vector<long long>> derive_basis_weights(
    const std::vector<std::vector<Vec>>& constants,
    std::optional<std::size_t> cartan, std::size_t dim) {
  if (!cartan) {
    return std::nullopt;
  }
  std::vector<long long> weights(dim, 0);
  for (std::size_t j = 0; j < dim; ++j) {
    const Vec& image = constants[*cartan][j];
    for (std::size_t m = 0; m < dim; ++m) {
      if (m != j && image[m] != 0) {
        return std::nullopt;
      }
    }
    const Rational& eigen = image[j];
    if (denominator(eigen) != 1) {
      return std::nullopt;
    }
    weights[j] = numerator(eigen).convert_to<long long>();
  }
  return weights;
}

}  // namespace

LieAlgebra::LieAlgebra(std::vector<std::string> basis_labels,
                       std::vector<std::vector<Vec>> structure_constants,
                       std::optional<std::size_t> cartan_index)
    : dim_(basis_labels.size()),
      labels_(std::move(basis_labels)),
      constants_(std::move(structure_constants)),
      cartan_(cartan_index) {
  if (constants_.size() != dim_) {
    throw InputError("structure constant table has the wrong number of rows");
  }
  for (const auto& row : constants_) {
    if (row.size() != dim_) {
      throw InputError("structure constant table row has the wrong length");
    }
    for (const auto& entry : row) {
      if (entry.size() != dim_) {
        throw InputError("structure constant vector has the wrong length");
      }
    }
  }
  if (cartan_ && *cartan_ >= dim_) {
    throw InputError("cartan index out of range");
  }
  weights_ = derive_basis_weights(constants_, cartan_, dim_);
}

const Vec& LieAlgebra::bracket_basis(std::size_t j, std::size_t k) const {
  return constants_[j][k];
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_) {
    throw InputError("bracket argument dimension mismatch");
  }
  Vec out = zero_vec(dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    if (x[j] == 0) {
      continue;
    }
    for (std::size_t k = 0; k < dim_; ++k) {
      if (y[k] == 0) {
        continue;
      }
      axpy(out, x[j] * y[k], constants_[j][k]);
    }
  }
  return out;
}

const std::vector<long long>& LieAlgebra::basis_weights() const {
  if (!weights_) {
    throw UnsupportedError(
        "algebra has no integer weights on this basis "
        "(no grading element, or its adjoint action is not diagonal)");
  }
  return *weights_;
}

Matrix LieAlgebra::adjoint_matrix(std::size_t j) const {
  Matrix m(dim_, dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    m.set_column(k, constants_[j][k]);
  }
  return m;
}

Element basis_element(const LieAlgebra& l, std::size_t j) {
  if (j >= l.dim()) {
    throw InputError("basis index out of range");
  }
  return Element{unit_vec(l.dim(), j)};
}

bool check_antisymmetry(const LieAlgebra& l) {
  for (std::size_t j = 0; j < l.dim(); ++j) {
    for (std::size_t k = 0; k < l.dim(); ++k) {
      const Vec& forward = l.bracket_basis(j, k);
      const Vec& backward = l.bracket_basis(k, j);
      for (std::size_t m = 0; m < l.dim(); ++m) {
        if (forward[m] != -backward[m]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool check_jacobi(const LieAlgebra& l) {
  const std::size_t d = l.dim();
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t m = 0; m < d; ++m) {
        Vec sum = l.bracket(l.bracket_basis(j, k), unit_vec(d, m));
        const Vec term2 = l.bracket(l.bracket_basis(k, m), unit_vec(d, j));
        const Vec term3 = l.bracket(l.bracket_basis(m, j), unit_vec(d, k));
        for (std::size_t t = 0; t < d; ++t) {
          sum[t] += term2[t] + term3[t];
        }
        if (!is_zero_vec(sum)) {
          return false;
        }
      }
    }
  }
  return true;
}

LieAlgebra build_sl2() {
  const std::size_t d = 3;
  std::vector<std::vector<Vec>> c(d, std::vector<Vec>(d, zero_vec(d)));
  // Basis order (e, h, f): [e,f] = h, [h,e] = 2e, [h,f] = -2f.
  c[0][2][1] = 1;
  c[2][0][1] = -1;
  c[1][0][0] = 2;
  c[0][1][0] = -2;
  c[1][2][2] = -2;
  c[2][1][2] = 2;
  return LieAlgebra({"e", "h", "f"}, std::move(c), 1);
}

Module::Module(LieAlgebra algebra, std::vector<Matrix> action,
               std::optional<std::vector<long long>> weight_labels)
    : algebra_(std::move(algebra)),
      action_(std::move(action)),
      weights_(std::move(weight_labels)) {
  if (action_.size() != algebra_.dim()) {
    throw InputError("module needs one action matrix per basis element");
  }
  dim_ = action_.empty() ? 0 : action_[0].rows();
  for (const auto& m : action_) {
    if (m.rows() != dim_ || m.cols() != dim_) {
      throw InputError("action matrices must be square of a common size");
    }
  }
  if (weights_ && weights_->size() != dim_) {
    throw InputError("weight label count does not match the module dimension");
  }
}

Vec Module::act_basis(std::size_t j, const Vec& v) const {
  return action_[j].apply(v);
}

Vec Module::act(const Vec& x, const Vec& v) const {
  if (x.size() != algebra_.dim()) {
    throw InputError("algebra coordinate dimension mismatch");
  }
  Vec out = zero_vec(dim_);
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] != 0) {
      axpy(out, x[j], action_[j].apply(v));
    }
  }
  return out;
}

Matrix Module::stacked_action() const {
  return Matrix::vstack(action_, dim_);
}

Module build_Vn(long long n) {
  if (n < 0) {
    throw InputError("highest weight must be nonnegative");
  }
  LieAlgebra sl2 = build_sl2();
  const std::size_t d = static_cast<std::size_t>(n) + 1;
  Matrix e(d, d);
  Matrix h(d, d);
  Matrix f(d, d);
  std::vector<long long> weights(d, 0);
  for (long long i = 0; i <= n; ++i) {
    const auto col = static_cast<std::size_t>(i);
    if (i >= 1) {
      e(col - 1, col) = Rational(i * (n + 1 - i));
    }
    h(col, col) = Rational(n - 2 * i);
    if (i < n) {
      f(col + 1, col) = 1;
    }
    weights[col] = n - 2 * i;
  }
  return Module(std::move(sl2), {std::move(e), std::move(h), std::move(f)},
                std::move(weights));
}

namespace {

void require_same_algebra(const LieAlgebra& l, const Module& v,
                          const char* what) {
  if (!(l == v.algebra())) {
    throw InputError(std::string(what) +
                     ": algebra does not match the module's algebra");
  }
}

}  // namespace

bool check_module(const LieAlgebra& l, const Module& v) {
  require_same_algebra(l, v, "check_module");
  for (std::size_t j = 0; j < l.dim(); ++j) {
    for (std::size_t k = 0; k < l.dim(); ++k) {
      const Vec& bracket = l.bracket_basis(j, k);
      Matrix rho_bracket(v.dim(), v.dim());
      for (std::size_t m = 0; m < l.dim(); ++m) {
        if (bracket[m] != 0) {
          rho_bracket = rho_bracket + v.action(m).scaled(bracket[m]);
        }
      }
      if (!(rho_bracket == commutator(v.action(j), v.action(k)))) {
        return false;
      }
    }
  }
  return true;
}

AffineSubspace trivial_submodule(const LieAlgebra& l, const Module& v) {
  require_same_algebra(l, v, "trivial_submodule");
  return AffineSubspace::linear_span(v.dim(), kernel(v.stacked_action()));
}

Module direct_sum(const Module& v1, const Module& v2) {
  if (!(v1.algebra() == v2.algebra())) {
    throw InputError("direct_sum needs modules over the same algebra");
  }
  const std::size_t d1 = v1.dim();
  const std::size_t d2 = v2.dim();
  std::vector<Matrix> action;
  action.reserve(v1.algebra().dim());
  for (std::size_t j = 0; j < v1.algebra().dim(); ++j) {
    Matrix block(d1 + d2, d1 + d2);
    for (std::size_t r = 0; r < d1; ++r) {
      for (std::size_t c = 0; c < d1; ++c) {
        block(r, c) = v1.action(j)(r, c);
      }
    }
    for (std::size_t r = 0; r < d2; ++r) {
      for (std::size_t c = 0; c < d2; ++c) {
        block(d1 + r, d1 + c) = v2.action(j)(r, c);
      }
    }
    action.push_back(std::move(block));
  }
  std::optional<std::vector<long long>> weights;
  if (v1.weight_labels() && v2.weight_labels()) {
    weights = *v1.weight_labels();
    weights->insert(weights->end(), v2.weight_labels()->begin(),
                    v2.weight_labels()->end());
  }
  return Module(v1.algebra(), std::move(action), std::move(weights));
}

WeightDecomposition weight_spaces(const Module& v) {
  const auto cartan = v.algebra().cartan_index();
  if (!cartan) {
    throw UnsupportedError("weight_spaces needs a designated grading element");
  }
  const Matrix& h = v.action(*cartan);
  if (!h.is_diagonal()) {
    throw UnsupportedError(
        "grading element does not act diagonally on this basis");
  }
  WeightDecomposition decomposition;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const Rational& eigen = h(i, i);
    if (denominator(eigen) != 1) {
      throw UnsupportedError("grading eigenvalues are not integers");
    }
    decomposition[numerator(eigen).convert_to<long long>()].push_back(i);
  }
  return decomposition;
}

std::vector<long long> module_basis_weights(const Module& v) {
  std::vector<long long> weights(v.dim(), 0);
  for (const auto& [weight, indices] : weight_spaces(v)) {
    for (std::size_t i : indices) {
      weights[i] = weight;
    }
  }
  return weights;
}

Module adjoint_module(const LieAlgebra& l) {
  std::vector<Matrix> action;
  action.reserve(l.dim());
  for (std::size_t j = 0; j < l.dim(); ++j) {
    action.push_back(l.adjoint_matrix(j));
  }
  std::optional<std::vector<long long>> weights;
  if (l.has_basis_weights()) {
    weights = l.basis_weights();
  }
  return Module(l, std::move(action), std::move(weights));
}

namespace {

Matrix coords_as_matrix(const Vec& coords, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = coords[r * cols + c];
    }
  }
  return m;
}

}  // namespace

std::optional<Matrix> find_isomorphism(const Module& v, const Module& w) {
  if (!(v.algebra() == w.algebra())) {
    throw InputError("find_isomorphism needs modules over the same algebra");
  }
  if (v.dim() != w.dim()) {
    return std::nullopt;
  }
  const std::size_t d = v.dim();
  if (d == 0) {
    return Matrix(0, 0);
  }
  // Unknown T is d x d, flattened row-major; equations T rho_v(x) = rho_w(x) T
  // per basis element.
  const std::size_t unknowns = d * d;
  const std::size_t dl = v.algebra().dim();
  Matrix system(dl * unknowns, unknowns);
  std::size_t row = 0;
  for (std::size_t j = 0; j < dl; ++j) {
    const Matrix& a = v.action(j);
    const Matrix& b = w.action(j);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        for (std::size_t s = 0; s < d; ++s) {
          system(row, r * d + s) += a(s, c);
          system(row, s * d + c) -= b(r, s);
        }
        ++row;
      }
    }
  }
  const std::vector<Vec> intertwiners = kernel(system);
  for (const auto& candidate : intertwiners) {
    Matrix t = coords_as_matrix(candidate, d, d);
    if (rank(t) == d) {
      return t;
    }
  }
  // Singular basis vectors may still combine to an invertible intertwiner;
  // scan small integer combinations with a bounded odometer.
  constexpr long long kCoeffBound = 3;
  constexpr std::size_t kMaxCandidates = 200000;
  const std::size_t k = intertwiners.size();
  if (k < 2) {
    return std::nullopt;
  }
  std::vector<long long> odo(k, -kCoeffBound);
  std::size_t tried = 0;
  while (tried < kMaxCandidates) {
    Vec combo = zero_vec(unknowns);
    for (std::size_t t = 0; t < k; ++t) {
      if (odo[t] != 0) {
        axpy(combo, Rational(odo[t]), intertwiners[t]);
      }
    }
    Matrix candidate = coords_as_matrix(combo, d, d);
    if (rank(candidate) == d) {
      return candidate;
    }
    ++tried;
    std::size_t pos = 0;
    while (pos < k && odo[pos] == kCoeffBound) {
      odo[pos] = -kCoeffBound;
      ++pos;
    }
    if (pos == k) {
      break;
    }
    ++odo[pos];
  }
  return std::nullopt;
}

}  // namespace liederiv
