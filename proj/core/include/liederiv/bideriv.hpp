#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "liederiv/deriv.hpp"

namespace liederiv {

/// Bilinear map L x L -> V in flattened coordinates: the coefficient of v_i
/// in g(b_j, b_k) sits at index (j*dim(L) + k)*dim(V) + i.
struct BilinearMap {
  std::size_t algebra_dim = 0;
  std::size_t module_dim = 0;
  Vec coords;

  static BilinearMap zero(std::size_t algebra_dim, std::size_t module_dim);
  static BilinearMap from_coords(std::size_t algebra_dim,
                                 std::size_t module_dim, Vec coords);

  /// g(b_j, b_k).
  Vec value_basis(std::size_t j, std::size_t k) const;
  /// Bilinear extension.
  Vec value(const Element& x, const Element& y) const;

  /// g(b_j, -) as a linear map.
  LinearMap left_slice(std::size_t j) const;
  /// g(-, b_k) as a linear map.
  LinearMap right_slice(std::size_t k) const;
  /// The transposed map (x,y) -> g(y,x).
  BilinearMap flipped() const;

  bool is_zero() const { return is_zero_vec(coords); }

  BilinearMap operator+(const BilinearMap& rhs) const;
  BilinearMap operator-(const BilinearMap& rhs) const;
  BilinearMap scaled(const Rational& c) const;

  bool operator==(const BilinearMap&) const = default;
};

/// The space Bder(L, V) of biderivations: bilinear g with
///   g([x,y], z) = x.g(y,z) - y.g(x,z)   and
///   g(x, [y,z]) = y.g(x,z) - z.g(x,y).
/// No skew-symmetry is imposed.
struct BiderivationSpace {
  Module module;
  std::vector<BilinearMap> basis;

  std::size_t dim() const { return basis.size(); }
};

BiderivationSpace bder_space(const LieAlgebra& l, const Module& v);

/// Both defining conditions, on all basis triples.
bool check_biderivation(const BilinearMap& g, const LieAlgebra& l,
                        const Module& v);

/// The inner biderivation (x,y) -> lambda * T^{-1}([x,y]) through the
/// intertwiner T : V -> adjoint normalized by T(v_0) = first basis element.
/// Throws UnsupportedError when the module is not isomorphic to the adjoint
/// or the anchoring fails.
BilinearMap inner_biderivation(const LieAlgebra& l, const Module& v,
                               const Rational& lambda);

/// Splits into (symmetric, skew) parts g = g1 + g2 with
/// g1(x,y) = (g(x,y)+g(y,x))/2 and g2(x,y) = (g(x,y)-g(y,x))/2.
std::pair<BilinearMap, BilinearMap> split_sym_skew(const BilinearMap& g);

/// The lambda with g2 = lambda * inner_biderivation(1), or nullopt when g2 is
/// not proportional to the inner biderivation.
std::optional<Rational> match_inner(const BilinearMap& g2, const LieAlgebra& l,
                                    const Module& v);

/// Weight component Blin(L,L;V)_gamma, spanned by the basis maps with offset
/// weight(v_i) - weight(b_j) - weight(b_k) = gamma.
AffineSubspace blin_weight_component(const LieAlgebra& l, const Module& v,
                                     long long gamma);

/// Sorted distinct offsets weight(v_i) - weight(b_j) - weight(b_k).
std::vector<long long> blin_weight_support(const LieAlgebra& l,
                                           const Module& v);

/// gamma -> basis of Bder(L,V)_gamma over the full offset support; the pieces
/// sum to the whole space.
std::map<long long, std::vector<BilinearMap>> bder_graded_decomposition(
    const BiderivationSpace& bs);

/// For a single graded biderivation component g, solves g(x,y) = x.phi(y)
/// = y.psi(x) and returns (phi, psi). Requires a module with no nonzero fixed
/// points and Der = Ider (both verified; HypothesisError otherwise). Returns
/// nullopt when the linear systems admit no solution.
std::optional<std::pair<LinearMap, LinearMap>> graded_component_factorization(
    const BilinearMap& g, const LieAlgebra& l, const Module& v);

/// The three guarded coefficient relations tying the weight-zero component
/// data (a_h, a_e, a_f) at position i on V(n):
///   (1-d_{i,n}) a_h             = (1-d_{i,n}) (n-2i-2) a_f
///   (1-d_{i,0}) (n-2i+2) a_e    = (1-d_{i,0}) i(n+1-i) a_h
///   (1-d_{i,0}) a_e             = (i+1)(n-i) a_f
/// packed as a 3x3 system over the unknown order (a_h, a_e, a_f).
struct GradedCoefficientSolution {
  Matrix relations;
  std::vector<Vec> solutions;
  /// True when every solution vanishes on the coefficients whose target
  /// basis vector exists (a_h always; a_e for i >= 1; a_f for i <= n-1).
  bool component_forced_zero = false;
};

GradedCoefficientSolution solve_graded_coefficients(long long n, long long i);

}  // namespace liederiv
