#include <doctest.h>

#include "liederiv/bideriv.hpp"
#include "liederiv/errors.hpp"
#include "test_util.hpp"

using namespace liederiv;
using testutil::qmat;
using testutil::qvec;

TEST_CASE("biderivation space is one-dimensional exactly at n = 2") {
  for (long long n = 0; n <= 6; ++n) {
    const Module v = build_Vn(n);
    const BiderivationSpace bs = bder_space(v.algebra(), v);
    CHECK(bs.dim() == (n == 2 ? 1 : 0));
    for (const auto& g : bs.basis) {
      CHECK(check_biderivation(g, v.algebra(), v));
    }
  }
}

TEST_CASE("check_biderivation accepts the inner map and the zero map") {
  const Module v = build_Vn(2);
  const LieAlgebra& l = v.algebra();
  CHECK(check_biderivation(inner_biderivation(l, v, 1), l, v));
  CHECK(check_biderivation(BilinearMap::zero(3, 3), l, v));
}

TEST_CASE("check_biderivation rejects unit maps on V(3)") {
  // Bder(V(3)) = 0, so no nonzero bilinear map can pass.
  const Module v = build_Vn(3);
  const LieAlgebra& l = v.algebra();
  for (std::size_t flat : {0u, 5u, 17u, 35u}) {
    BilinearMap g = BilinearMap::zero(3, 4);
    g.coords[flat] = 1;
    CHECK(!check_biderivation(g, l, v));
  }
}

TEST_CASE("inner biderivation values on V(2)") {
  // T(v_0) = e forces T(v_1) = -h and T(v_2) = -2f, so
  // T^{-1}: e -> v_0, h -> -v_1, f -> -v_2/2.
  const Module v = build_Vn(2);
  const LieAlgebra& l = v.algebra();
  const Rational lambda(3);
  const BilinearMap g = inner_biderivation(l, v, lambda);
  CHECK(g.value_basis(0, 2) == qvec({0, -3, 0}));   // g(e,f) = -lambda v_1
  CHECK(g.value_basis(1, 0) == qvec({6, 0, 0}));    // g(h,e) = 2 lambda v_0
  CHECK(g.value_basis(1, 2) == qvec({0, 0, 3}));    // g(h,f) = lambda v_2
  CHECK(g.value_basis(2, 0) == qvec({0, 3, 0}));    // g(f,e) = lambda v_1
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(is_zero_vec(g.value_basis(j, j)));
  }
  CHECK(g.flipped() == g.scaled(-1));
  CHECK(check_biderivation(g, l, v));
}

TEST_CASE("inner biderivation is linear in lambda and vanishes at 0") {
  const Module v = build_Vn(2);
  const LieAlgebra& l = v.algebra();
  CHECK(inner_biderivation(l, v, 0).is_zero());
  CHECK(inner_biderivation(l, v, Rational(5, 2)) ==
        inner_biderivation(l, v, 1).scaled(Rational(5, 2)));
}

TEST_CASE("inner biderivation requires an adjoint-type module") {
  const Module v1 = build_Vn(1);
  CHECK_THROWS_AS(inner_biderivation(v1.algebra(), v1, 1), UnsupportedError);
  const Module v4 = build_Vn(4);
  CHECK_THROWS_AS(inner_biderivation(v4.algebra(), v4, 1), UnsupportedError);
}

TEST_CASE("bilinear slices and values agree with direct evaluation") {
  const Module v = build_Vn(2);
  const BilinearMap g = inner_biderivation(v.algebra(), v, 1);
  const LinearMap left = g.left_slice(1);
  CHECK(left.value_basis(0) == qvec({2, 0, 0}));
  CHECK(left.value_basis(1) == qvec({0, 0, 0}));
  CHECK(left.value_basis(2) == qvec({0, 0, 1}));
  const LinearMap right = g.right_slice(0);
  CHECK(right.value_basis(1) == qvec({2, 0, 0}));
  CHECK(right.value_basis(2) == qvec({0, 1, 0}));
  // Bilinearity on a non-basis pair.
  const Element x{qvec({1, 0, 2})};   // e + 2f
  const Element y{qvec({0, 1, 0})};   // h
  // g(e+2f, h) = -g(h,e) - 2 g(h,f) = -2v_0 - 2v_2.
  CHECK(g.value(x, y) == qvec({-2, 0, -2}));
}

TEST_CASE("slices of a biderivation are derivations") {
  const Module v = build_Vn(2);
  const LieAlgebra& l = v.algebra();
  const BiderivationSpace bs = bder_space(l, v);
  REQUIRE(bs.dim() == 1);
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(is_derivation(bs.basis[0].left_slice(j), l, v));
    CHECK(is_derivation(bs.basis[0].right_slice(j), l, v));
  }
}

TEST_CASE("symmetric/skew split") {
  const Module v = build_Vn(2);
  const LieAlgebra& l = v.algebra();
  const BilinearMap inner = inner_biderivation(l, v, 2);
  const auto [sym, skew] = split_sym_skew(inner);
  CHECK(sym.is_zero());
  CHECK(skew == inner);
  // A manufactured asymmetric map splits into the expected halves.
  BilinearMap lopsided = BilinearMap::zero(3, 3);
  lopsided.coords[(0 * 3 + 2) * 3 + 0] = 1;  // g(e,f) = v_0
  const auto [s2, k2] = split_sym_skew(lopsided);
  CHECK(s2 + k2 == lopsided);
  CHECK(s2.flipped() == s2);
  CHECK(k2.flipped() == k2.scaled(-1));
  CHECK(s2.value_basis(2, 0) == Vec{Rational(1, 2), 0, 0});
  CHECK(k2.value_basis(2, 0) == Vec{Rational(-1, 2), 0, 0});
}

TEST_CASE("match_inner recovers the coefficient") {
  const Module v = build_Vn(2);
  const LieAlgebra& l = v.algebra();
  CHECK(match_inner(inner_biderivation(l, v, 5), l, v) == Rational(5));
  CHECK(match_inner(inner_biderivation(l, v, Rational(-7, 3)), l, v) ==
        Rational(-7, 3));
  CHECK(match_inner(BilinearMap::zero(3, 3), l, v) == Rational(0));
  BilinearMap off = BilinearMap::zero(3, 3);
  off.coords[0] = 1;  // g(e,e) = v_0, never proportional to the inner map
  CHECK(!match_inner(off, l, v).has_value());
  // Proportional plus a perturbation elsewhere also fails.
  BilinearMap perturbed = inner_biderivation(l, v, 1);
  perturbed.coords[0] += 1;
  CHECK(!match_inner(perturbed, l, v).has_value());
}

TEST_CASE("the n = 2 generator is skew and inner") {
  const Module v = build_Vn(2);
  const LieAlgebra& l = v.algebra();
  const BiderivationSpace bs = bder_space(l, v);
  REQUIRE(bs.dim() == 1);
  const auto [sym, skew] = split_sym_skew(bs.basis[0]);
  CHECK(sym.is_zero());
  const auto lambda = match_inner(skew, l, v);
  REQUIRE(lambda.has_value());
  CHECK(*lambda != 0);
  CHECK(bs.basis[0] == inner_biderivation(l, v, *lambda));
}

TEST_CASE("bilinear weight components of V(2)") {
  const Module v = build_Vn(2);
  const LieAlgebra& l = v.algebra();
  CHECK(blin_weight_component(l, v, 0).dim() == 7);
  CHECK(blin_weight_component(l, v, 1).dim() == 0);
  const auto support = blin_weight_support(l, v);
  CHECK(support == std::vector<long long>{-6, -4, -2, 0, 2, 4, 6});
  std::size_t total = 0;
  for (long long gamma : support) {
    total += blin_weight_component(l, v, gamma).dim();
  }
  CHECK(total == 27);
}

TEST_CASE("graded decomposition of Bder") {
  for (long long n = 0; n <= 6; ++n) {
    const Module v = build_Vn(n);
    const BiderivationSpace bs = bder_space(v.algebra(), v);
    const auto graded = bder_graded_decomposition(bs);
    std::size_t total = 0;
    for (const auto& [gamma, maps] : graded) {
      total += maps.size();
      if (n == 2 && gamma == 0) {
        CHECK(maps.size() == 1);
      } else {
        CHECK(maps.empty());
      }
      for (const auto& g : maps) {
        CHECK(check_biderivation(g, v.algebra(), v));
        CHECK(blin_weight_component(v.algebra(), v, gamma).contains(g.coords));
      }
    }
    CHECK(total == bs.dim());
  }
}

TEST_CASE("graded component factorization of the n = 2 generator") {
  const Module v = build_Vn(2);
  const LieAlgebra& l = v.algebra();
  const BiderivationSpace bs = bder_space(l, v);
  REQUIRE(bs.dim() == 1);
  const BilinearMap& g = bs.basis[0];
  const auto factored = graded_component_factorization(g, l, v);
  REQUIRE(factored.has_value());
  const auto& [phi, psi] = *factored;
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(g.value_basis(j, k) == v.act_basis(j, phi.value_basis(k)));
      CHECK(g.value_basis(j, k) == v.act_basis(k, psi.value_basis(j)));
    }
  }
  CHECK(psi == phi.scaled(-1));
  const AffineSubspace hom0 = hom_weight_component(l, v, 0);
  CHECK(hom0.contains(phi.coords));
  CHECK(hom0.contains(psi.coords));
}

TEST_CASE("factorization of the zero map is zero") {
  const Module v = build_Vn(2);
  const auto factored = graded_component_factorization(BilinearMap::zero(3, 3),
                                                       v.algebra(), v);
  REQUIRE(factored.has_value());
  CHECK(factored->first.is_zero());
  CHECK(factored->second.is_zero());
}

TEST_CASE("factorization hypotheses are enforced") {
  const Module v0 = build_Vn(0);
  CHECK_THROWS_AS(graded_component_factorization(BilinearMap::zero(3, 1),
                                                 v0.algebra(), v0),
                  HypothesisError);
}

TEST_CASE("graded coefficient relations at n = 2, i = 1") {
  const auto sol = solve_graded_coefficients(2, 1);
  CHECK(sol.relations == qmat({{1, 0, 2}, {-2, 2, 0}, {0, 1, -2}}));
  CHECK(sol.solutions.empty());
  CHECK(sol.component_forced_zero);
}

TEST_CASE("graded coefficients are forced to zero for every 1 <= n <= 12") {
  for (long long n = 1; n <= 12; ++n) {
    for (long long i = 0; i <= n; ++i) {
      CAPTURE(n);
      CAPTURE(i);
      CHECK(solve_graded_coefficients(n, i).component_forced_zero);
    }
  }
}

TEST_CASE("the n = 0 relations leave a free coefficient") {
  const auto sol = solve_graded_coefficients(0, 0);
  CHECK(!sol.component_forced_zero);
  CHECK(sol.relations.is_zero());
}
