#include <doctest.h>

#include "liederiv/algstruct.hpp"
#include "liederiv/errors.hpp"
#include "test_util.hpp"

using namespace liederiv;
using testutil::qmat;
using testutil::qvec;
using testutil::random_qvec;

namespace {

// Independent oracle for the sl(2) structure constants: realize the basis as
// 2x2 traceless matrices, commutate numerically, and read the coordinates
// back off the matrix entries.
Matrix sl2_as_2x2(std::size_t j) {
  switch (j) {
    case 0:
      return qmat({{0, 1}, {0, 0}});
    case 1:
      return qmat({{1, 0}, {0, -1}});
    default:
      return qmat({{0, 0}, {1, 0}});
  }
}

Vec coords_of_traceless(const Matrix& m) {
  return {m(0, 1), m(0, 0), m(1, 0)};
}

LieAlgebra sl2_with_flipped_ef() {
  LieAlgebra good = build_sl2();
  std::vector<std::vector<Vec>> constants(3, std::vector<Vec>(3));
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t k = 0; k < 3; ++k) {
      constants[j][k] = good.bracket_basis(j, k);
    }
  }
  // Only [e,f] flipped to -h; [f,e] untouched, so antisymmetry breaks too.
  constants[0][2] = qvec({0, -1, 0});
  return LieAlgebra(good.basis_labels(), std::move(constants),
                    good.cartan_index());
}

}  // namespace

TEST_CASE("sl2 structure constants match the 2x2 commutator oracle") {
  const LieAlgebra l = build_sl2();
  REQUIRE(l.dim() == 3);
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t k = 0; k < 3; ++k) {
      const Vec expected =
          coords_of_traceless(commutator(sl2_as_2x2(j), sl2_as_2x2(k)));
      CHECK(l.bracket_basis(j, k) == expected);
    }
  }
}

TEST_CASE("sl2 passes the structural validators") {
  const LieAlgebra l = build_sl2();
  CHECK(check_antisymmetry(l));
  CHECK(check_jacobi(l));
  REQUIRE(l.cartan_index() == 1);
  REQUIRE(l.has_basis_weights());
  CHECK(l.basis_weights() == std::vector<long long>{2, 0, -2});
}

TEST_CASE("bracket extends bilinearly") {
  const LieAlgebra l = build_sl2();
  // [e + 2f, h] = [e,h] + 2[f,h] = -2e + 4f.
  CHECK(l.bracket(qvec({1, 0, 2}), qvec({0, 1, 0})) == qvec({-2, 0, 4}));
  CHECK_THROWS_AS(l.bracket(qvec({1, 0}), qvec({0, 1, 0})), InputError);
}

TEST_CASE("jacobi check rejects a flipped structure constant") {
  const LieAlgebra broken = sl2_with_flipped_ef();
  CHECK(!check_jacobi(broken));
  CHECK(!check_antisymmetry(broken));
}

TEST_CASE("abelian algebras satisfy jacobi") {
  const std::size_t d = 2;
  std::vector<std::vector<Vec>> constants(d, std::vector<Vec>(d, zero_vec(d)));
  const LieAlgebra abelian({"a", "b"}, std::move(constants));
  CHECK(check_jacobi(abelian));
  CHECK(check_antisymmetry(abelian));
  CHECK(!abelian.has_basis_weights());
}

TEST_CASE("V(n) realizes the defining action formulas") {
  for (long long n = 0; n <= 6; ++n) {
    const Module v = build_Vn(n);
    REQUIRE(v.dim() == static_cast<std::size_t>(n) + 1);
    for (long long i = 0; i <= n; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      const Vec basis = unit_vec(v.dim(), idx);
      Vec expected_e = zero_vec(v.dim());
      if (i >= 1) {
        expected_e[idx - 1] = Rational(i * (n + 1 - i));
      }
      CHECK(v.act_basis(0, basis) == expected_e);
      CHECK(v.act_basis(1, basis) == scale_vec(Rational(n - 2 * i), basis));
      Vec expected_f = zero_vec(v.dim());
      if (i < n) {
        expected_f[idx + 1] = 1;
      }
      CHECK(v.act_basis(2, basis) == expected_f);
    }
  }
}

TEST_CASE("V(n) satisfies the module axiom") {
  for (long long n = 0; n <= 8; ++n) {
    const Module v = build_Vn(n);
    CHECK(check_module(v.algebra(), v));
  }
}

TEST_CASE("module axiom fails when the e action is zeroed") {
  const Module v2 = build_Vn(2);
  std::vector<Matrix> action = {Matrix(3, 3), v2.action(1), v2.action(2)};
  const Module broken(v2.algebra(), std::move(action));
  CHECK(!check_module(v2.algebra(), broken));
}

TEST_CASE("trivial action is a module") {
  const LieAlgebra l = build_sl2();
  const Module trivial(l, {Matrix(1, 1), Matrix(1, 1), Matrix(1, 1)});
  CHECK(check_module(l, trivial));
  CHECK(trivial_submodule(l, trivial).dim() == 1);
}

TEST_CASE("V(n) has no nonzero fixed points for n >= 1") {
  for (long long n = 1; n <= 6; ++n) {
    const Module v = build_Vn(n);
    CHECK(trivial_submodule(v.algebra(), v).is_zero_point());
  }
  CHECK(trivial_submodule(build_Vn(0).algebra(), build_Vn(0)).dim() == 1);
}

TEST_CASE("direct sum stacks actions blockwise") {
  const Module v2 = build_Vn(2);
  const Module v0 = build_Vn(0);
  const Module sum = direct_sum(v2, v0);
  REQUIRE(sum.dim() == 4);
  CHECK(check_module(sum.algebra(), sum));
  // The V(0) summand is exactly the fixed-point subspace.
  const AffineSubspace fixed = trivial_submodule(sum.algebra(), sum);
  REQUIRE(fixed.dim() == 1);
  CHECK(fixed.contains(qvec({0, 0, 0, 1})));
  REQUIRE(sum.weight_labels().has_value());
  CHECK(*sum.weight_labels() == std::vector<long long>{2, 0, -2, 0});
}

TEST_CASE("direct sum rejects modules over different algebras") {
  const Module v1 = build_Vn(1);
  const LieAlgebra abelian(
      {"a", "b", "c"},
      std::vector<std::vector<Vec>>(3, std::vector<Vec>(3, zero_vec(3))));
  const Module other(abelian, {Matrix(2, 2), Matrix(2, 2), Matrix(2, 2)});
  CHECK_THROWS_AS(direct_sum(v1, other), InputError);
}

TEST_CASE("weight spaces of V(3)") {
  const WeightDecomposition w = weight_spaces(build_Vn(3));
  REQUIRE(w.size() == 4);
  CHECK(w.at(3) == std::vector<std::size_t>{0});
  CHECK(w.at(1) == std::vector<std::size_t>{1});
  CHECK(w.at(-1) == std::vector<std::size_t>{2});
  CHECK(w.at(-3) == std::vector<std::size_t>{3});
  CHECK(module_basis_weights(build_Vn(3)) ==
        std::vector<long long>{3, 1, -1, -3});
}

TEST_CASE("declared weight labels agree with the grading action") {
  for (long long n = 0; n <= 8; ++n) {
    const Module v = build_Vn(n);
    REQUIRE(v.weight_labels().has_value());
    CHECK(*v.weight_labels() == module_basis_weights(v));
  }
}

TEST_CASE("weight spaces need a diagonal grading action") {
  const LieAlgebra l = build_sl2();
  // Swap in a non-diagonal h action.
  const Module broken(l, {Matrix(2, 2), qmat({{0, 1}, {0, 0}}), Matrix(2, 2)});
  CHECK_THROWS_AS(weight_spaces(broken), UnsupportedError);
  const LieAlgebra no_cartan(
      {"a"}, std::vector<std::vector<Vec>>(1, std::vector<Vec>(1, zero_vec(1))));
  const Module flat(no_cartan, {Matrix(1, 1)});
  CHECK_THROWS_AS(weight_spaces(flat), UnsupportedError);
}

TEST_CASE("adjoint module of sl2") {
  const LieAlgebra l = build_sl2();
  const Module ad = adjoint_module(l);
  CHECK(check_module(l, ad));
  CHECK(ad.action(1) == qmat({{2, 0, 0}, {0, 0, 0}, {0, 0, -2}}));
  CHECK(module_basis_weights(ad) == std::vector<long long>{2, 0, -2});
  // Adjoint of a 1-dim algebra is the zero action.
  const LieAlgebra tiny(
      {"a"}, std::vector<std::vector<Vec>>(1, std::vector<Vec>(1, zero_vec(1))));
  CHECK(adjoint_module(tiny).action(0).is_zero());
}

TEST_CASE("V(2) is isomorphic to the adjoint module") {
  const Module v2 = build_Vn(2);
  const Module ad = adjoint_module(v2.algebra());
  const auto t = find_isomorphism(v2, ad);
  REQUIRE(t.has_value());
  REQUIRE(rank(*t) == 3);
  // Intertwining identity on every basis element.
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(*t * v2.action(j) == ad.action(j) * *t);
  }
  // The weight-2 anchor: T v_0 is a multiple of e.
  CHECK((*t)(1, 0) == 0);
  CHECK((*t)(2, 0) == 0);
  CHECK((*t)(0, 0) != 0);
}

TEST_CASE("find_isomorphism rejects dimension mismatch and unrelated modules") {
  CHECK(!find_isomorphism(build_Vn(1), build_Vn(2)).has_value());
  const Module v1 = build_Vn(1);
  const Module ad = adjoint_module(v1.algebra());
  CHECK(!find_isomorphism(v1, ad).has_value());
}

TEST_CASE("self-intertwiners of a simple module form a line") {
  for (long long n = 1; n <= 4; ++n) {
    const Module v = build_Vn(n);
    const auto t = find_isomorphism(v, v);
    REQUIRE(t.has_value());
    // Any self-intertwiner is scalar here; the found one must be too.
    const Rational c = (*t)(0, 0);
    CHECK(*t == Matrix::identity(v.dim()).scaled(c));
  }
}

TEST_CASE("module act is linear in the algebra argument") {
  const Module v = build_Vn(3);
  SplitMix64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const Vec x = random_qvec(rng, 3);
    const Vec w = random_qvec(rng, 4);
    Vec expected = zero_vec(4);
    for (std::size_t j = 0; j < 3; ++j) {
      axpy(expected, x[j], v.act_basis(j, w));
    }
    CHECK(v.act(x, w) == expected);
  }
}

TEST_CASE("constructors validate shapes") {
  CHECK_THROWS_AS(
      LieAlgebra({"a", "b"},
                 std::vector<std::vector<Vec>>(1, std::vector<Vec>(2, zero_vec(2)))),
      InputError);
  const LieAlgebra l = build_sl2();
  CHECK_THROWS_AS(Module(l, {Matrix(2, 2), Matrix(2, 2)}), InputError);
  CHECK_THROWS_AS(Module(l, {Matrix(2, 2), Matrix(2, 2), Matrix(3, 3)}),
                  InputError);
  CHECK_THROWS_AS(build_Vn(-1), InputError);
  CHECK_THROWS_AS(basis_element(l, 3), InputError);
}
