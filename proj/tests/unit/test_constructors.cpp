#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/oracles.hpp"
#include "templikit/constructors/constructors.hpp"
#include "templikit/errors.hpp"

using namespace templikit;
using namespace templikit::constructors;
using coeff::Matrix;
using templicial::validate_templicial;

TEST_CASE("linear categories") {
  const Ring F3 = Ring::prime_field(3);
  CHECK(LinearCategory::algebra(F3, {Scalar(0), Scalar(0), Scalar(1)}).validate().passed());
  CHECK(LinearCategory::algebra(Ring::integers(), {Scalar(1), Scalar(-3), Scalar(0), Scalar(1)}).validate().passed());
  CHECK(LinearCategory::unit_category(Ring::chain(2, 3)).validate().passed());
  CHECK(LinearCategory::arrow(Ring::integers()).validate().passed());
  auto C = LinearCategory::algebra(F3, {Scalar(0), Scalar(0), Scalar(1)});
  auto m = C.composition.component(0, 0).matrix();
  m(0, 0) = Scalar(2);
  C.composition.set_component(0, 0, Morphism(C.composition.domain().hom(0, 0), C.homs.hom(0, 0), m));
  CHECK_FALSE(C.validate().passed());
  CHECK_THROWS_AS(LinearCategory::algebra(F3, {Scalar(1), Scalar(2)}), ConfigurationError);
}

TEST_CASE("simplicial sets") {
  auto D3 = sset_simplex(3, 4);
  CHECK(D3.validate().passed());
  // n-simplices of the 3-simplex are weakly increasing sequences: C(n + 4, 3).
  for (int n = 0; n <= 4; ++n) CHECK(D3.count(n) == oracle::binomial(static_cast<std::uint64_t>(n + 4), 3));
  auto B2 = sset_boundary(2, 3);
  CHECK(B2.validate().passed());
  CHECK(B2.count(2) == 9);  // 3 edges with 2 degeneracies, 3 vertices with 1
  auto H = sset_horn(2, 1, 3);
  CHECK(H.count(1) == 2 + 3);
  auto P = paper_P_shape(4);
  CHECK(P.validate().passed());
  auto glued = sset_glue(sset_simplex(2, 4, {"a", "b1", "c"}), sset_boundary(2, 4, {"a", "b2", "c"}));
  for (int n = 0; n <= 4; ++n) CHECK(glued.count(n) == P.count(n));
  std::vector<std::vector<bool>> less{{false, true, true}, {false, false, true}, {false, false, false}};
  auto N = sset_poset_nerve(less, 3);
  for (int n = 0; n <= 3; ++n) CHECK(N.count(n) == oracle::binomial(static_cast<std::uint64_t>(n + 3), 2));
  CHECK_THROWS_AS(sset_poset_nerve({{false, true}, {true, false}}, 2), ConfigurationError);
}

TEST_CASE("nerves validate and have the expected ranks") {
  const Ring F3 = Ring::prime_field(3);
  auto X = nerve(LinearCategory::algebra(F3, {Scalar(0), Scalar(0), Scalar(1)}), 4);
  CHECK(validate_templicial(X).passed());
  for (int n = 0; n <= 4; ++n) CHECK(X.level(n).hom(0, 0).gens() == (std::size_t{1} << n));
  auto A = nerve(LinearCategory::arrow(Ring::integers()), 3);
  CHECK(validate_templicial(A).passed());
  // arrow category: X_n(a, b) has rank n (position of the non-identity factor).
  for (int n = 1; n <= 3; ++n) CHECK(A.level(n).hom(0, 1).gens() == static_cast<std::size_t>(n));
  CHECK(A.level(2).hom(1, 0).gens() == 0);
}

TEST_CASE("free templicial modules") {
  auto X = free_templicial(sset_simplex(1, 4), Ring::integers(), 4);
  CHECK(validate_templicial(X).passed());
  CHECK(X.level(2).hom(0, 1).gens() == 2);
  CHECK(X.level(4).hom(0, 1).gens() == 4);
  auto Y = free_templicial(sset_simplex(2, 4), Ring::chain(3, 2), 4);
  CHECK(validate_templicial(Y).passed());
  CHECK_THROWS_AS(free_templicial(sset_simplex(1, 2), Ring::integers(), 3), ConfigurationError);
}

TEST_CASE("builtins") {
  for (const auto& name : builtin_names()) {
    INFO(name);
    CHECK(validate_templicial(builtin(name, 4)).passed());
  }
  auto P = builtin("paper_P", 4);
  CHECK(P.level(1).hom(0, 3).gens() == 1);
  CHECK(P.level(2).hom(0, 3).gens() == 3);
  auto D = builtin("paper_P_deformed", 4);
  CHECK(D.comultiplication(1, 1) != builtin_paper_P(Ring::dual_chain(2, 2), 4).comultiplication(1, 1));
  CHECK_THROWS_AS(builtin("nope"), ConfigurationError);
}

TEST_CASE("changes of basis and mutations") {
  auto X = generate_algebra_nerve(11, 5, 2, 3);
  CHECK(validate_templicial(X).passed());
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    auto Y = change_of_basis(X, seed);
    CHECK(validate_templicial(Y).passed());
  }
  auto Z = generate_poset_free(4, Ring::chain(2, 3), 4, 4);
  CHECK(validate_templicial(Z).passed());
  auto W = change_of_basis(Z, 9);
  CHECK(validate_templicial(W).passed());

  auto M = builtin_paper_P(Ring::prime_field(2), 3);
  auto f = M.face(2, 1).component(0, 3);
  auto m = f.matrix();
  m(0, 0) = Scalar(m(0, 0) == Scalar(0) ? 1 : 0);
  M.set_face(2, 1, 0, 3, Morphism(f.domain(), f.codomain(), m));
  CHECK_FALSE(validate_templicial(M).passed());
}
