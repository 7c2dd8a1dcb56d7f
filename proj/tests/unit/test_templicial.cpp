#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "templikit/constructors/constructors.hpp"
#include "templikit/errors.hpp"

using namespace templikit;
using namespace templikit::templicial;
using namespace templikit::constructors;
using necklace::Necklace;

TEST_CASE("evaluation on necklaces") {
  auto X = nerve(LinearCategory::algebra(Ring::prime_field(3), {Scalar(0), Scalar(0), Scalar(1)}), 4);
  Evaluator ev(X);
  for (const auto& T : necklace::necklaces_up_to(4)) {
    std::size_t expected = std::size_t{1} << T.p;
    CHECK(ev.necklace(T).hom(0, 0).gens() == expected);
  }
  for (const auto& T : necklace::necklaces_up_to(3))
    CHECK(ev.map(NecklaceMap::identity(T)).is_identity());
}

TEST_CASE("hom necklicial modules are functorial") {
  for (const auto& X : {nerve(LinearCategory::arrow(Ring::integers()), 3), builtin_s0_times_2(3),
                        builtin_paper_P(Ring::prime_field(2), 3)}) {
    for (const auto& Y : hom_necklicials(X)) CHECK(validate_necklicial(Y).passed());
  }
}

TEST_CASE("validators agree on broken modules") {
  auto X = builtin_s0_times_2(3);
  auto q = X.level(1);
  QuiverMorphism three(q, quiver::tensor_S(q, q));
  three.set_component(0, 0, Morphism(q.hom(0, 0), three.codomain().hom(0, 0), coeff::Matrix::from_rows({{3}})));
  X.set_comultiplication(1, 1, three);
  CHECK_FALSE(validate_templicial(X).passed());
  CHECK_FALSE(validate_necklicial(hom_necklicial(X, 0, 0)).passed());
}

TEST_CASE("unit squares force the comultiplication of s0_times_2") {
  auto X = builtin_s0_times_2(3);
  for (int k = 1; k < 3; ++k)
    for (int l = 1; k + l <= 3; ++l) {
      const auto& f = X.comultiplication(k, l).component(0, 0);
      X.set_comultiplication(k, l, 0, 0, Morphism::identity(f.domain()));
    }
  const auto report = validate_templicial(X);
  REQUIRE_FALSE(report.passed());
  CHECK(report.violations.front().identity == "colax unit naturality");
  CHECK_FALSE(validate_necklicial(hom_necklicial(X, 0, 0)).passed());
}

TEST_CASE("necklicial operations") {
  const Ring Z = Ring::integers();
  auto Y = hom_necklicial(builtin_s0_times_2(3), 0, 0);
  auto T = tensor_external(Y, Module::cyclic(Z, Scalar(4)));
  CHECK(validate_necklicial(T).passed());
  CHECK(T.value(Necklace::simplex(1)).to_string() == Module::cyclic(Z, Scalar(4)).to_string());
  auto D = direct_sum(Y, Y);
  CHECK(validate_necklicial(D).passed());
  CHECK(D.value(Necklace::simplex(2)).gens() == 2);
  CHECK(validate_necklicial(zero_necklicial(Z, 3)).passed());
}
