#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/oracles.hpp"
#include "templikit/errors.hpp"
#include "templikit/quiver/quiver.hpp"

using namespace templikit;
using namespace templikit::quiver;
using coeff::Matrix;
using coeff::Scalar;

namespace {

Quiver random_quiver(std::mt19937_64& rng, const Ring& R, const std::vector<std::string>& S, std::size_t max_gens) {
  Quiver q(R, S);
  for (std::size_t a = 0; a < S.size(); ++a)
    for (std::size_t b = 0; b < S.size(); ++b) q.set_hom(a, b, oracle::random_module(rng, R, max_gens));
  return q;
}

QuiverMorphism random_qmorphism(std::mt19937_64& rng, const Quiver& P, const Quiver& Q) {
  QuiverMorphism f(P, Q);
  for (std::size_t a = 0; a < P.size(); ++a)
    for (std::size_t b = 0; b < P.size(); ++b) f.set_component(a, b, oracle::random_morphism(rng, P.hom(a, b), Q.hom(a, b)));
  return f;
}

}  // namespace

TEST_CASE("unit law and one-vertex tensor") {
  std::mt19937_64 rng(7);
  std::vector<std::string> S{"a", "b", "c"};
  for (const auto& R : {Ring::integers(), Ring::chain(2, 3), Ring::dual_chain(3, 2)}) {
    auto I = Quiver::unit(R, S);
    for (int t = 0; t < 5; ++t) {
      auto Q = random_quiver(rng, R, S, 2);
      CHECK(tensor_S(I, Q) == Q);
      CHECK(tensor_S(Q, I) == Q);
      auto f = random_qmorphism(rng, Q, random_quiver(rng, R, S, 2));
      CHECK(tensor_S(QuiverMorphism::identity(I), f) == f);
    }
  }
  Ring Z = Ring::integers();
  Quiver M(Z, {"*"}), N(Z, {"*"});
  M.set_hom(0, 0, Module(Z, {Scalar(0), Scalar(4)}));
  N.set_hom(0, 0, Module(Z, {Scalar(6)}));
  CHECK(tensor_S(M, N).hom(0, 0) == coeff::tensor(M.hom(0, 0), N.hom(0, 0)));
}

TEST_CASE("path tensor") {
  Ring R = Ring::prime_field(5);
  std::vector<std::string> S{"a", "b", "c"};
  Quiver P(R, S), Q(R, S);
  P.set_hom(0, 1, Module::free(R, 1));
  Q.set_hom(1, 2, Module::free(R, 2));
  auto T = tensor_S(P, Q);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t c = 0; c < 3; ++c) CHECK(T.hom(a, c).rank() == (a == 0 && c == 2 ? 2u : 0u));
  CHECK(T.vertex("c") == 2);
  CHECK_THROWS_AS(T.vertex("d"), ConfigurationError);
  CHECK_THROWS_AS(tensor_S(P, Quiver(R, {"a", "b"})), MismatchError);
}

TEST_CASE("associativity and rank formula") {
  std::mt19937_64 rng(11);
  std::vector<std::string> S{"x", "y"};
  for (const auto& R : {Ring::integers(), Ring::chain(3, 2), Ring::prime_field(2)}) {
    for (int t = 0; t < 8; ++t) {
      auto A = random_quiver(rng, R, S, 2), B = random_quiver(rng, R, S, 2), C = random_quiver(rng, R, S, 2);
      auto l = tensor_S(tensor_S(A, B), C), r = tensor_S(A, tensor_S(B, C));
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) CHECK(l.hom(a, b).factors() == r.hom(a, b).factors());
      Quiver F(R, S), G(R, S);
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) {
          F.set_hom(a, b, Module::free(R, rng() % 3));
          G.set_hom(a, b, Module::free(R, rng() % 3));
        }
      auto FG = tensor_S(F, G);
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t c = 0; c < 2; ++c) {
          std::size_t expect = 0;
          for (std::size_t b = 0; b < 2; ++b) expect += F.hom(a, b).rank() * G.hom(b, c).rank();
          CHECK(FG.hom(a, c).rank() == expect);
        }
    }
  }
}

TEST_CASE("tensor of morphisms is functorial") {
  std::mt19937_64 rng(3);
  std::vector<std::string> S{"x", "y"};
  Ring R = Ring::chain(2, 2);
  for (int t = 0; t < 10; ++t) {
    auto A = random_quiver(rng, R, S, 2), B = random_quiver(rng, R, S, 2), C = random_quiver(rng, R, S, 2);
    auto D = random_quiver(rng, R, S, 2), E = random_quiver(rng, R, S, 2), F = random_quiver(rng, R, S, 2);
    auto f1 = random_qmorphism(rng, A, B), f2 = random_qmorphism(rng, B, C);
    auto g1 = random_qmorphism(rng, D, E), g2 = random_qmorphism(rng, E, F);
    CHECK(tensor_S(compose(f2, f1), compose(g2, g1)) == compose(tensor_S(f2, g2), tensor_S(f1, g1)));
  }
}

TEST_CASE("hom-wise limits") {
  std::mt19937_64 rng(5);
  Ring R = Ring::integers();
  std::vector<std::string> S{"x", "y"};
  auto Q = random_quiver(rng, R, S, 2);

  QuiverDiagram one(R, S);
  one.objects.push_back(Q);
  auto L = quiver_limit(one);
  CHECK(L.object == Q);
  CHECK(L.cone[0].is_identity());
  auto C = quiver_colimit(one);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) CHECK(coeff::is_isomorphism(C.cocone[0].component(a, b)));

  QuiverDiagram empty(R, S);
  CHECK(quiver_limit(empty).object.is_zero());
  CHECK(quiver_colimit(empty).object.is_zero());

  // Pullback of free quivers versus the componentwise computation.
  Quiver A(R, S), B(R, S), T(R, S);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      A.set_hom(a, b, Module::free(R, 2));
      B.set_hom(a, b, Module::free(R, 1));
      T.set_hom(a, b, Module::free(R, 2));
    }
  auto f = random_qmorphism(rng, A, T), g = random_qmorphism(rng, B, T);
  QuiverDiagram D(R, S);
  D.objects = {A, B, T};
  D.arrows = {{0, 2, f}, {1, 2, g}};
  auto P = quiver_limit(D);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      coeff::ModuleDiagram M(R);
      M.add_object(A.hom(a, b));
      M.add_object(B.hom(a, b));
      M.add_object(T.hom(a, b));
      M.add_arrow(0, 2, f.component(a, b));
      M.add_arrow(1, 2, g.component(a, b));
      CHECK(P.object.hom(a, b) == coeff::finite_limit(M).object);
    }
  CHECK(compose(f, P.cone[0]) == compose(g, P.cone[1]));
}

TEST_CASE("flat tensor") {
  std::mt19937_64 rng(19);
  std::vector<std::string> S{"x", "y", "z"};
  for (const auto& R : {Ring::integers(), Ring::dual_chain(2, 3)}) {
    for (int t = 0; t < 5; ++t) {
      auto A = random_quiver(rng, R, S, 2), B = random_quiver(rng, R, S, 2), C = random_quiver(rng, R, S, 2);
      auto A2 = random_quiver(rng, R, S, 2), B2 = random_quiver(rng, R, S, 2), C2 = random_quiver(rng, R, S, 2);
      CHECK(tensor_S(R, S, {A, B}) == tensor_S(A, B));
      CHECK(tensor_S(R, S, {}) == Quiver::unit(R, S));
      CHECK(tensor_S(R, S, {A}) == A);
      auto f = random_qmorphism(rng, A, A2), g = random_qmorphism(rng, B, B2), h = random_qmorphism(rng, C, C2);
      CHECK(tensor_S({f, g}) == tensor_S(f, g));
      auto ABC = tensor_S(R, S, {A, B, C});
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
          CHECK(ABC.hom(a, b).factors() == tensor_S(tensor_S(A, B), C).hom(a, b).factors());
      // Grouping segments does not change the flat map.
      auto fgh = tensor_S({f, g, h});
      Segment left{{A, B}, {A2, B2}, QuiverMorphism()};
      auto fg = tensor_S({f, g});
      left.map = fg;
      Segment right{{C}, {C2}, h};
      CHECK(tensor_segments(R, S, {left, right}) == fgh);
      // Unit segments insert or remove I_S factors.
      auto I = Quiver::unit(R, S);
      Segment unit{{}, {I}, QuiverMorphism::identity(I)};
      Segment mid{{B}, {B2}, g};
      auto ins = tensor_segments(R, S, {mid, unit});
      CHECK(ins.domain() == B);
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) CHECK(ins.component(a, b).matrix() == g.component(a, b).matrix());
    }
  }
}
