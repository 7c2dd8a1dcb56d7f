#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "templikit/coeff/extension.hpp"
#include "templikit/coeff/limits.hpp"
#include "templikit/errors.hpp"

using namespace templikit::coeff;

namespace {

std::vector<Ring> finite_rings() {
  return {Ring::prime_field(2), Ring::prime_field(3), Ring::chain(2, 2), Ring::chain(2, 3),
          Ring::chain(3, 2),    Ring::dual_chain(2, 2), Ring::dual_chain(3, 2), Ring::dual_chain(2, 3)};
}

Morphism mor(const Module& M, const Module& N, const std::vector<std::vector<std::int64_t>>& rows) {
  return Morphism(M, N, Matrix::from_rows(rows));
}

}  // namespace

TEST_CASE("ring construction and descriptors") {
  CHECK(Ring::chain(5, 1).kind() == RingKind::PrimeField);
  CHECK(Ring::dual_chain(5, 1) == Ring::prime_field(5));
  CHECK(Ring::parse("Z/8") == Ring::chain(2, 3));
  CHECK(Ring::parse("GF(7)") == Ring::prime_field(7));
  CHECK(Ring::parse("F_3") == Ring::prime_field(3));
  CHECK(Ring::parse("F2[e]/(e^2)") == Ring::dual_chain(2, 2));
  CHECK(Ring::parse("Z/2") == Ring::prime_field(2));
  CHECK(Ring::dual_chain(3, 2).name() == "F3[e]/(e^2)");
  CHECK_THROWS_AS(Ring::prime_field(6), templikit::ConfigurationError);
  CHECK_THROWS_AS(Ring::parse("Z/12"), templikit::ConfigurationError);
  CHECK_THROWS_AS(Ring::parse("R[x]"), templikit::ConfigurationError);
  CHECK_THROWS_AS(Ring::chain(2, 70), templikit::ConfigurationError);
}

TEST_CASE("dual-chain arithmetic against polynomial multiplication") {
  Ring R = Ring::dual_chain(3, 3);
  // (1 + e)(2 + e^2) = 2 + 2e + e^2 + e^3 = 2 + 2e + e^2
  Scalar a = R.parse_element("1+e");
  Scalar b = R.parse_element("2+e^2");
  CHECK(R.format_element(R.mul(a, b)) == "2+2e+e^2");
  CHECK(R.format_element(R.parse_element("-e")) == "2e");
  for (std::int64_t x = 0; x < R.modulus(); ++x) {
    Scalar s(x);
    CHECK(R.parse_element(R.format_element(s)) == s);
    if (R.is_unit(s)) CHECK(R.mul(s, R.inverse(s)) == Scalar(1));
    CHECK(R.add(s, R.neg(s)) == Scalar(0));
  }
}

TEST_CASE("local ring ideal operations agree with brute force") {
  for (const Ring& R : finite_rings()) {
    for (std::int64_t a = 0; a < R.modulus(); ++a)
      for (std::int64_t b = 0; b < R.modulus(); ++b) {
        bool div = false;
        for (std::int64_t q = 0; q < R.modulus() && !div; ++q) div = R.mul(Scalar(a), Scalar(q)) == Scalar(b);
        CHECK(R.divides(Scalar(a), Scalar(b)) == div);
        if (div) CHECK(R.mul(Scalar(a), R.exact_div(Scalar(b), Scalar(a))) == Scalar(b));
        // colon ideal (a : b) = {r : r b in (a)}
        Scalar c = R.colon(Scalar(a), Scalar(b));
        for (std::int64_t r = 0; r < R.modulus(); ++r) {
          bool in_ideal = R.divides(Scalar(a), R.mul(Scalar(r), Scalar(b)));
          CHECK(in_ideal == R.divides(c, Scalar(r)));
        }
      }
  }
}

TEST_CASE("Smith form examples") {
  Ring Z = Ring::integers();
  SmithForm sf = smith_form(Z, Matrix::from_rows({{2, 0}, {0, 3}}));
  CHECK(sf.diagonal == std::vector<Scalar>{Scalar(1), Scalar(6)});

  for (const Ring& R : {Ring::integers(), Ring::prime_field(5), Ring::chain(2, 2)}) {
    SmithForm id = smith_form(R, Matrix::identity(3));
    CHECK(id.D == Matrix::identity(3));
    CHECK(id.left() == Matrix::identity(3));
    CHECK(id.right() == Matrix::identity(3));
  }

  SmithForm z4 = smith_form(Ring::chain(2, 2), Matrix::from_rows({{2}}));
  CHECK(z4.diagonal[0] == Scalar(2));
  CHECK(Ring::chain(2, 2).valuation(z4.diagonal[0]) == 1);
}

TEST_CASE("Smith form reconstructs the input and is deterministic") {
  std::mt19937_64 rng(7);
  std::vector<Ring> rings = finite_rings();
  rings.push_back(Ring::integers());
  rings.push_back(Ring::rationals());
  for (const Ring& R : rings) {
    for (int trial = 0; trial < 30; ++trial) {
      std::size_t r = rng() % 6, c = rng() % 6;
      Matrix A(r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) A(i, j) = R.reduce(oracle::random_element(rng, R));
      SmithForm sf = smith_form(R, A);
      CHECK(mat_mul(R, mat_mul(R, sf.left(), sf.D), sf.right()) == A);
      CHECK(mat_mul(R, mat_mul(R, sf.P, A), sf.Q) == sf.D);
      CHECK(mat_mul(R, sf.P, sf.Pinv) == Matrix::identity(r));
      CHECK(mat_mul(R, sf.Q, sf.Qinv) == Matrix::identity(c));
      for (std::size_t i = 0; i + 1 < sf.rank; ++i) CHECK(R.divides(sf.diagonal[i], sf.diagonal[i + 1]));
      for (std::size_t i = 0; i < sf.rank; ++i) CHECK(R.ideal(sf.diagonal[i]) == sf.diagonal[i]);
      SmithForm again = smith_form(R, A);
      CHECK(again.P == sf.P);
      CHECK(again.Q == sf.Q);
    }
  }
}

TEST_CASE("module normal form, tensor, flatness") {
  Ring Z = Ring::integers();
  Module m(Z, {Scalar(2), Scalar(0), Scalar(3), Scalar(1)});
  CHECK(m.factors() == std::vector<Scalar>{Scalar(6), Scalar(0)});
  CHECK(m.to_string() == "Z + Z/6");
  CHECK(tensor(Module::cyclic(Z, Scalar(4)), Module::cyclic(Z, Scalar(2))).isomorphic(Module::cyclic(Z, Scalar(2))));
  Module M = Module(Z, {Scalar(3), Scalar(0)});
  CHECK(tensor(Module::free(Z, 1), M) == M);
  Ring F2 = Ring::parse("Z/2");
  CHECK(tensor(Module::free(F2, 2), Module::free(F2, 3)).isomorphic(Module::free(F2, 6)));

  CHECK_FALSE(Module::cyclic(Z, Scalar(2)).is_flat());
  CHECK(Module::free(Ring::dual_chain(3, 2), 2).is_flat());
  Ring Z4 = Ring::chain(2, 2);
  CHECK_FALSE(Module::cyclic(Z4, Scalar(2)).is_flat());
  CHECK(Module::cyclic(Z4, Scalar(2)).to_string() == "F2");
  CHECK(Module(Ring::chain(2, 3), {Scalar(4), Scalar(2), Scalar(0)}).to_string() == "Z/8 + F2 + Z/4");
  CHECK_THROWS_AS(tensor(Module::free(Z, 1), Module::free(Z4, 1)), templikit::MismatchError);
}

TEST_CASE("morphism congruence validity") {
  Ring Z4 = Ring::chain(2, 2);
  Module two = Module::cyclic(Z4, Scalar(2));
  Module four = Module::free(Z4, 1);
  CHECK_NOTHROW(mor(two, four, {{2}}));
  CHECK_THROWS_AS(mor(two, four, {{1}}), templikit::StructuralError);
  CHECK_NOTHROW(mor(four, two, {{3}}));
  CHECK(mor(four, two, {{3}})(0, 0) == Scalar(1));
}

TEST_CASE("analyze examples") {
  Ring Z = Ring::integers();
  Morphism times2 = mor(Module::free(Z, 1), Module::free(Z, 1), {{2}});
  Analysis a = analyze(times2);
  CHECK(a.injective);
  CHECK_FALSE(a.surjective);
  CHECK_FALSE(a.split_mono);
  CHECK(a.cokernel.module.to_string() == "Z/2");

  Module M(Z, {Scalar(0), Scalar(4)});
  Analysis z = analyze(Morphism::zero(M, M));
  CHECK(z.kernel.module.isomorphic(M));
  CHECK(z.image.module.is_zero());
  CHECK(z.cokernel.module.isomorphic(M));

  Ring F5 = Ring::prime_field(5);
  Analysis p = analyze(mor(Module::free(F5, 2), Module::free(F5, 1), {{1, 0}}));
  CHECK(p.surjective);
  CHECK(p.kernel.module.isomorphic(Module::free(F5, 1)));

  Analysis s = analyze(mor(Module::free(Z, 1), Module::free(Z, 2), {{2}, {3}}));
  CHECK(s.split_mono);
  CHECK(compose(*s.retraction, mor(Module::free(Z, 1), Module::free(Z, 2), {{2}, {3}})).is_identity());
}

TEST_CASE("analyze agrees with brute-force enumeration over finite rings") {
  std::mt19937_64 rng(11);
  for (const Ring& R : finite_rings()) {
    for (int trial = 0; trial < 25; ++trial) {
      Module M = oracle::random_module(rng, R, 3);
      Module N = oracle::random_module(rng, R, 3);
      if (oracle::finite_size(M) > 4096 || oracle::finite_size(N) > 4096) continue;
      Morphism f = oracle::random_morphism(rng, M, N, trial % 5);
      Analysis a = analyze(f);
      auto img = oracle::image_set(f);
      std::int64_t ker = oracle::kernel_count(f);
      CHECK(oracle::finite_size(a.kernel.module) == ker);
      CHECK(oracle::finite_size(a.image.module) == static_cast<std::int64_t>(img.size()));
      CHECK(oracle::finite_size(a.cokernel.module) * static_cast<std::int64_t>(img.size()) == oracle::finite_size(N));
      CHECK(compose(f, a.kernel.inclusion).is_zero());
      CHECK(compose(a.cokernel.projection, f).is_zero());
      CHECK(is_surjective(a.cokernel.projection));
      CHECK(is_injective(a.kernel.inclusion));
      CHECK(is_injective(a.image.inclusion));
      CHECK(a.surjective == is_surjective(f));
      CHECK(a.surjective == (static_cast<std::int64_t>(img.size()) == oracle::finite_size(N)));
      CHECK(a.injective == (ker == 1));
      // split iff N ~ M + coker (cancellation for finitely generated modules)
      if (a.injective) {
        bool iso = N.isomorphic(direct_sum(M, a.cokernel.module));
        CHECK(a.split_mono == iso);
      }
    }
  }
}

TEST_CASE("solve and factor_through") {
  std::mt19937_64 rng(5);
  for (const Ring& R : finite_rings()) {
    for (int trial = 0; trial < 20; ++trial) {
      Module L = oracle::random_module(rng, R, 3);
      Module P = oracle::random_module(rng, R, 3);
      Module T = oracle::random_module(rng, R, 2);
      Morphism a = oracle::random_morphism(rng, L, P);
      Morphism x = oracle::random_morphism(rng, T, L);
      Morphism b = compose(a, x);
      auto y = factor_through(a, b);
      REQUIRE(y.has_value());
      CHECK(compose(a, *y) == b);
    }
  }
}

TEST_CASE("base change") {
  RingExtension t(Ring::chain(2, 2), Ring::prime_field(2));
  CHECK(base_change(t, Module::free(Ring::chain(2, 2), 3)).isomorphic(Module::free(Ring::prime_field(2), 3)));
  RingExtension d(Ring::dual_chain(3, 2), Ring::prime_field(3));
  Ring R = Ring::dual_chain(3, 2);
  Morphism f(Module::free(R, 1), Module::free(R, 1), Matrix(1, 1));
  Matrix m(1, 1);
  m(0, 0) = R.parse_element("1+e");
  Morphism g(Module::free(R, 1), Module::free(R, 1), m);
  CHECK(base_change(d, g).matrix() == Matrix::identity(1));
  RingExtension e(Ring::chain(2, 3), Ring::prime_field(2));
  CHECK(base_change(e, Module::cyclic(Ring::chain(2, 3), Scalar(4))).to_string() == "F2");
  CHECK(e.kernel_exponent() == 3);
  CHECK_FALSE(e.small());
  auto steps = e.small_steps();
  REQUIRE(steps.size() == 2);
  CHECK(steps[0].to_string() == "Z/8->Z/4");
  CHECK(steps[1].to_string() == "Z/4->F2");
  CHECK(RingExtension(Ring::chain(2, 3), Ring::chain(2, 2)).kernel_as_target_module().to_string() == "F2");
  CHECK_THROWS_AS(RingExtension(Ring::chain(2, 2), Ring::chain(3, 1)), templikit::ConfigurationError);
  CHECK_THROWS_AS(RingExtension(Ring::dual_chain(2, 2), Ring::chain(2, 1)).small_steps().at(5), std::out_of_range);
  CHECK_THROWS_AS(RingExtension(Ring::chain(2, 2), Ring::dual_chain(2, 2)), templikit::ConfigurationError);
}

TEST_CASE("base change preserves surjectivity and free ranks") {
  std::mt19937_64 rng(13);
  std::vector<RingExtension> exts{RingExtension(Ring::chain(2, 3), Ring::chain(2, 1)),
                                  RingExtension(Ring::chain(3, 2), Ring::prime_field(3)),
                                  RingExtension(Ring::dual_chain(2, 3), Ring::dual_chain(2, 2))};
  for (const auto& t : exts) {
    for (int trial = 0; trial < 40; ++trial) {
      Module M = oracle::random_module(rng, t.source(), 3);
      Module N = oracle::random_module(rng, t.source(), 3);
      Morphism f = oracle::random_morphism(rng, M, N);
      if (is_surjective(f)) CHECK(is_surjective(base_change(t, f)));
      Module F = Module::free(t.source(), M.gens());
      CHECK(base_change(t, F).rank() == F.rank());
    }
  }
}

TEST_CASE("finite limits and colimits") {
  Ring Z = Ring::integers();
  Module one = Module::free(Z, 1);
  {
    ModuleDiagram D(Z);
    D.add_object(Module(Z, {Scalar(0), Scalar(5)}));
    Limit L = finite_limit(D);
    CHECK(L.object == D.objects[0]);
    CHECK(L.cone[0].is_identity());
    Colimit C = finite_colimit(D);
    CHECK(C.object.isomorphic(D.objects[0]));
  }
  {
    ModuleDiagram D(Z);
    D.add_object(one);
    D.add_object(one);
    D.add_object(one);
    D.add_arrow(0, 2, mor(one, one, {{2}}));
    D.add_arrow(1, 2, mor(one, one, {{3}}));
    Limit L = finite_limit(D);
    REQUIRE(L.object.isomorphic(one));
    Scalar a = L.cone[0](0, 0), b = L.cone[1](0, 0);
    CHECK(((a == Scalar(3) && b == Scalar(2)) || (a == Scalar(-3) && b == Scalar(-2))));
    // test cone: T = Z, legs (3, 2, 6) factor uniquely
    Morphism u = L.factor(one, {mor(one, one, {{6}}), mor(one, one, {{4}}), mor(one, one, {{12}})});
    CHECK(u(0, 0).abs() == Scalar(2));
    CHECK_THROWS_AS(L.factor(one, {mor(one, one, {{1}}), mor(one, one, {{1}}), mor(one, one, {{2}})}),
                    templikit::StructuralError);
  }
  {
    Module M(Z, {Scalar(0), Scalar(6)});
    ModuleDiagram D(Z);
    D.add_object(M);
    D.add_object(M);
    D.add_arrow(0, 1, Morphism::identity(M));
    D.add_arrow(0, 1, Morphism::identity(M));
    Colimit C = finite_colimit(D);
    CHECK(C.object.isomorphic(M));
  }
  {
    ModuleDiagram D(Z);
    CHECK(finite_limit(D).object.is_zero());
    CHECK(finite_colimit(D).object.is_zero());
    D.add_object(one);
    D.add_arrow(0, 3, Morphism::identity(one));
    CHECK_THROWS_AS(finite_limit(D), templikit::StructuralError);
  }
}

TEST_CASE("limits agree with brute-force compatible families") {
  std::mt19937_64 rng(17);
  for (const Ring& R : {Ring::prime_field(2), Ring::chain(2, 2), Ring::dual_chain(2, 2)}) {
    for (int trial = 0; trial < 30; ++trial) {
      std::size_t n = 1 + rng() % 4;
      ModuleDiagram D(R);
      std::int64_t total = 1;
      for (std::size_t i = 0; i < n; ++i) {
        Module m = oracle::random_module(rng, R, 2);
        total *= oracle::finite_size(m);
        D.add_object(m);
      }
      if (total > 1 << 14) continue;
      std::size_t na = rng() % 6;
      for (std::size_t k = 0; k < na; ++k) {
        std::size_t s = rng() % n, t = rng() % n;
        D.add_arrow(s, t, oracle::random_morphism(rng, D.objects[s], D.objects[t]));
      }
      std::vector<Module> objs = D.objects;
      Module prod = direct_sum(objs);
      std::int64_t count = 0;
      for (const auto& x : oracle::elements(prod)) {
        std::vector<std::vector<Scalar>> comp(n);
        std::size_t off = 0;
        for (std::size_t i = 0; i < n; ++i) {
          comp[i].assign(x.begin() + static_cast<long>(off), x.begin() + static_cast<long>(off + objs[i].gens()));
          off += objs[i].gens();
        }
        bool ok = true;
        for (const auto& a : D.arrows) ok = ok && a.map.apply(comp[a.source]) == comp[a.target];
        count += ok;
      }
      Limit L = finite_limit(D);
      CHECK(oracle::finite_size(L.object) == count);
      for (const auto& a : D.arrows) CHECK(compose(a.map, L.cone[a.source]) == L.cone[a.target]);
      Limit again = finite_limit(D);
      CHECK(again.object == L.object);
      // the limit's own cone factors through the identity
      Morphism u = L.factor(L.object, L.cone);
      CHECK(u.is_identity());

      Colimit C = finite_colimit(D);
      for (const auto& a : D.arrows) CHECK(compose(C.cocone[a.target], a.map) == C.cocone[a.source]);
      Morphism v = C.factor(C.object, C.cocone);
      CHECK(v.is_identity());
    }
  }
}
