#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "templikit/constructors/constructors.hpp"
#include "templikit/errors.hpp"
#include "templikit/kan/kan.hpp"

using namespace templikit;
using namespace templikit::kan;
using namespace templikit::constructors;
using templicial::hom_necklicial;

namespace {

TemplicialModule nerve_f3(int N) {
  return nerve(LinearCategory::algebra(Ring::prime_field(3), {Scalar(0), Scalar(0), Scalar(1)}), N);
}

std::vector<std::vector<bool>> chain3() { return {{false, true, true}, {false, false, true}, {false, false, false}}; }

}  // namespace

TEST_CASE("horn and wing objects in low dimension") {
  auto X = nerve_f3(3);
  auto Y = hom_necklicial(X, 0, 0);
  auto H = horn_object(Y, 2, 1);
  CHECK(H.diagram.objects.size() == 1);
  CHECK(coeff::is_isomorphism(H.canonical));
  auto W = wing_object(Y, 2);
  CHECK(W.object.isomorphic(H.object));
  CHECK(truncated_wing_object(Y, 3, 0).object.is_zero());
  CHECK(truncated_wing_object(Y, 3, 2).object.isomorphic(wing_object(Y, 3).object));
  auto Z = templicial::zero_necklicial(Ring::prime_field(3), 3);
  CHECK(horn_object(Z, 3, 1).object.is_zero());
  CHECK(check_weak_kan(Z, 3).passed());
  CHECK(check_lifts_wings(Z, 3).passed());
  CHECK_THROWS_AS(horn_object(Y, 2, 0), RangeError);
}

TEST_CASE("wing object of the free module on the 3-simplex") {
  // Set-level oracle: compatible pairs of bipointed maps out of the two
  // wedges, agreeing on the common refinement {0,1,2,3}.
  auto X = free_templicial(sset_simplex(3, 3), Ring::prime_field(2), 3);
  auto Y = hom_necklicial(X, 0, 3);
  std::vector<std::vector<int>> left, right;
  for (int v = 0; v <= 3; ++v)
    for (int x = v; x <= 3; ++x) {
      left.push_back({0, v, x, 3});   // (0,v) then (v,x,3)
      right.push_back({0, v, x, 3});  // (0,v,x) then (x,3)
    }
  std::size_t count = 0;
  for (const auto& l : left)
    for (const auto& r : right) count += l == r;
  CHECK(wing_object(Y, 3).object.rank() == count);
  CHECK(check_wing_tower(Y, 3).passed());
}

TEST_CASE("quasi-category checks") {
  CHECK(check_quasicategory(nerve_f3(4), 4).passed());
  CHECK(check_lifts_wings(nerve_f3(4), 4).passed());
  auto F = free_templicial(sset_poset_nerve(chain3(), 4), Ring::prime_field(2), 4);
  CHECK(check_quasicategory(F, 4).passed());

  auto P = builtin("paper_P", 3);
  auto report = check_quasicategory(P, 3);
  CHECK_FALSE(report.passed());
  auto fails = report.failures();
  REQUIRE(fails.size() == 1);
  CHECK(fails[0].index == "hom (a,c) n=2 j=1");
  REQUIRE(fails[0].witness);
  CHECK(fails[0].witness->gens() == 1);
  CHECK(fails[0].witness->rank() == 1);
  auto wings = check_lifts_wings(P, 3);
  CHECK_FALSE(wings.passed());
  CHECK(wings.failures()[0].index == "hom (a,c) n=2");
}

TEST_CASE("degenerate subobjects") {
  auto S = builtin_s0_times_2(3);
  auto d1 = degenerate_subobject(S, 1);
  CHECK(d1.can.component(0, 0).matrix() == coeff::Matrix::from_rows({{2}}));
  CHECK(d1.nd.hom(0, 0).to_string() == "Z/2");
  auto report = check_deg_projective(S, 2);
  CHECK_FALSE(report.passed());
  auto fails = report.failures();
  REQUIRE_FALSE(fails.empty());
  CHECK(fails[0].index == "hom (*,*) n=1");
  CHECK(fails[0].witness->to_string() == "Z/2");
  CHECK(check_levelwise(S, Levelwise::Projective).passed());
  CHECK(ez_check(S, 2).verdict == Verdict::NotApplicable);

  auto D1 = free_templicial(sset_simplex(1, 3), Ring::integers(), 3);
  auto d2 = degenerate_subobject(D1, 2);
  CHECK(d2.deg.hom(0, 1).rank() == 2);
  CHECK(coeff::is_injective(d2.can.component(0, 1)));
  CHECK(d2.nd.hom(0, 1).is_zero());
  CHECK(check_deg_projective(D1, 3).passed());
  CHECK(ez_check(D1, 3).passed());
  CHECK(check_deg_projective(nerve_f3(3), 3).passed());
  CHECK(ez_check(nerve_f3(3), 3).passed());
}

TEST_CASE("levelwise flatness detects torsion") {
  auto X = builtin_s0_times_2(2);
  Quiver q(Ring::integers(), {"*"});
  q.set_hom(0, 0, Module::cyclic(Ring::integers(), Scalar(2)));
  X.set_level(2, q);
  auto r = check_levelwise(X, Levelwise::Flat);
  CHECK_FALSE(r.passed());
  CHECK(r.failures()[0].index == "hom (*,*) n=2");
}
