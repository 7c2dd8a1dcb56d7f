#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "templikit/errors.hpp"
#include "templikit/necklace/necklace.hpp"

using namespace templikit::necklace;

namespace {

// All functions [p] -> [q] as value tuples, filtered afterwards.
std::vector<std::vector<int>> all_functions(int p, int q) {
  std::vector<std::vector<int>> out{{}};
  for (int i = 0; i <= p; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& v : out)
      for (int x = 0; x <= q; ++x) {
        auto w = v;
        w.push_back(x);
        next.push_back(w);
      }
    out = next;
  }
  return out;
}

bool monotone_endpoint(const std::vector<int>& v, int q) {
  if (v.front() != 0 || v.back() != q) return false;
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] > v[i + 1]) return false;
  return true;
}

std::int64_t brute_injective_into_simplex(int n) {
  std::int64_t count = 0;
  for (int p = 0; p <= n; ++p)
    for (unsigned mask = 0; mask < (1u << (p + 1)); ++mask) {
      if (!(mask & 1u) || !(mask & (1u << p))) continue;
      for (const auto& v : all_functions(p, n)) {
        if (!monotone_endpoint(v, n)) continue;
        bool inj = true;
        for (std::size_t i = 0; i + 1 < v.size(); ++i) inj = inj && v[i] < v[i + 1];
        count += inj;
      }
    }
  return count;
}

}  // namespace

TEST_CASE("wedge") {
  CHECK(wedge(Necklace(2, {0, 2}), Necklace(1, {0, 1})) == Necklace(3, {0, 2, 3}));
  auto x = Necklace(4, {0, 1, 4});
  CHECK(wedge(x, Necklace::simplex(0)) == x);
  CHECK(wedge(Necklace::simplex(0), x) == x);
  auto e = Necklace::simplex(1);
  CHECK(wedge(wedge(e, e), e) == Necklace(3, {0, 1, 2, 3}));
  CHECK(Necklace::from_beads({2, 1}).to_string() == "({0,2,3},3)");
  CHECK(Necklace(3, {0, 2, 3}).beads() == std::vector<int>{2, 1});
  CHECK_THROWS_AS(Necklace(3, {0, 2}), templikit::StructuralError);
}

TEST_CASE("enumeration counts") {
  for (int p = 1; p <= 8; ++p) CHECK(necklaces(p).size() == (std::size_t{1} << (p - 1)));
  CHECK(necklaces(0).size() == 1);
  std::int64_t pow3 = 1;
  for (int n = 1; n <= 6; ++n) {
    CHECK(static_cast<std::int64_t>(injective_into_simplex(n).size()) == pow3);
    CHECK(brute_injective_into_simplex(n) == pow3);
    pow3 *= 3;
  }
  auto f22 = fint_maps(2, 2);
  REQUIRE(f22.size() == 3);
  CHECK(f22[0].values == std::vector<int>{0, 0, 2});
  CHECK(f22[1].values == std::vector<int>{0, 1, 2});
  CHECK(f22[2].values == std::vector<int>{0, 2, 2});
  for (int p = 0; p <= 5; ++p)
    for (int q = 0; q <= 5; ++q) {
      std::size_t brute = 0;
      for (const auto& v : all_functions(p, q)) brute += monotone_endpoint(v, q);
      CHECK(fint_maps(p, q).size() == brute);
    }
  // Surjections [n] -> [m] in fint: choose the m jumps among n steps.
  CHECK(surjections(3).size() == 8);
}

TEST_CASE("enumeration is sorted") {
  auto ns = necklaces_up_to(5);
  CHECK(std::is_sorted(ns.begin(), ns.end()));
  auto inj = injective_into_simplex(4);
  CHECK(std::set<NecklaceMap>(inj.begin(), inj.end()).size() == inj.size());
}

TEST_CASE("classify and factor") {
  auto id = NecklaceMap::identity(Necklace(2, {0, 1, 2}));
  auto c = classify_and_factor(id);
  CHECK(c.inert);
  CHECK(c.active);

  NecklaceMap d(Necklace(2, {0, 2}), Necklace(3, {0, 3}), FintMap(2, 3, {0, 1, 3}));
  c = classify_and_factor(d);
  CHECK(!c.inert);
  CHECK(c.active);
  CHECK(c.active_part.target == Necklace(3, {0, 3}));
  CHECK(c.inert_part.source == Necklace(3, {0, 3}));
  CHECK(compose(c.inert_part, c.active_part) == d);

  NecklaceMap w(Necklace(3, {0, 1, 2, 3}), Necklace(3, {0, 3}), FintMap::identity(3));
  c = classify_and_factor(w);
  CHECK(c.active_part.map.is_identity());
  CHECK(c.active_part.source == c.active_part.target);
  CHECK(c.inert_part == w);
}

TEST_CASE("active-inert factorization exists and is unique") {
  auto ns = necklaces_up_to(4);
  std::size_t maps = 0;
  for (const auto& A : ns)
    for (const auto& B : ns) {
      for (const auto& f : necklace_maps(A, B)) {
        ++maps;
        int found = 0;
        for (const auto& M : necklaces(B.p)) {
          for (const auto& a : necklace_maps(A, M)) {
            if (!a.is_active()) continue;
            if (!std::includes(M.T.begin(), M.T.end(), B.T.begin(), B.T.end())) continue;
            NecklaceMap i(M, B, FintMap::identity(B.p));
            if (compose(i, a) == f) ++found;
          }
        }
        CHECK(found == 1);
        auto c = classify_and_factor(f);
        CHECK(c.active_part.is_active());
        CHECK(c.inert_part.is_inert());
        CHECK(compose(c.inert_part, c.active_part) == f);
      }
    }
  CHECK(maps > 1000);
}

TEST_CASE("composition is closed and associative") {
  auto ns = necklaces_up_to(3);
  std::size_t pairs = 0;
  for (const auto& A : ns)
    for (const auto& B : ns)
      for (const auto& f : necklace_maps(A, B))
        for (const auto& C : ns)
          for (const auto& g : necklace_maps(B, C)) {
            auto gf = compose(g, f);
            CHECK(gf.valid());
            ++pairs;
            for (const auto& D : ns)
              for (const auto& h : necklace_maps(C, D)) CHECK(compose(h, gf) == compose(compose(h, g), f));
          }
  CHECK(pairs > 0);
}

TEST_CASE("necklace map counts over small dimensions") {
  // Frozen from exhaustive enumeration: maps and composable pairs among
  // necklaces of dimension <= N.
  auto count = [](int N) {
    std::size_t maps = 0, pairs = 0;
    auto ns = necklaces_up_to(N);
    std::vector<std::vector<std::size_t>> m(ns.size(), std::vector<std::size_t>(ns.size()));
    for (std::size_t a = 0; a < ns.size(); ++a)
      for (std::size_t b = 0; b < ns.size(); ++b) maps += m[a][b] = necklace_maps(ns[a], ns[b]).size();
    for (std::size_t a = 0; a < ns.size(); ++a)
      for (std::size_t b = 0; b < ns.size(); ++b)
        for (std::size_t c = 0; c < ns.size(); ++c) pairs += m[a][b] * m[b][c];
    return std::pair{maps, pairs};
  };
  CHECK(count(2) == std::pair<std::size_t, std::size_t>{17, 68});
  CHECK(count(3) == std::pair<std::size_t, std::size_t>{134, 2042});
  CHECK(count(4) == std::pair<std::size_t, std::size_t>{1193, 72768});
}

TEST_CASE("index diagrams") {
  auto h = horn_diagram(2, 1);
  REQUIRE(h.objects.size() == 1);
  CHECK(h.objects[0].source == Necklace(2, {0, 1, 2}));
  CHECK(h.objects[0].is_inert());
  CHECK(h.arrows.empty());

  auto w = wings_diagram(3);
  REQUIRE(w.objects.size() == 3);
  CHECK(w.objects[0].source == Necklace(3, {0, 1, 2, 3}));
  CHECK(w.objects[1].source == Necklace(3, {0, 1, 3}));
  CHECK(w.objects[2].source == Necklace(3, {0, 2, 3}));
  REQUIRE(w.arrows.size() == 2);
  for (const auto& a : w.arrows) CHECK(a.from == 0);

  CHECK(truncated_wings_diagram(4, 0).objects.empty());
  CHECK(truncated_wings_diagram(4, 3).objects == wings_diagram(4).objects);
  CHECK(truncated_wings_diagram(3, 1).objects.size() == 1);

  auto d = degeneracy_diagram(1);
  REQUIRE(d.objects.size() == 1);
  CHECK(d.objects[0] == FintMap(1, 0, {0, 0}));
  auto d3 = degeneracy_diagram(3);
  CHECK(d3.objects.size() == 7);
  for (const auto& a : d3.arrows) CHECK(compose(a.map, d3.objects[a.from]) == d3.objects[a.to]);

  for (int n = 2; n <= 5; ++n) {
    auto all = injective_into_simplex(n);
    for (int j = 1; j < n; ++j) {
      auto hd = horn_diagram(n, j);
      CHECK(hd.objects.size() + 2 == all.size());
      for (const auto& a : hd.arrows) CHECK(compose(hd.objects[a.to], a.map) == hd.objects[a.from]);
      for (const auto& o : wings_diagram(n).objects)
        CHECK(std::find(hd.objects.begin(), hd.objects.end(), o) != hd.objects.end());
    }
  }
  CHECK_THROWS_AS(horn_diagram(3, 0), templikit::RangeError);
  CHECK_THROWS_AS(wings_diagram(1), templikit::RangeError);
}

TEST_CASE("fint factorization") {
  CHECK(fint_factorize(FintMap::identity(3)).empty());
  auto w = fint_factorize(FintMap(1, 2, {0, 2}));
  REQUIRE(w.size() == 1);
  CHECK(w[0] == Generator{Generator::Kind::Face, 1, 2});
  w = fint_factorize(FintMap(2, 1, {0, 0, 1}));
  REQUIRE(w.size() == 1);
  CHECK(w[0] == Generator{Generator::Kind::Degeneracy, 0, 1});
  for (int p = 0; p <= 5; ++p)
    for (int q = 0; q <= 5; ++q)
      for (const auto& f : fint_maps(p, q)) CHECK(evaluate(fint_factorize(f), p) == f);
}
