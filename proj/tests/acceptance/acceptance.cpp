#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "templikit/coeff/linalg.hpp"
#include "templikit/constructors/constructors.hpp"
#include "templikit/deform/deform.hpp"
#include "templikit/errors.hpp"

using namespace templikit;
using namespace templikit::constructors;
using coeff::RingExtension;
using deform::DeformationPair;
using kan::CheckReport;
using necklace::Necklace;
using necklace::NecklaceMap;
using templicial::NecklicialModule;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

const Ring F2 = Ring::prime_field(2);
const Ring F3 = Ring::prime_field(3);
const Ring Z = Ring::integers();

std::vector<std::vector<bool>> chain_poset(std::size_t n) {
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) less[i][j] = true;
  return less;
}

TemplicialModule nerve_F3_dual(int N) {
  return nerve(LinearCategory::algebra(F3, {Scalar(0), Scalar(0), Scalar(1)}), N);
}

DeformationPair nerve_pair(int N) {
  const Ring R = Ring::dual_chain(3, 2);
  auto deformed = nerve(LinearCategory::algebra(R, {R.neg(R.uniformizer_power(1)), Scalar(0), Scalar(1)}), N);
  return {RingExtension(R, F3), deformed, nerve_F3_dual(N), std::nullopt};
}

TemplicialModule free_chain(const Ring& R, std::size_t elements, int N) {
  return free_templicial(sset_poset_nerve(chain_poset(elements), N), R, N);
}

// Criterion 1.

std::int64_t brute_injective_into_simplex(int n) {
  std::int64_t count = 0;
  for (unsigned image = 0; image < (1u << (n + 1)); ++image) {
    if (!(image & 1u) || !(image & (1u << n))) continue;
    const int p = __builtin_popcount(image) - 1;
    for (unsigned T = 0; T < (1u << (p + 1)); ++T) count += (T & 1u) && (T & (1u << p));
  }
  return count;
}

bool contains_all(const std::vector<int>& big, const std::vector<int>& small) {
  for (int x : small)
    if (std::find(big.begin(), big.end(), x) == big.end()) return false;
  return true;
}

void criterion_1(Outcome& o) {
  for (int p = 1; p <= 8; ++p)
    o.require(necklace::necklaces(p).size() == (std::size_t{1} << (p - 1)), "necklace count p=" + std::to_string(p));
  std::int64_t pow3 = 1;
  for (int n = 1; n <= 6; ++n, pow3 *= 3) {
    o.require(static_cast<std::int64_t>(necklace::injective_into_simplex(n).size()) == pow3,
              "enumerated injective maps n=" + std::to_string(n));
    o.require(brute_injective_into_simplex(n) == pow3, "brute injective maps n=" + std::to_string(n));
  }
  std::size_t maps = 0;
  const auto ns = necklace::necklaces_up_to(4);
  for (const auto& A : ns)
    for (const auto& B : ns)
      for (const auto& f : necklace::necklace_maps(A, B)) {
        ++maps;
        int found = 0;
        for (const auto& M : necklace::necklaces(B.p)) {
          if (!contains_all(M.T, B.T)) continue;
          const NecklaceMap inert(M, B, necklace::FintMap::identity(B.p));
          for (const auto& a : necklace::necklace_maps(A, M))
            if (a.is_active() && necklace::compose(inert, a) == f) ++found;
        }
        const auto c = necklace::classify_and_factor(f);
        const bool ok = found == 1 && c.active_part.is_active() && c.inert_part.is_inert() &&
                        necklace::compose(c.inert_part, c.active_part) == f;
        o.require(ok, "factorization of " + f.to_string());
      }
  o.detail << "necklaces p<=8, injective maps n<=6, " << maps << " maps factored uniquely";
}

// Criterion 2.

void criterion_2(Outcome& o) {
  const auto X = nerve_F3_dual(4);
  const auto r = kan::check_quasicategory(X, 4);
  o.require(r.passed(), "quasi-category: " + r.to_string());
  std::size_t checked = 0;
  for (int k = 1; k < 4; ++k)
    for (int l = 1; k + l <= 4; ++l) {
      const auto& mu = X.comultiplication(k, l);
      for (std::size_t a = 0; a < X.vertices().size(); ++a)
        for (std::size_t b = 0; b < X.vertices().size(); ++b, ++checked)
          o.require(coeff::is_isomorphism(mu.component(a, b)),
                    "mu_" + std::to_string(k) + "," + std::to_string(l) + " invertible");
    }
  o.detail << r.results.size() << " horn indices, " << checked << " comultiplications invertible";
}

// Criterion 3.

void criterion_3(Outcome& o) {
  const auto r = kan::check_quasicategory(free_chain(F2, 3, 4), 4);
  o.require(r.passed(), "free poset nerve: " + r.to_string());
  const auto P = kan::check_quasicategory(builtin_paper_P(F2, 4), 4);
  const auto fails = P.failures();
  o.require(fails.size() == 1, "P fails at exactly one index, got " + std::to_string(fails.size()));
  if (!fails.empty()) {
    const auto& f = fails.front();
    o.require(f.index == "hom (a,c) n=2 j=1", "failing index " + f.index);
    o.require(f.witness && f.witness->isomorphic(Module::free(F2, 1)), "rank one cokernel");
    o.detail << "free poset nerve passes; P fails only at " << f.index << " with cokernel "
             << (f.witness ? f.witness->to_string() : "?");
  }
}

// Criterion 4.

std::vector<std::pair<std::string, TemplicialModule>> free_corpus(int N) {
  const Ring Z4 = Ring::chain(2, 2);
  std::vector<std::pair<std::string, TemplicialModule>> out;
  out.emplace_back("free D1 over Z", free_templicial(sset_simplex(1, N), Z, N));
  out.emplace_back("free D2 over F2", free_templicial(sset_simplex(2, N), F2, N));
  out.emplace_back("free D3 over Z/4", free_templicial(sset_simplex(3, N), Z4, N));
  out.emplace_back("free boundary D2 over Z", free_templicial(sset_boundary(2, N), Z, N));
  out.emplace_back("free horn 2,1 over F3", free_templicial(sset_horn(2, 1, N), F3, N));
  out.emplace_back("free chain 0<1<2 over F2", free_chain(F2, 3, N));
  out.emplace_back("free P shape over F2", builtin_paper_P(F2, N));
  out.emplace_back("free random poset over Z", generate_poset_free(5, Z, 4, N));
  return out;
}

// Nondegenerate simplices of K from a to b at level m.
std::size_t nondegenerate(const SimplicialSetTrunc& K, int m, std::size_t a, std::size_t b) {
  std::size_t c = 0;
  for (std::size_t x = 0; x < K.count(m); ++x)
    c += K.first_vertex(m, x) == a && K.last_vertex(m, x) == b && !K.is_degenerate(m, x);
  return c;
}

void criterion_4(Outcome& o) {
  const auto s0 = kan::check_deg_projective(builtin_s0_times_2(4), 4);
  bool found = false;
  for (const auto& f : s0.failures())
    if (f.index == "hom (*,*) n=1") {
      found = true;
      o.require(f.witness && f.witness->isomorphic(Module(Z, {Scalar(2)})), "s0 cokernel Z/2");
    }
  o.require(found, "s0_times_2 fails at n=1");

  const int N = 4;
  std::size_t instances = 0;
  for (const auto& [name, X] : free_corpus(N)) {
    ++instances;
    const auto d = kan::check_deg_projective(X, N);
    o.require(d.passed(), name + " deg-projective: " + d.to_string());
    const auto e = kan::ez_check(X, N);
    o.require(e.passed(), name + " EZ: " + e.to_string());
  }

  // Independent multiplicity oracle: rank X_n(a,b) is the number of
  // nondegenerate m-simplices from a to b counted once per surjection [n]->[m].
  const auto K = sset_simplex(1, N);
  const auto X = free_templicial(K, Z, N);
  o.require(X.level(2).hom(0, 1).gens() == 2, "rank X_2(0,1) = 2 for the free module on D1");
  for (int n = 1; n <= N; ++n) {
    std::size_t expected = 0;
    for (const auto& s : necklace::surjections(n)) expected += nondegenerate(K, s.q, 0, 1);
    o.require(X.level(n).hom(0, 1).gens() == expected, "EZ multiplicity at n=" + std::to_string(n));
    const auto D = kan::degenerate_subobject(X, n);
    o.require(D.nd.hom(0, 1).rank() == nondegenerate(K, n, 0, 1), "nondegenerate rank at n=" + std::to_string(n));
  }
  o.detail << "s0_times_2 fails at n=1 with Z/2; " << instances << " free instances pass deg-projectivity and EZ";
}

// Criterion 5.

std::vector<std::pair<std::string, NecklicialModule>> wings_corpus() {
  const int N = 4;
  std::vector<std::pair<std::string, TemplicialModule>> modules;
  modules.emplace_back("nerve F3[x]/(x^2)", nerve_F3_dual(N));
  modules.emplace_back("nerve arrow Z", nerve(LinearCategory::arrow(Z), N));
  modules.emplace_back("nerve unit Z/4", nerve(LinearCategory::unit_category(Ring::chain(2, 2)), N));
  for (std::uint64_t seed = 1; seed <= 3; ++seed)
    modules.emplace_back("random nerve " + std::to_string(seed), generate_algebra_nerve(seed, 5, 2, N));
  for (auto& [name, X] : free_corpus(N)) modules.emplace_back(name, std::move(X));
  modules.emplace_back("paper_P_deformed", builtin_paper_P_deformed(2, N));
  modules.emplace_back("nerve deformation", nerve_pair(N).deformed);
  modules.emplace_back("perturbed nerve", generate_perturbation(7, nerve_F3_dual(N)));
  modules.emplace_back("perturbed free", generate_perturbation(8, free_chain(F2, 3, N)));
  modules.emplace_back("perturbed P", change_of_basis(builtin_paper_P(F2, N), 9));
  modules.emplace_back("s0_times_2", builtin_s0_times_2(N));

  std::vector<std::pair<std::string, NecklicialModule>> out;
  for (const auto& [name, X] : modules) {
    templicial::Evaluator ev(X);
    for (std::size_t a = 0; a < X.vertices().size(); ++a)
      for (std::size_t b = 0; b < X.vertices().size(); ++b)
        if (!X.level(1).hom(a, b).is_zero())
          out.emplace_back(name + " hom (" + X.vertices()[a] + "," + X.vertices()[b] + ")",
                           templicial::hom_necklicial(ev, a, b));
  }
  const auto Y = templicial::hom_necklicial(nerve_F3_dual(N), 0, 0);
  out.emplace_back("nerve tensor F3^2", templicial::tensor_external(Y, Module::free(F3, 2)));
  const auto W = templicial::hom_necklicial(free_chain(Z, 3, N), 0, 2);
  out.emplace_back("free tensor Z/2", templicial::tensor_external(W, Module(Z, {Scalar(2)})));
  const auto P = templicial::hom_necklicial(builtin_paper_P(F2, N), 0, 3);
  out.emplace_back("P tensor F2^2", templicial::tensor_external(P, Module::free(F2, 2)));
  return out;
}

void criterion_5(Outcome& o) {
  const auto corpus = wings_corpus();
  std::size_t kan = 0, not_kan = 0, divergences = 0;
  for (const auto& [name, Y] : corpus)
    for (int N = 2; N <= 4; ++N) {
      const bool horns = kan::check_weak_kan(Y, N, false).passed();
      const bool wings = kan::check_lifts_wings(Y, N, false).passed();
      (horns ? kan : not_kan) += 1;
      if (horns != wings) {
        ++divergences;
        o.require(false, name + " N=" + std::to_string(N) + " horns and wings disagree");
      }
    }
  o.require(corpus.size() >= 20, "corpus has at least 20 instances");
  o.require(kan > 0 && not_kan > 0, "both verdicts occur");
  o.detail << corpus.size() << " necklicial instances x N in {2,3,4}: " << kan << " weak Kan, " << not_kan
           << " not, " << divergences << " divergences";
}

// Criterion 6.

void criterion_6(Outcome& o) {
  const auto X = nerve_F3_dual(4);
  for (std::size_t r = 1; r <= 3; ++r) {
    const auto rep = deform::verify_wings_tensor(X, Module::free(F3, r), 4, true);
    o.require(rep.passed(), "F3^" + std::to_string(r) + ": " + rep.to_string());
  }
  const auto rep = deform::verify_wings_tensor(free_chain(Z, 3, 4), Module(Z, {Scalar(2)}), 4, true);
  o.require(rep.passed(), "free over Z with Z/2: " + rep.to_string());
  o.detail << "nerve with F3^1..3 and free chain over Z with Z/2, diagnostics included (" << rep.results.size()
           << " indices in the last run)";
}

// Criterion 7.

std::vector<Scalar> poly(const Ring& R, const std::vector<std::string>& coeffs) {
  std::vector<Scalar> g;
  for (const auto& c : coeffs) g.push_back(R.parse_element(c));
  return g;
}

void criterion_7(Outcome& o) {
  const Ring D = Ring::dual_chain(2, 2);
  const int N = 3;
  const std::vector<std::vector<std::string>> gs = {
      {"e", "0", "1"}, {"e", "1", "1"}, {"1+e", "e", "1"}, {"e", "0", "0", "1"}, {"1", "e", "0", "1"}};
  std::size_t extensions = 0;
  std::vector<NecklicialModule> fibers;
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (int perturb = 0; perturb < 2; ++perturb) {
      auto X = nerve(LinearCategory::algebra(D, poly(D, gs[i])), N);
      if (perturb) X = change_of_basis(X, 100 + i);
      const auto Y = templicial::hom_necklicial(X, 0, 0);
      const auto c = deform::dual_number_cocycle(Y);
      bool nonzero = false;
      for (const auto& [f, m] : c) nonzero = nonzero || !m.is_zero();
      o.require(nonzero, "nontrivial cocycle for g" + std::to_string(i));
      const auto fiber = deform::dual_number_fiber(Y);
      const auto ext = deform::build_extension(fiber, fiber, c);
      const auto exact = deform::check_extension_exact(ext);
      o.require(exact.passed(), "exactness: " + exact.to_string());
      const auto kanrep = deform::check_extension_weak_kan(ext, N);
      o.require(kanrep.passed(), "extension weak Kan: " + kanrep.to_string());
      extensions += nonzero;
      if (!perturb) fibers.push_back(fiber);
    }
  std::size_t sums = 0;
  fibers.push_back(templicial::hom_necklicial(free_chain(F2, 3, N), 0, 2));
  for (std::size_t i = 0; i + 1 < fibers.size(); ++i, ++sums) {
    const auto r = kan::check_weak_kan(templicial::direct_sum(fibers[i], fibers[i + 1]), N);
    o.require(r.passed(), "direct sum: " + r.to_string());
  }
  o.require(extensions >= 5, "at least five nontrivial extensions");
  o.detail << extensions << " nontrivial cocycle extensions and " << sums << " direct sums are weak Kan at N=3";
}

// Criterion 8.

void criterion_8(Outcome& o) {
  const int N = 4;
  const auto r = deform::verify_thm_main(nerve_pair(N), N, true);
  o.require(r.passed(), "nerve pair: " + r.to_string());
  const Ring Z8 = Ring::chain(2, 3), Z4 = Ring::chain(2, 2), Z2 = Ring::chain(2, 1);
  const std::vector<std::pair<Ring, Ring>> steps = {{Z8, Z4}, {Z4, Z2}, {Z8, Z2}};
  for (const auto& [R, k] : steps) {
    DeformationPair pair{RingExtension(R, k), free_chain(R, 3, N), free_chain(k, 3, N), std::nullopt};
    const auto rep = deform::verify_thm_main(pair, N, true);
    o.require(rep.passed(), pair.theta.to_string() + ": " + rep.to_string());
  }
  o.detail << "nerve pair and Z/8 -> Z/4 -> Z/2 on the free chain pass with diagnostics";
}

// Criterion 9.

void criterion_9(Outcome& o) {
  DeformationPair pair{RingExtension(Ring::dual_chain(2, 2), F2), builtin_paper_P_deformed(2, 3),
                       builtin_paper_P(F2, 3), std::nullopt};
  const auto r = deform::verify_degproj_lift(pair, 3, true);
  o.require(r.passed(), r.to_string());
  o.detail << "paper_P_deformed lifts deg-projectivity at N=3 (" << r.results.size() << " indices)";
}

// Criterion 10.

void criterion_10(Outcome& o) {
  const int N = 3;
  std::vector<TemplicialModule> corpus = {nerve_F3_dual(N), free_chain(F2, 3, N), builtin_paper_P(F2, N),
                                          builtin_s0_times_2(N), change_of_basis(nerve_F3_dual(N), 3),
                                          builtin_paper_P_deformed(2, N)};
  std::mt19937_64 rng(20240521);
  std::size_t caught = 0, silent = 0, by_necklicial = 0;
  const int target = 50;
  for (int t = 0; t < target;) {
    auto X = corpus[rng() % corpus.size()];
    const int kind = static_cast<int>(rng() % 3);
    const std::size_t V = X.vertices().size();
    const std::size_t a = rng() % V, b = rng() % V;
    std::string where;
    coeff::Morphism f;
    int n = 0, i = 0;
    if (kind == 0) {
      n = 2 + static_cast<int>(rng() % (N - 1));
      i = 1 + static_cast<int>(rng() % (n - 1));
      f = X.face(n, i).component(a, b);
    } else if (kind == 1) {
      n = static_cast<int>(rng() % N);
      i = static_cast<int>(rng() % (n + 1));
      f = X.degeneracy(n, i).component(a, b);
    } else {
      n = 1 + static_cast<int>(rng() % (N - 1));
      i = 1 + static_cast<int>(rng() % (N - n));
      f = X.comultiplication(n, i).component(a, b);
    }
    if (f.matrix().empty()) continue;
    ++t;
    auto m = f.matrix();
    const std::size_t r = rng() % m.rows(), c = rng() % m.cols();
    const Ring& R = X.ring();
    m(r, c) = R.add(m(r, c), Scalar(1));
    coeff::Morphism g(f.domain(), f.codomain(), f.codomain().reduce_rows(m));
    if (kind == 0) X.set_face(n, i, a, b, g);
    if (kind == 1) X.set_degeneracy(n, i, a, b, g);
    if (kind == 2) X.set_comultiplication(n, i, a, b, g);

    const auto rep = templicial::validate_templicial(X);
    bool named = !rep.passed() && !rep.violations.front().identity.empty();
    if (rep.passed()) {
      for (const auto& Y : templicial::hom_necklicials(X)) {
        const auto nr = templicial::validate_necklicial(Y);
        if (!nr.passed() && !nr.violations.front().identity.empty()) {
          named = true;
          ++by_necklicial;
          break;
        }
      }
    }
    (named ? caught : silent) += 1;
  }
  o.require(silent == 0, std::to_string(silent) + " silent passes");
  o.detail << caught << "/" << target << " corruptions caught with a named identity (" << by_necklicial
           << " by the necklicial validator only)";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"combinatorics", criterion_1},
      {"nerve quasi-category", criterion_2},
      {"free functor", criterion_3},
      {"deg-projectivity", criterion_4},
      {"wings and horns agree", criterion_5},
      {"tensor preservation", criterion_6},
      {"extension closure", criterion_7},
      {"main deformation theorem", criterion_8},
      {"deg-projectivity lift", criterion_9},
      {"validator soundness", criterion_10},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[k].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < 60.0;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << (k + 1) << " (" << criteria[k].first << "): "
              << o.detail.str() << (in_time ? "" : " [over 60 s]") << " (" << std::fixed
              << std::setprecision(2) << secs << " s)" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
