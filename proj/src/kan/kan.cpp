#include "templikit/kan/kan.hpp"

#include <algorithm>
#include <sstream>

#include "templikit/errors.hpp"

namespace templikit::kan {

using coeff::Matrix;
using coeff::ModuleDiagram;
using templicial::Evaluator;

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::NotApplicable:
      return "not applicable";
    case Verdict::HypothesisFailure:
      return "hypothesis failure";
  }
  return "unknown";
}

void CheckReport::add(IndexResult r) {
  if (!r.passed && verdict == Verdict::Pass) verdict = Verdict::Fail;
  results.push_back(std::move(r));
}

void CheckReport::absorb(const CheckReport& other, const std::string& prefix) {
  for (auto r : other.results) {
    if (!prefix.empty()) r.index = prefix + " " + r.index;
    add(std::move(r));
  }
  for (const auto& note : other.notes) notes.push_back(prefix.empty() ? note : prefix + ": " + note);
  if (other.verdict != Verdict::Pass && verdict == Verdict::Pass) verdict = other.verdict;
}

std::vector<IndexResult> CheckReport::failures() const {
  std::vector<IndexResult> out;
  for (const auto& r : results)
    if (!r.passed) out.push_back(r);
  return out;
}

std::string CheckReport::to_string() const {
  std::ostringstream os;
  os << property << ": " << verdict_name(verdict) << " (" << results.size() << " indices checked)\n";
  for (const auto& r : results)
    if (!r.passed) {
      os << "  FAIL " << r.index;
      if (!r.detail.empty()) os << ": " << r.detail;
      if (r.witness) os << " [cokernel " << r.witness->to_string() << "]";
      os << "\n";
    }
  for (const auto& note : notes) os << "  note: " << note << "\n";
  return os.str();
}

namespace {

std::size_t index_of(const NecklaceDiagram& D, const NecklaceMap& f) {
  auto it = std::find(D.objects.begin(), D.objects.end(), f);
  if (it == D.objects.end()) throw StructuralError("map " + f.to_string() + " is not an object of the diagram");
  return static_cast<std::size_t>(it - D.objects.begin());
}

NecklaceMap inert(const Necklace& source, const Necklace& target) {
  return NecklaceMap(source, target, necklace::FintMap::identity(source.p));
}

void require_range(bool ok, const std::string& what) {
  if (!ok) throw RangeError(what);
}

void require_valid(const NecklicialModule& Y) {
  auto report = templicial::validate_necklicial(Y);
  if (!report.passed()) throw ValidationError("necklicial module is invalid: " + report.to_string());
}

void require_valid(const TemplicialModule& X) {
  auto report = templicial::validate_templicial(X);
  if (!report.passed()) throw ValidationError("templicial module is invalid: " + report.to_string());
}

std::string hom_label(const TemplicialModule& X, std::size_t a, std::size_t b) {
  return "hom (" + X.vertices()[a] + "," + X.vertices()[b] + ")";
}

IndexResult surjectivity(const Morphism& canonical, std::string index) {
  IndexResult r;
  r.index = std::move(index);
  auto q = coeff::cokernel(canonical);
  r.passed = q.module.is_zero();
  if (!r.passed) {
    r.witness = q.module.normal_form();
    r.detail = "canonical map is not surjective";
  }
  return r;
}

}  // namespace

LimitObject limit_over(const NecklicialModule& Y, const NecklaceDiagram& D, const Necklace& apex) {
  ModuleDiagram M(Y.ring());
  for (const auto& f : D.objects) {
    if (f.target != apex) throw StructuralError("diagram object " + f.to_string() + " does not map into the apex");
    M.add_object(Y.value(f.source));
  }
  for (const auto& a : D.arrows) M.add_arrow(a.to, a.from, Y.action(a.map));
  LimitObject out{Module::zero(Y.ring()), Morphism(), coeff::finite_limit(M), D};
  out.object = out.limit.object;
  std::vector<Morphism> test;
  for (const auto& f : D.objects) test.push_back(Y.action(f));
  out.canonical = out.limit.factor(Y.value(apex), test);
  return out;
}

LimitObject horn_object(const NecklicialModule& Y, int n, int j) {
  require_range(0 < j && j < n && n <= Y.max_level(), "horn index out of range");
  return limit_over(Y, necklace::horn_diagram(n, j), Necklace::simplex(n));
}

LimitObject wing_object(const NecklicialModule& Y, int n) {
  require_range(2 <= n && n <= Y.max_level(), "wing index out of range");
  return limit_over(Y, necklace::wings_diagram(n), Necklace::simplex(n));
}

LimitObject truncated_wing_object(const NecklicialModule& Y, int n, int i) {
  require_range(2 <= n && n <= Y.max_level() && 0 <= i && i < n, "truncated wing index out of range");
  return limit_over(Y, necklace::truncated_wings_diagram(n, i), Necklace::simplex(n));
}

NecklaceDiagram wedge_corner_diagram(int n, int i) {
  require_range(0 < i && i < n, "wedge index out of range");
  const Necklace V(n, {0, i, n});
  NecklaceDiagram D;
  for (const auto& T : necklace::necklaces(n)) {
    if (T == V || !std::includes(T.T.begin(), T.T.end(), V.T.begin(), V.T.end())) continue;
    if (std::any_of(T.T.begin(), T.T.end(), [&](int t) { return t > i && t < n; })) continue;
    D.objects.push_back(inert(T, V));
  }
  for (std::size_t s = 0; s < D.objects.size(); ++s)
    for (std::size_t t = 0; t < D.objects.size(); ++t) {
      const auto& A = D.objects[s].source.T;
      const auto& B = D.objects[t].source.T;
      if (s != t && std::includes(A.begin(), A.end(), B.begin(), B.end()))
        D.arrows.push_back({s, t, inert(D.objects[s].source, D.objects[t].source)});
    }
  return D;
}

WingSquare wing_square(const NecklicialModule& Y, int n, int i) {
  require_range(0 < i && i < n && n <= Y.max_level(), "wing square index out of range");
  const Necklace V(n, {0, i, n});
  const Necklace top = Necklace::simplex(n);
  auto upper = truncated_wing_object(Y, n, i);
  auto lower = truncated_wing_object(Y, n, i - 1);
  auto corner = limit_over(Y, wedge_corner_diagram(n, i), V);
  std::vector<Morphism> test;
  for (const auto& f : lower.diagram.objects) test.push_back(upper.limit.cone[index_of(upper.diagram, f)]);
  Morphism upper_to_lower = lower.limit.factor(upper.object, test);
  Morphism upper_to_wedge = upper.limit.cone[index_of(upper.diagram, inert(V, top))];
  test.clear();
  for (const auto& f : corner.diagram.objects) {
    const auto& T = f.source.T;
    int k = *std::find_if(T.begin(), T.end(), [](int t) { return t > 0; });
    const Necklace U(n, {0, k, n});
    test.push_back(compose(Y.action(inert(f.source, U)), lower.limit.cone[index_of(lower.diagram, inert(U, top))]));
  }
  Morphism lower_to_corner = corner.limit.factor(lower.object, test);
  Module wedge = Y.value(V);
  Morphism wedge_to_corner = corner.canonical;
  return {std::move(upper), std::move(lower), std::move(corner), std::move(wedge),
          std::move(upper_to_lower), std::move(upper_to_wedge), std::move(lower_to_corner), std::move(wedge_to_corner)};
}

bool is_pullback(const Morphism& tl_to_bl, const Morphism& tl_to_tr, const Morphism& bl_to_br,
                 const Morphism& tr_to_br) {
  const Morphism diag = compose(bl_to_br, tl_to_bl);
  if (diag != compose(tr_to_br, tl_to_tr)) throw StructuralError("square does not commute");
  ModuleDiagram D(tl_to_bl.ring());
  D.add_object(bl_to_br.domain());
  D.add_object(tr_to_br.domain());
  D.add_object(bl_to_br.codomain());
  D.add_arrow(0, 2, bl_to_br);
  D.add_arrow(1, 2, tr_to_br);
  auto P = coeff::finite_limit(D);
  return coeff::is_isomorphism(P.factor(tl_to_bl.domain(), {tl_to_bl, tl_to_tr, diag}));
}

CheckReport check_weak_kan(const NecklicialModule& Y, int N, bool validate) {
  require_range(2 <= N && N <= Y.max_level(), "truncation out of range");
  if (validate) require_valid(Y);
  CheckReport report("weak Kan");
  for (int n = 2; n <= N; ++n)
    for (int j = 1; j < n; ++j)
      report.add(surjectivity(horn_object(Y, n, j).canonical, "n=" + std::to_string(n) + " j=" + std::to_string(j)));
  return report;
}

CheckReport check_lifts_wings(const NecklicialModule& Y, int N, bool validate) {
  require_range(2 <= N && N <= Y.max_level(), "truncation out of range");
  if (validate) require_valid(Y);
  CheckReport report("lifts wings");
  for (int n = 2; n <= N; ++n) report.add(surjectivity(wing_object(Y, n).canonical, "n=" + std::to_string(n)));
  return report;
}

CheckReport check_wing_tower(const NecklicialModule& Y, int N) {
  require_range(2 <= N && N <= Y.max_level(), "truncation out of range");
  CheckReport report("wing tower");
  for (int n = 2; n <= N; ++n) {
    const std::string at = "n=" + std::to_string(n);
    IndexResult bottom{at + " i=0", truncated_wing_object(Y, n, 0).object.is_zero(), {}, {}};
    if (!bottom.passed) bottom.detail = "W^{<=0} is not zero";
    report.add(bottom);
    auto top = truncated_wing_object(Y, n, n - 1);
    auto wings = wing_object(Y, n);
    IndexResult full{at + " i=" + std::to_string(n - 1), true, {}, {}};
    full.passed = top.diagram.objects == wings.diagram.objects && top.object.isomorphic(wings.object);
    if (!full.passed) full.detail = "W^{<=n-1} differs from W_n";
    report.add(full);
    for (int i = 1; i < n; ++i) {
      auto sq = wing_square(Y, n, i);
      IndexResult r{at + " square i=" + std::to_string(i), true, {}, {}};
      r.passed = is_pullback(sq.upper_to_lower, sq.upper_to_wedge, sq.lower_to_corner, sq.wedge_to_corner);
      if (!r.passed) r.detail = "square is not a pullback";
      report.add(r);
    }
  }
  return report;
}

CheckReport check_quasicategory(const TemplicialModule& X, int N, bool validate) {
  require_range(2 <= N && N <= X.max_level(), "truncation out of range");
  if (validate) require_valid(X);
  CheckReport report("quasi-category");
  Evaluator ev(X);
  const std::size_t V = X.vertices().size();
  for (std::size_t a = 0; a < V; ++a)
    for (std::size_t b = 0; b < V; ++b)
      report.absorb(check_weak_kan(templicial::hom_necklicial(ev, a, b), N, false), hom_label(X, a, b));
  return report;
}

CheckReport check_lifts_wings(const TemplicialModule& X, int N, bool validate) {
  require_range(2 <= N && N <= X.max_level(), "truncation out of range");
  if (validate) require_valid(X);
  CheckReport report("lifts wings");
  Evaluator ev(X);
  const std::size_t V = X.vertices().size();
  for (std::size_t a = 0; a < V; ++a)
    for (std::size_t b = 0; b < V; ++b)
      report.absorb(check_lifts_wings(templicial::hom_necklicial(ev, a, b), N, false), hom_label(X, a, b));
  return report;
}

DegenerateData degenerate_subobject(Evaluator& ev, int n) {
  const auto& X = ev.module();
  require_range(1 <= n && n <= X.max_level(), "degenerate level out of range");
  const auto D = necklace::degeneracy_diagram(n);
  quiver::QuiverDiagram Q(X.ring(), X.vertices());
  for (const auto& s : D.objects) Q.objects.push_back(X.level(s.q));
  for (const auto& a : D.arrows) Q.arrows.push_back({a.to, a.from, ev.fint(a.map)});
  auto colim = quiver::quiver_colimit(Q);
  const Quiver& Xn = X.level(n);
  DegenerateData out;
  out.n = n;
  out.deg = colim.object;
  out.colimits = colim.homs;
  out.can = QuiverMorphism(out.deg, Xn);
  out.nd = Quiver(X.ring(), X.vertices());
  const std::size_t V = X.vertices().size();
  std::vector<Morphism> projections;
  for (std::size_t a = 0; a < V; ++a)
    for (std::size_t b = 0; b < V; ++b) {
      std::vector<Morphism> test;
      for (const auto& s : D.objects) test.push_back(ev.fint(s).component(a, b));
      Morphism can = out.colimits[a * V + b].factor(Xn.hom(a, b), test);
      out.cokernels.push_back(coeff::cokernel(can));
      out.nd.set_hom(a, b, out.cokernels.back().module);
      projections.push_back(out.cokernels.back().projection);
      out.can.set_component(a, b, std::move(can));
    }
  out.projection = QuiverMorphism(Xn, out.nd);
  for (std::size_t h = 0; h < V * V; ++h) out.projection.set_component(h / V, h % V, projections[h]);
  return out;
}

DegenerateData degenerate_subobject(const TemplicialModule& X, int n) {
  Evaluator ev(X);
  return degenerate_subobject(ev, n);
}

CheckReport check_deg_projective(const TemplicialModule& X, int N, bool validate) {
  require_range(1 <= N && N <= X.max_level(), "truncation out of range");
  if (validate) require_valid(X);
  CheckReport report("deg-projective");
  Evaluator ev(X);
  const std::size_t V = X.vertices().size();
  for (int n = 1; n <= N; ++n) {
    auto data = degenerate_subobject(ev, n);
    for (std::size_t a = 0; a < V; ++a)
      for (std::size_t b = 0; b < V; ++b) {
        IndexResult r;
        r.index = hom_label(X, a, b) + " n=" + std::to_string(n);
        const auto info = coeff::analyze(data.can.component(a, b));
        const Module nd = data.nd.hom(a, b).normal_form();
        std::vector<std::string> why;
        if (!info.injective) why.push_back("can_n is not injective");
        if (!info.split_mono) why.push_back("can_n does not split");
        if (!nd.is_projective()) why.push_back("X^nd_n is not projective");
        r.passed = why.empty();
        if (!r.passed) {
          r.witness = nd;
          for (std::size_t i = 0; i < why.size(); ++i) r.detail += (i ? "; " : "") + why[i];
        }
        report.add(std::move(r));
      }
  }
  return report;
}

CheckReport ez_check(const TemplicialModule& X, int N, bool validate) {
  CheckReport report("Eilenberg-Zilber");
  if (!check_deg_projective(X, N, validate).passed()) {
    report.verdict = Verdict::NotApplicable;
    report.notes.push_back("X is not deg-projective");
    return report;
  }
  Evaluator ev(X);
  const std::size_t V = X.vertices().size();
  std::vector<Quiver> nd{X.level(0)};
  for (int n = 1; n <= N; ++n) nd.push_back(degenerate_subobject(ev, n).nd);
  for (int n = 0; n <= N; ++n) {
    std::vector<std::size_t> multiplicity(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& s : necklace::surjections(n)) ++multiplicity[static_cast<std::size_t>(s.q)];
    for (std::size_t a = 0; a < V; ++a)
      for (std::size_t b = 0; b < V; ++b) {
        std::vector<Module> parts;
        for (int m = 0; m <= n; ++m)
          for (std::size_t c = 0; c < multiplicity[static_cast<std::size_t>(m)]; ++c)
            parts.push_back(nd[static_cast<std::size_t>(m)].hom(a, b));
        const Module sum = coeff::direct_sum(parts);
        IndexResult r;
        r.index = hom_label(X, a, b) + " n=" + std::to_string(n);
        r.passed = sum.isomorphic(X.level(n).hom(a, b));
        if (!r.passed)
          r.detail = "X_n = " + X.level(n).hom(a, b).to_string() + " but the sum over surjections is " + sum.to_string();
        report.add(std::move(r));
      }
  }
  return report;
}

CheckReport check_levelwise(const TemplicialModule& X, Levelwise which, int N) {
  if (N < 0) N = X.max_level();
  require_range(N <= X.max_level(), "truncation out of range");
  CheckReport report(which == Levelwise::Flat ? "levelwise flat" : "levelwise projective");
  report.notes.push_back("over the supported rings a finitely generated module is flat iff projective iff free");
  const std::size_t V = X.vertices().size();
  for (int n = 1; n <= N; ++n)
    for (std::size_t a = 0; a < V; ++a)
      for (std::size_t b = 0; b < V; ++b) {
        const Module& M = X.level(n).hom(a, b);
        IndexResult r{hom_label(X, a, b) + " n=" + std::to_string(n), M.is_flat(), {}, {}};
        if (!r.passed) {
          r.detail = "X_n = " + M.to_string() + " has torsion";
          r.witness = M.normal_form();
        }
        report.add(std::move(r));
      }
  return report;
}

}  // namespace templikit::kan
