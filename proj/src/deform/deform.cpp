#include "templikit/deform/deform.hpp"

#include "templikit/errors.hpp"

namespace templikit::deform {

using coeff::Ring;
using coeff::Scalar;
using kan::IndexResult;

Quiver base_change(const RingExtension& theta, const Quiver& Q) {
  Quiver out(theta.target(), Q.vertices());
  for (std::size_t a = 0; a < Q.size(); ++a)
    for (std::size_t b = 0; b < Q.size(); ++b) out.set_hom(a, b, coeff::base_change(theta, Q.hom(a, b)));
  return out;
}

QuiverMorphism base_change(const RingExtension& theta, const QuiverMorphism& f) {
  QuiverMorphism out(base_change(theta, f.domain()), base_change(theta, f.codomain()));
  const std::size_t V = f.domain().size();
  for (std::size_t a = 0; a < V; ++a)
    for (std::size_t b = 0; b < V; ++b) out.set_component(a, b, coeff::base_change(theta, f.component(a, b)));
  return out;
}

TemplicialModule base_change_templicial(const RingExtension& theta, const TemplicialModule& X) {
  if (X.ring() != theta.source())
    throw MismatchError("base change along " + theta.to_string() + " of a module over " + X.ring().name());
  const int N = X.max_level();
  TemplicialModule Y(theta.target(), X.vertices(), N);
  for (int n = 1; n <= N; ++n) Y.set_level(n, base_change(theta, X.level(n)));
  for (int n = 2; n <= N; ++n)
    for (int j = 1; j < n; ++j) Y.set_face(n, j, base_change(theta, X.face(n, j)));
  for (int n = 0; n < N; ++n)
    for (int i = 0; i <= n; ++i) Y.set_degeneracy(n, i, base_change(theta, X.degeneracy(n, i)));
  for (int k = 1; k < N; ++k)
    for (int l = 1; k + l <= N; ++l) Y.set_comultiplication(k, l, base_change(theta, X.comultiplication(k, l)));
  return Y;
}

NecklicialModule base_change(const RingExtension& theta, const NecklicialModule& Y) {
  if (Y.ring() != theta.source()) throw MismatchError("base change of a necklicial module over the wrong ring");
  NecklicialModule out(theta.target(), Y.max_level());
  for (const auto& [T, m] : Y.values()) out.set_value(T, coeff::base_change(theta, m));
  for (const auto& [f, m] : Y.actions()) out.set_action(f, coeff::base_change(theta, m));
  return out;
}

NecklicialModule restrict_scalars(const RingExtension& theta, const NecklicialModule& Y) {
  if (Y.ring() != theta.target()) throw MismatchError("restriction of a necklicial module over the wrong ring");
  NecklicialModule out(theta.source(), Y.max_level());
  for (const auto& [T, m] : Y.values()) out.set_value(T, coeff::restrict_scalars(theta, m));
  for (const auto& [f, m] : Y.actions()) out.set_action(f, coeff::restrict_scalars(theta, m));
  return out;
}

namespace {

std::string hom_label(const TemplicialModule& X, std::size_t a, std::size_t b) {
  return "hom (" + X.vertices()[a] + "," + X.vertices()[b] + ")";
}

bool zero_hom(const TemplicialModule& X, std::size_t a, std::size_t b) {
  for (int n = 1; n <= X.max_level(); ++n)
    if (!X.level(n).hom(a, b).is_zero()) return false;
  return true;
}

std::string level_label(const TemplicialModule& X, std::size_t a, std::size_t b, int n) {
  return hom_label(X, a, b) + " n=" + std::to_string(n);
}

IndexResult result(std::string index, bool ok, std::string detail = {}) {
  IndexResult r;
  r.index = std::move(index);
  r.passed = ok;
  if (!ok) r.detail = std::move(detail);
  return r;
}

/// Exactness of 0 -> A -f-> B -g-> C -> 0.
std::string short_exact_problem(const Morphism& f, const Morphism& g) {
  if (!coeff::is_injective(f)) return "first map is not injective";
  if (!coeff::is_surjective(g)) return "second map is not surjective";
  if (!compose(g, f).is_zero()) return "composite is not zero";
  if (!coeff::factor_through(f, coeff::kernel(g).inclusion)) return "kernel is larger than the image";
  return {};
}

bool same_fiber_map(const QuiverMorphism& reduced, const QuiverMorphism& fiber) { return reduced == fiber; }

/// The chain R = R_0 -> R_1 -> ... -> k of small steps, with the deformation
/// base-changed to each R_s.
std::vector<std::pair<RingExtension, TemplicialModule>> step_chain(const RingExtension& theta, const TemplicialModule& X) {
  std::vector<std::pair<RingExtension, TemplicialModule>> out;
  for (const auto& step : theta.small_steps()) {
    if (step.source() == theta.source())
      out.emplace_back(step, X);
    else
      out.emplace_back(step, base_change_templicial(RingExtension(theta.source(), step.source()), X));
  }
  return out;
}

void mark_hypothesis_failure(CheckReport& report, const CheckReport& failed, const std::string& what) {
  report.verdict = Verdict::HypothesisFailure;
  report.notes.push_back("hypothesis failed: " + what);
  for (const auto& f : failed.failures())
    report.notes.push_back("  " + f.index + (f.detail.empty() ? "" : ": " + f.detail) +
                           (f.witness ? " [cokernel " + f.witness->to_string() + "]" : ""));
}

}  // namespace

CheckReport validate_deformation(const DeformationPair& pair, int N) {
  const auto& Xb = pair.deformed;
  const auto& X = pair.special_fiber;
  if (Xb.vertices() != X.vertices()) throw MismatchError("deformation and special fiber have different vertex sets");
  if (Xb.ring() != pair.theta.source() || X.ring() != pair.theta.target())
    throw MismatchError("deformation pair rings do not match " + pair.theta.to_string());
  if (N > Xb.max_level() || N > X.max_level()) throw RangeError("truncation above the instances");
  CheckReport report("deformation");
  report.absorb(kan::check_levelwise(Xb, kan::Levelwise::Flat, N), "levelwise flat");
  auto reduced = base_change_templicial(pair.theta, Xb);
  const std::size_t V = X.vertices().size();
  if (!pair.iso) {
    for (int n = 1; n <= N; ++n)
      report.add(result("fiber level n=" + std::to_string(n), reduced.level(n) == X.level(n), "levels differ"));
    for (int n = 2; n <= N; ++n)
      for (int j = 1; j < n; ++j)
        report.add(result("fiber d(" + std::to_string(n) + "," + std::to_string(j) + ")",
                          same_fiber_map(reduced.face(n, j), X.face(n, j)), "face matrices differ"));
    for (int n = 0; n < N; ++n)
      for (int i = 0; i <= n; ++i)
        report.add(result("fiber s(" + std::to_string(n) + "," + std::to_string(i) + ")",
                          same_fiber_map(reduced.degeneracy(n, i), X.degeneracy(n, i)), "degeneracy matrices differ"));
    for (int k = 1; k < N; ++k)
      for (int l = 1; k + l <= N; ++l)
        report.add(result("fiber mu(" + std::to_string(k) + "," + std::to_string(l) + ")",
                          same_fiber_map(reduced.comultiplication(k, l), X.comultiplication(k, l)),
                          "comultiplication matrices differ"));
    return report;
  }
  const auto& iso = *pair.iso;
  if (static_cast<int>(iso.size()) <= N) throw StructuralError("isomorphism witness is too short");
  auto phi = [&](int n) { return n == 0 ? QuiverMorphism::identity(X.level(0)) : iso[static_cast<std::size_t>(n)]; };
  for (int n = 1; n <= N; ++n) {
    bool ok = phi(n).domain() == reduced.level(n) && phi(n).codomain() == X.level(n);
    for (std::size_t a = 0; ok && a < V; ++a)
      for (std::size_t b = 0; ok && b < V; ++b) ok = coeff::is_isomorphism(phi(n).component(a, b));
    report.add(result("fiber iso n=" + std::to_string(n), ok, "witness is not a levelwise isomorphism"));
    if (!ok) return report;
  }
  for (int n = 2; n <= N; ++n)
    for (int j = 1; j < n; ++j)
      report.add(result("fiber d(" + std::to_string(n) + "," + std::to_string(j) + ")",
                        compose(phi(n - 1), reduced.face(n, j)) == compose(X.face(n, j), phi(n)),
                        "witness does not commute with the face"));
  for (int n = 0; n < N; ++n)
    for (int i = 0; i <= n; ++i)
      report.add(result("fiber s(" + std::to_string(n) + "," + std::to_string(i) + ")",
                        compose(phi(n + 1), reduced.degeneracy(n, i)) == compose(X.degeneracy(n, i), phi(n)),
                        "witness does not commute with the degeneracy"));
  for (int k = 1; k < N; ++k)
    for (int l = 1; k + l <= N; ++l)
      report.add(result("fiber mu(" + std::to_string(k) + "," + std::to_string(l) + ")",
                        compose(quiver::tensor_S(phi(k), phi(l)), reduced.comultiplication(k, l)) ==
                            compose(X.comultiplication(k, l), phi(k + l)),
                        "witness does not commute with the comultiplication"));
  return report;
}

NecklicialModule ideal_tensor(const RingExtension& theta, const NecklicialModule& Y) {
  if (!theta.small())
    throw ConfigurationError("extension " + theta.to_string() + " is not small; factor it through small steps first");
  return templicial::tensor_external(Y, theta.kernel_as_target_module());
}

NecklicialExtension extension_sequence(const RingExtension& theta, const NecklicialModule& Ybar) {
  if (!theta.small())
    throw ConfigurationError("extension " + theta.to_string() + " is not small; factor it through small steps first");
  if (Ybar.ring() != theta.source()) throw MismatchError("extension sequence over the wrong ring");
  const Ring& R = theta.source();
  const coeff::Scalar t = theta.kernel_generator();
  NecklicialExtension ext;
  ext.sub = NecklicialModule(R, Ybar.max_level());
  ext.quotient = NecklicialModule(R, Ybar.max_level());
  ext.total = Ybar;
  std::map<Necklace, coeff::Quotient> quotients;
  for (const auto& [T, M] : Ybar.values()) {
    if (!M.is_flat()) throw ValidationError("value at " + T.to_string() + " is not flat");
    auto I = coeff::image(coeff::scale(t, Morphism::identity(M)));
    auto Q = coeff::cokernel(I.inclusion);
    ext.sub.set_value(T, I.module);
    ext.quotient.set_value(T, Q.module);
    ext.inclusion.emplace(T, I.inclusion);
    ext.projection.emplace(T, Q.projection);
    quotients.emplace(T, std::move(Q));
  }
  for (const auto& [f, m] : Ybar.actions()) {
    const Necklace& T = f.source;
    const Necklace& U = f.target;
    auto sub = coeff::factor_through(ext.inclusion.at(T), compose(m, ext.inclusion.at(U)));
    if (!sub) throw StructuralError("action of " + f.to_string() + " does not preserve the ideal part");
    ext.sub.set_action(f, *sub);
    const auto& QT = quotients.at(T);
    const auto& QU = quotients.at(U);
    Matrix q = coeff::mat_mul(R, QT.projection.matrix(), coeff::mat_mul(R, m.matrix(), QU.lift));
    ext.quotient.set_action(f, Morphism(QU.module, QT.module, QT.module.reduce_rows(coeff::mat_reduce(R, q))));
  }
  return ext;
}

CheckReport check_extension_exact(const NecklicialExtension& ext) {
  CheckReport report("extension exact");
  for (const auto& [T, M] : ext.total.values()) {
    auto problem = short_exact_problem(ext.inclusion.at(T), ext.projection.at(T));
    report.add(result(T.to_string(), problem.empty(), problem));
  }
  for (const auto& [f, m] : ext.total.actions()) {
    const auto& T = f.source;
    const auto& U = f.target;
    bool ok = compose(ext.inclusion.at(T), ext.sub.action(f)) == compose(m, ext.inclusion.at(U)) &&
              compose(ext.projection.at(T), m) == compose(ext.quotient.action(f), ext.projection.at(U));
    if (!ok) report.add(result("naturality " + f.to_string(), false, "inclusion or projection is not natural"));
  }
  return report;
}

CheckReport check_ideal_comparison(const RingExtension& theta, const NecklicialModule& Ybar,
                                   const NecklicialExtension& ext) {
  CheckReport report("ideal comparison");
  const auto It = ideal_tensor(theta, base_change(theta, Ybar));
  const coeff::Scalar t = theta.kernel_generator();
  for (const auto& [T, M] : Ybar.values()) {
    const Module restricted = coeff::restrict_scalars(theta, It.value(T));
    std::string problem;
    if (!restricted.isomorphic(ext.sub.value(T))) {
      problem = "invariant factors differ";
    } else {
      Matrix m(M.gens(), restricted.gens());
      for (std::size_t i = 0; i < restricted.gens(); ++i) m(i, i) = t;
      auto into = coeff::factor_through(ext.inclusion.at(T), Morphism(restricted, M, m));
      if (!into || !coeff::is_isomorphism(*into)) problem = "t (x) y -> t y is not an isomorphism";
    }
    report.add(result(T.to_string(), problem.empty(), problem));
  }
  return report;
}

NecklicialExtension build_extension(const NecklicialModule& sub, const NecklicialModule& quotient,
                                    const std::map<NecklaceMap, Matrix>& cocycle) {
  if (sub.ring() != quotient.ring() || sub.max_level() != quotient.max_level())
    throw MismatchError("extension of necklicial modules over different rings or truncations");
  const Ring& R = sub.ring();
  NecklicialExtension ext;
  ext.sub = sub;
  ext.quotient = quotient;
  ext.total = NecklicialModule(R, sub.max_level());
  for (const auto& T : necklace::necklaces_up_to(sub.max_level())) {
    std::vector<Module> parts{sub.value(T), quotient.value(T)};
    ext.total.set_value(T, coeff::direct_sum(parts));
    ext.inclusion.emplace(T, coeff::summand_inclusion(parts, 0));
    ext.projection.emplace(T, coeff::summand_projection(parts, 1));
  }
  for (const auto& [f, s] : sub.actions()) {
    const Morphism& q = quotient.action(f);
    const std::size_t sT = s.codomain().gens(), sU = s.domain().gens();
    const std::size_t qT = q.codomain().gens(), qU = q.domain().gens();
    Matrix m(sT + qT, sU + qU);
    m.set_block(0, 0, s.matrix());
    m.set_block(sT, sU, q.matrix());
    if (auto it = cocycle.find(f); it != cocycle.end()) {
      if (it->second.rows() != sT || it->second.cols() != qU)
        throw StructuralError("cocycle entry for " + f.to_string() + " has the wrong shape");
      m.set_block(0, sU, coeff::mat_reduce(R, it->second));
    }
    ext.total.set_action(f, Morphism(ext.total.value(f.target), ext.total.value(f.source), m));
  }
  auto report = templicial::validate_necklicial(ext.total);
  if (!report.passed()) throw ValidationError("cocycle does not give a functor: " + report.to_string());
  return ext;
}

CheckReport check_extension_weak_kan(const NecklicialExtension& ext, int N) {
  CheckReport report("extension weak Kan");
  report.absorb(kan::check_weak_kan(ext.sub, N), "sub");
  report.absorb(kan::check_weak_kan(ext.quotient, N), "quotient");
  report.absorb(kan::check_weak_kan(ext.total, N), "total");
  return report;
}

namespace {

const Ring& require_dual_numbers(const NecklicialModule& Y) {
  const Ring& R = Y.ring();
  if (R.kind() != coeff::RingKind::DualChain || R.m() != 2)
    throw ConfigurationError("expected a necklicial module over F_p[e]/(e^2)");
  for (const auto& [T, M] : Y.values())
    if (!M.is_free()) throw ValidationError("value at " + T.to_string() + " is not free");
  return R;
}

std::pair<Matrix, Matrix> split_dual(const Ring& R, const Matrix& m) {
  const std::int64_t p = R.p();
  Matrix lo(m.rows(), m.cols()), hi(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::int64_t v = R.reduce(m(i, j)).small();
      lo(i, j) = Scalar(v % p);
      hi(i, j) = Scalar(v / p);
    }
  return {lo, hi};
}

}  // namespace

NecklicialModule dual_number_fiber(const NecklicialModule& Ybar) {
  const Ring& R = require_dual_numbers(Ybar);
  const Ring k = Ring::prime_field(R.p());
  NecklicialModule out(k, Ybar.max_level());
  for (const auto& [T, M] : Ybar.values()) out.set_value(T, Module::free(k, M.gens()));
  for (const auto& [f, m] : Ybar.actions())
    out.set_action(f, Morphism(out.value(f.target), out.value(f.source), split_dual(R, m.matrix()).first));
  return out;
}

std::map<NecklaceMap, Matrix> dual_number_cocycle(const NecklicialModule& Ybar) {
  const Ring& R = require_dual_numbers(Ybar);
  std::map<NecklaceMap, Matrix> out;
  for (const auto& [f, m] : Ybar.actions()) out.emplace(f, split_dual(R, m.matrix()).second);
  return out;
}

CheckReport verify_thm_main(const DeformationPair& pair, int N, bool diagnostic) {
  CheckReport report("main theorem");
  auto deformation = validate_deformation(pair, N);
  if (!deformation.passed()) {
    mark_hypothesis_failure(report, deformation, "not a deformation");
    return report;
  }
  auto fiber = kan::check_quasicategory(pair.special_fiber, N);
  if (!fiber.passed()) {
    mark_hypothesis_failure(report, fiber, "special fiber is not a quasi-category");
    return report;
  }
  report.absorb(kan::check_quasicategory(pair.deformed, N), "conclusion");
  if (!diagnostic) return report;
  const std::size_t V = pair.deformed.vertices().size();
  for (const auto& [step, Xs] : step_chain(pair.theta, pair.deformed)) {
    const std::string at = "step " + step.to_string();
    const auto Xk = base_change_templicial(step, Xs);
    templicial::Evaluator ev(Xs), evk(Xk);
    for (std::size_t a = 0; a < V; ++a)
      for (std::size_t b = 0; b < V; ++b) {
        if (zero_hom(Xs, a, b)) continue;
        const std::string where = at + " " + hom_label(Xs, a, b);
        auto Y = templicial::hom_necklicial(ev, a, b);
        auto ext = extension_sequence(step, Y);
        report.absorb(check_extension_exact(ext), where + " exact");
        report.absorb(check_ideal_comparison(step, Y, ext), where + " ideal");
        report.absorb(kan::check_weak_kan(ideal_tensor(step, templicial::hom_necklicial(evk, a, b)), N, false), where + " I(x)X");
        report.absorb(kan::check_weak_kan(ext.sub, N, false), where + " sub");
        report.absorb(kan::check_weak_kan(ext.quotient, N, false), where + " quotient");
        report.absorb(kan::check_weak_kan(ext.total, N, false), where + " total");
      }
  }
  return report;
}

CheckReport verify_wings_tensor(const TemplicialModule& X, const Module& M, int N, bool diagnostic) {
  CheckReport report("wings tensor");
  auto quasi = kan::check_quasicategory(X, N);
  if (!quasi.passed()) {
    mark_hypothesis_failure(report, quasi, "not a quasi-category");
    return report;
  }
  auto flat = kan::check_levelwise(X, kan::Levelwise::Flat, N);
  if (!flat.passed()) {
    mark_hypothesis_failure(report, flat, "not levelwise flat");
    return report;
  }
  templicial::Evaluator ev(X);
  const std::size_t V = X.vertices().size();
  const Morphism idM = Morphism::identity(M);
  for (std::size_t a = 0; a < V; ++a)
    for (std::size_t b = 0; b < V; ++b) {
      const std::string where = hom_label(X, a, b);
      auto Y = templicial::hom_necklicial(ev, a, b);
      auto YM = templicial::tensor_external(Y, M);
      report.absorb(kan::check_weak_kan(YM, N, false), "conclusion " + where);
      if (!diagnostic) continue;
      for (int n = 2; n <= N; ++n) {
        for (int i = 0; i < n; ++i) {
          auto W = kan::truncated_wing_object(Y, n, i);
          auto WM = kan::truncated_wing_object(YM, n, i);
          std::vector<Morphism> test;
          for (const auto& c : W.limit.cone) test.push_back(coeff::tensor(c, idM));
          auto cmp = WM.limit.factor(coeff::tensor(W.object, M), test);
          report.add(result(where + " W^{<=" + std::to_string(i) + "}_" + std::to_string(n) + " (x) M",
                            coeff::is_isomorphism(cmp), "comparison map is not an isomorphism"));
        }
        for (int i = 1; i < n; ++i) {
          const std::string sq = where + " n=" + std::to_string(n) + " i=" + std::to_string(i);
          auto S = kan::wing_square(YM, n, i);
          report.add(result(sq + " wedge pullback",
                            kan::is_pullback(S.upper_to_lower, S.upper_to_wedge, S.lower_to_corner, S.wedge_to_corner),
                            "square for X (x) M is not a pullback"));
          auto P = kan::wing_square(Y, n, i);
          auto t = [&](const Morphism& f) { return coeff::tensor(f, idM); };
          report.add(result(sq + " flat pullback",
                            kan::is_pullback(t(P.upper_to_lower), t(P.upper_to_wedge), t(P.lower_to_corner),
                                             t(P.wedge_to_corner)),
                            "tensored square is not a pullback"));
        }
      }
    }
  return report;
}

CheckReport verify_degproj_lift(const DeformationPair& pair, int N, bool diagnostic) {
  CheckReport report("deg-projective lift");
  auto deformation = validate_deformation(pair, N);
  if (!deformation.passed()) {
    mark_hypothesis_failure(report, deformation, "not a deformation");
    return report;
  }
  auto fiber = kan::check_deg_projective(pair.special_fiber, N);
  if (!fiber.passed()) {
    mark_hypothesis_failure(report, fiber, "special fiber is not deg-projective");
    return report;
  }
  report.absorb(kan::check_deg_projective(pair.deformed, N), "conclusion");
  if (!diagnostic) return report;
  const std::size_t V = pair.deformed.vertices().size();
  for (const auto& [step, Xs] : step_chain(pair.theta, pair.deformed)) {
    const Ring& R = step.source();
    const auto Xk = base_change_templicial(step, Xs);
    const Module I = coeff::restrict_scalars(step, step.kernel_as_target_module());
    const Morphism idI = Morphism::identity(I);
    const coeff::Scalar t = step.kernel_generator();
    templicial::Evaluator ev(Xs), evk(Xk);
    auto restrict = [&](const Morphism& f) { return coeff::restrict_scalars(step, f); };
    // I (x)_R M -> M, t (x) m -> t m.
    auto iota = [&](const Module& M) {
      Matrix m(M.gens(), M.gens());
      for (std::size_t i = 0; i < M.gens(); ++i) m(i, i) = t;
      return Morphism(coeff::tensor(I, M), M, M.reduce_rows(m));
    };
    auto reduce_to = [&](const Module& M, const Module& Mk) {
      return Morphism(M, coeff::restrict_scalars(step, Mk), Matrix::identity(M.gens()));
    };
    for (int n = 1; n <= N; ++n) {
      auto Db = kan::degenerate_subobject(ev, n);
      auto Dk = kan::degenerate_subobject(evk, n);
      const auto diagram = necklace::degeneracy_diagram(n);
      for (std::size_t a = 0; a < V; ++a)
        for (std::size_t b = 0; b < V; ++b) {
          const std::size_t h = a * V + b;
          const std::string where = "step " + step.to_string() + " " + level_label(Xs, a, b, n);
          const Morphism& f = Db.can.component(a, b);
          const Morphism& g = Db.projection.component(a, b);
          const Morphism& fk = Dk.can.component(a, b);
          const Morphism& gk = Dk.projection.component(a, b);
          const Module& A = f.domain();
          const Module& B = f.codomain();
          const Module& C = g.codomain();
          // Vertical maps from the deformation to the restricted fiber.
          std::vector<Morphism> test;
          for (std::size_t i = 0; i < diagram.objects.size(); ++i) {
            const Module& Xm = Xs.level(diagram.objects[i].q).hom(a, b);
            const Module& Xmk = Xk.level(diagram.objects[i].q).hom(a, b);
            test.push_back(compose(restrict(Dk.colimits[h].cocone[i]), reduce_to(Xm, Xmk)));
          }
          const Morphism psiA = Db.colimits[h].factor(coeff::restrict_scalars(step, fk.domain()), test);
          const Morphism psiB = reduce_to(B, fk.codomain());
          const Module Ck = coeff::restrict_scalars(step, gk.codomain());
          const Morphism psiC(C, Ck,
                              Ck.reduce_rows(coeff::mat_reduce(
                                  R, coeff::mat_mul(R, gk.matrix(), Db.cokernels[h].lift))));
          auto row = [&](const std::string& name, const Morphism& x, const Morphism& y) {
            auto problem = short_exact_problem(x, y);
            report.add(result(where + " row " + name, problem.empty(), problem));
          };
          row("I(x)E", coeff::tensor(idI, f), coeff::tensor(idI, g));
          row("E", f, g);
          row("k(x)E", restrict(fk), restrict(gk));
          auto column = [&](const std::string& name, const Module& M, const Morphism& psi) {
            auto problem = short_exact_problem(iota(M), psi);
            report.add(result(where + " column " + name, problem.empty(), problem));
          };
          column("deg", A, psiA);
          column("X_n", B, psiB);
          column("nd", C, psiC);
          bool commutes = compose(restrict(fk), psiA) == compose(psiB, f) && compose(restrict(gk), psiB) == compose(psiC, g) &&
                          compose(iota(B), coeff::tensor(idI, f)) == compose(f, iota(A)) &&
                          compose(iota(C), coeff::tensor(idI, g)) == compose(g, iota(B));
          report.add(result(where + " squares commute", commutes, "the 3x3 diagram does not commute"));
          report.add(result(where + " k(x)E = E_k", coeff::is_isomorphism(coeff::base_change(step, psiA)),
                            "k (x) X^deg is not X^deg of the fiber"));
          report.add(result(where + " Tor vanishing", C.is_flat(), "X^nd_n of the deformation is not flat"));
        }
    }
  }
  return report;
}

}  // namespace templikit::deform
