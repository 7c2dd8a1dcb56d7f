#include "templikit/templicial/templicial.hpp"

#include <sstream>

#include "templikit/errors.hpp"

namespace templikit::templicial {

using necklace::Generator;
using quiver::Segment;

namespace {

std::string pair_str(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

}  // namespace

TemplicialModule::TemplicialModule(Ring ring, std::vector<std::string> vertices, int max_level)
    : ring_(std::move(ring)), vertices_(std::move(vertices)), max_level_(max_level) {
  if (max_level_ < 1) throw ConfigurationError("templicial modules need max_level >= 1");
  if (vertices_.empty()) throw ConfigurationError("templicial modules need at least one vertex");
  levels_.push_back(Quiver::unit(ring_, vertices_));
  for (int n = 1; n <= max_level_; ++n) levels_.emplace_back(ring_, vertices_);
  reset_maps(0);
}

const Quiver& TemplicialModule::level(int n) const {
  if (n < 0 || n > max_level_) throw RangeError("level " + std::to_string(n) + " outside 0.." + std::to_string(max_level_));
  return levels_[static_cast<std::size_t>(n)];
}

const QuiverMorphism& TemplicialModule::face(int n, int j) const {
  auto it = faces_.find({n, j});
  if (it == faces_.end()) throw RangeError("no inner face d_" + std::to_string(j) + " at level " + std::to_string(n));
  return it->second;
}

const QuiverMorphism& TemplicialModule::degeneracy(int n, int i) const {
  auto it = degeneracies_.find({n, i});
  if (it == degeneracies_.end()) throw RangeError("no degeneracy s_" + std::to_string(i) + " at level " + std::to_string(n));
  return it->second;
}

const QuiverMorphism& TemplicialModule::comultiplication(int k, int l) const {
  auto it = comults_.find({k, l});
  if (it == comults_.end()) throw RangeError("no comultiplication mu" + pair_str(k, l));
  return it->second;
}

Quiver TemplicialModule::tensor_levels(const std::vector<int>& dims) const {
  std::vector<Quiver> qs;
  for (int d : dims) qs.push_back(level(d));
  return quiver::tensor_S(ring_, vertices_, qs);
}

void TemplicialModule::set_level(int n, Quiver q) {
  if (n < 1 || n > max_level_) throw RangeError("level " + std::to_string(n) + " outside 1.." + std::to_string(max_level_));
  if (q.ring() != ring_ || q.vertices() != vertices_) throw MismatchError("level quiver over a different ring or vertex set");
  levels_[static_cast<std::size_t>(n)] = std::move(q);
  reset_maps(n);
}

void TemplicialModule::reset_maps(int) {
  auto fit = [](std::map<std::pair<int, int>, QuiverMorphism>& maps, std::pair<int, int> key, const Quiver& dom,
                const Quiver& cod) {
    auto it = maps.find(key);
    if (it == maps.end() || it->second.domain() != dom || it->second.codomain() != cod)
      maps.insert_or_assign(key, QuiverMorphism(dom, cod));
  };
  for (int n = 2; n <= max_level_; ++n)
    for (int j = 1; j < n; ++j) fit(faces_, {n, j}, level(n), level(n - 1));
  for (int n = 0; n < max_level_; ++n)
    for (int i = 0; i <= n; ++i) fit(degeneracies_, {n, i}, level(n), level(n + 1));
  for (int k = 1; k < max_level_; ++k)
    for (int l = 1; k + l <= max_level_; ++l) fit(comults_, {k, l}, level(k + l), quiver::tensor_S(level(k), level(l)));
}

namespace {

void check_shape(const QuiverMorphism& f, const QuiverMorphism& expected, const std::string& what) {
  if (f.domain() != expected.domain() || f.codomain() != expected.codomain())
    throw StructuralError(what + " does not have the expected domain and codomain");
}

}  // namespace

void TemplicialModule::set_face(int n, int j, QuiverMorphism f) {
  check_shape(f, face(n, j), "d_" + std::to_string(j) + " at level " + std::to_string(n));
  faces_[{n, j}] = std::move(f);
}

void TemplicialModule::set_degeneracy(int n, int i, QuiverMorphism f) {
  check_shape(f, degeneracy(n, i), "s_" + std::to_string(i) + " at level " + std::to_string(n));
  degeneracies_[{n, i}] = std::move(f);
}

void TemplicialModule::set_comultiplication(int k, int l, QuiverMorphism f) {
  check_shape(f, comultiplication(k, l), "mu" + pair_str(k, l));
  comults_[{k, l}] = std::move(f);
}

void TemplicialModule::set_face(int n, int j, std::size_t a, std::size_t b, Morphism f) {
  face(n, j);
  faces_[{n, j}].set_component(a, b, std::move(f));
}

void TemplicialModule::set_degeneracy(int n, int i, std::size_t a, std::size_t b, Morphism f) {
  degeneracy(n, i);
  degeneracies_[{n, i}].set_component(a, b, std::move(f));
}

void TemplicialModule::set_comultiplication(int k, int l, std::size_t a, std::size_t b, Morphism f) {
  comultiplication(k, l);
  comults_[{k, l}].set_component(a, b, std::move(f));
}

Evaluator::Evaluator(const TemplicialModule& X) : X_(X) {}

const Quiver& Evaluator::necklace(const Necklace& T) {
  if (T.p > X_.max_level()) throw RangeError("necklace " + T.to_string() + " exceeds the truncation");
  auto dims = T.beads();
  auto it = tensors_.find(dims);
  if (it != tensors_.end()) return it->second;
  return tensors_.emplace(dims, X_.tensor_levels(dims)).first->second;
}

const QuiverMorphism& Evaluator::fint(const FintMap& f) {
  auto it = fints_.find(f);
  if (it != fints_.end()) return it->second;
  auto word = necklace::fint_factorize(f);
  QuiverMorphism acc = QuiverMorphism::identity(X_.level(f.q));
  for (auto g = word.rbegin(); g != word.rend(); ++g) {
    const QuiverMorphism& step =
        g->kind == Generator::Kind::Face ? X_.face(g->dim, g->index) : X_.degeneracy(g->dim, g->index);
    acc = compose(step, acc);
  }
  return fints_.emplace(f, std::move(acc)).first->second;
}

const QuiverMorphism& Evaluator::comultiplication(const std::vector<int>& dims) {
  auto it = comults_.find(dims);
  if (it != comults_.end()) return it->second;
  int total = 0;
  for (int d : dims) total += d;
  QuiverMorphism out;
  if (dims.size() == 1) {
    out = QuiverMorphism::identity(X_.level(total));
  } else {
    std::vector<int> rest(dims.begin() + 1, dims.end());
    const QuiverMorphism& first = X_.comultiplication(dims.front(), total - dims.front());
    const Quiver& head = X_.level(dims.front());
    std::vector<Quiver> rest_levels;
    for (int d : rest) rest_levels.push_back(X_.level(d));
    std::vector<Segment> segs{{{head}, {head}, QuiverMorphism::identity(head)},
                              {{X_.level(total - dims.front())}, rest_levels, comultiplication(rest)}};
    out = compose(quiver::tensor_segments(X_.ring(), X_.vertices(), segs), first);
  }
  return comults_.emplace(dims, std::move(out)).first->second;
}

const QuiverMorphism& Evaluator::map(const NecklaceMap& f) {
  auto it = maps_.find(f);
  if (it != maps_.end()) return it->second;
  if (f.source.p > X_.max_level() || f.target.p > X_.max_level())
    throw RangeError("necklace map " + f.to_string() + " exceeds the truncation");
  auto c = necklace::classify_and_factor(f);
  const Necklace& V = c.active_part.target;
  const Necklace& U = f.target;
  const Necklace& T = f.source;

  std::vector<Segment> inert;
  for (std::size_t k = 0; k + 1 < U.T.size(); ++k) {
    std::vector<int> dims;
    std::vector<Quiver> tgt;
    for (std::size_t v = 0; v + 1 < V.T.size(); ++v)
      if (V.T[v] >= U.T[k] && V.T[v + 1] <= U.T[k + 1]) {
        dims.push_back(V.T[v + 1] - V.T[v]);
        tgt.push_back(X_.level(dims.back()));
      }
    inert.push_back({{X_.level(U.T[k + 1] - U.T[k])}, tgt, comultiplication(dims)});
  }

  std::vector<Segment> active;
  for (std::size_t i = 0; i + 1 < T.T.size(); ++i) {
    const int t0 = T.T[i], t1 = T.T[i + 1];
    const int lo = f.map(t0), hi = f.map(t1);
    std::vector<int> vals;
    for (int t = t0; t <= t1; ++t) vals.push_back(f.map(t) - lo);
    const FintMap piece(t1 - t0, hi - lo, vals);
    if (lo == hi)
      active.push_back({{}, {X_.level(t1 - t0)}, fint(piece)});
    else
      active.push_back({{X_.level(hi - lo)}, {X_.level(t1 - t0)}, fint(piece)});
  }

  const auto& R = X_.ring();
  const auto& S = X_.vertices();
  QuiverMorphism xi = quiver::tensor_segments(R, S, inert);
  QuiverMorphism xa = quiver::tensor_segments(R, S, active);
  return maps_.emplace(f, compose(xa, xi)).first->second;
}

Quiver eval_necklace(const TemplicialModule& X, const Necklace& T) {
  Evaluator ev(X);
  return ev.necklace(T);
}

QuiverMorphism eval_map(const TemplicialModule& X, const NecklaceMap& f) {
  Evaluator ev(X);
  return ev.map(f);
}

NecklicialModule::NecklicialModule(Ring ring, int max_level)
    : ring_(std::move(ring)), max_level_(max_level), zero_(Module::zero(ring_)) {}

const Module& NecklicialModule::value(const Necklace& T) const {
  auto it = values_.find(T);
  return it == values_.end() ? zero_ : it->second;
}

const Morphism& NecklicialModule::action(const NecklaceMap& f) const {
  auto it = actions_.find(f);
  if (it == actions_.end()) throw StructuralError("no action for " + f.to_string());
  return it->second;
}

void NecklicialModule::set_value(const Necklace& T, Module m) {
  if (T.p > max_level_) throw RangeError("necklace " + T.to_string() + " exceeds the truncation");
  if (m.ring() != ring_) throw MismatchError("value over a different ring");
  values_.insert_or_assign(T, std::move(m));
}

void NecklicialModule::set_action(const NecklaceMap& f, Morphism m) {
  if (m.domain() != value(f.target) || m.codomain() != value(f.source))
    throw StructuralError("action of " + f.to_string() + " does not map Y_target -> Y_source");
  actions_.insert_or_assign(f, std::move(m));
}

NecklicialModule zero_necklicial(const Ring& ring, int max_level) {
  NecklicialModule Y(ring, max_level);
  auto ns = necklace::necklaces_up_to(max_level);
  for (const auto& T : ns) Y.set_value(T, Module::zero(ring));
  for (const auto& A : ns)
    for (const auto& B : ns)
      for (const auto& f : necklace::necklace_maps(A, B)) Y.set_action(f, Morphism::zero(Y.value(B), Y.value(A)));
  return Y;
}

std::string ValidationReport::to_string() const {
  if (passed()) return "valid";
  std::ostringstream os;
  for (const auto& v : violations) os << v.identity << " " << v.indices << ": " << v.detail << "\n";
  return os.str();
}

namespace {

std::string first_difference(const Morphism& f, const Morphism& g) {
  if (f.domain() != g.domain() || f.codomain() != g.codomain()) return "shapes differ";
  for (std::size_t i = 0; i < f.matrix().rows(); ++i)
    for (std::size_t j = 0; j < f.matrix().cols(); ++j)
      if (f(i, j) != g(i, j))
        return "entry (" + std::to_string(i) + "," + std::to_string(j) + "): " + f.ring().format_element(f(i, j)) +
               " vs " + g.ring().format_element(g(i, j));
  return "";
}

class Checker {
 public:
  explicit Checker(ValidationReport& r) : report_(r) {}

  void operator()(const std::string& identity, const std::string& indices, const QuiverMorphism& lhs,
                  const QuiverMorphism& rhs) {
    if (lhs == rhs) return;
    const auto& V = lhs.domain().vertices();
    for (std::size_t a = 0; a < V.size(); ++a)
      for (std::size_t b = 0; b < V.size(); ++b) {
        auto d = first_difference(lhs.component(a, b), rhs.component(a, b));
        if (!d.empty()) {
          report_.violations.push_back({identity, indices, "hom (" + V[a] + "," + V[b] + ") " + d});
          return;
        }
      }
  }

 private:
  ValidationReport& report_;
};

}  // namespace

ValidationReport validate_templicial(const TemplicialModule& X) {
  ValidationReport report;
  Checker check(report);
  const int N = X.max_level();
  auto d = [&](int n, int j) -> const QuiverMorphism& { return X.face(n, j); };
  auto s = [&](int n, int i) -> const QuiverMorphism& { return X.degeneracy(n, i); };
  auto idx = [](std::initializer_list<std::pair<const char*, int>> kv) {
    std::string out;
    for (const auto& [k, v] : kv) out += std::string(out.empty() ? "" : " ") + k + "=" + std::to_string(v);
    return out;
  };

  for (int n = 3; n <= N; ++n)
    for (int j = 2; j < n; ++j)
      for (int i = 1; i < j; ++i)
        check("d_i d_j = d_{j-1} d_i", idx({{"n", n}, {"i", i}, {"j", j}}), compose(d(n - 1, i), d(n, j)),
              compose(d(n - 1, j - 1), d(n, i)));

  for (int n = 0; n + 2 <= N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        check("s_i s_j = s_{j+1} s_i", idx({{"n", n}, {"i", i}, {"j", j}}), compose(s(n + 1, i), s(n, j)),
              compose(s(n + 1, j + 1), s(n, i)));

  for (int n = 1; n + 1 <= N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 1; i < n + 1; ++i) {
        auto lhs = compose(d(n + 1, i), s(n, j));
        auto where = idx({{"n", n}, {"i", i}, {"j", j}});
        if (i < j)
          check("d_i s_j = s_{j-1} d_i", where, lhs, compose(s(n - 1, j - 1), d(n, i)));
        else if (i == j || i == j + 1)
          check("d_i s_j = id", where, lhs, QuiverMorphism::identity(X.level(n)));
        else
          check("d_i s_j = s_j d_{i-1}", where, lhs, compose(s(n - 1, j), d(n, i - 1)));
      }

  const auto& R = X.ring();
  const auto& S = X.vertices();
  for (int k = 1; k <= N; ++k)
    for (int l = 1; k + l <= N; ++l)
      for (int m = 1; k + l + m <= N; ++m) {
        const Quiver &Xk = X.level(k), &Xl = X.level(l), &Xm = X.level(m);
        auto lhs = compose(quiver::tensor_segments(R, S, {{{X.level(k + l)}, {Xk, Xl}, X.comultiplication(k, l)},
                                                           {{Xm}, {Xm}, QuiverMorphism::identity(Xm)}}),
                           X.comultiplication(k + l, m));
        auto rhs = compose(quiver::tensor_segments(R, S, {{{Xk}, {Xk}, QuiverMorphism::identity(Xk)},
                                                           {{X.level(l + m)}, {Xl, Xm}, X.comultiplication(l, m)}}),
                           X.comultiplication(k, l + m));
        check("coassociativity", idx({{"k", k}, {"l", l}, {"m", m}}), lhs, rhs);
      }

  Evaluator ev(X);
  for (int k = 1; k <= N; ++k)
    for (int l = 1; k + l <= N; ++l)
      for (int k2 = 1; k2 + 1 <= N; ++k2)
        for (int l2 = 1; k2 + l2 <= N; ++l2)
          for (const auto& f : necklace::fint_maps(k2, k))
            for (const auto& g : necklace::fint_maps(l2, l)) {
              auto lhs = compose(X.comultiplication(k2, l2), ev.fint(necklace::concat(f, g)));
              auto rhs = compose(quiver::tensor_S({ev.fint(f), ev.fint(g)}), X.comultiplication(k, l));
              check("colax naturality", "f=" + f.to_string() + " g=" + g.to_string(), lhs, rhs);
            }

  // Squares through mu_{0,l} and mu_{k,0}, where one side factors through the
  // unit X_0 -> X_{k2} and the counit isomorphisms are the identity on generators.
  auto unitor = [](const QuiverMorphism& f, const Quiver& dom) {
    QuiverMorphism out(dom, f.codomain());
    for (std::size_t a = 0; a < dom.size(); ++a)
      for (std::size_t b = 0; b < dom.size(); ++b) {
        const auto& c = f.component(a, b);
        out.set_component(a, b, Morphism(dom.hom(a, b), c.codomain(), c.matrix()));
      }
    return out;
  };
  for (int m = 1; m < N; ++m)
    for (int k2 = 1; k2 + 1 <= N; ++k2)
      for (int l2 = 1; k2 + l2 <= N; ++l2)
        for (int side = 0; side < 2; ++side) {
          const int k = side == 0 ? 0 : m, l = side == 0 ? m : 0;
          for (const auto& f : necklace::fint_maps(k2, k))
            for (const auto& g : necklace::fint_maps(l2, l)) {
              auto lhs = compose(X.comultiplication(k2, l2), ev.fint(necklace::concat(f, g)));
              auto rhs = unitor(quiver::tensor_S({ev.fint(f), ev.fint(g)}), X.level(m));
              check("colax unit naturality", "f=" + f.to_string() + " g=" + g.to_string(), lhs, rhs);
            }
        }
  return report;
}

ValidationReport validate_necklicial(const NecklicialModule& Y) {
  ValidationReport report;
  auto ns = necklace::necklaces_up_to(Y.max_level());
  std::map<std::pair<std::size_t, std::size_t>, std::vector<NecklaceMap>> maps;
  for (std::size_t a = 0; a < ns.size(); ++a)
    for (std::size_t b = 0; b < ns.size(); ++b) maps[{a, b}] = necklace::necklace_maps(ns[a], ns[b]);

  for (const auto& [key, fs] : maps)
    for (const auto& f : fs) {
      if (!Y.has_action(f)) {
        report.violations.push_back({"action defined", f.to_string(), "missing"});
        continue;
      }
      const auto& yf = Y.action(f);
      if (yf.domain() != Y.value(f.target) || yf.codomain() != Y.value(f.source))
        report.violations.push_back({"action shape", f.to_string(), "does not map Y_target -> Y_source"});
      if (key.first == key.second && f.map.is_identity() && !yf.is_identity())
        report.violations.push_back({"Y_id = id", f.to_string(), first_difference(yf, Morphism::identity(yf.domain()))});
    }
  if (!report.passed()) return report;

  for (std::size_t a = 0; a < ns.size(); ++a)
    for (std::size_t b = 0; b < ns.size(); ++b)
      for (const auto& f : maps[{a, b}])
        for (std::size_t c = 0; c < ns.size(); ++c)
          for (const auto& g : maps[{b, c}]) {
            auto gf = necklace::compose(g, f);
            auto lhs = Y.action(gf);
            auto rhs = coeff::compose(Y.action(f), Y.action(g));
            if (lhs != rhs)
              report.violations.push_back(
                  {"Y_{g o f} = Y_f o Y_g", "f=" + f.to_string() + " g=" + g.to_string(), first_difference(lhs, rhs)});
          }
  return report;
}

NecklicialModule hom_necklicial(Evaluator& ev, std::size_t a, std::size_t b) {
  const auto& X = ev.module();
  if (a >= X.vertices().size() || b >= X.vertices().size()) throw ConfigurationError("unknown vertex index");
  NecklicialModule Y(X.ring(), X.max_level());
  auto ns = necklace::necklaces_up_to(X.max_level());
  for (const auto& T : ns) Y.set_value(T, ev.necklace(T).hom(a, b));
  for (const auto& A : ns)
    for (const auto& B : ns)
      for (const auto& f : necklace::necklace_maps(A, B)) Y.set_action(f, ev.map(f).component(a, b));
  return Y;
}

NecklicialModule hom_necklicial(const TemplicialModule& X, std::size_t a, std::size_t b) {
  Evaluator ev(X);
  return hom_necklicial(ev, a, b);
}

std::vector<NecklicialModule> hom_necklicials(const TemplicialModule& X) {
  Evaluator ev(X);
  std::vector<NecklicialModule> out;
  for (std::size_t a = 0; a < X.vertices().size(); ++a)
    for (std::size_t b = 0; b < X.vertices().size(); ++b) out.push_back(hom_necklicial(ev, a, b));
  return out;
}

NecklicialModule tensor_external(const NecklicialModule& Y, const Module& M) {
  if (M.ring() != Y.ring()) throw MismatchError("external tensor with a module over a different ring");
  NecklicialModule out(Y.ring(), Y.max_level());
  for (const auto& [T, m] : Y.values()) out.set_value(T, coeff::tensor(m, M));
  const auto id = Morphism::identity(M);
  for (const auto& [f, m] : Y.actions()) out.set_action(f, coeff::tensor(m, id));
  return out;
}

NecklicialModule direct_sum(const NecklicialModule& Y, const NecklicialModule& Z) {
  if (Y.ring() != Z.ring() || Y.max_level() != Z.max_level()) throw MismatchError("direct sum of unrelated necklicial modules");
  NecklicialModule out(Y.ring(), Y.max_level());
  for (const auto& T : necklace::necklaces_up_to(Y.max_level()))
    out.set_value(T, coeff::direct_sum(Y.value(T), Z.value(T)));
  for (const auto& [f, m] : Y.actions()) out.set_action(f, coeff::direct_sum(m, Z.action(f)));
  return out;
}

}  // namespace templikit::templicial
