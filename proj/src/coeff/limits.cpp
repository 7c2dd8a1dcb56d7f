#include "templikit/coeff/limits.hpp"

#include <deque>

#include "templikit/errors.hpp"

namespace templikit::coeff {

std::size_t ModuleDiagram::add_object(Module m) {
  if (m.ring() != ring) throw MismatchError("diagram object over the wrong ring");
  objects.push_back(std::move(m));
  return objects.size() - 1;
}

void ModuleDiagram::add_arrow(std::size_t source, std::size_t target, Morphism map) {
  arrows.push_back({source, target, std::move(map)});
}

void ModuleDiagram::check() const {
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const auto& a = arrows[k];
    if (a.source >= objects.size() || a.target >= objects.size())
      throw StructuralError("diagram arrow " + std::to_string(k) + " has an endpoint out of range");
    if (a.map.domain() != objects[a.source] || a.map.codomain() != objects[a.target])
      throw StructuralError("diagram arrow " + std::to_string(k) + " does not match its endpoint modules");
  }
}

Limit finite_limit(const ModuleDiagram& D) {
  D.check();
  const std::size_t n = D.objects.size();
  Limit L;
  if (n == 0) {
    L.object = Module::zero(D.ring);
    L.embedding_ = Morphism::zero(L.object, L.object);
    return L;
  }

  std::vector<std::vector<std::size_t>> out(n);
  std::vector<std::size_t> indeg(n, 0);
  for (std::size_t k = 0; k < D.arrows.size(); ++k) {
    const auto& a = D.arrows[k];
    if (a.source == a.target) continue;
    out[a.source].push_back(k);
    ++indeg[a.target];
  }

  // Express every object through the roots; record which arrows were used.
  std::vector<int> via(n, -1);  // defining arrow, or -2 for roots
  std::vector<std::size_t> order;
  std::vector<bool> used(D.arrows.size(), false);
  auto flood = [&](std::size_t root) {
    via[root] = -2;
    L.roots_.push_back(root);
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      std::size_t s = queue.front();
      queue.pop_front();
      order.push_back(s);
      for (std::size_t k : out[s]) {
        std::size_t t = D.arrows[k].target;
        if (via[t] != -1) continue;
        via[t] = static_cast<int>(k);
        used[k] = true;
        queue.push_back(t);
      }
    }
  };
  for (std::size_t i = 0; i < n; ++i)
    if (indeg[i] == 0 && via[i] == -1) flood(i);
  for (std::size_t i = 0; i < n; ++i)
    if (via[i] == -1) flood(i);

  std::vector<Module> root_modules;
  for (std::size_t r : L.roots_) root_modules.push_back(D.objects[r]);
  Module product = direct_sum(root_modules);
  std::vector<Morphism> expr(n);
  for (std::size_t k = 0; k < L.roots_.size(); ++k) expr[L.roots_[k]] = summand_projection(root_modules, k);
  for (std::size_t s : order) {
    if (via[s] >= 0) {
      const auto& a = D.arrows[static_cast<std::size_t>(via[s])];
      expr[s] = compose(a.map, expr[a.source]);
    }
  }

  std::vector<Morphism> constraints;
  for (std::size_t k = 0; k < D.arrows.size(); ++k) {
    if (used[k]) continue;
    const auto& a = D.arrows[k];
    if (a.source == a.target && a.map.is_identity()) continue;
    Morphism c = sub(compose(a.map, expr[a.source]), expr[a.target]);
    if (!c.is_zero()) constraints.push_back(std::move(c));
  }

  Submodule sub_mod;
  if (constraints.empty()) {
    sub_mod = {product, Morphism::identity(product)};
  } else {
    sub_mod = kernel(vcat(constraints));
  }
  L.object = sub_mod.module;
  L.embedding_ = sub_mod.inclusion;
  L.cone.reserve(n);
  for (std::size_t i = 0; i < n; ++i) L.cone.push_back(compose(expr[i], L.embedding_));
  return L;
}

Morphism Limit::factor(const Module& T, const std::vector<Morphism>& test) const {
  if (test.size() != cone.size()) throw StructuralError("test cone has the wrong number of legs");
  if (roots_.empty()) return Morphism::zero(T, object);
  std::vector<Morphism> legs;
  for (std::size_t r : roots_) legs.push_back(test[r]);
  auto u = factor_through(embedding_, vcat(legs));
  if (!u) throw StructuralError("test family is not a cone over the diagram");
  for (std::size_t i = 0; i < cone.size(); ++i)
    if (compose(cone[i], *u) != test[i])
      throw StructuralError("test family is not a cone over the diagram (leg " + std::to_string(i) + ")");
  return *u;
}

Colimit finite_colimit(const ModuleDiagram& D) {
  D.check();
  const std::size_t n = D.objects.size();
  Colimit C;
  if (n == 0) {
    C.object = Module::zero(D.ring);
    return C;
  }
  Module sum = direct_sum(D.objects);
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) offset[i + 1] = offset[i] + D.objects[i].gens();
  std::size_t ncols = 0;
  for (const auto& a : D.arrows) ncols += D.objects[a.source].gens();
  Matrix rel(sum.gens(), ncols);
  std::size_t c = 0;
  for (const auto& a : D.arrows) {
    const std::size_t w = D.objects[a.source].gens();
    for (std::size_t j = 0; j < w; ++j) {
      for (std::size_t i = 0; i < D.objects[a.target].gens(); ++i)
        rel(offset[a.target] + i, c + j) = a.map(i, j);
      rel(offset[a.source] + j, c + j) = D.ring.sub(rel(offset[a.source] + j, c + j), Scalar(1));
    }
    c += w;
  }
  Quotient q = quotient(sum, rel);
  C.object = q.module;
  C.lift_ = q.lift;
  for (std::size_t i = 0; i < n; ++i) C.cocone.push_back(compose(q.projection, summand_inclusion(D.objects, i)));
  return C;
}

Morphism Colimit::factor(const Module& T, const std::vector<Morphism>& test) const {
  if (test.size() != cocone.size()) throw StructuralError("test cocone has the wrong number of legs");
  if (cocone.empty()) return Morphism::zero(object, T);
  Morphism h = hcat(test);
  Matrix m = mat_mul(T.ring(), h.matrix(), lift_);
  std::string v = Morphism::congruence_violation(object, T, T.reduce_rows(m));
  if (!v.empty()) throw StructuralError("test family is not a cocone over the diagram");
  Morphism u(object, T, std::move(m));
  for (std::size_t i = 0; i < cocone.size(); ++i)
    if (compose(u, cocone[i]) != test[i])
      throw StructuralError("test family is not a cocone over the diagram (leg " + std::to_string(i) + ")");
  return u;
}

}  // namespace templikit::coeff
