#include "templikit/necklace/necklace.hpp"

#include <algorithm>
#include <sstream>

#include "templikit/errors.hpp"

namespace templikit::necklace {

namespace {

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::vector<int> image(const FintMap& f, const std::vector<int>& T) {
  std::vector<int> out;
  for (int t : T) out.push_back(f(t));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void fint_rec(int i, int p, int q, std::vector<int>& cur, std::vector<FintMap>& out) {
  if (i == p) {
    cur.push_back(q);
    out.emplace_back(p, q, cur);
    cur.pop_back();
    return;
  }
  for (int v = cur.back(); v <= q; ++v) {
    cur.push_back(v);
    fint_rec(i + 1, p, q, cur, out);
    cur.pop_back();
  }
}

}  // namespace

FintMap::FintMap(int source_dim, int target_dim, std::vector<int> vals)
    : p(source_dim), q(target_dim), values(std::move(vals)) {
  if (!valid()) throw StructuralError("not an endpoint-preserving monotone map: " + to_string());
}

FintMap FintMap::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) v[static_cast<std::size_t>(i)] = i;
  return FintMap(n, n, std::move(v));
}

FintMap FintMap::coface(int n, int i) {
  if (i <= 0 || i >= n) throw RangeError("inner coface index out of range");
  std::vector<int> v;
  for (int k = 0; k < n; ++k) v.push_back(k < i ? k : k + 1);
  return FintMap(n - 1, n, std::move(v));
}

FintMap FintMap::codegeneracy(int n, int j) {
  if (j < 0 || j > n) throw RangeError("codegeneracy index out of range");
  std::vector<int> v;
  for (int k = 0; k <= n + 1; ++k) v.push_back(k <= j ? k : k - 1);
  return FintMap(n + 1, n, std::move(v));
}

bool FintMap::is_identity() const {
  if (p != q) return false;
  for (int i = 0; i <= p; ++i)
    if ((*this)(i) != i) return false;
  return true;
}

bool FintMap::is_injective() const {
  for (int i = 0; i < p; ++i)
    if ((*this)(i) == (*this)(i + 1)) return false;
  return true;
}

bool FintMap::is_surjective() const {
  for (int i = 0; i < p; ++i)
    if ((*this)(i + 1) - (*this)(i) > 1) return false;
  return true;
}

bool FintMap::valid() const {
  if (p < 0 || q < 0 || values.size() != static_cast<std::size_t>(p) + 1) return false;
  if (values.front() != 0 || values.back() != q) return false;
  return std::is_sorted(values.begin(), values.end());
}

std::string FintMap::to_string() const { return "(" + join(values) + ")"; }

FintMap compose(const FintMap& g, const FintMap& f) {
  if (f.q != g.p) throw MismatchError("cannot compose " + g.to_string() + " after " + f.to_string());
  std::vector<int> v;
  for (int x : f.values) v.push_back(g(x));
  return FintMap(f.p, g.q, std::move(v));
}

FintMap concat(const FintMap& f, const FintMap& g) {
  std::vector<int> v = f.values;
  for (std::size_t i = 1; i < g.values.size(); ++i) v.push_back(f.q + g.values[i]);
  return FintMap(f.p + g.p, f.q + g.q, std::move(v));
}

Necklace::Necklace(int dim, std::vector<int> joints) : p(dim), T(std::move(joints)) {
  std::sort(T.begin(), T.end());
  T.erase(std::unique(T.begin(), T.end()), T.end());
  if (!valid()) throw StructuralError("invalid necklace " + to_string());
}

Necklace Necklace::simplex(int n) { return n == 0 ? Necklace(0, {0}) : Necklace(n, {0, n}); }

Necklace Necklace::from_beads(const std::vector<int>& dims) {
  Necklace out = simplex(0);
  for (int d : dims) out = wedge(out, simplex(d));
  return out;
}

std::vector<int> Necklace::beads() const {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < T.size(); ++i) out.push_back(T[i + 1] - T[i]);
  return out;
}

bool Necklace::contains(int t) const { return std::binary_search(T.begin(), T.end(), t); }

bool Necklace::valid() const {
  if (p < 0 || T.empty() || T.front() != 0 || T.back() != p) return false;
  return std::adjacent_find(T.begin(), T.end(), [](int a, int b) { return a >= b; }) == T.end();
}

std::string Necklace::to_string() const { return "({" + join(T) + "}," + std::to_string(p) + ")"; }

Necklace wedge(const Necklace& a, const Necklace& b) {
  std::vector<int> T = a.T;
  for (int u : b.T) T.push_back(a.p + u);
  return Necklace(a.p + b.p, std::move(T));
}

NecklaceMap::NecklaceMap(Necklace s, Necklace t, FintMap f) : source(std::move(s)), target(std::move(t)), map(std::move(f)) {
  if (!valid()) throw StructuralError("invalid necklace map " + to_string());
}

NecklaceMap NecklaceMap::identity(const Necklace& n) { return NecklaceMap(n, n, FintMap::identity(n.p)); }

bool NecklaceMap::valid() const {
  if (map.p != source.p || map.q != target.p) return false;
  return subset(target.T, image(map, source.T));
}

bool NecklaceMap::is_active() const { return image(map, source.T) == target.T; }

std::string NecklaceMap::to_string() const {
  return source.to_string() + "->" + target.to_string() + " " + map.to_string();
}

NecklaceMap compose(const NecklaceMap& g, const NecklaceMap& f) {
  if (f.target != g.source) throw MismatchError("cannot compose necklace maps " + g.to_string() + " after " + f.to_string());
  return NecklaceMap(f.source, g.target, compose(g.map, f.map));
}

Classification classify_and_factor(const NecklaceMap& f) {
  Necklace mid(f.target.p, image(f.map, f.source.T));
  return {f.is_inert(), f.is_active(), NecklaceMap(f.source, mid, f.map),
          NecklaceMap(mid, f.target, FintMap::identity(f.target.p))};
}

std::vector<FintMap> fint_maps(int p, int q) {
  std::vector<FintMap> out;
  if (p == 0) {
    if (q == 0) out.push_back(FintMap::identity(0));
    return out;
  }
  std::vector<int> cur{0};
  fint_rec(1, p, q, cur, out);
  return out;
}

std::vector<Necklace> necklaces(int p) {
  if (p == 0) return {Necklace::simplex(0)};
  std::vector<Necklace> out;
  const int inner = p - 1;
  for (unsigned mask = 0; mask < (1u << inner); ++mask) {
    std::vector<int> T{0};
    for (int i = 1; i < p; ++i)
      if (mask & (1u << (i - 1))) T.push_back(i);
    T.push_back(p);
    out.emplace_back(p, std::move(T));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Necklace> necklaces_up_to(int max_dim) {
  std::vector<Necklace> out;
  for (int p = 0; p <= max_dim; ++p)
    for (auto& n : necklaces(p)) out.push_back(std::move(n));
  return out;
}

std::vector<NecklaceMap> necklace_maps(const Necklace& source, const Necklace& target) {
  std::vector<NecklaceMap> out;
  for (auto& f : fint_maps(source.p, target.p))
    if (subset(target.T, image(f, source.T))) out.push_back(NecklaceMap(source, target, std::move(f)));
  return out;
}

std::vector<NecklaceMap> injective_into_simplex(int n) {
  std::vector<NecklaceMap> out;
  const Necklace top = Necklace::simplex(n);
  for (int p = 0; p <= n; ++p)
    for (const auto& T : necklaces(p))
      for (auto& f : necklace_maps(T, top))
        if (f.is_injective()) out.push_back(std::move(f));
  return out;
}

std::vector<NecklaceMap> inert_into_simplex(int n) {
  std::vector<NecklaceMap> out;
  const Necklace top = Necklace::simplex(n);
  for (const auto& T : necklaces(n)) out.emplace_back(T, top, FintMap::identity(n));
  return out;
}

std::vector<FintMap> surjections(int n) {
  std::vector<FintMap> out;
  for (int m = 0; m <= n; ++m)
    for (auto& f : fint_maps(n, m))
      if (f.is_surjective()) out.push_back(std::move(f));
  return out;
}

namespace {

NecklaceDiagram over_simplex(std::vector<NecklaceMap> objects) {
  NecklaceDiagram D;
  D.objects = std::move(objects);
  for (std::size_t i = 0; i < D.objects.size(); ++i)
    for (std::size_t k = 0; k < D.objects.size(); ++k) {
      if (i == k) continue;
      for (auto& g : necklace_maps(D.objects[i].source, D.objects[k].source))
        if (compose(D.objects[k].map, g.map) == D.objects[i].map) D.arrows.push_back({i, k, std::move(g)});
    }
  return D;
}

}  // namespace

NecklaceDiagram horn_diagram(int n, int j) {
  if (j <= 0 || j >= n) throw RangeError("horn index must satisfy 0 < j < n");
  const FintMap dj = FintMap::coface(n, j);
  std::vector<NecklaceMap> objs;
  for (auto& f : injective_into_simplex(n)) {
    if (f.map.is_identity() && f.source == Necklace::simplex(n)) continue;
    if (f.map == dj && f.source == Necklace::simplex(n - 1)) continue;
    objs.push_back(std::move(f));
  }
  return over_simplex(std::move(objs));
}

NecklaceDiagram wings_diagram(int n) {
  if (n < 2) throw RangeError("wings need n >= 2");
  return truncated_wings_diagram(n, n - 1);
}

NecklaceDiagram truncated_wings_diagram(int n, int i) {
  if (i < 0 || i >= n) throw RangeError("truncated wings need 0 <= i < n");
  std::vector<NecklaceMap> objs;
  for (auto& f : inert_into_simplex(n)) {
    if (f.source == Necklace::simplex(n)) continue;
    bool ok = true;
    for (int t : f.source.T) ok = ok && !(t > i && t < n);
    if (ok) objs.push_back(std::move(f));
  }
  return over_simplex(std::move(objs));
}

DegeneracyDiagram degeneracy_diagram(int n) {
  if (n < 1) throw RangeError("degeneracy diagram needs n >= 1");
  DegeneracyDiagram D;
  D.n = n;
  for (auto& s : surjections(n))
    if (!s.is_identity()) D.objects.push_back(std::move(s));
  for (std::size_t i = 0; i < D.objects.size(); ++i)
    for (std::size_t k = 0; k < D.objects.size(); ++k) {
      if (i == k) continue;
      for (auto& t : fint_maps(D.objects[i].q, D.objects[k].q))
        if (compose(t, D.objects[i]) == D.objects[k]) D.arrows.push_back({i, k, std::move(t)});
    }
  return D;
}

FintMap Generator::as_map() const {
  return kind == Kind::Face ? FintMap::coface(dim, index) : FintMap::codegeneracy(dim, index);
}

std::string Generator::to_string() const {
  return (kind == Kind::Face ? "d" : "s") + std::to_string(index) + "@" + std::to_string(dim);
}

std::vector<Generator> fint_factorize(const FintMap& f) {
  std::vector<Generator> word;
  int dim = f.p;
  for (int j = f.p - 1; j >= 0; --j)
    if (f(j) == f(j + 1)) word.push_back({Generator::Kind::Degeneracy, j, --dim});
  std::vector<bool> hit(static_cast<std::size_t>(f.q) + 1, false);
  for (int v : f.values) hit[static_cast<std::size_t>(v)] = true;
  for (int i = 0; i <= f.q; ++i)
    if (!hit[static_cast<std::size_t>(i)]) word.push_back({Generator::Kind::Face, i, ++dim});
  return word;
}

FintMap evaluate(const std::vector<Generator>& word, int source_dim) {
  FintMap acc = FintMap::identity(source_dim);
  for (const auto& g : word) acc = compose(g.as_map(), acc);
  return acc;
}

}  // namespace templikit::necklace
