#include "templikit/constructors/constructors.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "templikit/coeff/linalg.hpp"
#include "templikit/errors.hpp"

namespace templikit::constructors {

using coeff::Matrix;
using quiver::Segment;

namespace {

std::vector<Quiver> copies(const Quiver& q, int n) { return std::vector<Quiver>(static_cast<std::size_t>(n), q); }

Segment id_segment(const Quiver& q) { return {{q}, {q}, QuiverMorphism::identity(q)}; }

}  // namespace

LinearCategory LinearCategory::algebra(const Ring& ring, const std::vector<Scalar>& g) {
  if (g.size() < 2 || !ring.is_unit(g.back()) || ring.reduce(g.back()) != ring.one())
    throw ConfigurationError("algebra needs a monic polynomial of degree >= 1");
  const std::size_t r = g.size() - 1;
  // powers[e] = coefficients of x^e modulo g, for e < 2r - 1.
  std::vector<std::vector<Scalar>> powers;
  std::vector<Scalar> cur(r, ring.zero());
  cur[0] = ring.one();
  for (std::size_t e = 0; e + 1 < 2 * r; ++e) {
    powers.push_back(cur);
    std::vector<Scalar> next(r, ring.zero());
    Scalar top = cur[r - 1];
    for (std::size_t i = r - 1; i > 0; --i) next[i] = cur[i - 1];
    for (std::size_t i = 0; i < r; ++i) next[i] = ring.sub(next[i], ring.mul(top, g[i]));
    cur = std::move(next);
  }
  LinearCategory C;
  C.ring = ring;
  C.objects = {"*"};
  C.homs = Quiver(ring, C.objects);
  C.homs.set_hom(0, 0, Module::free(ring, r));
  Quiver CC = quiver::tensor_S(C.homs, C.homs);
  Matrix m(r, r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) m(k, i * r + j) = powers[i + j][k];
  C.composition = QuiverMorphism(CC, C.homs);
  C.composition.set_component(0, 0, Morphism(CC.hom(0, 0), C.homs.hom(0, 0), m));
  Quiver I = Quiver::unit(ring, C.objects);
  Matrix u(r, 1);
  u(0, 0) = ring.one();
  C.unit = QuiverMorphism(I, C.homs);
  C.unit.set_component(0, 0, Morphism(I.hom(0, 0), C.homs.hom(0, 0), u));
  return C;
}

LinearCategory LinearCategory::unit_category(const Ring& ring) { return algebra(ring, {ring.zero(), ring.one()}); }

LinearCategory LinearCategory::arrow(const Ring& ring) {
  LinearCategory C;
  C.ring = ring;
  C.objects = {"a", "b"};
  C.homs = Quiver(ring, C.objects);
  C.homs.set_hom(0, 0, Module::free(ring, 1));
  C.homs.set_hom(0, 1, Module::free(ring, 1));
  C.homs.set_hom(1, 1, Module::free(ring, 1));
  Quiver CC = quiver::tensor_S(C.homs, C.homs);
  C.composition = QuiverMorphism(CC, C.homs);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t c = 0; c < 2; ++c) {
      const std::size_t k = CC.hom(a, c).gens();
      if (C.homs.hom(a, c).gens() == 0) continue;
      Matrix m(1, k);
      for (std::size_t j = 0; j < k; ++j) m(0, j) = ring.one();
      C.composition.set_component(a, c, Morphism(CC.hom(a, c), C.homs.hom(a, c), m));
    }
  Quiver I = Quiver::unit(ring, C.objects);
  C.unit = QuiverMorphism(I, C.homs);
  for (std::size_t a = 0; a < 2; ++a)
    C.unit.set_component(a, a, Morphism(I.hom(a, a), C.homs.hom(a, a), Matrix::identity(1)));
  return C;
}

ValidationReport LinearCategory::validate() const {
  ValidationReport report;
  const Quiver CC = quiver::tensor_S(homs, homs);
  const Quiver I = Quiver::unit(ring, objects);
  if (composition.domain() != CC || composition.codomain() != homs || unit.domain() != I || unit.codomain() != homs) {
    report.violations.push_back({"shape", "", "composition or unit has the wrong domain or codomain"});
    return report;
  }
  const Segment m{{homs, homs}, {homs}, composition};
  const Segment id = id_segment(homs);
  const Segment u{{}, {homs}, unit};
  auto left = compose(composition, quiver::tensor_segments(ring, objects, {m, id}));
  auto right = compose(composition, quiver::tensor_segments(ring, objects, {id, m}));
  if (left != right) report.violations.push_back({"associativity", "", "m(m x 1) != m(1 x m)"});
  if (!compose(composition, quiver::tensor_segments(ring, objects, {u, id})).is_identity())
    report.violations.push_back({"left unit", "", "m(u x 1) != 1"});
  if (!compose(composition, quiver::tensor_segments(ring, objects, {id, u})).is_identity())
    report.violations.push_back({"right unit", "", "m(1 x u) != 1"});
  return report;
}

SimplicialSetTrunc SimplicialSetTrunc::from_complex(std::vector<std::string> vertex_names,
                                                    const std::vector<std::vector<std::size_t>>& simplices,
                                                    int max_level) {
  if (max_level < 1) throw ConfigurationError("simplicial sets need max_level >= 1");
  std::set<std::vector<std::size_t>> nondeg;
  std::vector<std::vector<std::size_t>> todo = simplices;
  for (std::size_t v = 0; v < vertex_names.size(); ++v) todo.push_back({v});
  while (!todo.empty()) {
    auto s = std::move(todo.back());
    todo.pop_back();
    if (s.empty()) continue;
    for (std::size_t v : s)
      if (v >= vertex_names.size()) throw ConfigurationError("simplex refers to an unknown vertex");
    if (std::set<std::size_t>(s.begin(), s.end()).size() != s.size())
      throw ConfigurationError("nondegenerate simplices must have distinct vertices");
    if (!nondeg.insert(s).second) continue;
    if (s.size() > 1)
      for (std::size_t i = 0; i < s.size(); ++i) {
        auto f = s;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
        todo.push_back(std::move(f));
      }
  }
  SimplicialSetTrunc K;
  K.max_level_ = max_level;
  K.names_ = std::move(vertex_names);
  K.simplices_.resize(static_cast<std::size_t>(max_level) + 1);
  for (int n = 0; n <= max_level; ++n) {
    auto& level = K.simplices_[static_cast<std::size_t>(n)];
    for (const auto& sigma : necklace::surjections(n))
      for (const auto& y : nondeg) {
        if (static_cast<int>(y.size()) != sigma.q + 1) continue;
        std::vector<std::size_t> x;
        for (int v : sigma.values) x.push_back(y[static_cast<std::size_t>(v)]);
        level.push_back(std::move(x));
      }
    std::sort(level.begin(), level.end());
  }
  K.faces_.resize(static_cast<std::size_t>(max_level) + 1);
  K.degens_.resize(static_cast<std::size_t>(max_level) + 1);
  for (int n = 0; n <= max_level; ++n) {
    const auto& level = K.simplices_[static_cast<std::size_t>(n)];
    if (n >= 1)
      for (int i = 0; i <= n; ++i) {
        std::vector<std::size_t> table;
        for (const auto& x : level) {
          auto f = x;
          f.erase(f.begin() + i);
          table.push_back(K.find(f));
        }
        K.faces_[static_cast<std::size_t>(n)].push_back(std::move(table));
      }
    if (n < max_level)
      for (int i = 0; i <= n; ++i) {
        std::vector<std::size_t> table;
        for (const auto& x : level) {
          auto s = x;
          s.insert(s.begin() + i, x[static_cast<std::size_t>(i)]);
          table.push_back(K.find(s));
        }
        K.degens_[static_cast<std::size_t>(n)].push_back(std::move(table));
      }
  }
  return K;
}

std::size_t SimplicialSetTrunc::find(const std::vector<std::size_t>& seq) const {
  if (seq.empty() || seq.size() > simplices_.size()) return npos;
  const auto& level = simplices_[seq.size() - 1];
  auto it = std::lower_bound(level.begin(), level.end(), seq);
  return it != level.end() && *it == seq ? static_cast<std::size_t>(it - level.begin()) : npos;
}

std::size_t SimplicialSetTrunc::face(int n, int i, std::size_t x) const {
  if (n < 1 || n > max_level_ || i < 0 || i > n) throw RangeError("face index out of range");
  return faces_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)][x];
}

std::size_t SimplicialSetTrunc::degeneracy(int n, int i, std::size_t x) const {
  if (n < 0 || n >= max_level_ || i < 0 || i > n) throw RangeError("degeneracy index out of range");
  return degens_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)][x];
}

bool SimplicialSetTrunc::is_degenerate(int n, std::size_t x) const {
  const auto& s = simplex(n, x);
  return std::adjacent_find(s.begin(), s.end()) != s.end();
}

ValidationReport SimplicialSetTrunc::validate() const {
  ValidationReport report;
  auto fail = [&](const std::string& id, int n, int i, int j, std::size_t x) {
    report.violations.push_back({id, "n=" + std::to_string(n) + " i=" + std::to_string(i) + " j=" + std::to_string(j),
                                 "simplex " + std::to_string(x)});
  };
  for (int n = 0; n <= max_level_; ++n)
    for (std::size_t x = 0; x < count(n); ++x) {
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i)
          if (n >= 2 && face(n - 1, i, face(n, j, x)) != face(n - 1, j - 1, face(n, i, x))) fail("d_i d_j", n, i, j, x);
      if (n + 2 <= max_level_)
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i <= j; ++i)
            if (degeneracy(n + 1, i, degeneracy(n, j, x)) != degeneracy(n + 1, j + 1, degeneracy(n, i, x)))
              fail("s_i s_j", n, i, j, x);
      if (n + 1 <= max_level_)
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i <= n + 1; ++i) {
            const std::size_t lhs = face(n + 1, i, degeneracy(n, j, x));
            std::size_t rhs;
            if (i < j)
              rhs = degeneracy(n - 1, j - 1, face(n, i, x));
            else if (i == j || i == j + 1)
              rhs = x;
            else
              rhs = degeneracy(n - 1, j, face(n, i - 1, x));
            if (lhs != rhs) fail("d_i s_j", n, i, j, x);
          }
    }
  return report;
}

namespace {

std::vector<std::string> default_names(std::vector<std::string> names, std::size_t n) {
  if (names.empty())
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  if (names.size() != n) throw ConfigurationError("wrong number of vertex names");
  return names;
}

}  // namespace

SimplicialSetTrunc sset_simplex(int n, int max_level, std::vector<std::string> names) {
  const auto k = static_cast<std::size_t>(n) + 1;
  std::vector<std::size_t> all(k);
  for (std::size_t i = 0; i < k; ++i) all[i] = i;
  return SimplicialSetTrunc::from_complex(default_names(std::move(names), k), {all}, max_level);
}

SimplicialSetTrunc sset_boundary(int n, int max_level, std::vector<std::string> names) {
  const auto k = static_cast<std::size_t>(n) + 1;
  std::vector<std::vector<std::size_t>> faces;
  for (std::size_t miss = 0; miss < k; ++miss) {
    std::vector<std::size_t> f;
    for (std::size_t i = 0; i < k; ++i)
      if (i != miss) f.push_back(i);
    faces.push_back(std::move(f));
  }
  return SimplicialSetTrunc::from_complex(default_names(std::move(names), k), faces, max_level);
}

SimplicialSetTrunc sset_horn(int n, int j, int max_level, std::vector<std::string> names) {
  if (j < 0 || j > n) throw RangeError("horn index out of range");
  const auto k = static_cast<std::size_t>(n) + 1;
  std::vector<std::vector<std::size_t>> faces;
  for (std::size_t miss = 0; miss < k; ++miss) {
    if (miss == static_cast<std::size_t>(j)) continue;
    std::vector<std::size_t> f;
    for (std::size_t i = 0; i < k; ++i)
      if (i != miss) f.push_back(i);
    faces.push_back(std::move(f));
  }
  return SimplicialSetTrunc::from_complex(default_names(std::move(names), k), faces, max_level);
}

SimplicialSetTrunc sset_poset_nerve(const std::vector<std::vector<bool>>& less, int max_level,
                                    std::vector<std::string> names) {
  const std::size_t n = less.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (less[i].size() != n || less[i][i]) throw ConfigurationError("poset relation must be square and irreflexive");
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (less[i][j] && less[j][k] && !less[i][k]) throw ConfigurationError("poset relation must be transitive");
  }
  std::vector<std::vector<std::size_t>> chains;
  std::vector<std::vector<std::size_t>> todo;
  for (std::size_t i = 0; i < n; ++i) todo.push_back({i});
  while (!todo.empty()) {
    auto c = std::move(todo.back());
    todo.pop_back();
    for (std::size_t j = 0; j < n; ++j)
      if (less[c.back()][j]) {
        auto d = c;
        d.push_back(j);
        todo.push_back(std::move(d));
      }
    chains.push_back(std::move(c));
  }
  return SimplicialSetTrunc::from_complex(default_names(std::move(names), n), chains, max_level);
}

SimplicialSetTrunc sset_glue(const SimplicialSetTrunc& A, const SimplicialSetTrunc& B) {
  std::vector<std::string> names = A.vertex_names();
  std::vector<std::size_t> bmap;
  for (const auto& name : B.vertex_names()) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
      names.push_back(name);
      bmap.push_back(names.size() - 1);
    } else {
      bmap.push_back(static_cast<std::size_t>(it - names.begin()));
    }
  }
  const int N = std::min(A.max_level(), B.max_level());
  std::vector<std::vector<std::size_t>> simplices;
  for (int n = 0; n <= N; ++n) {
    for (std::size_t x = 0; x < A.count(n); ++x)
      if (!A.is_degenerate(n, x)) simplices.push_back(A.simplex(n, x));
    for (std::size_t x = 0; x < B.count(n); ++x)
      if (!B.is_degenerate(n, x)) {
        std::vector<std::size_t> s;
        for (std::size_t v : B.simplex(n, x)) s.push_back(bmap[v]);
        simplices.push_back(std::move(s));
      }
  }
  return SimplicialSetTrunc::from_complex(std::move(names), simplices, N);
}

TemplicialModule nerve(const LinearCategory& C, int max_level) {
  auto report = C.validate();
  if (!report.passed()) throw ValidationError("linear category is invalid: " + report.to_string());
  const Ring& R = C.ring;
  const auto& S = C.objects;
  TemplicialModule X(R, S, max_level);
  for (int n = 1; n <= max_level; ++n) X.set_level(n, quiver::tensor_S(R, S, copies(C.homs, n)));
  const Segment m{{C.homs, C.homs}, {C.homs}, C.composition};
  const Segment id = id_segment(C.homs);
  const Segment u{{}, {C.homs}, C.unit};
  for (int n = 2; n <= max_level; ++n)
    for (int j = 1; j < n; ++j) {
      std::vector<Segment> segs;
      for (int t = 1; t <= n; ++t) {
        if (t == j) {
          segs.push_back(m);
          ++t;
        } else {
          segs.push_back(id);
        }
      }
      X.set_face(n, j, quiver::tensor_segments(R, S, segs));
    }
  for (int n = 0; n < max_level; ++n)
    for (int i = 0; i <= n; ++i) {
      std::vector<Segment> segs(static_cast<std::size_t>(n) + 1, id);
      segs[static_cast<std::size_t>(i)] = u;
      X.set_degeneracy(n, i, quiver::tensor_segments(R, S, segs));
    }
  for (int k = 1; k < max_level; ++k)
    for (int l = 1; k + l <= max_level; ++l)
      X.set_comultiplication(k, l, quiver::regroup(R, S, copies(C.homs, k), copies(C.homs, l)));
  return X;
}

TemplicialModule free_templicial(const SimplicialSetTrunc& K, const Ring& ring, int max_level) {
  if (max_level > K.max_level()) throw ConfigurationError("free templicial module above the simplicial set's truncation");
  const auto& S = K.vertex_names();
  const std::size_t V = S.size();
  TemplicialModule X(ring, S, max_level);
  // pos[n][x]: index of simplex x within its hom.
  std::vector<std::vector<std::size_t>> pos(static_cast<std::size_t>(max_level) + 1);
  std::vector<std::vector<std::size_t>> size(static_cast<std::size_t>(max_level) + 1, std::vector<std::size_t>(V * V, 0));
  for (int n = 0; n <= max_level; ++n) {
    auto& cnt = size[static_cast<std::size_t>(n)];
    for (std::size_t x = 0; x < K.count(n); ++x)
      pos[static_cast<std::size_t>(n)].push_back(cnt[K.first_vertex(n, x) * V + K.last_vertex(n, x)]++);
  }
  for (int n = 1; n <= max_level; ++n) {
    Quiver q(ring, S);
    for (std::size_t a = 0; a < V; ++a)
      for (std::size_t b = 0; b < V; ++b) q.set_hom(a, b, Module::free(ring, size[static_cast<std::size_t>(n)][a * V + b]));
    X.set_level(n, std::move(q));
  }
  auto basis_map = [&](int from, int to, auto image) {
    QuiverMorphism f(X.level(from), X.level(to));
    std::vector<Matrix> mats;
    for (std::size_t h = 0; h < V * V; ++h)
      mats.emplace_back(size[static_cast<std::size_t>(to)][h], size[static_cast<std::size_t>(from)][h]);
    for (std::size_t x = 0; x < K.count(from); ++x) {
      const std::size_t h = K.first_vertex(from, x) * V + K.last_vertex(from, x);
      const std::size_t y = image(x);
      mats[h](pos[static_cast<std::size_t>(to)][y], pos[static_cast<std::size_t>(from)][x]) = ring.one();
    }
    for (std::size_t a = 0; a < V; ++a)
      for (std::size_t b = 0; b < V; ++b)
        f.set_component(a, b, Morphism(X.level(from).hom(a, b), X.level(to).hom(a, b), std::move(mats[a * V + b])));
    return f;
  };
  for (int n = 2; n <= max_level; ++n)
    for (int j = 1; j < n; ++j) X.set_face(n, j, basis_map(n, n - 1, [&](std::size_t x) { return K.face(n, j, x); }));
  for (int n = 0; n < max_level; ++n)
    for (int i = 0; i <= n; ++i)
      X.set_degeneracy(n, i, basis_map(n, n + 1, [&](std::size_t x) { return K.degeneracy(n, i, x); }));
  for (int k = 1; k < max_level; ++k)
    for (int l = 1; k + l <= max_level; ++l) {
      const int n = k + l;
      QuiverMorphism mu = X.comultiplication(k, l);
      const Quiver& cod = mu.codomain();
      std::vector<Matrix> mats;
      for (std::size_t h = 0; h < V * V; ++h) mats.emplace_back(cod.hom(h / V, h % V).gens(), size[static_cast<std::size_t>(n)][h]);
      for (std::size_t x = 0; x < K.count(n); ++x) {
        const auto& seq = K.simplex(n, x);
        const std::size_t a = seq.front(), b = seq[static_cast<std::size_t>(k)], c = seq.back();
        std::vector<std::size_t> front(seq.begin(), seq.begin() + k + 1), back(seq.begin() + k, seq.end());
        const std::size_t i = pos[static_cast<std::size_t>(k)][K.find(front)];
        const std::size_t j = pos[static_cast<std::size_t>(l)][K.find(back)];
        std::size_t offset = 0;
        for (std::size_t b2 = 0; b2 < b; ++b2)
          offset += size[static_cast<std::size_t>(k)][a * V + b2] * size[static_cast<std::size_t>(l)][b2 * V + c];
        mats[a * V + c](offset + i * size[static_cast<std::size_t>(l)][b * V + c] + j, pos[static_cast<std::size_t>(n)][x]) =
            ring.one();
      }
      for (std::size_t a = 0; a < V; ++a)
        for (std::size_t c = 0; c < V; ++c)
          mu.set_component(a, c, Morphism(X.level(n).hom(a, c), cod.hom(a, c), std::move(mats[a * V + c])));
      X.set_comultiplication(k, l, std::move(mu));
    }
  return X;
}

TemplicialModule builtin_s0_times_2(int max_level) {
  const Ring Z = Ring::integers();
  TemplicialModule X(Z, {"*"}, max_level);
  Quiver q(Z, {"*"});
  q.set_hom(0, 0, Module::free(Z, 1));
  for (int n = 1; n <= max_level; ++n) X.set_level(n, q);
  auto scalar = [&](const Quiver& dom, const Quiver& cod, std::int64_t c) {
    QuiverMorphism f(dom, cod);
    f.set_component(0, 0, Morphism(dom.hom(0, 0), cod.hom(0, 0), Matrix::from_rows({{c}})));
    return f;
  };
  for (int n = 2; n <= max_level; ++n)
    for (int j = 1; j < n; ++j) X.set_face(n, j, scalar(q, q, 1));
  for (int n = 0; n < max_level; ++n)
    for (int i = 0; i <= n; ++i) X.set_degeneracy(n, i, scalar(X.level(n), q, n == 0 ? 2 : 1));
  for (int k = 1; k < max_level; ++k)
    for (int l = 1; k + l <= max_level; ++l) X.set_comultiplication(k, l, scalar(q, quiver::tensor_S(q, q), 2));
  return X;
}

SimplicialSetTrunc paper_P_shape(int max_level) {
  // a = 0, b1 = 1, b2 = 2, c = 3; h is the edge (a, c).
  return SimplicialSetTrunc::from_complex({"a", "b1", "b2", "c"}, {{0, 1, 3}, {0, 2}, {2, 3}}, max_level);
}

TemplicialModule builtin_paper_P(const Ring& field, int max_level) {
  return free_templicial(paper_P_shape(max_level), field, max_level);
}

TemplicialModule builtin_paper_P_deformed(int p, int max_level) {
  const Ring R = Ring::dual_chain(p, 2);
  const auto K = paper_P_shape(max_level);
  TemplicialModule X = free_templicial(K, R, max_level);
  const std::size_t a = 0, b1 = 1, b2 = 2, c = 3;
  const Scalar eps = R.uniformizer_power(1);
  auto hom_pos = [&](int n, const std::vector<std::size_t>& seq) {
    std::size_t idx = 0;
    const std::size_t x = K.find(seq);
    for (std::size_t y = 0; y < x; ++y)
      if (K.first_vertex(n, y) == seq.front() && K.last_vertex(n, y) == seq.back()) ++idx;
    return idx;
  };
  for (int k = 1; k < max_level; ++k)
    for (int l = 1; k + l <= max_level; ++l) {
      const int n = k + l;
      const Morphism& mu = X.comultiplication(k, l).component(a, c);
      Matrix m = mu.matrix();
      const Quiver& Xk = X.level(k);
      const Quiver& Xl = X.level(l);
      for (std::size_t x = 0; x < K.count(n); ++x) {
        auto seq = K.simplex(n, x);
        if (seq.front() != a || seq.back() != c || seq[static_cast<std::size_t>(k)] != b1) continue;
        std::replace(seq.begin(), seq.end(), b1, b2);
        std::vector<std::size_t> front(seq.begin(), seq.begin() + k + 1), back(seq.begin() + k, seq.end());
        std::size_t offset = 0;
        for (std::size_t v = 0; v < b2; ++v) offset += Xk.hom(a, v).gens() * Xl.hom(v, c).gens();
        const std::size_t row = offset + hom_pos(k, front) * Xl.hom(b2, c).gens() + hom_pos(l, back);
        const std::size_t col = hom_pos(n, K.simplex(n, x));
        m(row, col) = R.add(m(row, col), eps);
      }
      X.set_comultiplication(k, l, a, c, Morphism(mu.domain(), mu.codomain(), std::move(m)));
    }
  return X;
}

std::vector<std::string> builtin_names() { return {"s0_times_2", "paper_P", "paper_P_deformed"}; }

TemplicialModule builtin(const std::string& name, int max_level) {
  if (name == "s0_times_2") return builtin_s0_times_2(max_level);
  if (name == "paper_P") return builtin_paper_P(Ring::prime_field(2), max_level);
  if (name == "paper_P_deformed") return builtin_paper_P_deformed(2, max_level);
  throw ConfigurationError("unknown builtin '" + name + "'");
}

namespace {

std::pair<Matrix, Matrix> random_invertible(std::mt19937_64& rng, const Ring& R, std::size_t n) {
  Matrix L = Matrix::identity(n), U = Matrix::identity(n);
  auto entry = [&] {
    return R.is_local() ? R.reduce(Scalar(static_cast<std::int64_t>(rng() % 7)))
                        : R.reduce(Scalar(static_cast<std::int64_t>(rng() % 5) - 2));
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i > j) L(i, j) = entry();
      if (i < j) U(i, j) = entry();
    }
  Matrix P = coeff::mat_mul(R, L, U);
  auto inv = coeff::solve_linear(R, P, Matrix::identity(n));
  if (!inv) throw StructuralError("failed to invert a unitriangular product");
  return {P, coeff::mat_reduce(R, *inv)};
}

}  // namespace

TemplicialModule change_of_basis(const TemplicialModule& X, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Ring& R = X.ring();
  const auto& S = X.vertices();
  const int N = X.max_level();
  std::vector<QuiverMorphism> P, Pinv;
  P.push_back(QuiverMorphism::identity(X.level(0)));
  Pinv.push_back(P.back());
  for (int n = 1; n <= N; ++n) {
    const Quiver& q = X.level(n);
    QuiverMorphism f(q, q), g(q, q);
    for (std::size_t a = 0; a < S.size(); ++a)
      for (std::size_t b = 0; b < S.size(); ++b) {
        if (!q.hom(a, b).is_free()) throw ConfigurationError("change of basis needs free homs");
        auto [m, mi] = random_invertible(rng, R, q.hom(a, b).gens());
        f.set_component(a, b, Morphism(q.hom(a, b), q.hom(a, b), m));
        g.set_component(a, b, Morphism(q.hom(a, b), q.hom(a, b), mi));
      }
    P.push_back(std::move(f));
    Pinv.push_back(std::move(g));
  }
  auto idx = [](int n) { return static_cast<std::size_t>(n); };
  TemplicialModule Y = X;
  for (int n = 2; n <= N; ++n)
    for (int j = 1; j < n; ++j) Y.set_face(n, j, compose(P[idx(n - 1)], compose(X.face(n, j), Pinv[idx(n)])));
  for (int n = 0; n < N; ++n)
    for (int i = 0; i <= n; ++i) Y.set_degeneracy(n, i, compose(P[idx(n + 1)], compose(X.degeneracy(n, i), Pinv[idx(n)])));
  for (int k = 1; k < N; ++k)
    for (int l = 1; k + l <= N; ++l)
      Y.set_comultiplication(
          k, l, compose(quiver::tensor_S(P[idx(k)], P[idx(l)]), compose(X.comultiplication(k, l), Pinv[idx(k + l)])));
  return Y;
}

TemplicialModule generate_algebra_nerve(std::uint64_t seed, std::int64_t p, int rank, int max_level) {
  std::mt19937_64 rng(seed);
  const Ring F = Ring::prime_field(p);
  std::vector<Scalar> g;
  for (int i = 0; i < rank; ++i) g.push_back(Scalar(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p))));
  g.push_back(F.one());
  return nerve(LinearCategory::algebra(F, g), max_level);
}

TemplicialModule generate_poset_free(std::uint64_t seed, const Ring& ring, std::size_t elements, int max_level) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<bool>> less(elements, std::vector<bool>(elements, false));
  for (std::size_t i = 0; i < elements; ++i)
    for (std::size_t j = i + 1; j < elements; ++j) less[i][j] = rng() % 2 == 0;
  for (std::size_t k = 0; k < elements; ++k)
    for (std::size_t i = 0; i < elements; ++i)
      for (std::size_t j = 0; j < elements; ++j)
        if (less[i][k] && less[k][j]) less[i][j] = true;
  return free_templicial(sset_poset_nerve(less, max_level), ring, max_level);
}

TemplicialModule generate_perturbation(std::uint64_t seed, const TemplicialModule& X) { return change_of_basis(X, seed); }

}  // namespace templikit::constructors
