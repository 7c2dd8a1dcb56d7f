#include "templikit/quiver/quiver.hpp"

#include <sstream>

#include "templikit/errors.hpp"

namespace templikit::quiver {

Quiver::Quiver(Ring ring, std::vector<std::string> vertices)
    : ring_(std::move(ring)), vertices_(std::move(vertices)), homs_(vertices_.size() * vertices_.size(), Module::zero(ring_)) {}

Quiver Quiver::unit(const Ring& ring, const std::vector<std::string>& vertices) {
  Quiver q(ring, vertices);
  for (std::size_t a = 0; a < q.size(); ++a) q.set_hom(a, a, Module::free(ring, 1));
  return q;
}

std::size_t Quiver::vertex(const std::string& name) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == name) return i;
  throw ConfigurationError("unknown vertex '" + name + "'");
}

void Quiver::set_hom(std::size_t a, std::size_t b, Module m) {
  if (m.ring() != ring_) throw MismatchError("hom module over " + m.ring().name() + " in a quiver over " + ring_.name());
  homs_[a * size() + b] = std::move(m);
}

bool Quiver::is_zero() const {
  for (const auto& m : homs_)
    if (!m.is_zero()) return false;
  return true;
}

std::string Quiver::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b) {
      if (hom(a, b).gens() == 0) continue;
      os << (first ? "" : ", ") << "(" << vertices_[a] << "," << vertices_[b] << "): " << hom(a, b).to_string();
      first = false;
    }
  return first ? "0" : os.str();
}

QuiverMorphism::QuiverMorphism(Quiver domain, Quiver codomain) : dom_(std::move(domain)), cod_(std::move(codomain)) {
  if (dom_.ring() != cod_.ring() || dom_.vertices() != cod_.vertices())
    throw MismatchError("quiver morphism between quivers over different rings or vertex sets");
  const std::size_t n = dom_.size();
  comps_.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) comps_.push_back(Morphism::zero(dom_.hom(a, b), cod_.hom(a, b)));
}

QuiverMorphism QuiverMorphism::identity(const Quiver& q) {
  QuiverMorphism f(q, q);
  for (std::size_t a = 0; a < q.size(); ++a)
    for (std::size_t b = 0; b < q.size(); ++b) f.comps_[a * q.size() + b] = Morphism::identity(q.hom(a, b));
  return f;
}

void QuiverMorphism::set_component(std::size_t a, std::size_t b, Morphism f) {
  if (f.domain() != dom_.hom(a, b) || f.codomain() != cod_.hom(a, b))
    throw MismatchError("component (" + dom_.vertices()[a] + "," + dom_.vertices()[b] + ") does not fit the homs");
  comps_[a * dom_.size() + b] = std::move(f);
}

bool QuiverMorphism::is_identity() const {
  for (const auto& f : comps_)
    if (!f.is_identity()) return false;
  return true;
}

bool QuiverMorphism::is_zero() const {
  for (const auto& f : comps_)
    if (!f.is_zero()) return false;
  return true;
}

QuiverMorphism compose(const QuiverMorphism& g, const QuiverMorphism& f) {
  if (f.codomain() != g.domain()) throw MismatchError("cannot compose quiver morphisms: codomain differs from domain");
  QuiverMorphism h(f.domain(), g.codomain());
  const std::size_t n = f.domain().size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) h.set_component(a, b, coeff::compose(g.component(a, b), f.component(a, b)));
  return h;
}

namespace {

void same_base(const Quiver& P, const Quiver& Q) {
  if (P.ring() != Q.ring()) throw MismatchError("quivers over different rings");
  if (P.vertices() != Q.vertices()) throw MismatchError("quivers over different vertex sets");
}

}  // namespace

Quiver tensor_S(const Quiver& P, const Quiver& Q) {
  same_base(P, Q);
  Quiver out(P.ring(), P.vertices());
  const std::size_t n = P.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<Module> parts;
      for (std::size_t b = 0; b < n; ++b) parts.push_back(coeff::tensor(P.hom(a, b), Q.hom(b, c)));
      out.set_hom(a, c, coeff::direct_sum(parts));
    }
  return out;
}

QuiverMorphism tensor_S(const QuiverMorphism& f, const QuiverMorphism& g) {
  QuiverMorphism h(tensor_S(f.domain(), g.domain()), tensor_S(f.codomain(), g.codomain()));
  const std::size_t n = f.domain().size();
  const Ring& R = f.domain().ring();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      coeff::Matrix m(h.codomain().hom(a, c).gens(), h.domain().hom(a, c).gens());
      std::size_t r = 0, k = 0;
      for (std::size_t b = 0; b < n; ++b) {
        coeff::Matrix t = coeff::kron(R, f.component(a, b).matrix(), g.component(b, c).matrix());
        m.set_block(r, k, t);
        r += t.rows();
        k += t.cols();
      }
      h.set_component(a, c, Morphism(h.domain().hom(a, c), h.codomain().hom(a, c), std::move(m), Morphism::Unchecked{}));
    }
  return h;
}

std::size_t FlatIndex::find(const std::vector<std::size_t>& path, const std::vector<std::size_t>& gen) const {
  std::vector<std::size_t> key = path;
  key.insert(key.end(), gen.begin(), gen.end());
  auto it = lookup_.find(key);
  return it == lookup_.end() ? npos : it->second;
}

namespace {

void flat_paths(const std::vector<Quiver>& qs, std::size_t n, std::size_t b, std::vector<std::size_t>& path,
                std::vector<std::vector<std::size_t>>& out) {
  const std::size_t i = path.size() - 1;
  if (i == qs.size()) {
    if (path.back() == b) out.push_back(path);
    return;
  }
  const bool last = i + 1 == qs.size();
  for (std::size_t v = 0; v < n; ++v) {
    if (last && v != b) continue;
    if (qs[i].hom(path.back(), v).gens() == 0) continue;
    path.push_back(v);
    flat_paths(qs, n, b, path, out);
    path.pop_back();
  }
}

}  // namespace

FlatIndex flat_index(const Ring& ring, std::size_t vertex_count, const std::vector<Quiver>& qs, std::size_t a,
                     std::size_t b) {
  FlatIndex F;
  std::vector<coeff::Scalar> ann;
  std::vector<std::vector<std::size_t>> paths;
  std::vector<std::size_t> start{a};
  flat_paths(qs, vertex_count, b, start, paths);
  for (const auto& path : paths) {
    const std::size_t r = qs.size();
    std::vector<std::size_t> g(r, 0);
    while (true) {
      coeff::Scalar x = ring.zero();
      for (std::size_t i = 0; i < r; ++i) x = ring.gcd(x, qs[i].hom(path[i], path[i + 1]).ann(g[i]));
      std::vector<std::size_t> key = path;
      key.insert(key.end(), g.begin(), g.end());
      F.lookup_.emplace(std::move(key), F.paths.size());
      F.paths.push_back(path);
      F.gens.push_back(g);
      ann.push_back(std::move(x));
      std::size_t k = r;
      while (k > 0) {
        --k;
        if (++g[k] < qs[k].hom(path[k], path[k + 1]).gens()) break;
        g[k] = 0;
        if (k == 0) {
          k = r + 1;
          break;
        }
      }
      if (r == 0 || k == r + 1) break;
    }
  }
  F.module = Module(ring, std::move(ann));
  return F;
}

Quiver tensor_S(const Ring& ring, const std::vector<std::string>& vertices, const std::vector<Quiver>& qs) {
  Quiver out(ring, vertices);
  for (const auto& q : qs)
    if (q.ring() != ring || q.vertices() != vertices) throw MismatchError("quivers over different rings or vertex sets");
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = 0; b < vertices.size(); ++b) out.set_hom(a, b, flat_index(ring, vertices.size(), qs, a, b).module);
  return out;
}

QuiverMorphism tensor_segments(const Ring& ring, const std::vector<std::string>& vertices, const std::vector<Segment>& segs) {
  const std::size_t n = vertices.size();
  std::vector<Quiver> src, tgt;
  std::vector<std::size_t> src_off{0};
  for (const auto& s : segs) {
    src.insert(src.end(), s.source.begin(), s.source.end());
    tgt.insert(tgt.end(), s.target.begin(), s.target.end());
    src_off.push_back(src.size());
  }
  QuiverMorphism out(tensor_S(ring, vertices, src), tensor_S(ring, vertices, tgt));
  // Segment layouts, indexed [segment][a * n + b].
  std::vector<std::vector<FlatIndex>> seg_src(segs.size()), seg_tgt(segs.size());
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        seg_src[i].push_back(flat_index(ring, n, segs[i].source, a, b));
        seg_tgt[i].push_back(flat_index(ring, n, segs[i].target, a, b));
      }
  struct Partial {
    std::vector<std::size_t> path;
    std::vector<std::size_t> gen;
    coeff::Scalar coeff;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      FlatIndex dom = flat_index(ring, n, src, a, b);
      FlatIndex cod = flat_index(ring, n, tgt, a, b);
      coeff::Matrix m(cod.module.gens(), dom.module.gens());
      for (std::size_t col = 0; col < dom.paths.size(); ++col) {
        const auto& path = dom.paths[col];
        const auto& gen = dom.gens[col];
        std::vector<Partial> acc{{{a}, {}, ring.one()}};
        for (std::size_t i = 0; i < segs.size() && !acc.empty(); ++i) {
          const std::size_t lo = src_off[i], hi = src_off[i + 1];
          const std::size_t u = path[lo], v = path[hi];
          std::vector<std::size_t> sp(path.begin() + static_cast<std::ptrdiff_t>(lo), path.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
          std::vector<std::size_t> sg(gen.begin() + static_cast<std::ptrdiff_t>(lo), gen.begin() + static_cast<std::ptrdiff_t>(hi));
          const FlatIndex& si = seg_src[i][u * n + v];
          const FlatIndex& ti = seg_tgt[i][u * n + v];
          const std::size_t c = si.find(sp, sg);
          const coeff::Matrix& f = segs[i].map.component(u, v).matrix();
          std::vector<Partial> next;
          for (std::size_t r = 0; r < f.rows(); ++r) {
            if (f(r, c).is_zero()) continue;
            for (const auto& p : acc) {
              Partial q = p;
              q.path.insert(q.path.end(), ti.paths[r].begin() + 1, ti.paths[r].end());
              q.gen.insert(q.gen.end(), ti.gens[r].begin(), ti.gens[r].end());
              q.coeff = ring.mul(p.coeff, f(r, c));
              next.push_back(std::move(q));
            }
          }
          acc = std::move(next);
        }
        for (const auto& p : acc) {
          const std::size_t row = cod.find(p.path, p.gen);
          m(row, col) = ring.add(m(row, col), p.coeff);
        }
      }
      out.set_component(a, b, Morphism(dom.module, cod.module, std::move(m), Morphism::Unchecked{}));
    }
  return out;
}

QuiverMorphism regroup(const Ring& ring, const std::vector<std::string>& vertices, const std::vector<Quiver>& left,
                       const std::vector<Quiver>& right) {
  const std::size_t n = vertices.size();
  std::vector<Quiver> all = left;
  all.insert(all.end(), right.begin(), right.end());
  const Quiver L = tensor_S(ring, vertices, left), R = tensor_S(ring, vertices, right);
  QuiverMorphism out(tensor_S(ring, vertices, all), tensor_S(L, R));
  const std::size_t k = left.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      FlatIndex dom = flat_index(ring, n, all, a, c);
      std::vector<FlatIndex> li, ri;
      std::vector<std::size_t> offset;
      std::size_t off = 0;
      for (std::size_t b = 0; b < n; ++b) {
        li.push_back(flat_index(ring, n, left, a, b));
        ri.push_back(flat_index(ring, n, right, b, c));
        offset.push_back(off);
        off += li.back().module.gens() * ri.back().module.gens();
      }
      coeff::Matrix m(off, dom.module.gens());
      for (std::size_t col = 0; col < dom.paths.size(); ++col) {
        const auto& p = dom.paths[col];
        const auto& g = dom.gens[col];
        const std::size_t b = p[k];
        const auto kk = static_cast<std::ptrdiff_t>(k);
        std::size_t i = li[b].find({p.begin(), p.begin() + kk + 1}, {g.begin(), g.begin() + kk});
        std::size_t j = ri[b].find({p.begin() + kk, p.end()}, {g.begin() + kk, g.end()});
        m(offset[b] + i * ri[b].module.gens() + j, col) = ring.one();
      }
      out.set_component(a, c, Morphism(dom.module, out.codomain().hom(a, c), std::move(m), Morphism::Unchecked{}));
    }
  return out;
}

QuiverMorphism tensor_S(const std::vector<QuiverMorphism>& fs) {
  if (fs.empty()) throw StructuralError("empty list of quiver morphisms");
  std::vector<Segment> segs;
  for (const auto& f : fs) segs.push_back({{f.domain()}, {f.codomain()}, f});
  return tensor_segments(fs.front().domain().ring(), fs.front().domain().vertices(), segs);
}

Quiver direct_sum(const Quiver& P, const Quiver& Q) {
  same_base(P, Q);
  Quiver out(P.ring(), P.vertices());
  for (std::size_t a = 0; a < P.size(); ++a)
    for (std::size_t b = 0; b < P.size(); ++b) out.set_hom(a, b, coeff::direct_sum(P.hom(a, b), Q.hom(a, b)));
  return out;
}

coeff::ModuleDiagram QuiverDiagram::hom(std::size_t a, std::size_t b) const {
  coeff::ModuleDiagram D(ring);
  for (const auto& q : objects) D.add_object(q.hom(a, b));
  for (const auto& e : arrows) D.add_arrow(e.source, e.target, e.map.component(a, b));
  return D;
}

QuiverLimit quiver_limit(const QuiverDiagram& D) {
  const std::size_t n = D.vertices.size();
  QuiverLimit L;
  L.object = Quiver(D.ring, D.vertices);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      L.homs.push_back(coeff::finite_limit(D.hom(a, b)));
      L.object.set_hom(a, b, L.homs.back().object);
    }
  for (std::size_t i = 0; i < D.objects.size(); ++i) {
    QuiverMorphism c(L.object, D.objects[i]);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) c.set_component(a, b, L.homs[a * n + b].cone[i]);
    L.cone.push_back(std::move(c));
  }
  return L;
}

QuiverColimit quiver_colimit(const QuiverDiagram& D) {
  const std::size_t n = D.vertices.size();
  QuiverColimit C;
  C.object = Quiver(D.ring, D.vertices);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      C.homs.push_back(coeff::finite_colimit(D.hom(a, b)));
      C.object.set_hom(a, b, C.homs.back().object);
    }
  for (std::size_t i = 0; i < D.objects.size(); ++i) {
    QuiverMorphism c(D.objects[i], C.object);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) c.set_component(a, b, C.homs[a * n + b].cocone[i]);
    C.cocone.push_back(std::move(c));
  }
  return C;
}

}  // namespace templikit::quiver
