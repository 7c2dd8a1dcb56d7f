#pragma once

#include <map>
#include <string>
#include <vector>

#include "templikit/coeff/limits.hpp"

namespace templikit::quiver {

using coeff::Module;
using coeff::Morphism;
using coeff::Ring;

/// Modules Q(a, b) indexed by pairs of vertices of a finite ordered set.
class Quiver {
 public:
  Quiver() = default;
  /// All homs zero.
  Quiver(Ring ring, std::vector<std::string> vertices);

  /// I_S: R on the diagonal, 0 elsewhere.
  static Quiver unit(const Ring& ring, const std::vector<std::string>& vertices);

  const Ring& ring() const { return ring_; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  /// Index of a vertex name; throws ConfigurationError when unknown.
  std::size_t vertex(const std::string& name) const;

  const Module& hom(std::size_t a, std::size_t b) const { return homs_[a * size() + b]; }
  void set_hom(std::size_t a, std::size_t b, Module m);

  bool is_zero() const;
  std::string to_string() const;

  friend bool operator==(const Quiver& x, const Quiver& y) {
    return x.ring_ == y.ring_ && x.vertices_ == y.vertices_ && x.homs_ == y.homs_;
  }
  friend bool operator!=(const Quiver& x, const Quiver& y) { return !(x == y); }

 private:
  Ring ring_ = Ring::integers();
  std::vector<std::string> vertices_;
  std::vector<Module> homs_;
};

class QuiverMorphism {
 public:
  QuiverMorphism() = default;
  /// Zero morphism.
  QuiverMorphism(Quiver domain, Quiver codomain);

  static QuiverMorphism identity(const Quiver& q);

  const Quiver& domain() const { return dom_; }
  const Quiver& codomain() const { return cod_; }
  const Morphism& component(std::size_t a, std::size_t b) const { return comps_[a * dom_.size() + b]; }
  /// Throws MismatchError when f does not fit the (a, b) homs.
  void set_component(std::size_t a, std::size_t b, Morphism f);

  bool is_identity() const;
  bool is_zero() const;

  friend bool operator==(const QuiverMorphism& f, const QuiverMorphism& g) {
    return f.dom_ == g.dom_ && f.cod_ == g.cod_ && f.comps_ == g.comps_;
  }
  friend bool operator!=(const QuiverMorphism& f, const QuiverMorphism& g) { return !(f == g); }

 private:
  Quiver dom_, cod_;
  std::vector<Morphism> comps_;
};

/// g o f.
QuiverMorphism compose(const QuiverMorphism& g, const QuiverMorphism& f);

/// (P (x)_S Q)(a, c) = (+)_b P(a, b) (x) Q(b, c); generators ordered by
/// (b, P generator, Q generator).
Quiver tensor_S(const Quiver& P, const Quiver& Q);
QuiverMorphism tensor_S(const QuiverMorphism& f, const QuiverMorphism& g);
/// Generators of the flat tensor (Q_1 (x) ... (x) Q_r)(a, b): the sum over
/// vertex paths a = v_0, ..., v_r = b of Q_1(v_0, v_1) (x) ... (x) Q_r(v_{r-1}, v_r),
/// ordered by (v_1, ..., v_{r-1}, g_1, ..., g_r). The empty list gives I_S.
/// For r = 2 this is the order of the binary tensor_S.
struct FlatIndex {
  Module module;
  /// Full vertex sequences v_0..v_r and generator tuples, one per generator.
  std::vector<std::vector<std::size_t>> paths;
  std::vector<std::vector<std::size_t>> gens;

  /// Position of a generator; npos when absent.
  std::size_t find(const std::vector<std::size_t>& path, const std::vector<std::size_t>& gen) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  friend FlatIndex flat_index(const Ring&, std::size_t, const std::vector<Quiver>&, std::size_t, std::size_t);
  std::map<std::vector<std::size_t>, std::size_t> lookup_;
};

FlatIndex flat_index(const Ring& ring, std::size_t vertex_count, const std::vector<Quiver>& qs, std::size_t a,
                     std::size_t b);

/// The flat tensor of a list of quivers over the same ring and vertices.
Quiver tensor_S(const Ring& ring, const std::vector<std::string>& vertices, const std::vector<Quiver>& qs);

/// A morphism between flat tensors, map: (x) source -> (x) target.
struct Segment {
  std::vector<Quiver> source;
  std::vector<Quiver> target;
  QuiverMorphism map;
};

/// The tensor product of segment maps: (x) concat(source_i) -> (x) concat(target_i).
QuiverMorphism tensor_segments(const Ring& ring, const std::vector<std::string>& vertices, const std::vector<Segment>& segs);
/// The canonical isomorphism (x)(L ++ R) -> ((x) L) (x)_S ((x) R).
QuiverMorphism regroup(const Ring& ring, const std::vector<std::string>& vertices, const std::vector<Quiver>& left,
                       const std::vector<Quiver>& right);
/// Flat tensor of single-factor morphisms.
QuiverMorphism tensor_S(const std::vector<QuiverMorphism>& fs);

/// Hom-wise direct sum.
Quiver direct_sum(const Quiver& P, const Quiver& Q);

struct QuiverDiagram {
  struct Arrow {
    std::size_t source;
    std::size_t target;
    QuiverMorphism map;
  };
  QuiverDiagram(Ring r, std::vector<std::string> v) : ring(std::move(r)), vertices(std::move(v)) {}

  Ring ring;
  std::vector<std::string> vertices;
  std::vector<Quiver> objects;
  std::vector<Arrow> arrows;

  /// The (a, b) component as a module diagram.
  coeff::ModuleDiagram hom(std::size_t a, std::size_t b) const;
};

struct QuiverLimit {
  Quiver object;
  std::vector<QuiverMorphism> cone;
  /// Per hom, indexed a * |S| + b.
  std::vector<coeff::Limit> homs;
};

struct QuiverColimit {
  Quiver object;
  std::vector<QuiverMorphism> cocone;
  std::vector<coeff::Colimit> homs;
};

/// Hom-wise limits; the empty diagram gives the zero quiver.
QuiverLimit quiver_limit(const QuiverDiagram& D);
QuiverColimit quiver_colimit(const QuiverDiagram& D);

}  // namespace templikit::quiver
