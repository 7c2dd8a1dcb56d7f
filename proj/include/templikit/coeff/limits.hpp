#pragma once

#include <vector>

#include "templikit/coeff/linalg.hpp"

namespace templikit::coeff {

/// A finite diagram of modules. Arrow maps go from objects[source] to
/// objects[target].
struct ModuleDiagram {
  struct Arrow {
    std::size_t source;
    std::size_t target;
    Morphism map;
  };

  explicit ModuleDiagram(Ring r) : ring(std::move(r)) {}

  Ring ring;
  std::vector<Module> objects;
  std::vector<Arrow> arrows;

  std::size_t add_object(Module m);
  void add_arrow(std::size_t source, std::size_t target, Morphism map);
  /// Throws StructuralError when an arrow does not fit its endpoints.
  void check() const;
};

class Limit {
 public:
  Module object;
  /// cone[i]: object -> objects[i].
  std::vector<Morphism> cone;

  /// The unique u: T -> object with cone[i] o u = test[i]. Throws
  /// StructuralError when test is not a cone.
  Morphism factor(const Module& T, const std::vector<Morphism>& test) const;
  /// The embedding of the limit into the product of the chosen root objects.
  const Morphism& embedding() const { return embedding_; }
  const std::vector<std::size_t>& roots() const { return roots_; }

 private:
  friend Limit finite_limit(const ModuleDiagram& D);
  std::vector<std::size_t> roots_;
  Morphism embedding_;
};

class Colimit {
 public:
  Module object;
  /// cocone[i]: objects[i] -> object.
  std::vector<Morphism> cocone;

  /// The unique u: object -> T with u o cocone[i] = test[i].
  Morphism factor(const Module& T, const std::vector<Morphism>& test) const;

 private:
  friend Colimit finite_colimit(const ModuleDiagram& D);
  Matrix lift_;
};

/// The limit, as the kernel of the difference map. Objects reachable along
/// arrows from already determined ones are eliminated first: their components
/// are expressed through a set of root objects, and only the remaining arrows
/// contribute equations.
Limit finite_limit(const ModuleDiagram& D);
/// The colimit, as the cokernel of the difference map.
Colimit finite_colimit(const ModuleDiagram& D);

}  // namespace templikit::coeff
