#pragma once

#include <compare>
#include <string>
#include <vector>

namespace templikit::necklace {

/// An endpoint-preserving monotone map [p] -> [q].
struct FintMap {
  int p = 0;
  int q = 0;
  std::vector<int> values;

  FintMap() : values{0} {}
  FintMap(int source_dim, int target_dim, std::vector<int> vals);

  static FintMap identity(int n);
  /// The inner coface [n-1] -> [n] missing i, 0 < i < n.
  static FintMap coface(int n, int i);
  /// The codegeneracy [n+1] -> [n] hitting j twice.
  static FintMap codegeneracy(int n, int j);

  int operator()(int i) const { return values[static_cast<std::size_t>(i)]; }
  bool is_identity() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool valid() const;
  std::string to_string() const;

  friend bool operator==(const FintMap&, const FintMap&) = default;
  friend auto operator<=>(const FintMap& a, const FintMap& b) {
    if (auto c = a.p <=> b.p; c != 0) return c;
    if (auto c = a.q <=> b.q; c != 0) return c;
    return a.values <=> b.values;
  }
};

/// g o f.
FintMap compose(const FintMap& g, const FintMap& f);
/// Ordinal sum f + g: [p+p'] -> [q+q'].
FintMap concat(const FintMap& f, const FintMap& g);

/// A pair (T, p) with {0, p} contained in T contained in [p].
struct Necklace {
  int p = 0;
  std::vector<int> T{0};

  Necklace() = default;
  Necklace(int dim, std::vector<int> joints);

  static Necklace simplex(int n);
  /// Wedge of simplices of the given dimensions.
  static Necklace from_beads(const std::vector<int>& dims);

  std::size_t bead_count() const { return T.size() - 1; }
  std::vector<int> beads() const;
  bool contains(int t) const;
  bool valid() const;
  /// "({0,1,3},3)".
  std::string to_string() const;

  friend bool operator==(const Necklace&, const Necklace&) = default;
  friend auto operator<=>(const Necklace& a, const Necklace& b) {
    if (auto c = a.p <=> b.p; c != 0) return c;
    return a.T <=> b.T;
  }
};

/// (T u (p + U), p + q).
Necklace wedge(const Necklace& a, const Necklace& b);

/// f: (T, p) -> (U, q) with U contained in f(T).
struct NecklaceMap {
  Necklace source;
  Necklace target;
  FintMap map;

  NecklaceMap() = default;
  NecklaceMap(Necklace s, Necklace t, FintMap f);

  static NecklaceMap identity(const Necklace& n);

  bool valid() const;
  bool is_inert() const { return map.is_identity(); }
  bool is_active() const;
  bool is_injective() const { return map.is_injective(); }
  std::string to_string() const;

  friend bool operator==(const NecklaceMap&, const NecklaceMap&) = default;
  friend auto operator<=>(const NecklaceMap& a, const NecklaceMap& b) {
    if (auto c = a.source <=> b.source; c != 0) return c;
    if (auto c = a.target <=> b.target; c != 0) return c;
    return a.map <=> b.map;
  }
};

/// g o f.
NecklaceMap compose(const NecklaceMap& g, const NecklaceMap& f);

struct Classification {
  bool inert = false;
  bool active = false;
  /// f = inert_part o active_part.
  NecklaceMap active_part;
  NecklaceMap inert_part;
};

Classification classify_and_factor(const NecklaceMap& f);

// Enumeration, in lexicographic order.
std::vector<FintMap> fint_maps(int p, int q);
std::vector<Necklace> necklaces(int p);
std::vector<Necklace> necklaces_up_to(int max_dim);
std::vector<NecklaceMap> necklace_maps(const Necklace& source, const Necklace& target);
/// Injective necklace maps (T, p) -> ({0, n}, n).
std::vector<NecklaceMap> injective_into_simplex(int n);
/// Inert maps (T, n) -> ({0, n}, n), including the identity.
std::vector<NecklaceMap> inert_into_simplex(int n);
/// Surjections [n] -> [m] in fint, for all m <= n, including the identity.
std::vector<FintMap> surjections(int n);

/// Objects are maps into a common necklace; arrow a satisfies
/// objects[a.to] o a.map = objects[a.from]. Identity arrows are omitted.
struct NecklaceDiagram {
  struct Arrow {
    std::size_t from;
    std::size_t to;
    NecklaceMap map;
  };
  std::vector<NecklaceMap> objects;
  std::vector<Arrow> arrows;
};

/// Objects are surjections out of a common [n]; arrow a satisfies
/// objects[a.to] = a.map o objects[a.from]. Identity arrows are omitted.
struct DegeneracyDiagram {
  struct Arrow {
    std::size_t from;
    std::size_t to;
    FintMap map;
  };
  int n = 0;
  std::vector<FintMap> objects;
  std::vector<Arrow> arrows;
};

/// Injective maps into the n-simplex other than the j-th face and the identity.
NecklaceDiagram horn_diagram(int n, int j);
/// Non-identity inert maps into the n-simplex.
NecklaceDiagram wings_diagram(int n);
/// Non-identity inert maps (T, n) with T disjoint from {i+1, ..., n-1}.
NecklaceDiagram truncated_wings_diagram(int n, int i);
/// Non-identity surjections out of [n] with their factorizations.
DegeneracyDiagram degeneracy_diagram(int n);

/// A generator of fint: an inner coface delta_i: [n-1] -> [n] or a
/// codegeneracy sigma_i: [n+1] -> [n]; dim is n.
struct Generator {
  enum class Kind { Face, Degeneracy };
  Kind kind;
  int index;
  int dim;

  FintMap as_map() const;
  std::string to_string() const;
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Generators in order of application: codegeneracies (descending index),
/// then cofaces (ascending index).
std::vector<Generator> fint_factorize(const FintMap& f);
FintMap evaluate(const std::vector<Generator>& word, int source_dim);

}  // namespace templikit::necklace
