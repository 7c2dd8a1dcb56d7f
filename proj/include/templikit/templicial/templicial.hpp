#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "templikit/necklace/necklace.hpp"
#include "templikit/quiver/quiver.hpp"

namespace templikit::templicial {

using coeff::Module;
using coeff::Morphism;
using coeff::Ring;
using necklace::FintMap;
using necklace::Necklace;
using necklace::NecklaceMap;
using quiver::Quiver;
using quiver::QuiverMorphism;

/// A templicial module truncated at level N: quivers X_1..X_N over a vertex
/// set S (X_0 = I_S), inner faces d_j: X_n -> X_{n-1} (0 < j < n),
/// degeneracies s_i: X_n -> X_{n+1} (0 <= i <= n < N) and comultiplications
/// mu_{k,l}: X_{k+l} -> X_k (x)_S X_l (k, l >= 1).
class TemplicialModule {
 public:
  TemplicialModule() = default;
  /// Levels start out zero and all structure maps zero.
  TemplicialModule(Ring ring, std::vector<std::string> vertices, int max_level);

  const Ring& ring() const { return ring_; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  int max_level() const { return max_level_; }

  const Quiver& level(int n) const;
  const QuiverMorphism& face(int n, int j) const;
  const QuiverMorphism& degeneracy(int n, int i) const;
  const QuiverMorphism& comultiplication(int k, int l) const;

  /// Replaces level n >= 1 and resets every structure map touching it to zero.
  void set_level(int n, Quiver q);
  /// Throws StructuralError unless the map has the expected shape.
  void set_face(int n, int j, QuiverMorphism f);
  void set_degeneracy(int n, int i, QuiverMorphism f);
  void set_comultiplication(int k, int l, QuiverMorphism f);
  /// Single hom component.
  void set_face(int n, int j, std::size_t a, std::size_t b, Morphism f);
  void set_degeneracy(int n, int i, std::size_t a, std::size_t b, Morphism f);
  void set_comultiplication(int k, int l, std::size_t a, std::size_t b, Morphism f);

  /// X_k (x)_S X_l.
  Quiver tensor_levels(const std::vector<int>& dims) const;

  friend bool operator==(const TemplicialModule&, const TemplicialModule&) = default;

 private:
  void reset_maps(int n);

  Ring ring_ = Ring::integers();
  std::vector<std::string> vertices_;
  int max_level_ = 0;
  std::vector<Quiver> levels_;
  std::map<std::pair<int, int>, QuiverMorphism> faces_;
  std::map<std::pair<int, int>, QuiverMorphism> degeneracies_;
  std::map<std::pair<int, int>, QuiverMorphism> comults_;
};

/// Caching evaluation of X on necklaces and necklace maps. Holds a reference
/// to X, which must outlive it.
class Evaluator {
 public:
  explicit Evaluator(const TemplicialModule& X);

  const TemplicialModule& module() const { return X_; }
  /// X_T = X_{t_1} (x)_S X_{t_2 - t_1} (x)_S ... (flat order).
  const Quiver& necklace(const Necklace& T);
  /// X_f: X_U -> X_T for f: (T, p) -> (U, q).
  const QuiverMorphism& map(const NecklaceMap& f);
  /// X(f): X_q -> X_p for f: [p] -> [q], through the canonical word.
  const QuiverMorphism& fint(const FintMap& f);
  /// Iterated comultiplication X_{d_1 + ... + d_r} -> X_{d_1} (x) ... (x) X_{d_r}.
  const QuiverMorphism& comultiplication(const std::vector<int>& dims);

 private:
  const TemplicialModule& X_;
  std::map<std::vector<int>, Quiver> tensors_;
  std::map<NecklaceMap, QuiverMorphism> maps_;
  std::map<FintMap, QuiverMorphism> fints_;
  std::map<std::vector<int>, QuiverMorphism> comults_;
};

Quiver eval_necklace(const TemplicialModule& X, const Necklace& T);
QuiverMorphism eval_map(const TemplicialModule& X, const NecklaceMap& f);

/// A contravariant assignment T -> Y_T on necklaces of dimension <= N, with
/// Y_f: Y_U -> Y_T for every necklace map f: T -> U among them.
class NecklicialModule {
 public:
  NecklicialModule() = default;
  NecklicialModule(Ring ring, int max_level);

  const Ring& ring() const { return ring_; }
  int max_level() const { return max_level_; }

  /// Zero module when unset.
  const Module& value(const Necklace& T) const;
  /// Throws StructuralError when unset.
  const Morphism& action(const NecklaceMap& f) const;
  bool has_action(const NecklaceMap& f) const { return actions_.count(f) > 0; }
  void set_value(const Necklace& T, Module m);
  void set_action(const NecklaceMap& f, Morphism m);

  const std::map<Necklace, Module>& values() const { return values_; }
  const std::map<NecklaceMap, Morphism>& actions() const { return actions_; }

  friend bool operator==(const NecklicialModule&, const NecklicialModule&) = default;

 private:
  Ring ring_ = Ring::integers();
  int max_level_ = 0;
  std::map<Necklace, Module> values_;
  std::map<NecklaceMap, Morphism> actions_;
  Module zero_;
};

/// The zero necklicial module with all actions set.
NecklicialModule zero_necklicial(const Ring& ring, int max_level);

struct Violation {
  std::string identity;
  std::string indices;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool passed() const { return violations.empty(); }
  std::string to_string() const;
};

/// Simplicial identities among inner faces and degeneracies, coassociativity
/// and colax naturality, by exact matrix comparison.
ValidationReport validate_templicial(const TemplicialModule& X);
/// Y_id = id and Y_{g o f} = Y_f o Y_g on all composable pairs.
ValidationReport validate_necklicial(const NecklicialModule& Y);

/// Y_T = X_T(a, b) with the (a, b) components of eval_map.
NecklicialModule hom_necklicial(const TemplicialModule& X, std::size_t a, std::size_t b);
NecklicialModule hom_necklicial(Evaluator& ev, std::size_t a, std::size_t b);
/// All hom necklicial modules, indexed a * |S| + b.
std::vector<NecklicialModule> hom_necklicials(const TemplicialModule& X);

/// (Y (x) M)_T = Y_T (x) M.
NecklicialModule tensor_external(const NecklicialModule& Y, const Module& M);
/// Y_T (+) Z_T.
NecklicialModule direct_sum(const NecklicialModule& Y, const NecklicialModule& Z);

}  // namespace templikit::templicial
