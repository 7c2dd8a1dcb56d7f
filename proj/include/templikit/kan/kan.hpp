#pragma once

#include <optional>
#include <string>
#include <vector>

#include "templikit/coeff/limits.hpp"
#include "templikit/templicial/templicial.hpp"

namespace templikit::kan {

using coeff::Module;
using coeff::Morphism;
using necklace::Necklace;
using necklace::NecklaceDiagram;
using necklace::NecklaceMap;
using quiver::Quiver;
using quiver::QuiverMorphism;
using templicial::NecklicialModule;
using templicial::TemplicialModule;

enum class Verdict { Pass, Fail, NotApplicable, HypothesisFailure };

std::string verdict_name(Verdict v);

/// One checked index, such as "(a,b,n,j)=(0,3,2,1)".
struct IndexResult {
  std::string index;
  bool passed = true;
  std::string detail;
  /// For failures: the cokernel of the canonical map, in normal form.
  std::optional<Module> witness;
};

struct CheckReport {
  std::string property;
  Verdict verdict = Verdict::Pass;
  std::vector<IndexResult> results;
  std::vector<std::string> notes;

  explicit CheckReport(std::string name = {}) : property(std::move(name)) {}

  bool passed() const { return verdict == Verdict::Pass; }
  /// Records a result; a failing result turns a passing verdict into Fail.
  void add(IndexResult r);
  /// Appends every result of other, prefixing its indices, and adopts a
  /// failing verdict.
  void absorb(const CheckReport& other, const std::string& prefix = {});
  std::vector<IndexResult> failures() const;
  std::string to_string() const;
};

/// A finite limit of Y over a diagram of maps into a common necklace A,
/// together with the canonical map Y_A -> lim.
struct LimitObject {
  Module object;
  Morphism canonical;
  coeff::Limit limit;
  NecklaceDiagram diagram;
};

/// lim Y_T over the objects f: T -> A of D, with Y_g for every arrow g.
LimitObject limit_over(const NecklicialModule& Y, const NecklaceDiagram& D, const Necklace& apex);

LimitObject horn_object(const NecklicialModule& Y, int n, int j);
LimitObject wing_object(const NecklicialModule& Y, int n);
LimitObject truncated_wing_object(const NecklicialModule& Y, int n, int i);

/// Non-identity inert maps into the wedge of Delta^i and Delta^{n-i} whose
/// source misses {i+1, ..., n-1}.
NecklaceDiagram wedge_corner_diagram(int n, int i);

/// The square W^{<=i} -> Y_{Delta^i v Delta^{n-i}} over
/// W^{<=i-1} -> lim(wedge corner), 0 < i < n.
struct WingSquare {
  LimitObject upper;
  LimitObject lower;
  LimitObject corner;
  Module wedge;
  Morphism upper_to_lower;
  Morphism upper_to_wedge;
  Morphism lower_to_corner;
  Morphism wedge_to_corner;
};

WingSquare wing_square(const NecklicialModule& Y, int n, int i);

/// Whether the commuting square tl -> bl -> br, tl -> tr -> br is a pullback:
/// the induced map from tl into the computed pullback is an isomorphism.
/// Throws StructuralError when the square does not commute.
bool is_pullback(const Morphism& tl_to_bl, const Morphism& tl_to_tr, const Morphism& bl_to_br,
                 const Morphism& tr_to_br);

/// Surjectivity of Y_n -> Lambda^j_n Y for 0 < j < n <= N. Y is validated
/// first unless validate is false; ValidationError when it fails.
CheckReport check_weak_kan(const NecklicialModule& Y, int N, bool validate = true);
/// Surjectivity of Y_n -> W_n Y for 2 <= n <= N.
CheckReport check_lifts_wings(const NecklicialModule& Y, int N, bool validate = true);
/// W^{<=0} = 0, W^{<=n-1} = W_n and the pullback squares, for 2 <= n <= N.
CheckReport check_wing_tower(const NecklicialModule& Y, int N);

/// Weak Kan condition on every hom necklicial module; indices (a,b,n,j).
CheckReport check_quasicategory(const TemplicialModule& X, int N, bool validate = true);
/// Wing lifting on every hom necklicial module; indices (a,b,n).
CheckReport check_lifts_wings(const TemplicialModule& X, int N, bool validate = true);

/// X^deg_n as the colimit of X_m over the non-identity surjections
/// [n] -> [m], with can_n: X^deg_n -> X_n and X^nd_n = coker(can_n).
struct DegenerateData {
  int n = 0;
  Quiver deg;
  QuiverMorphism can;
  Quiver nd;
  /// X_n -> X^nd_n.
  QuiverMorphism projection;
  /// Per hom, indexed a * |S| + b.
  std::vector<coeff::Colimit> colimits;
  std::vector<coeff::Quotient> cokernels;
};

DegenerateData degenerate_subobject(const TemplicialModule& X, int n);
DegenerateData degenerate_subobject(templicial::Evaluator& ev, int n);

/// can_n injective and split with projective cokernel for 1 <= n <= N and
/// every hom; indices (a,b,n).
CheckReport check_deg_projective(const TemplicialModule& X, int N, bool validate = true);
/// X_n(a, b) against the sum of X^nd_m(a, b) over the surjections
/// [n] -> [m]; NotApplicable unless X is deg-projective.
CheckReport ez_check(const TemplicialModule& X, int N, bool validate = true);

enum class Levelwise { Flat, Projective };
/// Flatness (equivalently projectivity) of every X_n(a, b), 1 <= n <= N.
CheckReport check_levelwise(const TemplicialModule& X, Levelwise which, int N = -1);

}  // namespace templikit::kan
