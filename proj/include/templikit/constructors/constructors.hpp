#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "templikit/templicial/templicial.hpp"

namespace templikit::constructors {

using coeff::Module;
using coeff::Morphism;
using coeff::Ring;
using coeff::Scalar;
using quiver::Quiver;
using quiver::QuiverMorphism;
using templicial::TemplicialModule;
using templicial::ValidationReport;

/// A linear category over S: hom modules C(a, b), composition
/// C(a, b) (x) C(b, c) -> C(a, c) as a quiver morphism C (x)_S C -> C, and
/// units I_S -> C.
struct LinearCategory {
  Ring ring = Ring::integers();
  std::vector<std::string> objects;
  Quiver homs;
  QuiverMorphism composition;
  QuiverMorphism unit;

  /// One object with C(*, *) = R[x]/(g) on the basis 1, x, ..., x^{r-1};
  /// g is monic, given by coefficients g_0, ..., g_r = 1.
  static LinearCategory algebra(const Ring& ring, const std::vector<Scalar>& g);
  /// One object with C(*, *) = R.
  static LinearCategory unit_category(const Ring& ring);
  /// Two objects a -> b with C(a, b) = R and identities.
  static LinearCategory arrow(const Ring& ring);

  /// Associativity and unitality.
  ValidationReport validate() const;
};

/// A simplicial set truncated at level N. Simplex x at level n is recorded by
/// its vertex sequence; faces and degeneracies are stored as index tables.
class SimplicialSetTrunc {
 public:
  /// The simplicial set generated by nondegenerate simplices given as
  /// sequences of distinct vertex indices, closed under taking subsequences.
  /// Simplices at level n are the sequences whose consecutive repeats collapse
  /// to a listed simplex, in lexicographic order.
  static SimplicialSetTrunc from_complex(std::vector<std::string> vertex_names,
                                         const std::vector<std::vector<std::size_t>>& simplices, int max_level);

  int max_level() const { return max_level_; }
  const std::vector<std::string>& vertex_names() const { return names_; }
  std::size_t count(int n) const { return simplices_[static_cast<std::size_t>(n)].size(); }
  const std::vector<std::size_t>& simplex(int n, std::size_t x) const {
    return simplices_[static_cast<std::size_t>(n)][x];
  }
  /// d_i: level n -> level n - 1, 0 <= i <= n.
  std::size_t face(int n, int i, std::size_t x) const;
  /// s_i: level n -> level n + 1, 0 <= i <= n < N.
  std::size_t degeneracy(int n, int i, std::size_t x) const;
  std::size_t first_vertex(int n, std::size_t x) const { return simplex(n, x).front(); }
  std::size_t last_vertex(int n, std::size_t x) const { return simplex(n, x).back(); }
  bool is_degenerate(int n, std::size_t x) const;
  /// Position of a vertex sequence at its level; npos when absent.
  std::size_t find(const std::vector<std::size_t>& seq) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  /// Full simplicial identities, outer faces included.
  ValidationReport validate() const;

 private:
  int max_level_ = 0;
  std::vector<std::string> names_;
  std::vector<std::vector<std::vector<std::size_t>>> simplices_;
  std::vector<std::vector<std::vector<std::size_t>>> faces_;
  std::vector<std::vector<std::vector<std::size_t>>> degens_;
};

/// Standard simplicial sets; vertex names are "0", "1", ... unless given.
SimplicialSetTrunc sset_simplex(int n, int max_level, std::vector<std::string> names = {});
SimplicialSetTrunc sset_boundary(int n, int max_level, std::vector<std::string> names = {});
SimplicialSetTrunc sset_horn(int n, int j, int max_level, std::vector<std::string> names = {});
/// The nerve of a finite poset given by its strict relation less[i][j] (i < j
/// in the poset), which must be transitive and irreflexive.
SimplicialSetTrunc sset_poset_nerve(const std::vector<std::vector<bool>>& less, int max_level,
                                    std::vector<std::string> names = {});
/// Union of two simplicial sets, identifying vertices with equal names; the
/// common part is the simplices spanned in both.
SimplicialSetTrunc sset_glue(const SimplicialSetTrunc& A, const SimplicialSetTrunc& B);

/// The templicial nerve: X_n = C (x)_S ... (x)_S C (n factors), faces compose,
/// degeneracies insert units, comultiplications regroup.
TemplicialModule nerve(const LinearCategory& C, int max_level);
/// X_n(a, b) free on the n-simplices from a to b; mu_{k,l}(x) is the front
/// k-face tensor the back l-face.
TemplicialModule free_templicial(const SimplicialSetTrunc& K, const Ring& ring, int max_level);

/// One vertex, X_n = Z, s_0: X_0 -> X_1 multiplication by 2, every mu_{k,l}
/// multiplication by 2, all other maps identities.
TemplicialModule builtin_s0_times_2(int max_level = 4);
/// The free templicial module on a 2-simplex a -> b1 -> c glued along its long
/// edge h to the boundary of a second one a -> b2 -> c.
SimplicialSetTrunc paper_P_shape(int max_level);
TemplicialModule builtin_paper_P(const Ring& field, int max_level = 4);
/// The first order deformation over F_p[e]/(e^2) with
/// mu_{1,1}(alpha) = f1 (x) g1 + e f2 (x) g2, extended to the degeneracies of
/// alpha by naturality.
TemplicialModule builtin_paper_P_deformed(int p = 2, int max_level = 4);
/// Names accepted by builtin(): s0_times_2, paper_P, paper_P_deformed.
TemplicialModule builtin(const std::string& name, int max_level = 4);
std::vector<std::string> builtin_names();

/// Levelwise change of basis by invertible matrices on each X_n(a, b),
/// n >= 1; every hom must be free.
TemplicialModule change_of_basis(const TemplicialModule& X, std::uint64_t seed);

/// Deterministic generators for test corpora.
/// Nerve of F_p[x]/(g) for a random monic g of degree rank.
TemplicialModule generate_algebra_nerve(std::uint64_t seed, std::int64_t p, int rank, int max_level);
/// Free templicial module over ring on the nerve of a random poset.
TemplicialModule generate_poset_free(std::uint64_t seed, const Ring& ring, std::size_t elements, int max_level);
/// A random change of basis of X.
TemplicialModule generate_perturbation(std::uint64_t seed, const TemplicialModule& X);

}  // namespace templikit::constructors
