#pragma once

#include <string>
#include <vector>

#include "templikit/coeff/matrix.hpp"
#include "templikit/coeff/ring.hpp"

namespace templikit::coeff {

/// A finitely generated module presented as a direct sum of cyclic modules
/// R/(a_0) + ... + R/(a_{n-1}), one per generator. Each a_i is a canonical
/// ideal generator (see Ring); a_i = 0 gives a free summand and a unit a_i a
/// zero generator. The generator order is part of the value: matrices of
/// morphisms refer to it.
class Module {
 public:
  Module() : ring_(Ring::integers()) {}
  Module(Ring ring, std::vector<Scalar> annihilators);

  static Module free(const Ring& ring, std::size_t rank);
  static Module zero(const Ring& ring) { return Module(ring, {}); }
  static Module cyclic(const Ring& ring, const Scalar& ann) { return Module(ring, {ann}); }

  const Ring& ring() const { return ring_; }
  std::size_t gens() const { return ann_.size(); }
  const Scalar& ann(std::size_t i) const { return ann_[i]; }
  const std::vector<Scalar>& annihilators() const { return ann_; }

  /// Invariant factors: non-unit torsion annihilators ascending by divisibility,
  /// then one 0 per free summand.
  std::vector<Scalar> factors() const;
  /// The same module with generators in invariant-factor form.
  Module normal_form() const;
  std::size_t rank() const;
  bool is_zero() const;
  /// Flat = projective = free for finitely generated modules over the
  /// supported rings.
  bool is_flat() const;
  bool is_projective() const { return is_flat(); }
  bool is_free() const { return is_flat(); }
  bool isomorphic(const Module& other) const;

  /// Canonical representative of generator coordinate i.
  Scalar reduce_coord(std::size_t i, const Scalar& x) const { return ring_.reduce_mod(x, ann_[i]); }
  /// Column-wise reduction of a matrix whose rows are indexed by generators.
  Matrix reduce_rows(const Matrix& m) const;

  /// "0", "Z^2 + Z/2", "F3^4", ...
  std::string to_string() const;
  /// Factor list as text: "free" or the ideal generator, in normal form.
  std::vector<std::string> factor_strings() const;

  friend bool operator==(const Module& a, const Module& b) { return a.ring_ == b.ring_ && a.ann_ == b.ann_; }
  friend bool operator!=(const Module& a, const Module& b) { return !(a == b); }

 private:
  Ring ring_;
  std::vector<Scalar> ann_;
};

Module direct_sum(const Module& a, const Module& b);
Module direct_sum(const std::vector<Module>& ms);
/// Generator (i, j) -> i * b.gens() + j with annihilator gcd(a_i, b_j).
Module tensor(const Module& a, const Module& b);

/// A module homomorphism given by its matrix on generators, indexed
/// (codomain generator, domain generator). Entries are stored reduced modulo
/// the codomain row annihilator.
class Morphism {
 public:
  Morphism() = default;
  /// Validates congruence (entry * domain annihilator in codomain ideal) and
  /// reduces entries. Throws StructuralError when ill-defined.
  Morphism(Module domain, Module codomain, Matrix matrix);

  struct Unchecked {};
  /// Reduces but skips the congruence check; for internally derived maps.
  Morphism(Module domain, Module codomain, Matrix matrix, Unchecked);

  static Morphism zero(const Module& dom, const Module& cod);
  static Morphism identity(const Module& m);

  const Module& domain() const { return dom_; }
  const Module& codomain() const { return cod_; }
  const Matrix& matrix() const { return mat_; }
  const Ring& ring() const { return dom_.ring(); }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return mat_(i, j); }

  bool is_zero() const { return mat_.is_zero(); }
  bool is_identity() const { return dom_ == cod_ && mat_ == dom_.reduce_rows(Matrix::identity(dom_.gens())); }
  /// Returns an empty string when valid, otherwise the first violation.
  static std::string congruence_violation(const Module& dom, const Module& cod, const Matrix& m);

  /// Image of a coordinate vector of the domain.
  std::vector<Scalar> apply(const std::vector<Scalar>& x) const;

  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.mat_ == b.mat_;
  }
  friend bool operator!=(const Morphism& a, const Morphism& b) { return !(a == b); }

 private:
  Module dom_, cod_;
  Matrix mat_;
};

/// g o f.
Morphism compose(const Morphism& g, const Morphism& f);
Morphism add(const Morphism& f, const Morphism& g);
Morphism sub(const Morphism& f, const Morphism& g);
Morphism scale(const Scalar& s, const Morphism& f);
Morphism tensor(const Morphism& f, const Morphism& g);
Morphism direct_sum(const Morphism& f, const Morphism& g);
/// [f_0 f_1 ...]: (+) dom_i -> cod.
Morphism hcat(const std::vector<Morphism>& fs);
/// (f_0; f_1; ...): dom -> (+) cod_i.
Morphism vcat(const std::vector<Morphism>& fs);
/// Inclusion of summand k and projection onto summand k of direct_sum(ms).
Morphism summand_inclusion(const std::vector<Module>& ms, std::size_t k);
Morphism summand_projection(const std::vector<Module>& ms, std::size_t k);

}  // namespace templikit::coeff
