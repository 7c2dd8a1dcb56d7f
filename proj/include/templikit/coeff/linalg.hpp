#pragma once

#include <optional>

#include "templikit/coeff/module.hpp"
#include "templikit/coeff/smith.hpp"

namespace templikit::coeff {

/// A module with an injective map into an ambient module.
struct Submodule {
  Module module;
  Morphism inclusion;
};

/// A module with a surjection from an ambient module, plus a lift of each
/// quotient generator back to ambient coordinates (projection * lift = id on
/// generators).
struct Quotient {
  Module module;
  Morphism projection;
  Matrix lift;
};

struct Analysis {
  Submodule kernel;
  Submodule image;
  Quotient cokernel;
  bool injective = false;
  bool surjective = false;
  bool split_mono = false;
  std::optional<Morphism> retraction;
};

/// Generators (as columns) of {x in R^c : A x = 0} for A over R.
Matrix kernel_basis(const Ring& R, const Matrix& A);
/// Some X with A X = B over R, if one exists.
std::optional<Matrix> solve_linear(const Ring& R, const Matrix& A, const Matrix& B);

/// Submodule of M generated by the columns of gens (M coordinates).
Submodule submodule(const Module& M, const Matrix& gens);
/// M modulo the submodule generated by the columns of gens.
Quotient quotient(const Module& M, const Matrix& gens);

Submodule kernel(const Morphism& f);
Submodule image(const Morphism& f);
Quotient cokernel(const Morphism& f);
bool is_surjective(const Morphism& f);
bool is_injective(const Morphism& f);
/// A morphism x with a o x = b, if one exists.
std::optional<Morphism> factor_through(const Morphism& a, const Morphism& b);
/// A morphism r with r o f = id, if one exists.
std::optional<Morphism> retraction(const Morphism& f);
bool is_isomorphism(const Morphism& f);
Analysis analyze(const Morphism& f);

}  // namespace templikit::coeff
