#pragma once

#include <map>
#include <optional>
#include <vector>

#include "templikit/coeff/extension.hpp"
#include "templikit/kan/kan.hpp"

namespace templikit::deform {

using coeff::Matrix;
using coeff::Module;
using coeff::Morphism;
using coeff::RingExtension;
using kan::CheckReport;
using kan::Verdict;
using necklace::Necklace;
using necklace::NecklaceMap;
using quiver::Quiver;
using quiver::QuiverMorphism;
using templicial::NecklicialModule;
using templicial::TemplicialModule;

Quiver base_change(const RingExtension& theta, const Quiver& Q);
QuiverMorphism base_change(const RingExtension& theta, const QuiverMorphism& f);
/// (k (x)_R X)_n(a, b) = k (x)_R X_n(a, b), structure matrices reduced.
TemplicialModule base_change_templicial(const RingExtension& theta, const TemplicialModule& X);
NecklicialModule base_change(const RingExtension& theta, const NecklicialModule& Y);
/// A k-linear necklicial module viewed over R.
NecklicialModule restrict_scalars(const RingExtension& theta, const NecklicialModule& Y);

/// A templicial R-module with its special fiber over k. When iso is given,
/// iso[n]: (k (x)_R deformed)_n -> special_fiber_n for 1 <= n <= N (iso[0]
/// unused); otherwise the fiber must match matrix for matrix.
struct DeformationPair {
  RingExtension theta;
  TemplicialModule deformed;
  TemplicialModule special_fiber;
  std::optional<std::vector<QuiverMorphism>> iso;
};

/// Levelwise R-flatness of the deformation and the fiber condition.
CheckReport validate_deformation(const DeformationPair& pair, int N);

/// Y (x)_k I for the kernel I of a small extension, I viewed as a k-module.
NecklicialModule ideal_tensor(const RingExtension& theta, const NecklicialModule& Y);

/// 0 -> sub -> total -> quotient -> 0 of necklicial modules over one ring,
/// with natural inclusion and projection.
struct NecklicialExtension {
  NecklicialModule sub;
  NecklicialModule total;
  NecklicialModule quotient;
  std::map<Necklace, Morphism> inclusion;
  std::map<Necklace, Morphism> projection;
};

/// 0 -> I Y -> Y -> Y / I Y -> 0 over R for a levelwise flat Y and a small
/// extension theta.
NecklicialExtension extension_sequence(const RingExtension& theta, const NecklicialModule& Ybar);
/// Exactness at every necklace and naturality of inclusion and projection.
CheckReport check_extension_exact(const NecklicialExtension& ext);
/// I Y against I (x)_k (k (x)_R Y) restricted to R: equal invariant factors
/// and an isomorphism t (x) y -> t y.
CheckReport check_ideal_comparison(const RingExtension& theta, const NecklicialModule& Ybar,
                                   const NecklicialExtension& ext);

/// total_T = sub_T (+) quotient_T with Y_f = [[sub_f, c_f], [0, quotient_f]],
/// c_f: quotient_U -> sub_T for f: T -> U (zero when absent). Throws
/// ValidationError naming the failing composite when total is not functorial.
NecklicialExtension build_extension(const NecklicialModule& sub, const NecklicialModule& quotient,
                                    const std::map<NecklaceMap, Matrix>& cocycle);
/// Weak Kan condition on all three terms.
CheckReport check_extension_weak_kan(const NecklicialExtension& ext, int N);
/// For Y over F_p[e]/(e^2) with free values: the F_p-linear extension
/// e Y -> Y -> Y / e Y written as sub = quotient = Y mod e and
/// cocycle c_f = the e-part of Y_f.
std::map<NecklaceMap, Matrix> dual_number_cocycle(const NecklicialModule& Ybar);
NecklicialModule dual_number_fiber(const NecklicialModule& Ybar);

/// Hypotheses: the pair is a deformation and the special fiber is a
/// quasi-category. Conclusion: the deformation is a quasi-category.
/// Diagnostics run the extension argument through each small step.
CheckReport verify_thm_main(const DeformationPair& pair, int N, bool diagnostic = true);
/// Hypotheses: X is a levelwise flat quasi-category. Conclusion: every
/// X_.(a, b) (x) M is weak Kan. Diagnostics compare truncated wing objects
/// with their tensors and check the wedge pullback squares.
CheckReport verify_wings_tensor(const TemplicialModule& X, const Module& M, int N, bool diagnostic = true);
/// Hypotheses: the pair is a deformation with deg-projective special fiber.
/// Conclusion: the deformation is deg-projective. Diagnostics check the
/// rows I (x) E, E and k (x) E and the three columns for exactness.
CheckReport verify_degproj_lift(const DeformationPair& pair, int N, bool diagnostic = true);

}  // namespace templikit::deform
