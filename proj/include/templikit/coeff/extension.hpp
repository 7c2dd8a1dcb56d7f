#pragma once

#include <string>
#include <vector>

#include "templikit/coeff/module.hpp"

namespace templikit::coeff {

/// The canonical surjection theta: R -> k with nilpotent kernel I, for
///   Z/p^m' -> Z/p^m, F_p[e]/(e^m') -> F_p[e]/(e^m) with m' > m (m = 1 being
///   the prime field).
class RingExtension {
 public:
  RingExtension(Ring source, Ring target);
  /// "Z/8->Z/2", "F3[e]/(e^2) -> F3".
  static RingExtension parse(const std::string& text);

  const Ring& source() const { return source_; }
  const Ring& target() const { return target_; }
  /// Least n with I^n = 0.
  int kernel_exponent() const;
  bool small() const { return kernel_exponent() <= 2; }
  /// Generator of I in R.
  Scalar kernel_generator() const { return source_.uniformizer_power(target_.m()); }
  /// I as a k-module (requires small()).
  Module kernel_as_target_module() const;

  Scalar map(const Scalar& x) const { return target_.reduce(x); }
  /// Factorization into small extensions, from the source down to the target.
  std::vector<RingExtension> small_steps() const;
  std::string to_string() const { return source_.name() + "->" + target_.name(); }

 private:
  Ring source_, target_;
};

/// k (x)_R M.
Module base_change(const RingExtension& theta, const Module& M);
Morphism base_change(const RingExtension& theta, const Morphism& f);
/// A k-module viewed as an R-module through theta.
Module restrict_scalars(const RingExtension& theta, const Module& M);
Morphism restrict_scalars(const RingExtension& theta, const Morphism& f);

}  // namespace templikit::coeff
