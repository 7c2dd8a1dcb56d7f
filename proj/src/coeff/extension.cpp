#include "templikit/coeff/extension.hpp"

#include <algorithm>

#include "templikit/errors.hpp"

namespace templikit::coeff {

namespace {

Ring same_family(const Ring& like, int m) {
  if (m == 1) return Ring::prime_field(like.p());
  if (like.kind() == RingKind::DualChain) return Ring::dual_chain(like.p(), m);
  return Ring::chain(like.p(), m);
}

}  // namespace

RingExtension::RingExtension(Ring source, Ring target) : source_(std::move(source)), target_(std::move(target)) {
  const bool src_ok = source_.kind() == RingKind::Chain || source_.kind() == RingKind::DualChain;
  const bool same_kind = target_.kind() == source_.kind() || target_.kind() == RingKind::PrimeField;
  if (!src_ok || !same_kind || source_.p() != target_.p() || target_.m() >= source_.m())
    throw ConfigurationError("no supported surjection " + source_.name() + " -> " + target_.name());
}

RingExtension RingExtension::parse(const std::string& text) {
  auto pos = text.find("->");
  if (pos == std::string::npos) throw ConfigurationError("ring extension must look like 'R->k', got " + text);
  return RingExtension(Ring::parse(text.substr(0, pos)), Ring::parse(text.substr(pos + 2)));
}

int RingExtension::kernel_exponent() const { return (source_.m() + target_.m() - 1) / target_.m(); }

Module RingExtension::kernel_as_target_module() const {
  if (!small()) throw ConfigurationError("kernel of " + to_string() + " is not a module over the target (I^2 != 0)");
  // I = pi^m R ~ R/(pi^(m'-m)), killed by pi^m.
  return Module::cyclic(target_, target_.uniformizer_power(source_.m() - target_.m()));
}

std::vector<RingExtension> RingExtension::small_steps() const {
  std::vector<int> ms{target_.m()};
  while (ms.back() < source_.m()) ms.push_back(std::min(2 * ms.back(), source_.m()));
  std::vector<RingExtension> steps;
  for (std::size_t i = ms.size() - 1; i > 0; --i) {
    Ring hi = i + 1 == ms.size() ? source_ : same_family(source_, ms[i]);
    Ring lo = i == 1 ? target_ : same_family(source_, ms[i - 1]);
    steps.emplace_back(hi, lo);
  }
  return steps;
}

Module base_change(const RingExtension& theta, const Module& M) {
  if (M.ring() != theta.source()) throw MismatchError("base change expects a module over " + theta.source().name());
  std::vector<Scalar> ann;
  for (const auto& a : M.annihilators()) ann.push_back(theta.map(a));
  return Module(theta.target(), std::move(ann));
}

Morphism base_change(const RingExtension& theta, const Morphism& f) {
  return Morphism(base_change(theta, f.domain()), base_change(theta, f.codomain()), mat_reduce(theta.target(), f.matrix()),
                  Morphism::Unchecked{});
}

Module restrict_scalars(const RingExtension& theta, const Module& M) {
  if (M.ring() != theta.target()) throw MismatchError("restriction expects a module over " + theta.target().name());
  const Ring& k = theta.target();
  std::vector<Scalar> ann;
  for (const auto& a : M.annihilators()) ann.push_back(theta.source().uniformizer_power(k.valuation(a)));
  return Module(theta.source(), std::move(ann));
}

Morphism restrict_scalars(const RingExtension& theta, const Morphism& f) {
  return Morphism(restrict_scalars(theta, f.domain()), restrict_scalars(theta, f.codomain()), f.matrix());
}

}  // namespace templikit::coeff
