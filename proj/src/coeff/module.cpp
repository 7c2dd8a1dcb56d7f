#include "templikit/coeff/module.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "templikit/coeff/smith.hpp"
#include "templikit/errors.hpp"

namespace templikit::coeff {

Module::Module(Ring ring, std::vector<Scalar> annihilators) : ring_(std::move(ring)), ann_(std::move(annihilators)) {
  for (auto& a : ann_) a = ring_.ideal(ring_.reduce(a));
}

Module Module::free(const Ring& ring, std::size_t rank) { return Module(ring, std::vector<Scalar>(rank, Scalar(0))); }

std::vector<Scalar> Module::factors() const {
  std::vector<Scalar> torsion;
  std::size_t nfree = 0;
  if (ring_.kind() == RingKind::Integers) {
    std::vector<Scalar> nonfree;
    for (const auto& a : ann_) {
      if (a.is_zero())
        ++nfree;
      else if (!ring_.is_unit(a))
        nonfree.push_back(a);
    }
    // Coprime splitting and merging: the Smith form of the diagonal.
    bool already = true;
    for (std::size_t i = 1; i < nonfree.size(); ++i)
      if (!ring_.divides(nonfree[i - 1], nonfree[i])) already = false;
    if (!already) {
      Matrix d(nonfree.size(), nonfree.size());
      for (std::size_t i = 0; i < nonfree.size(); ++i) d(i, i) = nonfree[i];
      SmithForm sf = smith_form(ring_, d, kNoTransform);
      nonfree.clear();
      for (const auto& x : sf.diagonal)
        if (!ring_.is_unit(x)) nonfree.push_back(x);
    }
    torsion = std::move(nonfree);
  } else {
    for (const auto& a : ann_) {
      if (a.is_zero())
        ++nfree;
      else if (!ring_.is_unit(a))
        torsion.push_back(a);
    }
    if (ring_.is_local())
      std::sort(torsion.begin(), torsion.end(), [&](const Scalar& x, const Scalar& y) {
        return ring_.valuation(x) < ring_.valuation(y);
      });
  }
  torsion.insert(torsion.end(), nfree, Scalar(0));
  return torsion;
}

Module Module::normal_form() const { return Module(ring_, factors()); }

std::size_t Module::rank() const {
  return static_cast<std::size_t>(std::count_if(ann_.begin(), ann_.end(), [](const Scalar& a) { return a.is_zero(); }));
}

bool Module::is_zero() const {
  return std::all_of(ann_.begin(), ann_.end(), [&](const Scalar& a) { return ring_.is_unit(a); });
}

bool Module::is_flat() const {
  return std::all_of(ann_.begin(), ann_.end(), [&](const Scalar& a) { return a.is_zero() || ring_.is_unit(a); });
}

bool Module::isomorphic(const Module& other) const { return ring_ == other.ring_ && factors() == other.factors(); }

Matrix Module::reduce_rows(const Matrix& m) const {
  if (m.rows() != ann_.size()) throw StructuralError("row count does not match generator count");
  Matrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Scalar& a = ann_[i];
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = ring_.reduce_mod(ring_.reduce(m(i, j)), a);
  }
  return out;
}

std::string Module::to_string() const {
  std::vector<Scalar> f = factors();
  if (f.empty()) return "0";
  std::vector<std::pair<std::string, int>> parts;
  std::size_t nfree = static_cast<std::size_t>(std::count_if(f.begin(), f.end(), [](const Scalar& a) { return a.is_zero(); }));
  if (nfree) parts.emplace_back(ring_.format_cyclic(Scalar(0)), static_cast<int>(nfree));
  for (const auto& a : f) {
    if (a.is_zero()) continue;
    std::string s = ring_.format_cyclic(a);
    if (!parts.empty() && parts.back().first == s)
      ++parts.back().second;
    else
      parts.emplace_back(s, 1);
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << " + ";
    bool compound = parts[i].first.find('/') != std::string::npos && parts[i].second > 1;
    if (compound) os << '(';
    os << parts[i].first;
    if (compound) os << ')';
    if (parts[i].second > 1) os << '^' << parts[i].second;
  }
  return os.str();
}

std::vector<std::string> Module::factor_strings() const {
  std::vector<std::string> out;
  for (const auto& a : factors()) {
    if (a.is_zero())
      out.push_back("free");
    else if (ring_.is_local())
      out.push_back(std::to_string(ring_.valuation(a)));
    else
      out.push_back(a.to_string());
  }
  return out;
}

Module direct_sum(const Module& a, const Module& b) {
  if (a.ring() != b.ring()) throw MismatchError("direct sum over different rings");
  std::vector<Scalar> ann = a.annihilators();
  ann.insert(ann.end(), b.annihilators().begin(), b.annihilators().end());
  return Module(a.ring(), std::move(ann));
}

Module direct_sum(const std::vector<Module>& ms) {
  if (ms.empty()) throw StructuralError("direct sum of an empty family needs a ring");
  std::vector<Scalar> ann;
  for (const auto& m : ms) {
    if (m.ring() != ms[0].ring()) throw MismatchError("direct sum over different rings");
    ann.insert(ann.end(), m.annihilators().begin(), m.annihilators().end());
  }
  return Module(ms[0].ring(), std::move(ann));
}

Module tensor(const Module& a, const Module& b) {
  if (a.ring() != b.ring()) throw MismatchError("tensor product over different rings: " + a.ring().name() + " vs " + b.ring().name());
  const Ring& R = a.ring();
  std::vector<Scalar> ann;
  ann.reserve(a.gens() * b.gens());
  for (const auto& x : a.annihilators())
    for (const auto& y : b.annihilators()) ann.push_back(R.gcd(x, y));
  return Module(R, std::move(ann));
}

std::string Morphism::congruence_violation(const Module& dom, const Module& cod, const Matrix& m) {
  if (m.rows() != cod.gens() || m.cols() != dom.gens())
    return "matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
           std::to_string(cod.gens()) + "x" + std::to_string(dom.gens());
  const Ring& R = dom.ring();
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const Scalar& a = dom.ann(j);
    if (a.is_zero()) continue;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (m(i, j).is_zero()) continue;
      if (!R.reduce_mod(R.mul(R.reduce(m(i, j)), a), cod.ann(i)).is_zero())
        return "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + R.format_element(m(i, j)) +
               " is not well defined from " + R.format_cyclic(a) + " to " + R.format_cyclic(cod.ann(i));
    }
  }
  return {};
}

Morphism::Morphism(Module domain, Module codomain, Matrix matrix)
    : dom_(std::move(domain)), cod_(std::move(codomain)) {
  if (dom_.ring() != cod_.ring()) throw MismatchError("morphism between modules over different rings");
  std::string v = congruence_violation(dom_, cod_, matrix);
  if (!v.empty()) throw StructuralError("ill-defined morphism: " + v);
  mat_ = cod_.reduce_rows(matrix);
}

Morphism::Morphism(Module domain, Module codomain, Matrix matrix, Unchecked)
    : dom_(std::move(domain)), cod_(std::move(codomain)) {
  if (matrix.rows() != cod_.gens() || matrix.cols() != dom_.gens())
    throw StructuralError("morphism matrix shape does not match modules");
  mat_ = cod_.reduce_rows(matrix);
}

Morphism Morphism::zero(const Module& dom, const Module& cod) {
  return Morphism(dom, cod, Matrix(cod.gens(), dom.gens()), Unchecked{});
}

Morphism Morphism::identity(const Module& m) { return Morphism(m, m, Matrix::identity(m.gens()), Unchecked{}); }

std::vector<Scalar> Morphism::apply(const std::vector<Scalar>& x) const {
  if (x.size() != dom_.gens()) throw StructuralError("vector length does not match domain");
  Matrix v(x.size(), 1);
  for (std::size_t i = 0; i < x.size(); ++i) v(i, 0) = x[i];
  Matrix y = cod_.reduce_rows(mat_mul(ring(), mat_, v));
  std::vector<Scalar> out(y.rows());
  for (std::size_t i = 0; i < y.rows(); ++i) out[i] = y(i, 0);
  return out;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (g.domain() != f.codomain())
    throw StructuralError("composition: codomain " + f.codomain().to_string() + " does not match domain " +
                          g.domain().to_string());
  return Morphism(f.domain(), g.codomain(), mat_mul(g.ring(), g.matrix(), f.matrix()), Morphism::Unchecked{});
}

Morphism add(const Morphism& f, const Morphism& g) {
  if (f.domain() != g.domain() || f.codomain() != g.codomain()) throw StructuralError("sum of morphisms with different ends");
  return Morphism(f.domain(), f.codomain(), mat_add(f.ring(), f.matrix(), g.matrix()), Morphism::Unchecked{});
}

Morphism sub(const Morphism& f, const Morphism& g) {
  if (f.domain() != g.domain() || f.codomain() != g.codomain())
    throw StructuralError("difference of morphisms with different ends");
  return Morphism(f.domain(), f.codomain(), mat_sub(f.ring(), f.matrix(), g.matrix()), Morphism::Unchecked{});
}

Morphism scale(const Scalar& s, const Morphism& f) {
  return Morphism(f.domain(), f.codomain(), mat_scale(f.ring(), f.ring().reduce(s), f.matrix()), Morphism::Unchecked{});
}

Morphism tensor(const Morphism& f, const Morphism& g) {
  if (f.ring() != g.ring()) throw MismatchError("tensor of morphisms over different rings");
  return Morphism(tensor(f.domain(), g.domain()), tensor(f.codomain(), g.codomain()),
                  kron(f.ring(), f.matrix(), g.matrix()), Morphism::Unchecked{});
}

Morphism direct_sum(const Morphism& f, const Morphism& g) {
  return Morphism(direct_sum(f.domain(), g.domain()), direct_sum(f.codomain(), g.codomain()),
                  Matrix::direct_sum(f.matrix(), g.matrix()), Morphism::Unchecked{});
}

Morphism hcat(const std::vector<Morphism>& fs) {
  if (fs.empty()) throw StructuralError("hcat of an empty family");
  std::vector<Module> doms;
  std::size_t cols = 0;
  for (const auto& f : fs) {
    if (f.codomain() != fs[0].codomain()) throw StructuralError("hcat: codomains differ");
    doms.push_back(f.domain());
    cols += f.domain().gens();
  }
  Matrix m(fs[0].codomain().gens(), cols);
  std::size_t c = 0;
  for (const auto& f : fs) {
    m.set_block(0, c, f.matrix());
    c += f.domain().gens();
  }
  return Morphism(direct_sum(doms), fs[0].codomain(), std::move(m), Morphism::Unchecked{});
}

Morphism vcat(const std::vector<Morphism>& fs) {
  if (fs.empty()) throw StructuralError("vcat of an empty family");
  std::vector<Module> cods;
  std::size_t rows = 0;
  for (const auto& f : fs) {
    if (f.domain() != fs[0].domain()) throw StructuralError("vcat: domains differ");
    cods.push_back(f.codomain());
    rows += f.codomain().gens();
  }
  Matrix m(rows, fs[0].domain().gens());
  std::size_t r = 0;
  for (const auto& f : fs) {
    m.set_block(r, 0, f.matrix());
    r += f.codomain().gens();
  }
  return Morphism(fs[0].domain(), direct_sum(cods), std::move(m), Morphism::Unchecked{});
}

Morphism summand_inclusion(const std::vector<Module>& ms, std::size_t k) {
  Module sum = direct_sum(ms);
  std::size_t off = 0;
  for (std::size_t i = 0; i < k; ++i) off += ms[i].gens();
  Matrix m(sum.gens(), ms[k].gens());
  for (std::size_t i = 0; i < ms[k].gens(); ++i) m(off + i, i) = Scalar(1);
  return Morphism(ms[k], sum, std::move(m), Morphism::Unchecked{});
}

Morphism summand_projection(const std::vector<Module>& ms, std::size_t k) {
  Module sum = direct_sum(ms);
  std::size_t off = 0;
  for (std::size_t i = 0; i < k; ++i) off += ms[i].gens();
  Matrix m(ms[k].gens(), sum.gens());
  for (std::size_t i = 0; i < ms[k].gens(); ++i) m(i, off + i) = Scalar(1);
  return Morphism(sum, ms[k], std::move(m), Morphism::Unchecked{});
}

}  // namespace templikit::coeff
