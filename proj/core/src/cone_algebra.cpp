#include "genhecke/cone_algebra.hpp"

#include "genhecke/errors.hpp"

namespace genhecke {

bool LengthFunction::same_function(const ConeFunction& other) const {
  if (this == &other) return true;
  auto* o = dynamic_cast<const LengthFunction*>(&other);
  if (!o) return false;
  if (o->datum_ == datum_) return true;
  const RootDatum& a = *datum_;
  const RootDatum& b = *o->datum_;
  return a.rank() == b.rank() && a.simple_roots() == b.simple_roots() &&
         a.simple_coroots() == b.simple_coroots() && a.pairing() == b.pairing();
}

ConeAlgebraElement ConeAlgebraElement::unit(std::shared_ptr<const ConeFunction> phi) {
  std::size_t n = phi->rank();
  return monomial(std::move(phi), Coweight::zero(n), 0);
}

ConeAlgebraElement ConeAlgebraElement::monomial(std::shared_ptr<const ConeFunction> phi,
                                                const Coweight& x, std::int64_t k, const Rational& c) {
  ConeAlgebraElement e(std::move(phi));
  e.add_term({x, k}, c);
  return e;
}

ConeAlgebraElement ConeAlgebraElement::tight(std::shared_ptr<const ConeFunction> phi, const Coweight& x,
                                             const Rational& c) {
  std::int64_t k = phi->value(x);
  return monomial(std::move(phi), x, k, c);
}

ConeAlgebraElement ConeAlgebraElement::q_power(std::shared_ptr<const ConeFunction> phi, std::int64_t j) {
  std::size_t n = phi->rank();
  return monomial(std::move(phi), Coweight::zero(n), j);
}

Rational ConeAlgebraElement::coefficient(const ConePoint& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ConeAlgebraElement::add_term(const ConePoint& p, const Rational& c) {
  if (c == 0) return;
  if (p.x.rank() != phi_->rank()) throw PreconditionError("cone point has the wrong rank");
  if (p.k < phi_->value(p.x))
    throw PreconditionError("cone point violates k >= φ(x) (k = " + std::to_string(p.k) + ")");
  auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ConeAlgebraElement ConeAlgebraElement::degree_part(std::int64_t k) const {
  ConeAlgebraElement out(phi_);
  for (const auto& [p, c] : terms_)
    if (p.k == k) out.terms_.emplace(p, c);
  return out;
}

bool ConeAlgebraElement::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.k == terms_.rbegin()->first.k;
}

ConeAlgebraElement ConeAlgebraElement::times_q(std::int64_t j) const {
  ConeAlgebraElement out(phi_);
  for (const auto& [p, c] : terms_) out.add_term({p.x, p.k + j}, c);
  return out;
}

void ConeAlgebraElement::require_same(const ConeAlgebraElement& o) const {
  if (!phi_->same_function(*o.phi_)) throw PreconditionError("cone algebra elements over different φ");
}

ConeAlgebraElement& ConeAlgebraElement::operator+=(const ConeAlgebraElement& o) {
  require_same(o);
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

ConeAlgebraElement& ConeAlgebraElement::operator-=(const ConeAlgebraElement& o) {
  require_same(o);
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

ConeAlgebraElement operator*(const Rational& s, ConeAlgebraElement a) {
  if (s == 0) return ConeAlgebraElement(a.phi_);
  for (auto& [p, c] : a.terms_) c *= s;
  return a;
}

ConeAlgebraElement multiply(const ConeAlgebraElement& a, const ConeAlgebraElement& b) {
  if (!a.phi().same_function(b.phi())) throw PreconditionError("cone algebra elements over different φ");
  ConeAlgebraElement out(a.phi_ptr());
  for (const auto& [pa, ca] : a.terms())
    for (const auto& [pb, cb] : b.terms()) out.add_term({pa.x + pb.x, pa.k + pb.k}, ca * cb);
  return out;
}

ConeAlgebraElement power(const ConeAlgebraElement& a, std::int64_t n) {
  ConeAlgebraElement out = ConeAlgebraElement::unit(a.phi_ptr());
  for (std::int64_t i = 0; i < n; ++i) out = multiply(out, a);
  return out;
}

ConeAlgebraElement from_group_algebra(std::shared_ptr<const ConeFunction> phi,
                                      const std::vector<FilteredTerm>& terms) {
  ConeAlgebraElement out(phi);
  for (const auto& t : terms) {
    if (t.k < phi->value(t.x))
      throw PreconditionError("filtration tag " + std::to_string(t.k) + " is below φ(x) = " +
                              std::to_string(phi->value(t.x)));
    out.add_term({t.x, t.k}, t.c);
  }
  return out;
}

ConeAlgebraElement orbit_sum_z(const WeylGroup& group, std::shared_ptr<const ConeFunction> phi,
                               const Coweight& x) {
  if (!phi->is_length()) throw PreconditionError("orbit sums are defined for φ = ℓ");
  std::int64_t k = phi->value(x);
  ConeAlgebraElement out(phi);
  for (const auto& y : orbit(group, x)) out.add_term({y, k}, 1);
  return out;
}

ConeAlgebraElement w_act(const WeylGroup& group, std::size_t w, const ConeAlgebraElement& a) {
  if (!a.phi().is_w0_invariant(group)) throw PreconditionError("φ is not W₀-invariant");
  ConeAlgebraElement out(a.phi_ptr());
  for (const auto& [p, c] : a.terms()) out.add_term({group.act(w, p.x), p.k}, c);
  return out;
}

bool is_invariant(const WeylGroup& group, const ConeAlgebraElement& a) {
  for (std::size_t i = 0; i < group.datum().semisimple_rank(); ++i)
    if (!(w_act(group, group.simple_reflection(i), a) == a)) return false;
  return true;
}

std::vector<std::vector<ConeAlgebraElement>> invariant_basis(
    const WeylGroup& group, std::shared_ptr<const ConeFunction> phi, std::int64_t d,
    std::int64_t central_radius) {
  if (!phi->is_length()) throw PreconditionError("the invariant basis is defined for φ = ℓ");
  auto dominants = dominant_coweights_up_to_length(group.datum(), d, central_radius);
  std::vector<ConeAlgebraElement> z;
  for (const auto& lam : dominants) z.push_back(orbit_sum_z(group, phi, lam));
  std::vector<std::vector<ConeAlgebraElement>> slices(static_cast<std::size_t>(d + 1));
  for (std::int64_t k = 0; k <= d; ++k)
    for (std::size_t i = 0; i < dominants.size(); ++i) {
      std::int64_t l = phi->value(dominants[i]);
      if (l <= k) slices[static_cast<std::size_t>(k)].push_back(z[i].times_q(k - l));
    }
  return slices;
}

std::map<Coweight, Rational> specialize(const ConeAlgebraElement& a, Specialization at) {
  std::map<Coweight, Rational> out;
  for (const auto& [p, c] : a.terms()) {
    if (at == Specialization::QToZero && a.slack(p) != 0) continue;
    auto& slot = out[p.x];
    slot += c;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace genhecke
