#include "genhecke/hecke.hpp"

#include <algorithm>

#include "genhecke/errors.hpp"

namespace genhecke {

// ------------------------------------------------------------ HeckeElement

HeckeElement HeckeElement::basis(const AffineWeylElement& w, const LaurentPolynomial& c) {
  HeckeElement h;
  h.add(w, c);
  return h;
}

LaurentPolynomial HeckeElement::coefficient(const AffineWeylElement& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPolynomial() : it->second;
}

void HeckeElement::add(const AffineWeylElement& w, const LaurentPolynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool HeckeElement::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_polynomial(); });
}

std::vector<std::pair<AffineWeylElement, LaurentPolynomial>> HeckeElement::sorted_terms() const {
  std::vector<std::pair<AffineWeylElement, LaurentPolynomial>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

HeckeElement operator*(const LaurentPolynomial& s, const HeckeElement& h) {
  HeckeElement out;
  if (s.is_zero()) return out;
  for (const auto& [w, c] : h.terms_) out.add(w, s * c);
  return out;
}

// ------------------------------------------------------------ HeckeAlgebra

HeckeAlgebra::HeckeAlgebra(std::shared_ptr<const AffineWeylGroup> group) : group_(std::move(group)) {}

const ReducedWord& HeckeAlgebra::cached_word(const AffineWeylElement& w) const {
  {
    std::lock_guard lock(cache_mutex_);
    auto it = words_.find(w);
    if (it != words_.end()) return it->second;
  }
  ReducedWord rw = group_->reduced_word(w);
  std::lock_guard lock(cache_mutex_);
  return words_.try_emplace(w, std::move(rw)).first->second;
}

HeckeElement HeckeAlgebra::right_multiply_simple(const HeckeElement& h, std::size_t i) const {
  HeckeElement out;
  for (const auto& [v, c] : h.terms()) {
    AffineWeylElement vs = group_->times_simple(v, i);
    if (group_->is_right_descent(v, i)) {
      // T_v T_s = q² T_{vs} + (q² − 1) T_v
      LaurentPolynomial c2 = c.shifted(2);
      out.add(vs, c2);
      out.add(v, c2 - c);
    } else {
      out.add(vs, c);
    }
  }
  return out;
}

HeckeElement HeckeAlgebra::right_multiply_simple_inverse(const HeckeElement& h, std::size_t i) const {
  HeckeElement out;
  for (const auto& [v, c] : h.terms()) {
    AffineWeylElement vs = group_->times_simple(v, i);
    if (group_->is_right_descent(v, i)) {
      out.add(vs, c);
    } else {
      // T_v T_s⁻¹ = q⁻² T_{vs} + (q⁻² − 1) T_v
      LaurentPolynomial cm = c.shifted(-2);
      out.add(vs, cm);
      out.add(v, cm - c);
    }
  }
  return out;
}

HeckeElement HeckeAlgebra::right_multiply_omega(const HeckeElement& h, const AffineWeylElement& omega) const {
  HeckeElement out;
  for (const auto& [v, c] : h.terms()) out.add(group_->multiply(v, omega), c);
  return out;
}

HeckeElement HeckeAlgebra::right_multiply_basis(const HeckeElement& h, const AffineWeylElement& w) const {
  const ReducedWord& rw = cached_word(w);
  HeckeElement out = right_multiply_omega(h, rw.omega);
  for (auto i : rw.word) out = right_multiply_simple(out, i);
  return out;
}

HeckeElement HeckeAlgebra::multiply(const HeckeElement& a, const HeckeElement& b) const {
  HeckeElement out;
  for (const auto& [w, c] : b.terms()) out += c * right_multiply_basis(a, w);
  return out;
}

HeckeElement HeckeAlgebra::basis_inverse(const AffineWeylElement& w) const {
  // T_w = T_ω T_{s_1}⋯T_{s_k}  ⇒  T_w⁻¹ = T_{s_k}⁻¹⋯T_{s_1}⁻¹ T_{ω⁻¹}
  const ReducedWord& rw = cached_word(w);
  HeckeElement h = unit();
  for (auto it = rw.word.rbegin(); it != rw.word.rend(); ++it) h = right_multiply_simple_inverse(h, *it);
  return right_multiply_omega(h, group_->inverse(rw.omega));
}

HeckeElement HeckeAlgebra::E_element(const Coweight& x) const {
  {
    std::lock_guard lock(cache_mutex_);
    auto it = e_cache_.find(x);
    if (it != e_cache_.end()) return it->second;
  }
  HeckeElement e = E_element_with(x, dominant_decomposition(datum(), x).minus);
  std::lock_guard lock(cache_mutex_);
  e_cache_.try_emplace(x, e);
  return e;
}

HeckeElement HeckeAlgebra::E_element_with(const Coweight& x, const Coweight& minus) const {
  const RootDatum& d = datum();
  Coweight plus = x + minus;
  if (!is_dominant(d, plus) || !is_dominant(d, minus))
    throw PreconditionError("E_element_with needs a decomposition into dominant coweights");
  // T_{x̌₁}·T_{x̌₂}⁻¹, folded generator by generator.
  HeckeElement h = basis(group_->translation(plus));
  const ReducedWord& rw = cached_word(group_->translation(minus));
  for (auto it = rw.word.rbegin(); it != rw.word.rend(); ++it) h = right_multiply_simple_inverse(h, *it);
  h = right_multiply_omega(h, group_->inverse(rw.omega));
  auto shift = length(d, x) + length(d, minus) - length(d, plus);
  h = LaurentPolynomial::monomial(static_cast<int>(shift)) * h;
  if (!h.is_integral()) throw CertificationError("E_x̌ has a negative power of q");
  return h;
}

HeckeElement HeckeAlgebra::embed_cone(const ConeAlgebraElement& a) const {
  if (!a.phi().is_length()) throw PreconditionError("embedding is defined for φ = ℓ");
  HeckeElement out;
  for (const auto& [p, c] : a.terms())
    out += LaurentPolynomial::monomial(static_cast<int>(a.slack(p)), c) * E_element(p.x);
  return out;
}

HeckeElement HeckeAlgebra::j_involution(const HeckeElement& h) const {
  HeckeElement out;
  for (const auto& [w, c] : h.terms()) out.add(w, group_->epsilon(w) == 1 ? c : -c);
  return out;
}

HeckeElement HeckeAlgebra::iota(const HeckeElement& h) const {
  HeckeElement out;
  const LaurentPolynomial q2m1 = LaurentPolynomial::monomial(2) - LaurentPolynomial(1);
  for (const auto& [w, c] : h.terms()) {
    {
      std::lock_guard lock(cache_mutex_);
      auto it = iota_cache_.find(w);
      if (it != iota_cache_.end()) {
        out += c * it->second;
        continue;
      }
    }
    const ReducedWord& rw = cached_word(w);
    HeckeElement g = basis(rw.omega);
    for (auto i : rw.word) g = q2m1 * g - right_multiply_simple(g, i);
    out += c * g;
    std::lock_guard lock(cache_mutex_);
    iota_cache_.try_emplace(w, std::move(g));
  }
  return out;
}

}  // namespace genhecke
