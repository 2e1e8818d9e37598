#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "genhecke/affine_weyl.hpp"
#include "genhecke/cone_algebra.hpp"
#include "genhecke/laurent.hpp"

namespace genhecke {

/// Finite Q[q^{±1}]-combination of basis elements T_w, w ∈ W.
class HeckeElement {
 public:
  using Terms = std::unordered_map<AffineWeylElement, LaurentPolynomial, AffineWeylElementHash>;

  HeckeElement() = default;
  static HeckeElement basis(const AffineWeylElement& w, const LaurentPolynomial& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  LaurentPolynomial coefficient(const AffineWeylElement& w) const;
  void add(const AffineWeylElement& w, const LaurentPolynomial& c);

  /// Every coefficient lies in Q[q].
  bool is_integral() const;
  /// Terms ordered by (finite index, translation) for stable output.
  std::vector<std::pair<AffineWeylElement, LaurentPolynomial>> sorted_terms() const;

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  /// Scalar multiplication by a Laurent polynomial.
  friend HeckeElement operator*(const LaurentPolynomial& s, const HeckeElement& h);
  friend bool operator==(const HeckeElement& a, const HeckeElement& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// The generic affine Hecke algebra H_q on {T_w}: T_v T_w = T_{vw} when
/// lengths add and (T_s − q²)(T_s + 1) = 0 for s ∈ S_aff.
class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(std::shared_ptr<const AffineWeylGroup> group);

  const AffineWeylGroup& group() const { return *group_; }
  std::shared_ptr<const AffineWeylGroup> group_ptr() const { return group_; }
  const RootDatum& datum() const { return group_->datum(); }

  HeckeElement unit() const { return HeckeElement::basis(group_->identity()); }
  HeckeElement basis(const AffineWeylElement& w) const { return HeckeElement::basis(w); }

  /// h·T_s for s = s_A, A = simple_roots()[i].
  HeckeElement right_multiply_simple(const HeckeElement& h, std::size_t i) const;
  /// h·T_s⁻¹ with T_s⁻¹ = q⁻²T_s + (q⁻² − 1).
  HeckeElement right_multiply_simple_inverse(const HeckeElement& h, std::size_t i) const;
  /// h·T_ω for ℓ(ω) = 0.
  HeckeElement right_multiply_omega(const HeckeElement& h, const AffineWeylElement& omega) const;
  /// h·T_w by folding a reduced word of w.
  HeckeElement right_multiply_basis(const HeckeElement& h, const AffineWeylElement& w) const;

  HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) const;
  HeckeElement basis_inverse(const AffineWeylElement& w) const;

  /// E_x̌ = q^{ℓ(x̌)} θ_x̌ with θ_x̌ = q^{ℓ(x̌₂)−ℓ(x̌₁)} T_{x̌₁} T_{x̌₂}⁻¹, using the
  /// canonical dominant decomposition; certified integral.
  HeckeElement E_element(const Coweight& x) const;
  /// Same, with x̌₂ supplied (must be dominant with x̌ + x̌₂ dominant).
  HeckeElement E_element_with(const Coweight& x, const Coweight& minus) const;

  /// e^{(x̌,k)} ↦ q^{k−ℓ(x̌)} E_x̌. φ must be ℓ.
  HeckeElement embed_cone(const ConeAlgebraElement& a) const;

  int epsilon(const AffineWeylElement& w) const { return group_->epsilon(w); }
  /// T_w ↦ ε(w) T_w.
  HeckeElement j_involution(const HeckeElement& h) const;
  /// Algebra involution with ι(T_ω) = T_ω, ι(T_s) = q² − 1 − T_s.
  HeckeElement iota(const HeckeElement& h) const;
  HeckeElement iota_bar(const HeckeElement& h) const { return iota(j_involution(h)); }

 private:
  const ReducedWord& cached_word(const AffineWeylElement& w) const;

  std::shared_ptr<const AffineWeylGroup> group_;
  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<AffineWeylElement, ReducedWord, AffineWeylElementHash> words_;
  mutable std::unordered_map<Coweight, HeckeElement, CoweightHash> e_cache_;
  mutable std::unordered_map<AffineWeylElement, HeckeElement, AffineWeylElementHash> iota_cache_;
};

}  // namespace genhecke
