#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "genhecke/root_datum.hpp"
#include "genhecke/weyl_group.hpp"

namespace genhecke {

/// w = w₀·t_x̌ in W = W₀ ⋉ X̌. Acts on X̌ by v ↦ w₀(v + x̌) and on affine
/// roots by (α, r) ↦ (w₀(α), r − <α, x̌>).
struct AffineWeylElement {
  std::size_t finite = 0;  // index into the WeylGroup table
  Coweight translation;

  friend bool operator==(const AffineWeylElement& a, const AffineWeylElement& b) {
    return a.finite == b.finite && a.translation == b.translation;
  }
  friend bool operator<(const AffineWeylElement& a, const AffineWeylElement& b) {
    return a.finite != b.finite ? a.finite < b.finite : a.translation < b.translation;
  }
};

struct AffineWeylElementHash {
  std::size_t operator()(const AffineWeylElement& w) const noexcept {
    return CoweightHash{}(w.translation) * 31 + w.finite;
  }
};

/// The affine root (α, r), α given by its index in RootDatum::roots().
struct AffineRoot {
  std::size_t root = 0;
  std::int64_t level = 0;
  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
};

/// w = omega · s_{word[0]} ⋯ s_{word[k-1]}, with ℓ(w) = k and ℓ(omega) = 0.
/// Word entries index AffineWeylGroup::simple_roots().
struct ReducedWord {
  std::vector<std::size_t> word;
  AffineWeylElement omega;
};

class AffineWeylGroup {
 public:
  explicit AffineWeylGroup(std::shared_ptr<const WeylGroup> weyl);

  const WeylGroup& weyl() const { return *weyl_; }
  std::shared_ptr<const WeylGroup> weyl_ptr() const { return weyl_; }
  const RootDatum& datum() const { return weyl_->datum(); }

  AffineWeylElement identity() const;
  AffineWeylElement translation(const Coweight& x) const;
  AffineWeylElement finite(std::size_t w) const;
  AffineWeylElement multiply(const AffineWeylElement& a, const AffineWeylElement& b) const;
  AffineWeylElement inverse(const AffineWeylElement& a) const;

  AffineRoot act(const AffineWeylElement& w, const AffineRoot& a) const;
  bool is_positive(const AffineRoot& a) const;

  /// Π_aff: (α,0) for α ∈ Π in datum order, then (α,1) for α ∈ Π_m.
  const std::vector<AffineRoot>& simple_roots() const { return simple_; }
  /// The ⪯-minimal roots.
  const std::vector<std::size_t>& minimal_roots() const { return minimal_; }
  const AffineWeylElement& simple_reflection(std::size_t i) const { return reflections_[i]; }
  /// w·s_A for A = simple_roots()[i].
  AffineWeylElement times_simple(const AffineWeylElement& w, std::size_t i) const;
  /// w(A) ∈ Φ_aff⁻, i.e. ℓ(w s_A) = ℓ(w) − 1.
  bool is_right_descent(const AffineWeylElement& w, std::size_t i) const;

  /// #{A ∈ Φ_aff⁺ : w(A) ∈ Φ_aff⁻}.
  std::size_t length(const AffineWeylElement& w) const;
  /// Peels smallest-index right descents.
  ReducedWord reduced_word(const AffineWeylElement& w) const;
  AffineWeylElement omega_part(const AffineWeylElement& w) const { return reduced_word(w).omega; }

  /// Permutation of Π_aff induced by a length-zero element.
  std::vector<std::size_t> omega_permutation(const AffineWeylElement& omega) const;
  /// Orientation character: sign of the permutation of Π_aff induced by the
  /// Ω-component of w.
  int epsilon(const AffineWeylElement& w) const;

  /// Nontrivial generators of Ω (images of t_{e_i}).
  std::vector<AffineWeylElement> omega_generators() const;
  /// Ω-elements reachable by words of length <= radius in the generators and
  /// their inverses (all of Ω when it is finite and radius is large enough).
  std::vector<AffineWeylElement> omega_elements(std::size_t radius) const;
  /// Elements of W_aff of length <= max_length.
  std::vector<AffineWeylElement> affine_elements_up_to_length(std::size_t max_length) const;
  /// ω·v for ω in omega_elements(radius), v in W_aff with ℓ(v) <= max_length.
  std::vector<AffineWeylElement> elements_up_to_length(std::size_t max_length,
                                                       std::size_t omega_radius = 1) const;

 private:
  std::shared_ptr<const WeylGroup> weyl_;
  std::vector<AffineRoot> simple_;
  std::vector<std::size_t> minimal_;
  std::vector<AffineWeylElement> reflections_;
};

}  // namespace genhecke
