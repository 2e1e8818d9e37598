#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <vector>

#include "genhecke/linalg.hpp"
#include "genhecke/root_datum.hpp"

namespace genhecke {

struct WeylElement {
  IntMatrix coweight_action;  // on X̌-coordinates
  IntMatrix weight_action;    // on X-coordinates
  std::vector<std::size_t> word;  // reduced, lexicographically least
  std::size_t length = 0;
};

/// The finite Weyl group W₀ as an immutable table: elements in breadth-first
/// order by length, indexed by their action matrix. Index 0 is the identity.
class WeylGroup {
 public:
  explicit WeylGroup(std::shared_ptr<const RootDatum> datum);

  const RootDatum& datum() const { return *datum_; }
  std::shared_ptr<const RootDatum> datum_ptr() const { return datum_; }

  std::size_t order() const { return elements_.size(); }
  const std::vector<WeylElement>& elements() const { return elements_; }
  const WeylElement& element(std::size_t w) const { return elements_[w]; }

  std::size_t multiply(std::size_t a, std::size_t b) const { return mult_[a * order() + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t simple_reflection(std::size_t i) const { return simple_[i]; }
  /// The element s_β for a root index β.
  std::size_t reflection(std::size_t root_index) const { return reflection_[root_index]; }
  /// Index of the root w(β).
  std::size_t act_on_root(std::size_t w, std::size_t root_index) const {
    return root_perm_[w * datum_->roots().size() + root_index];
  }
  std::size_t longest_element() const { return elements_.size() - 1; }

  Coweight act(std::size_t w, const Coweight& v) const;
  RationalCoweight act(std::size_t w, const RationalCoweight& v) const;
  /// Lookup by action on X̌; throws if the matrix is not in W₀.
  std::size_t index_of(const IntMatrix& coweight_action) const;
  /// Number of positive roots sent negative by w⁻¹.
  std::size_t inversion_count(std::size_t w) const;

 private:
  std::shared_ptr<const RootDatum> datum_;
  std::vector<WeylElement> elements_;
  std::map<IntMatrix, std::size_t> index_;
  std::vector<std::size_t> mult_, inverse_, simple_, reflection_, root_perm_;
};

/// All elements, each exactly once, with reduced words.
const std::vector<WeylElement>& enumerate(const WeylGroup& group);

/// The W₀-orbit, sorted.
std::vector<Coweight> orbit(const WeylGroup& group, const Coweight& v);
std::vector<RationalCoweight> orbit(const WeylGroup& group, const RationalCoweight& v);
std::size_t stabilizer_order(const WeylGroup& group, const Coweight& v);
/// Element indices of Stab(v).
std::vector<std::size_t> stabilizer(const WeylGroup& group, const Coweight& v);

struct DominantRepresentative {
  Coweight dominant;
  std::size_t element = 0;  // w with w(v) = dominant
};
DominantRepresentative dominant_representative(const WeylGroup& group, const Coweight& v);

/// Closed-chamber relation via ℓ-additivity.
bool same_chamber(const RootDatum& datum, const Coweight& a, const Coweight& b);
/// Closed-chamber relation via a common dominating Weyl element.
bool same_chamber_by_search(const WeylGroup& group, const Coweight& a, const Coweight& b);

}  // namespace genhecke
