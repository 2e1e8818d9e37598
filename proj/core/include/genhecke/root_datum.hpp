#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "genhecke/linalg.hpp"
#include "genhecke/rational.hpp"

namespace genhecke {

/// An element of the coweight lattice X̌, in the datum's X̌-coordinates.
class Coweight {
 public:
  Coweight() = default;
  explicit Coweight(IntVector coords) : coords_(std::move(coords)) {}
  Coweight(std::initializer_list<std::int64_t> coords) : coords_(coords) {}
  static Coweight zero(std::size_t rank) { return Coweight(IntVector(rank, 0)); }

  std::size_t rank() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  const IntVector& coords() const { return coords_; }
  bool is_zero() const;

  Coweight& operator+=(const Coweight& o);
  Coweight& operator-=(const Coweight& o);
  friend Coweight operator+(Coweight a, const Coweight& b) { return a += b; }
  friend Coweight operator-(Coweight a, const Coweight& b) { return a -= b; }
  friend Coweight operator-(Coweight a);
  friend Coweight operator*(std::int64_t s, Coweight a);

  friend bool operator==(const Coweight& a, const Coweight& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const Coweight& a, const Coweight& b) { return a.coords_ < b.coords_; }

 private:
  IntVector coords_;
};

struct CoweightHash {
  std::size_t operator()(const Coweight& c) const noexcept;
};

/// A point of X̌ ⊗ Q stored as integer numerators over one positive common
/// denominator (kept in lowest terms). Houses Λ̌ elements, p(X̌), X̌_R points.
class RationalCoweight {
 public:
  RationalCoweight() = default;
  RationalCoweight(const Coweight& c);  // NOLINT(google-explicit-constructor)
  RationalCoweight(IntVector numerators, std::int64_t denominator);
  static RationalCoweight zero(std::size_t rank) { return RationalCoweight(IntVector(rank, 0), 1); }
  static RationalCoweight from_rationals(const std::vector<Rational>& coords);

  std::size_t rank() const { return num_.size(); }
  Rational operator[](std::size_t i) const { return make_rational(num_[i], den_); }
  const IntVector& numerators() const { return num_; }
  std::int64_t denominator() const { return den_; }
  bool is_integral() const { return den_ == 1; }
  bool is_zero() const;
  /// The lattice point, or nullopt when some coordinate is fractional.
  std::optional<Coweight> to_coweight() const;

  friend RationalCoweight operator+(const RationalCoweight& a, const RationalCoweight& b);
  friend RationalCoweight operator-(const RationalCoweight& a, const RationalCoweight& b);
  friend RationalCoweight operator-(const RationalCoweight& a);
  friend RationalCoweight operator*(std::int64_t s, const RationalCoweight& a);

  friend bool operator==(const RationalCoweight& a, const RationalCoweight& b) {
    return a.den_ == b.den_ && a.num_ == b.num_;
  }
  friend bool operator<(const RationalCoweight& a, const RationalCoweight& b);

 private:
  void normalize();
  IntVector num_;
  std::int64_t den_ = 1;
};

struct Root {
  IntVector root;           // in X-coordinates
  IntVector coroot;         // in X̌-coordinates
  IntVector simple_coords;  // coefficients in the basis Π
  IntVector functional;     // P^T root, so that <root, y> = functional . y
  bool positive = false;
};

/// A validated based root datum (X, X̌, Φ, Φ̌, Π, Π̌) with the perfect pairing
/// <x, y> = x^T P y between X and X̌.
class RootDatum {
 public:
  static constexpr std::size_t kDefaultClosureBound = 1000;

  /// Validates the input and closes Π under the simple reflections.
  /// simple_roots / simple_coroots hold one vector per row.
  static RootDatum custom(const IntMatrix& simple_roots, const IntMatrix& simple_coroots,
                          const IntMatrix& pairing, std::size_t closure_bound = kDefaultClosureBound,
                          std::string name = "custom");
  static RootDatum preset(std::string_view name);
  static const std::vector<std::string>& preset_names();

  const std::string& name() const { return name_; }
  std::size_t rank() const { return rank_; }
  std::size_t semisimple_rank() const { return simple_roots_.rows(); }
  const IntMatrix& simple_roots() const { return simple_roots_; }
  const IntMatrix& simple_coroots() const { return simple_coroots_; }
  const IntMatrix& pairing() const { return pairing_; }
  /// C_ij = <α_i, α̌_j>.
  const IntMatrix& cartan() const { return cartan_; }

  const std::vector<Root>& roots() const { return roots_; }
  const std::vector<std::size_t>& positive_roots() const { return positive_; }
  const std::vector<std::size_t>& negative_roots() const { return negative_; }
  /// Index into roots() of the i-th simple root.
  std::size_t simple_root_index(std::size_t i) const { return i; }
  std::optional<std::size_t> find_root(const IntVector& x) const;
  std::optional<std::size_t> find_coroot(const IntVector& y) const;

  /// Dual basis to Π inside Q̌ ⊗ Q.
  const std::vector<RationalCoweight>& fundamental_coweights() const { return fundamental_; }
  /// x̌₀, the sum of all positive coroots.
  const Coweight& positive_coroot_sum() const { return coroot_sum_; }

  /// X = Q, equivalently X̌ = Λ̌.
  bool is_adjoint() const;

  std::int64_t pair(std::size_t root_index, const Coweight& y) const {
    return dot(roots_[root_index].functional, y.coords());
  }
  Rational pair(std::size_t root_index, const RationalCoweight& y) const;
  std::int64_t pair(const IntVector& weight, const Coweight& y) const;

  /// Integer coordinates <α_i, v> of a Λ̌-point in the ω̌ basis; throws when
  /// v is not in Λ̌ + (W₀-fixed part).
  IntVector fundamental_coordinates(const RationalCoweight& v) const;

 private:
  RootDatum() = default;

  std::string name_;
  std::size_t rank_ = 0;
  IntMatrix simple_roots_, simple_coroots_, pairing_, cartan_;
  std::vector<Root> roots_;
  std::vector<std::size_t> positive_, negative_;
  std::vector<RationalCoweight> fundamental_;
  Coweight coroot_sum_;
};

/// "(1,-2)" and "(1/2,-1/2)".
std::string to_string(const Coweight& v);
std::string to_string(const RationalCoweight& v);

/// ℓ(v) = Σ_{α∈Φ⁺} |<α, v>|.
std::int64_t length(const RootDatum& datum, const Coweight& v);
Rational length(const RootDatum& datum, const RationalCoweight& v);

bool is_dominant(const RootDatum& datum, const Coweight& v);
/// <α, v> ∈ Z for every root, and v ∈ Q̌ ⊗ Q.
bool in_coweight_lattice_lambda(const RootDatum& datum, const RationalCoweight& v);

struct InvariantProjection {
  RationalCoweight p_part;  // W₀-average
  RationalCoweight q_part;  // x̌ − p(x̌), lies in Λ̌
};
InvariantProjection invariant_projection(const RootDatum& datum, const Coweight& v);

struct DominantDecomposition {
  Coweight plus;        // x̌₁
  Coweight minus;       // x̌₂ = m·x̌₀
  std::int64_t multiple = 0;
};
DominantDecomposition dominant_decomposition(const RootDatum& datum, const Coweight& v);

/// Z-basis of the lattice p(X̌) (empty for semisimple data).
std::vector<RationalCoweight> central_lattice_basis(const RootDatum& datum);

/// Points Σ b_j g_j of p(X̌) with |b_j| <= radius, g_j the central basis.
/// Slices of the (infinite-dimensional when p(X̌) ≠ 0) algebras are taken
/// over this window of central parts.
std::vector<RationalCoweight> central_window(const RootDatum& datum, std::int64_t radius);

/// All x̌ ∈ X̌ with ℓ(x̌) <= max_length and p(x̌) in the central window,
/// ordered by (ℓ, coordinates).
std::vector<Coweight> coweights_up_to_length(const RootDatum& datum, std::int64_t max_length,
                                             std::int64_t central_radius = 2);
std::vector<Coweight> dominant_coweights_up_to_length(const RootDatum& datum,
                                                      std::int64_t max_length,
                                                      std::int64_t central_radius = 2);

}  // namespace genhecke
