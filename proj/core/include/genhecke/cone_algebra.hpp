#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "genhecke/rational.hpp"
#include "genhecke/root_datum.hpp"
#include "genhecke/weyl_group.hpp"

namespace genhecke {

/// An integer-valued convex piecewise-linear function φ on X̌ defining the
/// cone C^φ(X̌) = {(x̌, k) : k >= φ(x̌)}.
class ConeFunction {
 public:
  virtual ~ConeFunction() = default;
  virtual std::size_t rank() const = 0;
  virtual std::int64_t value(const Coweight& x) const = 0;
  virtual bool is_w0_invariant(const WeylGroup& group) const = 0;
  virtual bool same_function(const ConeFunction& other) const = 0;
  virtual bool is_length() const { return false; }
};

/// φ = ℓ.
class LengthFunction final : public ConeFunction {
 public:
  explicit LengthFunction(std::shared_ptr<const RootDatum> datum) : datum_(std::move(datum)) {}
  std::size_t rank() const override { return datum_->rank(); }
  std::int64_t value(const Coweight& x) const override { return length(*datum_, x); }
  bool is_w0_invariant(const WeylGroup&) const override { return true; }
  bool same_function(const ConeFunction& other) const override;
  bool is_length() const override { return true; }
  const RootDatum& datum() const { return *datum_; }

 private:
  std::shared_ptr<const RootDatum> datum_;
};

struct ConePoint {
  Coweight x;
  std::int64_t k = 0;

  friend bool operator==(const ConePoint& a, const ConePoint& b) { return a.k == b.k && a.x == b.x; }
  friend bool operator<(const ConePoint& a, const ConePoint& b) {
    return a.k != b.k ? a.k < b.k : a.x < b.x;
  }
};

/// Element of R[C^φ(X̌)], the Rees algebra of R[X̌] for the φ-filtration.
/// Zero coefficients are never stored; q = e^{(0,1)}.
class ConeAlgebraElement {
 public:
  using Terms = std::map<ConePoint, Rational>;

  explicit ConeAlgebraElement(std::shared_ptr<const ConeFunction> phi) : phi_(std::move(phi)) {}

  static ConeAlgebraElement unit(std::shared_ptr<const ConeFunction> phi);
  /// c·e^{(x,k)}; throws PreconditionError if k < φ(x).
  static ConeAlgebraElement monomial(std::shared_ptr<const ConeFunction> phi, const Coweight& x,
                                     std::int64_t k, const Rational& c = 1);
  /// c·e^{(x, φ(x))}.
  static ConeAlgebraElement tight(std::shared_ptr<const ConeFunction> phi, const Coweight& x,
                                  const Rational& c = 1);
  static ConeAlgebraElement q_power(std::shared_ptr<const ConeFunction> phi, std::int64_t j);

  const ConeFunction& phi() const { return *phi_; }
  const std::shared_ptr<const ConeFunction>& phi_ptr() const { return phi_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const ConePoint& p) const;

  void add_term(const ConePoint& p, const Rational& c);
  /// k − φ(x) for a key of this element.
  std::int64_t slack(const ConePoint& p) const { return p.k - phi_->value(p.x); }
  /// Homogeneous component of degree k.
  ConeAlgebraElement degree_part(std::int64_t k) const;
  bool is_homogeneous() const;
  /// Multiplies by q^j.
  ConeAlgebraElement times_q(std::int64_t j) const;

  ConeAlgebraElement& operator+=(const ConeAlgebraElement& o);
  ConeAlgebraElement& operator-=(const ConeAlgebraElement& o);
  friend ConeAlgebraElement operator+(ConeAlgebraElement a, const ConeAlgebraElement& b) { return a += b; }
  friend ConeAlgebraElement operator-(ConeAlgebraElement a, const ConeAlgebraElement& b) { return a -= b; }
  friend ConeAlgebraElement operator*(const Rational& s, ConeAlgebraElement a);
  friend bool operator==(const ConeAlgebraElement& a, const ConeAlgebraElement& b) {
    return a.terms_ == b.terms_;
  }

 private:
  void require_same(const ConeAlgebraElement& o) const;

  std::shared_ptr<const ConeFunction> phi_;
  Terms terms_;
};

/// Semigroup product e^{(x,k)}·e^{(x',k')} = e^{(x+x', k+k')}, extended bilinearly.
ConeAlgebraElement multiply(const ConeAlgebraElement& a, const ConeAlgebraElement& b);
ConeAlgebraElement power(const ConeAlgebraElement& a, std::int64_t n);

/// A term t^k e^{x̌} of the Rees algebra of the filtered group algebra.
struct FilteredTerm {
  Coweight x;
  std::int64_t k = 0;
  Rational c = 1;
};
/// The Rees lift t^k e^{x̌} ↦ e^{(x̌,k)}; throws when some k < φ(x̌).
ConeAlgebraElement from_group_algebra(std::shared_ptr<const ConeFunction> phi,
                                      const std::vector<FilteredTerm>& terms);

/// z_{O(x̌)} lifted to degree ℓ(x̌). Requires φ = ℓ.
ConeAlgebraElement orbit_sum_z(const WeylGroup& group, std::shared_ptr<const ConeFunction> phi,
                               const Coweight& x);

/// w·e^{(x,k)} = e^{(w(x),k)}. Throws when φ is not W₀-invariant.
ConeAlgebraElement w_act(const WeylGroup& group, std::size_t w, const ConeAlgebraElement& a);
bool is_invariant(const WeylGroup& group, const ConeAlgebraElement& a);

/// Per degree k = 0..d, the elements q^{k−ℓ(λ̌)} z_{O(λ̌)} for dominant λ̌ with
/// ℓ(λ̌) <= k and p(λ̌) in the central window. Requires φ = ℓ.
std::vector<std::vector<ConeAlgebraElement>> invariant_basis(
    const WeylGroup& group, std::shared_ptr<const ConeFunction> phi, std::int64_t d,
    std::int64_t central_radius = 2);

enum class Specialization { QToZero, QToOne };
/// q→0 keeps the slack-zero terms; q→1 forgets the degree.
std::map<Coweight, Rational> specialize(const ConeAlgebraElement& a, Specialization at);

}  // namespace genhecke
