#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "genhecke/cone_algebra.hpp"
#include "genhecke/context.hpp"

namespace genhecke {

/// Exponent vector of a monomial in z_1, ..., z_n (one variable per ray).
using Monomial = std::vector<std::int64_t>;

/// The Weyl-chamber fan Σ: rays W₀·{ω̌_α} and one simplicial maximal cone
/// per w ∈ W₀.
class Fan {
 public:
  /// Adjoint data only.
  explicit Fan(const Context& ctx);

  const RootDatum& datum() const { return *datum_; }
  std::size_t rank() const { return datum_->rank(); }
  const std::vector<Coweight>& rays() const { return rays_; }
  /// Ray indices of w(cone(ω̌_α : α ∈ Π)), in the order α_1, α_2, ...
  const std::vector<std::vector<std::size_t>>& maximal_cones() const { return cones_; }

  /// The rays span a cone of Σ.
  bool is_face(const std::vector<std::size_t>& rays) const;
  /// Coordinates of x in the ray basis of maximal cone c (integral, since
  /// every cone is smooth).
  IntVector cone_coordinates(std::size_t c, const Coweight& x) const;
  /// Index of some maximal cone containing x (the first in order).
  std::size_t containing_cone(const Coweight& x) const;
  /// Rays of the smallest cone containing x, with the positive coefficients.
  std::vector<std::pair<std::size_t, std::int64_t>> minimal_cone(const Coweight& x) const;

  bool is_smooth() const;
  /// Every lattice point with ℓ <= bound lies in some maximal cone.
  bool is_complete(std::int64_t bound) const;

 private:
  std::shared_ptr<const RootDatum> datum_;
  std::vector<Coweight> rays_;
  std::vector<std::vector<std::size_t>> cones_;
  std::vector<std::vector<std::size_t>> sorted_cones_;
  std::vector<RationalMatrix> inverses_;  // inverse of the ray-column matrix per cone
};

std::shared_ptr<const Fan> weyl_chamber_fan(const Context& ctx);

/// Inclusion-minimal non-faces, all of whose proper subsets are faces.
std::vector<std::vector<std::size_t>> primitive_subsets(const Fan& fan);
/// z_{i_1}⋯z_{i_p} for each primitive subset.
std::vector<Monomial> sr_generators(const Fan& fan);

/// A piecewise-linear function on Σ given by its values on the rays.
class PLFunction final : public ConeFunction {
 public:
  PLFunction(std::shared_ptr<const Fan> fan, std::vector<std::int64_t> ray_values);
  /// φ(v_i) = ℓ(v_i); agrees with ℓ everywhere.
  static std::shared_ptr<const PLFunction> length(std::shared_ptr<const Fan> fan);

  const Fan& fan() const { return *fan_; }
  const std::vector<std::int64_t>& ray_values() const { return values_; }
  /// m_σ ∈ X per maximal cone, with <m_σ, v_i> = φ(v_i) on the rays of σ.
  const std::vector<IntVector>& linear_forms() const { return forms_; }
  /// m_σ(v) for the cone σ = maximal_cones()[c].
  std::int64_t form_value(std::size_t c, const Coweight& v) const;

  std::size_t rank() const override { return fan_->rank(); }
  std::int64_t value(const Coweight& x) const override;
  bool is_w0_invariant(const WeylGroup& group) const override;
  bool same_function(const ConeFunction& other) const override;

 private:
  std::shared_ptr<const Fan> fan_;
  std::vector<std::int64_t> values_;
  std::vector<IntVector> forms_;
  std::vector<IntVector> functionals_;  // P^T m_σ, so m_σ(x) = functional · x
};

bool is_convex(const PLFunction& phi);
bool is_strictly_convex(const PLFunction& phi);

/// Element of A_0 = A_q/qA_q, as coefficients on e^x̌.
using ClassicalElement = std::map<Coweight, Rational>;

/// z^b ↦ ∏ e^{b_i v_i} multiplied in A_0 for φ.
ClassicalElement tau(const PLFunction& phi, const Monomial& b);
/// The monomial of x̌ in its minimal cone.
Monomial tau_prime(const Fan& fan, const Coweight& x);

/// q^e·z^a.
struct QuantumMonomial {
  std::int64_t q_exponent = 0;
  Monomial z;
  friend bool operator==(const QuantumMonomial&, const QuantumMonomial&) = default;
};

/// q^e z^b ↦ e^{(0,e)}·∏ e^{(v_i, φ(v_i))}^{b_i} in R[C^φ(X̌)].
ConeAlgebraElement tau_q(std::shared_ptr<const PLFunction> phi, const QuantumMonomial& m);
/// e^{(x̌,k)} ↦ q^{k−φ(x̌)} z^{tau_prime(x̌)}.
QuantumMonomial tau_q_prime(const PLFunction& phi, const Coweight& x, std::int64_t k);

/// q^e z^a − z^b, rewriting z^b to its normal form z^a.
struct QuantumRelation {
  Monomial b;
  Monomial a;
  std::int64_t q_exponent = 0;
  /// a == b (then q_exponent is 0).
  bool trivial = false;
};

/// One relation per monomial z^b with 1 <= deg b <= d. Throws
/// PreconditionError when φ is not convex.
std::vector<QuantumRelation> quantum_sr_generators(const PLFunction& phi, std::int64_t d);

struct PresentationDegree {
  std::int64_t degree = 0;
  std::size_t slice_dimension = 0;  // #{x̌ : φ(x̌) <= k} inside the window
  std::size_t normal_forms = 0;
};

struct PresentationReport {
  std::string preset;
  std::int64_t max_degree = 0;
  std::vector<PresentationDegree> degrees;
  bool fan_smooth = true;
  bool fan_complete = true;
  bool primitive_subsets_valid = true;
  bool convex = true;
  /// Informational; the classical-limit check only applies when true.
  bool strictly_convex = true;
  bool classical_round_trip = true;  // τ∘τ′ = id on e^x̌
  bool quantum_round_trip = true;    // τ_q∘τ′_q = id on e^{(x̌,k)}: surjectivity
  bool normal_forms_independent = true;
  bool relations_hold = true;        // τ_q kills every emitted relation
  bool classical_limit = true;       // q→0 of the relations is the SR presentation
  std::vector<std::string> counterexamples;

  bool passed() const {
    return fan_smooth && fan_complete && primitive_subsets_valid && convex && classical_round_trip &&
           quantum_round_trip && normal_forms_independent && relations_hold && classical_limit;
  }
};

/// Slice-by-slice comparison of the (quantum) Stanley–Reisner presentation
/// with the cone algebra, over x̌ with ℓ(x̌) <= d.
PresentationReport verify_presentation(const Context& ctx, std::shared_ptr<const PLFunction> phi, std::int64_t d);

/// Total degree Σ b_i.
std::int64_t degree(const Monomial& m);
/// "z1^2*z3", or "1" for the empty monomial.
std::string to_string(const Monomial& m);

}  // namespace genhecke
