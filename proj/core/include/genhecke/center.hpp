#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "genhecke/context.hpp"

namespace genhecke {

/// φ_Λ(e^λ̌) = ∏_α z_{O(ω̌_α)}^{n_α} for adjoint data, n_α = <α, λ̌>.
ConeAlgebraElement phi_lambda(const Context& ctx, const Coweight& lambda);

/// e^{p(λ̌)}·φ_Λ(e^{q(λ̌)}) computed in Y̌ = p(X̌) ⊕ Λ̌ with rational
/// coordinates, certified to lie in X̌ and pulled back.
ConeAlgebraElement phi_X(const Context& ctx, const Coweight& lambda);

/// q^j·φ_X(λ̌), the image of q^j e^λ̌ under R[q][X̌⁺] ≅ R[C(X̌)]^{W₀}.
ConeAlgebraElement rees_phi(const Context& ctx, const Coweight& lambda, std::int64_t j);

/// Class of e^{λ̌} under R[Λ̌] → R[Λ̌/Q̌] applied to φ_Λ(e^{q(λ̌)}): the
/// coefficient sum per class, keyed by a representative of each class.
/// Returns true when it equals ∏|O(ω̌_α)|^{n_α}·[e^{q(λ̌)}].
bool coroot_reduction_holds(const Context& ctx, const Coweight& lambda);

struct DegreeDimensions {
  std::int64_t degree = 0;
  std::size_t dominant_count = 0;       // #{λ̌ ∈ X̌⁺ : ℓ(λ̌) <= k}
  std::size_t invariant_dimension = 0;  // W₀-orbits of {x̌ : ℓ(x̌) <= k}
  std::size_t image_rank = 0;           // rank of {rees_phi(λ̌, k − ℓ(λ̌))}
};

struct CenterReport {
  std::string preset;
  std::int64_t max_degree = 0;
  std::int64_t centrality_degree = 0;
  std::int64_t central_radius = 2;
  std::vector<DegreeDimensions> dimensions;
  bool independence_and_span = true;  // (a), surjectivity onto invariants
  bool graded_triangularity = true;   // (b)
  bool multiplicativity = true;       // (c)
  bool hecke_centrality = true;       // (d)
  bool coroot_reduction = true;       // (e)
  std::vector<std::string> counterexamples;

  bool passed() const {
    return independence_and_span && graded_triangularity && multiplicativity && hecke_centrality && coroot_reduction;
  }
};

struct CenterOptions {
  std::int64_t max_degree = 8;
  /// Centrality is checked for ℓ(λ̌) + j <= this; defaults to max_degree.
  std::optional<std::int64_t> centrality_degree;
  /// Window on p(X̌) for data with a central torus.
  std::int64_t central_radius = 2;
};

CenterReport verify_center(const Context& ctx, const CenterOptions& options);

}  // namespace genhecke
