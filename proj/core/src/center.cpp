#include "genhecke/center.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "genhecke/errors.hpp"

namespace genhecke {

namespace {

// Sparse element of R[C(Y̌)] with rational exponents, keyed by (k, y̌).
using YTerms = std::map<std::pair<std::int64_t, RationalCoweight>, Rational>;

YTerms y_unit(std::size_t rank) { return {{{0, RationalCoweight::zero(rank)}, Rational(1)}}; }

YTerms y_multiply(const YTerms& a, const YTerms& b) {
  YTerms out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      auto& slot = out[{ka.first + kb.first, ka.second + kb.second}];
      slot += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// z_{O(ω̌_i)} in degree ℓ(ω̌_i).
YTerms y_orbit_sum(const Context& ctx, std::size_t i) {
  const RationalCoweight& w = ctx.datum->fundamental_coweights()[i];
  std::int64_t k = to_int64(length(*ctx.datum, w));
  YTerms out;
  for (const auto& y : orbit(*ctx.weyl, w)) out[{k, y}] += 1;
  return out;
}

// ∏ z_{O(ω̌_i)}^{n_i} over Λ̌.
YTerms y_phi_lambda(const Context& ctx, const IntVector& n) {
  YTerms out = y_unit(ctx.datum->rank());
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] == 0) continue;
    YTerms z = y_orbit_sum(ctx, i);
    for (std::int64_t t = 0; t < n[i]; ++t) out = y_multiply(out, z);
  }
  return out;
}

IntVector checked_fundamental_coordinates(const Context& ctx, const Coweight& lambda) {
  if (!is_dominant(*ctx.datum, lambda)) throw PreconditionError(to_string(lambda) + " is not dominant");
  IntVector n(ctx.datum->semisimple_rank());
  for (std::size_t i = 0; i < n.size(); ++i) n[i] = ctx.datum->pair(ctx.datum->simple_root_index(i), lambda);
  return n;
}

// a − b ∈ Q̌ for a, b ∈ Λ̌: the ω̌-coordinate difference is an integer
// combination of the columns of the Cartan matrix.
class CorootLatticeTest {
 public:
  explicit CorootLatticeTest(const RootDatum& d) : datum_(d) {
    auto inv = inverse(d.cartan());
    if (!inv) throw CertificationError("Cartan matrix is singular");
    inv_ = std::move(*inv);
  }
  bool same_class(const RationalCoweight& a, const RationalCoweight& b) const {
    RationalCoweight diff = a - b;
    std::size_t r = datum_.semisimple_rank();
    std::vector<Rational> c(r);
    for (std::size_t i = 0; i < r; ++i) c[i] = datum_.pair(datum_.simple_root_index(i), diff);
    for (std::size_t i = 0; i < r; ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < r; ++j) s += inv_[i][j] * c[j];
      if (!is_integer(s)) return false;
    }
    return true;
  }

 private:
  const RootDatum& datum_;
  RationalMatrix inv_;
};

}  // namespace

ConeAlgebraElement phi_lambda(const Context& ctx, const Coweight& lambda) {
  if (!ctx.datum->is_adjoint()) throw PreconditionError("φ_Λ needs adjoint data (X̌ = Λ̌)");
  IntVector n = checked_fundamental_coordinates(ctx, lambda);
  ConeAlgebraElement out = ConeAlgebraElement::unit(ctx.ell);
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] == 0) continue;
    auto w = ctx.datum->fundamental_coweights()[i].to_coweight();
    out = multiply(out, power(orbit_sum_z(*ctx.weyl, ctx.ell, *w), n[i]));
  }
  return out;
}

ConeAlgebraElement phi_X(const Context& ctx, const Coweight& lambda) {
  IntVector n = checked_fundamental_coordinates(ctx, lambda);
  RationalCoweight p = invariant_projection(*ctx.datum, lambda).p_part;
  ConeAlgebraElement out(ctx.ell);
  for (const auto& [key, c] : y_phi_lambda(ctx, n)) {
    auto x = (p + key.second).to_coweight();
    if (!x) throw CertificationError("φ_X(" + to_string(lambda) + ") has exponent " + to_string(p + key.second) +
                                     " outside X̌");
    out.add_term({*x, key.first}, c);
  }
  return out;
}

ConeAlgebraElement rees_phi(const Context& ctx, const Coweight& lambda, std::int64_t j) {
  return phi_X(ctx, lambda).times_q(j);
}

bool coroot_reduction_holds(const Context& ctx, const Coweight& lambda) {
  IntVector n = checked_fundamental_coordinates(ctx, lambda);
  RationalCoweight ql = invariant_projection(*ctx.datum, lambda).q_part;
  CorootLatticeTest test(*ctx.datum);
  std::vector<std::pair<RationalCoweight, Rational>> classes;
  for (const auto& [key, c] : y_phi_lambda(ctx, n)) {
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const auto& cl) { return test.same_class(cl.first, key.second); });
    if (it == classes.end()) {
      classes.emplace_back(key.second, c);
    } else {
      it->second += c;
    }
  }
  Rational expected = 1;
  for (std::size_t i = 0; i < n.size(); ++i) {
    auto size = orbit(*ctx.weyl, ctx.datum->fundamental_coweights()[i]).size();
    for (std::int64_t t = 0; t < n[i]; ++t) expected *= static_cast<long>(size);
  }
  for (const auto& [rep, c] : classes) {
    bool target = test.same_class(rep, ql);
    if (target ? c != expected : c != 0) return false;
  }
  return true;
}

CenterReport verify_center(const Context& ctx, const CenterOptions& options) {
  const RootDatum& d = *ctx.datum;
  const HeckeAlgebra& H = *ctx.hecke;
  CenterReport report;
  report.preset = d.name();
  report.max_degree = options.max_degree;
  report.centrality_degree = options.centrality_degree.value_or(options.max_degree);
  report.central_radius = options.central_radius;
  if (options.max_degree < 1) throw PreconditionError("max degree must be at least 1");

  auto fail = [&](bool& flag, const std::string& what) {
    if (flag) report.counterexamples.push_back(what);
    flag = false;
  };

  auto dominants = dominant_coweights_up_to_length(d, options.max_degree, options.central_radius);
  std::map<Coweight, ConeAlgebraElement> phis;
  for (const auto& lam : dominants) phis.emplace(lam, phi_X(ctx, lam));
  auto phi_of = [&](const Coweight& lam) -> ConeAlgebraElement {
    auto it = phis.find(lam);
    return it != phis.end() ? it->second : phi_X(ctx, lam);
  };

  // (b) gr φ_X(e^λ̌) = z_{O(λ̌)}.
  for (const auto& lam : dominants) {
    auto diff = phis.at(lam) - orbit_sum_z(*ctx.weyl, ctx.ell, lam);
    for (const auto& [pt, c] : diff.terms())
      if (diff.slack(pt) < 1) {
        fail(report.graded_triangularity, "(b) φ_X(e^" + to_string(lam) + ") has leading term at " +
                                              to_string(pt.x) + " not matching z_O");
        break;
      }
  }

  // (a) per-degree independence and span of the invariant slice.
  for (std::int64_t k = 0; k <= options.max_degree; ++k) {
    auto pts = coweights_up_to_length(d, k, options.central_radius);
    std::set<Coweight> window(pts.begin(), pts.end());
    std::set<std::vector<Coweight>> orbits;
    for (const auto& x : pts) orbits.insert(orbit(*ctx.weyl, x));
    DegreeDimensions dims;
    dims.degree = k;
    dims.invariant_dimension = orbits.size();
    SparseEliminator<ConePoint> elim;
    for (const auto& lam : dominants) {
      std::int64_t l = length(d, lam);
      if (l > k) continue;
      ++dims.dominant_count;
      auto img = phis.at(lam).times_q(k - l);
      bool inside = is_invariant(*ctx.weyl, img) && img.is_homogeneous();
      for (const auto& [pt, c] : img.terms()) inside = inside && pt.k == k && window.count(pt.x);
      if (!inside) fail(report.independence_and_span, "(a) image of " + to_string(lam) + " in degree " +
                                                          std::to_string(k) + " is not in the invariant slice");
      elim.insert(img.terms());
    }
    dims.image_rank = elim.rank();
    if (dims.image_rank != dims.dominant_count || dims.image_rank != dims.invariant_dimension)
      fail(report.independence_and_span, "(a) degree " + std::to_string(k) + ": rank " +
                                             std::to_string(dims.image_rank) + ", dominant count " +
                                             std::to_string(dims.dominant_count) + ", invariant dimension " +
                                             std::to_string(dims.invariant_dimension));
    report.dimensions.push_back(dims);
  }

  // (c) multiplicativity on dominant pairs.
  for (std::size_t i = 0; i < dominants.size(); ++i)
    for (std::size_t j = i; j < dominants.size(); ++j) {
      const auto& a = dominants[i];
      const auto& b = dominants[j];
      if (length(d, a) + length(d, b) > options.max_degree) continue;
      if (!(multiply(phis.at(a), phis.at(b)) == phi_of(a + b)))
        fail(report.multiplicativity, "(c) φ_X(e^" + to_string(a) + ")·φ_X(e^" + to_string(b) + ") != φ_X(e^" +
                                          to_string(a + b) + ")");
    }

  // (d) centrality in H_q against the algebra generators T_s, T_ω.
  std::vector<HeckeElement> generators;
  for (std::size_t i = 0; i < ctx.affine->simple_roots().size(); ++i)
    generators.push_back(H.basis(ctx.affine->simple_reflection(i)));
  for (const auto& om : ctx.affine->omega_generators()) generators.push_back(H.basis(om));
  for (const auto& lam : dominants) {
    std::int64_t l = length(d, lam);
    if (l > report.centrality_degree) continue;
    HeckeElement base = H.embed_cone(phis.at(lam));
    for (std::int64_t j = 0; l + j <= report.centrality_degree; ++j) {
      HeckeElement h = LaurentPolynomial::monomial(static_cast<int>(j)) * base;
      for (std::size_t g = 0; g < generators.size(); ++g)
        if (!(H.multiply(h, generators[g]) == H.multiply(generators[g], h))) {
          fail(report.hecke_centrality, "(d) rees_phi(" + to_string(lam) + ", " + std::to_string(j) +
                                            ") does not commute with generator " + std::to_string(g));
          break;
        }
    }
  }

  // (e) reduction modulo Q̌.
  for (const auto& lam : dominants)
    if (!coroot_reduction_holds(ctx, lam))
      fail(report.coroot_reduction, "(e) φ_Λ(e^" + to_string(lam) + ") mod Q̌ differs from ∏|O(ω̌)|^n [e^λ̌]");

  return report;
}

}  // namespace genhecke
