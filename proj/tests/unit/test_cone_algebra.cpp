#include <doctest.h>

#include <set>

#include "genhecke/errors.hpp"
#include "genhecke/linalg.hpp"
#include "generators.hpp"

using namespace genhecke;
using genhecke::testing::cached_context;
using genhecke::testing::Gen;

TEST_CASE("semigroup products") {
  const Context& c = cached_context("A1-adjoint");
  auto e11 = ConeAlgebraElement::monomial(c.ell, Coweight{1}, 1);
  auto em11 = ConeAlgebraElement::monomial(c.ell, Coweight{-1}, 1);
  CHECK(multiply(e11, e11) == ConeAlgebraElement::monomial(c.ell, Coweight{2}, 2));
  CHECK(multiply(e11, em11) == ConeAlgebraElement::q_power(c.ell, 2));
  CHECK(specialize(multiply(e11, em11), Specialization::QToZero).empty());
  CHECK(specialize(ConeAlgebraElement::q_power(c.ell, 2), Specialization::QToZero).empty());
  auto z = orbit_sum_z(*c.weyl, c.ell, Coweight{1});
  CHECK(z == e11 + em11);
  auto one = specialize(z, Specialization::QToOne);
  CHECK(one.size() == 2);
  CHECK(one[Coweight{1}] == 1);
  CHECK(one[Coweight{-1}] == 1);
  CHECK(w_act(*c.weyl, c.weyl->simple_reflection(0), e11) == em11);
}

TEST_CASE("Rees lift") {
  const Context& c = cached_context("A2-adjoint");
  CHECK(from_group_algebra(c.ell, {{Coweight{1, 0}, 2, 1}}) == ConeAlgebraElement::monomial(c.ell, Coweight{1, 0}, 2));
  CHECK(from_group_algebra(c.ell, {{Coweight{0, 0}, 0, 1}}) == ConeAlgebraElement::unit(c.ell));
  CHECK_THROWS_AS(from_group_algebra(c.ell, {{Coweight{1, 0}, 1, 1}}), PreconditionError);
  CHECK_THROWS_AS(ConeAlgebraElement::monomial(c.ell, Coweight{1, 0}, 1), PreconditionError);
}

TEST_CASE("orbit sums and invariance") {
  const Context& a2 = cached_context("A2-adjoint");
  auto z = orbit_sum_z(*a2.weyl, a2.ell, Coweight{1, 0});
  CHECK(z.terms().size() == 3);
  for (const auto& [p, coeff] : z.terms()) CHECK(p.k == 2);
  CHECK_FALSE(is_invariant(*a2.weyl, ConeAlgebraElement::monomial(a2.ell, Coweight{1, 0}, 2)));
  for (const auto& name : RootDatum::preset_names()) {
    const Context& c = cached_context(name);
    for (const auto& x : coweights_up_to_length(*c.datum, name == "GL3" ? 6 : 8)) {
      auto zx = orbit_sum_z(*c.weyl, c.ell, x);
      CHECK(is_invariant(*c.weyl, zx));
      CHECK(zx.is_homogeneous());
    }
  }
}

TEST_CASE("invariant basis slices") {
  const Context& a1 = cached_context("A1-adjoint");
  auto slices = invariant_basis(*a1.weyl, a1.ell, 2);
  REQUIRE(slices.size() == 3);
  CHECK(slices[0].size() == 1);
  CHECK(slices[2].size() == 3);
  CHECK(invariant_basis(*a1.weyl, a1.ell, 0).at(0).at(0) == ConeAlgebraElement::unit(a1.ell));
  const Context& a2 = cached_context("A2-adjoint");
  auto s2 = invariant_basis(*a2.weyl, a2.ell, 2).at(2);
  CHECK(s2.size() == 3);
  CHECK(s2[0] == ConeAlgebraElement::q_power(a2.ell, 2));
}

TEST_CASE("graded dimension of invariants by brute force") {
  // Dimension of the degree-k invariant slice: orbits of lattice points with
  // ℓ <= k (central window for GL). Compared against the basis cardinality.
  for (const auto& name : RootDatum::preset_names()) {
    const Context& c = cached_context(name);
    std::int64_t d = name == "GL3" ? 6 : 10;
    auto slices = invariant_basis(*c.weyl, c.ell, d);
    for (std::int64_t k = 0; k <= d; ++k) {
      std::set<std::vector<Coweight>> orbits;
      for (const auto& x : coweights_up_to_length(*c.datum, k)) orbits.insert(orbit(*c.weyl, x));
      CHECK(slices[static_cast<std::size_t>(k)].size() == orbits.size());
      SparseEliminator<ConePoint> elim;
      for (const auto& b : slices[static_cast<std::size_t>(k)]) CHECK(elim.insert(b.terms()));
    }
  }
}

TEST_CASE("q=0 product rule and the convexity identity") {
  Gen gen(8);
  for (const auto& name : RootDatum::preset_names()) {
    const Context& c = cached_context(name);
    auto pts = coweights_up_to_length(*c.datum, 6);
    for (int t = 0; t < 200; ++t) {
      const auto& x = gen.pick(pts);
      const auto& y = gen.pick(pts);
      auto prod = specialize(multiply(ConeAlgebraElement::tight(c.ell, x), ConeAlgebraElement::tight(c.ell, y)),
                             Specialization::QToZero);
      if (same_chamber(*c.datum, x, y)) {
        CHECK(prod.size() == 1);
        CHECK(prod[x + y] == 1);
      } else {
        CHECK(prod.empty());
      }
    }
    for (int t = 0; t < 50; ++t) {
      std::vector<Coweight> ws;
      auto acc = ConeAlgebraElement::unit(c.ell);
      Coweight sum = Coweight::zero(c.datum->rank());
      std::int64_t total = 0;
      for (std::int64_t i = 0, n = gen.integer(1, 4); i < n; ++i) {
        const auto& w = gen.pick(pts);
        acc = multiply(acc, ConeAlgebraElement::tight(c.ell, w));
        sum += w;
        total += length(*c.datum, w);
      }
      CHECK(acc == ConeAlgebraElement::tight(c.ell, sum).times_q(total - length(*c.datum, sum)));
    }
  }
}

TEST_CASE("orbit sum products lie in the right filtration piece") {
  for (const auto& name : genhecke::testing::adjoint_presets()) {
    const Context& c = cached_context(name);
    auto dom = dominant_coweights_up_to_length(*c.datum, 5);
    for (const auto& a : dom)
      for (const auto& b : dom) {
        auto prod = multiply(orbit_sum_z(*c.weyl, c.ell, a), orbit_sum_z(*c.weyl, c.ell, b));
        auto lead = orbit_sum_z(*c.weyl, c.ell, a + b);
        auto diff = prod - lead;
        for (const auto& [p, coeff] : diff.terms()) CHECK(diff.slack(p) >= 1);
      }
  }
}

TEST_CASE("commutative and associative") {
  Gen gen(13);
  const Context& c = cached_context("B2-adjoint");
  auto pts = coweights_up_to_length(*c.datum, 3);
  auto rnd = [&] {
    auto e = ConeAlgebraElement::tight(c.ell, gen.pick(pts), gen.integer(-3, 3));
    e += ConeAlgebraElement::monomial(c.ell, gen.pick(pts), 4, gen.integer(1, 3));
    return e;
  };
  for (int t = 0; t < 30; ++t) {
    auto a = rnd(), b = rnd(), d = rnd();
    CHECK(multiply(a, b) == multiply(b, a));
    CHECK(multiply(multiply(a, b), d) == multiply(a, multiply(b, d)));
  }
}
