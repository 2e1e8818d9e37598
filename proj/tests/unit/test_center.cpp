#include <doctest.h>

#include <chrono>

#include "genhecke/center.hpp"
#include "genhecke/errors.hpp"
#include "generators.hpp"

using namespace genhecke;
using genhecke::testing::cached_context;

TEST_CASE("phi_lambda examples") {
  const Context& a1 = cached_context("A1-adjoint");
  CHECK(phi_lambda(a1, Coweight{0}) == ConeAlgebraElement::unit(a1.ell));
  auto expected = ConeAlgebraElement::monomial(a1.ell, Coweight{2}, 2) +
                  ConeAlgebraElement::monomial(a1.ell, Coweight{0}, 2, 2) +
                  ConeAlgebraElement::monomial(a1.ell, Coweight{-2}, 2);
  CHECK(phi_lambda(a1, Coweight{2}) == expected);
  CHECK(phi_lambda(a1, Coweight{2}) == orbit_sum_z(*a1.weyl, a1.ell, Coweight{2}) + 2 * ConeAlgebraElement::q_power(a1.ell, 2));
  const Context& a2 = cached_context("A2-adjoint");
  CHECK(phi_lambda(a2, Coweight{1, 0}) == orbit_sum_z(*a2.weyl, a2.ell, Coweight{1, 0}));
  CHECK_THROWS_AS(phi_lambda(a2, Coweight{-1, 0}), PreconditionError);
  CHECK_THROWS_AS(phi_lambda(cached_context("GL2"), Coweight{1, 0}), PreconditionError);
}

TEST_CASE("phi_X agrees with phi_lambda on adjoint data") {
  for (const auto& name : genhecke::testing::adjoint_presets()) {
    const Context& c = cached_context(name);
    for (const auto& lam : dominant_coweights_up_to_length(*c.datum, 8)) CHECK(phi_X(c, lam) == phi_lambda(c, lam));
  }
}

TEST_CASE("phi_X on GL2") {
  const Context& gl2 = cached_context("GL2");
  auto expected = ConeAlgebraElement::monomial(gl2.ell, Coweight{1, 0}, 1) +
                  ConeAlgebraElement::monomial(gl2.ell, Coweight{0, 1}, 1);
  CHECK(phi_X(gl2, Coweight{1, 0}) == expected);
  // central element: no orbit, no q-correction
  CHECK(phi_X(gl2, Coweight{1, 1}) == ConeAlgebraElement::monomial(gl2.ell, Coweight{1, 1}, 0));
}

TEST_CASE("rees_phi") {
  const Context& a2 = cached_context("A2-adjoint");
  CHECK(rees_phi(a2, Coweight{1, 0}, 0) == phi_X(a2, Coweight{1, 0}));
  CHECK(rees_phi(a2, Coweight{0, 0}, 3) == ConeAlgebraElement::q_power(a2.ell, 3));
}

TEST_CASE("leading term of phi_X at the coroot sum") {
  for (const auto& name : RootDatum::preset_names()) {
    const Context& c = cached_context(name);
    const Coweight& x0 = c.datum->positive_coroot_sum();
    if (length(*c.datum, x0) > 14) continue;
    auto diff = phi_X(c, x0) - orbit_sum_z(*c.weyl, c.ell, x0);
    for (const auto& [p, coeff] : diff.terms()) CHECK(diff.slack(p) >= 1);
  }
}

TEST_CASE("verify_center on small presets") {
  const Context& a1 = cached_context("A1-adjoint");
  auto r = verify_center(a1, {6, std::nullopt, 1});
  CHECK(r.passed());
  REQUIRE(r.dimensions.size() == 7);
  for (const auto& dim : r.dimensions) {
    CHECK(dim.dominant_count == static_cast<std::size_t>(dim.degree + 1));
    CHECK(dim.invariant_dimension == dim.dominant_count);
  }
  for (const auto& name : {"A1-sc", "A2-adjoint", "GL2"}) {
    auto rep = verify_center(cached_context(name), {6, 4, 1});
    CHECK_MESSAGE(rep.passed(), name);
    for (const auto& e : rep.counterexamples) MESSAGE(e);
  }
}
