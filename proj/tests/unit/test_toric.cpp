#include <doctest.h>

#include <set>

#include "genhecke/errors.hpp"
#include "genhecke/toric.hpp"
#include "generators.hpp"

using namespace genhecke;
using genhecke::testing::cached_context;
using genhecke::testing::Gen;

namespace {

// Primitive subsets by brute force over every subset of rays (bitmasks).
std::set<std::vector<std::size_t>> primitive_oracle(const Fan& fan) {
  std::size_t n = fan.rays().size();
  std::set<std::vector<std::size_t>> out;
  auto members = [&](unsigned mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) s.push_back(i);
    return s;
  };
  for (unsigned mask = 1; mask < (1U << n); ++mask) {
    if (fan.is_face(members(mask))) continue;
    bool all_proper_faces = true;
    for (unsigned sub = (mask - 1) & mask; sub != 0 && all_proper_faces; sub = (sub - 1) & mask)
      all_proper_faces = fan.is_face(members(sub));
    if (all_proper_faces) out.insert(members(mask));
  }
  return out;
}

}  // namespace

TEST_CASE("Weyl chamber fans") {
  auto a1 = weyl_chamber_fan(cached_context("A1-adjoint"));
  CHECK(a1->rays() == std::vector<Coweight>{{1}, {-1}});
  CHECK(a1->maximal_cones().size() == 2);
  auto a1a1 = weyl_chamber_fan(cached_context("A1xA1-adjoint"));
  CHECK(a1a1->rays().size() == 4);
  CHECK(a1a1->maximal_cones().size() == 4);
  auto b2 = weyl_chamber_fan(cached_context("B2-adjoint"));
  CHECK(b2->rays().size() == 8);
  CHECK(b2->maximal_cones().size() == 8);
  for (const auto& name : genhecke::testing::adjoint_presets()) {
    const Context& c = cached_context(name);
    auto fan = weyl_chamber_fan(c);
    CHECK(fan->maximal_cones().size() == c.weyl->order());
    CHECK(fan->is_smooth());
    CHECK(fan->is_complete(8));
  }
  CHECK_THROWS_AS(weyl_chamber_fan(cached_context("GL2")), PreconditionError);
}

TEST_CASE("primitive subsets and SR generators") {
  auto a1 = weyl_chamber_fan(cached_context("A1-adjoint"));
  CHECK(primitive_subsets(*a1) == std::vector<std::vector<std::size_t>>{{0, 1}});
  CHECK(sr_generators(*a1) == std::vector<Monomial>{{1, 1}});
  auto a1a1 = weyl_chamber_fan(cached_context("A1xA1-adjoint"));
  // z1 z3 and z2 z4
  CHECK(sr_generators(*a1a1) == std::vector<Monomial>{{1, 0, 1, 0}, {0, 1, 0, 1}});
  for (const auto& name : genhecke::testing::adjoint_presets()) {
    auto fan = weyl_chamber_fan(cached_context(name));
    auto prims = primitive_subsets(*fan);
    CHECK(std::set<std::vector<std::size_t>>(prims.begin(), prims.end()) == primitive_oracle(*fan));
  }
}

TEST_CASE("convexity") {
  auto a1 = weyl_chamber_fan(cached_context("A1-adjoint"));
  PLFunction zero(a1, {0, 0});
  CHECK(is_convex(zero));
  CHECK_FALSE(is_strictly_convex(zero));
  PLFunction linear(a1, {1, -1});
  CHECK(is_convex(linear));
  CHECK_FALSE(is_strictly_convex(linear));
  CHECK(linear.linear_forms()[0] == linear.linear_forms()[1]);
  PLFunction concave(a1, {-1, -1});
  CHECK_FALSE(is_convex(concave));
  CHECK_THROWS_AS(quantum_sr_generators(concave, 2), PreconditionError);

  Gen gen(21);
  for (const auto& name : genhecke::testing::adjoint_presets()) {
    const Context& c = cached_context(name);
    auto fan = weyl_chamber_fan(c);
    auto ell = PLFunction::length(fan);
    CHECK(is_strictly_convex(*ell));
    CHECK(ell->is_w0_invariant(*c.weyl));
    auto pts = coweights_up_to_length(*c.datum, 6);
    for (const auto& x : pts) CHECK(ell->value(x) == length(*c.datum, x));
    // The local criterion against the pairwise definition.
    std::vector<std::int64_t> vals(fan->rays().size());
    for (auto& v : vals) v = gen.integer(-2, 3);
    PLFunction phi(fan, vals);
    bool convex = is_convex(phi), strict = is_strictly_convex(phi);
    bool pair_convex = true, pair_strict = true;
    for (const auto& x : pts)
      for (const auto& y : pts) {
        std::int64_t lhs = phi.value(x + y), rhs = phi.value(x) + phi.value(y);
        pair_convex = pair_convex && lhs <= rhs;
        bool common = false;
        for (std::size_t cone = 0; cone < fan->maximal_cones().size() && !common; ++cone) {
          auto a = fan->cone_coordinates(cone, x), b = fan->cone_coordinates(cone, y);
          common = std::all_of(a.begin(), a.end(), [](auto v) { return v >= 0; }) &&
                   std::all_of(b.begin(), b.end(), [](auto v) { return v >= 0; });
        }
        if (!common) pair_strict = pair_strict && lhs < rhs;
      }
    CHECK(convex == pair_convex);
    if (convex) CHECK(strict == pair_strict);
  }
}

TEST_CASE("classical presentation") {
  const Context& a1c = cached_context("A1-adjoint");
  auto a1 = weyl_chamber_fan(a1c);
  auto ell = PLFunction::length(a1);
  CHECK(tau(*ell, {1, 1}).empty());
  CHECK(tau_prime(*a1, Coweight{0}) == Monomial{0, 0});
  const Context& a2c = cached_context("A2-adjoint");
  auto a2 = weyl_chamber_fan(a2c);
  Coweight coroot(a2c.datum->simple_coroots().row(0));
  auto m = tau_prime(*a2, coroot);
  Coweight back = Coweight::zero(2);
  std::vector<std::size_t> used;
  for (std::size_t i = 0; i < m.size(); ++i) {
    CHECK(m[i] >= 0);
    if (m[i] > 0) used.push_back(i);
    back += m[i] * a2->rays()[i];
  }
  CHECK(back == coroot);
  CHECK(a2->is_face(used));
  for (const auto& name : genhecke::testing::adjoint_presets()) {
    const Context& c = cached_context(name);
    auto fan = weyl_chamber_fan(c);
    auto phi = PLFunction::length(fan);
    for (const auto& x : coweights_up_to_length(*c.datum, 6))
      CHECK(tau(*phi, tau_prime(*fan, x)) == ClassicalElement{{x, Rational(1)}});
    // same chamber iff common maximal cone
    auto pts = coweights_up_to_length(*c.datum, 6);
    for (const auto& x : pts)
      for (const auto& y : pts) {
        bool common = false;
        for (std::size_t cone = 0; cone < fan->maximal_cones().size() && !common; ++cone) {
          auto a = fan->cone_coordinates(cone, x), b = fan->cone_coordinates(cone, y);
          common = std::all_of(a.begin(), a.end(), [](auto v) { return v >= 0; }) &&
                   std::all_of(b.begin(), b.end(), [](auto v) { return v >= 0; });
        }
        CHECK(common == same_chamber(*c.datum, x, y));
      }
  }
}

TEST_CASE("quantum relations of P1 and P1xP1") {
  auto a1 = weyl_chamber_fan(cached_context("A1-adjoint"));
  auto rel = quantum_sr_generators(*PLFunction::length(a1), 2);
  bool found = false;
  for (const auto& r : rel)
    if (r.b == Monomial{1, 1}) {
      found = true;
      CHECK(r.a == Monomial{0, 0});
      CHECK(r.q_exponent == 2);
    } else if (degree(r.b) == 1) {
      CHECK(r.trivial);
    }
  CHECK(found);
  auto a1a1 = weyl_chamber_fan(cached_context("A1xA1-adjoint"));
  for (const auto& r : quantum_sr_generators(*PLFunction::length(a1a1), 2)) {
    if (r.b == Monomial{1, 0, 1, 0} || r.b == Monomial{0, 1, 0, 1}) {
      CHECK(r.a == Monomial{0, 0, 0, 0});
      CHECK(r.q_exponent == 2);
    }
    if (r.b == Monomial{1, 1, 0, 0}) CHECK(r.trivial);
  }
}

TEST_CASE("quantum presentation round trips") {
  const Context& a1 = cached_context("A1-adjoint");
  auto phi = PLFunction::length(weyl_chamber_fan(a1));
  auto rep = verify_presentation(a1, phi, 6);
  CHECK(rep.passed());
  for (const auto& d : rep.degrees) CHECK(d.slice_dimension == static_cast<std::size_t>(2 * d.degree + 1));
  for (const auto& name : genhecke::testing::adjoint_presets()) {
    const Context& c = cached_context(name);
    auto ell = PLFunction::length(weyl_chamber_fan(c));
    auto r = verify_presentation(c, ell, name == std::string("G2-adjoint") ? 4 : 5);
    CHECK_MESSAGE(r.passed(), name);
    for (const auto& e : r.counterexamples) MESSAGE(e);
    for (std::int64_t k = 0; k <= 4; ++k)
      for (const auto& x : coweights_up_to_length(*c.datum, k))
        CHECK(tau_q(ell, tau_q_prime(*ell, x, k)) == ConeAlgebraElement::monomial(ell, x, k));
  }
  // A convex but not strictly convex φ still presents its cone algebra.
  auto linear = std::make_shared<const PLFunction>(weyl_chamber_fan(a1), std::vector<std::int64_t>{1, -1});
  CHECK(verify_presentation(a1, linear, 4).passed());
}

TEST_CASE("general relations agree with the normal-form rewriting") {
  // Two monomials with the same lattice sum differ by the q-power of their
  // φ-defects.
  Gen gen(31);
  for (const auto& name : genhecke::testing::adjoint_presets()) {
    const Context& c = cached_context(name);
    auto fan = weyl_chamber_fan(c);
    auto ell = PLFunction::length(fan);
    auto rels = quantum_sr_generators(*ell, 3);
    for (int t = 0; t < 40; ++t) {
      const auto& r1 = gen.pick(rels);
      for (const auto& r2 : rels) {
        if (!(r2.a == r1.a)) continue;
        std::int64_t e = r1.q_exponent - r2.q_exponent;
        QuantumMonomial lhs{std::max<std::int64_t>(e, 0), r2.b}, rhs{std::max<std::int64_t>(-e, 0), r1.b};
        CHECK(tau_q(ell, lhs) == tau_q(ell, rhs));
      }
    }
  }
}
