#include <doctest.h>

#include <set>

#include "genhecke/errors.hpp"
#include "generators.hpp"

using namespace genhecke;
using genhecke::testing::cached_context;
using genhecke::testing::Gen;

namespace {

// Independent root closure: reflect the roots (as weights) until nothing new
// appears, using s_a(x) = x - <x, a^> a on X directly.
std::set<IntVector> closure_oracle(const RootDatum& d) {
  std::set<IntVector> roots;
  std::vector<IntVector> todo;
  for (std::size_t i = 0; i < d.semisimple_rank(); ++i) todo.push_back(d.simple_roots().row(i));
  while (!todo.empty()) {
    IntVector x = todo.back();
    todo.pop_back();
    if (!roots.insert(x).second) continue;
    for (std::size_t i = 0; i < d.semisimple_rank(); ++i) {
      IntVector a = d.simple_roots().row(i);
      IntVector ac = d.simple_coroots().row(i);
      std::int64_t c = dot(d.pairing().transpose().apply(x), ac);
      IntVector y = x;
      for (std::size_t j = 0; j < y.size(); ++j) y[j] -= c * a[j];
      todo.push_back(y);
    }
  }
  return roots;
}

// p(x) by literally averaging over W0.
RationalCoweight average_oracle(const WeylGroup& w, const Coweight& x) {
  Coweight sum = Coweight::zero(x.rank());
  for (std::size_t i = 0; i < w.order(); ++i) sum += w.act(i, x);
  return RationalCoweight(sum.coords(), static_cast<std::int64_t>(w.order()));
}

}  // namespace

TEST_CASE("presets have the expected root counts") {
  CHECK(cached_context("A1-adjoint").datum->positive_roots().size() == 1);
  CHECK(cached_context("A2-adjoint").datum->positive_roots().size() == 3);
  CHECK(cached_context("B2-adjoint").datum->positive_roots().size() == 4);
  CHECK(cached_context("G2-adjoint").datum->positive_roots().size() == 6);
  CHECK(cached_context("GL3").datum->positive_roots().size() == 3);
  for (const auto& name : RootDatum::preset_names()) {
    const RootDatum& d = *cached_context(name).datum;
    auto oracle = closure_oracle(d);
    CHECK(oracle.size() == d.roots().size());
    for (const auto& r : d.roots()) CHECK(oracle.count(r.root) == 1);
  }
}

TEST_CASE("A1-adjoint coordinates") {
  const RootDatum& d = *cached_context("A1-adjoint").datum;
  CHECK(d.rank() == 1);
  CHECK(d.simple_roots().row(0) == IntVector{1});
  CHECK(d.simple_coroots().row(0) == IntVector{2});
  CHECK(d.fundamental_coweights()[0] == RationalCoweight(Coweight{1}));
  CHECK(d.is_adjoint());
}

TEST_CASE("A2 positive roots") {
  const RootDatum& d = *cached_context("A2-adjoint").datum;
  std::set<IntVector> pos;
  for (auto i : d.positive_roots()) pos.insert(d.roots()[i].root);
  CHECK(pos == std::set<IntVector>{{1, 0}, {0, 1}, {1, 1}});
}

TEST_CASE("custom data") {
  auto a2 = RootDatum::custom(IntMatrix::identity(2), IntMatrix::from_rows({{2, -1}, {-1, 2}}),
                              IntMatrix::identity(2));
  const RootDatum& p = *cached_context("A2-adjoint").datum;
  REQUIRE(a2.roots().size() == p.roots().size());
  for (std::size_t i = 0; i < a2.roots().size(); ++i) {
    CHECK(a2.roots()[i].root == p.roots()[i].root);
    CHECK(a2.roots()[i].coroot == p.roots()[i].coroot);
  }
  auto a1 = RootDatum::custom(IntMatrix::identity(1), IntMatrix::from_rows({{2}}), IntMatrix::identity(1));
  CHECK(a1.roots().size() == 2);
  CHECK_THROWS_AS(RootDatum::custom(IntMatrix::identity(2), IntMatrix::from_rows({{2, -2}, {-2, 2}}),
                                    IntMatrix::identity(2)),
                  InvalidDatum);
  CHECK_THROWS_AS(RootDatum::custom(IntMatrix::identity(1), IntMatrix::from_rows({{3}}), IntMatrix::identity(1)),
                  InvalidDatum);
  CHECK_THROWS_AS(RootDatum::custom(IntMatrix::identity(1), IntMatrix::from_rows({{2}}),
                                    IntMatrix::from_rows({{2}})),
                  InvalidDatum);
  CHECK_THROWS_AS(RootDatum::preset("E8"), UnknownPreset);
}

TEST_CASE("length examples") {
  const RootDatum& a1 = *cached_context("A1-adjoint").datum;
  const RootDatum& a2 = *cached_context("A2-adjoint").datum;
  CHECK(length(a1, Coweight{1}) == 1);
  CHECK(length(a2, Coweight{1, 0}) == 2);
  CHECK(length(a2, Coweight{0, 0}) == 0);
  CHECK(length(a2, RationalCoweight(IntVector{1, 0}, 2)) == make_rational(1));
}

TEST_CASE("fundamental coweights are dual to the simple roots") {
  for (const auto& name : RootDatum::preset_names()) {
    const RootDatum& d = *cached_context(name).datum;
    for (std::size_t i = 0; i < d.semisimple_rank(); ++i)
      for (std::size_t j = 0; j < d.semisimple_rank(); ++j)
        CHECK(d.pair(i, d.fundamental_coweights()[j]) == (i == j ? 1 : 0));
    for (std::size_t i = 0; i < d.semisimple_rank(); ++i) CHECK(d.pair(i, d.positive_coroot_sum()) == 2);
  }
}

TEST_CASE("invariant projection agrees with W0-averaging") {
  Gen gen(11);
  for (const auto& name : RootDatum::preset_names()) {
    const Context& c = cached_context(name);
    for (int t = 0; t < 40; ++t) {
      Coweight x = gen.coweight(c.datum->rank(), 4);
      auto proj = invariant_projection(*c.datum, x);
      CHECK(proj.p_part == average_oracle(*c.weyl, x));
      CHECK(proj.p_part + proj.q_part == RationalCoweight(x));
      CHECK(in_coweight_lattice_lambda(*c.datum, proj.q_part));
      for (std::size_t w = 0; w < c.weyl->order(); ++w)
        CHECK(invariant_projection(*c.datum, c.weyl->act(w, x)).p_part == proj.p_part);
    }
  }
  const RootDatum& gl2 = *cached_context("GL2").datum;
  auto proj = invariant_projection(gl2, Coweight{1, 0});
  CHECK(proj.p_part == RationalCoweight(IntVector{1, 1}, 2));
  CHECK(proj.q_part == RationalCoweight(IntVector{1, -1}, 2));
  CHECK(invariant_projection(*cached_context("A2-adjoint").datum, Coweight{3, -1}).p_part.is_zero());
}

TEST_CASE("dominant decomposition") {
  const RootDatum& a1 = *cached_context("A1-adjoint").datum;
  auto dd = dominant_decomposition(a1, Coweight{-1});
  CHECK(dd.plus == Coweight{1});
  CHECK(dd.minus == Coweight{2});
  CHECK(dd.multiple == 1);
  const RootDatum& a2 = *cached_context("A2-adjoint").datum;
  auto d2 = dominant_decomposition(a2, Coweight{-1, 0});
  CHECK(d2.multiple == 1);
  CHECK(d2.plus == a2.positive_coroot_sum() - Coweight{1, 0});
  CHECK(is_dominant(a2, d2.plus));
  Gen gen(5);
  for (const auto& name : RootDatum::preset_names()) {
    const RootDatum& d = *cached_context(name).datum;
    for (int t = 0; t < 50; ++t) {
      Coweight x = gen.coweight(d.rank(), 5);
      auto dec = dominant_decomposition(d, x);
      CHECK(is_dominant(d, dec.plus));
      CHECK(dec.plus - dec.minus == x);
      CHECK(dec.minus == dec.multiple * d.positive_coroot_sum());
      if (dec.multiple > 0) CHECK_FALSE(is_dominant(d, x + (dec.multiple - 1) * d.positive_coroot_sum()));
    }
  }
}

TEST_CASE("length is W0-invariant and subadditive with the sign criterion") {
  Gen gen(3);
  for (const auto& name : RootDatum::preset_names()) {
    const Context& c = cached_context(name);
    const RootDatum& d = *c.datum;
    for (const auto& x : coweights_up_to_length(d, 6)) {
      auto l = length(d, x);
      for (std::size_t w = 0; w < c.weyl->order(); ++w) CHECK(length(d, c.weyl->act(w, x)) == l);
    }
    for (int t = 0; t < 100; ++t) {
      Coweight a = gen.coweight(d.rank(), 3), b = gen.coweight(d.rank(), 3);
      bool compatible = true;
      for (auto i : d.positive_roots()) compatible = compatible && d.pair(i, a) * d.pair(i, b) >= 0;
      CHECK(length(d, a + b) <= length(d, a) + length(d, b));
      CHECK((length(d, a + b) == length(d, a) + length(d, b)) == compatible);
    }
  }
}

TEST_CASE("coweight enumeration is complete for semisimple data") {
  const RootDatum& d = *cached_context("B2-adjoint").datum;
  auto pts = coweights_up_to_length(d, 5);
  std::set<Coweight> got(pts.begin(), pts.end());
  std::size_t brute = 0;
  for (std::int64_t a = -10; a <= 10; ++a)
    for (std::int64_t b = -10; b <= 10; ++b)
      if (length(d, Coweight{a, b}) <= 5) {
        ++brute;
        CHECK(got.count(Coweight{a, b}) == 1);
      }
  CHECK(brute == got.size());
  // A1: dominant elements of length <= k are 0..k.
  CHECK(dominant_coweights_up_to_length(*cached_context("A1-adjoint").datum, 6).size() == 7);
}
