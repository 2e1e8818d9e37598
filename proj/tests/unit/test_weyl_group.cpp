#include <doctest.h>

#include <map>
#include <set>

#include "generators.hpp"

using namespace genhecke;
using genhecke::testing::cached_context;
using genhecke::testing::Gen;

TEST_CASE("group orders") {
  std::map<std::string, std::size_t> expected{{"A1-adjoint", 2}, {"A1-sc", 2}, {"A1xA1-adjoint", 4},
                                              {"A2-adjoint", 6}, {"B2-adjoint", 8}, {"G2-adjoint", 12},
                                              {"GL2", 2},        {"GL3", 6}};
  for (const auto& [name, n] : expected) CHECK(cached_context(name).weyl->order() == n);
}

TEST_CASE("words, matrices and lengths are consistent") {
  for (const auto& name : RootDatum::preset_names()) {
    const WeylGroup& w = *cached_context(name).weyl;
    std::set<IntMatrix> seen;
    for (std::size_t i = 0; i < w.order(); ++i) {
      const auto& e = w.element(i);
      CHECK(seen.insert(e.coweight_action).second);
      IntMatrix m = IntMatrix::identity(w.datum().rank());
      for (auto s : e.word) m = m * w.element(w.simple_reflection(s)).coweight_action;
      CHECK(m == e.coweight_action);
      CHECK(e.length == e.word.size());
      CHECK(w.inversion_count(i) == e.length);
      CHECK(w.multiply(i, w.inverse(i)) == 0);
      // closed under generators
      for (std::size_t s = 0; s < w.datum().semisimple_rank(); ++s)
        CHECK(w.multiply(i, w.simple_reflection(s)) < w.order());
    }
  }
}

TEST_CASE("orbit examples") {
  const WeylGroup& a1 = *cached_context("A1-adjoint").weyl;
  CHECK(orbit(a1, Coweight{1}) == std::vector<Coweight>{{-1}, {1}});
  const WeylGroup& a2 = *cached_context("A2-adjoint").weyl;
  CHECK(orbit(a2, Coweight{1, 0}).size() == 3);
  CHECK(stabilizer_order(a2, Coweight{1, 0}) == 2);
  CHECK(orbit(a2, Coweight{0, 0}).size() == 1);
  CHECK(stabilizer_order(a2, Coweight{0, 0}) == 6);
}

TEST_CASE("orbit-stabilizer and dominant representatives") {
  for (const auto& name : RootDatum::preset_names()) {
    const Context& c = cached_context(name);
    for (const auto& x : coweights_up_to_length(*c.datum, 8)) {
      auto orb = orbit(*c.weyl, x);
      CHECK(orb.size() * stabilizer_order(*c.weyl, x) == c.weyl->order());
      auto rep = dominant_representative(*c.weyl, x);
      CHECK(is_dominant(*c.datum, rep.dominant));
      CHECK(c.weyl->act(rep.element, x) == rep.dominant);
      std::size_t dominant_count = 0;
      for (const auto& y : orb) {
        if (is_dominant(*c.datum, y)) ++dominant_count;
        CHECK(dominant_representative(*c.weyl, y).dominant == rep.dominant);
      }
      CHECK(dominant_count == 1);
    }
  }
  const WeylGroup& a1 = *cached_context("A1-adjoint").weyl;
  CHECK(dominant_representative(a1, Coweight{-3}).dominant == Coweight{3});
  const Context& a2 = cached_context("A2-adjoint");
  Coweight s1w1 = Coweight{1, 0} - Coweight(a2.datum->simple_coroots().row(0));
  CHECK(dominant_representative(*a2.weyl, s1w1).dominant == Coweight{1, 0});
}

TEST_CASE("same chamber criteria agree") {
  const RootDatum& a1 = *cached_context("A1-adjoint").datum;
  CHECK(same_chamber(a1, Coweight{1}, Coweight{2}));
  CHECK_FALSE(same_chamber(a1, Coweight{1}, Coweight{-1}));
  Gen gen(7);
  for (const auto& name : RootDatum::preset_names()) {
    const Context& c = cached_context(name);
    auto pts = coweights_up_to_length(*c.datum, 4);
    for (int t = 0; t < 300; ++t) {
      const auto& a = gen.pick(pts);
      const auto& b = gen.pick(pts);
      CHECK(same_chamber(*c.datum, a, b) == same_chamber_by_search(*c.weyl, a, b));
    }
  }
}

TEST_CASE("sum map on same-chamber orbit pairs is a bijection") {
  for (const auto& name : genhecke::testing::adjoint_presets()) {
    const Context& c = cached_context(name);
    auto dom = dominant_coweights_up_to_length(*c.datum, 6);
    for (const auto& l1 : dom)
      for (const auto& l2 : dom) {
        if (length(*c.datum, l1) + length(*c.datum, l2) > 6) continue;
        std::map<Coweight, int> hits;
        for (const auto& m1 : orbit(*c.weyl, l1))
          for (const auto& m2 : orbit(*c.weyl, l2))
            if (same_chamber(*c.datum, m1, m2)) ++hits[m1 + m2];
        auto target = orbit(*c.weyl, l1 + l2);
        CHECK(hits.size() == target.size());
        for (const auto& y : target) CHECK(hits[y] == 1);
        // Stab(l1 + l2) = Stab(l1) ∩ Stab(l2)
        auto s1 = stabilizer(*c.weyl, l1), s2 = stabilizer(*c.weyl, l2), s12 = stabilizer(*c.weyl, l1 + l2);
        std::vector<std::size_t> inter;
        std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(inter));
        CHECK(inter == s12);
      }
  }
}
