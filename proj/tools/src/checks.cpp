#include "genhecke/tools/checks.hpp"

#include <algorithm>
#include <chrono>
#include <iterator>
#include <map>
#include <mutex>
#include <random>

#include "genhecke/center.hpp"
#include "genhecke/errors.hpp"
#include "genhecke/toric.hpp"

namespace genhecke::tools {

namespace {

const std::vector<std::string> kAllPresets{"A1-adjoint", "A1-sc", "A1xA1-adjoint", "A2-adjoint",
                                           "B2-adjoint", "G2-adjoint", "GL2",   "GL3"};
const std::vector<std::string> kAdjointPresets{"A1-adjoint", "A1xA1-adjoint", "A2-adjoint", "B2-adjoint",
                                               "G2-adjoint"};

void fail(CriterionResult& r, const std::string& what) {
  if (r.failures.size() < 5) r.failures.push_back(what);
  r.passed = false;
}

LaurentPolynomial q_power(std::int64_t e) { return LaurentPolynomial::monomial(static_cast<int>(e)); }

void theorem(CriterionResult& r) {
  for (const auto& name : kAllPresets) {
    const Context& c = preset_context(name);
    CenterOptions opt;
    opt.max_degree = name == "GL3" ? 6 : 8;
    auto rep = verify_center(c, opt);
    json dims = json::array();
    for (const auto& d : rep.dimensions) dims.push_back({d.degree, d.dominant_count, d.invariant_dimension, d.image_rank});
    r.details[name] = {{"max_degree", opt.max_degree}, {"passed", rep.passed()}, {"dimensions", dims}};
    for (const auto& e : rep.counterexamples) fail(r, name + ": " + e);
    if (!rep.passed() && rep.counterexamples.empty()) fail(r, name + ": center verification failed");
  }
}

void centrality(CriterionResult& r) {
  for (const auto& name : kAllPresets) {
    const Context& c = preset_context(name);
    CenterOptions opt;
    opt.max_degree = 4;
    opt.centrality_degree = 4;
    auto rep = verify_center(c, opt);
    r.details[name] = rep.hecke_centrality;
    if (!rep.hecke_centrality) fail(r, name + ": " + rep.counterexamples.front());
  }
}

void e_elements(CriterionResult& r) {
  for (const auto& name : kAllPresets) {
    const Context& c = preset_context(name);
    if (c.datum->rank() > 2) continue;
    const HeckeAlgebra& H = *c.hecke;
    const AffineWeylGroup& g = *c.affine;
    const RootDatum& d = *c.datum;
    auto pts = coweights_up_to_length(d, 6);
    std::size_t pairs = 0;
    for (const auto& x : pts) {
      const auto& e = H.E_element(x);
      auto tx = g.translation(x);
      auto lx = static_cast<std::size_t>(length(d, x));
      if (!e.is_integral()) fail(r, name + ": E" + to_string(x) + " not integral");
      if (!(e.coefficient(tx) == LaurentPolynomial(1))) fail(r, name + ": E" + to_string(x) + " leading coefficient");
      for (const auto& [w, coeff] : e.terms())
        if (!(w == tx) && g.length(w) >= lx) fail(r, name + ": E" + to_string(x) + " not triangular");
      if (is_dominant(d, x) && !(e == H.basis(tx))) fail(r, name + ": E" + to_string(x) + " != T_x for dominant x");
      auto dec = dominant_decomposition(d, x);
      if (!(H.E_element_with(x, dec.minus + d.positive_coroot_sum()) == e))
        fail(r, name + ": E" + to_string(x) + " depends on the decomposition");
      for (const auto& y : pts) {
        if (length(d, x) + length(d, y) > 6 || y < x) continue;
        ++pairs;
        auto shift = length(d, x) + length(d, y) - length(d, x + y);
        if (!(H.multiply(e, H.E_element(y)) == q_power(shift) * H.E_element(x + y)))
          fail(r, name + ": product law fails for " + to_string(x) + ", " + to_string(y));
      }
    }
    r.details[name] = {{"coweights", pts.size()}, {"product_pairs", pairs}};
  }
}

void hecke_soundness(CriterionResult& r, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto q2 = q_power(2);
  for (const auto& name : kAllPresets) {
    const Context& c = preset_context(name);
    const HeckeAlgebra& H = *c.hecke;
    const AffineWeylGroup& g = *c.affine;
    for (std::size_t i = 0; i < g.simple_roots().size(); ++i) {
      auto Ts = H.basis(g.simple_reflection(i));
      if (!(H.multiply(Ts, Ts) == q2 * H.unit() + (q2 - LaurentPolynomial(1)) * Ts))
        fail(r, name + ": quadratic relation fails for s" + std::to_string(i));
    }
    auto elems = g.elements_up_to_length(4, 1);
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    for (int t = 0; t < 100; ++t) {
      auto a = H.basis(elems[pick(rng)]), b = H.basis(elems[pick(rng)]), e = H.basis(elems[pick(rng)]);
      if (!(H.multiply(H.multiply(a, b), e) == H.multiply(a, H.multiply(b, e))))
        fail(r, name + ": associativity fails on triple " + std::to_string(t));
    }
    for (const auto& w : elems) {
      auto inv = H.basis_inverse(w);
      if (!(H.multiply(H.basis(w), inv) == H.unit()) || !(H.multiply(inv, H.basis(w)) == H.unit()))
        fail(r, name + ": basis_inverse does not round-trip");
    }
    r.details[name] = {{"simple_reflections", g.simple_roots().size()}, {"triples", 100}, {"inverses", elems.size()}};
  }
}

void orbits(CriterionResult& r) {
  for (const auto& name : kAllPresets) {
    const Context& c = preset_context(name);
    for (const auto& x : coweights_up_to_length(*c.datum, 6))
      if (orbit(*c.weyl, x).size() * stabilizer_order(*c.weyl, x) != c.weyl->order())
        fail(r, name + ": orbit-stabilizer fails at " + to_string(x));
  }
  for (const auto& name : kAdjointPresets) {
    const Context& c = preset_context(name);
    const RootDatum& d = *c.datum;
    const WeylGroup& W = *c.weyl;
    auto pts = coweights_up_to_length(d, 6);
    std::size_t uniqueness = 0, pairs = 0;
    for (const auto& x : pts) {
      auto orb = orbit(W, x);
      auto n = std::count_if(orb.begin(), orb.end(), [&](const Coweight& y) { return is_dominant(d, y); });
      if (n != 1) fail(r, name + ": orbit of " + to_string(x) + " meets X+ " + std::to_string(n) + " times");
      ++uniqueness;
    }
    auto dom = dominant_coweights_up_to_length(d, 6);
    for (const auto& l1 : dom)
      for (const auto& l2 : dom) {
        ++pairs;
        std::map<Coweight, int> hits;
        auto o1 = orbit(W, l1), o2 = orbit(W, l2);
        for (const auto& m1 : o1)
          for (const auto& m2 : o2)
            if (same_chamber_by_search(W, m1, m2)) ++hits[m1 + m2];
        auto target = orbit(W, l1 + l2);
        bool bijective = hits.size() == target.size();
        for (const auto& y : target) bijective = bijective && hits[y] == 1;
        if (!bijective) fail(r, name + ": sum map not bijective for " + to_string(l1) + ", " + to_string(l2));
        auto s1 = stabilizer(W, l1), s2 = stabilizer(W, l2);
        std::vector<std::size_t> inter;
        std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(inter));
        if (inter != stabilizer(W, l1 + l2)) fail(r, name + ": stabilizer intersection fails");
      }
    r.details[name] = {{"orbits", uniqueness}, {"dominant_pairs", pairs}};
  }
}

void toric(CriterionResult& r) {
  for (const auto& name : kAdjointPresets) {
    const Context& c = preset_context(name);
    auto fan = weyl_chamber_fan(c);
    auto ell = PLFunction::length(fan);
    if (!fan->is_smooth()) fail(r, name + ": fan not smooth");
    if (!fan->is_complete(8)) fail(r, name + ": fan not complete");
    std::size_t classical = 0, quantum = 0;
    for (const auto& x : coweights_up_to_length(*c.datum, 6)) {
      ++classical;
      if (!(tau(*ell, tau_prime(*fan, x)) == ClassicalElement{{x, Rational(1)}}))
        fail(r, name + ": tau(tau'(e^" + to_string(x) + ")) != e^x");
    }
    for (std::int64_t k = 0; k <= 6; ++k)
      for (const auto& x : coweights_up_to_length(*c.datum, k)) {
        ++quantum;
        if (!(tau_q(ell, tau_q_prime(*ell, x, k)) == ConeAlgebraElement::monomial(ell, x, k)))
          fail(r, name + ": tau_q round trip fails at (" + to_string(x) + ", " + std::to_string(k) + ")");
      }
    auto rep = verify_presentation(c, ell, name == "G2-adjoint" ? 4 : 6);
    for (const auto& e : rep.counterexamples) fail(r, name + ": " + e);
    if (!rep.passed() && rep.counterexamples.empty()) fail(r, name + ": presentation check failed");
    r.details[name] = {{"rays", fan->rays().size()},
                       {"maximal_cones", fan->maximal_cones().size()},
                       {"sr_generators", sr_generators(*fan).size()},
                       {"classical_round_trips", classical},
                       {"quantum_round_trips", quantum},
                       {"presentation_degree", rep.max_degree}};
  }
  auto expect_relation = [&](const std::string& name, const Monomial& b, std::int64_t e) {
    const Context& c = preset_context(name);
    auto rels = quantum_sr_generators(*PLFunction::length(weyl_chamber_fan(c)), 2);
    auto it = std::find_if(rels.begin(), rels.end(), [&](const QuantumRelation& q) { return q.b == b; });
    Monomial one(b.size(), 0);
    if (it == rels.end() || !(it->a == one) || it->q_exponent != e)
      fail(r, name + ": expected " + to_string(b) + " = q^" + std::to_string(e));
    else
      r.details["relations"].push_back(name + ": " + to_string(b) + " = q^" + std::to_string(e));
  };
  r.details["relations"] = json::array();
  expect_relation("A1-adjoint", {1, 1}, 2);
  expect_relation("A1xA1-adjoint", {1, 0, 1, 0}, 2);
  expect_relation("A1xA1-adjoint", {0, 1, 0, 1}, 2);
}

void involutions(CriterionResult& r) {
  const Context& a1 = preset_context("A1-adjoint");
  auto gens = a1.affine->omega_generators();
  if (gens.size() != 1 || a1.affine->epsilon(gens[0]) != -1) fail(r, "A1-adjoint: epsilon(u) != -1");
  for (const auto& name : kAllPresets) {
    const Context& c = preset_context(name);
    const HeckeAlgebra& H = *c.hecke;
    const AffineWeylGroup& g = *c.affine;
    for (const auto& w : g.affine_elements_up_to_length(4))
      if (g.epsilon(w) != 1) fail(r, name + ": epsilon nontrivial on W_aff");
    auto elems = g.elements_up_to_length(4, 1);
    std::vector<HeckeElement> basis, iotas, js;
    for (const auto& w : elems) {
      int e = g.epsilon(w);
      if (e != 1 && e != -1) fail(r, name + ": epsilon not +-1");
      basis.push_back(H.basis(w));
      iotas.push_back(H.iota(basis.back()));
      js.push_back(H.j_involution(basis.back()));
      if (!(H.iota(iotas.back()) == basis.back())) fail(r, name + ": iota^2 != id");
      if (!(H.j_involution(js.back()) == basis.back())) fail(r, name + ": j^2 != id");
    }
    std::size_t pairs = 0;
    for (std::size_t a = 0; a < elems.size(); ++a)
      for (std::size_t b = 0; b < elems.size(); ++b) {
        ++pairs;
        if (g.epsilon(g.multiply(elems[a], elems[b])) != g.epsilon(elems[a]) * g.epsilon(elems[b]))
          fail(r, name + ": epsilon not multiplicative");
        auto ab = H.multiply(basis[a], basis[b]);
        if (!(H.iota(ab) == H.multiply(iotas[a], iotas[b]))) fail(r, name + ": iota not multiplicative");
        if (!(H.j_involution(ab) == H.multiply(js[a], js[b]))) fail(r, name + ": j not multiplicative");
      }
    r.details[name] = {{"elements", elems.size()}, {"pairs", pairs}};
  }
}

void specializations(CriterionResult& r) {
  for (const auto& name : kAllPresets) {
    const Context& c = preset_context(name);
    const RootDatum& d = *c.datum;
    auto pts = coweights_up_to_length(d, 6);
    std::size_t pairs = 0;
    for (const auto& x : pts) {
      auto tx = ConeAlgebraElement::tight(c.ell, x);
      for (const auto& y : pts) {
        ++pairs;
        auto prod = specialize(multiply(tx, ConeAlgebraElement::tight(c.ell, y)), Specialization::QToZero);
        std::map<Coweight, Rational> expected;
        if (same_chamber_by_search(*c.weyl, x, y)) expected[x + y] = 1;
        if (prod != expected) fail(r, name + ": q=0 product of " + to_string(x) + ", " + to_string(y));
      }
    }
    SparseEliminator<Coweight> elim;
    std::size_t basis = 0;
    for (const auto& lam : dominant_coweights_up_to_length(d, 8)) {
      ++basis;
      if (!elim.insert(specialize(phi_X(c, lam), Specialization::QToOne)))
        fail(r, name + ": q=1 image of " + to_string(lam) + " is dependent");
    }
    r.details[name] = {{"q0_pairs", pairs}, {"q1_basis", basis}};
  }
}

const std::map<int, std::pair<std::string, double>>& criterion_info() {
  static const std::map<int, std::pair<std::string, double>> info{
      {1, {"center isomorphism at bounded degree", 300}},
      {2, {"centrality in the Hecke algebra", 120}},
      {3, {"E-element certification", 0}},
      {4, {"Hecke algebra soundness", 0}},
      {5, {"orbit combinatorics", 0}},
      {6, {"toric presentations", 0}},
      {7, {"involutions", 0}},
      {8, {"specializations", 0}},
      {9, {"determinism", 0}},
  };
  return info;
}

}  // namespace

const Context& preset_context(const std::string& name) {
  static std::mutex mutex;
  static std::map<std::string, Context> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, make_context(name)).first;
  return it->second;
}

CriterionResult run_criterion(int id, std::uint64_t seed) {
  auto info = criterion_info().find(id);
  if (info == criterion_info().end() || id == 9) throw PreconditionError("no criterion " + std::to_string(id));
  CriterionResult r;
  r.id = id;
  r.title = info->second.first;
  auto start = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: theorem(r); break;
      case 2: centrality(r); break;
      case 3: e_elements(r); break;
      case 4: hecke_soundness(r, seed); break;
      case 5: orbits(r); break;
      case 6: toric(r); break;
      case 7: involutions(r); break;
      case 8: specializations(r); break;
    }
  } catch (const Error& e) {
    fail(r, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  double limit = info->second.second;
  if (limit > 0 && r.seconds > limit) fail(r, "runtime " + std::to_string(r.seconds) + " s over the limit");
  return r;
}

const std::set<std::string>& check_groups() {
  static const std::set<std::string> groups{"weyl", "hecke", "center", "toric"};
  return groups;
}

std::vector<int> criteria_for(const std::set<std::string>& groups) {
  std::set<int> ids;
  for (const auto& g : groups) {
    if (g == "weyl") ids.insert(5);
    else if (g == "hecke") ids.insert({3, 4, 7});
    else if (g == "center") ids.insert({1, 2, 8});
    else if (g == "toric") ids.insert(6);
    else throw PreconditionError("unknown check group " + g);
  }
  return {ids.begin(), ids.end()};
}

bool VerifyAllResult::passed() const {
  return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& r) { return r.passed; });
}

VerifyAllResult verify_all(std::uint64_t seed, const std::set<std::string>& groups) {
  auto ids = criteria_for(groups);
  VerifyAllResult out;
  for (int id : ids) out.criteria.push_back(run_criterion(id, seed));
  CriterionResult det;
  det.id = 9;
  det.title = criterion_info().at(9).first;
  auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    auto again = run_criterion(ids[i], seed);
    if (to_json(again).dump() != to_json(out.criteria[i]).dump())
      fail(det, "criterion " + std::to_string(ids[i]) + " differs on rerun");
  }
  det.details = {{"rerun", ids}};
  det.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.criteria.push_back(det);
  return out;
}

json to_json(const CriterionResult& r) {
  return {{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"details", r.details}, {"failures", r.failures}};
}

json to_json(const VerifyAllResult& r, std::uint64_t seed) {
  json crit = json::array();
  for (const auto& c : r.criteria) crit.push_back(to_json(c));
  return {{"seed", seed}, {"criteria", crit}, {"passed", r.passed()}};
}

}  // namespace genhecke::tools
