#include "genhecke/tools/serialize.hpp"

namespace genhecke::tools {

json to_json(const Rational& r) { return to_string(r); }

json to_json(const IntVector& v) { return json(std::vector<std::int64_t>(v.begin(), v.end())); }

json to_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

json to_json(const Coweight& v) { return to_json(v.coords()); }

json to_json(const RationalCoweight& v) {
  json out = json::array();
  for (std::size_t i = 0; i < v.rank(); ++i) out.push_back(to_json(v[i]));
  return out;
}

json to_json(const RootDatum& d) {
  return {{"rank", d.rank()},
          {"simple_roots", to_json(d.simple_roots())},
          {"simple_coroots", to_json(d.simple_coroots())},
          {"pairing", to_json(d.pairing())}};
}

json to_json(const WeylElement& w) { return {{"word", w.word}, {"matrix", to_json(w.coweight_action)}}; }

json to_json(const LaurentPolynomial& p) {
  json out = json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = to_json(c);
  return out;
}

json to_json(const WeylGroup& weyl, const HeckeElement& h) {
  json out = json::array();
  for (const auto& [w, c] : h.sorted_terms())
    out.push_back({{"w0_word", weyl.element(w.finite).word},
                   {"translation", to_json(w.translation)},
                   {"coeff", to_json(c)}});
  return out;
}

json to_json(const ConeAlgebraElement& a) {
  json phi = "length";
  if (const auto* pl = dynamic_cast<const PLFunction*>(&a.phi())) phi = {{"ray_values", pl->ray_values()}};
  json terms = json::array();
  for (const auto& [pt, c] : a.terms()) terms.push_back({{"x", to_json(pt.x)}, {"k", pt.k}, {"c", to_json(c)}});
  return {{"phi", phi}, {"terms", terms}};
}

json to_json(const CenterReport& r) {
  json dims = json::array();
  for (const auto& d : r.dimensions)
    dims.push_back({{"degree", d.degree},
                    {"dominant_count", d.dominant_count},
                    {"invariant_dimension", d.invariant_dimension},
                    {"image_rank", d.image_rank}});
  return {{"preset", r.preset},
          {"max_degree", r.max_degree},
          {"centrality_degree", r.centrality_degree},
          {"central_radius", r.central_radius},
          {"dimensions", dims},
          {"independence_and_span", r.independence_and_span},
          {"graded_triangularity", r.graded_triangularity},
          {"multiplicativity", r.multiplicativity},
          {"hecke_centrality", r.hecke_centrality},
          {"coroot_reduction", r.coroot_reduction},
          {"counterexamples", r.counterexamples},
          {"passed", r.passed()}};
}

json to_json(const Fan& fan) {
  json rays = json::array();
  for (const auto& v : fan.rays()) rays.push_back(to_json(v));
  return {{"rays", rays}, {"maximal_cones", fan.maximal_cones()}};
}

std::string relation_text(const QuantumRelation& r) {
  std::string rhs = r.q_exponent == 0 ? "" : "q^" + std::to_string(r.q_exponent);
  if (degree(r.a) > 0 || rhs.empty()) rhs += (rhs.empty() ? "" : "*") + to_string(r.a);
  return to_string(r.b) + " = " + rhs;
}

json to_json(const QuantumRelation& r) {
  return {{"b", r.b}, {"a", r.a}, {"q_exponent", r.q_exponent}, {"trivial", r.trivial},
          {"text", relation_text(r)}};
}

json to_json(const PresentationReport& r) {
  json degrees = json::array();
  for (const auto& d : r.degrees)
    degrees.push_back({{"degree", d.degree}, {"slice_dimension", d.slice_dimension}, {"normal_forms", d.normal_forms}});
  return {{"preset", r.preset},
          {"max_degree", r.max_degree},
          {"degrees", degrees},
          {"fan_smooth", r.fan_smooth},
          {"fan_complete", r.fan_complete},
          {"primitive_subsets_valid", r.primitive_subsets_valid},
          {"convex", r.convex},
          {"strictly_convex", r.strictly_convex},
          {"classical_round_trip", r.classical_round_trip},
          {"quantum_round_trip", r.quantum_round_trip},
          {"normal_forms_independent", r.normal_forms_independent},
          {"relations_hold", r.relations_hold},
          {"classical_limit", r.classical_limit},
          {"counterexamples", r.counterexamples},
          {"passed", r.passed()}};
}

}  // namespace genhecke::tools
