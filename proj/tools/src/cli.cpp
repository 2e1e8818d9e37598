#include "genhecke/tools/cli.hpp"

#include <CLI11.hpp>
#include <iomanip>
#include <sstream>

#include "genhecke/center.hpp"
#include "genhecke/errors.hpp"
#include "genhecke/toric.hpp"
#include "genhecke/tools/checks.hpp"
#include "genhecke/tools/serialize.hpp"

namespace genhecke::tools {

namespace {

struct RunConfig {
  std::string preset;
  std::int64_t max_degree = 0;  // 0: subcommand default
  std::string format = "text";
  std::uint64_t seed = 0;
  std::vector<std::string> checks;
  std::vector<std::string> coweights;
  std::string pl = "length";
  std::vector<std::int64_t> pl_values;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

Coweight parse_coweight(const std::string& text, std::size_t rank) {
  IntVector coords;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      coords.push_back(std::stoll(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw UsageError("bad coweight '" + text + "'");
    }
  }
  if (coords.size() != rank)
    throw UsageError("coweight '" + text + "' has " + std::to_string(coords.size()) + " coordinates, expected " +
                     std::to_string(rank));
  return Coweight(coords);
}

std::vector<Coweight> coweights(const RunConfig& cfg, const Context& c, std::size_t at_least) {
  std::vector<Coweight> out;
  for (const auto& t : cfg.coweights) out.push_back(parse_coweight(t, c.datum->rank()));
  if (out.size() < at_least) throw UsageError("expected at least " + std::to_string(at_least) + " --coweight");
  return out;
}

std::string hecke_text(const WeylGroup& weyl, const HeckeElement& h) {
  if (h.is_zero()) return "0";
  std::string s;
  for (const auto& [w, c] : h.sorted_terms()) {
    if (!s.empty()) s += " + ";
    std::string word;
    for (auto i : weyl.element(w.finite).word) word += (word.empty() ? "" : " ") + std::to_string(i);
    s += "(" + c.to_string() + ")*T[w0=(" + word + "),t=" + to_string(w.translation) + "]";
  }
  return s;
}

void emit(std::ostream& out, const RunConfig& cfg, const json& j, const std::string& text) {
  if (cfg.format == "json")
    out << j.dump(2) << "\n";
  else
    out << text;
}

std::shared_ptr<const PLFunction> pl_function(const RunConfig& cfg, const Context& c) {
  auto fan = weyl_chamber_fan(c);
  if (cfg.pl_values.empty()) {
    if (cfg.pl != "length") throw UsageError("--pl accepts only 'length'; use --pl-values for other functions");
    return PLFunction::length(fan);
  }
  if (cfg.pl_values.size() != fan->rays().size())
    throw UsageError("--pl-values needs " + std::to_string(fan->rays().size()) + " values");
  return std::make_shared<const PLFunction>(fan, cfg.pl_values);
}

int datum_show(const RunConfig& cfg, std::ostream& out) {
  const Context& c = preset_context(cfg.preset);
  const RootDatum& d = *c.datum;
  json j = to_json(d);
  j["preset"] = d.name();
  j["roots"] = d.roots().size();
  j["weyl_order"] = c.weyl->order();
  j["adjoint"] = d.is_adjoint();
  j["cartan"] = to_json(d.cartan());
  std::ostringstream t;
  t << d.name() << ": rank " << d.rank() << ", semisimple rank " << d.semisimple_rank() << ", " << d.roots().size()
    << " roots, |W0| = " << c.weyl->order() << (d.is_adjoint() ? ", adjoint" : "") << "\n";
  for (std::size_t i = 0; i < d.semisimple_rank(); ++i)
    t << "  alpha" << i + 1 << " = " << to_string(Coweight(d.simple_roots().row(i))) << "  coroot "
      << to_string(Coweight(d.simple_coroots().row(i))) << "\n";
  emit(out, cfg, j, t.str());
  return 0;
}

int weyl_enumerate(const RunConfig& cfg, std::ostream& out) {
  const Context& c = preset_context(cfg.preset);
  json j = json::array();
  std::ostringstream t;
  for (const auto& w : enumerate(*c.weyl)) {
    j.push_back(to_json(w));
    t << "[";
    for (std::size_t i = 0; i < w.word.size(); ++i) t << (i ? " " : "") << w.word[i];
    t << "] length " << w.length << "\n";
  }
  emit(out, cfg, j, t.str());
  return 0;
}

int weyl_orbit(const RunConfig& cfg, std::ostream& out) {
  const Context& c = preset_context(cfg.preset);
  json j = json::array();
  std::ostringstream t;
  for (const auto& x : coweights(cfg, c, 1)) {
    auto orb = orbit(*c.weyl, x);
    json pts = json::array();
    for (const auto& y : orb) pts.push_back(to_json(y));
    auto dom = dominant_representative(*c.weyl, x).dominant;
    j.push_back({{"coweight", to_json(x)},
                 {"orbit", pts},
                 {"dominant", to_json(dom)},
                 {"stabilizer_order", stabilizer_order(*c.weyl, x)}});
    t << "O" << to_string(x) << " (" << orb.size() << " points, dominant " << to_string(dom) << "):";
    for (const auto& y : orb) t << " " << to_string(y);
    t << "\n";
  }
  emit(out, cfg, j, t.str());
  return 0;
}

int hecke_e_expand(const RunConfig& cfg, std::ostream& out) {
  const Context& c = preset_context(cfg.preset);
  json j = json::array();
  std::ostringstream t;
  for (const auto& x : coweights(cfg, c, 1)) {
    const auto& e = c.hecke->E_element(x);
    j.push_back({{"coweight", to_json(x)}, {"length", length(*c.datum, x)}, {"E", to_json(*c.weyl, e)}});
    t << "E" << to_string(x) << " = " << hecke_text(*c.weyl, e) << "\n";
  }
  emit(out, cfg, j, t.str());
  return 0;
}

// E_{x1}⋯E_{xn}, compared with q^{Σℓ(x_i) − ℓ(Σx_i)} E_{Σx_i}.
int hecke_product(const RunConfig& cfg, std::ostream& out) {
  const Context& c = preset_context(cfg.preset);
  const HeckeAlgebra& H = *c.hecke;
  auto xs = coweights(cfg, c, 2);
  HeckeElement prod = H.unit();
  Coweight sum = Coweight::zero(c.datum->rank());
  std::int64_t total = 0;
  for (const auto& x : xs) {
    prod = H.multiply(prod, H.E_element(x));
    sum += x;
    total += length(*c.datum, x);
  }
  auto shift = total - length(*c.datum, sum);
  bool law = prod == LaurentPolynomial::monomial(static_cast<int>(shift)) * H.E_element(sum);
  json j = {{"product", to_json(*c.weyl, prod)}, {"sum", to_json(sum)}, {"q_shift", shift}, {"product_law", law}};
  std::ostringstream t;
  t << "product = " << hecke_text(*c.weyl, prod) << "\n"
    << "product law q^" << shift << "*E" << to_string(sum) << ": " << (law ? "holds" : "FAILS") << "\n";
  emit(out, cfg, j, t.str());
  return law ? 0 : 1;
}

int hecke_invert(const RunConfig& cfg, std::ostream& out) {
  const Context& c = preset_context(cfg.preset);
  const HeckeAlgebra& H = *c.hecke;
  json j = json::array();
  std::ostringstream t;
  bool ok = true;
  for (const auto& x : coweights(cfg, c, 1)) {
    auto w = c.affine->translation(x);
    auto inv = H.basis_inverse(w);
    bool round = H.multiply(H.basis(w), inv) == H.unit();
    ok = ok && round;
    j.push_back({{"coweight", to_json(x)}, {"inverse", to_json(*c.weyl, inv)}, {"round_trip", round}});
    t << "T_t" << to_string(x) << "^-1 = " << hecke_text(*c.weyl, inv) << "\n";
  }
  emit(out, cfg, j, t.str());
  return ok ? 0 : 1;
}

int hecke_involutions(const RunConfig& cfg, std::ostream& out) {
  const Context& c = preset_context(cfg.preset);
  const HeckeAlgebra& H = *c.hecke;
  json j = json::array();
  std::ostringstream t;
  bool ok = true;
  for (const auto& x : coweights(cfg, c, 1)) {
    auto w = c.affine->translation(x);
    auto Tw = H.basis(w);
    auto iota = H.iota(Tw), jj = H.j_involution(Tw);
    bool inv = H.iota(iota) == Tw && H.j_involution(jj) == Tw;
    ok = ok && inv;
    j.push_back({{"coweight", to_json(x)},
                 {"epsilon", H.epsilon(w)},
                 {"iota", to_json(*c.weyl, iota)},
                 {"j", to_json(*c.weyl, jj)},
                 {"involutive", inv}});
    t << "t" << to_string(x) << ": epsilon = " << H.epsilon(w) << "\n  iota(T) = " << hecke_text(*c.weyl, iota)
      << "\n  j(T) = " << hecke_text(*c.weyl, jj) << "\n";
  }
  emit(out, cfg, j, t.str());
  return ok ? 0 : 1;
}

int center_verify(const RunConfig& cfg, std::ostream& out) {
  const Context& c = preset_context(cfg.preset);
  CenterOptions opt;
  if (cfg.max_degree > 0) opt.max_degree = cfg.max_degree;
  auto rep = verify_center(c, opt);
  std::ostringstream t;
  t << rep.preset << " up to degree " << rep.max_degree << "\n";
  for (const auto& d : rep.dimensions)
    t << "  k=" << d.degree << " dominant " << d.dominant_count << " invariant " << d.invariant_dimension << " rank "
      << d.image_rank << "\n";
  auto flag = [&](const char* n, bool v) { t << "  " << n << ": " << (v ? "ok" : "FAIL") << "\n"; };
  flag("independence and span", rep.independence_and_span);
  flag("graded triangularity", rep.graded_triangularity);
  flag("multiplicativity", rep.multiplicativity);
  flag("hecke centrality", rep.hecke_centrality);
  flag("reduction mod coroots", rep.coroot_reduction);
  for (const auto& e : rep.counterexamples) t << "  " << e << "\n";
  emit(out, cfg, to_json(rep), t.str());
  return rep.passed() ? 0 : 1;
}

int toric_fan(const RunConfig& cfg, std::ostream& out) {
  const Context& c = preset_context(cfg.preset);
  auto phi = pl_function(cfg, c);
  const Fan& fan = phi->fan();
  json j = to_json(fan);
  j["smooth"] = fan.is_smooth();
  j["complete"] = fan.is_complete(8);
  j["pl"] = {{"ray_values", phi->ray_values()}, {"convex", is_convex(*phi)}, {"strictly_convex", is_strictly_convex(*phi)}};
  std::ostringstream t;
  for (std::size_t i = 0; i < fan.rays().size(); ++i)
    t << "v" << i + 1 << " = " << to_string(fan.rays()[i]) << "  phi = " << phi->ray_values()[i] << "\n";
  for (const auto& cone : fan.maximal_cones()) {
    t << "cone";
    for (auto i : cone) t << " v" << i + 1;
    t << "\n";
  }
  emit(out, cfg, j, t.str());
  return 0;
}

int toric_sr(const RunConfig& cfg, std::ostream& out) {
  const Context& c = preset_context(cfg.preset);
  auto fan = weyl_chamber_fan(c);
  json j = json::array();
  std::ostringstream t;
  for (const auto& m : sr_generators(*fan)) {
    j.push_back({{"b", m}, {"text", to_string(m)}});
    t << to_string(m) << "\n";
  }
  emit(out, cfg, j, t.str());
  return 0;
}

int toric_qsr(const RunConfig& cfg, std::ostream& out) {
  const Context& c = preset_context(cfg.preset);
  auto phi = pl_function(cfg, c);
  auto rels = quantum_sr_generators(*phi, cfg.max_degree > 0 ? cfg.max_degree : 2);
  json j = json::array();
  std::ostringstream t;
  for (const auto& r : rels) {
    if (r.trivial) continue;
    j.push_back(to_json(r));
    t << relation_text(r) << "\n";
  }
  emit(out, cfg, j, t.str());
  return 0;
}

int toric_verify(const RunConfig& cfg, std::ostream& out) {
  const Context& c = preset_context(cfg.preset);
  auto rep = verify_presentation(c, pl_function(cfg, c), cfg.max_degree > 0 ? cfg.max_degree : 6);
  std::ostringstream t;
  t << rep.preset << " presentation up to degree " << rep.max_degree << ": " << (rep.passed() ? "PASS" : "FAIL")
    << "\n";
  for (const auto& d : rep.degrees)
    t << "  k=" << d.degree << " slice " << d.slice_dimension << " normal forms " << d.normal_forms << "\n";
  for (const auto& e : rep.counterexamples) t << "  " << e << "\n";
  emit(out, cfg, to_json(rep), t.str());
  return rep.passed() ? 0 : 1;
}

int run_verify_all(const RunConfig& cfg, std::ostream& out) {
  std::set<std::string> groups(cfg.checks.begin(), cfg.checks.end());
  if (groups.empty()) groups = check_groups();
  auto res = verify_all(cfg.seed, groups);
  std::ostringstream t;
  for (const auto& r : res.criteria) {
    t << "criterion " << r.id << " " << (r.passed ? "PASS" : "FAIL") << "  " << r.title << " (" << std::fixed << std::setprecision(2) << r.seconds
      << " s)\n";
    for (const auto& f : r.failures) t << "    " << f << "\n";
  }
  emit(out, cfg, to_json(res, cfg.seed), t.str());
  return res.passed() ? 0 : 1;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in affine Hecke algebras and their centers", "genhecke"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::function<int(const RunConfig&, std::ostream&)> action;

  auto add_format = [&](CLI::App* s) {
    s->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };
  auto add_preset = [&](CLI::App* s) {
    s->add_option("--preset", cfg.preset, "root datum preset")
        ->required()
        ->check(CLI::IsMember(RootDatum::preset_names()));
    add_format(s);
  };
  auto add_coweight = [&](CLI::App* s) {
    s->add_option("--coweight", cfg.coweights, "comma-separated integers in coweight coordinates (repeatable)")
        ->allow_extra_args(false);
  };
  auto add_degree = [&](CLI::App* s) {
    s->add_option("--max-degree", cfg.max_degree, "maximal degree")->check(CLI::PositiveNumber);
  };
  auto add_pl = [&](CLI::App* s) {
    s->add_option("--pl", cfg.pl, "piecewise-linear function (length)");
    s->add_option("--pl-values", cfg.pl_values, "values on the rays")->delimiter(',');
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  int (*fn)(const RunConfig&, std::ostream&)) {
    auto* s = parent->add_subcommand(name, help);
    s->callback([&action, fn] { action = fn; });
    return s;
  };

  auto* datum = app.add_subcommand("datum", "root data")->require_subcommand(1);
  add_preset(leaf(datum, "show", "show a preset", datum_show));

  auto* weyl = app.add_subcommand("weyl", "finite Weyl group")->require_subcommand(1);
  add_preset(leaf(weyl, "enumerate", "all elements with reduced words", weyl_enumerate));
  auto* orb = leaf(weyl, "orbit", "orbit of a coweight", weyl_orbit);
  add_preset(orb);
  add_coweight(orb);

  auto* hecke = app.add_subcommand("hecke", "affine Hecke algebra")->require_subcommand(1);
  for (auto [name, help, fn] : {std::tuple{"e-expand", "expand E_x in the T basis", &hecke_e_expand},
                                std::tuple{"product", "product of E elements", &hecke_product},
                                std::tuple{"invert", "inverse of a translation basis element", &hecke_invert},
                                std::tuple{"involutions", "iota, j and epsilon on a translation", &hecke_involutions}}) {
    auto* s = leaf(hecke, name, help, fn);
    add_preset(s);
    add_coweight(s);
  }

  auto* center = app.add_subcommand("center", "center of the Hecke algebra")->require_subcommand(1);
  auto* cv = leaf(center, "verify", "check the center isomorphism up to a degree", center_verify);
  add_preset(cv);
  add_degree(cv);

  auto* toric = app.add_subcommand("toric", "Weyl chamber fan and Stanley-Reisner presentations")->require_subcommand(1);
  for (auto [name, help, fn] : {std::tuple{"fan", "rays and maximal cones", &toric_fan},
                                std::tuple{"sr", "Stanley-Reisner generators", &toric_sr},
                                std::tuple{"qsr", "quantum Stanley-Reisner relations", &toric_qsr},
                                std::tuple{"verify", "check the presentation up to a degree", &toric_verify}}) {
    auto* s = leaf(toric, name, help, fn);
    add_preset(s);
    add_pl(s);
    add_degree(s);
  }

  auto* all = leaf(&app, "verify-all", "run every acceptance check", run_verify_all);
  add_format(all);
  all->add_option("--seed", cfg.seed, "seed for randomized checks");
  all->add_option("--checks", cfg.checks, "subset of weyl,hecke,center,toric")
      ->delimiter(',')
      ->check(CLI::IsMember(check_groups()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  try {
    return action(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace genhecke::tools
