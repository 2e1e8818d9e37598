#include "genhecke/toric.hpp"

#include <algorithm>
#include <set>

#include "genhecke/errors.hpp"

namespace genhecke {

namespace {

Coweight combine(const Fan& fan, const Monomial& b) {
  Coweight x = Coweight::zero(fan.rank());
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] != 0) x += b[i] * fan.rays()[i];
  return x;
}

std::vector<std::size_t> support(const Monomial& b) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] != 0) s.push_back(i);
  return s;
}

// All subsets of {0..n-1} of the given size, lexicographically.
template <class F>
void for_each_subset(std::size_t n, std::size_t size, F&& f) {
  if (size > n) return;
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Exponent vectors in n variables with total degree exactly d, in
// lexicographically decreasing order.
void monomials_of_degree(std::size_t n, std::int64_t d, std::vector<Monomial>& out) {
  Monomial m(n, 0);
  auto rec = [&](auto& self, std::size_t i, std::int64_t left) -> void {
    if (i + 1 == n) {
      m[i] = left;
      out.push_back(m);
      m[i] = 0;
      return;
    }
    for (std::int64_t e = left; e >= 0; --e) {
      m[i] = e;
      self(self, i + 1, left - e);
    }
    m[i] = 0;
  };
  if (n > 0) rec(rec, 0, d);
}

}  // namespace

// ---------------------------------------------------------------------- Fan

Fan::Fan(const Context& ctx) : datum_(ctx.datum) {
  const RootDatum& d = *datum_;
  if (!d.is_adjoint()) throw PreconditionError("the Weyl-chamber fan is built for adjoint data");
  std::size_t r = d.semisimple_rank();
  std::vector<Coweight> omegas;
  for (const auto& w : d.fundamental_coweights()) omegas.push_back(*w.to_coweight());
  // Chambers in breadth-first Weyl order; rays numbered on first appearance.
  for (std::size_t w = 0; w < ctx.weyl->order(); ++w) {
    std::vector<std::size_t> cone;
    for (std::size_t i = 0; i < r; ++i) {
      Coweight v = ctx.weyl->act(w, omegas[i]);
      auto it = std::find(rays_.begin(), rays_.end(), v);
      if (it == rays_.end()) {
        rays_.push_back(v);
        cone.push_back(rays_.size() - 1);
      } else {
        cone.push_back(static_cast<std::size_t>(it - rays_.begin()));
      }
    }
    cones_.push_back(cone);
    std::sort(cone.begin(), cone.end());
    sorted_cones_.push_back(cone);
  }
  for (const auto& cone : cones_) {
    IntMatrix B(rank(), cone.size());
    for (std::size_t j = 0; j < cone.size(); ++j)
      for (std::size_t i = 0; i < rank(); ++i) B(i, j) = rays_[cone[j]][i];
    auto inv = inverse(B);
    if (!inv) throw CertificationError("a chamber is not full-dimensional");
    inverses_.push_back(std::move(*inv));
  }
}

bool Fan::is_face(const std::vector<std::size_t>& rays) const {
  std::vector<std::size_t> s(rays);
  std::sort(s.begin(), s.end());
  return std::any_of(sorted_cones_.begin(), sorted_cones_.end(),
                     [&](const auto& c) { return std::includes(c.begin(), c.end(), s.begin(), s.end()); });
}

IntVector Fan::cone_coordinates(std::size_t c, const Coweight& x) const {
  const RationalMatrix& inv = inverses_[c];
  IntVector out(inv.size());
  for (std::size_t i = 0; i < inv.size(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < x.rank(); ++j) s += inv[i][j] * static_cast<long>(x[j]);
    if (!is_integer(s)) throw CertificationError("cone coordinates are not integral: the fan is not smooth");
    out[i] = to_int64(s);
  }
  return out;
}

std::size_t Fan::containing_cone(const Coweight& x) const {
  for (std::size_t c = 0; c < cones_.size(); ++c) {
    auto a = cone_coordinates(c, x);
    if (std::all_of(a.begin(), a.end(), [](std::int64_t v) { return v >= 0; })) return c;
  }
  throw CertificationError(to_string(x) + " lies in no maximal cone");
}

std::vector<std::pair<std::size_t, std::int64_t>> Fan::minimal_cone(const Coweight& x) const {
  std::size_t c = containing_cone(x);
  auto a = cone_coordinates(c, x);
  std::vector<std::pair<std::size_t, std::int64_t>> out;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] != 0) out.emplace_back(cones_[c][j], a[j]);
  std::sort(out.begin(), out.end());
  return out;
}

bool Fan::is_smooth() const {
  for (const auto& cone : cones_) {
    IntMatrix B(rank(), cone.size());
    for (std::size_t j = 0; j < cone.size(); ++j)
      for (std::size_t i = 0; i < rank(); ++i) B(i, j) = rays_[cone[j]][i];
    Rational det = determinant(B);
    if (det != 1 && det != -1) return false;
  }
  return true;
}

bool Fan::is_complete(std::int64_t bound) const {
  for (const auto& x : coweights_up_to_length(*datum_, bound)) {
    bool found = false;
    for (std::size_t c = 0; c < cones_.size() && !found; ++c) {
      auto a = cone_coordinates(c, x);
      found = std::all_of(a.begin(), a.end(), [](std::int64_t v) { return v >= 0; });
    }
    if (!found) return false;
  }
  return true;
}

std::shared_ptr<const Fan> weyl_chamber_fan(const Context& ctx) { return std::make_shared<const Fan>(ctx); }

std::vector<std::vector<std::size_t>> primitive_subsets(const Fan& fan) {
  std::vector<std::vector<std::size_t>> out;
  std::size_t n = fan.rays().size();
  for (std::size_t size = 2; size <= fan.rank() + 1; ++size)
    for_each_subset(n, size, [&](const std::vector<std::size_t>& s) {
      if (fan.is_face(s)) return;
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<std::size_t> sub;
        for (std::size_t j = 0; j < s.size(); ++j)
          if (j != drop) sub.push_back(s[j]);
        if (!fan.is_face(sub)) return;
      }
      out.push_back(s);
    });
  return out;
}

std::vector<Monomial> sr_generators(const Fan& fan) {
  std::vector<Monomial> out;
  for (const auto& s : primitive_subsets(fan)) {
    Monomial m(fan.rays().size(), 0);
    for (auto i : s) m[i] = 1;
    out.push_back(m);
  }
  return out;
}

// --------------------------------------------------------------- PLFunction

PLFunction::PLFunction(std::shared_ptr<const Fan> fan, std::vector<std::int64_t> ray_values)
    : fan_(std::move(fan)), values_(std::move(ray_values)) {
  if (values_.size() != fan_->rays().size())
    throw PreconditionError("need one value per ray (" + std::to_string(fan_->rays().size()) + ")");
  const RootDatum& d = fan_->datum();
  IntMatrix pt = d.pairing().transpose();
  for (const auto& cone : fan_->maximal_cones()) {
    // functional f with f · v_j = φ(v_j) on the cone's rays
    IntMatrix rows(cone.size(), fan_->rank());
    std::vector<Rational> rhs;
    for (std::size_t j = 0; j < cone.size(); ++j) {
      for (std::size_t i = 0; i < fan_->rank(); ++i) rows(j, i) = fan_->rays()[cone[j]][i];
      rhs.push_back(values_[cone[j]]);
    }
    auto f = solve(rows, rhs);
    if (!f) throw CertificationError("cone rays are dependent");
    IntVector functional(fan_->rank());
    for (std::size_t i = 0; i < functional.size(); ++i) {
      if (!is_integer((*f)[i])) throw PreconditionError("φ is not integral on X̌");
      functional[i] = to_int64((*f)[i]);
    }
    auto m = solve(pt, *f);
    IntVector form(fan_->rank());
    for (std::size_t i = 0; i < form.size(); ++i) form[i] = to_int64((*m)[i]);
    functionals_.push_back(functional);
    forms_.push_back(form);
  }
}

std::shared_ptr<const PLFunction> PLFunction::length(std::shared_ptr<const Fan> fan) {
  std::vector<std::int64_t> values;
  for (const auto& v : fan->rays()) values.push_back(genhecke::length(fan->datum(), v));
  return std::make_shared<const PLFunction>(std::move(fan), std::move(values));
}

std::int64_t PLFunction::form_value(std::size_t c, const Coweight& v) const {
  return dot(functionals_[c], v.coords());
}

std::int64_t PLFunction::value(const Coweight& x) const { return form_value(fan_->containing_cone(x), x); }

bool PLFunction::is_w0_invariant(const WeylGroup& group) const {
  const auto& rays = fan_->rays();
  for (std::size_t w = 0; w < group.order(); ++w)
    for (std::size_t i = 0; i < rays.size(); ++i) {
      auto j = std::find(rays.begin(), rays.end(), group.act(w, rays[i])) - rays.begin();
      if (values_[static_cast<std::size_t>(j)] != values_[i]) return false;
    }
  return true;
}

bool PLFunction::same_function(const ConeFunction& other) const {
  if (this == &other) return true;
  auto* o = dynamic_cast<const PLFunction*>(&other);
  return o && o->fan_->rays() == fan_->rays() && o->values_ == values_;
}

bool is_convex(const PLFunction& phi) {
  const Fan& fan = phi.fan();
  for (std::size_t c = 0; c < fan.maximal_cones().size(); ++c)
    for (std::size_t i = 0; i < fan.rays().size(); ++i)
      if (phi.form_value(c, fan.rays()[i]) > phi.ray_values()[i]) return false;
  return true;
}

bool is_strictly_convex(const PLFunction& phi) {
  const Fan& fan = phi.fan();
  for (std::size_t c = 0; c < fan.maximal_cones().size(); ++c) {
    const auto& cone = fan.maximal_cones()[c];
    for (std::size_t i = 0; i < fan.rays().size(); ++i) {
      bool inside = std::find(cone.begin(), cone.end(), i) != cone.end();
      std::int64_t m = phi.form_value(c, fan.rays()[i]);
      if (inside ? m != phi.ray_values()[i] : m >= phi.ray_values()[i]) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------- presentations

ClassicalElement tau(const PLFunction& phi, const Monomial& b) {
  // In A_0 a product of e^{(v,φ(v))} survives iff φ is additive on it.
  Coweight x = combine(phi.fan(), b);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < b.size(); ++i) total += b[i] * phi.ray_values()[i];
  if (total != phi.value(x)) return {};
  return {{x, Rational(1)}};
}

Monomial tau_prime(const Fan& fan, const Coweight& x) {
  Monomial m(fan.rays().size(), 0);
  for (const auto& [i, a] : fan.minimal_cone(x)) m[i] = a;
  return m;
}

ConeAlgebraElement tau_q(std::shared_ptr<const PLFunction> phi, const QuantumMonomial& m) {
  const Fan& fan = phi->fan();
  ConeAlgebraElement out = ConeAlgebraElement::q_power(phi, m.q_exponent);
  for (std::size_t i = 0; i < m.z.size(); ++i)
    if (m.z[i] != 0) out = multiply(out, power(ConeAlgebraElement::tight(phi, fan.rays()[i]), m.z[i]));
  return out;
}

QuantumMonomial tau_q_prime(const PLFunction& phi, const Coweight& x, std::int64_t k) {
  std::int64_t e = k - phi.value(x);
  if (e < 0) throw PreconditionError("(x, k) is outside the cone");
  return {e, tau_prime(phi.fan(), x)};
}

std::vector<QuantumRelation> quantum_sr_generators(const PLFunction& phi, std::int64_t d) {
  if (!is_convex(phi)) throw PreconditionError("φ is not convex");
  const Fan& fan = phi.fan();
  std::vector<QuantumRelation> out;
  for (std::int64_t deg = 1; deg <= d; ++deg) {
    std::vector<Monomial> bs;
    monomials_of_degree(fan.rays().size(), deg, bs);
    for (auto& b : bs) {
      Coweight x = combine(fan, b);
      QuantumRelation r;
      r.a = tau_prime(fan, x);
      std::int64_t total = 0;
      for (std::size_t i = 0; i < b.size(); ++i) total += b[i] * phi.ray_values()[i];
      r.q_exponent = total - phi.value(x);
      r.trivial = r.a == b;
      r.b = std::move(b);
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::int64_t degree(const Monomial& m) {
  std::int64_t s = 0;
  for (auto e : m) s += e;
  return s;
}

std::string to_string(const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "z" + std::to_string(i + 1);
    if (m[i] != 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

PresentationReport verify_presentation(const Context& ctx, std::shared_ptr<const PLFunction> phi, std::int64_t d) {
  const Fan& fan = phi->fan();
  PresentationReport report;
  report.preset = ctx.datum->name();
  report.max_degree = d;
  auto fail = [&](bool& flag, const std::string& what) {
    if (flag) report.counterexamples.push_back(what);
    flag = false;
  };

  if (!fan.is_smooth()) fail(report.fan_smooth, "a maximal cone is not unimodular");
  if (!fan.is_complete(d)) fail(report.fan_complete, "some lattice point lies in no maximal cone");

  // Primitive subsets, re-checked against the definition.
  auto prims = primitive_subsets(fan);
  for (const auto& s : prims) {
    bool ok = !fan.is_face(s);
    for (std::size_t drop = 0; drop < s.size() && ok; ++drop) {
      std::vector<std::size_t> sub;
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != drop) sub.push_back(s[j]);
      ok = fan.is_face(sub);
    }
    if (!ok) fail(report.primitive_subsets_valid, "subset is not primitive");
  }
  auto contains_primitive = [&](const std::vector<std::size_t>& s) {
    return std::any_of(prims.begin(), prims.end(),
                       [&](const auto& p) { return std::includes(s.begin(), s.end(), p.begin(), p.end()); });
  };
  for (std::size_t size = 1; size <= fan.rank() + 1; ++size)
    for_each_subset(fan.rays().size(), size, [&](const std::vector<std::size_t>& s) {
      if (!fan.is_face(s) && !contains_primitive(s))
        fail(report.primitive_subsets_valid, "a non-face contains no primitive subset");
    });

  if (!is_convex(*phi)) fail(report.convex, "φ is not convex");
  bool strict = is_strictly_convex(*phi);
  report.strictly_convex = strict;

  auto window = coweights_up_to_length(*ctx.datum, d);
  for (const auto& x : window) {
    auto img = tau(*phi, tau_prime(fan, x));
    if (!(img == ClassicalElement{{x, Rational(1)}}))
      fail(report.classical_round_trip, "τ(τ′(e^" + to_string(x) + ")) != e^" + to_string(x));
  }

  for (std::int64_t k = 0; k <= d; ++k) {
    PresentationDegree deg;
    deg.degree = k;
    std::set<std::vector<std::int64_t>> normal_forms;
    std::set<Coweight> images;
    for (const auto& x : window) {
      if (phi->value(x) > k) continue;
      ++deg.slice_dimension;
      QuantumMonomial nf = tau_q_prime(*phi, x, k);
      if (!(tau_q(phi, nf) == ConeAlgebraElement::monomial(phi, x, k)))
        fail(report.quantum_round_trip, "τ_q(τ′_q(e^{(" + to_string(x) + "," + std::to_string(k) + ")})) differs");
      if (!(tau_prime(fan, combine(fan, nf.z)) == nf.z))
        fail(report.normal_forms_independent, "normal form of " + to_string(x) + " is not fixed by rewriting");
      Monomial key = nf.z;
      key.push_back(nf.q_exponent);
      normal_forms.insert(key);
      images.insert(x);
    }
    deg.normal_forms = normal_forms.size();
    if (normal_forms.size() != deg.slice_dimension || images.size() != deg.slice_dimension)
      fail(report.normal_forms_independent, "degree " + std::to_string(k) + " normal forms collide");
    report.degrees.push_back(deg);
  }

  std::vector<QuantumRelation> relations;
  if (report.convex) relations = quantum_sr_generators(*phi, d);
  for (const auto& r : relations) {
    if (r.q_exponent < 0 ||
        !(tau_q(phi, {r.q_exponent, r.a}) == tau_q(phi, {0, r.b})))
      fail(report.relations_hold, "τ_q does not kill the relation for " + to_string(r.b));
    if (!strict) continue;
    auto s = support(r.b);
    bool face = fan.is_face(s);
    bool limit_ok = face ? (r.trivial && r.q_exponent == 0) : (r.q_exponent > 0 && contains_primitive(s));
    if (!limit_ok) fail(report.classical_limit, "q→0 of the relation for " + to_string(r.b) + " is not SR");
  }
  return report;
}

}  // namespace genhecke
