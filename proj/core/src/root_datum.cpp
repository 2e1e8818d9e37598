#include "genhecke/root_datum.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "genhecke/errors.hpp"

namespace genhecke {

// ---------------------------------------------------------------- Coweight

bool Coweight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c == 0; });
}

Coweight& Coweight::operator+=(const Coweight& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Coweight& Coweight::operator-=(const Coweight& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Coweight operator-(Coweight a) {
  for (auto& c : a.coords_) c = -c;
  return a;
}

Coweight operator*(std::int64_t s, Coweight a) {
  for (auto& c : a.coords_) c *= s;
  return a;
}

std::size_t CoweightHash::operator()(const Coweight& c) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (auto x : c.coords()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
  return h;
}

// -------------------------------------------------------- RationalCoweight

RationalCoweight::RationalCoweight(const Coweight& c) : num_(c.coords()), den_(1) {}

RationalCoweight::RationalCoweight(IntVector numerators, std::int64_t denominator)
    : num_(std::move(numerators)), den_(denominator) {
  if (den_ == 0) throw Error("zero denominator in rational coweight");
  normalize();
}

RationalCoweight RationalCoweight::from_rationals(const std::vector<Rational>& coords) {
  mpz_class den = 1;
  for (const auto& c : coords) den = lcm(den, mpz_class(c.get_den()));
  IntVector num(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) num[i] = to_int64(Rational(coords[i] * den));
  return RationalCoweight(std::move(num), den.get_si());
}

void RationalCoweight::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& n : num_) n = -n;
  }
  std::int64_t g = den_;
  for (auto n : num_) g = std::gcd(g, n);
  if (g > 1) {
    den_ /= g;
    for (auto& n : num_) n /= g;
  }
}

bool RationalCoweight::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](std::int64_t c) { return c == 0; });
}

std::optional<Coweight> RationalCoweight::to_coweight() const {
  if (den_ != 1) return std::nullopt;
  return Coweight(num_);
}

RationalCoweight operator+(const RationalCoweight& a, const RationalCoweight& b) {
  std::int64_t den = std::lcm(a.den_, b.den_);
  IntVector num(a.num_.size());
  for (std::size_t i = 0; i < num.size(); ++i)
    num[i] = a.num_[i] * (den / a.den_) + b.num_[i] * (den / b.den_);
  return RationalCoweight(std::move(num), den);
}

RationalCoweight operator-(const RationalCoweight& a) {
  RationalCoweight r = a;
  for (auto& n : r.num_) n = -n;
  return r;
}

RationalCoweight operator-(const RationalCoweight& a, const RationalCoweight& b) { return a + (-b); }

RationalCoweight operator*(std::int64_t s, const RationalCoweight& a) {
  IntVector num = a.num_;
  for (auto& n : num) n *= s;
  return RationalCoweight(std::move(num), a.den_);
}

bool operator<(const RationalCoweight& a, const RationalCoweight& b) {
  for (std::size_t i = 0; i < a.num_.size(); ++i) {
    // Compare a_i/da against b_i/db without building rationals.
    __int128 lhs = static_cast<__int128>(a.num_[i]) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_[i]) * a.den_;
    if (lhs != rhs) return lhs < rhs;
  }
  return false;
}

// ----------------------------------------------------------------- presets

namespace {

struct PresetData {
  std::vector<IntVector> roots, coroots;
  std::size_t rank;
};

// Adjoint presets: X = Q with Π the standard basis and identity pairing, so
// α̌_j is the j-th column of the Cartan matrix C_ij = <α_i, α̌_j>.
PresetData adjoint_from_cartan(const std::vector<IntVector>& cartan) {
  std::size_t n = cartan.size();
  PresetData s;
  s.rank = n;
  for (std::size_t j = 0; j < n; ++j) {
    IntVector e(n, 0), col(n, 0);
    e[j] = 1;
    for (std::size_t i = 0; i < n; ++i) col[i] = cartan[i][j];
    s.roots.push_back(e);
    s.coroots.push_back(col);
  }
  return s;
}

PresetData general_linear(std::size_t n) {
  PresetData s;
  s.rank = n;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    IntVector v(n, 0);
    v[i] = 1;
    v[i + 1] = -1;
    s.roots.push_back(v);
    s.coroots.push_back(v);
  }
  return s;
}

const std::map<std::string, PresetData, std::less<>>& preset_table() {
  static const std::map<std::string, PresetData, std::less<>> table = [] {
    std::map<std::string, PresetData, std::less<>> t;
    t["A1-adjoint"] = adjoint_from_cartan({{2}});
    t["A1-sc"] = PresetData{{{2}}, {{1}}, 1};
    t["A1xA1-adjoint"] = adjoint_from_cartan({{2, 0}, {0, 2}});
    t["A2-adjoint"] = adjoint_from_cartan({{2, -1}, {-1, 2}});
    t["B2-adjoint"] = adjoint_from_cartan({{2, -2}, {-1, 2}});
    t["G2-adjoint"] = adjoint_from_cartan({{2, -1}, {-3, 2}});
    t["GL2"] = general_linear(2);
    t["GL3"] = general_linear(3);
    return t;
  }();
  return table;
}

IntVector scaled_add(IntVector a, std::int64_t s, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= s * b[i];
  return a;
}

}  // namespace

const std::vector<std::string>& RootDatum::preset_names() {
  static const std::vector<std::string> names = {"A1-adjoint", "A1-sc",     "A1xA1-adjoint",
                                                  "A2-adjoint", "B2-adjoint", "G2-adjoint",
                                                  "GL2",        "GL3"};
  return names;
}

RootDatum RootDatum::preset(std::string_view name) {
  const auto& table = preset_table();
  auto it = table.find(name);
  if (it == table.end()) throw UnknownPreset("unknown preset '" + std::string(name) + "'");
  const PresetData& s = it->second;
  return custom(IntMatrix::from_rows(s.roots, s.rank), IntMatrix::from_rows(s.coroots, s.rank),
                IntMatrix::identity(s.rank), kDefaultClosureBound, std::string(name));
}

// -------------------------------------------------------------- validation

RootDatum RootDatum::custom(const IntMatrix& simple_roots, const IntMatrix& simple_coroots,
                            const IntMatrix& pairing, std::size_t closure_bound, std::string name) {
  std::size_t n = pairing.rows();
  std::size_t r = simple_roots.rows();
  if (n == 0 || pairing.cols() != n) throw InvalidDatum("pairing must be a nonempty square matrix");
  if (simple_coroots.rows() != r) throw InvalidDatum("need one coroot per simple root");
  if (r > 0 && (simple_roots.cols() != n || simple_coroots.cols() != n))
    throw InvalidDatum("simple roots/coroots must have rank-many coordinates");
  Rational det = determinant(pairing);
  if (det != 1 && det != -1) throw InvalidDatum("pairing is not perfect (det = " + to_string(det) + ")");
  if (r > n) throw InvalidDatum("more simple roots than the rank");
  if (r > 0 && genhecke::rank(simple_roots) != r) throw InvalidDatum("simple roots are linearly dependent");
  if (r > 0 && genhecke::rank(simple_coroots) != r) throw InvalidDatum("simple coroots are linearly dependent");

  RootDatum d;
  d.name_ = std::move(name);
  d.rank_ = n;
  d.simple_roots_ = simple_roots;
  d.simple_coroots_ = simple_coroots;
  d.pairing_ = pairing;

  IntMatrix pt = pairing.transpose();
  auto functional = [&](const IntVector& x) { return pt.apply(x); };
  auto pairing_xy = [&](const IntVector& x, const IntVector& y) { return dot(functional(x), y); };

  d.cartan_ = IntMatrix(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      d.cartan_(i, j) = pairing_xy(simple_roots.row(i), simple_coroots.row(j));
  for (std::size_t i = 0; i < r; ++i) {
    if (d.cartan_(i, i) != 2) throw InvalidDatum("<α, α̌> != 2 for simple root " + std::to_string(i));
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      if (d.cartan_(i, j) > 0) throw InvalidDatum("positive off-diagonal Cartan entry");
      if ((d.cartan_(i, j) == 0) != (d.cartan_(j, i) == 0))
        throw InvalidDatum("Cartan matrix is not a generalized Cartan matrix");
    }
  }

  // Close Π under simple reflections s_i(x) = x − <x, α̌_i> α_i, carrying the
  // coroot and the Π-coordinates along.
  std::map<IntVector, std::size_t> seen;
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < r; ++i) {
    Root root;
    root.root = simple_roots.row(i);
    root.coroot = simple_coroots.row(i);
    root.simple_coords = IntVector(r, 0);
    root.simple_coords[i] = 1;
    if (seen.count(root.root)) throw InvalidDatum("repeated simple root");
    seen[root.root] = d.roots_.size();
    queue.push_back(d.roots_.size());
    d.roots_.push_back(root);
  }
  while (!queue.empty()) {
    std::size_t idx = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < r; ++i) {
      const Root src = d.roots_[idx];
      std::int64_t c = pairing_xy(src.root, simple_coroots.row(i));
      Root img;
      img.root = scaled_add(src.root, c, simple_roots.row(i));
      if (seen.count(img.root)) continue;
      img.simple_coords = src.simple_coords;
      img.simple_coords[i] -= c;
      std::int64_t cc = pairing_xy(simple_roots.row(i), src.coroot);
      img.coroot = scaled_add(src.coroot, cc, simple_coroots.row(i));
      seen[img.root] = d.roots_.size();
      queue.push_back(d.roots_.size());
      d.roots_.push_back(img);
      if (d.roots_.size() > closure_bound)
        throw InvalidDatum("root closure exceeds " + std::to_string(closure_bound) +
                           " roots: not of finite type");
    }
  }

  for (std::size_t k = 0; k < d.roots_.size(); ++k) {
    Root& root = d.roots_[k];
    root.functional = functional(root.root);
    bool nonneg = std::all_of(root.simple_coords.begin(), root.simple_coords.end(),
                              [](std::int64_t c) { return c >= 0; });
    bool nonpos = std::all_of(root.simple_coords.begin(), root.simple_coords.end(),
                              [](std::int64_t c) { return c <= 0; });
    if (!nonneg && !nonpos) throw InvalidDatum("generated a root that is neither positive nor negative");
    root.positive = nonneg;
    (nonneg ? d.positive_ : d.negative_).push_back(k);
    if (dot(root.functional, root.coroot) != 2) throw InvalidDatum("<α, α̌> != 2 for a generated root");
    IntVector twice = root.root;
    for (auto& x : twice) x *= 2;
    if (seen.count(twice)) throw InvalidDatum("root system is not reduced");
  }
  // Every reflection must preserve Φ and match coroots: s_β(γ)^∨ = s_β̌(γ̌).
  for (const Root& b : d.roots_) {
    for (const Root& g : d.roots_) {
      IntVector img = scaled_add(g.root, dot(b.coroot, g.functional) /* <γ, β̌> */, b.root);
      auto it = seen.find(img);
      if (it == seen.end()) throw InvalidDatum("reflection does not preserve Φ");
      IntVector img_co = scaled_add(g.coroot, dot(b.functional, g.coroot), b.coroot);
      if (d.roots_[it->second].coroot != img_co) throw InvalidDatum("coroot bijection is not W-equivariant");
    }
  }

  // ω̌_j = Σ_k (C^{-1})_{kj} α̌_k.
  if (r > 0) {
    auto cinv = inverse(d.cartan_);
    if (!cinv) throw InvalidDatum("singular Cartan matrix");
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<Rational> coords(n, Rational(0));
      for (std::size_t k = 0; k < r; ++k)
        for (std::size_t t = 0; t < n; ++t) coords[t] += (*cinv)[k][j] * static_cast<long>(simple_coroots(k, t));
      d.fundamental_.push_back(RationalCoweight::from_rationals(coords));
    }
  }
  d.coroot_sum_ = Coweight::zero(n);
  for (auto k : d.positive_) d.coroot_sum_ += Coweight(d.roots_[k].coroot);
  return d;
}

std::optional<std::size_t> RootDatum::find_root(const IntVector& x) const {
  for (std::size_t k = 0; k < roots_.size(); ++k)
    if (roots_[k].root == x) return k;
  return std::nullopt;
}

std::optional<std::size_t> RootDatum::find_coroot(const IntVector& y) const {
  for (std::size_t k = 0; k < roots_.size(); ++k)
    if (roots_[k].coroot == y) return k;
  return std::nullopt;
}

bool RootDatum::is_adjoint() const {
  if (semisimple_rank() != rank_) return false;
  Rational det = determinant(simple_roots_);
  return det == 1 || det == -1;
}

Rational RootDatum::pair(std::size_t root_index, const RationalCoweight& y) const {
  return make_rational(dot(roots_[root_index].functional, y.numerators()), y.denominator());
}

std::int64_t RootDatum::pair(const IntVector& weight, const Coweight& y) const {
  return dot(pairing_.transpose().apply(weight), y.coords());
}

IntVector RootDatum::fundamental_coordinates(const RationalCoweight& v) const {
  IntVector out(semisimple_rank());
  for (std::size_t i = 0; i < out.size(); ++i) {
    Rational c = pair(simple_root_index(i), v);
    if (!is_integer(c)) throw PreconditionError("point is not in Λ̌");
    out[i] = to_int64(c);
  }
  return out;
}

// -------------------------------------------------------------- operations

std::string to_string(const Coweight& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.rank(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string to_string(const RationalCoweight& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.rank(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

std::int64_t length(const RootDatum& datum, const Coweight& v) {
  std::int64_t s = 0;
  for (auto k : datum.positive_roots()) s += std::abs(datum.pair(k, v));
  return s;
}

Rational length(const RootDatum& datum, const RationalCoweight& v) {
  std::int64_t s = 0;
  for (auto k : datum.positive_roots()) s += std::abs(dot(datum.roots()[k].functional, v.numerators()));
  return make_rational(s, v.denominator());
}

bool is_dominant(const RootDatum& datum, const Coweight& v) {
  for (std::size_t i = 0; i < datum.semisimple_rank(); ++i)
    if (datum.pair(datum.simple_root_index(i), v) < 0) return false;
  return true;
}

bool in_coweight_lattice_lambda(const RootDatum& datum, const RationalCoweight& v) {
  for (std::size_t k = 0; k < datum.roots().size(); ++k)
    if (!is_integer(datum.pair(k, v))) return false;
  // Membership in Q̌ ⊗ Q: v is a rational combination of simple coroots.
  IntMatrix cols = datum.simple_coroots().transpose();
  std::vector<Rational> b(v.rank());
  for (std::size_t i = 0; i < v.rank(); ++i) b[i] = v[i];
  return datum.semisimple_rank() == 0 ? v.is_zero() : solve(cols, b).has_value();
}

InvariantProjection invariant_projection(const RootDatum& datum, const Coweight& v) {
  // q(x̌) = Σ_i <α_i, x̌> ω̌_i is the unique point of Q̌ ⊗ Q with the same
  // pairings against Π, and p(x̌) = x̌ − q(x̌) is then W₀-fixed.
  RationalCoweight q = RationalCoweight::zero(datum.rank());
  for (std::size_t i = 0; i < datum.semisimple_rank(); ++i)
    q = q + datum.pair(datum.simple_root_index(i), v) * datum.fundamental_coweights()[i];
  return {RationalCoweight(v) - q, q};
}

DominantDecomposition dominant_decomposition(const RootDatum& datum, const Coweight& v) {
  const Coweight& x0 = datum.positive_coroot_sum();
  std::int64_t m = 0;
  for (std::size_t i = 0; i < datum.semisimple_rank(); ++i) {
    std::int64_t a = datum.pair(datum.simple_root_index(i), v);
    std::int64_t b = datum.pair(datum.simple_root_index(i), x0);
    if (a < 0) m = std::max(m, (-a + b - 1) / b);
  }
  return {v + m * x0, m * x0, m};
}

std::vector<RationalCoweight> central_lattice_basis(const RootDatum& datum) {
  std::size_t n = datum.rank();
  std::vector<RationalCoweight> images;
  std::int64_t den = 1;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    images.push_back(invariant_projection(datum, Coweight(e)).p_part);
    den = std::lcm(den, images.back().denominator());
  }
  std::vector<IntVector> rows;
  for (const auto& p : images) {
    IntVector row = p.numerators();
    for (auto& x : row) x *= den / p.denominator();
    rows.push_back(row);
  }
  std::vector<RationalCoweight> basis;
  for (auto& row : lattice_basis(rows)) basis.emplace_back(row, den);
  return basis;
}

std::vector<RationalCoweight> central_window(const RootDatum& datum, std::int64_t radius) {
  std::vector<RationalCoweight> out{RationalCoweight::zero(datum.rank())};
  for (const auto& g : central_lattice_basis(datum)) {
    std::vector<RationalCoweight> next;
    for (const auto& base : out)
      for (std::int64_t b = -radius; b <= radius; ++b) next.push_back(base + b * g);
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Coweight> coweights_up_to_length(const RootDatum& datum, std::int64_t max_length,
                                             std::int64_t central_radius) {
  // x̌ = p(x̌) + q(x̌) with q(x̌) = Σ m_i ω̌_i and |m_i| = |<α_i, x̌>| <= ℓ(x̌).
  std::size_t r = datum.semisimple_rank();
  std::vector<RationalCoweight> q_candidates;
  IntVector m(r, -max_length);
  const auto& omega = datum.fundamental_coweights();
  while (true) {
    RationalCoweight q = RationalCoweight::zero(datum.rank());
    for (std::size_t i = 0; i < r; ++i) q = q + m[i] * omega[i];
    if (length(datum, q) <= max_length) q_candidates.push_back(q);
    std::size_t i = 0;
    while (i < r && m[i] == max_length) m[i++] = -max_length;
    if (i == r) break;
    ++m[i];
  }
  std::set<std::pair<std::int64_t, Coweight>> found;
  for (const auto& c : central_window(datum, central_radius)) {
    for (const auto& q : q_candidates) {
      auto x = (c + q).to_coweight();
      if (x) found.emplace(length(datum, *x), *x);
    }
  }
  std::vector<Coweight> out;
  for (const auto& [l, x] : found) out.push_back(x);
  return out;
}

std::vector<Coweight> dominant_coweights_up_to_length(const RootDatum& datum,
                                                      std::int64_t max_length,
                                                      std::int64_t central_radius) {
  std::vector<Coweight> out;
  for (auto& x : coweights_up_to_length(datum, max_length, central_radius))
    if (is_dominant(datum, x)) out.push_back(std::move(x));
  return out;
}

}  // namespace genhecke
