#include "genhecke/affine_weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "genhecke/errors.hpp"

namespace genhecke {

AffineWeylGroup::AffineWeylGroup(std::shared_ptr<const WeylGroup> weyl) : weyl_(std::move(weyl)) {
  const RootDatum& d = datum();
  const auto& roots = d.roots();
  // α ⪯ β iff β − α ∈ N·Π, i.e. Π-coordinates compare componentwise.
  auto precedes = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < d.semisimple_rank(); ++i)
      if (roots[a].simple_coords[i] > roots[b].simple_coords[i]) return false;
    return true;
  };
  for (std::size_t a = 0; a < roots.size(); ++a) {
    bool minimal = true;
    for (std::size_t b = 0; b < roots.size() && minimal; ++b)
      if (b != a && precedes(b, a)) minimal = false;
    if (minimal) minimal_.push_back(a);
  }
  for (std::size_t i = 0; i < d.semisimple_rank(); ++i) simple_.push_back({d.simple_root_index(i), 0});
  for (auto a : minimal_) simple_.push_back({a, 1});
  // s_{(α,r)} = (s_α, r·α̌).
  for (const auto& A : simple_) {
    Coweight t = A.level * Coweight(roots[A.root].coroot);
    reflections_.push_back({weyl_->reflection(A.root), t});
  }
}

AffineWeylElement AffineWeylGroup::identity() const { return {0, Coweight::zero(datum().rank())}; }

AffineWeylElement AffineWeylGroup::translation(const Coweight& x) const { return {0, x}; }

AffineWeylElement AffineWeylGroup::finite(std::size_t w) const { return {w, Coweight::zero(datum().rank())}; }

AffineWeylElement AffineWeylGroup::multiply(const AffineWeylElement& a, const AffineWeylElement& b) const {
  // (a, x)(b, y) = (ab, b⁻¹(x) + y)
  return {weyl_->multiply(a.finite, b.finite),
          weyl_->act(weyl_->inverse(b.finite), a.translation) + b.translation};
}

AffineWeylElement AffineWeylGroup::inverse(const AffineWeylElement& a) const {
  return {weyl_->inverse(a.finite), -weyl_->act(a.finite, a.translation)};
}

AffineRoot AffineWeylGroup::act(const AffineWeylElement& w, const AffineRoot& a) const {
  return {weyl_->act_on_root(w.finite, a.root), a.level - datum().pair(a.root, w.translation)};
}

bool AffineWeylGroup::is_positive(const AffineRoot& a) const {
  return a.level > 0 || (a.level == 0 && datum().roots()[a.root].positive);
}

AffineWeylElement AffineWeylGroup::times_simple(const AffineWeylElement& w, std::size_t i) const {
  const AffineRoot& A = simple_[i];
  const Root& root = datum().roots()[A.root];
  // (w₀, x)(s_α, rα̌) = (w₀ s_α, s_α(x) + rα̌) with s_α(x) = x − <α,x>α̌.
  std::int64_t c = A.level - datum().pair(A.root, w.translation);
  Coweight t = w.translation;
  IntVector coords = t.coords();
  for (std::size_t j = 0; j < coords.size(); ++j) coords[j] += c * root.coroot[j];
  return {weyl_->multiply(w.finite, reflections_[i].finite), Coweight(coords)};
}

bool AffineWeylGroup::is_right_descent(const AffineWeylElement& w, std::size_t i) const {
  return !is_positive(act(w, simple_[i]));
}

std::size_t AffineWeylGroup::length(const AffineWeylElement& w) const {
  const RootDatum& d = datum();
  std::size_t count = 0;
  for (std::size_t a = 0; a < d.roots().size(); ++a) {
    std::int64_t c = d.pair(a, w.translation);
    std::int64_t window = std::abs(c) + 1;
    for (std::int64_t r = -window; r <= window; ++r) {
      AffineRoot A{a, r};
      if (is_positive(A) && !is_positive(act(w, A))) ++count;
    }
  }
  return count;
}

ReducedWord AffineWeylGroup::reduced_word(const AffineWeylElement& w) const {
  ReducedWord out;
  AffineWeylElement cur = w;
  while (true) {
    std::size_t i = 0;
    while (i < simple_.size() && !is_right_descent(cur, i)) ++i;
    if (i == simple_.size()) break;
    cur = times_simple(cur, i);
    out.word.push_back(i);
  }
  std::reverse(out.word.begin(), out.word.end());
  out.omega = cur;
  return out;
}

std::vector<std::size_t> AffineWeylGroup::omega_permutation(const AffineWeylElement& omega) const {
  std::vector<std::size_t> perm;
  for (const auto& A : simple_) {
    AffineRoot img = act(omega, A);
    auto it = std::find(simple_.begin(), simple_.end(), img);
    if (it == simple_.end()) throw CertificationError("length-zero element does not permute Π_aff");
    perm.push_back(static_cast<std::size_t>(it - simple_.begin()));
  }
  return perm;
}

int AffineWeylGroup::epsilon(const AffineWeylElement& w) const {
  auto perm = omega_permutation(omega_part(w));
  int sign = 1;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

std::vector<AffineWeylElement> AffineWeylGroup::omega_generators() const {
  std::vector<AffineWeylElement> gens;
  for (std::size_t i = 0; i < datum().rank(); ++i) {
    Coweight e = Coweight::zero(datum().rank());
    IntVector c = e.coords();
    c[i] = 1;
    AffineWeylElement om = omega_part(translation(Coweight(c)));
    if (om == identity()) continue;
    if (std::find(gens.begin(), gens.end(), om) == gens.end()) gens.push_back(om);
  }
  return gens;
}

std::vector<AffineWeylElement> AffineWeylGroup::omega_elements(std::size_t radius) const {
  std::vector<AffineWeylElement> steps;
  for (const auto& g : omega_generators()) {
    steps.push_back(g);
    steps.push_back(inverse(g));
  }
  std::set<AffineWeylElement> seen{identity()};
  std::vector<AffineWeylElement> frontier{identity()}, out{identity()};
  for (std::size_t r = 0; r < radius && !frontier.empty(); ++r) {
    std::vector<AffineWeylElement> next;
    for (const auto& a : frontier)
      for (const auto& s : steps) {
        auto b = multiply(a, s);
        if (seen.insert(b).second) {
          next.push_back(b);
          out.push_back(b);
        }
      }
    frontier = std::move(next);
  }
  return out;
}

std::vector<AffineWeylElement> AffineWeylGroup::affine_elements_up_to_length(std::size_t max_length) const {
  std::set<AffineWeylElement> seen{identity()};
  std::vector<AffineWeylElement> frontier{identity()}, out{identity()};
  for (std::size_t l = 0; l < max_length; ++l) {
    std::vector<AffineWeylElement> next;
    for (const auto& a : frontier)
      for (std::size_t i = 0; i < simple_.size(); ++i) {
        if (is_right_descent(a, i)) continue;
        auto b = times_simple(a, i);
        if (seen.insert(b).second) {
          next.push_back(b);
          out.push_back(b);
        }
      }
    frontier = std::move(next);
  }
  return out;
}

std::vector<AffineWeylElement> AffineWeylGroup::elements_up_to_length(std::size_t max_length,
                                                                      std::size_t omega_radius) const {
  std::vector<AffineWeylElement> out;
  for (const auto& om : omega_elements(omega_radius))
    for (const auto& v : affine_elements_up_to_length(max_length)) out.push_back(multiply(om, v));
  return out;
}

}  // namespace genhecke
