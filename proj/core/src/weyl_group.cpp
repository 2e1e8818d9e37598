#include "genhecke/weyl_group.hpp"

#include <algorithm>
#include <set>

#include "genhecke/errors.hpp"

namespace genhecke {

namespace {

IntMatrix reflection_on_coweights(const RootDatum& d, const Root& root) {
  // y ↦ y − <α, y> α̌
  std::size_t n = d.rank();
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) -= root.coroot[i] * root.functional[j];
  return m;
}

IntMatrix reflection_on_weights(const RootDatum& d, const Root& root) {
  // x ↦ x − <x, α̌> α, with <x, α̌> = (P α̌) . x
  std::size_t n = d.rank();
  IntVector g = d.pairing().apply(root.coroot);
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) -= root.root[i] * g[j];
  return m;
}

}  // namespace

WeylGroup::WeylGroup(std::shared_ptr<const RootDatum> datum) : datum_(std::move(datum)) {
  const RootDatum& d = *datum_;
  std::size_t n = d.rank(), r = d.semisimple_rank();
  std::vector<IntMatrix> gen_co, gen_w;
  for (std::size_t i = 0; i < r; ++i) {
    gen_co.push_back(reflection_on_coweights(d, d.roots()[d.simple_root_index(i)]));
    gen_w.push_back(reflection_on_weights(d, d.roots()[d.simple_root_index(i)]));
  }

  elements_.push_back({IntMatrix::identity(n), IntMatrix::identity(n), {}, 0});
  index_[elements_[0].coweight_action] = 0;
  // Level-by-level closure. Scanning a level in lexicographic word order and
  // generators in increasing order assigns each new element its least word.
  std::size_t level_begin = 0, level_end = 1;
  while (level_begin < level_end) {
    for (std::size_t e = level_begin; e < level_end; ++e) {
      for (std::size_t i = 0; i < r; ++i) {
        IntMatrix m = elements_[e].coweight_action * gen_co[i];
        if (index_.count(m)) continue;
        WeylElement next{m, elements_[e].weight_action * gen_w[i], elements_[e].word,
                         elements_[e].length + 1};
        next.word.push_back(i);
        index_[next.coweight_action] = elements_.size();
        elements_.push_back(std::move(next));
      }
    }
    level_begin = level_end;
    level_end = elements_.size();
  }

  std::size_t g = elements_.size();
  mult_.resize(g * g);
  inverse_.resize(g);
  for (std::size_t a = 0; a < g; ++a)
    for (std::size_t b = 0; b < g; ++b) {
      std::size_t c = index_of(elements_[a].coweight_action * elements_[b].coweight_action);
      mult_[a * g + b] = c;
      if (c == 0) inverse_[a] = b;
    }
  for (std::size_t i = 0; i < r; ++i) simple_.push_back(index_of(gen_co[i]));
  for (const Root& root : d.roots()) reflection_.push_back(index_of(reflection_on_coweights(d, root)));

  std::size_t nr = d.roots().size();
  root_perm_.resize(g * nr);
  for (std::size_t w = 0; w < g; ++w)
    for (std::size_t k = 0; k < nr; ++k) {
      auto img = d.find_root(elements_[w].weight_action.apply(d.roots()[k].root));
      if (!img) throw InvalidDatum("Weyl element does not permute the roots");
      root_perm_[w * nr + k] = *img;
    }
}

Coweight WeylGroup::act(std::size_t w, const Coweight& v) const {
  return Coweight(elements_[w].coweight_action.apply(v.coords()));
}

RationalCoweight WeylGroup::act(std::size_t w, const RationalCoweight& v) const {
  return RationalCoweight(elements_[w].coweight_action.apply(v.numerators()), v.denominator());
}

std::size_t WeylGroup::index_of(const IntMatrix& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw Error("matrix is not an element of W₀");
  return it->second;
}

std::size_t WeylGroup::inversion_count(std::size_t w) const {
  std::size_t winv = inverse(w), count = 0;
  for (auto k : datum_->positive_roots())
    if (!datum_->roots()[act_on_root(winv, k)].positive) ++count;
  return count;
}

const std::vector<WeylElement>& enumerate(const WeylGroup& group) { return group.elements(); }

std::vector<Coweight> orbit(const WeylGroup& group, const Coweight& v) {
  std::set<Coweight> pts;
  for (std::size_t w = 0; w < group.order(); ++w) pts.insert(group.act(w, v));
  return {pts.begin(), pts.end()};
}

std::vector<RationalCoweight> orbit(const WeylGroup& group, const RationalCoweight& v) {
  std::set<RationalCoweight> pts;
  for (std::size_t w = 0; w < group.order(); ++w) pts.insert(group.act(w, v));
  return {pts.begin(), pts.end()};
}

std::vector<std::size_t> stabilizer(const WeylGroup& group, const Coweight& v) {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < group.order(); ++w)
    if (group.act(w, v) == v) out.push_back(w);
  return out;
}

std::size_t stabilizer_order(const WeylGroup& group, const Coweight& v) {
  return stabilizer(group, v).size();
}

DominantRepresentative dominant_representative(const WeylGroup& group, const Coweight& v) {
  const RootDatum& d = group.datum();
  DominantRepresentative rep{v, 0};
  while (true) {
    std::size_t i = 0;
    while (i < d.semisimple_rank() && d.pair(d.simple_root_index(i), rep.dominant) >= 0) ++i;
    if (i == d.semisimple_rank()) return rep;
    std::size_t s = group.simple_reflection(i);
    rep.dominant = group.act(s, rep.dominant);
    rep.element = group.multiply(s, rep.element);
  }
}

bool same_chamber(const RootDatum& datum, const Coweight& a, const Coweight& b) {
  return length(datum, a + b) == length(datum, a) + length(datum, b);
}

bool same_chamber_by_search(const WeylGroup& group, const Coweight& a, const Coweight& b) {
  for (std::size_t w = 0; w < group.order(); ++w)
    if (is_dominant(group.datum(), group.act(w, a)) && is_dominant(group.datum(), group.act(w, b)))
      return true;
  return false;
}

}  // namespace genhecke
