#pragma once
// Seeded generators for the property tests.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "genhecke/context.hpp"

namespace genhecke::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(n) - 1)); }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[index(v.size())];
  }

  Coweight coweight(std::size_t rank, std::int64_t bound) {
    IntVector c(rank);
    for (auto& x : c) x = integer(-bound, bound);
    return Coweight(c);
  }

 private:
  std::mt19937_64 rng_;
};

inline const std::vector<std::string>& all_presets() { return RootDatum::preset_names(); }

inline const std::vector<std::string>& adjoint_presets() {
  static const std::vector<std::string> names{"A1-adjoint", "A1xA1-adjoint", "A2-adjoint", "B2-adjoint",
                                              "G2-adjoint"};
  return names;
}

inline const Context& cached_context(const std::string& name) {
  static std::map<std::string, Context> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, make_context(name)).first;
  return it->second;
}

}  // namespace genhecke::testing
