#include <benchmark/benchmark.h>

#include <map>
#include <string>

#include "genhecke/center.hpp"
#include "genhecke/context.hpp"
#include "genhecke/toric.hpp"

using namespace genhecke;

namespace {

const Context& ctx(const char* name) {
  static std::map<std::string, Context> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, make_context(name)).first;
  return it->second;
}

const char* kPresets[] = {"A1-adjoint", "A2-adjoint", "B2-adjoint", "G2-adjoint", "GL3"};

void BM_WeylGroup(benchmark::State& state) {
  auto datum = std::make_shared<const RootDatum>(RootDatum::preset(kPresets[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(WeylGroup(datum).order());
  state.SetLabel(kPresets[state.range(0)]);
}
BENCHMARK(BM_WeylGroup)->DenseRange(0, 4);

// Uncached: a fresh algebra per iteration.
void BM_EElement(benchmark::State& state) {
  const Context& c = ctx(kPresets[state.range(0)]);
  auto pts = coweights_up_to_length(*c.datum, 6);
  for (auto _ : state) {
    HeckeAlgebra H(c.affine);
    for (const auto& x : pts) benchmark::DoNotOptimize(H.E_element(x).size());
  }
  state.SetLabel(kPresets[state.range(0)]);
  state.counters["coweights"] = static_cast<double>(pts.size());
}
BENCHMARK(BM_EElement)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_HeckeProduct(benchmark::State& state) {
  const Context& c = ctx(kPresets[state.range(0)]);
  const HeckeAlgebra& H = *c.hecke;
  auto elems = c.affine->elements_up_to_length(4, 1);
  std::vector<HeckeElement> iotas;
  for (const auto& w : elems) iotas.push_back(H.iota(H.basis(w)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(H.multiply(iotas[i % iotas.size()], iotas[(7 * i + 3) % iotas.size()]).size());
    ++i;
  }
  state.SetLabel(kPresets[state.range(0)]);
}
BENCHMARK(BM_HeckeProduct)->DenseRange(0, 4);

void BM_VerifyCenter(benchmark::State& state) {
  const Context& c = ctx(kPresets[state.range(0)]);
  CenterOptions opt;
  opt.max_degree = state.range(1);
  for (auto _ : state) benchmark::DoNotOptimize(verify_center(c, opt).passed());
  state.SetLabel(kPresets[state.range(0)]);
}
BENCHMARK(BM_VerifyCenter)
    ->ArgsProduct({{0, 1, 2, 3}, {4, 8}})
    ->Args({4, 6})
    ->Unit(benchmark::kMillisecond);

void BM_Presentation(benchmark::State& state) {
  const Context& c = ctx(kPresets[state.range(0)]);
  auto ell = PLFunction::length(weyl_chamber_fan(c));
  for (auto _ : state) benchmark::DoNotOptimize(verify_presentation(c, ell, state.range(1)).passed());
  state.SetLabel(kPresets[state.range(0)]);
}
BENCHMARK(BM_Presentation)->Args({0, 6})->Args({1, 5})->Args({2, 5})->Args({3, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
