#include <benchmark/benchmark.h>

#include "umbilic/foliation.hpp"
#include "umbilic/lemma_check.hpp"
#include "umbilic/svg.hpp"

using namespace umbilic;

namespace {

// validate_C0 compares all sample pairs, so cost grows quadratically.
void BM_ValidateC0(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Route r = builtin({BuiltinName::Pencil, Transversal::hypercycle(0.9)}, -3, 3, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(validate_C0(r));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ValidateC0)->RangeMultiplier(4)->Range(64, 4096)->Complexity(benchmark::oNSquared);

void BM_ValidateC1(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Route r = builtin({BuiltinName::Pencil, Transversal::geodesic()}, -3, 3, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(validate_C1(r));
  }
}
BENCHMARK(BM_ValidateC1)->Range(64, 4096);

void BM_Contact(benchmark::State& state) {
  const Leaf a = leaf_orthogonal_to_geodesic(1.0, 2.0);
  const Leaf b = leaf_orthogonal_to_geodesic(1.05, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(upper_halfplane_contact(a, b));
  }
}
BENCHMARK(BM_Contact);

void BM_SynthesizeAudit(benchmark::State& state) {
  const Route r = random_valid_route(Transversal::hypercycle(0.7), 3);
  for (auto _ : state) {
    const FoliationSlice s = extend(synthesize(r));
    benchmark::DoNotOptimize(verify_disjoint(s));
  }
}
BENCHMARK(BM_SynthesizeAudit);

void BM_LemmaCheck(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(lemma_check(7, 1000));
  }
}
BENCHMARK(BM_LemmaCheck);

void BM_RenderPencil(benchmark::State& state) {
  const FoliationSlice s =
      synthesize(builtin({BuiltinName::Pencil, Transversal::geodesic()}, -3, 3, 41));
  for (auto _ : state) {
    benchmark::DoNotOptimize(render_svg(s, Viewport{}));
  }
}
BENCHMARK(BM_RenderPencil);

}  // namespace

BENCHMARK_MAIN();
