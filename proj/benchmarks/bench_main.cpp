#include "reducts/anf.hpp"
#include "reducts/classifier.hpp"
#include "reducts/finite_models.hpp"
#include "reducts/term.hpp"

#include <benchmark/benchmark.h>

#include <string>

using namespace reducts;

namespace {

std::string nested_median(int depth) {
  std::string t = "x0";
  for (int i = 1; i <= depth; ++i) {
    t = "median(" + t + ", !x" + std::to_string(i % 6) + ", x" + std::to_string((i + 1) % 6) +
        " ^ x" + std::to_string((i + 3) % 6) + ")";
  }
  return t;
}

void BM_ToAnf(benchmark::State& state) {
  const Term t = parse(nested_median(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(to_anf(t));
  }
}
BENCHMARK(BM_ToAnf)->Arg(2)->Arg(4)->Arg(8);

Anf from_code(std::uint32_t code) {
  static const std::vector<std::string> vars{"a", "b", "c", "d"};
  std::vector<Monomial> ms;
  for (Monomial m = 0; m < 16; ++m) {
    if ((code >> m) & 1u) {
      ms.push_back(m);
    }
  }
  return Anf(vars, ms);
}

void BM_ClassifySweep(benchmark::State& state) {
  for (auto _ : state) {
    std::size_t median = 0;
    for (std::uint32_t code = 0; code < (1u << 16); code += 7) {
      median += classify_term(from_code(code)) == ReductNode::Median ? 1 : 0;
    }
    benchmark::DoNotOptimize(median);
  }
}
BENCHMARK(BM_ClassifySweep)->Unit(benchmark::kMillisecond);

void BM_TraceAndReplay(benchmark::State& state) {
  for (auto _ : state) {
    std::size_t ok = 0;
    for (std::uint32_t code = 1; code < (1u << 16); code += 97) {
      const Anf f = from_code(code);
      if (std::holds_alternative<NonLinearShape>(shape(f))) {
        ok += replay(reduction_trace(f)) ? 0 : 1;
      }
    }
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_TraceAndReplay)->Unit(benchmark::kMillisecond);

void BM_Stabilizer(benchmark::State& state) {
  const auto atoms = static_cast<unsigned>(state.range(0));
  const auto method = state.range(1) == 0 ? SearchMethod::Exhaustive : SearchMethod::Backtracking;
  const std::vector<Anf> fs{to_anf(parse("median(x,y,z)"))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(stabilizer(fs, atoms, method).order());
  }
}
BENCHMARK(BM_Stabilizer)
    ->Args({3, 0})
    ->Args({3, 1})
    ->Args({4, 1})
    ->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
