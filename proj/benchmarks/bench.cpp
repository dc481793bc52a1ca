#include <benchmark/benchmark.h>

#include <filesystem>

#include "sctt/library/session.hpp"
#include "sctt/shape/weak_order.hpp"

using namespace sctt;

namespace {

// x0 <= x1 <= ... <= x{n-1}, as a chain of conjunctions.
shape::Tope chain(int n) {
  auto t = shape::Tope::top();
  for (int i = 0; i + 1 < n; ++i)
    t = shape::Tope::conj(t, shape::Tope::leq(shape::Point::variable(i), shape::Point::variable(i + 1)));
  return t;
}

shape::CubeContext cube(int n) {
  shape::CubeContext ctx;
  for (int i = 0; i < n; ++i) ctx.names.push_back("x" + std::to_string(i));
  return ctx;
}

void BM_WeakOrders(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(shape::enumerate_weak_orders(n));
}
BENCHMARK(BM_WeakOrders)->DenseRange(1, 7);

// chain => x0 <= x{n-1}: valid, so every order is visited.
void BM_EntailTransitivity(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto ctx = cube(n);
  const auto hyp = chain(n);
  const auto goal = shape::Tope::leq(shape::Point::variable(0), shape::Point::variable(n - 1));
  for (auto _ : state) benchmark::DoNotOptimize(shape::tope_entails(ctx, hyp, goal));
}
BENCHMARK(BM_EntailTransitivity)->DenseRange(2, 8);

void BM_HornInTriangle(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(shape::shape_includes(shape::Shape::horn21(), shape::Shape::delta2()));
}
BENCHMARK(BM_HornInTriangle);

void BM_CheckLibrary(benchmark::State& state) {
  const auto paths = library::prelude_paths(SCTT_LIB_DIR);
  for (auto _ : state) benchmark::DoNotOptimize(library::load_prelude(paths));
}
BENCHMARK(BM_CheckLibrary)->Unit(benchmark::kMillisecond);

void BM_NormalizeComp(benchmark::State& state) {
  static const library::Session session = [] {
    auto s = library::load_prelude(library::prelude_paths(SCTT_LIB_DIR));
    s.check_source("ctx.stt",
                   "postulate A : U ;\npostulate is : isSegal A ;\npostulate x : A ;\npostulate y : A ;\n"
                   "postulate z : A ;\npostulate g : hom A x y ;\npostulate f : hom A y z ;\n");
    return s;
  }();
  for (auto _ : state) benchmark::DoNotOptimize(session.normalize("comp A is x y z f g"));
}
BENCHMARK(BM_NormalizeComp);

}  // namespace

BENCHMARK_MAIN();
