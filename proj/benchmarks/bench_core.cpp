#include <benchmark/benchmark.h>

#include <random>

#include "wittforge/bounds.hpp"
#include "wittforge/clifford.hpp"
#include "wittforge/pfister.hpp"
#include "wittforge/witt.hpp"

using namespace wittforge;

namespace {

std::mt19937_64 rng(1234);

FieldElem rand_rational(int height = 50) {
  std::uniform_int_distribution<int> num(1, height), den(1, height), sgn(0, 1);
  return FieldElem::rational(Rational((sgn(rng) ? 1 : -1) * num(rng), den(rng)));
}

DiagonalForm rand_form_in_I2(std::size_t dim) {
  std::vector<FieldElem> c;
  Rational prod(1);
  for (std::size_t i = 0; i + 1 < dim; ++i) {
    c.push_back(rand_rational());
    prod *= c.back().value();
  }
  c.push_back(FieldElem::rational(Rational((dim * (dim - 1) / 2) % 2 ? -1 : 1) / prod));
  return DiagonalForm(BaseField::rationals(), std::move(c));
}

void BM_CliffMul(benchmark::State& state) {
  const int n = 14;
  std::vector<CliffordElement> elems;
  for (int i = 0; i < 256; ++i) {
    const std::uint32_t low = static_cast<std::uint32_t>(rng()) & ((1u << (n - 1)) - 1);
    const std::uint32_t top = static_cast<std::uint32_t>(__builtin_popcount(low) & 1)
                              << (n - 1);
    elems.emplace_back(n, low | top, rng() & 1);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cliff_mul(elems[i & 255], elems[(i * 7 + 3) & 255]));
    ++i;
  }
}
BENCHMARK(BM_CliffMul);

void BM_GroupSummaryBrute(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(group_summary(n));
}
BENCHMARK(BM_GroupSummaryBrute)->Arg(8)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_HilbertSymbol(benchmark::State& state) {
  std::vector<std::pair<FieldElem, FieldElem>> pairs;
  for (int i = 0; i < 64; ++i) pairs.emplace_back(rand_rational(), rand_rational());
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i & 63];
    benchmark::DoNotOptimize(hilbert_symbol(a, b, Place::finite(2)));
    ++i;
  }
}
BENCHMARK(BM_HilbertSymbol);

void BM_Invariants(benchmark::State& state) {
  const DiagonalForm q = rand_form_in_I2(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(invariants(q));
}
BENCHMARK(BM_Invariants)->Arg(4)->Arg(8)->Arg(12);

void BM_DecomposeI2(benchmark::State& state) {
  const DiagonalForm q = rand_form_in_I2(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decompose_I2(q));
}
BENCHMARK(BM_DecomposeI2)->Arg(4)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_AnisotropicKernel(benchmark::State& state) {
  const BaseField f = BaseField::prime_field(static_cast<std::uint32_t>(state.range(0)));
  std::uniform_int_distribution<std::uint32_t> pick(1, f.p - 1);
  std::vector<FieldElem> c;
  for (int i = 0; i < 8; ++i) c.push_back(FieldElem::residue(f, pick(rng)));
  const DiagonalForm q(f, c);
  for (auto _ : state) benchmark::DoNotOptimize(anisotropic_kernel_fp(q));
}
BENCHMARK(BM_AnisotropicKernel)->Arg(3)->Arg(7)->Arg(13);

void BM_PfisterNumberFp(benchmark::State& state) {
  const BaseField f = BaseField::prime_field(7);
  const DiagonalForm q = expand_pfister(PfisterSlots(+1, {FieldElem::one(f)}));
  for (auto _ : state) benchmark::DoNotOptimize(pfister_number_upper_fp(q, 1));
}
BENCHMARK(BM_PfisterNumberFp);

void BM_RPlus(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(r_plus(n, RootParity::even));
}
BENCHMARK(BM_RPlus)->Arg(12)->Arg(40)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
