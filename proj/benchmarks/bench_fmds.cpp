#include <benchmark/benchmark.h>

#include <random>

#include "fmds/bounds.hpp"
#include "fmds/codec.hpp"
#include "fmds/codes.hpp"

using namespace fmds;

namespace {

void BM_FieldMul(benchmark::State& state) {
  const auto field = FieldContext::of_order(static_cast<std::uint32_t>(state.range(0)));
  std::mt19937_64 rng(1);
  std::vector<std::uint32_t> xs(1024);
  for (auto& x : xs) x = static_cast<std::uint32_t>(1 + rng() % (field->q() - 1));
  for (auto _ : state) {
    std::uint32_t acc = 1;
    for (const std::uint32_t x : xs) acc = field->mul_raw(acc, x);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_FieldMul)->Arg(8)->Arg(9)->Arg(256)->Arg(257)->Arg(65536);

void BM_Determinant(benchmark::State& state) {
  const auto field = FieldContext::of_order(257);
  const auto n = static_cast<std::size_t>(state.range(0));
  const FieldMatrix m = select_rows(fourier_matrix(field), {0, n, 1});
  std::vector<std::size_t> rows(n), cols(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = cols[i] = i;
  const FieldMatrix square = submatrix(m, rows, cols);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(square));
}
BENCHMARK(BM_Determinant)->Arg(4)->Arg(16)->Arg(64);

void BM_CertifyFull(benchmark::State& state) {
  const auto field = FieldContext::of_order(static_cast<std::uint32_t>(state.range(0)));
  const LinearCode code = extend_two_columns(code_from_rows(field, {0, static_cast<std::size_t>(state.range(1)), 1}));
  for (auto _ : state) benchmark::DoNotOptimize(certify_mds(code).minors_checked);
}
BENCHMARK(BM_CertifyFull)->Args({9, 4})->Args({27, 4})->Args({16, 8})->Unit(benchmark::kMillisecond);

void BM_CertifySampled(benchmark::State& state) {
  const LinearCode code = extend_two_columns(code_from_rows(FieldContext::of_order(257), {0, 4, 3}));
  for (auto _ : state) benchmark::DoNotOptimize(certify_mds(code, CertifyMode::sampled(10'000, 42)).verdict);
}
BENCHMARK(BM_CertifySampled)->Unit(benchmark::kMillisecond);

void BM_ErrorDecode(benchmark::State& state) {
  const auto field = FieldContext::of_order(9);
  const LinearCode code = with_check(extend_two_columns(code_from_rows(field, {0, 4, 1})));
  Word r = encode(std::vector<FieldElement>{FieldElement{1}, FieldElement{2}, FieldElement{3}, FieldElement{4}}, code);
  for (std::size_t i : {2u, 5u, 7u}) r.symbols[i] = field->add(r.symbols[i], FieldElement{1});
  for (auto _ : state) benchmark::DoNotOptimize(error_decode(r, code).corrections);
}
BENCHMARK(BM_ErrorDecode)->Unit(benchmark::kMicrosecond);

void BM_MaxLengthDim3(benchmark::State& state) {
  const auto field = FieldContext::of_order(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(max_length_dim3(field).max_n);
}
BENCHMARK(BM_MaxLengthDim3)->Arg(7)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
