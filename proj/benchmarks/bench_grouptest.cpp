// Microbenchmarks for the hot paths: matrix construction, encoding, noise
// injection, threshold decoding and agreement-list scans.
//
//   ./gt_bench                        # everything
//   ./gt_bench --benchmark_filter=Decode

#include <cstdint>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "grouptest/bit_matrix.hpp"
#include "grouptest/bitvec.hpp"
#include "grouptest/decode.hpp"
#include "grouptest/function_table.hpp"
#include "grouptest/induced_code.hpp"
#include "grouptest/kautz_singleton.hpp"
#include "grouptest/mixtures.hpp"
#include "grouptest/noise.hpp"
#include "grouptest/random.hpp"
#include "grouptest/support_set.hpp"

using namespace gt;

namespace {

// One shared desk-scale instance: N=1024 items, T=128 tests of L=32 pools
// each (M=4096 rows), the size the planners produce for D around 8.
const InducedCode& bench_code() {
    static const InducedCode code = induced_code(random_function(10, 7, 5, 12345));
    return code;
}

const BitMatrix& bench_matrix() {
    static const BitMatrix A = codeword_graph_matrix(bench_code());
    return A;
}

SupportSet bench_support(std::uint64_t weight, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto picks = sample_distinct(rng, bench_matrix().cols(), weight);
    return SupportSet(bench_matrix().cols(),
                      std::vector<std::uint32_t>(picks.begin(), picks.end()));
}

void BM_RandomCodewordGraph(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        InducedCode code = induced_code(random_function(n, 7, 5, 99));
        benchmark::DoNotOptimize(codeword_graph_matrix(code));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RandomCodewordGraph)->Arg(8)->Arg(10)->Arg(12);

void BM_KautzSingleton(benchmark::State& state) {
    const auto q = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kautz_singleton_matrix(q, 2));
}
BENCHMARK(BM_KautzSingleton)->Arg(31)->Arg(61);

void BM_Encode(benchmark::State& state) {
    const BitMatrix& A = bench_matrix();
    SupportSet x = bench_support(static_cast<std::uint64_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(encode(A, x));
}
BENCHMARK(BM_Encode)->Arg(4)->Arg(16)->Arg(64);

void BM_CorruptRandom(benchmark::State& state) {
    const BitMatrix& A = bench_matrix();
    BitVec y = encode(A, bench_support(8, 2));
    NoiseBudget budget{static_cast<std::uint64_t>(state.range(0)), 8};
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(corrupt_random(y, budget, seed++));
}
BENCHMARK(BM_CorruptRandom)->Arg(64)->Arg(409);

void BM_ThresholdDecode(benchmark::State& state) {
    const BitMatrix& A = bench_matrix();
    BitVec y = corrupt_random(encode(A, bench_support(8, 3)), {409, 8}, 7).observation;
    for (auto _ : state)
        benchmark::DoNotOptimize(threshold_decode(A, y, 128, Rational(8, 125)));
}
BENCHMARK(BM_ThresholdDecode);

void BM_AgreementList(benchmark::State& state) {
    const InducedCode& code = bench_code();
    BitVec y = corrupt_random(encode(bench_matrix(), bench_support(8, 4)), {409, 8}, 9)
                   .observation;
    Mixture S = mixture_from_observation(y, 128, 32);
    for (auto _ : state)
        benchmark::DoNotOptimize(agreement_list(code, S, Rational(1, 2)));
}
BENCHMARK(BM_AgreementList);

} // namespace

int main(int argc, char** argv) {
    ::benchmark::Initialize(&argc, argv);
    if (::benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    ::benchmark::RunSpecifiedBenchmarks();
    return 0;
}
