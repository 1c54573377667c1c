#include "grouptest/sweep.hpp"

#include <atomic>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "grouptest/decode.hpp"
#include "grouptest/noise.hpp"
#include "grouptest/random.hpp"
#include "grouptest/support_set.hpp"

namespace gt {
namespace {

struct Row {
    std::uint64_t e0_applied = 0;
    std::uint64_t e1_applied = 0;
    std::uint64_t decoded_weight = 0;
    std::uint64_t false_pos = 0;
    std::uint64_t false_neg = 0;
    bool success = false;
};

// Chunked parallel map over [0, n); fn must touch disjoint state per index.
void parallel_for(std::uint64_t n, const std::function<void(std::uint64_t)>& fn) {
    unsigned workers = std::min<std::uint64_t>(std::thread::hardware_concurrency(), n);
    if (workers <= 1) {
        for (std::uint64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                std::uint64_t i = next.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        });
    for (auto& t : pool) t.join();
}

} // namespace

std::string run_sweep(const BitMatrix& A, const SweepConfig& config) {
    if (config.sparsity == 0 || config.sparsity > A.cols())
        throw std::invalid_argument("sweep: sparsity must lie in [1, columns]");
    if (config.trials == 0) throw std::invalid_argument("sweep: need at least one trial");
    if (config.grid.empty()) throw std::invalid_argument("sweep: empty noise grid");
    if (config.weight_cap == 0) throw std::invalid_argument("sweep: weight cap must be >= 1");

    // Let the decoder contract fail before any thread spawns.
    for (std::uint64_t c = 0; c < A.cols(); ++c)
        if (A.column_weight(c) != config.block_length)
            throw ColumnWeightError("sweep: column weight != block length");

    std::ostringstream out;
    out << "trial,e0_applied,e1_applied,decoded_weight,false_pos,false_neg,success\n";

    std::vector<Row> rows(config.trials);
    for (std::size_t g = 0; g < config.grid.size(); ++g) {
        const GridPoint& point = config.grid[g];
        parallel_for(config.trials, [&](std::uint64_t t) {
            // All randomness of a trial flows from its derived seed.
            const std::uint64_t trial_seed = mix_seed(config.seed, g * config.trials + t);
            std::mt19937_64 rng(trial_seed);
            auto picks = sample_distinct(rng, A.cols(), config.sparsity);
            SupportSet x(A.cols(),
                         std::vector<std::uint32_t>(picks.begin(), picks.end()));
            BitVec y = encode(A, x);
            CorruptionResult corrupted =
                corrupt_random(y, {point.e0, point.e1}, rng());
            DecodeResult decoded = threshold_decode(A, corrupted.observation,
                                                    config.block_length,
                                                    config.nu_over_gamma);
            Row& row = rows[t];
            row.e0_applied = corrupted.e0_applied;
            row.e1_applied = corrupted.e1_applied;
            row.decoded_weight = decoded.support.weight();
            row.false_pos = decoded.support.difference_size(x);
            row.false_neg = x.difference_size(decoded.support);
            row.success = row.false_neg == 0 && row.decoded_weight < config.weight_cap;
        });
        for (std::uint64_t t = 0; t < config.trials; ++t) {
            const Row& row = rows[t];
            out << t << ',' << row.e0_applied << ',' << row.e1_applied << ','
                << row.decoded_weight << ',' << row.false_pos << ',' << row.false_neg
                << ',' << (row.success ? 1 : 0) << '\n';
        }
    }
    return out.str();
}

} // namespace gt
