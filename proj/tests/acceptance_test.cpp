// Acceptance gate: one self-contained binary, one PASS/FAIL line per
// criterion, exit code = number of failures.  Everything here recomputes its
// expectations from first principles (exhaustive checks, closed-form values,
// or recounted Monte-Carlo rates) rather than trusting library internals.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "grouptest/analysis.hpp"
#include "grouptest/bit_matrix.hpp"
#include "grouptest/bitvec.hpp"
#include "grouptest/decode.hpp"
#include "grouptest/function_table.hpp"
#include "grouptest/hypergraph.hpp"
#include "grouptest/induced_code.hpp"
#include "grouptest/kautz_singleton.hpp"
#include "grouptest/mixtures.hpp"
#include "grouptest/noise.hpp"
#include "grouptest/random.hpp"
#include "grouptest/scheme_params.hpp"
#include "grouptest/support_set.hpp"

using namespace gt;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int index, bool pass, const std::string& detail) {
    std::printf("criterion %2d: %s — %s\n", index, pass ? "PASS" : "FAIL", detail.c_str());
    if (!pass) ++g_failures;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

SupportSet draw_support(std::mt19937_64& rng, std::uint64_t universe, std::uint64_t d) {
    auto picks = sample_distinct(rng, universe, d);
    return SupportSet(universe, std::vector<std::uint32_t>(picks.begin(), picks.end()));
}

std::string fmt(double v, int digits = 2) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(digits);
    os << v;
    return os.str();
}

// ---- criteria 1 and 2: planner bundles, Monte-Carlo decoding --------------

void criterion_noiseless() {
    auto start = Clock::now();
    SchemeParams params = plan_extractor_style(4, 256, Rational(0), Rational(0));
    InducedCode code = induced_code(
        random_function(params.n_bits, params.t_bits, params.l_bits, 20260817));
    BitMatrix A = codeword_graph_matrix(code);

    int good = 0;
    const int trials = 1000;
    for (int trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng(mix_seed(1001, trial));
        SupportSet x = draw_support(rng, params.N(), params.sparsity);
        DecodeResult r = threshold_decode(A, encode(A, x), params.T(), params.nu_over_gamma());
        if (x.is_subset_of(r.support) && r.support.weight() < params.K()) ++good;
    }
    double secs = seconds_since(start);
    bool pass = good == trials && secs < 10.0;
    report(1, pass,
           "noiseless D=4 N=256: " + std::to_string(good) + "/" + std::to_string(trials) +
               " trials recovered a superset with weight < K=" + std::to_string(params.K()) +
               ", M=" + std::to_string(A.rows()) + ", " + fmt(secs) + "s (target 10s)");
}

void criterion_noisy() {
    SchemeParams params = plan_extractor_style(4, 256, Rational(1, 10), Rational(1, 125));
    InducedCode code = induced_code(
        random_function(params.n_bits, params.t_bits, params.l_bits, 20260818));
    BitMatrix A = codeword_graph_matrix(code);
    NoiseBudget budget{params.e0_budget(), params.e1_budget()};

    int good = 0;
    const int trials = 1000;
    for (int trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng(mix_seed(1002, trial));
        SupportSet x = draw_support(rng, params.N(), params.sparsity);
        CorruptionResult noisy = corrupt_random(encode(A, x), budget, rng());
        DecodeResult r =
            threshold_decode(A, noisy.observation, params.T(), params.nu_over_gamma());
        if (x.is_subset_of(r.support) && r.support.weight() < params.K()) ++good;
    }
    bool pass = good >= 990;
    report(2, pass,
           "random noise at budgets (" + std::to_string(budget.e0) + "," +
               std::to_string(budget.e1) + "): " + std::to_string(good) + "/" +
               std::to_string(trials) +
               " trials with zero false negatives and weight < K=" +
               std::to_string(params.K()) + " (floor 990; pass rate is the regression baseline)");
}

// ---- criterion 3: Kautz-Singleton disjunctness, exhaustively --------------

std::vector<std::uint64_t> column_masks(const BitMatrix& A) {
    std::vector<std::uint64_t> masks(A.cols(), 0);
    for (std::uint64_t c = 0; c < A.cols(); ++c)
        for (std::uint32_t r : A.column(c)) masks[c] |= std::uint64_t{1} << r;
    return masks;
}

// True iff no column is covered by the union of any d others.
bool disjunct_exhaustive(const std::vector<std::uint64_t>& masks, std::uint64_t d) {
    const std::uint64_t n = masks.size();
    std::vector<std::uint64_t> others;
    for (std::uint64_t target = 0; target < n; ++target) {
        others.clear();
        for (std::uint64_t c = 0; c < n; ++c)
            if (c != target) others.push_back(masks[c]);
        std::vector<std::uint64_t> combo(d);
        for (std::uint64_t i = 0; i < d; ++i) combo[i] = i;
        for (;;) {
            std::uint64_t uni = 0;
            for (std::uint64_t i : combo) uni |= others[i];
            if ((masks[target] & ~uni) == 0) return false;
            std::uint64_t i = d;
            while (i > 0 && combo[i - 1] == others.size() - d + i - 1) --i;
            if (i == 0) break;
            ++combo[i - 1];
            for (std::uint64_t j = i; j < d; ++j) combo[j] = combo[j - 1] + 1;
        }
    }
    return true;
}

void criterion_kautz_singleton() {
    auto start = Clock::now();
    BitMatrix A = kautz_singleton_matrix(5, 2);
    bool shape = A.rows() == 25 && A.cols() == 25;

    auto masks = column_masks(A);
    bool four = disjunct_exhaustive(masks, 4);
    bool five_fails = !disjunct_exhaustive(masks, 5);

    std::uint64_t worst_overlap = 0;
    for (std::uint64_t a = 0; a < 25; ++a)
        for (std::uint64_t b = a + 1; b < 25; ++b)
            worst_overlap =
                std::max<std::uint64_t>(worst_overlap,
                                        __builtin_popcountll(masks[a] & masks[b]));
    double secs = seconds_since(start);
    bool pass = shape && four && five_fails && worst_overlap <= 1 && secs < 1.0;
    report(3, pass,
           std::string("q=5 w=2 (25x25): 4-disjunct ") + (four ? "holds" : "FAILS") +
               ", 5-disjunct correctly fails: " + (five_fails ? "yes" : "no") +
               ", max pairwise overlap " + std::to_string(worst_overlap) + ", " + fmt(secs, 3) +
               "s (target 1s)");
}

// ---- criteria 4-6: the exhaustive verifier and the row-count bounds -------

struct CorpusEntry {
    std::string label;
    BitMatrix matrix;
    std::uint64_t d;
    NoiseBudget budget;
    AccuracyBudget acc;
};

std::vector<CorpusEntry> verifier_corpus() {
    std::vector<CorpusEntry> corpus;
    for (std::uint64_t n : {4, 6, 8}) {
        corpus.push_back({"identity" + std::to_string(n) + " clean",
                          BitMatrix::identity(n), 1, {0, 0}, {0, 0}});
        corpus.push_back({"identity" + std::to_string(n) + " noisy",
                          BitMatrix::identity(n), 1, {1, 0}, {1, 0}});
    }
    corpus.push_back({"ks(3,2) d=2", kautz_singleton_matrix(3, 2), 2, {0, 0}, {0, 0}});
    corpus.push_back({"ks(5,2) d=4", kautz_singleton_matrix(5, 2), 4, {0, 0}, {0, 0}});
    return corpus;
}

void criterion_verifier() {
    auto start = Clock::now();
    BitMatrix I = BitMatrix::identity(8);
    VerifyReport clean = verify_correcting(I, 1, {0, 0}, {0, 0});
    VerifyReport noisy = verify_correcting(I, 1, {1, 0}, {1, 0});

    BitMatrix dup(4, 4, {{0, 1}, {0, 1}, {2}, {3}});
    VerifyReport bad = verify_correcting(dup, 1, {0, 0}, {0, 0});
    bool witness_ok = !bad.pass && bad.witness_observation.has_value() &&
                      bad.witness_recovered.has_value() && bad.witness_violator.has_value() &&
                      bad.witness_violator->is_subset_of(*bad.witness_recovered) &&
                      bad.witness_recovered->difference_size(*bad.witness_violator) > 0 &&
                      encode(dup, *bad.witness_violator) == *bad.witness_observation;

    double secs = seconds_since(start);
    bool pass = clean.pass && noisy.pass && witness_ok && secs < 1.0;
    report(4, pass,
           "identity 8x8 passes d=1 at (0,0)/(0,0) and (1,0)/(1,0) [" +
               std::to_string(clean.pairs_evaluated) + " and " +
               std::to_string(noisy.pairs_evaluated) +
               " pairs]; duplicated-column matrix fails with a consistent witness: " +
               (witness_ok ? "yes" : "no") + ", " + fmt(secs, 3) + "s (target 1s)");
}

void criterion_lemma1() {
    auto corpus = verifier_corpus();
    int passing = 0, violations = 0;
    for (const auto& entry : corpus) {
        VerifyReport vr = verify_correcting(entry.matrix, entry.d, entry.budget, entry.acc);
        if (!vr.pass) continue;
        ++passing;
        BoundReport lr = lemma1_check(entry.matrix.rows(), entry.d, entry.budget.e0,
                                      entry.budget.e1, entry.acc.e0, entry.acc.e1);
        if (!lr.satisfied) ++violations;
    }
    bool pass = violations == 0 && passing == static_cast<int>(corpus.size());
    report(5, pass,
           "lemma 1 holds for " + std::to_string(passing) + "/" +
               std::to_string(corpus.size()) + " verifier-passing corpus entries, " +
               std::to_string(violations) + " violations");
}

void criterion_lemma3() {
    auto corpus = verifier_corpus();
    int checked = 0, violations = 0;
    for (const auto& entry : corpus) {
        if (entry.budget.e0 != 0 || entry.budget.e1 != 0) continue; // noiseless only
        VerifyReport vr = verify_correcting(entry.matrix, entry.d, entry.budget, entry.acc);
        if (!vr.pass) continue;
        ++checked;
        Lemma3Bound bound =
            lemma3_bound(entry.matrix.cols(), entry.d, entry.acc.e0, entry.acc.e1);
        if (bound.exact_bound > 0 &&
            entry.matrix.rows() < static_cast<std::uint64_t>(bound.exact_bound))
            ++violations;
    }
    Lemma3Bound headline = lemma3_bound(1024, 8, 8, 0);
    bool headline_ok = std::abs(headline.closed_form - 40.0) < 1e-9;
    bool pass = violations == 0 && checked > 0 && headline_ok;
    report(6, pass,
           "rows >= exact counting bound on " + std::to_string(checked) +
               " noiseless corpus entries (" + std::to_string(violations) +
               " violations); closed form at (1024,8,8,0) = " + fmt(headline.closed_form, 6));
}

// ---- criterion 7: list-size bound on observation-derived mixtures ---------

void criterion_list_bound() {
    SchemeParams params = plan_extractor_style(4, 256, Rational(1, 10), Rational(1, 125));
    InducedCode code = induced_code(
        random_function(params.n_bits, params.t_bits, params.l_bits, 20260818));
    BitMatrix A = codeword_graph_matrix(code);
    NoiseBudget budget{params.e0_budget(), params.e1_budget()};

    auto sampler = [&](std::uint64_t trial) {
        std::mt19937_64 rng(mix_seed(1007, trial));
        SupportSet x = draw_support(rng, params.N(), params.sparsity);
        CorruptionResult noisy = corrupt_random(encode(A, x), budget, rng());
        return mixture_from_observation(noisy.observation, params.T(), params.L());
    };
    ListBoundReport r = check_list_bound(code, params.k_bits, params.k_prime_bits,
                                         params.eps, sampler, 200);
    bool pass = r.violations == 0 && r.samples == 200;
    report(7, pass,
           "list bound |LIST| < 2^k=" + std::to_string(r.bound) + " on 200 mixtures: " +
               std::to_string(r.violations) + " violations, " + std::to_string(r.vacuous) +
               " vacuous, max list size " + std::to_string(r.max_list_size));
}

// ---- criterion 8: hypergraph matching lemma --------------------------------

void criterion_matching() {
    int violations = 0;
    for (int i = 0; i < 500; ++i) {
        std::mt19937_64 rng(mix_seed(1008, i));
        std::uint32_t c = 2 + i % 3;
        std::uint32_t v = c + 2 + static_cast<std::uint32_t>(rng() % (38 - c));
        std::uint32_t edges = 1 + static_cast<std::uint32_t>(rng() % 60);
        std::vector<std::vector<std::uint32_t>> edge_list;
        for (std::uint32_t e = 0; e < edges; ++e) {
            auto picks = sample_distinct(rng, v, c);
            edge_list.emplace_back(picks.begin(), picks.end());
        }
        Hypergraph g(v, c, std::move(edge_list));
        if (!check_matching_lemma(g).satisfied) ++violations;
    }
    report(8, violations == 0,
           "greedy matching >= (eps/c^2)(V-c+1) on 500 random hypergraphs (c in {2,3,4}, "
           "V <= 40): " +
               std::to_string(violations) + " violations");
}

// ---- criterion 9: nu0 ------------------------------------------------------

void criterion_nu0() {
    double at_zero = nu0(Rational(0));
    bool anchor = std::abs(at_zero - 0.236068) <= 1e-6;
    bool decreasing = true;
    double prev = at_zero;
    for (int i = 1; i < 100; ++i) {
        double cur = nu0(Rational(i, 100));
        if (!(cur < prev)) decreasing = false;
        prev = cur;
    }
    report(9, anchor && decreasing,
           "nu0(0) = " + fmt(at_zero, 6) + " (within 1e-6 of 0.236068), strictly decreasing "
           "on the 100-point grid: " +
               (decreasing ? "yes" : "no"));
}

// ---- criterion 10: CLI determinism -----------------------------------------

#ifdef GT_CLI_PATH
std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int run_cli(const std::string& args) {
    std::string cmd = std::string(GT_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    return std::system(cmd.c_str());
}
#endif

void criterion_determinism() {
#ifndef GT_CLI_PATH
    report(10, false, "CLI binary unavailable (tools were not built); cannot check");
#else
    fs::path dir = fs::temp_directory_path() /
                   ("gt-acceptance-" + std::to_string(static_cast<unsigned>(::getpid())));
    fs::create_directories(dir);
    auto p = [&](const char* name) { return (dir / name).string(); };

    const std::string gen_args = "gen --kind random --n-bits 6 --t-bits 4 --l-bits 3 --seed 99";
    int rc = 0;
    rc |= run_cli(gen_args + " --out " + p("g1.gtm"));
    rc |= run_cli(gen_args + " --out " + p("g2.gtm"));

    const std::string sweep_args = "sweep --matrix " + p("g1.gtm") +
                                   " --sparsity 2 --trials 25 --seed 5 -T 16"
                                   " --nu-over-gamma 1/8 --weight-cap 8 --grid 3:1,0:0";
    rc |= run_cli(sweep_args + " --out " + p("s1.csv"));
    rc |= run_cli(sweep_args + " --out " + p("s2.csv"));

    std::string g1 = slurp(p("g1.gtm")), g2 = slurp(p("g2.gtm"));
    std::string s1 = slurp(p("s1.csv")), s2 = slurp(p("s2.csv"));
    fs::remove_all(dir);

    bool pass = rc == 0 && !g1.empty() && g1 == g2 && !s1.empty() && s1 == s2;
    report(10, pass,
           "gen and sweep reruns byte-identical (matrix " + std::to_string(g1.size()) +
               " bytes, csv " + std::to_string(s1.size()) + " bytes): " +
               (pass ? "yes" : "no"));
#endif
}

} // namespace

int main() {
    criterion_noiseless();
    criterion_noisy();
    criterion_kautz_singleton();
    criterion_verifier();
    criterion_lemma1();
    criterion_lemma3();
    criterion_list_bound();
    criterion_matching();
    criterion_nu0();
    criterion_determinism();
    std::printf("acceptance: %d/10 criteria passed\n", 10 - g_failures);
    return g_failures;
}
