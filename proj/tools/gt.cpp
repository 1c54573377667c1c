// gt: command-line front end for the group-testing toolkit.
//
// Subcommands cover the full pipeline: gen -> encode -> corrupt -> decode,
// plus plan (parameter bundles), verify (exhaustive correctness / empirical
// list bound), bounds (lemma oracles) and sweep (Monte-Carlo CSV).
//
// Exit codes: 0 success, 1 usage error, 2 contract violation (bad file,
// infeasible parameters, dimension mismatch, cap exceeded, ...).  verify
// exits 0 even when the result is "fail": a failed check is a successful run.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "grouptest/analysis.hpp"
#include "grouptest/bit_matrix.hpp"
#include "grouptest/decode.hpp"
#include "grouptest/errors.hpp"
#include "grouptest/formats.hpp"
#include "grouptest/function_table.hpp"
#include "grouptest/induced_code.hpp"
#include "grouptest/kautz_singleton.hpp"
#include "grouptest/mixtures.hpp"
#include "grouptest/noise.hpp"
#include "grouptest/random.hpp"
#include "grouptest/rational.hpp"
#include "grouptest/scheme_params.hpp"
#include "grouptest/support_set.hpp"
#include "grouptest/sweep.hpp"

namespace {

gt::Rational rat(const std::string& text) { return gt::Rational::parse(text); }

// floor(r * m) for r >= 0.
std::uint64_t floor_mul(const gt::Rational& r, std::uint64_t m) {
    __int128 num = static_cast<__int128>(r.num()) * static_cast<__int128>(m);
    return static_cast<std::uint64_t>(num / r.den());
}

std::string join_indices(const gt::SupportSet& x) {
    std::ostringstream out;
    for (std::size_t i = 0; i < x.indices().size(); ++i) {
        if (i) out << ' ';
        out << x.indices()[i];
    }
    return out.str();
}

std::vector<gt::GridPoint> parse_grid(const std::string& text) {
    std::vector<gt::GridPoint> grid;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("grid entry '" + item + "' is not e0:e1");
        grid.push_back({std::stoull(item.substr(0, colon)),
                        std::stoull(item.substr(colon + 1))});
    }
    return grid;
}

struct GenArgs {
    std::string kind = "random";
    unsigned n_bits = 0, t_bits = 0, l_bits = 0;
    std::uint64_t seed = 0;
    std::uint32_t q = 0, w = 0;
    std::string out;
};

void run_gen(const GenArgs& a) {
    gt::BitMatrix A = [&] {
        if (a.kind == "random") {
            auto code = gt::induced_code(
                gt::random_function(a.n_bits, a.t_bits, a.l_bits, a.seed));
            return gt::codeword_graph_matrix(code);
        }
        if (a.kind == "kautz-singleton") return gt::kautz_singleton_matrix(a.q, a.w);
        throw std::invalid_argument("unknown --kind '" + a.kind + "'");
    }();
    gt::write_gtm1(a.out, A);
    std::cout << "rows=" << A.rows() << "\ncols=" << A.cols() << "\n";
}

struct PlanArgs {
    std::string style = "extractor";
    std::uint64_t sparsity = 0, universe = 0;
    std::string p = "0", nu = "0", delta = "1/2";
    unsigned t_bits = 0;
};

void run_plan(const PlanArgs& a) {
    gt::PlannerOptions options;
    options.t_bits_override = a.t_bits;
    gt::SchemeParams params = [&] {
        if (a.style == "extractor")
            return gt::plan_extractor_style(a.sparsity, a.universe, rat(a.p), rat(a.nu),
                                            options);
        if (a.style == "lossless")
            return gt::plan_lossless_style(a.sparsity, a.universe, rat(a.delta), options);
        throw std::invalid_argument("unknown --style '" + a.style + "'");
    }();
    for (const auto& [key, value] : params.kv()) std::cout << key << '=' << value << '\n';
}

struct EncodeArgs {
    std::string matrix, support, out;
};

void run_encode(const EncodeArgs& a) {
    gt::BitMatrix A = gt::read_gtm1(a.matrix);
    gt::SupportSet x = gt::read_gtv1(a.support);
    gt::write_observation(a.out, gt::encode(A, x));
}

struct CorruptArgs {
    std::string mode = "random";
    std::string in, matrix, support, out;
    std::uint64_t e0 = 0, e1 = 0, seed = 0;
    std::uint64_t block_length = 0;
    std::string nu_over_gamma = "0";
};

void run_corrupt(const CorruptArgs& a) {
    gt::NoiseBudget budget{a.e0, a.e1};
    if (a.mode == "random") {
        if (a.in.empty())
            throw std::invalid_argument("corrupt --mode random needs --in");
        gt::BitVec y = gt::read_observation(a.in);
        gt::CorruptionResult r = gt::corrupt_random(y, budget, a.seed);
        gt::write_observation(a.out, r.observation);
        std::cout << "e0_applied=" << r.e0_applied << "\ne1_applied=" << r.e1_applied
                  << "\n";
        return;
    }
    if (a.mode != "greedy") throw std::invalid_argument("unknown --mode '" + a.mode + "'");
    if (a.matrix.empty() || a.support.empty() || a.block_length == 0)
        throw std::invalid_argument(
            "corrupt --mode greedy needs --matrix, --support and --block-length");
    gt::BitMatrix A = gt::read_gtm1(a.matrix);
    gt::SupportSet x = gt::read_gtv1(a.support);
    gt::BitVec clean = gt::encode(A, x);
    gt::BitVec noisy = gt::corrupt_adversarial_greedy(A, x, budget, a.block_length,
                                                      rat(a.nu_over_gamma));
    auto [e0_applied, e1_applied] = gt::closeness_deltas(clean, noisy);
    gt::write_observation(a.out, noisy);
    std::cout << "e0_applied=" << e0_applied << "\ne1_applied=" << e1_applied << "\n";
}

struct DecodeArgs {
    std::string matrix, obs, out;
    std::uint64_t block_length = 0;
    std::string nu_over_gamma = "0";
};

void run_decode(const DecodeArgs& a) {
    gt::BitMatrix A = gt::read_gtm1(a.matrix);
    gt::BitVec y = gt::read_observation(a.obs);
    gt::DecodeResult r = gt::threshold_decode(A, y, a.block_length, rat(a.nu_over_gamma));
    gt::write_gtv1(a.out, r.support);
    std::cout << "threshold_count=" << r.threshold_count
              << "\ndecoded_weight=" << r.support.weight() << "\n";
}

struct VerifyArgs {
    bool list_bound = false;
    // correcting-matrix mode
    std::string matrix;
    std::uint64_t d = 0, e0 = 0, e1 = 0, acc_e0 = 0, acc_e1 = 0, cap = 0;
    // list-bound mode
    unsigned n_bits = 0, t_bits = 0, l_bits = 0, k_bits = 0, k_prime_bits = 0;
    std::uint64_t table_seed = 0, sparsity = 0, trials = 200, seed = 0;
    std::string eps = "1/2";
};

void run_verify(const VerifyArgs& a) {
    if (!a.list_bound) {
        if (a.matrix.empty()) throw std::invalid_argument("verify needs --matrix");
        gt::BitMatrix A = gt::read_gtm1(a.matrix);
        gt::VerifyReport r =
            gt::verify_correcting(A, a.d, {a.e0, a.e1}, {a.acc_e0, a.acc_e1}, a.cap);
        std::cout << "result=" << (r.pass ? "pass" : "fail")
                  << "\npairs_evaluated=" << r.pairs_evaluated << "\n";
        if (!r.pass) {
            std::cout << "witness_observation=" << r.witness_observation->str() << "\n"
                      << "witness_recovered=" << join_indices(*r.witness_recovered) << "\n"
                      << "witness_violator=" << join_indices(*r.witness_violator) << "\n";
        }
        return;
    }
    auto code = gt::induced_code(
        gt::random_function(a.n_bits, a.t_bits, a.l_bits, a.table_seed));
    gt::BitMatrix A = gt::codeword_graph_matrix(code);
    const std::uint64_t T = code.block_length();
    const std::uint64_t L = code.alphabet();
    gt::NoiseBudget budget{a.e0, a.e1};
    auto sampler = [&](std::uint64_t trial) {
        std::mt19937_64 rng(gt::mix_seed(a.seed, trial));
        auto picks = gt::sample_distinct(rng, A.cols(), a.sparsity);
        gt::SupportSet x(A.cols(), std::vector<std::uint32_t>(picks.begin(), picks.end()));
        gt::BitVec y = gt::corrupt_random(gt::encode(A, x), budget, rng()).observation;
        return gt::mixture_from_observation(y, T, L);
    };
    gt::ListBoundReport r =
        gt::check_list_bound(code, a.k_bits, a.k_prime_bits, rat(a.eps), sampler, a.trials);
    std::cout << "samples=" << r.samples << "\nvacuous=" << r.vacuous
              << "\nviolations=" << r.violations << "\nmax_list_size=" << r.max_list_size
              << "\nbound=" << r.bound
              << "\nresult=" << (r.violations == 0 ? "pass" : "fail") << "\n";
}

struct BoundsArgs {
    std::uint64_t m = 0, d = 0, n = 0, e0 = 0, e1 = 0, acc_e0 = 0, acc_e1 = 0;
    std::string eps = "1/2";
};

void run_bounds(const BoundsArgs& a) {
    gt::BoundReport l1 = gt::lemma1_check(a.m, a.d, a.e0, a.e1, a.acc_e0, a.acc_e1);
    std::cout << "lemma1_computed=" << l1.computed.str()
              << "\nlemma1_satisfied=" << (l1.satisfied ? 1 : 0)
              << "\nlemma1_detail=" << l1.detail << "\n";
    gt::BoundReport l2 =
        gt::lemma2_check(a.m, a.d, a.n, a.e1, a.acc_e0, a.acc_e1, rat(a.eps));
    std::cout << "lemma2_satisfied=" << (l2.satisfied ? 1 : 0)
              << "\nlemma2_detail=" << l2.detail << "\n";
    gt::Lemma3Bound l3 = gt::lemma3_bound(a.n, a.d, a.acc_e0, a.acc_e1);
    std::ostringstream closed;
    closed.setf(std::ios::fixed);
    closed.precision(6);
    closed << l3.closed_form;
    std::cout << "lemma3_ball_count=" << l3.ball_count
              << "\nlemma3_decodable_volume=" << l3.decodable_volume
              << "\nlemma3_exact_bound=" << l3.exact_bound
              << "\nlemma3_closed_form=" << closed.str() << "\n";
}

struct SweepArgs {
    std::string matrix, out;
    std::uint64_t sparsity = 0, trials = 0, seed = 0;
    std::uint64_t block_length = 0, weight_cap = 0;
    std::string nu_over_gamma = "0";
    std::string grid, grid_frac;
};

void run_sweep_cmd(const SweepArgs& a) {
    gt::BitMatrix A = gt::read_gtm1(a.matrix);
    gt::SweepConfig config;
    config.sparsity = a.sparsity;
    config.trials = a.trials;
    config.seed = a.seed;
    config.block_length = a.block_length;
    config.nu_over_gamma = rat(a.nu_over_gamma);
    config.weight_cap = a.weight_cap;
    if (!a.grid.empty()) config.grid = parse_grid(a.grid);
    if (!a.grid_frac.empty()) {
        // (p, nu) pairs, converted to the per-observation integer budgets
        // floor(p*M) and floor(nu*M/D).
        std::stringstream ss(a.grid_frac);
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto colon = item.find(':');
            if (colon == std::string::npos)
                throw std::invalid_argument("grid entry '" + item + "' is not p:nu");
            gt::Rational p = rat(item.substr(0, colon));
            gt::Rational nu = rat(item.substr(colon + 1));
            config.grid.push_back({floor_mul(p, A.rows()),
                                   floor_mul(nu, A.rows()) / a.sparsity});
        }
    }
    std::string csv = gt::run_sweep(A, config);
    std::ofstream out(a.out, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + a.out);
    out << csv;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"group-testing toolkit: measurement matrices, noisy pooled "
                 "tests, threshold decoding and bound oracles"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a measurement matrix");
    gen_cmd->add_option("--kind", gen.kind, "random | kautz-singleton")
        ->check(CLI::IsMember({"random", "kautz-singleton"}));
    gen_cmd->add_option("--n-bits", gen.n_bits, "log2 #columns (random)");
    gen_cmd->add_option("--t-bits", gen.t_bits, "log2 block length (random)");
    gen_cmd->add_option("--l-bits", gen.l_bits, "log2 alphabet (random)");
    gen_cmd->add_option("--seed", gen.seed, "table seed (random)");
    gen_cmd->add_option("--q", gen.q, "field size, prime (kautz-singleton)");
    gen_cmd->add_option("--w", gen.w, "code dimension (kautz-singleton)");
    gen_cmd->add_option("--out", gen.out, "output matrix path")->required();
    gen_cmd->callback([&] { run_gen(gen); });

    PlanArgs plan;
    auto* plan_cmd = app.add_subcommand("plan", "derive a parameter bundle");
    plan_cmd->add_option("--style", plan.style, "extractor | lossless")
        ->check(CLI::IsMember({"extractor", "lossless"}));
    plan_cmd->add_option("--sparsity", plan.sparsity, "defectives bound D")->required();
    plan_cmd->add_option("--universe", plan.universe, "population N, a power of two")
        ->required();
    plan_cmd->add_option("--p", plan.p, "false-positive rate, rational (extractor)");
    plan_cmd->add_option("--nu", plan.nu, "false-negative rate, rational (extractor)");
    plan_cmd->add_option("--delta", plan.delta, "list-size slack, rational (lossless)");
    plan_cmd->add_option("--t-bits", plan.t_bits, "override the seed length");
    plan_cmd->callback([&] { run_plan(plan); });

    EncodeArgs enc;
    auto* enc_cmd = app.add_subcommand("encode", "pooled OR measurement of a support");
    enc_cmd->add_option("--matrix", enc.matrix)->required();
    enc_cmd->add_option("--support", enc.support)->required();
    enc_cmd->add_option("--out", enc.out, "output observation path")->required();
    enc_cmd->callback([&] { run_encode(enc); });

    CorruptArgs cor;
    auto* cor_cmd = app.add_subcommand("corrupt", "apply noise to an observation");
    cor_cmd->add_option("--mode", cor.mode, "random | greedy")
        ->check(CLI::IsMember({"random", "greedy"}));
    cor_cmd->add_option("--in", cor.in, "clean observation (random mode)");
    cor_cmd->add_option("--e0", cor.e0, "max 0->1 flips")->required();
    cor_cmd->add_option("--e1", cor.e1, "max 1->0 flips")->required();
    cor_cmd->add_option("--seed", cor.seed, "noise seed (random mode)");
    cor_cmd->add_option("--matrix", cor.matrix, "matrix (greedy mode)");
    cor_cmd->add_option("--support", cor.support, "true support (greedy mode)");
    cor_cmd->add_option("--block-length,-T", cor.block_length,
                        "column weight T (greedy mode)");
    cor_cmd->add_option("--nu-over-gamma", cor.nu_over_gamma,
                        "decoder threshold parameter, rational (greedy mode)");
    cor_cmd->add_option("--out", cor.out, "output observation path")->required();
    cor_cmd->callback([&] { run_corrupt(cor); });

    DecodeArgs dec;
    auto* dec_cmd = app.add_subcommand("decode", "agreement-threshold decoding");
    dec_cmd->add_option("--matrix", dec.matrix)->required();
    dec_cmd->add_option("--obs", dec.obs)->required();
    dec_cmd->add_option("--block-length,-T", dec.block_length, "column weight T")
        ->required();
    dec_cmd->add_option("--nu-over-gamma", dec.nu_over_gamma,
                        "threshold parameter, rational in [0,1)");
    dec_cmd->add_option("--out", dec.out, "output support path")->required();
    dec_cmd->callback([&] { run_decode(dec); });

    VerifyArgs ver;
    auto* ver_cmd = app.add_subcommand(
        "verify", "exhaustive correcting-matrix check, or --list-bound sampling");
    ver_cmd->add_flag("--list-bound", ver.list_bound,
                      "check the agreement-list bound on a seeded random table");
    ver_cmd->add_option("--matrix", ver.matrix, "matrix to verify");
    ver_cmd->add_option("--d", ver.d, "sparsity bound");
    ver_cmd->add_option("--e0", ver.e0, "observation 0->1 budget");
    ver_cmd->add_option("--e1", ver.e1, "observation 1->0 budget");
    ver_cmd->add_option("--acc-e0", ver.acc_e0, "allowed false positives");
    ver_cmd->add_option("--acc-e1", ver.acc_e1, "allowed false negatives (must be 0)");
    ver_cmd->add_option("--cap", ver.cap, "enumeration cap (0 = GT_ENUM_CAP/default)");
    ver_cmd->add_option("--n-bits", ver.n_bits, "log2 #codewords (list-bound)");
    ver_cmd->add_option("--t-bits", ver.t_bits, "log2 block length (list-bound)");
    ver_cmd->add_option("--l-bits", ver.l_bits, "log2 alphabet (list-bound)");
    ver_cmd->add_option("--table-seed", ver.table_seed, "table seed (list-bound)");
    ver_cmd->add_option("--k-bits", ver.k_bits, "list bound 2^k (list-bound)");
    ver_cmd->add_option("--k-prime-bits", ver.k_prime_bits,
                        "threshold scale K' = 2^k' (list-bound)");
    ver_cmd->add_option("--eps", ver.eps, "threshold slack, rational (list-bound)");
    ver_cmd->add_option("--sparsity", ver.sparsity, "support weight (list-bound)");
    ver_cmd->add_option("--trials", ver.trials, "mixtures to sample (list-bound)");
    ver_cmd->add_option("--seed", ver.seed, "sampling seed (list-bound)");
    ver_cmd->callback([&] { run_verify(ver); });

    BoundsArgs bnd;
    auto* bnd_cmd = app.add_subcommand("bounds", "evaluate the lower-bound lemmas");
    bnd_cmd->add_option("--m", bnd.m, "rows")->required();
    bnd_cmd->add_option("--d", bnd.d, "sparsity")->required();
    bnd_cmd->add_option("--n", bnd.n, "columns")->required();
    bnd_cmd->add_option("--e0", bnd.e0, "observation 0->1 budget");
    bnd_cmd->add_option("--e1", bnd.e1, "observation 1->0 budget");
    bnd_cmd->add_option("--acc-e0", bnd.acc_e0, "allowed false positives");
    bnd_cmd->add_option("--acc-e1", bnd.acc_e1, "allowed false negatives");
    bnd_cmd->add_option("--eps", bnd.eps, "density parameter, rational");
    bnd_cmd->callback([&] { run_bounds(bnd); });

    SweepArgs swp;
    auto* swp_cmd = app.add_subcommand("sweep", "Monte-Carlo noise sweep to CSV");
    swp_cmd->add_option("--matrix", swp.matrix)->required();
    swp_cmd->add_option("--sparsity", swp.sparsity, "planted support weight")->required();
    swp_cmd->add_option("--trials", swp.trials, "trials per grid point")->required();
    swp_cmd->add_option("--seed", swp.seed, "root seed");
    swp_cmd->add_option("--block-length,-T", swp.block_length, "column weight T")
        ->required();
    swp_cmd->add_option("--nu-over-gamma", swp.nu_over_gamma,
                        "threshold parameter, rational");
    swp_cmd->add_option("--weight-cap,--K", swp.weight_cap,
                        "success needs decoded weight < this")
        ->required();
    swp_cmd->add_option("--grid", swp.grid, "absolute budgets, \"e0:e1,e0:e1,...\"");
    swp_cmd->add_option("--grid-frac", swp.grid_frac,
                        "rate pairs \"p:nu,...\", scaled by M and M/D");
    swp_cmd->add_option("--out", swp.out, "output CSV path")->required();
    swp_cmd->callback([&] { run_sweep_cmd(swp); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
