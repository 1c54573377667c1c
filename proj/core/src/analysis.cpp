#include "grouptest/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "grouptest/decode.hpp"
#include "grouptest/errors.hpp"
#include "grouptest/noise.hpp"

namespace gt {

std::uint64_t default_enum_cap() {
    if (const char* env = std::getenv("GT_ENUM_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 10'000'000;
}

BigInt binomial(std::uint64_t a, std::uint64_t b) {
    if (b > a) return 0;
    if (b > a - b) b = a - b;
    BigInt c = 1;
    for (std::uint64_t i = 1; i <= b; ++i) {
        c *= a - b + i;
        c /= i;
    }
    return c;
}

BigInt hamming_volume(std::uint64_t a, std::uint64_t b) {
    if (b > a) throw std::invalid_argument("volume: weight bound exceeds length");
    BigInt sum = 0;
    BigInt c = 1;
    for (std::uint64_t i = 0; i <= b; ++i) {
        sum += c;
        c *= a - i;
        c /= i + 1;
    }
    return sum;
}

BigInt close_ball_volume(std::uint64_t a, std::uint64_t b, std::uint64_t e0,
                         std::uint64_t e1) {
    if (b > a) throw std::invalid_argument("volume: weight exceeds length");
    // Flips act on disjoint position sets, so the ball factorizes.
    return hamming_volume(a - b, std::min(e0, a - b)) * hamming_volume(b, std::min(e1, b));
}

BoundReport lemma1_check(std::uint64_t m, std::uint64_t d, std::uint64_t e0,
                         std::uint64_t e1, std::uint64_t acc_e0, std::uint64_t acc_e1) {
    if (m == 0 || d == 0) throw std::invalid_argument("lemma1: m and d must be >= 1");
    const Rational lhs(static_cast<std::int64_t>(std::max(e0, e1) + 1),
                       static_cast<std::int64_t>(acc_e0 + acc_e1 + 1));
    const Rational rows_per_item(static_cast<std::int64_t>(m), static_cast<std::int64_t>(d));
    BoundReport report;
    report.name = "lemma1";
    report.computed = lhs;
    report.satisfied = lhs <= rows_per_item;
    report.detail = "(max(e0,e1)+1)/(acc_e0+acc_e1+1) = " + lhs.str() +
                    (report.satisfied ? " <= " : " > ") + "m/d = " + rows_per_item.str();
    return report;
}

BoundReport lemma2_check(std::uint64_t m, std::uint64_t d, std::uint64_t n,
                         std::uint64_t e1, std::uint64_t acc_e0, std::uint64_t acc_e1,
                         const Rational& eps) {
    if (d == 0 || n < d) throw std::invalid_argument("lemma2: need 1 <= d <= n");
    if (!(Rational(0) < eps) || !(eps < Rational(1)))
        throw std::invalid_argument("lemma2: eps must lie in (0, 1)");

    // e1 < (acc_e1 + 1) m / (eps d), cross-multiplied.
    const __int128 lhs1 = static_cast<__int128>(e1) * eps.num() * d;
    const __int128 rhs1 = static_cast<__int128>(acc_e1 + 1) * m * eps.den();
    const bool first = lhs1 < rhs1;

    // acc_e0 >= (1 - eps)(n - d + 1) / (acc_e1 + 1)^2.
    const __int128 lhs2 = static_cast<__int128>(acc_e0) * (acc_e1 + 1) * (acc_e1 + 1) *
                          eps.den();
    const __int128 rhs2 = static_cast<__int128>(eps.den() - eps.num()) * (n - d + 1);
    const bool second = lhs2 >= rhs2;

    BoundReport report;
    report.name = "lemma2";
    report.computed = Rational(static_cast<std::int64_t>(acc_e1 + 1) *
                                   static_cast<std::int64_t>(m),
                               1) /
                      (eps * Rational(static_cast<std::int64_t>(d)));
    report.satisfied = first || second;
    report.detail = first ? (second ? "both" : "first") : (second ? "second" : "none");
    return report;
}

namespace {

// Smallest s with vol * 2^s >= ball (s may be negative).
std::int64_t ceil_log2_quotient(const BigInt& ball, const BigInt& vol) {
    if (vol <= 0 || ball <= 0) throw std::invalid_argument("counting bound: empty set");
    auto holds = [&](std::int64_t s) {
        if (s >= 0) return (vol << static_cast<unsigned>(s)) >= ball;
        return vol >= (ball << static_cast<unsigned>(-s));
    };
    std::int64_t lb = static_cast<std::int64_t>(boost::multiprecision::msb(ball));
    std::int64_t lv = static_cast<std::int64_t>(boost::multiprecision::msb(vol));
    std::int64_t s = lb - lv - 1; // always too small
    while (!holds(s)) ++s;       // terminates within two steps
    return s;
}

} // namespace

Lemma3Bound lemma3_bound(std::uint64_t n, std::uint64_t d, std::uint64_t acc_e0,
                         std::uint64_t acc_e1) {
    if (d == 0 || d > n) throw std::invalid_argument("lemma3: need 1 <= d <= n");
    if (d + acc_e0 > n)
        throw std::invalid_argument("lemma3: recovered weight d + acc_e0 exceeds n");

    Lemma3Bound out;
    out.ball_count = hamming_volume(n, d);
    // One recovered z of weight d + acc_e0 decodes any input obtainable from
    // z by dropping <= acc_e0 ones and adding <= acc_e1 from outside.
    const std::uint64_t outside = n - d - acc_e0;
    out.decodable_volume = hamming_volume(d + acc_e0, std::min(acc_e0, d + acc_e0)) *
                           hamming_volume(outside, std::min(acc_e1, outside));
    out.exact_bound = ceil_log2_quotient(out.ball_count, out.decodable_volume);

    double closed = static_cast<double>(d) *
                        std::log2(static_cast<double>(n) / static_cast<double>(d)) -
                    static_cast<double>(d) - static_cast<double>(acc_e0);
    if (acc_e1 > 0 && outside > acc_e1)
        closed -= static_cast<double>(acc_e1) *
                  std::log2(static_cast<double>(outside) / static_cast<double>(acc_e1));
    out.closed_form = closed;
    return out;
}

namespace {

// All supports of weight <= d over [0, cols), lexicographic, with encodings.
void enumerate_supports(const BitMatrix& A, std::uint64_t d,
                        const std::function<void(const SupportSet&, const BitVec&)>& fn) {
    const std::uint64_t N = A.cols();
    std::vector<std::uint32_t> chosen;
    std::vector<BitVec> stack;
    stack.push_back(BitVec(A.rows()));
    fn(SupportSet(N, {}), stack.back());
    std::function<void(std::uint64_t)> descend = [&](std::uint64_t first) {
        if (chosen.size() == d) return;
        for (std::uint64_t c = first; c < N; ++c) {
            BitVec next = stack.back();
            for (std::uint32_t r : A.column(c)) next.set(r);
            stack.push_back(std::move(next));
            chosen.push_back(static_cast<std::uint32_t>(c));
            fn(SupportSet(N, chosen), stack.back());
            descend(c + 1);
            chosen.pop_back();
            stack.pop_back();
        }
    };
    descend(0);
}

SupportSet union_of(const std::vector<SupportSet>& sets, std::uint64_t universe) {
    SupportSet z(universe);
    for (const auto& s : sets) z = z.union_with(s);
    return z;
}

struct Violation {
    BitVec observation;
    SupportSet recovered;
    SupportSet violator;
};

// Keep the lexicographically smallest bad observation (bit 0 first).
void keep_smallest(std::optional<Violation>& best, Violation candidate) {
    if (!best || candidate.observation.str() < best->observation.str())
        best = std::move(candidate);
}

} // namespace

VerifyReport verify_correcting(const BitMatrix& A, std::uint64_t d,
                               const NoiseBudget& budget, const AccuracyBudget& acc,
                               std::uint64_t cap) {
    if (acc.e1 != 0)
        throw std::invalid_argument(
            "verify: only acc.e1 == 0 is supported (union reconstruction)");
    if (cap == 0) cap = default_enum_cap();

    // Candidate-support count must already fit the cap.
    {
        const std::uint64_t N = A.cols();
        unsigned __int128 total = 1, c = 1;
        for (std::uint64_t i = 1; i <= std::min(d, N); ++i) {
            c = c * (N - i + 1) / i;
            total += c;
            if (total > cap)
                throw CapExceeded("verify: candidate supports exceed cap of " +
                                  std::to_string(cap));
        }
    }

    VerifyReport report;
    std::optional<Violation> worst;

    if (budget.e0 == 0 && budget.e1 == 0) {
        // Noiseless: group supports by their exact encoding; each bucket is
        // precisely the consistent set of its observation.
        std::map<std::string, std::vector<SupportSet>> buckets;
        enumerate_supports(A, d, [&](const SupportSet& x, const BitVec& y) {
            ++report.pairs_evaluated; // one noiseless pattern per input
            if (report.pairs_evaluated > cap)
                throw CapExceeded("verify: evaluated pairs exceed cap");
            buckets[y.str()].push_back(x);
        });
        for (const auto& [obs, members] : buckets) {
            SupportSet z = union_of(members, A.cols());
            for (const auto& x : members)
                if (z.difference_size(x) > acc.e0) {
                    keep_smallest(worst, {BitVec::from_string(obs), z, x});
                    break;
                }
        }
    } else {
        std::map<std::string, bool> seen; // observation -> already checked
        enumerate_supports(A, d, [&](const SupportSet&, const BitVec& y0) {
            NoisePatternStream stream(y0, budget, cap);
            BitVec y_hat;
            while (stream.next(y_hat)) {
                ++report.pairs_evaluated;
                if (report.pairs_evaluated > cap)
                    throw CapExceeded("verify: evaluated pairs exceed cap");
                auto [it, fresh] = seen.emplace(y_hat.str(), true);
                if (!fresh) continue;
                auto members = oracle_decode_exhaustive(A, y_hat, d, budget, cap);
                SupportSet z = union_of(members, A.cols());
                for (const auto& x : members)
                    if (z.difference_size(x) > acc.e0) {
                        keep_smallest(worst, {y_hat, z, x});
                        break;
                    }
            }
        });
    }

    if (worst) {
        report.pass = false;
        report.witness_observation = std::move(worst->observation);
        report.witness_recovered = std::move(worst->recovered);
        report.witness_violator = std::move(worst->violator);
    }
    return report;
}

} // namespace gt
