#include "grouptest/scheme_params.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "grouptest/errors.hpp"

namespace gt {
namespace {

unsigned ceil_log2_u64(std::uint64_t v) {
    unsigned bits = 0;
    while ((std::uint64_t{1} << bits) < v) ++bits;
    return bits;
}

// Smallest j >= 0 with 2^j >= r; r must be >= 1.
unsigned ceil_log2_rational(const Rational& r) {
    for (unsigned j = 0; j <= 62; ++j) {
        Rational pow2(std::int64_t{1} << j);
        if (!(pow2 < r)) return j;
    }
    throw std::overflow_error("ceil_log2: rational too large");
}

void check_table_budget(unsigned n_bits, unsigned t_bits, std::uint64_t budget) {
    if (n_bits + t_bits > 62)
        throw InfeasibleParameters("planner: table size overflows");
    std::uint64_t entries = std::uint64_t{1} << (n_bits + t_bits);
    if (entries > budget)
        throw InfeasibleParameters("planner: function table of " + std::to_string(entries) +
                                   " entries exceeds budget of " + std::to_string(budget));
}

unsigned default_t_bits(unsigned n_bits, unsigned eps_log) {
    return ceil_log2_u64(n_bits) + 2 * eps_log + 2;
}

} // namespace

Rational SchemeParams::theorem4_lhs() const {
    if (k_prime_bits > l_bits)
        throw InfeasibleParameters("params: k' exceeds l, L/K' is not integral");
    Rational ratio(std::int64_t{1} << (l_bits - k_prime_bits));
    return (p + gamma) * ratio + nu / gamma;
}

std::uint64_t SchemeParams::e0_budget() const {
    __int128 num = static_cast<__int128>(p.num()) * M();
    return static_cast<std::uint64_t>(num / p.den());
}

std::uint64_t SchemeParams::e1_budget() const {
    __int128 num = static_cast<__int128>(nu.num()) * M();
    __int128 den = static_cast<__int128>(nu.den()) * sparsity;
    return static_cast<std::uint64_t>(num / den);
}

void SchemeParams::validate() const {
    if (sparsity == 0) throw InfeasibleParameters("params: sparsity must be >= 1");
    if (n_bits == 0 || l_bits == 0 || t_bits == 0)
        throw InfeasibleParameters("params: zero bit width");
    if (k_prime_bits > k_bits || k_prime_bits > l_bits)
        throw InfeasibleParameters("params: k' must not exceed k or l");
    if (gamma != Rational(static_cast<std::int64_t>(sparsity), static_cast<std::int64_t>(L())))
        throw InfeasibleParameters("params: gamma must equal D/L exactly");
    if (!(Rational(0) < eps) || !(eps < Rational(1)))
        throw InfeasibleParameters("params: eps must lie in (0, 1)");
    if (p < Rational(0) || !(p < Rational(1)))
        throw InfeasibleParameters("params: p must lie in [0, 1)");
    if (nu < Rational(0)) throw InfeasibleParameters("params: nu must be >= 0");
    if (K() <= sparsity)
        throw InfeasibleParameters("params: K must exceed the sparsity");
    if (!theorem4_holds())
        throw InfeasibleParameters("params: (p + gamma)L/K' + nu/gamma < 1 - eps fails");
}

std::vector<std::pair<std::string, std::string>> SchemeParams::kv() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.emplace_back("style", style == Style::extractor ? "extractor" : "lossless");
    out.emplace_back("n_bits", std::to_string(n_bits));
    out.emplace_back("t_bits", std::to_string(t_bits));
    out.emplace_back("l_bits", std::to_string(l_bits));
    out.emplace_back("k_bits", std::to_string(k_bits));
    out.emplace_back("k_prime_bits", std::to_string(k_prime_bits));
    out.emplace_back("D", std::to_string(sparsity));
    out.emplace_back("N", std::to_string(N()));
    out.emplace_back("T", std::to_string(T()));
    out.emplace_back("L", std::to_string(L()));
    out.emplace_back("K", std::to_string(K()));
    out.emplace_back("K_prime", std::to_string(K_prime()));
    out.emplace_back("M", std::to_string(M()));
    out.emplace_back("eps", eps.str());
    out.emplace_back("p", p.str());
    out.emplace_back("nu", nu.str());
    out.emplace_back("gamma", gamma.str());
    out.emplace_back("nu_over_gamma", nu_over_gamma().str());
    out.emplace_back("e0_budget", std::to_string(e0_budget()));
    out.emplace_back("e1_budget", std::to_string(e1_budget()));
    out.emplace_back("theorem4_lhs", theorem4_lhs().str());
    out.emplace_back("theorem4_rhs", theorem4_rhs().str());
    out.emplace_back("theorem4_holds", theorem4_holds() ? "1" : "0");
    return out;
}

double nu0(const Rational& p) {
    if (p < Rational(0) || !(p < Rational(1)))
        throw std::invalid_argument("nu0: p must lie in [0, 1)");
    double root = std::sqrt(5.0 - 4.0 * p.to_double()) - 1.0;
    return root * root * root / 8.0;
}

ExtractorRecipe extractor_recipe(const Rational& p, const Rational& nu) {
    if (p < Rational(0) || !(p < Rational(1)))
        throw std::invalid_argument("recipe: p must lie in [0, 1)");
    if (nu < Rational(0)) throw std::invalid_argument("recipe: nu must be >= 0");
    ExtractorRecipe r{};
    if (nu == Rational(0)) {
        r.gamma_target = 0.25; // free choice at nu = 0; see the planner
        r.nu_over_gamma_target = 0.0;
    } else {
        double nd = nu.to_double();
        r.gamma_target = std::cbrt(nd);
        r.nu_over_gamma_target = nd / r.gamma_target; // cbrt(nu^2)
    }
    r.eps_upper = 1.0 - p.to_double() - r.gamma_target - r.nu_over_gamma_target;
    return r;
}

SchemeParams plan_extractor_style(std::uint64_t sparsity, std::uint64_t universe,
                                  const Rational& p, const Rational& nu,
                                  const PlannerOptions& options) {
    if (sparsity == 0) throw std::invalid_argument("planner: sparsity must be >= 1");
    if (universe < 2 || universe < sparsity)
        throw std::invalid_argument("planner: universe must be >= max(2, sparsity)");
    if (p < Rational(0) || !(p < Rational(1)))
        throw std::invalid_argument("planner: p must lie in [0, 1)");
    if (nu < Rational(0)) throw std::invalid_argument("planner: nu must be >= 0");
    if (Rational(0) < nu && nu.to_double() >= nu0(p))
        throw InfeasibleParameters("planner: nu = " + nu.str() + " >= nu0(p) = " +
                                   std::to_string(nu0(p)) + ", no feasible gamma exists");

    const unsigned n_bits = std::max(1u, ceil_log2_u64(universe));

    // gamma targets cbrt(nu); at nu = 0 it is a free knob, started at 1/4 and
    // halved until an eps fits (the false-positive rate alone may eat most of
    // the inequality).
    double gamma_target = nu == Rational(0) ? 0.25 : std::cbrt(nu.to_double());
    unsigned l_bits = 0;
    unsigned eps_log = 0;
    Rational gamma;
    for (;;) {
        // Round L up to a power of two; gamma = D/L is then exact, <= target.
        double l_real = std::log2(static_cast<double>(sparsity) / gamma_target);
        l_bits = static_cast<unsigned>(std::max(1.0, std::ceil(l_real - 1e-9)));
        while ((std::uint64_t{1} << l_bits) <= sparsity) ++l_bits; // gamma < 1
        if (l_bits > 26) throw InfeasibleParameters("planner: L out of supported range");
        gamma = Rational(static_cast<std::int64_t>(sparsity),
                         std::int64_t{1} << l_bits);

        // Largest eps = 2^-j keeping p + gamma + nu/gamma + eps < 1 (K' = L
        // makes the L/K' factor 1).
        for (unsigned j = 1; j <= 30 && eps_log == 0; ++j)
            if ((p + gamma) + nu / gamma + Rational(1, std::int64_t{1} << j) < Rational(1))
                eps_log = j;
        if (eps_log != 0) break;
        if (nu != Rational(0) || gamma_target < 0x1p-24)
            throw InfeasibleParameters("planner: no feasible eps after rounding gamma to " +
                                       gamma.str());
        gamma_target /= 2;
    }
    unsigned k_bits = l_bits + 2 * eps_log; // log D + log(1/gamma) + 2 log(1/eps)
    if (k_bits > n_bits) k_bits = n_bits;
    const unsigned k_prime_bits = l_bits;
    if (k_bits < k_prime_bits)
        throw InfeasibleParameters("planner: universe too small for the rounded alphabet");

    SchemeParams params;
    params.style = SchemeParams::Style::extractor;
    params.n_bits = n_bits;
    params.l_bits = l_bits;
    params.k_bits = k_bits;
    params.k_prime_bits = k_prime_bits;
    params.eps = Rational(1, std::int64_t{1} << eps_log);
    params.p = p;
    params.nu = nu;
    params.gamma = gamma;
    params.sparsity = sparsity;
    params.t_bits = options.t_bits_override ? options.t_bits_override
                                            : default_t_bits(n_bits, eps_log);
    check_table_budget(params.n_bits, params.t_bits, options.table_entry_budget);
    params.validate();
    return params;
}

SchemeParams plan_lossless_style(std::uint64_t sparsity, std::uint64_t universe,
                                 const Rational& delta, const PlannerOptions& options) {
    if (sparsity == 0) throw std::invalid_argument("planner: sparsity must be >= 1");
    if (universe < 2 || universe < sparsity)
        throw std::invalid_argument("planner: universe must be >= max(2, sparsity)");
    if (!(Rational(0) < delta)) throw std::invalid_argument("planner: delta must be > 0");

    const std::int64_t D = static_cast<std::int64_t>(sparsity);
    const Rational k_exact = Rational(D) * (Rational(1) + delta); // D(1+delta) = D/(1-2eps)

    // Round K to a power of two.  Rounding up is only allowed while the
    // excess K - D stays within delta*D; otherwise round down and recompute
    // eps from the K actually chosen.
    unsigned k_bits = ceil_log2_rational(k_exact);
    if (Rational(std::int64_t(std::uint64_t{1} << k_bits) - D) > delta * Rational(D)) {
        if (k_bits == 0) throw InfeasibleParameters("planner: delta leaves no room for K");
        --k_bits;
    }
    if (k_bits > 26) throw InfeasibleParameters("planner: K out of supported range");
    const std::int64_t K = std::int64_t{1} << k_bits;
    if (K <= D)
        throw InfeasibleParameters("planner: no power of two K with D < K <= D(1+delta)");

    const Rational eps(K - D, 2 * K); // (1 - D/K)/2, in (0, 1/2)
    const unsigned eps_log = ceil_log2_rational(Rational(1) / eps);

    const unsigned n_bits = std::max(1u, ceil_log2_u64(universe));
    const unsigned l_bits = k_bits + eps_log + 1;
    if (l_bits > 26) throw InfeasibleParameters("planner: L out of supported range");
    const std::int64_t L = std::int64_t{1} << l_bits;
    const Rational gamma(D, L);

    // Exact slack in the headline inequality: B = (1 - eps) - gamma*L/K'
    // = (1 - eps) - D/K, which this choice of eps makes equal to eps.  Give
    // each noise term a quarter of it; the inequality then holds with B/2 to
    // spare.
    const Rational B = (Rational(1) - eps) - Rational(D, K);
    const Rational quarter = B * Rational(1, 4);
    const Rational p = quarter * Rational(K, L);      // p * L/K' = B/4
    const Rational nu = quarter * gamma;              // nu/gamma = B/4

    SchemeParams params;
    params.style = SchemeParams::Style::lossless;
    params.n_bits = n_bits;
    params.l_bits = l_bits;
    params.k_bits = k_bits;
    params.k_prime_bits = k_bits;
    params.eps = eps;
    params.p = p;
    params.nu = nu;
    params.gamma = gamma;
    params.sparsity = sparsity;
    params.t_bits = options.t_bits_override ? options.t_bits_override
                                            : default_t_bits(n_bits, eps_log);
    check_table_budget(params.n_bits, params.t_bits, options.table_entry_budget);
    params.validate();
    return params;
}

} // namespace gt
