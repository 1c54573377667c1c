#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "grouptest/function_table.hpp"
#include "grouptest/rational.hpp"

namespace gt {

// A complete measurement-scheme parameter bundle.  Lower-case fields are bit
// widths; the capital quantities N = 2^n, T = 2^t, L = 2^l, K = 2^k,
// K' = 2^k' and M = T*L are derived.  All fractions are exact.
struct SchemeParams {
    enum class Style { extractor, lossless };

    Style style = Style::extractor;
    unsigned n_bits = 0;
    unsigned t_bits = 0;
    unsigned l_bits = 0;
    unsigned k_bits = 0;
    unsigned k_prime_bits = 0;

    Rational eps;   // condenser error, in (0, 1)
    Rational p;     // tolerated false-positive rate, per row
    Rational nu;    // tolerated false-negative rate, per row
    Rational gamma; // D / L, exact
    std::uint64_t sparsity = 0; // D

    std::uint64_t N() const { return std::uint64_t{1} << n_bits; }
    std::uint64_t T() const { return std::uint64_t{1} << t_bits; }
    std::uint64_t L() const { return std::uint64_t{1} << l_bits; }
    std::uint64_t K() const { return std::uint64_t{1} << k_bits; }
    std::uint64_t K_prime() const { return std::uint64_t{1} << k_prime_bits; }
    std::uint64_t M() const { return T() * L(); }

    Rational nu_over_gamma() const { return nu / gamma; }

    // (p + gamma) * L/K' + nu/gamma, the quantity that must stay below 1 - eps.
    Rational theorem4_lhs() const;
    Rational theorem4_rhs() const { return Rational(1) - eps; }
    bool theorem4_holds() const { return theorem4_lhs() < theorem4_rhs(); }

    // Per-observation noise allowances: floor(p*M) false positives and
    // floor(nu*M/D) false negatives.
    std::uint64_t e0_budget() const;
    std::uint64_t e1_budget() const;

    // Throws InfeasibleParameters when any structural invariant fails
    // (gamma*L != D, K <= D, k' > min(k, l), or the headline inequality).
    void validate() const;

    // Ordered key=value view for printing and tests.
    std::vector<std::pair<std::string, std::string>> kv() const;
};

// nu0(p) = (sqrt(5-4p) - 1)^3 / 8: the largest false-negative rate any
// extractor-style bundle can tolerate at false-positive rate p.  Requires
// 0 <= p < 1; strictly decreasing in p.
double nu0(const Rational& p);

// Pre-rounding recipe quantities for the extractor-style planner.
struct ExtractorRecipe {
    double gamma_target;         // cbrt(nu), or the nu = 0 default 1/4
    double nu_over_gamma_target; // cbrt(nu^2)
    double eps_upper;            // 1 - p - gamma_target - nu/gamma bound
};
ExtractorRecipe extractor_recipe(const Rational& p, const Rational& nu);

struct PlannerOptions {
    unsigned t_bits_override = 0; // 0 = use the default seed-length formula
    std::uint64_t table_entry_budget = kDefaultTableEntryBudget;
};

// Extractor-style bundle (K' = L): gamma targets cbrt(nu), eps is the largest
// power of two making the headline inequality strict, K = L / eps^2 capped at
// N.  Throws InfeasibleParameters when nu >= nu0(p) or no eps exists after
// rounding.
SchemeParams plan_extractor_style(std::uint64_t sparsity, std::uint64_t universe,
                                  const Rational& p, const Rational& nu,
                                  const PlannerOptions& options = {});

// Lossless-style bundle (K' = K): K is a power of two with K - D <= delta*D,
// eps = (1 - D/K)/2 exactly, and (p, nu) absorb an even split of half the
// exact slack in the headline inequality.
SchemeParams plan_lossless_style(std::uint64_t sparsity, std::uint64_t universe,
                                 const Rational& delta,
                                 const PlannerOptions& options = {});

} // namespace gt
