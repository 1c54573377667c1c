#include "grouptest/kautz_singleton.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace gt {

bool is_prime(std::uint32_t q) {
    if (q < 2) return false;
    for (std::uint32_t f = 2; static_cast<std::uint64_t>(f) * f <= q; ++f)
        if (q % f == 0) return false;
    return true;
}

BitMatrix kautz_singleton_matrix(std::uint32_t q, std::uint32_t w) {
    if (!is_prime(q))
        throw std::invalid_argument("kautz-singleton: q = " + std::to_string(q) +
                                    " must be prime");
    if (w < 1 || w > q)
        throw std::invalid_argument("kautz-singleton: need 1 <= w <= q");
    std::uint64_t cols = 1;
    for (std::uint32_t i = 0; i < w; ++i) {
        cols *= q;
        if (cols > (std::uint64_t{1} << 20))
            throw std::invalid_argument("kautz-singleton: q^w too large");
    }

    const std::uint64_t rows_total = static_cast<std::uint64_t>(q) * q;
    std::vector<std::vector<std::uint32_t>> rows(rows_total);
    for (std::uint64_t x = 0; x < cols; ++x) {
        // Coefficients of P_x are the base-q digits of x.
        std::uint64_t digits = x;
        std::vector<std::uint32_t> coeff(w);
        for (std::uint32_t j = 0; j < w; ++j) {
            coeff[j] = static_cast<std::uint32_t>(digits % q);
            digits /= q;
        }
        for (std::uint32_t alpha = 0; alpha < q; ++alpha) {
            // Horner evaluation of P_x(alpha) in GF(q).
            std::uint64_t value = 0;
            for (std::uint32_t j = w; j-- > 0;) value = (value * alpha + coeff[j]) % q;
            rows[static_cast<std::uint64_t>(alpha) * q + value].push_back(
                static_cast<std::uint32_t>(x));
        }
    }
    return BitMatrix(rows_total, cols, std::move(rows));
}

} // namespace gt
