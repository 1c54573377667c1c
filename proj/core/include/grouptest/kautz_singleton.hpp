#pragma once

#include <cstdint>

#include "grouptest/bit_matrix.hpp"

namespace gt {

// Kautz-Singleton construction: the codeword graph of the degree-(w-1)
// Reed-Solomon code over GF(q), evaluated at all q field points.  Columns are
// the q^w polynomials (column index x has coefficients -- the base-q digits
// of x, least significant degree first); rows are the q*q pairs (point i,
// value j) linearized as i*q + j.  Column weight is exactly q, any two
// distinct columns share at most w-1 rows, and the matrix is d-disjunct for
// d = floor((q-1)/(w-1)) when w >= 2.
//
// q must be prime (prime powers are not supported) and 1 <= w <= q.
BitMatrix kautz_singleton_matrix(std::uint32_t q, std::uint32_t w);

bool is_prime(std::uint32_t q);

} // namespace gt
