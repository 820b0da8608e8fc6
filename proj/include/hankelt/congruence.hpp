#pragma once

#include <cstdint>

#include <gmpxx.h>

namespace hankelt {

/// Exact C(n, k) from a memoized Pascal triangle; zero when k < 0 or k > n.
/// Throws std::domain_error for negative n.
mpz_class binom(std::int64_t n, std::int64_t k);

/// C(n, k) mod 2 by digit domination: odd iff every set bit of k is set in n.
int binom_parity(std::int64_t n, std::int64_t k);

/// (2j-1)!! = 1 * 3 * ... * (2j-1), with (-1)!! = 1 for j = 0.
mpz_class odd_double_factorial(std::int64_t j);

}  // namespace hankelt
