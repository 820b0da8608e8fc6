#include <doctest.h>

#include <stdexcept>

#include "hankelt/congruence.hpp"

using namespace hankelt;

TEST_CASE("binomial examples") {
  CHECK(binom(4, 2) == 6);
  for (int n = 0; n < 20; ++n) CHECK(binom(n, 0) == 1);
  CHECK(binom(10, 11) == 0);
  CHECK(binom(10, -1) == 0);
  CHECK(binom(0, 0) == 1);
  CHECK(binom(100, 50) == mpz_class("100891344545564193334812497256"));
  CHECK_THROWS_AS(binom(-1, 0), std::domain_error);
}

TEST_CASE("parity examples") {
  CHECK(binom_parity(6, 3) == 0);
  for (int n = 0; n < 64; ++n) CHECK(binom_parity(n, n) == 1);
  CHECK(binom_parity(5, 2) == 0);
  CHECK(binom_parity(5, 7) == 0);
}

TEST_CASE("odd double factorial") {
  CHECK(odd_double_factorial(0) == 1);
  CHECK(odd_double_factorial(1) == 1);
  CHECK(odd_double_factorial(3) == 15);
  CHECK(odd_double_factorial(5) == 945);
}

TEST_CASE("digit-domination parity matches exact binomials for n <= 512") {
  for (int n = 0; n <= 512; ++n) {
    for (int k = 0; k <= n; ++k) {
      REQUIRE(binom_parity(n, k) == (mpz_odd_p(binom(n, k).get_mpz_t()) ? 1 : 0));
    }
  }
}

TEST_CASE("Pascal values match the multiplicative formula") {
  for (int n = 0; n <= 80; ++n) {
    mpz_class c = 1;
    for (int k = 0; k <= n; ++k) {
      REQUIRE(binom(n, k) == c);
      c = c * (n - k) / (k + 1);
    }
  }
}

TEST_CASE("even-index convolution of one row") {
  for (int n = 0; n <= 64; ++n) {
    for (int k = 0; k <= 64; ++k) {
      mpz_class s = 0;
      for (int i = 0; i <= k; ++i) s += binom(n, 2 * i) * binom(n, 2 * (k - i));
      const int expected = k % 2 ? 0 : binom_parity(n, k);
      REQUIRE((mpz_odd_p(s.get_mpz_t()) ? 1 : 0) == expected);
    }
  }
}

TEST_CASE("even-index convolution of two rows with odd total") {
  for (int n = 0; n <= 64; ++n) {
    for (int m = 0; m <= 64; ++m) {
      if ((n + m) % 2 == 0) continue;
      for (int k = 0; k <= 64; ++k) {
        mpz_class s = 0;
        for (int i = 0; i <= k; ++i) s += binom(n, 2 * i) * binom(m, 2 * (k - i));
        REQUIRE(mpz_odd_p(s.get_mpz_t()) == mpz_odd_p(binom(n + m, 2 * k).get_mpz_t()));
      }
    }
  }
}

TEST_CASE("Vandermonde convolution") {
  for (int n = 0; n <= 64; ++n) {
    for (int m = 0; m <= 64; ++m) {
      for (int k = 0; 2 * k <= n + m; ++k) {
        mpz_class s = 0;
        for (int i = 0; i <= 2 * k; ++i) s += binom(n, i) * binom(m, 2 * k - i);
        REQUIRE(s == binom(n + m, 2 * k));
      }
    }
  }
}
