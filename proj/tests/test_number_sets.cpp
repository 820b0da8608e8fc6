#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hankelt/number_sets.hpp"
#include "oracles.hpp"

using namespace hankelt;

namespace {
constexpr std::uint64_t kLimit = 1 << 16;
}

TEST_CASE("membership examples") {
  CHECK(contains(SetId::J, 0));
  CHECK_FALSE(contains(SetId::J, 5));
  CHECK(contains(SetId::JStar, 11));
  CHECK(contains(SetId::R, 9));
  CHECK_FALSE(contains(SetId::P, 2));
}

TEST_CASE("published set listings") {
  auto first = [](SetId s, std::size_t n) { return prefix(s, n).elements; };
  using V = std::vector<std::uint64_t>;
  CHECK(first(SetId::J, 10) == V{0, 2, 3, 4, 6, 8, 10, 11, 12, 14});
  CHECK(first(SetId::JStar, 6) == V{3, 11, 15, 19, 27, 35});
  CHECK(first(SetId::K, 6) == V{1, 5, 7, 9, 13, 17});
  // L = N \ J* = K u evens; the commonly printed listing {0,1,2,4,6,8,10,13,...}
  // omits 5, 7, 9, 12 and contradicts this definition.
  CHECK(first(SetId::L, 14) == V{0, 1, 2, 4, 5, 6, 7, 8, 9, 10, 12, 13, 14, 16});
  CHECK(first(SetId::P, 9) == V{0, 3, 4, 7, 8, 11, 12, 15, 16});
  CHECK(first(SetId::Q, 9) == V{1, 2, 5, 6, 9, 10, 13, 14, 17});
  CHECK(first(SetId::R, 10) == V{0, 1, 3, 4, 7, 8, 9, 12, 15, 16});
}

TEST_CASE("prefix examples") {
  using V = std::vector<std::uint64_t>;
  CHECK(prefix(SetId::P, 5).elements == V{0, 3, 4, 7, 8});
  CHECK(prefix(SetId::Q, 6).elements == V{1, 2, 5, 6, 9, 10});
  CHECK(prefix(SetId::J, 0).elements.empty());
  CHECK(prefix(SetId::N, 4).elements == V{0, 1, 2, 3});
}

TEST_CASE("closed-form membership agrees with the defining parameterizations below 2^16") {
  const auto j = oracle::set_j(kLimit);
  const auto js = oracle::set_jstar(kLimit);
  const auto k = oracle::set_k(kLimit);
  const auto r = oracle::set_r(kLimit);
  for (std::uint64_t n = 0; n < kLimit; ++n) {
    REQUIRE(contains(SetId::J, n) == j.contains(n));
    REQUIRE(contains(SetId::JStar, n) == js.contains(n));
    REQUIRE(contains(SetId::K, n) == k.contains(n));
    REQUIRE(contains(SetId::R, n) == r.contains(n));
    REQUIRE(contains(SetId::L, n) == (k.contains(n) || n % 2 == 0));
  }
}

TEST_CASE("partition invariants below 2^16") {
  for (std::uint64_t n = 0; n < kLimit; ++n) {
    REQUIRE(contains(SetId::J, n) != contains(SetId::K, n));
    REQUIRE(contains(SetId::P, n) != contains(SetId::Q, n));
    REQUIRE(contains(SetId::L, n) == !contains(SetId::JStar, n));
    if (contains(SetId::JStar, n)) REQUIRE(contains(SetId::J, n));
    REQUIRE(contains(SetId::N, n));
  }
}

TEST_CASE("big-integer membership matches the machine-word path") {
  for (std::uint64_t n = 0; n < 4096; ++n) {
    for (SetId s : kAllSets) REQUIRE(contains(s, mpz_class(static_cast<unsigned long>(n))) == contains(s, n));
  }
  // (2*5+1) * 4^40 - 1 is in J* and J; times 2 gives K.
  mpz_class big = 11;
  big <<= 80;
  CHECK(contains(SetId::JStar, mpz_class(big - 1)));
  CHECK(contains(SetId::J, mpz_class(big - 1)));
  CHECK(contains(SetId::K, mpz_class(2 * big - 1)));
  CHECK_FALSE(contains(SetId::R, mpz_class(2 * big - 1)));  // odd part 11 = 3 mod 4
  CHECK(contains(SetId::P, mpz_class(big - 1)));           // = 3 mod 4
  CHECK(contains(SetId::J, std::uint64_t{UINT64_MAX}));     // 2^64 = 4^32
  CHECK_THROWS_AS(contains(SetId::N, mpz_class(-1)), std::domain_error);
}

TEST_CASE("beta and delta") {
  CHECK(beta(0) == 0);
  CHECK(beta(7) == 15);
  CHECK(beta(5) == 11);
  CHECK(delta(15) == 14);
  CHECK(delta(0) == 1);
  CHECK_THROWS_AS(delta(2), std::domain_error);

  for (std::size_t m = 0; m <= 512; ++m) {
    const auto n = prefix(SetId::N, m).elements;
    const auto p = prefix(SetId::P, m).elements;
    const auto q = prefix(SetId::Q, m).elements;
    std::set<std::uint64_t> image_beta, image_delta;
    for (auto x : n) image_beta.insert(beta(x));
    for (auto x : p) image_delta.insert(delta(x));
    REQUIRE(image_beta == std::set<std::uint64_t>(p.begin(), p.end()));
    REQUIRE(image_delta == std::set<std::uint64_t>(q.begin(), q.end()));
  }
}

TEST_CASE("transposition membership") {
  CHECK(transposition_in(0, 2, SetId::J));
  CHECK_FALSE(transposition_in(2, 3, SetId::J));
  CHECK(transposition_in(4, 7, SetId::JStar));
  CHECK_THROWS_AS(transposition_in(3, 3, SetId::J), std::invalid_argument);
}

TEST_CASE("beta carries J-transpositions onto L-transpositions") {
  for (std::uint64_t c = 0; c < 256; ++c) {
    for (std::uint64_t d = 0; d < 256; ++d) {
      if (c == d) continue;
      REQUIRE(transposition_in(c, d, SetId::J) == transposition_in(beta(c), beta(d), SetId::L));
    }
  }
}

TEST_CASE("delta preserves J*-transposition sums within P") {
  const auto p = prefix(SetId::P, 256).elements;
  for (auto c : p) {
    for (auto d : p) {
      if (c != d && contains(SetId::JStar, c + d)) REQUIRE(delta(c) + delta(d) == c + d);
    }
  }
}

TEST_CASE("J* sums are 3 mod 4") {
  for (std::uint64_t s = 1; s < 2 * 4096; ++s) {
    if (contains(SetId::JStar, s)) REQUIRE(s % 4 == 3);
  }
}

TEST_CASE("even members of R are exactly the multiples of 4") {
  for (std::uint64_t m = 0; m < kLimit; m += 2) REQUIRE(contains(SetId::R, m) == (m % 4 == 0));
}

TEST_CASE("members of R decompose uniquely") {
  for (auto m : prefix(SetId::R, 4096).elements) REQUIRE(oracle::r_decompositions(m).size() == 1);
  CHECK(oracle::r_decompositions(2).empty());
}

TEST_CASE("set names") {
  CHECK(parse_set("jstar") == SetId::JStar);
  CHECK(parse_set("J*") == SetId::JStar);
  CHECK(parse_set("q") == SetId::Q);
  CHECK_THROWS_AS(parse_set("X"), std::invalid_argument);
  for (SetId s : kAllSets) CHECK(parse_set(to_string(s)) == s);
  CHECK(two_adic_valuation(12) == 2);
  CHECK_THROWS_AS(two_adic_valuation(0), std::domain_error);
}
