#include <doctest.h>

#include <cstdlib>
#include <stdexcept>

#include "hankelt/number_sets.hpp"
#include "hankelt/sequences.hpp"

using namespace hankelt;
using V = std::vector<std::int64_t>;

TEST_CASE("term examples") {
  CHECK(prefix_terms(SequenceId::ThueMorse, 4) == V{1, -1, -1, 1});
  CHECK(prefix_terms(SequenceId::PeriodDoubling, 6) == V{1, 0, 1, 1, 1, 0});
  CHECK(prefix_terms(SequenceId::Paperfolding, 7) == V{1, 1, 0, 1, 1, 0, 0});
  CHECK(term(SequenceId::CoonsG00, 1) == 2);
  // Summands 2^n with 2^n | m+1: m = 0..7 -> 1,2,1,3,1,2,1,4.
  CHECK(prefix_terms(SequenceId::CoonsG00, 8) == V{1, 2, 1, 3, 1, 2, 1, 4});
  CHECK(prefix_terms(SequenceId::PeriodDoubling, 0).empty());
}

TEST_CASE("series oracle examples") {
  CHECK(series_oracle(SequenceId::ThueMorse, 4) == V{1, -1, -1, 1});
  CHECK(series_oracle(SequenceId::CoonsG00, 1) == V{1});
  CHECK(series_oracle(SequenceId::Paperfolding, 7) == V{1, 1, 0, 1, 1, 0, 0});
  CHECK(series_oracle(SequenceId::PeriodDoubling, 0).empty());
  CHECK(series_oracle(SequenceId::ThueMorse, 0).empty());
}

TEST_CASE("closed forms agree with the series expansion on 4096 terms") {
  for (SequenceId s : kAllSequences) {
    CAPTURE(to_string(s));
    CHECK(prefix_terms(s, 4096) == series_oracle(s, 4096));
  }
}

TEST_CASE("series truncation is consistent across lengths") {
  for (SequenceId s : kAllSequences) {
    const auto longer = series_oracle(s, 1000);
    for (std::size_t len : {1u, 2u, 3u, 17u, 64u, 65u, 999u}) {
      REQUIRE(series_oracle(s, len) == V(longer.begin(), longer.begin() + static_cast<long>(len)));
    }
  }
}

TEST_CASE("term value ranges") {
  for (std::uint64_t n = 0; n < 4096; ++n) {
    const auto e = term(SequenceId::ThueMorse, n);
    REQUIRE((e == 1 || e == -1));
    REQUIRE(term(SequenceId::PeriodDoubling, n) * (1 - term(SequenceId::PeriodDoubling, n)) == 0);
    REQUIRE(term(SequenceId::Paperfolding, n) * (1 - term(SequenceId::Paperfolding, n)) == 0);
    REQUIRE(term(SequenceId::CoonsG00, n) >= 1);
  }
}

TEST_CASE("period-doubling is half the Thue-Morse difference") {
  const auto e = series_oracle(SequenceId::ThueMorse, 4097);
  for (std::uint64_t n = 0; n < 4096; ++n) {
    REQUIRE(term(SequenceId::PeriodDoubling, n) == std::llabs(e[n] - e[n + 1]) / 2);
  }
}

TEST_CASE("d_k odd iff k in J; r_k = 1 iff k in R (k < 2^16)") {
  const auto d = series_oracle(SequenceId::PeriodDoubling, 1 << 16);
  const auto r = series_oracle(SequenceId::Paperfolding, 1 << 16);
  for (std::uint64_t k = 0; k < (1u << 16); ++k) {
    REQUIRE((d[k] % 2 != 0) == contains(SetId::J, k));
    REQUIRE((r[k] == 1) == contains(SetId::R, k));
  }
}

TEST_CASE("sequence names") {
  CHECK(parse_sequence("period-doubling") == SequenceId::PeriodDoubling);
  CHECK(parse_sequence("coons") == SequenceId::CoonsG00);
  CHECK_THROWS_AS(parse_sequence("fibonacci"), std::invalid_argument);
}
