#include "hankelt/sequences.hpp"

#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "hankelt/number_sets.hpp"

namespace hankelt {

namespace {

using Series = std::vector<std::int64_t>;

// Truncated product of (1 - x^(2^k)) over every factor with 2^k < len.
Series thue_morse_series(std::size_t len) {
  Series acc(len, 0);
  if (len == 0) return acc;
  acc[0] = 1;
  for (std::size_t step = 1; step < len; step *= 2) {
    // Multiply in place by (1 - x^step); walk downward so each term reads the old value.
    for (std::size_t i = len; i-- > step;) acc[i] -= acc[i - step];
  }
  return acc;
}

// sum over n of x^(2^n - 1) * sum_j x^(j * 2^(n + shift)), truncated at len.
Series geometric_sum_series(std::size_t len, unsigned shift) {
  Series acc(len, 0);
  for (std::size_t base = 1; base - 1 < len; base *= 2) {
    const std::size_t stride = base << shift;
    for (std::size_t e = base - 1; e < len; e += stride) acc[e] += 1;
  }
  return acc;
}

}  // namespace

std::string_view to_string(SequenceId seq) {
  switch (seq) {
    case SequenceId::ThueMorse: return "thue-morse";
    case SequenceId::PeriodDoubling: return "period-doubling";
    case SequenceId::Paperfolding: return "paperfolding";
    case SequenceId::CoonsG00: return "coons";
  }
  return "?";
}

SequenceId parse_sequence(std::string_view name) {
  for (SequenceId s : kAllSequences) {
    if (to_string(s) == name) return s;
  }
  throw std::invalid_argument("unknown sequence '" + std::string(name) + "'");
}

std::int64_t term(SequenceId seq, std::uint64_t n) {
  switch (seq) {
    case SequenceId::ThueMorse:
      return std::popcount(n) % 2 == 0 ? 1 : -1;
    case SequenceId::PeriodDoubling:
      return contains(SetId::J, n) ? 1 : 0;
    case SequenceId::Paperfolding:
      return contains(SetId::R, n) ? 1 : 0;
    case SequenceId::CoonsG00:
      // Summand n contributes to x^m exactly when 2^n divides m+1.
      return n == UINT64_MAX ? 65 : std::countr_zero(n + 1) + 1;
  }
  return 0;
}

std::vector<std::int64_t> prefix_terms(SequenceId seq, std::size_t len) {
  std::vector<std::int64_t> out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) out.push_back(term(seq, i));
  return out;
}

std::vector<std::int64_t> series_oracle(SequenceId seq, std::size_t len) {
  switch (seq) {
    case SequenceId::ThueMorse:
      return thue_morse_series(len);
    case SequenceId::PeriodDoubling: {
      const Series e = thue_morse_series(len + 1);
      Series d(len);
      for (std::size_t i = 0; i < len; ++i) d[i] = std::llabs(e[i] - e[i + 1]) / 2;
      return d;
    }
    case SequenceId::CoonsG00:
      return geometric_sum_series(len, 0);
    case SequenceId::Paperfolding:
      return geometric_sum_series(len, 2);
  }
  return {};
}

}  // namespace hankelt
