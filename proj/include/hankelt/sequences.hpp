#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace hankelt {

/// Thue-Morse e (+1/-1), period-doubling d (0/1), regular paperfolding r (0/1)
/// and the coefficients of Coons's series G_{0,0} (all >= 1).
enum class SequenceId { ThueMorse, PeriodDoubling, Paperfolding, CoonsG00 };

inline constexpr SequenceId kAllSequences[] = {SequenceId::ThueMorse, SequenceId::PeriodDoubling,
                                               SequenceId::Paperfolding, SequenceId::CoonsG00};

/// Canonical CLI names: thue-morse, period-doubling, paperfolding, coons.
std::string_view to_string(SequenceId seq);
SequenceId parse_sequence(std::string_view name);

/// n-th term from closed forms (digit sum parity, set membership, 2-adic valuation).
std::int64_t term(SequenceId seq, std::uint64_t n);

std::vector<std::int64_t> prefix_terms(SequenceId seq, std::size_t len);

/// First `len` coefficients obtained by expanding the defining generating
/// function as a truncated power series. Shares no code with `term`.
///
///   e:       prod_{k>=0} (1 - x^(2^k))
///   d:       |e_n - e_{n+1}| / 2 on the expansion of e
///   G_{0,0}: sum_{n>=0} x^(2^n - 1) / (1 - x^(2^n))
///   r:       sum_{n>=0} x^(2^n - 1) / (1 - x^(2^(n+2)))
std::vector<std::int64_t> series_oracle(SequenceId seq, std::size_t len);

}  // namespace hankelt
