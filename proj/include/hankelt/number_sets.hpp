#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace hankelt {

/// The integer sets used to classify transpositions and sequence supports.
///
///   N  = {0,1,2,...}
///   J  = {(2n+1)4^k - 1}            K  = N \ J
///   J* = {(2n+1)4^k - 1 : k > 0}    L  = N \ J*
///   P  = {n : n = 0,3 mod 4}        Q  = {n : n = 1,2 mod 4}
///   R  = {(4k+1)2^n - 1}
enum class SetId { N, J, JStar, K, L, P, Q, R };

inline constexpr SetId kAllSets[] = {SetId::N, SetId::J, SetId::JStar, SetId::K,
                                     SetId::L, SetId::P, SetId::Q,     SetId::R};

std::string_view to_string(SetId set);

/// Accepts "N", "J", "JSTAR" / "J*", "K", "L", "P", "Q", "R" (case-insensitive).
/// Throws std::invalid_argument on anything else.
SetId parse_set(std::string_view name);

/// The smallest members of a set, in ascending order.
struct FinitePrefix {
  SetId set;
  std::vector<std::uint64_t> elements;

  std::size_t size() const { return elements.size(); }
};

/// 2-adic valuation of a positive integer.
int two_adic_valuation(std::uint64_t n);

bool contains(SetId set, std::uint64_t n);
bool contains(SetId set, const mpz_class& n);

FinitePrefix prefix(SetId set, std::size_t count);

/// Bijection N -> P: even n maps to 2n, odd n to 2n+1.
std::uint64_t beta(std::uint64_t n);

/// Bijection P -> Q: even n maps to n+1, odd n to n-1.
/// Throws std::domain_error if n is not in P.
std::uint64_t delta(std::uint64_t n);

/// True when c + d lies in `set`. Throws std::invalid_argument if c == d.
bool transposition_in(std::uint64_t c, std::uint64_t d, SetId set);

}  // namespace hankelt
