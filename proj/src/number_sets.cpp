#include "hankelt/number_sets.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <limits>
#include <stdexcept>

namespace hankelt {

namespace {

// Membership for the valuation-driven sets, given v = v2(n+1) and the odd
// part of n+1 reduced mod 4.
bool contains_by_valuation(SetId set, std::uint64_t n, int v, unsigned odd_mod4) {
  switch (set) {
    case SetId::N:
      return true;
    case SetId::J:
      return v % 2 == 0;
    case SetId::K:
      return v % 2 == 1;
    case SetId::JStar:
      return v % 2 == 0 && v >= 2;
    case SetId::L:
      return !(v % 2 == 0 && v >= 2);
    case SetId::P:
      return n % 4 == 0 || n % 4 == 3;
    case SetId::Q:
      return n % 4 == 1 || n % 4 == 2;
    case SetId::R:
      return odd_mod4 == 1;
  }
  return false;
}

}  // namespace

std::string_view to_string(SetId set) {
  switch (set) {
    case SetId::N: return "N";
    case SetId::J: return "J";
    case SetId::JStar: return "JSTAR";
    case SetId::K: return "K";
    case SetId::L: return "L";
    case SetId::P: return "P";
    case SetId::Q: return "Q";
    case SetId::R: return "R";
  }
  return "?";
}

SetId parse_set(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (upper == "J*") return SetId::JStar;
  for (SetId s : kAllSets) {
    if (to_string(s) == upper) return s;
  }
  throw std::invalid_argument("unknown set '" + std::string(name) + "'");
}

int two_adic_valuation(std::uint64_t n) {
  if (n == 0) throw std::domain_error("two_adic_valuation: zero has no valuation");
  return std::countr_zero(n);
}

bool contains(SetId set, std::uint64_t n) {
  if (n == std::numeric_limits<std::uint64_t>::max()) return contains(set, mpz_class(n));
  const std::uint64_t succ = n + 1;
  const int v = std::countr_zero(succ);
  return contains_by_valuation(set, n, v, static_cast<unsigned>((succ >> v) % 4));
}

bool contains(SetId set, const mpz_class& n) {
  if (sgn(n) < 0) throw std::domain_error("contains: negative integer");
  if (n.fits_ulong_p() && n.get_ui() != std::numeric_limits<unsigned long>::max()) {
    return contains(set, static_cast<std::uint64_t>(n.get_ui()));
  }
  const mpz_class succ = n + 1;
  const auto v = static_cast<int>(mpz_scan1(succ.get_mpz_t(), 0));
  mpz_class odd;
  mpz_fdiv_q_2exp(odd.get_mpz_t(), succ.get_mpz_t(), static_cast<mp_bitcnt_t>(v));
  const auto odd_mod4 = static_cast<unsigned>(mpz_fdiv_ui(odd.get_mpz_t(), 4));
  const auto n_mod4 = static_cast<std::uint64_t>(mpz_fdiv_ui(n.get_mpz_t(), 4));
  return contains_by_valuation(set, n_mod4, v, odd_mod4);
}

FinitePrefix prefix(SetId set, std::size_t count) {
  FinitePrefix out{set, {}};
  out.elements.reserve(count);
  for (std::uint64_t n = 0; out.elements.size() < count; ++n) {
    if (contains(set, n)) out.elements.push_back(n);
  }
  return out;
}

std::uint64_t beta(std::uint64_t n) { return n % 2 == 0 ? 2 * n : 2 * n + 1; }

std::uint64_t delta(std::uint64_t n) {
  if (!contains(SetId::P, n)) {
    throw std::domain_error("delta: " + std::to_string(n) + " is not in P");
  }
  return n % 2 == 0 ? n + 1 : n - 1;
}

bool transposition_in(std::uint64_t c, std::uint64_t d, SetId set) {
  if (c == d) throw std::invalid_argument("transposition_in: letters must be distinct");
  return contains(set, c + d);
}

}  // namespace hankelt
