#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hankelt {

/// Polynomial over the two-element field, bit i of the packed words being
/// the coefficient of t^i. Always normalized (no trailing zero words).
class GF2Polynomial {
 public:
  GF2Polynomial() = default;

  static GF2Polynomial one() { return monomial(0); }
  static GF2Polynomial monomial(std::size_t degree);
  static GF2Polynomial from_bits(const std::vector<int>& ascending_bits);

  long degree() const;
  bool is_zero() const { return words_.empty(); }
  bool bit(std::size_t i) const;
  void set_bit(std::size_t i, bool value);
  const std::vector<std::uint64_t>& words() const { return words_; }

  GF2Polynomial& operator+=(const GF2Polynomial& other);
  friend GF2Polynomial operator+(GF2Polynomial a, const GF2Polynomial& b) { return a += b; }
  friend GF2Polynomial operator*(const GF2Polynomial& a, const GF2Polynomial& b);
  friend bool operator==(const GF2Polynomial& a, const GF2Polynomial& b) = default;

  /// Long division; throws std::domain_error on a zero divisor.
  void divide(const GF2Polynomial& divisor, GF2Polynomial& quotient,
              GF2Polynomial& remainder) const;
  /// Throws std::domain_error if the division leaves a remainder.
  GF2Polynomial exact_divide(const GF2Polynomial& divisor) const;

  /// Ascending 0/1 coefficient list, e.g. `[0,0,0,1]` for t^3.
  std::string to_string() const;
  std::string pretty() const;

 private:
  void normalize();
  void xor_shifted(const GF2Polynomial& other, std::size_t shift);
  std::vector<std::uint64_t> words_;
};

}  // namespace hankelt
