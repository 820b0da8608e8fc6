#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hankelt/number_sets.hpp"
#include "hankelt/polynomial.hpp"
#include "hankelt/sequences.hpp"

namespace hankelt {

/// Default largest domain for enumeration-based counting. There are about
/// 2.4e7 unconstrained involutions on 20 letters.
inline constexpr std::size_t kDefaultEnumerationCap = 20;
/// Hard ceiling; domains are tracked in a 64-bit mask.
inline constexpr std::size_t kMaxEnumerationCap = 63;
/// Largest order accepted by the full permutation-sum oracle (10! terms).
inline constexpr std::size_t kDefaultFactorialCap = 10;

struct Involution {
  std::vector<std::uint64_t> domain;
  std::vector<std::uint64_t> fixed_points;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> transpositions;  // c < d
};

/// A permutation of {0, ..., n-1} in one-line notation.
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> images);
  static Permutation identity(std::size_t n);
  /// Digits of a one-line word such as "516280374" (n <= 10).
  static Permutation from_one_line(std::string_view digits);

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const { return images_; }
  Permutation inverse() const;
  bool is_involution() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

std::size_t inversions(const Permutation& perm);
std::size_t fixed_points_count(const Permutation& perm);

/// Visits every involution of `domain` whose transpositions (c,d) all have
/// c + d in `allowed`. Order: the smallest unresolved letter is first left
/// fixed, then paired with each admissible larger partner in domain order.
void for_each_involution(std::span<const std::uint64_t> domain, SetId allowed,
                         const std::function<void(const Involution&)>& visit,
                         std::size_t cap = kDefaultEnumerationCap);

std::vector<Involution> enumerate_involutions(std::span<const std::uint64_t> domain,
                                              SetId allowed,
                                              std::size_t cap = kDefaultEnumerationCap);

/// result[k] = mu(domain, k, allowed) for k = 0 .. |domain|/2.
std::vector<mpz_class> mu_distribution(std::span<const std::uint64_t> domain, SetId allowed,
                                       std::size_t cap = kDefaultEnumerationCap);

/// Number of involutions of `domain` with exactly k transpositions, all in `allowed`.
mpz_class mu(std::span<const std::uint64_t> domain, std::size_t k, SetId allowed,
             std::size_t cap = kDefaultEnumerationCap);

/// result[k1][k2] = mu2(domain, k1, k2, allowed1, allowed2).
std::vector<std::vector<mpz_class>> mu2_distribution(std::span<const std::uint64_t> domain,
                                                     SetId allowed1, SetId allowed2,
                                                     std::size_t cap = kDefaultEnumerationCap);

/// Involutions with exactly k1 transpositions in allowed1, k2 in allowed2 and
/// none elsewhere. Throws std::invalid_argument if some pair sum of the
/// domain lies in both sets.
mpz_class mu2(std::span<const std::uint64_t> domain, std::size_t k1, std::size_t k2,
              SetId allowed1, SetId allowed2, std::size_t cap = kDefaultEnumerationCap);

/// sum over admissible involutions of t^(number of fixed points).
IntPolynomial fix_generating_polynomial(std::span<const std::uint64_t> domain, SetId allowed,
                                        std::size_t cap = kDefaultEnumerationCap);

/// t-Hankel determinant by summing t^fix * sign * prod c_{p+i+sigma(i)} over
/// all k! permutations. Throws std::out_of_range when k > cap.
IntPolynomial leibniz_t_det(SequenceId seq, std::uint64_t p, std::size_t k,
                            std::size_t cap = kDefaultFactorialCap);

}  // namespace hankelt
