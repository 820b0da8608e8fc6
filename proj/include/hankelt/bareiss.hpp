#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hankelt/gf2_polynomial.hpp"
#include "hankelt/polynomial.hpp"

namespace hankelt {

/// Ring operations needed by fraction-free elimination. `exact_div` is only
/// ever called on divisions that are exact in the ring.
template <class T>
struct RingOps;

template <>
struct RingOps<mpz_class> {
  static bool is_zero(const mpz_class& a) { return sgn(a) == 0; }
  static mpz_class one() { return 1; }
  static mpz_class neg(const mpz_class& a) { return -a; }
  // a*p - b*c, divided exactly by prev
  static mpz_class cross(const mpz_class& a, const mpz_class& p, const mpz_class& b,
                         const mpz_class& c, const mpz_class& prev) {
    mpz_class r = a * p;
    mpz_submul(r.get_mpz_t(), b.get_mpz_t(), c.get_mpz_t());
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), prev.get_mpz_t());
    return r;
  }
};

template <>
struct RingOps<IntPolynomial> {
  static bool is_zero(const IntPolynomial& a) { return a.is_zero(); }
  static IntPolynomial one() { return IntPolynomial{1}; }
  static IntPolynomial neg(const IntPolynomial& a) { return -a; }
  static IntPolynomial cross(const IntPolynomial& a, const IntPolynomial& p,
                             const IntPolynomial& b, const IntPolynomial& c,
                             const IntPolynomial& prev) {
    return (a * p - b * c).exact_divide(prev);
  }
};

template <>
struct RingOps<GF2Polynomial> {
  static bool is_zero(const GF2Polynomial& a) { return a.is_zero(); }
  static GF2Polynomial one() { return GF2Polynomial::one(); }
  static GF2Polynomial neg(const GF2Polynomial& a) { return a; }
  static GF2Polynomial cross(const GF2Polynomial& a, const GF2Polynomial& p,
                             const GF2Polynomial& b, const GF2Polynomial& c,
                             const GF2Polynomial& prev) {
    GF2Polynomial r = a * p + b * c;
    if (prev == one()) return r;
    return r.exact_divide(prev);
  }
};

/// Determinant of an n x n row-major matrix by Bareiss fraction-free
/// elimination over an integral domain. A zero pivot is replaced by the first
/// nonzero entry below it in the same column (flipping the sign); if the
/// column is zero from the pivot down the determinant is zero.
template <class T>
T bareiss_determinant(std::vector<T> a, std::size_t n) {
  using Ops = RingOps<T>;
  if (n == 0) return Ops::one();
  auto at = [&](std::size_t i, std::size_t j) -> T& { return a[i * n + j]; };
  T prev = Ops::one();
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (Ops::is_zero(at(k, k))) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && Ops::is_zero(at(swap_row, k))) ++swap_row;
      if (swap_row == n) return T{};
      for (std::size_t j = k; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
      negate = !negate;
    }
    const T& pivot = at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = Ops::cross(at(i, j), pivot, at(i, k), at(k, j), prev);
      }
    }
    prev = pivot;
  }
  T det = std::move(at(n - 1, n - 1));
  return negate ? Ops::neg(det) : det;
}

/// Leading principal minors of orders 0..m of an n x n row-major matrix, from
/// a single pivot-free Bareiss pass: the k-th pivot is the minor of order k+1.
/// Stops at the first zero pivot, so m < n means that minor of order m+1 is
/// zero and the remaining minors must be computed separately.
template <class T>
std::vector<T> bareiss_leading_minors(std::vector<T> a, std::size_t n) {
  using Ops = RingOps<T>;
  auto at = [&](std::size_t i, std::size_t j) -> T& { return a[i * n + j]; };
  std::vector<T> minors{Ops::one()};
  T prev = Ops::one();
  for (std::size_t k = 0; k < n; ++k) {
    if (Ops::is_zero(at(k, k))) break;
    minors.push_back(at(k, k));
    const T& pivot = at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = Ops::cross(at(i, j), pivot, at(i, k), at(k, j), prev);
      }
    }
    prev = pivot;
  }
  return minors;
}

}  // namespace hankelt
