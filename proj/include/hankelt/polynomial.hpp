#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hankelt/gf2_polynomial.hpp"

namespace hankelt {

/// Dense polynomial in t with arbitrary-precision integer coefficients.
/// Coefficients are stored in ascending degree order and kept normalized:
/// the highest stored coefficient is nonzero and the zero polynomial is empty.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial constant(const mpz_class& c);
  static IntPolynomial monomial(const mpz_class& c, std::size_t degree);

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }

  /// Coefficient of t^i; zero past the degree.
  mpz_class coefficient(std::size_t i) const;

  mpz_class evaluate(const mpz_class& x) const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const mpz_class& scalar);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const mpz_class& s) { return a *= s; }
  friend IntPolynomial operator-(IntPolynomial a);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Quotient of an exact division in Z[t]. Throws std::domain_error if
  /// `divisor` is zero or does not divide `*this`.
  IntPolynomial exact_divide(const IntPolynomial& divisor) const;

  /// `[c0,c1,...]`, ascending; the zero polynomial prints as `[]`.
  std::string to_string() const;
  /// Human-readable form such as `t^3 - 2t`.
  std::string pretty() const;

 private:
  void normalize();
  std::vector<mpz_class> coeffs_;
};

inline IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b) { return a + b; }
inline IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) { return a * b; }
inline IntPolynomial poly_neg(const IntPolynomial& a) { return -a; }
inline mpz_class poly_eval(const IntPolynomial& p, const mpz_class& x) { return p.evaluate(x); }

/// Coefficient-wise reduction mod 2.
GF2Polynomial poly_mod2(const IntPolynomial& p);

/// The unique polynomial of degree < points.size() through the given
/// (node, value) pairs. Nodes must be distinct. The computation runs over
/// the rationals; a non-integral coefficient throws std::logic_error since it
/// means the caller supplied too few nodes for an integer polynomial.
IntPolynomial interpolate(const std::vector<std::pair<long, mpz_class>>& points);

/// Interpolation nodes 0, 1, -1, 2, -2, ...
std::vector<long> symmetric_nodes(std::size_t count);

}  // namespace hankelt
