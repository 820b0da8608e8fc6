#include <doctest.h>

#include <random>
#include <stdexcept>

#include "hankelt/polynomial.hpp"

using namespace hankelt;

namespace {

mpz_class random_coefficient(std::mt19937_64& rng) {
  // |c| <= 2^64
  mpz_class c = static_cast<unsigned long>(rng());
  if (rng() % 2) c += 1;
  return rng() % 2 ? mpz_class(-c) : c;
}

IntPolynomial random_poly(std::mt19937_64& rng, std::size_t max_degree) {
  std::vector<mpz_class> c(rng() % (max_degree + 1) + 1);
  for (auto& x : c) x = rng() % 4 == 0 ? mpz_class(0) : random_coefficient(rng);
  return IntPolynomial(std::move(c));
}

GF2Polynomial random_gf2(std::mt19937_64& rng, std::size_t max_degree) {
  std::vector<int> bits(rng() % (max_degree + 1) + 1);
  for (auto& b : bits) b = static_cast<int>(rng() % 2);
  return GF2Polynomial::from_bits(bits);
}

}  // namespace

TEST_CASE("ring operation examples") {
  CHECK((IntPolynomial{0, 1} + IntPolynomial{0, -1}).is_zero());
  CHECK(poly_mul(IntPolynomial{0, 1}, IntPolynomial{-2, 0, 1}) == IntPolynomial{0, -2, 0, 1});
  const IntPolynomial p{3, 0, -7, 5};
  CHECK(poly_mul(IntPolynomial{1}, p) == p);
  CHECK(poly_neg(p) == IntPolynomial{-3, 0, 7, -5});
  CHECK(poly_add(p, poly_neg(p)).is_zero());
  CHECK(IntPolynomial{1, 2, 0, 0}.degree() == 1);
  CHECK(IntPolynomial{}.degree() == -1);
  CHECK((IntPolynomial{} * p).is_zero());
}

TEST_CASE("evaluation examples") {
  CHECK(poly_eval(IntPolynomial{0, 0, 0, -64, 48, 16, -16, 0, 1}, 1) == -15);
  CHECK(poly_eval(IntPolynomial{}, 7) == 0);
  CHECK(poly_eval(IntPolynomial{0, 4, 2, -6, 0, 1}, 1) == 1);
  CHECK(poly_eval(IntPolynomial{0, -2, 0, 1}, -3) == -21);
}

TEST_CASE("reduction mod 2 examples") {
  CHECK(poly_mod2(IntPolynomial{0, -2, 0, 1}) == GF2Polynomial::monomial(3));
  CHECK(poly_mod2(IntPolynomial{0, -8, 12, 4, -8, 0, 1}) == GF2Polynomial::monomial(6));
  CHECK(poly_mod2(IntPolynomial{}).is_zero());
  CHECK(poly_mod2(IntPolynomial{2, 4, 6}).is_zero());
}

TEST_CASE("interpolation examples") {
  const IntPolynomial cubic = interpolate({{0, 0}, {1, -1}, {2, 4}, {-1, 1}});
  CHECK(cubic == IntPolynomial{0, -2, 0, 1});
  CHECK(interpolate({{5, 9}}) == IntPolynomial{9});
  CHECK(interpolate({{0, 1}, {1, 1}}) == IntPolynomial{1});
  CHECK(interpolate({}).is_zero());
  // t^2 / 2 + t / 2 takes integer values but has rational coefficients.
  CHECK_THROWS_AS(interpolate({{0, 0}, {1, 1}, {2, 3}}), std::logic_error);
  CHECK_THROWS_AS(interpolate({{1, 0}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("symmetric nodes") {
  CHECK(symmetric_nodes(0).empty());
  CHECK(symmetric_nodes(5) == std::vector<long>{0, 1, -1, 2, -2});
  CHECK(symmetric_nodes(4) == std::vector<long>{0, 1, -1, 2});
}

TEST_CASE("interpolation inverts evaluation for random integer polynomials") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const IntPolynomial p = random_poly(rng, 16);
    const auto nodes = symmetric_nodes(static_cast<std::size_t>(std::max(p.degree(), 0L)) + 1);
    std::vector<std::pair<long, mpz_class>> pts;
    for (long x : nodes) pts.emplace_back(x, p.evaluate(x));
    REQUIRE(interpolate(pts) == p);
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_poly(rng, 8), b = random_poly(rng, 8), c = random_poly(rng, 8);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    if (!a.is_zero() && !b.is_zero()) REQUIRE((a * b).degree() == a.degree() + b.degree());
    if (!b.is_zero()) REQUIRE((a * b).exact_divide(b) == a);
  }
}

TEST_CASE("reduction mod 2 is a ring homomorphism") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_poly(rng, 12), b = random_poly(rng, 12);
    REQUIRE(poly_mod2(a + b) == poly_mod2(a) + poly_mod2(b));
    REQUIRE(poly_mod2(a * b) == poly_mod2(a) * poly_mod2(b));
  }
}

TEST_CASE("exact division rejects non-divisors") {
  const IntPolynomial p{1, 0, 1};  // t^2 + 1
  CHECK_THROWS_AS(p.exact_divide(IntPolynomial{1, 1}), std::domain_error);
  CHECK_THROWS_AS(p.exact_divide(IntPolynomial{2}), std::domain_error);
  CHECK_THROWS_AS(p.exact_divide(IntPolynomial{}), std::domain_error);
  CHECK(IntPolynomial{-1, 0, 1}.exact_divide(IntPolynomial{1, 1}) == IntPolynomial{-1, 1});
}

TEST_CASE("text forms") {
  CHECK(IntPolynomial{0, -2, 0, 1}.to_string() == "[0,-2,0,1]");
  CHECK(IntPolynomial{}.to_string() == "[]");
  CHECK(IntPolynomial{0, -2, 0, 1}.pretty() == "t^3 - 2t");
  CHECK(IntPolynomial{-40, 46, 20, -15}.pretty() == "-15t^3 + 20t^2 + 46t - 40");
  CHECK(IntPolynomial{-1}.pretty() == "-1");
  CHECK(IntPolynomial{}.pretty() == "0");
  CHECK(GF2Polynomial::monomial(3).to_string() == "[0,0,0,1]");
  CHECK(GF2Polynomial::from_bits({1, 1}).pretty() == "t + 1");
  CHECK(GF2Polynomial{}.to_string() == "[]");
}

TEST_CASE("GF(2) polynomial arithmetic") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_gf2(rng, 150), b = random_gf2(rng, 150), c = random_gf2(rng, 150);
    REQUIRE((a + a).is_zero());
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a * b) * c == a * (b * c));
    if (!b.is_zero()) {
      REQUIRE((a * b).exact_divide(b) == a);
      GF2Polynomial q, r;
      a.divide(b, q, r);
      REQUIRE(q * b + r == a);
      REQUIRE(r.degree() < b.degree());
      if (!a.is_zero()) REQUIRE((a * b).degree() == a.degree() + b.degree());
    }
  }
  CHECK(GF2Polynomial::monomial(70).degree() == 70);
  CHECK((GF2Polynomial::monomial(63) * GF2Polynomial::monomial(64)) == GF2Polynomial::monomial(127));
  CHECK_THROWS_AS(GF2Polynomial::one().exact_divide(GF2Polynomial{}), std::domain_error);
  CHECK_THROWS_AS(GF2Polynomial::monomial(2).exact_divide(GF2Polynomial::from_bits({1, 1})),
                  std::domain_error);
  GF2Polynomial p = GF2Polynomial::monomial(100);
  p.set_bit(100, false);
  CHECK(p.is_zero());
}
