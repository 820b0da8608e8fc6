#include "hankelt/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hankelt {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coefficients)
    : coeffs_(std::move(coefficients)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(const mpz_class& c, std::size_t degree) {
  std::vector<mpz_class> v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

mpz_class IntPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : mpz_class(0);
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const mpz_class& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(IntPolynomial a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

IntPolynomial IntPolynomial::exact_divide(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("exact_divide: division by zero polynomial");
  if (is_zero()) return {};
  if (degree() < divisor.degree()) {
    throw std::domain_error("exact_divide: divisor does not divide dividend");
  }
  std::vector<mpz_class> rem = coeffs_;
  const std::size_t dsize = divisor.coeffs_.size();
  const mpz_class& lead = divisor.coeffs_.back();
  std::vector<mpz_class> quot(rem.size() - dsize + 1);
  for (std::size_t q = quot.size(); q-- > 0;) {
    mpz_class& top = rem[q + dsize - 1];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw std::domain_error("exact_divide: divisor does not divide dividend");
    }
    mpz_divexact(quot[q].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j < dsize; ++j) {
      mpz_submul(rem[q + j].get_mpz_t(), quot[q].get_mpz_t(), divisor.coeffs_[j].get_mpz_t());
    }
  }
  if (std::any_of(rem.begin(), rem.end(), [](const mpz_class& c) { return sgn(c) != 0; })) {
    throw std::domain_error("exact_divide: divisor does not divide dividend");
  }
  return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += coeffs_[i].get_str();
  }
  return out + "]";
}

std::string IntPolynomial::pretty() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const mpz_class& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    const mpz_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) os << mag;
    if (i >= 1) os << 't';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

GF2Polynomial poly_mod2(const IntPolynomial& p) {
  GF2Polynomial out;
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (mpz_odd_p(c[i].get_mpz_t())) out.set_bit(i, true);
  }
  return out;
}

IntPolynomial interpolate(const std::vector<std::pair<long, mpz_class>>& points) {
  const std::size_t n = points.size();
  if (n == 0) return {};
  std::set<long> seen;
  for (const auto& [x, _] : points) {
    if (!seen.insert(x).second) throw std::invalid_argument("interpolate: repeated node");
  }

  // Newton divided differences, in place.
  std::vector<mpq_class> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
    }
  }

  // Expand sum dd[i] * prod_{j<i} (t - x_j) by Horner on the Newton form.
  std::vector<mpq_class> acc{dd[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    const mpq_class x(points[i].first);
    std::vector<mpq_class> next(acc.size() + 1);
    for (std::size_t j = 0; j < acc.size(); ++j) {
      next[j + 1] += acc[j];
      next[j] -= acc[j] * x;
    }
    next[0] += dd[i];
    acc = std::move(next);
  }

  std::vector<mpz_class> coeffs;
  coeffs.reserve(acc.size());
  for (auto& q : acc) {
    q.canonicalize();
    if (q.get_den() != 1) {
      throw std::logic_error("interpolate: non-integral coefficient " + q.get_str() +
                             " (too few nodes for an integer polynomial?)");
    }
    coeffs.push_back(q.get_num());
  }
  return IntPolynomial(std::move(coeffs));
}

std::vector<long> symmetric_nodes(std::size_t count) {
  std::vector<long> nodes;
  nodes.reserve(count);
  for (long i = 0; nodes.size() < count; ++i) {
    nodes.push_back(i);
    if (i > 0 && nodes.size() < count) nodes.push_back(-i);
  }
  return nodes;
}

}  // namespace hankelt
