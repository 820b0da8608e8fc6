#include "hankelt/gf2_polynomial.hpp"

#include <bit>
#include <stdexcept>

namespace hankelt {

GF2Polynomial GF2Polynomial::monomial(std::size_t degree) {
  GF2Polynomial p;
  p.set_bit(degree, true);
  return p;
}

GF2Polynomial GF2Polynomial::from_bits(const std::vector<int>& ascending_bits) {
  GF2Polynomial p;
  for (std::size_t i = 0; i < ascending_bits.size(); ++i) {
    if (ascending_bits[i] & 1) p.set_bit(i, true);
  }
  return p;
}

void GF2Polynomial::normalize() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

long GF2Polynomial::degree() const {
  if (words_.empty()) return -1;
  return static_cast<long>(64 * words_.size()) - 1 - std::countl_zero(words_.back());
}

bool GF2Polynomial::bit(std::size_t i) const {
  const std::size_t w = i / 64;
  return w < words_.size() && ((words_[w] >> (i % 64)) & 1U);
}

void GF2Polynomial::set_bit(std::size_t i, bool value) {
  const std::size_t w = i / 64;
  if (value) {
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= std::uint64_t{1} << (i % 64);
  } else if (w < words_.size()) {
    words_[w] &= ~(std::uint64_t{1} << (i % 64));
    normalize();
  }
}

GF2Polynomial& GF2Polynomial::operator+=(const GF2Polynomial& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
  normalize();
  return *this;
}

void GF2Polynomial::xor_shifted(const GF2Polynomial& other, std::size_t shift) {
  if (other.is_zero()) return;
  const std::size_t word_shift = shift / 64;
  const unsigned bit_shift = shift % 64;
  const std::size_t needed = other.words_.size() + word_shift + 1;
  if (words_.size() < needed) words_.resize(needed, 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) {
    const std::uint64_t w = other.words_[i];
    words_[i + word_shift] ^= w << bit_shift;
    if (bit_shift) words_[i + word_shift + 1] ^= w >> (64 - bit_shift);
  }
}

GF2Polynomial operator*(const GF2Polynomial& a, const GF2Polynomial& b) {
  GF2Polynomial out;
  if (a.is_zero() || b.is_zero()) return out;
  const GF2Polynomial& sparse = a.words_.size() <= b.words_.size() ? a : b;
  const GF2Polynomial& dense = &sparse == &a ? b : a;
  for (std::size_t w = 0; w < sparse.words_.size(); ++w) {
    std::uint64_t bits = sparse.words_[w];
    while (bits) {
      const int i = std::countr_zero(bits);
      out.xor_shifted(dense, 64 * w + static_cast<std::size_t>(i));
      bits &= bits - 1;
    }
  }
  out.normalize();
  return out;
}

void GF2Polynomial::divide(const GF2Polynomial& divisor, GF2Polynomial& quotient,
                           GF2Polynomial& remainder) const {
  if (divisor.is_zero()) throw std::domain_error("GF2Polynomial: division by zero");
  quotient = GF2Polynomial{};
  remainder = *this;
  const long dd = divisor.degree();
  for (long rd = remainder.degree(); rd >= dd; rd = remainder.degree()) {
    const auto shift = static_cast<std::size_t>(rd - dd);
    quotient.set_bit(shift, true);
    remainder.xor_shifted(divisor, shift);
    remainder.normalize();
  }
}

GF2Polynomial GF2Polynomial::exact_divide(const GF2Polynomial& divisor) const {
  GF2Polynomial q, r;
  divide(divisor, q, r);
  if (!r.is_zero()) throw std::domain_error("GF2Polynomial: inexact division");
  return q;
}

std::string GF2Polynomial::to_string() const {
  std::string out = "[";
  const long d = degree();
  for (long i = 0; i <= d; ++i) {
    if (i) out += ',';
    out += bit(static_cast<std::size_t>(i)) ? '1' : '0';
  }
  return out + "]";
}

std::string GF2Polynomial::pretty() const {
  if (is_zero()) return "0";
  std::string out;
  for (long i = degree(); i >= 0; --i) {
    if (!bit(static_cast<std::size_t>(i))) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) out += "1";
    else if (i == 1) out += "t";
    else out += "t^" + std::to_string(i);
  }
  return out;
}

}  // namespace hankelt
