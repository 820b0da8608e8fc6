#include "hankelt/congruence.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace hankelt {

namespace {

class PascalTriangle {
 public:
  mpz_class at(std::size_t n, std::size_t k) {
    std::lock_guard lock(mutex_);
    while (rows_.size() <= n) {
      const std::size_t m = rows_.size();
      std::vector<mpz_class> row(m + 1, 1);
      for (std::size_t i = 1; i < m; ++i) row[i] = rows_[m - 1][i - 1] + rows_[m - 1][i];
      rows_.push_back(std::move(row));
    }
    return rows_[n][k];
  }

 private:
  std::mutex mutex_;
  std::vector<std::vector<mpz_class>> rows_;
};

PascalTriangle& triangle() {
  static PascalTriangle t;
  return t;
}

}  // namespace

mpz_class binom(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::domain_error("binom: negative n");
  if (k < 0 || k > n) return 0;
  return triangle().at(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
}

int binom_parity(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::domain_error("binom_parity: negative n");
  if (k < 0 || k > n) return 0;
  return (k & n) == k ? 1 : 0;
}

mpz_class odd_double_factorial(std::int64_t j) {
  if (j < 0) throw std::domain_error("odd_double_factorial: negative argument");
  mpz_class acc = 1;
  for (std::int64_t f = 3; f <= 2 * j - 1; f += 2) acc *= f;
  return acc;
}

}  // namespace hankelt
