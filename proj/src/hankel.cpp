#include "hankelt/hankel.hpp"

#include <algorithm>
#include <future>
#include <thread>
#include <utility>

#include "hankelt/bareiss.hpp"

namespace hankelt {

HankelWindow::HankelWindow(SequenceId seq, std::uint64_t offset, std::size_t order)
    : seq_(seq), offset_(offset), order_(order) {
  const std::size_t span = order == 0 ? 0 : 2 * order - 1;
  antidiagonal_.reserve(span);
  for (std::size_t i = 0; i < span; ++i) antidiagonal_.push_back(term(seq, offset + i));
}

std::vector<mpz_class> HankelWindow::scaled_matrix(const mpz_class& diagonal_scale) const {
  std::vector<mpz_class> m;
  m.reserve(order_ * order_);
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = 0; j < order_; ++j) {
      mpz_class v = static_cast<long>(entry(i, j));
      if (i == j) v *= diagonal_scale;
      m.push_back(std::move(v));
    }
  }
  return m;
}

mpz_class hankel_det(SequenceId seq, std::uint64_t p, std::size_t k) {
  const HankelWindow w(seq, p, k);
  return bareiss_determinant(w.scaled_matrix(1), k);
}

IntPolynomial t_hankel_det(SequenceId seq, std::uint64_t p, std::size_t k) {
  const HankelWindow w(seq, p, k);
  const std::vector<long> nodes = symmetric_nodes(k + 1);
  std::vector<mpz_class> values(nodes.size());

  // Node determinants are independent; results land in node order.
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, nodes.size());
  std::vector<std::future<void>> pending;
  for (std::size_t t = 0; t < workers; ++t) {
    pending.push_back(std::async(std::launch::async, [&, t] {
      for (std::size_t i = t; i < nodes.size(); i += workers) {
        values[i] = bareiss_determinant(w.scaled_matrix(nodes[i]), k);
      }
    }));
  }
  for (auto& f : pending) f.get();

  std::vector<std::pair<long, mpz_class>> points;
  points.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) points.emplace_back(nodes[i], values[i]);
  return interpolate(points);
}

IntPolynomial t_hankel_det_direct(SequenceId seq, std::uint64_t p, std::size_t k) {
  const HankelWindow w(seq, p, k);
  std::vector<IntPolynomial> m;
  m.reserve(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      m.push_back(IntPolynomial::monomial(w.entry(i, j), i == j ? 1 : 0));
    }
  }
  return bareiss_determinant(std::move(m), k);
}

namespace {

std::vector<GF2Polynomial> mod2_matrix(const HankelWindow& w) {
  const std::size_t k = w.order();
  std::vector<GF2Polynomial> m;
  m.reserve(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      m.push_back(w.entry(i, j) % 2 != 0 ? GF2Polynomial::monomial(i == j ? 1 : 0)
                                         : GF2Polynomial{});
    }
  }
  return m;
}

}  // namespace

GF2Polynomial t_hankel_det_mod2(SequenceId seq, std::uint64_t p, std::size_t k) {
  return bareiss_determinant(mod2_matrix(HankelWindow(seq, p, k)), k);
}

std::vector<GF2Polynomial> t_hankel_dets_mod2(SequenceId seq, std::uint64_t p, std::size_t kmax) {
  std::vector<GF2Polynomial> dets = bareiss_leading_minors(mod2_matrix(HankelWindow(seq, p, kmax)), kmax);
  for (std::size_t k = dets.size(); k <= kmax; ++k) dets.push_back(t_hankel_det_mod2(seq, p, k));
  return dets;
}

bool hankel_det_parity(SequenceId seq, std::uint64_t p, std::size_t k) {
  const HankelWindow w(seq, p, k);
  const std::size_t words = (k + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(k, std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (w.entry(i, j) % 2 != 0) rows[i][j / 64] |= std::uint64_t{1} << (j % 64);
    }
  }
  for (std::size_t col = 0; col < k; ++col) {
    const std::size_t wi = col / 64;
    const std::uint64_t mask = std::uint64_t{1} << (col % 64);
    std::size_t pivot = col;
    while (pivot < k && !(rows[pivot][wi] & mask)) ++pivot;
    if (pivot == k) return false;
    std::swap(rows[col], rows[pivot]);
    for (std::size_t r = col + 1; r < k; ++r) {
      if (rows[r][wi] & mask) {
        for (std::size_t x = wi; x < words; ++x) rows[r][x] ^= rows[col][x];
      }
    }
  }
  return true;
}

}  // namespace hankelt
