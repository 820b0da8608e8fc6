#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "hankelt/gf2_polynomial.hpp"
#include "hankelt/polynomial.hpp"
#include "hankelt/sequences.hpp"

namespace hankelt {

/// The k x k window (c_{p+i+j}) of a sequence. Only the 2k-1 distinct
/// anti-diagonal values are stored.
class HankelWindow {
 public:
  HankelWindow(SequenceId seq, std::uint64_t offset, std::size_t order);

  SequenceId sequence() const { return seq_; }
  std::uint64_t offset() const { return offset_; }
  std::size_t order() const { return order_; }

  std::int64_t entry(std::size_t i, std::size_t j) const { return antidiagonal_[i + j]; }

  /// Row-major entries with every diagonal entry multiplied by `diagonal_scale`.
  std::vector<mpz_class> scaled_matrix(const mpz_class& diagonal_scale) const;

 private:
  SequenceId seq_;
  std::uint64_t offset_;
  std::size_t order_;
  std::vector<std::int64_t> antidiagonal_;
};

/// Exact Hankel determinant H_k^p; the empty determinant (k = 0) is 1.
mpz_class hankel_det(SequenceId seq, std::uint64_t p, std::size_t k);

/// Exact t-Hankel determinant: diagonal entries multiplied by t. Evaluates
/// the integer determinant at k+1 nodes concurrently and interpolates.
IntPolynomial t_hankel_det(SequenceId seq, std::uint64_t p, std::size_t k);

/// Same polynomial by fraction-free elimination directly over Z[t]. Kept as
/// an independent cross-check of `t_hankel_det`.
IntPolynomial t_hankel_det_direct(SequenceId seq, std::uint64_t p, std::size_t k);

/// t-Hankel determinant reduced mod 2, eliminated natively over GF(2)[t].
GF2Polynomial t_hankel_det_mod2(SequenceId seq, std::uint64_t p, std::size_t k);

/// t_hankel_det_mod2 for every k in 0..kmax. The windows are nested, so one
/// elimination of the largest window yields them all; orders past a vanishing
/// pivot fall back to `t_hankel_det_mod2`.
std::vector<GF2Polynomial> t_hankel_dets_mod2(SequenceId seq, std::uint64_t p, std::size_t kmax);

/// Plain Hankel determinant mod 2 by Gaussian elimination on bit-packed
/// GF(2) rows.
bool hankel_det_parity(SequenceId seq, std::uint64_t p, std::size_t k);

}  // namespace hankelt
