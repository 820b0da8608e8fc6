#include "hankelt/involutions.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace hankelt {

namespace {

using Mask = std::uint64_t;

void check_domain(std::span<const std::uint64_t> domain, std::size_t cap) {
  if (cap > kMaxEnumerationCap) {
    throw std::out_of_range("enumeration cap " + std::to_string(cap) + " exceeds " +
                            std::to_string(kMaxEnumerationCap));
  }
  if (domain.size() > cap) {
    throw std::out_of_range("domain of size " + std::to_string(domain.size()) +
                            " exceeds the enumeration cap of " + std::to_string(cap));
  }
  std::vector<std::uint64_t> sorted(domain.begin(), domain.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("involution domain has repeated letters");
  }
}

// partners[i] has bit j set when (domain[i], domain[j]), j > i, is admissible.
std::vector<Mask> admissible_partners(std::span<const std::uint64_t> domain, SetId allowed) {
  std::vector<Mask> partners(domain.size(), 0);
  for (std::size_t i = 0; i < domain.size(); ++i) {
    for (std::size_t j = i + 1; j < domain.size(); ++j) {
      if (contains(allowed, domain[i] + domain[j])) partners[i] |= Mask{1} << j;
    }
  }
  return partners;
}

Mask full_mask(std::size_t n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Counts involutions on the letters in `free` by number of transpositions.
// The count depends only on `free`, so results are memoized per mask.
class TranspositionCounter {
 public:
  explicit TranspositionCounter(const std::vector<Mask>& partners) : partners_(partners) {}

  const std::vector<mpz_class>& count(Mask free) {
    if (auto it = memo_.find(free); it != memo_.end()) return it->second;
    std::vector<mpz_class> out{1};
    if (free != 0) {
      const int low = std::countr_zero(free);
      const Mask rest = free & (free - 1);
      out = count(rest);
      for (Mask m = partners_[low] & rest; m; m &= m - 1) {
        const auto& sub = count(rest & ~(m & (~m + 1)));
        if (out.size() < sub.size() + 1) out.resize(sub.size() + 1);
        for (std::size_t k = 0; k < sub.size(); ++k) out[k + 1] += sub[k];
      }
    }
    return memo_.emplace(free, std::move(out)).first->second;
  }

 private:
  const std::vector<Mask>& partners_;
  std::unordered_map<Mask, std::vector<mpz_class>> memo_;
};

// Same recursion with two admissible kinds of transposition; result[a][b]
// counts involutions with a transpositions of the first kind and b of the second.
class TwoKindCounter {
 public:
  using Table = std::vector<std::vector<mpz_class>>;
  TwoKindCounter(const std::vector<Mask>& first, const std::vector<Mask>& second, std::size_t half)
      : first_(first), second_(second), half_(half) {}

  const Table& count(Mask free) {
    if (auto it = memo_.find(free); it != memo_.end()) return it->second;
    Table out(half_, std::vector<mpz_class>(half_));
    if (free == 0) {
      out[0][0] = 1;
    } else {
      const int low = std::countr_zero(free);
      const Mask rest = free & (free - 1);
      out = count(rest);
      for (Mask m = first_[low] & rest; m; m &= m - 1) add_shifted(out, count(rest & ~(m & (~m + 1))), 1, 0);
      for (Mask m = second_[low] & rest; m; m &= m - 1) add_shifted(out, count(rest & ~(m & (~m + 1))), 0, 1);
    }
    return memo_.emplace(free, std::move(out)).first->second;
  }

 private:
  void add_shifted(Table& out, const Table& sub, std::size_t da, std::size_t db) const {
    for (std::size_t a = 0; a + da < half_; ++a) {
      for (std::size_t b = 0; b + db < half_; ++b) out[a + da][b + db] += sub[a][b];
    }
  }

  const std::vector<Mask>& first_;
  const std::vector<Mask>& second_;
  std::size_t half_;
  std::unordered_map<Mask, Table> memo_;
};

}  // namespace

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t v : images_) {
    if (v >= images_.size() || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return Permutation(std::move(v));
}

Permutation Permutation::from_one_line(std::string_view digits) {
  std::vector<std::size_t> v;
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("one-line word must be decimal digits");
    v.push_back(static_cast<std::size_t>(c - '0'));
  }
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_involution() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[images_[i]] != i) return false;
  }
  return true;
}

std::size_t inversions(const Permutation& perm) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm(i) > perm(j)) ++count;
    }
  }
  return count;
}

std::size_t fixed_points_count(const Permutation& perm) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm(i) == i) ++count;
  }
  return count;
}

void for_each_involution(std::span<const std::uint64_t> domain, SetId allowed,
                         const std::function<void(const Involution&)>& visit, std::size_t cap) {
  check_domain(domain, cap);
  const std::vector<Mask> partners = admissible_partners(domain, allowed);
  Involution current{{domain.begin(), domain.end()}, {}, {}};

  std::function<void(Mask)> recurse = [&](Mask free) {
    if (free == 0) {
      visit(current);
      return;
    }
    const int low = std::countr_zero(free);
    const Mask rest = free & (free - 1);
    current.fixed_points.push_back(domain[low]);
    recurse(rest);
    current.fixed_points.pop_back();
    for (Mask m = partners[low] & rest; m; m &= m - 1) {
      const int j = std::countr_zero(m);
      auto c = domain[low], d = domain[j];
      current.transpositions.emplace_back(std::min(c, d), std::max(c, d));
      recurse(rest & ~(Mask{1} << j));
      current.transpositions.pop_back();
    }
  };
  recurse(full_mask(domain.size()));
}

std::vector<Involution> enumerate_involutions(std::span<const std::uint64_t> domain,
                                              SetId allowed, std::size_t cap) {
  std::vector<Involution> out;
  for_each_involution(domain, allowed, [&](const Involution& inv) { out.push_back(inv); }, cap);
  return out;
}

std::vector<mpz_class> mu_distribution(std::span<const std::uint64_t> domain, SetId allowed,
                                       std::size_t cap) {
  check_domain(domain, cap);
  const auto partners = admissible_partners(domain, allowed);
  std::vector<mpz_class> out = TranspositionCounter(partners).count(full_mask(domain.size()));
  out.resize(domain.size() / 2 + 1);
  return out;
}

mpz_class mu(std::span<const std::uint64_t> domain, std::size_t k, SetId allowed,
             std::size_t cap) {
  const auto dist = mu_distribution(domain, allowed, cap);
  return k < dist.size() ? dist[k] : mpz_class(0);
}

std::vector<std::vector<mpz_class>> mu2_distribution(std::span<const std::uint64_t> domain,
                                                     SetId allowed1, SetId allowed2,
                                                     std::size_t cap) {
  check_domain(domain, cap);
  const auto first = admissible_partners(domain, allowed1);
  const auto second = admissible_partners(domain, allowed2);
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (first[i] & second[i]) {
      throw std::invalid_argument(std::string("mu2: sets ") + std::string(to_string(allowed1)) +
                                  " and " + std::string(to_string(allowed2)) +
                                  " overlap on a pair sum of the domain");
    }
  }
  const std::size_t half = domain.size() / 2 + 1;
  return TwoKindCounter(first, second, half).count(full_mask(domain.size()));
}

mpz_class mu2(std::span<const std::uint64_t> domain, std::size_t k1, std::size_t k2,
              SetId allowed1, SetId allowed2, std::size_t cap) {
  const auto dist = mu2_distribution(domain, allowed1, allowed2, cap);
  if (k1 >= dist.size() || k2 >= dist.size()) return 0;
  return dist[k1][k2];
}

IntPolynomial fix_generating_polynomial(std::span<const std::uint64_t> domain, SetId allowed,
                                        std::size_t cap) {
  const auto dist = mu_distribution(domain, allowed, cap);
  std::vector<mpz_class> coeffs(domain.size() + 1);
  for (std::size_t i = 0; i < dist.size(); ++i) coeffs[domain.size() - 2 * i] = dist[i];
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial leibniz_t_det(SequenceId seq, std::uint64_t p, std::size_t k, std::size_t cap) {
  if (k > cap) {
    throw std::out_of_range("leibniz_t_det: order " + std::to_string(k) +
                            " exceeds the factorial cap of " + std::to_string(cap));
  }
  std::vector<std::int64_t> c;
  for (std::size_t i = 0; k > 0 && i < 2 * k - 1; ++i) c.push_back(term(seq, p + i));

  std::vector<mpz_class> coeffs(k + 1);
  std::vector<std::size_t> sigma(k);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  do {
    mpz_class product = 1;
    for (std::size_t i = 0; i < k && sgn(product) != 0; ++i) product *= c[i + sigma[i]];
    if (sgn(product) == 0) continue;
    std::size_t inv = 0, fix = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (sigma[i] == i) ++fix;
      for (std::size_t j = i + 1; j < k; ++j) inv += sigma[i] > sigma[j];
    }
    if (inv % 2) coeffs[fix] -= product;
    else coeffs[fix] += product;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return IntPolynomial(std::move(coeffs));
}

}  // namespace hankelt
