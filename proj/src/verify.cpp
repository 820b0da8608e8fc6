#include "hankelt/verify.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <future>
#include <stdexcept>

#include <gmpxx.h>

#include "hankelt/congruence.hpp"
#include "hankelt/hankel.hpp"
#include "hankelt/involutions.hpp"
#include "hankelt/number_sets.hpp"
#include "hankelt/polynomial.hpp"
#include "hankelt/sequences.hpp"

namespace hankelt {

namespace {

using Witness = std::optional<Counterexample>;

struct ClaimInfo {
  ClaimId id;
  std::string_view tag;
  std::string_view statement;
};

constexpr ClaimInfo kClaimInfo[] = {
    {ClaimId::APWW, "APWW", "H_k(d) is odd"},
    {ClaimId::MainTk, "MAIN_TK", "H_k(d,t) = t^k (mod 2)"},
    {ClaimId::GWW, "GWW", "H_k(r) mod 2 repeats (1,1,1,0,0,1,0,0,1,1)"},
    {ClaimId::PfDeg3, "PF_DEG3", "deg H_k(r,t) <= 3"},
    {ClaimId::Key, "KEY", "mu(N|m,0,J) = 1 and mu(N|m,k,J) even for k >= 1"},
    {ClaimId::NpqA, "NPQ_A", "mu(N|m,k,J) = mu(P|m,k,L)"},
    {ClaimId::NpqB, "NPQ_B", "mu(P|m,k,J*) = mu(Q|m,k,J*)"},
    {ClaimId::Halving, "HALVING",
     "mu(N|2n,k,J*) = 0 (k odd), = mu(P|n,k/2,J*) (k even), mod 2"},
    {ClaimId::SumP, "SUMP", "sum_i mu(P|m,i,J*) C(m-2i,2k-2i) = mu(P|m,k,L) (mod 2)"},
    {ClaimId::MuPP, "MUPP",
     "mu(N|2n,k,J*) = sum mu(P|n,i,J*) mu(Q|n,j,J*) = sum mu(P|n,i,J*) mu(P|n,j,J*)"},
    {ClaimId::Marked, "MARKED",
     "sum_j C(j,i) mu(P|m,j,k-j,J*,L) = mu(P|m,i,J*) C(m-2i,2k-2i) (2k-2i-1)!!"},
    {ClaimId::Bino1, "BINO1", "sum_{i+j=k} C(n,2i) C(n,2j) = [k even] C(n,k) (mod 2)"},
    {ClaimId::Bino2, "BINO2", "sum_{i+j=k} C(n,2i) C(m,2j) = C(n+m,2k) (mod 2) for n+m odd"},
    {ClaimId::LucasFact, "LUCAS_FACT", "C(2a,2b+1) is even"},
    {ClaimId::DkJ, "DK_J", "d_k odd iff k in J"},
    {ClaimId::RkR, "RK_R", "r_k = 1 iff k in R"},
    {ClaimId::REven4, "R_EVEN4", "even m is in R iff m = 0 (mod 4)"},
    {ClaimId::InvDet, "INV_DET", "H_k(d,t) = sum over involutions of t^fix (mod 2)"},
    {ClaimId::CoonsOdd, "COONS_ODD", "H_k(G_{0,0}) is odd"},
    {ClaimId::TableD, "TABLE_D", "H_k(d,t) matches the published table, k <= 8"},
    {ClaimId::TableR, "TABLE_R", "H_k(r,t) matches the published table, k <= 9"},
};

const ClaimInfo& info(ClaimId claim) {
  for (const auto& ci : kClaimInfo) {
    if (ci.id == claim) return ci;
  }
  throw std::invalid_argument("unknown claim");
}

// Published t-Hankel tables, ascending coefficients.
const std::vector<IntPolynomial>& period_doubling_table() {
  static const std::vector<IntPolynomial> rows = {
      {1},
      {0, 1},
      {0, 0, 1},
      {0, -2, 0, 1},
      {0, 0, -4, 0, 1},
      {0, 4, 2, -6, 0, 1},
      {0, -8, 12, 4, -8, 0, 1},
      {0, 0, -24, 24, 10, -12, 0, 1},
      {0, 0, 0, -64, 48, 16, -16, 0, 1},
  };
  return rows;
}

constexpr long kPeriodDoublingAtOne[] = {1, 1, 1, -1, -3, 1, 1, -1, -15};

const std::vector<IntPolynomial>& paperfolding_table() {
  static const std::vector<IntPolynomial> rows = {
      {1},
      {0, 1},
      {-1},
      {0, -2},
      {1, 2, -1},
      {-2, 2, 2, -1},
      {-4, -2, 2},
      {6, -7, -6, 3},
      {16, 12, -9},
      {-40, 46, 20, -15},
  };
  return rows;
}

constexpr int kPaperfoldingParityPeriod[] = {1, 1, 1, 0, 0, 1, 0, 0, 1, 1};

Counterexample witness(std::vector<std::pair<std::string, std::string>> fields) {
  return Counterexample{std::move(fields)};
}

std::string str(std::int64_t v) { return std::to_string(v); }
std::string str(const mpz_class& v) { return v.get_str(); }

std::vector<std::uint64_t> prefix_of(SetId set, std::int64_t m) {
  return prefix(set, static_cast<std::size_t>(m)).elements;
}

std::size_t as_size(std::int64_t v) { return static_cast<std::size_t>(v); }

// ---- determinant claims -------------------------------------------------

Witness check_apww(const Bounds& b) {
  for (std::int64_t k = 0; k <= b.at("kmax"); ++k) {
    const mpz_class det = hankel_det(SequenceId::PeriodDoubling, 0, as_size(k));
    const bool gf2 = hankel_det_parity(SequenceId::PeriodDoubling, 0, as_size(k));
    if (!mpz_odd_p(det.get_mpz_t()) || !gf2) {
      return witness({{"k", str(k)}, {"H_k(d)", str(det)}, {"gf2_det", gf2 ? "1" : "0"}});
    }
  }
  return std::nullopt;
}

Witness check_main_tk(const Bounds& b) {
  const auto natives = t_hankel_dets_mod2(SequenceId::PeriodDoubling, 0, as_size(b.at("kmax")));
  for (std::int64_t k = 0; k <= b.at("kmax"); ++k) {
    const GF2Polynomial& native = natives[as_size(k)];
    if (native != GF2Polynomial::monomial(as_size(k))) {
      return witness({{"k", str(k)}, {"path", "gf2"}, {"H_k(d,t) mod 2", native.to_string()}});
    }
    if (k > b.at("kmax_exact")) continue;
    const IntPolynomial exact = t_hankel_det(SequenceId::PeriodDoubling, 0, as_size(k));
    if (exact.degree() != k || poly_mod2(exact) != native) {
      return witness({{"k", str(k)},
                      {"path", "exact"},
                      {"H_k(d,t)", exact.to_string()},
                      {"gf2", native.to_string()}});
    }
  }
  return std::nullopt;
}

Witness check_gww(const Bounds& b) {
  for (std::int64_t k = 0; k <= b.at("kmax"); ++k) {
    const mpz_class det = hankel_det(SequenceId::Paperfolding, 0, as_size(k));
    const int exact = mpz_odd_p(det.get_mpz_t()) ? 1 : 0;
    const int gf2 = hankel_det_parity(SequenceId::Paperfolding, 0, as_size(k)) ? 1 : 0;
    const int expected = kPaperfoldingParityPeriod[k % 10];
    if (exact != expected || gf2 != expected) {
      return witness({{"k", str(k)},
                      {"H_k(r)", str(det)},
                      {"gf2_det", str(gf2)},
                      {"expected_parity", str(expected)}});
    }
  }
  return std::nullopt;
}

Witness check_pf_deg3(const Bounds& b) {
  for (std::int64_t k = 0; k <= b.at("kmax"); ++k) {
    const IntPolynomial interp = t_hankel_det(SequenceId::Paperfolding, 0, as_size(k));
    const IntPolynomial direct = t_hankel_det_direct(SequenceId::Paperfolding, 0, as_size(k));
    if (interp.degree() > 3 || interp != direct) {
      return witness({{"k", str(k)},
                      {"interpolated", interp.to_string()},
                      {"direct", direct.to_string()}});
    }
  }
  return std::nullopt;
}

Witness check_coons(const Bounds& b) {
  for (std::int64_t k = 0; k <= b.at("kmax"); ++k) {
    const mpz_class det = hankel_det(SequenceId::CoonsG00, 0, as_size(k));
    const bool gf2 = hankel_det_parity(SequenceId::CoonsG00, 0, as_size(k));
    if (!mpz_odd_p(det.get_mpz_t()) || !gf2) {
      return witness({{"k", str(k)}, {"H_k(G00)", str(det)}, {"gf2_det", gf2 ? "1" : "0"}});
    }
  }
  return std::nullopt;
}

Witness check_inv_det(const Bounds& b) {
  for (std::int64_t k = 0; k <= b.at("kmax"); ++k) {
    const auto leibniz = poly_mod2(leibniz_t_det(SequenceId::PeriodDoubling, 0, as_size(k),
                                                 as_size(kFactorialOrderCap)));
    const auto domain = prefix_of(SetId::N, k);
    const auto involutions = poly_mod2(fix_generating_polynomial(domain, SetId::J));
    const auto native = t_hankel_det_mod2(SequenceId::PeriodDoubling, 0, as_size(k));
    if (leibniz != involutions || leibniz != native) {
      return witness({{"k", str(k)},
                      {"leibniz mod 2", leibniz.to_string()},
                      {"involution sum mod 2", involutions.to_string()},
                      {"gf2 determinant", native.to_string()}});
    }
  }
  return std::nullopt;
}

Witness check_table(const Bounds& b, SequenceId seq, const std::vector<IntPolynomial>& table) {
  for (std::int64_t k = 0; k <= b.at("kmax"); ++k) {
    const IntPolynomial& expected = table[as_size(k)];
    const IntPolynomial computed = t_hankel_det(seq, 0, as_size(k));
    const mpz_class plain = hankel_det(seq, 0, as_size(k));
    bool ok = computed == expected && computed.evaluate(1) == plain;
    if (seq == SequenceId::PeriodDoubling) {
      ok = ok && plain == kPeriodDoublingAtOne[k] &&
           poly_mod2(computed) == GF2Polynomial::monomial(as_size(k));
    }
    if (!ok) {
      return witness({{"k", str(k)},
                      {"computed", computed.to_string()},
                      {"table", expected.to_string()},
                      {"H_k at t=1", str(plain)}});
    }
  }
  return std::nullopt;
}

// ---- involution-counting claims -----------------------------------------

Witness check_key(const Bounds& b) {
  for (std::int64_t m = 1; m <= b.at("mmax"); ++m) {
    const auto dist = mu_distribution(prefix_of(SetId::N, m), SetId::J);
    for (std::int64_t k = 0; k <= b.at("kmax"); ++k) {
      const mpz_class value = as_size(k) < dist.size() ? dist[as_size(k)] : mpz_class(0);
      const bool ok = k == 0 ? value == 1 : mpz_even_p(value.get_mpz_t()) != 0;
      if (!ok) return witness({{"m", str(m)}, {"k", str(k)}, {"mu(N|m,k,J)", str(value)}});
    }
  }
  return std::nullopt;
}

Witness check_equal_distributions(std::int64_t mmax, SetId dom_a, SetId set_a, SetId dom_b,
                                  SetId set_b) {
  for (std::int64_t m = 1; m <= mmax; ++m) {
    const auto lhs = mu_distribution(prefix_of(dom_a, m), set_a);
    const auto rhs = mu_distribution(prefix_of(dom_b, m), set_b);
    for (std::size_t k = 0; k < lhs.size(); ++k) {
      if (lhs[k] != rhs[k]) {
        return witness({{"m", str(m)}, {"k", str(static_cast<std::int64_t>(k))},
                        {"lhs", str(lhs[k])}, {"rhs", str(rhs[k])}});
      }
    }
  }
  return std::nullopt;
}

mpz_class at_or_zero(const std::vector<mpz_class>& v, std::int64_t i) {
  return i >= 0 && as_size(i) < v.size() ? v[as_size(i)] : mpz_class(0);
}

Witness check_halving(const Bounds& b) {
  for (std::int64_t n = 0; n <= b.at("nmax"); ++n) {
    const auto whole = mu_distribution(prefix_of(SetId::N, 2 * n), SetId::JStar);
    const auto half = mu_distribution(prefix_of(SetId::P, n), SetId::JStar);
    for (std::int64_t k = 0; k <= n; ++k) {
      const int lhs = mpz_odd_p(at_or_zero(whole, k).get_mpz_t()) ? 1 : 0;
      const int rhs = k % 2 ? 0 : (mpz_odd_p(at_or_zero(half, k / 2).get_mpz_t()) ? 1 : 0);
      if (lhs != rhs) {
        return witness({{"n", str(n)}, {"k", str(k)},
                        {"mu(N|2n,k,J*)", str(at_or_zero(whole, k))},
                        {"rhs parity", str(rhs)}});
      }
    }
  }
  return std::nullopt;
}

Witness check_sump(const Bounds& b) {
  for (std::int64_t m = 1; m <= b.at("mmax"); ++m) {
    const auto dom = prefix_of(SetId::P, m);
    const auto star = mu_distribution(dom, SetId::JStar);
    const auto ell = mu_distribution(dom, SetId::L);
    for (std::int64_t k = 1; 2 * k <= m; ++k) {
      mpz_class lhs = 0;
      for (std::int64_t i = 0; i <= k; ++i) lhs += at_or_zero(star, i) * binom(m - 2 * i, 2 * k - 2 * i);
      const mpz_class rhs = at_or_zero(ell, k);
      if (mpz_odd_p(lhs.get_mpz_t()) != mpz_odd_p(rhs.get_mpz_t())) {
        return witness({{"m", str(m)}, {"k", str(k)}, {"lhs", str(lhs)}, {"mu(P|m,k,L)", str(rhs)}});
      }
    }
  }
  return std::nullopt;
}

Witness check_mupp(const Bounds& b) {
  for (std::int64_t n = 0; n <= b.at("nmax"); ++n) {
    const auto whole = mu_distribution(prefix_of(SetId::N, 2 * n), SetId::JStar);
    const auto p = mu_distribution(prefix_of(SetId::P, n), SetId::JStar);
    const auto q = mu_distribution(prefix_of(SetId::Q, n), SetId::JStar);
    for (std::int64_t k = 0; k <= n; ++k) {
      mpz_class pq = 0, pp = 0;
      for (std::int64_t i = 0; i <= k; ++i) {
        pq += at_or_zero(p, i) * at_or_zero(q, k - i);
        pp += at_or_zero(p, i) * at_or_zero(p, k - i);
      }
      const mpz_class lhs = at_or_zero(whole, k);
      if (lhs != pq || lhs != pp) {
        return witness({{"n", str(n)}, {"k", str(k)}, {"mu(N|2n,k,J*)", str(lhs)},
                        {"P x Q", str(pq)}, {"P x P", str(pp)}});
      }
    }
  }
  return std::nullopt;
}

Witness check_marked(const Bounds& b) {
  for (std::int64_t m = 0; m <= b.at("mmax"); ++m) {
    const auto dom = prefix_of(SetId::P, m);
    const auto star = mu_distribution(dom, SetId::JStar);
    const auto two = mu2_distribution(dom, SetId::JStar, SetId::L);
    auto two_at = [&](std::int64_t j, std::int64_t l) {
      return as_size(j) < two.size() && as_size(l) < two.size() ? two[as_size(j)][as_size(l)]
                                                               : mpz_class(0);
    };
    for (std::int64_t k = 0; k <= b.at("kmax"); ++k) {
      for (std::int64_t i = 0; i <= k; ++i) {
        mpz_class lhs = 0;
        for (std::int64_t j = i; j <= k; ++j) lhs += binom(j, i) * two_at(j, k - j);
        const mpz_class rhs = m - 2 * i < 0 ? mpz_class(0)
                                            : at_or_zero(star, i) * binom(m - 2 * i, 2 * k - 2 * i) *
                                                  odd_double_factorial(k - i);
        if (lhs != rhs) {
          return witness({{"m", str(m)}, {"k", str(k)}, {"i", str(i)},
                          {"colored count", str(lhs)}, {"direct count", str(rhs)}});
        }
      }
    }
  }
  return std::nullopt;
}

// ---- binomial claims ----------------------------------------------------

// parity[n][k] of exact binomials, taken from the Pascal values.
std::vector<std::vector<int>> exact_parity_table(std::int64_t nmax) {
  std::vector<std::vector<int>> t(as_size(nmax + 1));
  for (std::int64_t n = 0; n <= nmax; ++n) {
    t[as_size(n)].resize(as_size(nmax + 1), 0);
    for (std::int64_t k = 0; k <= n; ++k) {
      t[as_size(n)][as_size(k)] = mpz_odd_p(binom(n, k).get_mpz_t()) ? 1 : 0;
    }
  }
  return t;
}

int parity_at(const std::vector<std::vector<int>>& t, std::int64_t n, std::int64_t k) {
  return k < 0 || as_size(k) >= t[as_size(n)].size() ? 0 : t[as_size(n)][as_size(k)];
}

Witness check_bino1(const Bounds& b) {
  const std::int64_t nmax = b.at("nmax"), kmax = b.at("kmax");
  const auto par = exact_parity_table(std::max(nmax, std::int64_t{0}));
  for (std::int64_t n = 0; n <= nmax; ++n) {
    for (std::int64_t k = 0; k <= kmax; ++k) {
      int lhs = 0;
      for (std::int64_t i = 0; i <= k; ++i) lhs ^= parity_at(par, n, 2 * i) & parity_at(par, n, 2 * (k - i));
      const int rhs = k % 2 ? 0 : (k <= n ? parity_at(par, n, k) : 0);
      if (lhs != rhs) return witness({{"n", str(n)}, {"k", str(k)}, {"lhs", str(lhs)}, {"rhs", str(rhs)}});
    }
  }
  return std::nullopt;
}

Witness check_bino2(const Bounds& b) {
  const std::int64_t nmax = b.at("nmax"), kmax = b.at("kmax");
  const auto par = exact_parity_table(std::max<std::int64_t>(2 * nmax, 0));
  for (std::int64_t n = 0; n <= nmax; ++n) {
    for (std::int64_t m = 0; m <= nmax; ++m) {
      if ((n + m) % 2 == 0) continue;
      for (std::int64_t k = 0; k <= kmax; ++k) {
        int lhs = 0;
        for (std::int64_t i = 0; i <= k; ++i) lhs ^= parity_at(par, n, 2 * i) & parity_at(par, m, 2 * (k - i));
        const int rhs = parity_at(par, n + m, 2 * k);
        if (lhs != rhs) {
          return witness({{"n", str(n)}, {"m", str(m)}, {"k", str(k)}, {"lhs", str(lhs)}, {"rhs", str(rhs)}});
        }
      }
    }
  }
  return std::nullopt;
}

Witness check_lucas(const Bounds& b) {
  for (std::int64_t a = 1; a <= b.at("amax"); ++a) {
    for (std::int64_t c = 1; c <= b.at("bmax"); ++c) {
      const mpz_class exact = binom(2 * a, 2 * c + 1);
      if (mpz_odd_p(exact.get_mpz_t()) || binom_parity(2 * a, 2 * c + 1) != 0) {
        return witness({{"a", str(a)}, {"b", str(c)}, {"C(2a,2b+1)", str(exact)}});
      }
    }
  }
  return std::nullopt;
}

// ---- characterization claims --------------------------------------------

Witness check_dk_j(const Bounds& b) {
  const auto d = series_oracle(SequenceId::PeriodDoubling, as_size(b.at("nmax")));
  for (std::size_t k = 0; k < d.size(); ++k) {
    if ((d[k] % 2 != 0) != contains(SetId::J, k)) {
      return witness({{"k", str(static_cast<std::int64_t>(k))}, {"d_k", str(d[k])},
                      {"k in J", contains(SetId::J, k) ? "true" : "false"}});
    }
  }
  return std::nullopt;
}

Witness check_rk_r(const Bounds& b) {
  const auto r = series_oracle(SequenceId::Paperfolding, as_size(b.at("nmax")));
  for (std::size_t k = 0; k < r.size(); ++k) {
    if ((r[k] == 1) != contains(SetId::R, k) || (r[k] != 0 && r[k] != 1)) {
      return witness({{"k", str(static_cast<std::int64_t>(k))}, {"r_k", str(r[k])},
                      {"k in R", contains(SetId::R, k) ? "true" : "false"}});
    }
  }
  return std::nullopt;
}

Witness check_r_even4(const Bounds& b) {
  for (std::int64_t m = 0; m < b.at("nmax"); m += 2) {
    const bool in_r = contains(SetId::R, static_cast<std::uint64_t>(m));
    if (in_r != (m % 4 == 0)) {
      return witness({{"m", str(m)}, {"m in R", in_r ? "true" : "false"}});
    }
  }
  return std::nullopt;
}

struct Limits {
  std::int64_t m, k_det, k_factorial, prefix, binomial;
};

Limits limits(Profile profile) {
  switch (profile) {
    case Profile::Empty: return {0, 0, 0, 0, 0};
    case Profile::Quick: return {10, 8, 8, 1 << 12, 32};
    case Profile::Thorough: return {14, 20, 9, 1 << 16, 64};
  }
  return {0, 0, 0, 0, 0};
}

void require_at_most(const Bounds& b, const std::string& name, std::int64_t cap,
                     const std::string& what) {
  if (b.at(name) > cap) {
    throw std::out_of_range(name + "=" + std::to_string(b.at(name)) + " exceeds the " + what +
                            " cap of " + std::to_string(cap));
  }
}

void check_caps(ClaimId claim, const Bounds& b) {
  switch (claim) {
    case ClaimId::Key:
    case ClaimId::NpqA:
    case ClaimId::NpqB:
    case ClaimId::SumP:
    case ClaimId::Marked:
      require_at_most(b, "mmax", kInvolutionDomainCap, "involution domain");
      break;
    case ClaimId::Halving:
    case ClaimId::MuPP:
      require_at_most(b, "nmax", kInvolutionDomainCap / 2, "involution domain (2n <= 20)");
      break;
    case ClaimId::InvDet:
      require_at_most(b, "kmax", kFactorialOrderCap, "factorial oracle");
      break;
    case ClaimId::TableD:
      require_at_most(b, "kmax", 8, "table size");
      break;
    case ClaimId::TableR:
      require_at_most(b, "kmax", 9, "table size");
      break;
    default:
      break;
  }
}

}  // namespace

std::string_view to_string(ClaimId claim) { return info(claim).tag; }

std::string_view describe(ClaimId claim) { return info(claim).statement; }

ClaimId parse_claim(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (const auto& ci : kClaimInfo) {
    if (ci.tag == upper) return ci.id;
  }
  throw std::invalid_argument("unknown claim '" + std::string(name) + "'");
}

std::string_view to_string(Profile profile) {
  switch (profile) {
    case Profile::Empty: return "empty";
    case Profile::Quick: return "quick";
    case Profile::Thorough: return "thorough";
  }
  return "?";
}

Profile parse_profile(std::string_view name) {
  for (Profile p : {Profile::Empty, Profile::Quick, Profile::Thorough}) {
    if (to_string(p) == name) return p;
  }
  throw std::invalid_argument("unknown profile '" + std::string(name) + "'");
}

Bounds default_bounds(ClaimId claim, Profile profile) {
  const Limits l = limits(profile);
  switch (claim) {
    case ClaimId::APWW:
    case ClaimId::GWW:
    case ClaimId::PfDeg3:
    case ClaimId::CoonsOdd:
      return {{"kmax", l.k_det}};
    case ClaimId::MainTk:
      return {{"kmax", l.k_det}, {"kmax_exact", l.k_det}};
    case ClaimId::Key:
      return {{"mmax", l.m}, {"kmax", l.m / 2}};
    case ClaimId::NpqA:
    case ClaimId::NpqB:
    case ClaimId::SumP:
      return {{"mmax", l.m}};
    case ClaimId::Marked:
      return {{"mmax", l.m}, {"kmax", std::min<std::int64_t>(3, l.m)}};
    case ClaimId::Halving:
    case ClaimId::MuPP:
      return {{"nmax", l.m / 2}};
    case ClaimId::Bino1:
    case ClaimId::Bino2:
      return {{"nmax", l.binomial}, {"kmax", l.binomial}};
    case ClaimId::LucasFact:
      return {{"amax", l.binomial}, {"bmax", l.binomial}};
    case ClaimId::DkJ:
    case ClaimId::RkR:
    case ClaimId::REven4:
      return {{"nmax", l.prefix}};
    case ClaimId::InvDet:
      return {{"kmax", l.k_factorial}};
    case ClaimId::TableD:
      return {{"kmax", std::min<std::int64_t>(8, std::max(l.k_det, l.m))}};
    case ClaimId::TableR:
      return {{"kmax", std::min<std::int64_t>(9, std::max(l.k_det, l.m))}};
  }
  return {};
}

std::vector<std::string> bound_names(ClaimId claim) {
  std::vector<std::string> names;
  for (const auto& [name, _] : default_bounds(claim, Profile::Quick)) names.push_back(name);
  return names;
}

VerifyReport verify(ClaimId claim, const Bounds& bounds) {
  Bounds b = default_bounds(claim, Profile::Quick);
  for (const auto& [name, value] : bounds) {
    if (!b.contains(name)) {
      throw std::invalid_argument("claim " + std::string(to_string(claim)) +
                                  " has no bound named '" + name + "'");
    }
    if (value < 0) throw std::invalid_argument("bound " + name + " must be nonnegative");
    b[name] = value;
  }
  check_caps(claim, b);

  static const std::map<ClaimId, std::function<Witness(const Bounds&)>> checks = {
      {ClaimId::APWW, check_apww},
      {ClaimId::MainTk, check_main_tk},
      {ClaimId::GWW, check_gww},
      {ClaimId::PfDeg3, check_pf_deg3},
      {ClaimId::Key, check_key},
      {ClaimId::NpqA,
       [](const Bounds& x) {
         return check_equal_distributions(x.at("mmax"), SetId::N, SetId::J, SetId::P, SetId::L);
       }},
      {ClaimId::NpqB,
       [](const Bounds& x) {
         return check_equal_distributions(x.at("mmax"), SetId::P, SetId::JStar, SetId::Q,
                                          SetId::JStar);
       }},
      {ClaimId::Halving, check_halving},
      {ClaimId::SumP, check_sump},
      {ClaimId::MuPP, check_mupp},
      {ClaimId::Marked, check_marked},
      {ClaimId::Bino1, check_bino1},
      {ClaimId::Bino2, check_bino2},
      {ClaimId::LucasFact, check_lucas},
      {ClaimId::DkJ, check_dk_j},
      {ClaimId::RkR, check_rk_r},
      {ClaimId::REven4, check_r_even4},
      {ClaimId::InvDet, check_inv_det},
      {ClaimId::CoonsOdd, check_coons},
      {ClaimId::TableD,
       [](const Bounds& x) {
         return check_table(x, SequenceId::PeriodDoubling, period_doubling_table());
       }},
      {ClaimId::TableR,
       [](const Bounds& x) {
         return check_table(x, SequenceId::Paperfolding, paperfolding_table());
       }},
  };

  const auto start = std::chrono::steady_clock::now();
  VerifyReport report{claim, b, false, std::nullopt, {}};
  report.counterexample = checks.at(claim)(b);
  report.passed = !report.counterexample.has_value();
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

std::vector<VerifyReport> verify_all(Profile profile, const Bounds& overrides) {
  std::vector<std::future<VerifyReport>> pending;
  for (ClaimId claim : kAllClaims) {
    Bounds b = default_bounds(claim, profile);
    for (const auto& [name, value] : overrides) {
      if (b.contains(name)) b[name] = value;
    }
    pending.push_back(std::async(std::launch::async, [claim, b] { return verify(claim, b); }));
  }
  std::vector<VerifyReport> reports;
  reports.reserve(pending.size());
  for (auto& f : pending) reports.push_back(f.get());
  return reports;
}

}  // namespace hankelt
