#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hankelt {

/// One bounded, machine-checkable statement per result being verified.
enum class ClaimId {
  APWW,        // H_k(d) is odd
  MainTk,      // H_k(d, t) = t^k mod 2
  GWW,         // H_k(r) mod 2 has period 10: (1,1,1,0,0,1,0,0,1,1)
  PfDeg3,      // deg H_k(r, t) <= 3
  Key,         // mu(N|m, 0, J) = 1, mu(N|m, k, J) even for k >= 1
  NpqA,        // mu(N|m, k, J) = mu(P|m, k, L)
  NpqB,        // mu(P|m, k, J*) = mu(Q|m, k, J*)
  Halving,     // mu(N|2n, k, J*) mod 2 vs mu(P|n, k/2, J*)
  SumP,        // sum_i mu(P|m, i, J*) C(m-2i, 2k-2i) = mu(P|m, k, L) mod 2
  MuPP,        // mu(N|2n, k, J*) splits over P|n and Q|n
  Marked,      // marked-involution double count
  Bino1,
  Bino2,
  LucasFact,   // C(2a, 2b+1) is even
  DkJ,         // d_k odd iff k in J
  RkR,         // r_k = 1 iff k in R
  REven4,      // even m in R iff m = 0 mod 4
  InvDet,      // Leibniz sum = involution sum mod 2
  CoonsOdd,    // H_k(G_{0,0}) is odd
  TableD,
  TableR,
};

inline constexpr ClaimId kAllClaims[] = {
    ClaimId::APWW,   ClaimId::MainTk,    ClaimId::GWW,    ClaimId::PfDeg3, ClaimId::Key,
    ClaimId::NpqA,   ClaimId::NpqB,      ClaimId::Halving, ClaimId::SumP,  ClaimId::MuPP,
    ClaimId::Marked, ClaimId::Bino1,     ClaimId::Bino2,  ClaimId::LucasFact, ClaimId::DkJ,
    ClaimId::RkR,    ClaimId::REven4,    ClaimId::InvDet, ClaimId::CoonsOdd, ClaimId::TableD,
    ClaimId::TableR,
};

/// Upper-case tag such as "MAIN_TK".
std::string_view to_string(ClaimId claim);
/// Case-insensitive; throws std::invalid_argument for unknown tags.
ClaimId parse_claim(std::string_view name);
/// One-line statement of what the verifier checks.
std::string_view describe(ClaimId claim);

/// Named integer limits, e.g. {"kmax": 40}.
using Bounds = std::map<std::string, std::int64_t>;

enum class Profile { Empty, Quick, Thorough };
std::string_view to_string(Profile profile);
Profile parse_profile(std::string_view name);

/// Names of the bounds a claim understands.
std::vector<std::string> bound_names(ClaimId claim);
Bounds default_bounds(ClaimId claim, Profile profile);

/// Feasibility caps enforced by `verify`.
inline constexpr std::int64_t kInvolutionDomainCap = 20;
inline constexpr std::int64_t kFactorialOrderCap = 10;

struct Counterexample {
  /// Indices and both computed sides, in a fixed order.
  std::vector<std::pair<std::string, std::string>> fields;
};

struct VerifyReport {
  ClaimId claim;
  Bounds bounds;
  bool passed = false;
  std::optional<Counterexample> counterexample;
  std::chrono::nanoseconds elapsed{0};
};

/// Checks the claim on every instance within `bounds`. Missing bounds take
/// the quick-profile defaults. A failure carries the first counterexample
/// in scan order. Throws std::invalid_argument for unknown or negative
/// bounds and std::out_of_range for bounds beyond the caps.
VerifyReport verify(ClaimId claim, const Bounds& bounds = {});

/// Runs every claim concurrently; reports come back in kAllClaims order.
/// Each override is applied to the claims that understand that bound.
std::vector<VerifyReport> verify_all(Profile profile, const Bounds& overrides = {});

}  // namespace hankelt
