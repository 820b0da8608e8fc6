#include <doctest.h>

#include <set>
#include <stdexcept>

#include "hankelt/verify.hpp"

using namespace hankelt;

TEST_CASE("claim catalogue") {
  std::set<std::string_view> tags;
  for (ClaimId c : kAllClaims) {
    tags.insert(to_string(c));
    CHECK(parse_claim(to_string(c)) == c);
    CHECK_FALSE(describe(c).empty());
    CHECK_FALSE(bound_names(c).empty());
  }
  CHECK(tags.size() == 21);
  CHECK(parse_claim("main_tk") == ClaimId::MainTk);
  CHECK_THROWS_AS(parse_claim("bogus"), std::invalid_argument);
  CHECK(parse_profile("thorough") == Profile::Thorough);
  CHECK_THROWS_AS(parse_profile("slow"), std::invalid_argument);
}

TEST_CASE("named examples pass") {
  CHECK(verify(ClaimId::MainTk, {{"kmax", 12}, {"kmax_exact", 12}}).passed);
  CHECK(verify(ClaimId::GWW, {{"kmax", 50}}).passed);
  CHECK(verify(ClaimId::Key, {{"mmax", 12}, {"kmax", 6}}).passed);
  CHECK(verify(ClaimId::TableD, {{"kmax", 8}}).passed);
  CHECK(verify(ClaimId::TableR, {{"kmax", 9}}).passed);
}

TEST_CASE("quick profile passes every claim") {
  const auto reports = verify_all(Profile::Quick);
  REQUIRE(reports.size() == 21);
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CAPTURE(to_string(reports[i].claim));
    CHECK(reports[i].claim == kAllClaims[i]);
    CHECK(reports[i].passed);
    CHECK_FALSE(reports[i].counterexample.has_value());
    CHECK(reports[i].bounds == default_bounds(reports[i].claim, Profile::Quick));
  }
}

TEST_CASE("empty profile passes vacuously") {
  for (const auto& r : verify_all(Profile::Empty)) {
    CAPTURE(to_string(r.claim));
    CHECK(r.passed);
    for (const auto& [name, value] : r.bounds) CHECK(value == 0);
  }
}

TEST_CASE("bounds validation") {
  CHECK_THROWS_AS(verify(ClaimId::Key, {{"mmax", 21}}), std::out_of_range);
  CHECK_NOTHROW(verify(ClaimId::Key, {{"mmax", 3}}));
  CHECK_THROWS_AS(verify(ClaimId::InvDet, {{"kmax", 11}}), std::out_of_range);
  CHECK_THROWS_AS(verify(ClaimId::TableD, {{"kmax", 9}}), std::out_of_range);
  CHECK_THROWS_AS(verify(ClaimId::Halving, {{"nmax", 11}}), std::out_of_range);
  CHECK_THROWS_AS(verify(ClaimId::GWW, {{"mmax", 3}}), std::invalid_argument);
  CHECK_THROWS_AS(verify(ClaimId::GWW, {{"kmax", -1}}), std::invalid_argument);
}

TEST_CASE("override bounds reach the report") {
  const auto r = verify(ClaimId::APWW, {{"kmax", 12}});
  CHECK(r.bounds.at("kmax") == 12);
  const auto all = verify_all(Profile::Empty, {{"kmax", 2}});
  for (const auto& rep : all) {
    if (rep.bounds.contains("kmax")) CHECK(rep.bounds.at("kmax") == 2);
  }
}
