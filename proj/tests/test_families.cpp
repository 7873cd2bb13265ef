#include <doctest.h>

#include <vector>

#include "quadunit/errors.hpp"
#include "quadunit/families.hpp"

using namespace quadunit;

TEST_CASE("family kind names round-trip") {
  for (FamilyKind k : {FamilyKind::A2P4, FamilyKind::A2M4, FamilyKind::FourA2P1}) {
    auto back = family_kind_from_name(family_kind_name(k));
    REQUIRE(back.has_value());
    CHECK(*back == k);
  }
  CHECK_FALSE(family_kind_from_name("a2+5").has_value());
}

TEST_CASE("family_members examples") {
  auto rows = family_members(FamilyKind::A2P4, 3, 7, true);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].N == 13);
  CHECK(rows[1].N == 29);
  CHECK(rows[2].N == 53);
  CHECK(rows[0].predicted_e == 3);

  CHECK(family_members(FamilyKind::A2P4, 11, 11, true).empty());  // 125 = 5^3

  auto r41 = family_members(FamilyKind::FourA2P1, 5, 9, true);
  REQUIRE(r41.size() == 2);  // a=9 gives 325 = 5^2 * 13, excluded
  CHECK(r41[0].N == 101);
  CHECK(r41[1].N == 197);
  CHECK(r41[0].predicted_e == 1);

  CHECK(family_members(FamilyKind::A2P4, 9, 7, true).empty());  // empty range
  CHECK_THROWS_AS(family_members(FamilyKind::A2M4, 1, 3, false), DomainError);
  CHECK_THROWS_AS(family_members(FamilyKind::A2P4, 1, 9, false), DomainError);
}

TEST_CASE("all three kinds produce N = 5 mod 8") {
  for (FamilyKind k : {FamilyKind::A2P4, FamilyKind::A2M4, FamilyKind::FourA2P1}) {
    for (const auto& row : family_members(k, family_min_a(k), 99, false)) {
      CHECK(row.N % 8 == 5);
    }
  }
}

TEST_CASE("expected_cf_pattern examples") {
  auto [pre1, per1] = expected_cf_pattern(FamilyKind::A2P4, 5);
  CHECK(pre1 == std::vector<mpz_class>{5});
  CHECK(per1 == std::vector<mpz_class>{2, 1, 1, 2, 10});

  auto [pre2, per2] = expected_cf_pattern(FamilyKind::A2M4, 5);
  CHECK(pre2 == std::vector<mpz_class>{4});
  CHECK(per2 == std::vector<mpz_class>{1, 1, 2, 1, 1, 8});

  auto [pre3, per3] = expected_cf_pattern(FamilyKind::FourA2P1, 5);
  CHECK(pre3 == std::vector<mpz_class>{10});
  CHECK(per3 == std::vector<mpz_class>{20});

  CHECK_THROWS_AS(expected_cf_pattern(FamilyKind::A2P4, 4), DomainError);
  CHECK_THROWS_AS(expected_cf_pattern(FamilyKind::A2M4, 3), DomainError);
}

TEST_CASE("CF patterns hold for every odd a in [3,199]") {
  for (FamilyKind k : {FamilyKind::A2P4, FamilyKind::A2M4, FamilyKind::FourA2P1}) {
    for (long long a = family_min_a(k); a <= 199; a += 2) {
      auto [pre, per] = expected_cf_pattern(k, a);
      CFExpansion cf = sqrt_cf(family_N(k, a));
      CHECK(cf.preperiod == pre);
      CHECK(cf.period == per);
    }
  }
}

TEST_CASE("equivalence propositions hold for every odd a in [3,99]") {
  for (FamilyKind k : {FamilyKind::A2P4, FamilyKind::A2M4, FamilyKind::FourA2P1}) {
    bool expect = (k != FamilyKind::FourA2P1);
    for (long long a = family_min_a(k); a <= 99; a += 2) {
      mpz_class N = family_N(k, a);
      QuadIrr sqrtN(0, 1, N);
      CHECK(equivalent(QuadIrr(1, 4, N), sqrtN) == expect);
      CHECK(equivalent(QuadIrr(-1, 4, N), sqrtN) == expect);
    }
  }
}

TEST_CASE("floor identity: qi_floor((sqrt(N)+-1)/4) = b with a = 4b-+1") {
  for (long long a = 3; a <= 99; a += 2) {
    mpz_class N = family_N(FamilyKind::A2P4, a);
    if (a % 4 == 3) {
      mpz_class b = static_cast<long>((a + 1) / 4);  // a = 4b - 1 pairs with (sqrt(N)+1)/4
      CHECK(qi_floor(QuadIrr(1, 4, N)) == b);
    } else {
      mpz_class b = static_cast<long>((a - 1) / 4);  // a = 4b + 1 pairs with (sqrt(N)-1)/4
      CHECK(qi_floor(QuadIrr(-1, 4, N)) == b);
    }
  }
}

TEST_CASE("a2-4 companion is purely periodic with the shifted period") {
  for (long long a : {5LL, 7LL, 9LL, 21LL}) {
    CFExpansion cf = expand(a2m4_companion(a));
    CHECK(cf.preperiod.empty());
    CHECK(cf.period == a2m4_companion_period(a));
  }
  CHECK(a2m4_companion_period(5) == std::vector<mpz_class>{2, 1, 1, 8, 1, 1});
  CHECK(a2m4_companion_period(7) == std::vector<mpz_class>{2, 2, 1, 12, 1, 2});
}

TEST_CASE("verify_member on the worked examples") {
  auto rows = family_members(FamilyKind::A2P4, 5, 5, false);
  REQUIRE(rows.size() == 1);
  FamilyRow done = verify_member(rows[0]);
  CHECK(done.observed_e == 3);
  CHECK(done.cf_pattern_ok == true);
  CHECK(done.equivalence_ok == true);

  auto r101 = verify_member(family_members(FamilyKind::FourA2P1, 5, 5, false)[0]);
  CHECK(r101.observed_e == 1);

  auto r77 = verify_member(family_members(FamilyKind::A2M4, 9, 9, false)[0]);
  CHECK(r77.N == 77);
  CHECK(r77.observed_e == 3);
}

TEST_CASE("verify_member rejects a doctored row") {
  auto rows = family_members(FamilyKind::A2P4, 5, 5, false);
  REQUIRE(rows.size() == 1);
  rows[0].N += 8;  // still 5 mod 8, wrong member
  CHECK_THROWS_AS(verify_member(rows[0]), DomainError);
}

TEST_CASE("survey examples") {
  auto s1 = survey(FamilyKind::A2P4, 3, 21);
  CHECK(s1.size() == 10);
  int verified = 0;
  for (const auto& row : s1) {
    CHECK(row.cf_pattern_ok == true);
    CHECK(row.equivalence_ok == true);
    if (row.squarefree) {
      CHECK(row.observed_e == 3);
      ++verified;
    } else {
      CHECK(row.a == 11);  // N = 125 = 5^3
      CHECK_FALSE(row.observed_e.has_value());
    }
  }
  CHECK(verified == 9);

  auto s2 = survey(FamilyKind::FourA2P1, 5, 21);
  for (const auto& row : s2) {
    if (row.squarefree) CHECK(row.observed_e == 1);
  }

  auto s3 = survey(FamilyKind::A2M4, 5, 5);
  REQUIRE(s3.size() == 1);
  CHECK(s3[0].N == 21);
  CHECK(s3[0].observed_e == 3);
}

TEST_CASE("survey is identical in serial and parallel") {
  auto par = survey(FamilyKind::A2M4, 5, 61, kDefaultMaxSteps, Exec::Parallel);
  auto ser = survey(FamilyKind::A2M4, 5, 61, kDefaultMaxSteps, Exec::Serial);
  REQUIRE(par.size() == ser.size());
  for (std::size_t i = 0; i < par.size(); ++i) {
    CHECK(par[i].a == ser[i].a);
    CHECK(par[i].N == ser[i].N);
    CHECK(par[i].squarefree == ser[i].squarefree);
    CHECK(par[i].observed_e == ser[i].observed_e);
    CHECK(par[i].cf_pattern_ok == ser[i].cf_pattern_ok);
    CHECK(par[i].equivalence_ok == ser[i].equivalence_ok);
  }
}
