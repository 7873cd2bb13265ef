#include <doctest.h>

#include <vector>

#include "quadunit/errors.hpp"
#include "quadunit/exactint.hpp"
#include "quadunit/ideals.hpp"
#include "quadunit/units.hpp"

using namespace quadunit;

TEST_CASE("ideal construction reduces b and validates") {
  IdealA i_minus(1, 4, -1, 29);
  CHECK(i_minus.b() == 3);  // -1 = 3 mod 4
  IdealA i_plus(1, 4, 1, 29);
  CHECK(i_plus.b() == 1);
  CHECK_THROWS_AS(IdealA(1, 3, 1, 29), DomainError);  // 3 does not divide 28
  CHECK_THROWS_AS(IdealA(0, 4, 1, 29), DomainError);
  CHECK_THROWS_AS(IdealA(1, -4, 1, 29), DomainError);
}

TEST_CASE("ideal_mul reproduces the square identity at N=29") {
  IdealA i_plus(1, 4, 1, 29);
  IdealA i_minus(1, 4, -1, 29);
  CHECK(ideal_mul(i_plus, i_plus) == IdealA(2, 4, -1, 29));
  CHECK(ideal_mul(i_minus, i_minus) == IdealA(2, 4, 1, 29));
  CHECK(ideal_mul(i_plus, IdealA::whole_ring(29)) == i_plus);
  // inverse classes: I+ * I- = 4 * whole ring
  CHECK(ideal_mul(i_plus, i_minus) == IdealA(4, 1, 0, 29));
  CHECK_THROWS_AS(ideal_mul(i_plus, IdealA::whole_ring(21)), DomainError);
}

TEST_CASE("ideal_norm examples") {
  CHECK(ideal_norm(IdealA(1, 4, 1, 29)) == 4);
  CHECK(ideal_norm(IdealA(2, 4, -1, 29)) == 16);
  CHECK(ideal_norm(IdealA::whole_ring(29)) == 1);
}

TEST_CASE("norm is multiplicative on invertible ideals") {
  // odd a keeps the ideal prime to the conductor (2), hence invertible;
  // [2, 1+sqrt(N)] squared is 2*[2, 1+sqrt(N)], so even a must stay out
  const mpz_class N = 29;
  std::vector<IdealA> pool;
  for (long a = 1; a <= 99; a += 2) {
    for (long b = 0; b < a; ++b) {
      if ((N - b * b) % a == 0) pool.emplace_back(1, a, b, N);
    }
  }
  REQUIRE(pool.size() > 10);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i; j < pool.size(); ++j) {
      IdealA prod = ideal_mul(pool[i], pool[j]);
      CHECK(ideal_norm(prod) == ideal_norm(pool[i]) * ideal_norm(pool[j]));
    }
  }
}

TEST_CASE("norm multiplicativity fails at the non-invertible ideal [2, 1+sqrt(29)]") {
  IdealA j(1, 2, 1, 29);
  IdealA sq = ideal_mul(j, j);
  CHECK(sq == IdealA(2, 2, 1, 29));
  CHECK(ideal_norm(sq) == 8);  // != 4: j is not invertible in A
}

TEST_CASE("HNF is canonical: rebuilding an ideal from its own basis is the identity") {
  const mpz_class N = 29;
  for (long a = 1; a <= 60; ++a) {
    for (long b = 0; b < a; ++b) {
      if ((N - b * b) % a != 0) continue;
      IdealA ideal(3, a, b, N);
      IdealA same = ideal_mul(ideal, IdealA::whole_ring(N));
      CHECK(same == ideal);
    }
  }
}

TEST_CASE("is_principal_A examples") {
  CHECK(is_principal_A(IdealA(1, 4, 1, 29)));
  CHECK_FALSE(is_principal_A(IdealA(1, 4, 1, 101)));
  CHECK(is_principal_A(IdealA::whole_ring(29)));
}

TEST_CASE("extension_is_2O examples") {
  CHECK(extension_is_2O(1, 29));
  CHECK(extension_is_2O(-1, 29));
  CHECK(extension_is_2O(1, 101));
  CHECK(extension_is_2O(-1, 101));
  CHECK_THROWS_AS(extension_is_2O(1, 17), DomainError);  // 1 mod 8
  CHECK_THROWS_AS(extension_is_2O(2, 29), DomainError);
}

TEST_CASE("square identity and principality track e for N <= 500") {
  for (long n = 5; n <= 500; n += 8) {
    mpz_class N(n);
    if (!is_squarefree(N)) continue;
    IdealA i_plus(1, 4, 1, N);
    IdealA i_minus(1, 4, -1, N);
    CHECK(ideal_mul(i_plus, i_plus) == IdealA(2, 4, -1, N));
    CHECK(ideal_mul(i_minus, i_minus) == IdealA(2, 4, 1, N));
    bool e3 = unit_index(N).e == 3;
    CHECK(is_principal_A(i_plus) == e3);
    CHECK(is_principal_A(i_minus) == e3);
    CHECK(extension_is_2O(1, N));
    CHECK(extension_is_2O(-1, N));
  }
}
