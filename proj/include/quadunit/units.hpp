#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>

#include "quadunit/cfrac.hpp"
#include "quadunit/exactint.hpp"

namespace quadunit {

struct MethodFlags {
  bool parity = false;                     // period/norm parity ran (always)
  std::optional<bool> cf_equivalence;      // set when N = 5 mod 8
};

struct UnitReport {
  mpz_class N;
  QuadInt epsilon_A;  // fundamental unit of Z[sqrt(N)]
  QuadInt epsilon_O;  // fundamental unit of the maximal order
  int e = 1;          // index [O^* : A^*] in {1, 3}
  int norm_A = 1;     // norm of epsilon_A (= norm of epsilon_O)
  // Minimal odd solution of |x^2 - N y^2| = 4 when e = 3.
  std::optional<std::pair<mpz_class, mpz_class>> odd_pell;
  MethodFlags method_flags;
};

// Fundamental unit of A = Z[sqrt(N)] from the first ell continued-fraction
// terms of sqrt(N); N must be >= 2, square-free (hence not a square).
QuadInt fundamental_unit_A(const mpz_class& N, std::size_t max_steps = kDefaultMaxSteps);

// Fundamental unit of the maximal order O of Q(sqrt(N)).  Differs from
// epsilon_A exactly when N = 5 mod 8 and a half-integral cube root exists.
QuadInt fundamental_unit_O(const mpz_class& N, std::size_t max_steps = kDefaultMaxSteps);

// Full report for N = 1 mod 4: both units, the index e, and the built-in
// cross-check against the continued-fraction equivalence criterion.
UnitReport unit_index(const mpz_class& N, std::size_t max_steps = kDefaultMaxSteps);

// Smallest-y solution of |x^2 - N y^2| = 1 with 1 <= y <= y_bound, if any.
// Exhaustive scan; an oracle for small N, not a production path.
std::optional<QuadInt> brute_force_unit(const mpz_class& N, unsigned long long y_bound);

// Smallest odd y <= y_bound with N y^2 -+ 4 an odd square; returns (x, y).
// N must be = 5 mod 8.
std::optional<std::pair<mpz_class, mpz_class>> odd_pell_oracle(const mpz_class& N,
                                                               unsigned long long y_bound);

// Counters for the cube-root extraction: every returned root was confirmed
// by an exact integer cube, every refusal exhausted the candidate box.
struct CubeRootStats {
  std::uint64_t decisions = 0;         // extraction calls
  std::uint64_t candidate_checks = 0;  // exact quad_pow verifications
  std::uint64_t confirmed = 0;         // calls that returned a root
  std::uint64_t rejected = 0;          // calls that proved there is none
};

CubeRootStats cube_root_stats();
void reset_cube_root_stats();

}  // namespace quadunit
