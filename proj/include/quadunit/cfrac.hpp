#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

namespace quadunit {

inline constexpr std::size_t kDefaultMaxSteps = 1000000;

// Quadratic irrational (P + sqrt(N))/Q in the standard normal form:
// Q != 0, N positive and not a square, and Q | N - P^2.
struct QuadIrr {
  mpz_class P, Q, N;
  QuadIrr(mpz_class P_, mpz_class Q_, mpz_class N_);
};

// Expansion split at the first repeated (P, Q) state, which gives the
// minimal period.  cycle_states[i] is the state whose floor produced
// period[i]; every cycle state is reduced.
struct CFExpansion {
  std::vector<mpz_class> preperiod;
  std::vector<mpz_class> period;
  std::vector<std::pair<mpz_class, mpz_class>> cycle_states;

  std::size_t period_length() const { return period.size(); }
};

// Lexicographically smallest (P, Q) on the cycle; two quadratic irrationals
// over the same N share a tail of their expansions iff their keys match.
struct CycleKey {
  mpz_class P, Q;

  friend bool operator==(const CycleKey& a, const CycleKey& b) {
    return a.P == b.P && a.Q == b.Q;
  }
  friend bool operator!=(const CycleKey& a, const CycleKey& b) { return !(a == b); }
};

// Exact floor((P + sqrt(N))/Q), correct for either sign of Q.
mpz_class qi_floor(const QuadIrr& alpha);

CFExpansion expand(const QuadIrr& alpha, std::size_t max_steps = kDefaultMaxSteps);

// Expansion of sqrt(N); N must be positive and not a perfect square.
CFExpansion sqrt_cf(const mpz_class& N, std::size_t max_steps = kDefaultMaxSteps);

CycleKey cycle_key(const QuadIrr& alpha, std::size_t max_steps = kDefaultMaxSteps);

// GL2(Z)-equivalence: same N and same cycle key.
bool equivalent(const QuadIrr& a, const QuadIrr& b, std::size_t max_steps = kDefaultMaxSteps);

// (p_i, q_i) for i = 0..len-1 from the usual recurrence with seeds
// p_{-1} = 1, p_{-2} = 0, q_{-1} = 0, q_{-2} = 1.
std::vector<std::pair<mpz_class, mpz_class>> convergents(const std::vector<mpz_class>& terms);

}  // namespace quadunit
