#include "quadunit/cfrac.hpp"

#include <map>

#include "quadunit/errors.hpp"
#include "quadunit/exactint.hpp"

namespace quadunit {

QuadIrr::QuadIrr(mpz_class P_, mpz_class Q_, mpz_class N_)
    : P(std::move(P_)), Q(std::move(Q_)), N(std::move(N_)) {
  if (Q == 0) throw DomainError("QuadIrr: Q must be nonzero");
  if (N <= 0) throw DomainError("QuadIrr: N must be positive");
  if (is_square(N)) throw DomainError("QuadIrr: N must not be a perfect square");
  mpz_class rem = (N - P * P) % Q;
  if (rem != 0) throw DomainError("QuadIrr: Q must divide N - P^2");
}

namespace {

// floor((P + sqrt(N))/Q) given s = isqrt(N).  For Q > 0 this is
// floor((P + s)/Q); for Q < 0 the numerator rounds the other way, and
// floor((-P - s - 1)/(-Q)) is exact because sqrt(N) is irrational.
mpz_class floor_state(const mpz_class& P, const mpz_class& Q, const mpz_class& s) {
  mpz_class q;
  if (Q > 0) {
    mpz_class num = P + s;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), Q.get_mpz_t());
  } else {
    mpz_class num = -P - s - 1;
    mpz_class den = -Q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  }
  return q;
}

// alpha = (P + sqrt(N))/Q is reduced iff alpha > 1 and its conjugate lies in
// (-1, 0); exactly the purely periodic states.
bool state_is_reduced(const mpz_class& P, const mpz_class& Q, const mpz_class& N) {
  int sq = sgn(Q);
  if (surd_sign(P - Q, 1, N) != sq) return false;   // alpha > 1
  if (surd_sign(P, -1, N) != -sq) return false;     // conjugate < 0
  if (surd_sign(P + Q, -1, N) != sq) return false;  // conjugate > -1
  return true;
}

}  // namespace

mpz_class qi_floor(const QuadIrr& alpha) {
  return floor_state(alpha.P, alpha.Q, isqrt(alpha.N));
}

CFExpansion expand(const QuadIrr& alpha, std::size_t max_steps) {
  const mpz_class& N = alpha.N;
  const mpz_class s = isqrt(N);
  mpz_class P = alpha.P;
  mpz_class Q = alpha.Q;

  std::map<std::pair<mpz_class, mpz_class>, std::size_t> seen;
  std::vector<mpz_class> terms;
  std::vector<std::pair<mpz_class, mpz_class>> states;

  for (std::size_t i = 0; i < max_steps; ++i) {
    auto state = std::make_pair(P, Q);
    auto [it, inserted] = seen.emplace(state, i);
    if (!inserted) {
      std::size_t j = it->second;
      CFExpansion out;
      out.preperiod.assign(terms.begin(), terms.begin() + static_cast<long>(j));
      out.period.assign(terms.begin() + static_cast<long>(j), terms.end());
      out.cycle_states.assign(states.begin() + static_cast<long>(j), states.end());
      for (const auto& [cp, cq] : out.cycle_states) {
        if (!state_is_reduced(cp, cq, N))
          throw InvariantError("expand: non-reduced state on cycle");
      }
      return out;
    }
    states.push_back(state);

    mpz_class a = floor_state(P, Q, s);
    terms.push_back(a);
    P = a * Q - P;
    mpz_class num = N - P * P;
    mpz_class q2, r;
    mpz_tdiv_qr(q2.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), Q.get_mpz_t());
    if (r != 0) throw InvariantError("expand: Q does not divide N - P^2");
    Q = q2;
    if (Q == 0) throw InvariantError("expand: Q became zero");
  }
  throw IterationLimitError("expand: no repeated state within step cap");
}

CFExpansion sqrt_cf(const mpz_class& N, std::size_t max_steps) {
  return expand(QuadIrr(0, 1, N), max_steps);
}

CycleKey cycle_key(const QuadIrr& alpha, std::size_t max_steps) {
  CFExpansion cf = expand(alpha, max_steps);
  const auto* best = &cf.cycle_states.front();
  for (const auto& st : cf.cycle_states) {
    if (st < *best) best = &st;
  }
  return CycleKey{best->first, best->second};
}

bool equivalent(const QuadIrr& a, const QuadIrr& b, std::size_t max_steps) {
  if (a.N != b.N) throw DomainError("equivalent: different N");
  return cycle_key(a, max_steps) == cycle_key(b, max_steps);
}

std::vector<std::pair<mpz_class, mpz_class>> convergents(const std::vector<mpz_class>& terms) {
  if (terms.empty()) throw DomainError("convergents: empty term list");
  std::vector<std::pair<mpz_class, mpz_class>> out;
  out.reserve(terms.size());
  mpz_class p2 = 0, p1 = 1, q2 = 1, q1 = 0;
  for (const mpz_class& a : terms) {
    mpz_class p = a * p1 + p2;
    mpz_class q = a * q1 + q2;
    out.emplace_back(p, q);
    p2 = p1;
    p1 = p;
    q2 = q1;
    q1 = q;
  }
  return out;
}

}  // namespace quadunit
