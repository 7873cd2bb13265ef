#include "quadunit/units.hpp"

#include <atomic>
#include <cmath>

#include "quadunit/errors.hpp"

namespace quadunit {

namespace {

std::atomic<std::uint64_t> g_decisions{0};
std::atomic<std::uint64_t> g_candidate_checks{0};
std::atomic<std::uint64_t> g_confirmed{0};
std::atomic<std::uint64_t> g_rejected{0};

void validate_field(const mpz_class& N) {
  if (N < 2) throw DomainError("unit: N must be >= 2");
  if (is_square(N)) throw DomainError("unit: N must not be a perfect square");
  if (!is_squarefree(N)) throw DomainError("unit: N must be square-free");
}

// round(a/b) for b > 0, exact in integers.
mpz_class round_div(const mpz_class& a, const mpz_class& b) {
  mpz_class num = 2 * a + b;
  mpz_class den = 2 * b;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

// Tries to write eps = ((u + v sqrt(N))/2)^3 with u, v odd.  Scaled integer
// arithmetic only: with k guard-shifted bits, r ~ eps^(1/3) * 2^k and
// c ~ norm/r approximate the root and its conjugate, whose sum and
// difference recover u and v.  Both roundings land well inside +-1/2, and a
// 3x3 neighborhood plus an exact cube check removes any doubt: a returned
// root is certain, and an empty box proves no such root exists.
std::optional<QuadInt> half_integral_cube_root(const QuadInt& eps) {
  g_decisions.fetch_add(1, std::memory_order_relaxed);

  const mpz_class& N = eps.N();
  const mpz_class& X = eps.u();
  const mpz_class& Y = eps.v();
  mpz_class n0 = eps.norm();

  std::size_t k = mpz_sizeinbase(X.get_mpz_t(), 2) / 3 + 64;

  mpz_class scale2k = mpz_class(1) << (2 * k);
  mpz_class s = isqrt(N * scale2k);             // sqrt(N) * 2^k, floor
  mpz_class E = (X << k) + Y * s;               // eps * 2^k
  mpz_class r = icbrt(E << (2 * k));            // eps^(1/3) * 2^k
  if (r == 0) throw InvariantError("cube root: zero mantissa");
  mpz_class c = scale2k / r;                    // |conjugate| * 2^k
  if (n0 < 0) c = -c;

  mpz_class u0 = round_div(r + c, mpz_class(1) << k);
  mpz_class v0 = round_div(r - c, s);

  for (int du = -1; du <= 1; ++du) {
    for (int dv = -1; dv <= 1; ++dv) {
      mpz_class u = u0 + du;
      mpz_class v = v0 + dv;
      if (u < 1 || v < 1) continue;
      if (u % 2 == 0 || v % 2 == 0) continue;
      QuadInt cand(u, v, N, 2);
      g_candidate_checks.fetch_add(1, std::memory_order_relaxed);
      if (quad_pow(cand, 3) == eps) {
        g_confirmed.fetch_add(1, std::memory_order_relaxed);
        return cand;
      }
    }
  }
  g_rejected.fetch_add(1, std::memory_order_relaxed);
  return std::nullopt;
}

}  // namespace

CubeRootStats cube_root_stats() {
  CubeRootStats s;
  s.decisions = g_decisions.load();
  s.candidate_checks = g_candidate_checks.load();
  s.confirmed = g_confirmed.load();
  s.rejected = g_rejected.load();
  return s;
}

void reset_cube_root_stats() {
  g_decisions = 0;
  g_candidate_checks = 0;
  g_confirmed = 0;
  g_rejected = 0;
}

QuadInt fundamental_unit_A(const mpz_class& N, std::size_t max_steps) {
  validate_field(N);
  CFExpansion cf = sqrt_cf(N, max_steps);
  std::size_t ell = cf.period_length();

  std::vector<mpz_class> terms = cf.preperiod;
  for (const mpz_class& a : cf.period) {
    if (terms.size() == ell) break;
    terms.push_back(a);
  }
  if (terms.size() != ell) throw InvariantError("fundamental_unit_A: short expansion");

  auto conv = convergents(terms);
  QuadInt eps(conv.back().first, conv.back().second, N, 1);

  mpz_class nrm = eps.norm();
  int expected = (ell % 2 == 0) ? 1 : -1;
  if (nrm != expected)
    throw InvariantError("fundamental_unit_A: norm disagrees with period parity");
  if (!eps.greater_than_one()) throw InvariantError("fundamental_unit_A: unit not > 1");
  return eps;
}

QuadInt fundamental_unit_O(const mpz_class& N, std::size_t max_steps) {
  QuadInt eps_A = fundamental_unit_A(N, max_steps);
  if (N % 4 != 1) return eps_A;

  auto root = half_integral_cube_root(eps_A);
  if (!root) return eps_A;

  if (root->norm() != eps_A.norm())
    throw InvariantError("fundamental_unit_O: norm not preserved by cube root");
  if (!root->greater_than_one()) throw InvariantError("fundamental_unit_O: root not > 1");
  return *root;
}

UnitReport unit_index(const mpz_class& N, std::size_t max_steps) {
  if (N % 4 != 1) throw DomainError("unit_index: N must be 1 mod 4");
  QuadInt eps_A = fundamental_unit_A(N, max_steps);
  QuadInt eps_O = eps_A;
  if (auto root = half_integral_cube_root(eps_A)) {
    eps_O = *root;
    if (eps_O.norm() != eps_A.norm())
      throw InvariantError("unit_index: norm not preserved by cube root");
    if (!eps_O.greater_than_one()) throw InvariantError("unit_index: root not > 1");
  }
  int e = (eps_O.d() == 2) ? 3 : 1;
  if (quad_pow(eps_O, static_cast<unsigned long>(e)) != eps_A)
    throw InvariantError("unit_index: epsilon_O^e != epsilon_A");

  UnitReport rep{N, eps_A, eps_O, e, eps_A.norm() < 0 ? -1 : 1, std::nullopt, {}};
  rep.method_flags.parity = true;

  if (N % 8 == 5) {
    QuadIrr sqrtN(0, 1, N);
    bool eq_plus = equivalent(QuadIrr(1, 4, N), sqrtN, max_steps);
    bool eq_minus = equivalent(QuadIrr(-1, 4, N), sqrtN, max_steps);
    if (eq_plus != eq_minus)
      throw InvariantError("unit_index: (sqrt(N)+1)/4 and (sqrt(N)-1)/4 disagree");
    int e_cf = eq_plus ? 3 : 1;
    if (e_cf != e)
      throw InvariantError("unit_index: equivalence method disagrees with parity method");
    rep.method_flags.cf_equivalence = true;
  } else if (e != 1) {
    throw InvariantError("unit_index: e = 3 although N != 5 mod 8");
  }

  if (e == 3) rep.odd_pell = std::make_pair(eps_O.u(), eps_O.v());
  return rep;
}

namespace {

mpz_class to_mpz(unsigned long long v) {
  return mpz_class(static_cast<unsigned long>(v));  // unsigned long is 64-bit here
}

unsigned long long u64_isqrt(unsigned long long t) {
  auto r = static_cast<unsigned long long>(std::sqrt(static_cast<double>(t)));
  while (r > 0 && r * r > t) --r;
  while ((r + 1) * (r + 1) <= t) ++r;
  return r;
}

constexpr unsigned long long kU64FastCeiling = 1ULL << 52;

}  // namespace

std::optional<QuadInt> brute_force_unit(const mpz_class& N, unsigned long long y_bound) {
  if (N < 2 || is_square(N)) throw DomainError("brute_force_unit: N must be >= 2 and non-square");
  if (y_bound < 1) throw DomainError("brute_force_unit: y_bound must be >= 1");

  bool fast = N.fits_ulong_p();
  if (fast) {
    unsigned long long n = N.get_ui();
    // n * y^2 + 1 must stay below the exact-double window
    fast = n < kU64FastCeiling / y_bound / y_bound;
  }
  if (fast) {
    unsigned long long n = N.get_ui();
    for (unsigned long long y = 1; y <= y_bound; ++y) {
      unsigned long long t = n * y * y;
      unsigned long long r = u64_isqrt(t);
      if (r * r == t - 1) return QuadInt(to_mpz(r), to_mpz(y), N, 1);
      if ((r + 1) * (r + 1) == t + 1) return QuadInt(to_mpz(r + 1), to_mpz(y), N, 1);
    }
    return std::nullopt;
  }

  for (unsigned long long y = 1; y <= y_bound; ++y) {
    mpz_class ym = to_mpz(y);
    mpz_class t = N * ym * ym;
    mpz_class tm = t - 1;
    if (is_square(tm)) return QuadInt(isqrt(tm), ym, N, 1);
    mpz_class tp = t + 1;
    if (is_square(tp)) return QuadInt(isqrt(tp), ym, N, 1);
  }
  return std::nullopt;
}

std::optional<std::pair<mpz_class, mpz_class>> odd_pell_oracle(const mpz_class& N,
                                                               unsigned long long y_bound) {
  if (N % 8 != 5) throw DomainError("odd_pell_oracle: N must be 5 mod 8");
  if (y_bound < 1) throw DomainError("odd_pell_oracle: y_bound must be >= 1");

  bool fast = N.fits_ulong_p();
  if (fast) {
    unsigned long long n = N.get_ui();
    fast = n < (kU64FastCeiling - 4) / y_bound / y_bound;
  }
  if (fast) {
    unsigned long long n = N.get_ui();
    for (unsigned long long y = 1; y <= y_bound; y += 2) {
      unsigned long long t = n * y * y;
      unsigned long long r = u64_isqrt(t);
      // x^2 = t - 4 forces x = r or r - 1; x^2 = t + 4 forces x = r + 1
      for (unsigned long long x : {r, r > 0 ? r - 1 : 0, r + 1}) {
        if (x % 2 == 0 || x == 0) continue;
        unsigned long long xx = x * x;
        if (xx + 4 == t || xx == t + 4)
          return std::make_pair(to_mpz(x), to_mpz(y));
      }
    }
    return std::nullopt;
  }

  for (unsigned long long y = 1; y <= y_bound; y += 2) {
    mpz_class ym = to_mpz(y);
    mpz_class t = N * ym * ym;
    mpz_class tm = t - 4;
    if (tm > 0 && is_square(tm)) {
      mpz_class x = isqrt(tm);
      if (x % 2 != 0) return std::make_pair(x, ym);
    }
    mpz_class tp = t + 4;
    if (is_square(tp)) {
      mpz_class x = isqrt(tp);
      if (x % 2 != 0) return std::make_pair(x, ym);
    }
  }
  return std::nullopt;
}

}  // namespace quadunit
