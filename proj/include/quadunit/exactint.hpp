#pragma once

#include <gmpxx.h>

#include <string>

namespace quadunit {

// floor(sqrt(n)); n < 0 is an error.
mpz_class isqrt(const mpz_class& n);

// floor(cbrt(n)); n < 0 is an error.
mpz_class icbrt(const mpz_class& n);

bool is_square(const mpz_class& n);

// Trial division, dividing out each prime as it is found.  n >= 1 required.
bool is_squarefree(const mpz_class& n);

// Exact sign of a + b*sqrt(N) for positive N.  Never touches floating point:
// mixed-sign cases compare a^2 against b^2*N.
int surd_sign(const mpz_class& a, const mpz_class& b, const mpz_class& N);

// Element (u + v*sqrt(N))/d of Q(sqrt(N)) with d in {1,2}.  d = 2 is kept
// only for genuinely half-integral elements: u, v both odd and N = 1 mod 4
// (otherwise the constructor reduces or rejects).
class QuadInt {
 public:
  QuadInt(mpz_class u, mpz_class v, mpz_class N, int d = 1);

  static QuadInt one(const mpz_class& N) { return QuadInt(1, 0, N, 1); }

  const mpz_class& u() const { return u_; }
  const mpz_class& v() const { return v_; }
  const mpz_class& N() const { return N_; }
  int d() const { return d_; }

  // (u^2 - N v^2) / d^2, always an integer for valid elements.
  mpz_class norm() const;

  QuadInt conjugate() const { return QuadInt(u_, -v_, N_, d_); }

  bool is_one() const { return d_ == 1 && u_ == 1 && v_ == 0; }
  bool greater_than_one() const;

  std::string str() const;

  friend bool operator==(const QuadInt& x, const QuadInt& y) {
    return x.d_ == y.d_ && x.u_ == y.u_ && x.v_ == y.v_ && x.N_ == y.N_;
  }
  friend bool operator!=(const QuadInt& x, const QuadInt& y) { return !(x == y); }

 private:
  mpz_class u_, v_, N_;
  int d_;
};

QuadInt quad_mul(const QuadInt& x, const QuadInt& y);
QuadInt quad_pow(const QuadInt& x, unsigned long k);
mpz_class quad_norm(const QuadInt& x);

}  // namespace quadunit
