#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

#include "quadunit/cfrac.hpp"

namespace quadunit {

// Ideal of A = Z[sqrt(N)] in canonical form s*[a, b+sqrt(N)] with
// 0 <= b < a and a | N - b^2; s is the content.  Equality is structural.
class IdealA {
 public:
  IdealA(mpz_class s, mpz_class a, mpz_class b, mpz_class N);

  static IdealA whole_ring(const mpz_class& N) { return IdealA(1, 1, 0, N); }

  const mpz_class& s() const { return s_; }
  const mpz_class& a() const { return a_; }
  const mpz_class& b() const { return b_; }
  const mpz_class& N() const { return N_; }

  mpz_class norm() const { return s_ * s_ * a_; }
  bool is_whole_ring() const { return s_ == 1 && a_ == 1; }

  std::string str() const;

  friend bool operator==(const IdealA& x, const IdealA& y) {
    return x.s_ == y.s_ && x.a_ == y.a_ && x.b_ == y.b_ && x.N_ == y.N_;
  }
  friend bool operator!=(const IdealA& x, const IdealA& y) { return !(x == y); }

 private:
  mpz_class s_, a_, b_, N_;
};

// Product via the four generator products over basis {1, sqrt(N)} and a 2D
// Hermite normal form; the content splits off into s.
IdealA ideal_mul(const IdealA& I, const IdealA& J);

mpz_class ideal_norm(const IdealA& I);

// true iff (b + sqrt(N))/a is equivalent to sqrt(N); content ignored.
bool is_principal_A(const IdealA& I, std::size_t max_steps = kDefaultMaxSteps);

// Whether the O_N-ideal generated by {2, (sqrt(N)+sign)/2} equals O_N,
// i.e. the extension of [4, sqrt(N)+sign] to the maximal order is 2*O_N.
// Requires N = 5 mod 8, square-free.
bool extension_is_2O(int sign, const mpz_class& N);

}  // namespace quadunit
