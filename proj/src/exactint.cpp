#include "quadunit/exactint.hpp"

#include "quadunit/errors.hpp"

namespace quadunit {

mpz_class isqrt(const mpz_class& n) {
  if (n < 0) throw DomainError("isqrt: negative argument");
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

mpz_class icbrt(const mpz_class& n) {
  if (n < 0) throw DomainError("icbrt: negative argument");
  mpz_class r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), 3);
  return r;
}

bool is_square(const mpz_class& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

namespace {

bool is_squarefree_u64(unsigned long long m) {
  if (m % 4 == 0) return false;
  if (m % 2 == 0) m /= 2;
  for (unsigned long long d = 3; d * d <= m; d += 2) {
    if (m % d == 0) {
      m /= d;
      if (m % d == 0) return false;
    }
  }
  return true;
}

}  // namespace

bool is_squarefree(const mpz_class& n) {
  if (n < 1) throw DomainError("is_squarefree: argument must be positive");
  if (n.fits_ulong_p()) {
    return is_squarefree_u64(n.get_ui());
  }
  mpz_class m = n;
  if (mpz_divisible_ui_p(m.get_mpz_t(), 4)) return false;
  if (mpz_divisible_ui_p(m.get_mpz_t(), 2)) mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), 2);
  mpz_class lim = isqrt(m);
  for (unsigned long d = 3; mpz_cmp_ui(lim.get_mpz_t(), d) >= 0; d += 2) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
      if (mpz_divisible_ui_p(m.get_mpz_t(), d)) return false;
      lim = isqrt(m);
    }
  }
  return true;
}

int surd_sign(const mpz_class& a, const mpz_class& b, const mpz_class& N) {
  if (N <= 0) throw DomainError("surd_sign: N must be positive");
  if (b == 0) return sgn(a);
  if (a == 0) return sgn(b);
  if (a > 0 && b > 0) return 1;
  if (a < 0 && b < 0) return -1;
  // opposite signs: |a| vs |b|*sqrt(N)
  mpz_class lhs = a * a;
  mpz_class rhs = b * b * N;
  int c = cmp(lhs, rhs);
  if (c == 0) return 0;  // only possible when N is a square
  return (a > 0) ? (c > 0 ? 1 : -1) : (c > 0 ? -1 : 1);
}

QuadInt::QuadInt(mpz_class u, mpz_class v, mpz_class N, int d)
    : u_(std::move(u)), v_(std::move(v)), N_(std::move(N)), d_(d) {
  if (N_ <= 0) throw DomainError("QuadInt: N must be positive");
  if (d_ == 2) {
    if (u_ % 2 == 0 && v_ % 2 == 0) {
      u_ /= 2;
      v_ /= 2;
      d_ = 1;
    } else if ((u_ - v_) % 2 != 0) {
      throw DomainError("QuadInt: u and v must have equal parity when d = 2");
    } else if (N_ % 4 != 1) {
      throw DomainError("QuadInt: half-integral element needs N = 1 mod 4");
    }
  } else if (d_ != 1) {
    throw DomainError("QuadInt: denominator must be 1 or 2");
  }
}

mpz_class QuadInt::norm() const {
  mpz_class t = u_ * u_ - N_ * v_ * v_;
  if (d_ == 2) {
    if (t % 4 != 0) throw InvariantError("QuadInt::norm: norm not integral");
    t /= 4;
  }
  return t;
}

bool QuadInt::greater_than_one() const {
  // (u + v sqrt(N))/d > 1  <=>  (u - d) + v sqrt(N) > 0
  return surd_sign(u_ - d_, v_, N_) > 0;
}

std::string QuadInt::str() const {
  std::string core = u_.get_str();
  if (v_ != 0) {
    if (v_ > 0) core += "+";
    if (v_ == 1) {
      core += "√" + N_.get_str();
    } else if (v_ == -1) {
      core += "-√" + N_.get_str();
    } else {
      core += v_.get_str() + "√" + N_.get_str();
    }
  }
  if (d_ == 2) return "(" + core + ")/2";
  return core;
}

QuadInt quad_mul(const QuadInt& x, const QuadInt& y) {
  if (x.N() != y.N()) throw DomainError("quad_mul: mismatched fields");
  mpz_class nu = x.u() * y.u() + x.v() * y.v() * x.N();
  mpz_class nv = x.u() * y.v() + x.v() * y.u();
  int nd = x.d() * y.d();
  while (nd > 1 && nu % 2 == 0 && nv % 2 == 0) {
    nu /= 2;
    nv /= 2;
    nd /= 2;
  }
  if (nd == 4) throw InvariantError("quad_mul: denominator failed to reduce");
  return QuadInt(nu, nv, x.N(), nd);
}

QuadInt quad_pow(const QuadInt& x, unsigned long k) {
  QuadInt acc = QuadInt::one(x.N());
  QuadInt base = x;
  while (k != 0) {
    if (k & 1) acc = quad_mul(acc, base);
    k >>= 1;
    if (k != 0) base = quad_mul(base, base);
  }
  return acc;
}

mpz_class quad_norm(const QuadInt& x) { return x.norm(); }

}  // namespace quadunit
