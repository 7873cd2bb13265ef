#include "quadunit/ideals.hpp"

#include <utility>
#include <vector>

#include "quadunit/errors.hpp"
#include "quadunit/exactint.hpp"

namespace quadunit {

namespace {

struct Basis2 {
  mpz_class alpha;  // (alpha, 0)
  mpz_class beta;   // (beta, g), 0 <= beta < alpha
  mpz_class g;
};

// Hermite normal form of the lattice spanned by integer rows (x, y):
// Euclid on the second coordinate, gcd of what falls into the first.
Basis2 lattice_hnf(std::vector<std::pair<mpz_class, mpz_class>> rows) {
  mpz_class alpha = 0;
  std::pair<mpz_class, mpz_class> pivot{0, 0};
  bool have_pivot = false;

  for (auto& row : rows) {
    while (row.second != 0) {
      if (!have_pivot) {
        pivot = std::move(row);
        have_pivot = true;
        row = {0, 0};
        break;
      }
      if (cmp(abs(pivot.second), abs(row.second)) > 0) std::swap(pivot, row);
      mpz_class k = row.second / pivot.second;  // truncated
      row.first -= k * pivot.first;
      row.second -= k * pivot.second;
    }
    if (row.first != 0) {
      mpz_class a;
      mpz_gcd(a.get_mpz_t(), alpha.get_mpz_t(), row.first.get_mpz_t());
      alpha = a;
    }
  }

  if (!have_pivot || pivot.second == 0) throw InvariantError("lattice_hnf: rank < 2");
  if (alpha == 0) throw InvariantError("lattice_hnf: infinite index");
  if (pivot.second < 0) {
    pivot.first = -pivot.first;
    pivot.second = -pivot.second;
  }
  mpz_class beta;
  mpz_fdiv_r(beta.get_mpz_t(), pivot.first.get_mpz_t(), alpha.get_mpz_t());
  return Basis2{alpha, beta, pivot.second};
}

}  // namespace

IdealA::IdealA(mpz_class s, mpz_class a, mpz_class b, mpz_class N)
    : s_(std::move(s)), a_(std::move(a)), b_(std::move(b)), N_(std::move(N)) {
  if (s_ <= 0) throw DomainError("ideal: content s must be positive");
  if (a_ <= 0) throw DomainError("ideal: a must be positive");
  if (N_ <= 0) throw DomainError("ideal: N must be positive");
  mpz_fdiv_r(b_.get_mpz_t(), b_.get_mpz_t(), a_.get_mpz_t());
  if ((N_ - b_ * b_) % a_ != 0)
    throw DomainError("ideal: not an ideal, a does not divide N - b^2");
}

std::string IdealA::str() const {
  std::string out;
  if (s_ != 1) out += s_.get_str();
  out += "[" + a_.get_str() + ",";
  if (b_ != 0) out += b_.get_str() + "+";
  out += "√" + N_.get_str() + "]";
  return out;
}

IdealA ideal_mul(const IdealA& I, const IdealA& J) {
  if (I.N() != J.N()) throw DomainError("ideal_mul: mismatched N");
  const mpz_class& N = I.N();

  // generators of the primitive product over {1, sqrt(N)}:
  // a1*a2, a1*(b2+r), a2*(b1+r), (b1+r)(b2+r) with r = sqrt(N)
  std::vector<std::pair<mpz_class, mpz_class>> gens;
  gens.emplace_back(I.a() * J.a(), 0);
  gens.emplace_back(I.a() * J.b(), I.a());
  gens.emplace_back(J.a() * I.b(), J.a());
  gens.emplace_back(I.b() * J.b() + N, I.b() + J.b());

  Basis2 h = lattice_hnf(std::move(gens));
  if (h.alpha % h.g != 0 || h.beta % h.g != 0)
    throw InvariantError("ideal_mul: product lattice is not an ideal");
  return IdealA(I.s() * J.s() * h.g, h.alpha / h.g, h.beta / h.g, N);
}

mpz_class ideal_norm(const IdealA& I) { return I.norm(); }

bool is_principal_A(const IdealA& I, std::size_t max_steps) {
  QuadIrr alpha(I.b(), I.a(), I.N());
  QuadIrr root(0, 1, I.N());
  return equivalent(alpha, root, max_steps);
}

bool extension_is_2O(int sign, const mpz_class& N) {
  if (sign != 1 && sign != -1) throw DomainError("extension_is_2O: sign must be +-1");
  if (N % 8 != 5) throw DomainError("extension_is_2O: N must be 5 mod 8");
  if (!is_squarefree(N)) throw DomainError("extension_is_2O: N must be square-free");

  // coordinates over {1, w}, w = (1+sqrt(N))/2, w^2 = c + w, c = (N-1)/4;
  // (x + y*w)*w = y*c + (x+y)*w
  mpz_class c = (N - 1) / 4;
  mpz_class gx = (sign > 0) ? 0 : -1;
  mpz_class gy = 1;  // (sqrt(N)+1)/2 = w, (sqrt(N)-1)/2 = w - 1

  std::vector<std::pair<mpz_class, mpz_class>> gens;
  gens.emplace_back(2, 0);
  gens.emplace_back(0, 2);
  gens.emplace_back(gx, gy);
  gens.emplace_back(gy * c, gx + gy);

  Basis2 h = lattice_hnf(std::move(gens));
  return h.alpha == 1 && h.g == 1;
}

}  // namespace quadunit
