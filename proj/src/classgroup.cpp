#include "quadunit/classgroup.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "quadunit/errors.hpp"
#include "quadunit/exactint.hpp"
#include "quadunit/units.hpp"

namespace quadunit {

namespace {

constexpr long long kMaxDisc = 1LL << 60;  // keeps every intermediate in range

long long ll_isqrt(long long t) {
  auto r = static_cast<long long>(std::sqrt(static_cast<double>(t)));
  while (r > 0 && r * r > t) --r;
  while ((r + 1) * (r + 1) <= t) ++r;
  return r;
}

void validate_disc(long long D) {
  if (D <= 0) throw DomainError("forms: discriminant must be positive");
  if (D >= kMaxDisc) throw DomainError("forms: discriminant too large");
  long long m = D % 4;
  if (m != 0 && m != 1) throw DomainError("forms: discriminant must be 0 or 1 mod 4");
  long long s = ll_isqrt(D);
  if (s * s == D) throw DomainError("forms: discriminant must not be a square");
}

}  // namespace

std::string Form::str() const {
  return "(" + std::to_string(A) + "," + std::to_string(B) + "," + std::to_string(C) + ")";
}

bool is_reduced(const Form& f) {
  constexpr long long kCoefCap = 1LL << 30;  // keeps disc() free of overflow
  if (std::llabs(f.A) >= kCoefCap || std::llabs(f.B) >= kCoefCap || std::llabs(f.C) >= kCoefCap)
    throw DomainError("forms: coefficients too large");
  long long D = f.disc();
  validate_disc(D);
  long long s = ll_isqrt(D);
  long long absA = std::llabs(f.A);
  if (f.B < 1 || f.B > s) return false;
  if (2 * absA + f.B < s + 1) return false;
  if (2 * absA - f.B > s) return false;
  return true;
}

std::vector<Form> enumerate_reduced_forms(long long D) {
  validate_disc(D);
  long long s = ll_isqrt(D);
  std::vector<Form> out;

  for (long long B = (D % 2 == 0) ? 2 : 1; B <= s; B += 2) {
    long long M = (D - B * B) / 4;  // B = D mod 2 makes this exact
    for (long long i = 1; i * i <= M; ++i) {
      if (M % i != 0) continue;
      long long pair[2] = {i, M / i};
      int n_div = (pair[0] == pair[1]) ? 1 : 2;
      for (int t = 0; t < n_div; ++t) {
        long long absA = pair[t];
        if (2 * absA + B < s + 1 || 2 * absA - B > s) continue;
        long long absC = M / absA;
        if (std::gcd(std::gcd(absA, B), absC) != 1) continue;
        out.push_back(Form{absA, B, -absC});
        out.push_back(Form{-absA, B, absC});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Form rho(const Form& f) {
  if (!is_reduced(f)) throw DomainError("rho: form is not reduced");
  long long D = f.disc();
  long long s = ll_isqrt(D);
  long long m = 2 * std::llabs(f.C);
  long long Bp = s - (s + f.B) % m;
  long long num = Bp * Bp - D;
  if (num % (4 * f.C) != 0) throw InvariantError("rho: non-integral successor");
  return Form{f.C, Bp, num / (4 * f.C)};
}

long long narrow_class_number(long long D) {
  std::vector<Form> forms = enumerate_reduced_forms(D);
  if (forms.empty()) throw InvariantError("narrow_class_number: no reduced forms");

  auto index_of = [&forms](const Form& f) -> std::size_t {
    auto it = std::lower_bound(forms.begin(), forms.end(), f);
    if (it == forms.end() || *it != f)
      throw InvariantError("narrow_class_number: rho left the reduced set");
    return static_cast<std::size_t>(it - forms.begin());
  };

  std::vector<char> visited(forms.size(), 0);
  long long cycles = 0;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (visited[i]) continue;
    ++cycles;
    std::size_t j = i;
    do {
      visited[j] = 1;
      j = index_of(rho(forms[j]));
    } while (j != i);
  }
  return cycles;
}

ClassData kernel_check(long long N, std::size_t max_steps_units) {
  if (N < 5 || N % 8 != 5) throw DomainError("kernel_check: N must be 5 mod 8");
  if (N >= kMaxDisc / 4) throw DomainError("kernel_check: N too large");
  if (!is_squarefree(mpz_class(static_cast<long>(N)))) throw DomainError("kernel_check: N must be square-free");

  ClassData cd;
  cd.N = N;
  cd.h_plus_O = narrow_class_number(N);
  cd.h_plus_A = narrow_class_number(4 * N);
  if (cd.h_plus_A % cd.h_plus_O != 0)
    throw InvariantError("kernel_check: h+(4N) not a multiple of h+(N)");
  long long k = cd.h_plus_A / cd.h_plus_O;
  if (k != 1 && k != 3) throw InvariantError("kernel_check: kernel order not in {1,3}");
  cd.kernel_order = static_cast<int>(k);
  cd.predicted_e = (k == 3) ? 1 : 3;

  UnitReport rep = unit_index(mpz_class(static_cast<long>(N)), max_steps_units);
  if (rep.e != cd.predicted_e)
    throw InvariantError("kernel_check: class-number prediction disagrees with unit index");
  return cd;
}

}  // namespace quadunit
