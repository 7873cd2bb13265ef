#include "quadunit/sweeps.hpp"

#include "quadunit/errors.hpp"
#include "quadunit/exactint.hpp"
#include "quadunit/ideals.hpp"
#include "quadunit/units.hpp"

namespace quadunit {

std::vector<long long> squarefree_5mod8_up_to(long long n_max) {
  std::vector<long long> out;
  for (long long n = 5; n <= n_max; n += 8) {
    if (is_squarefree(mpz_class(static_cast<long>(n)))) out.push_back(n);
  }
  return out;
}

AgreementRecord agreement_record(long long N, std::size_t max_steps) {
  mpz_class Nz(static_cast<long>(N));
  UnitReport rep = unit_index(Nz, max_steps);

  AgreementRecord rec;
  rec.N = N;
  rec.e = rep.e;
  rec.odd_pell = rep.odd_pell.has_value();
  if (rep.odd_pell) {
    const auto& [x, y] = *rep.odd_pell;
    mpz_class lhs = x * x - Nz * y * y;
    rec.norm4_ok = (x % 2 != 0) && (y % 2 != 0) && (lhs == 4 || lhs == -4);
  }

  IdealA i_plus(1, 4, 1, Nz);
  IdealA i_minus(1, 4, -1, Nz);
  rec.principal_plus = is_principal_A(i_plus, max_steps);
  rec.principal_minus = is_principal_A(i_minus, max_steps);

  QuadIrr sqrtN(0, 1, Nz);
  rec.equiv_plus = equivalent(QuadIrr(1, 4, Nz), sqrtN, max_steps);
  rec.equiv_minus = equivalent(QuadIrr(-1, 4, Nz), sqrtN, max_steps);
  return rec;
}

KernelRecord kernel_record(long long N, std::size_t max_steps) {
  ClassData cd = kernel_check(N, max_steps);

  KernelRecord rec;
  rec.N = N;
  rec.h_plus_N = cd.h_plus_O;
  rec.h_plus_4N = cd.h_plus_A;
  rec.kernel_order = cd.kernel_order;
  rec.predicted_e = cd.predicted_e;
  rec.observed_e = unit_index(mpz_class(static_cast<long>(N)), max_steps).e;

  mpz_class Nz(static_cast<long>(N));
  IdealA i_plus(1, 4, 1, Nz);
  IdealA i_minus(1, 4, -1, Nz);
  IdealA two_minus(2, 4, -1, Nz);
  IdealA two_plus(2, 4, 1, Nz);
  rec.ideal_square_ok =
      ideal_mul(i_plus, i_plus) == two_minus && ideal_mul(i_minus, i_minus) == two_plus;
  rec.extension_ok = extension_is_2O(1, Nz) && extension_is_2O(-1, Nz);
  return rec;
}

namespace {

template <typename R, typename F>
std::vector<R> sweep(long long n_max, Exec exec, F&& per_n) {
  std::vector<long long> ns = squarefree_5mod8_up_to(n_max);
  return indexed_map<R>(ns.size(), exec, [&](std::size_t i) { return per_n(ns[i]); });
}

}  // namespace

std::vector<AgreementRecord> agreement_sweep(long long n_max, Exec exec, std::size_t max_steps) {
  return sweep<AgreementRecord>(n_max, exec,
                            [max_steps](long long n) { return agreement_record(n, max_steps); });
}

std::vector<KernelRecord> kernel_sweep(long long n_max, Exec exec, std::size_t max_steps) {
  return sweep<KernelRecord>(n_max, exec,
                              [max_steps](long long n) { return kernel_record(n, max_steps); });
}

}  // namespace quadunit
