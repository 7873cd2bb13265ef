#include "quadunit/families.hpp"

#include <sstream>

#include "quadunit/errors.hpp"
#include "quadunit/exactint.hpp"
#include "quadunit/units.hpp"

namespace quadunit {

namespace {

mpz_class mz(long long v) { return mpz_class(static_cast<long>(v)); }

}  // namespace

const char* family_kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::A2P4:
      return "a2+4";
    case FamilyKind::A2M4:
      return "a2-4";
    case FamilyKind::FourA2P1:
      return "4a2+1";
  }
  throw InvariantError("family_kind_name: bad kind");
}

std::optional<FamilyKind> family_kind_from_name(const std::string& name) {
  if (name == "a2+4") return FamilyKind::A2P4;
  if (name == "a2-4") return FamilyKind::A2M4;
  if (name == "4a2+1") return FamilyKind::FourA2P1;
  return std::nullopt;
}

long long family_min_a(FamilyKind kind) { return kind == FamilyKind::A2P4 ? 3 : 5; }

mpz_class family_N(FamilyKind kind, long long a) {
  mpz_class az = mz(a);
  switch (kind) {
    case FamilyKind::A2P4:
      return az * az + 4;
    case FamilyKind::A2M4:
      return az * az - 4;
    case FamilyKind::FourA2P1:
      return 4 * az * az + 1;
  }
  throw InvariantError("family_N: bad kind");
}

namespace {

void check_parameter(FamilyKind kind, long long a) {
  if (a % 2 == 0) throw DomainError("family: a must be odd");
  if (a < family_min_a(kind)) throw DomainError("family: a below family bound");
}

std::string row_label(const FamilyRow& row) {
  std::ostringstream os;
  os << "kind=" << family_kind_name(row.kind) << " a=" << row.a << " N=" << row.N.get_str();
  return os.str();
}

}  // namespace

std::vector<FamilyRow> family_members(FamilyKind kind, long long a_min, long long a_max,
                                      bool squarefree_only) {
  long long start = (a_min % 2 == 0) ? a_min + 1 : a_min;
  if (start < family_min_a(kind)) throw DomainError("family: a below family bound");

  std::vector<FamilyRow> rows;
  for (long long a = start; a <= a_max; a += 2) {
    FamilyRow row;
    row.kind = kind;
    row.a = a;
    row.N = family_N(kind, a);
    row.squarefree = is_squarefree(row.N);
    row.predicted_e = (kind == FamilyKind::FourA2P1) ? 1 : 3;
    if (squarefree_only && !row.squarefree) continue;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::pair<std::vector<mpz_class>, std::vector<mpz_class>> expected_cf_pattern(FamilyKind kind,
                                                                              long long a) {
  check_parameter(kind, a);
  std::vector<mpz_class> pre, per;
  switch (kind) {
    case FamilyKind::A2P4:
      pre = {mz(a)};
      per = {mz((a - 1) / 2), 1, 1, mz((a - 1) / 2), mz(2 * a)};
      break;
    case FamilyKind::A2M4:
      pre = {mz(a - 1)};
      per = {1, mz((a - 3) / 2), 2, mz((a - 3) / 2), 1, mz(2 * a - 2)};
      break;
    case FamilyKind::FourA2P1:
      pre = {mz(2 * a)};
      per = {mz(4 * a)};
      break;
  }
  return {std::move(pre), std::move(per)};
}

QuadIrr a2m4_companion(long long a) {
  check_parameter(FamilyKind::A2M4, a);
  mpz_class N = family_N(FamilyKind::A2M4, a);
  return QuadIrr(mz(a - 2), mz(a - 2), N);
}

std::vector<mpz_class> a2m4_companion_period(long long a) {
  check_parameter(FamilyKind::A2M4, a);
  return {2, mz((a - 3) / 2), 1, mz(2 * a - 2), 1, mz((a - 3) / 2)};
}

FamilyRow verify_member(FamilyRow row, std::size_t max_steps) {
  check_parameter(row.kind, row.a);
  if (row.N != family_N(row.kind, row.a))
    throw DomainError("verify_member: N does not match kind and a");

  auto [want_pre, want_per] = expected_cf_pattern(row.kind, row.a);
  CFExpansion cf = sqrt_cf(row.N, max_steps);
  row.cf_pattern_ok = (cf.preperiod == want_pre && cf.period == want_per);
  if (!*row.cf_pattern_ok)
    throw VerificationError("verify_member: CF pattern mismatch at " + row_label(row));

  QuadIrr sqrtN(0, 1, row.N);
  bool eq_plus = equivalent(QuadIrr(1, 4, row.N), sqrtN, max_steps);
  bool eq_minus = equivalent(QuadIrr(-1, 4, row.N), sqrtN, max_steps);
  bool expected_eq = (row.kind != FamilyKind::FourA2P1);
  row.equivalence_ok = (eq_plus == expected_eq && eq_minus == expected_eq);
  if (!*row.equivalence_ok)
    throw VerificationError("verify_member: equivalence mismatch at " + row_label(row));

  if (row.squarefree) {
    UnitReport rep = unit_index(row.N, max_steps);
    row.observed_e = rep.e;
    if (rep.e != row.predicted_e)
      throw VerificationError("verify_member: e mismatch at " + row_label(row));
  }
  return row;
}

std::vector<FamilyRow> survey(FamilyKind kind, long long a_min, long long a_max,
                              std::size_t max_steps, Exec exec) {
  std::vector<FamilyRow> rows = family_members(kind, a_min, a_max, false);
  return indexed_map<FamilyRow>(rows.size(), exec, [&](std::size_t i) {
    return verify_member(rows[i], max_steps);
  });
}

}  // namespace quadunit
