#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadunit/cfrac.hpp"
#include "quadunit/parallel.hpp"

namespace quadunit {

// The three parametric families, all with N = 5 mod 8 for odd a:
//   A2P4:      N = a^2 + 4, a odd > 1, e = 3
//   A2M4:      N = a^2 - 4, a odd > 3, e = 3
//   FourA2P1:  N = 4a^2 + 1, a odd > 3, e = 1
enum class FamilyKind { A2P4, A2M4, FourA2P1 };

const char* family_kind_name(FamilyKind kind);            // "a2+4", "a2-4", "4a2+1"
std::optional<FamilyKind> family_kind_from_name(const std::string& name);

long long family_min_a(FamilyKind kind);  // 3, 5, 5
mpz_class family_N(FamilyKind kind, long long a);

struct FamilyRow {
  FamilyKind kind = FamilyKind::A2P4;
  long long a = 0;
  mpz_class N;
  bool squarefree = false;
  int predicted_e = 0;
  std::optional<int> observed_e;
  std::optional<bool> cf_pattern_ok;
  std::optional<bool> equivalence_ok;
};

// Rows for each odd a in [a_min, a_max]; verification fields left empty.
// a_min below the family bound is an error; an empty range is not.
std::vector<FamilyRow> family_members(FamilyKind kind, long long a_min, long long a_max,
                                      bool squarefree_only);

// The symbolic expansion of sqrt(N) instantiated at a:
//   a^2+4  -> ([a], [(a-1)/2, 1, 1, (a-1)/2, 2a])
//   a^2-4  -> ([a-1], [1, (a-3)/2, 2, (a-3)/2, 1, 2a-2])
//   4a^2+1 -> ([2a], [4a])
std::pair<std::vector<mpz_class>, std::vector<mpz_class>> expected_cf_pattern(FamilyKind kind,
                                                                              long long a);

// The purely periodic companion ((a-2) + sqrt(a^2-4))/(a-2) of the a^2-4
// family and its period [2, (a-3)/2, 1, 2a-2, 1, (a-3)/2].
QuadIrr a2m4_companion(long long a);
std::vector<mpz_class> a2m4_companion_period(long long a);

// Checks the CF pattern and the (sqrt(N)+-1)/4 equivalences on any row, and
// the unit index on square-free rows; throws a verification failure naming
// the row on any mismatch.
FamilyRow verify_member(FamilyRow row, std::size_t max_steps = kDefaultMaxSteps);

// family_members + verify_member over the whole range, in input order.
std::vector<FamilyRow> survey(FamilyKind kind, long long a_min, long long a_max,
                              std::size_t max_steps = kDefaultMaxSteps,
                              Exec exec = Exec::Parallel);

}  // namespace quadunit
