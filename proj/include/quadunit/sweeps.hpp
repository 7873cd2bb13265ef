#pragma once

#include <cstddef>
#include <vector>

#include "quadunit/cfrac.hpp"
#include "quadunit/classgroup.hpp"
#include "quadunit/parallel.hpp"

namespace quadunit {

// One N's worth of evidence that the four unit-index criteria agree:
// odd solvability of x^2 - N y^2 = +-4, principality of [4, sqrt(N)+-1],
// equivalence of (sqrt(N)+-1)/4 with sqrt(N), and e itself.
struct AgreementRecord {
  long long N = 0;
  int e = 0;
  bool odd_pell = false;         // e == 3 route: minimal unit is half-integral
  bool norm4_ok = false;         // the odd (x, y) really solves x^2 - N y^2 = +-4
  bool principal_plus = false;   // [4, sqrt(N)+1] principal in A
  bool principal_minus = false;  // [4, sqrt(N)-1] principal in A
  bool equiv_plus = false;       // (sqrt(N)+1)/4 ~ sqrt(N)
  bool equiv_minus = false;      // (sqrt(N)-1)/4 ~ sqrt(N)

  bool consistent() const {
    bool expect = (e == 3);
    return odd_pell == expect && norm4_ok == expect && principal_plus == expect &&
           principal_minus == expect && equiv_plus == expect && equiv_minus == expect;
  }
};

// Class-number side for one N, plus the ideal identities that feed the
// kernel argument: [4, sqrt(N)+1]^2 = 2[4, sqrt(N)-1] (and conjugate) and
// both extensions to the maximal order being 2*O.
struct KernelRecord {
  long long N = 0;
  long long h_plus_N = 0;
  long long h_plus_4N = 0;
  int kernel_order = 0;
  int predicted_e = 0;
  int observed_e = 0;
  bool ideal_square_ok = false;
  bool extension_ok = false;

  bool consistent() const {
    return kernel_order == (observed_e == 1 ? 3 : 1) && predicted_e == observed_e &&
           ideal_square_ok && extension_ok;
  }
};

std::vector<long long> squarefree_5mod8_up_to(long long n_max);

AgreementRecord agreement_record(long long N, std::size_t max_steps = kDefaultMaxSteps);
KernelRecord kernel_record(long long N, std::size_t max_steps = kDefaultMaxSteps);

// Records for every square-free N = 5 mod 8 up to n_max.  Serial and
// parallel execution produce identical vectors.
std::vector<AgreementRecord> agreement_sweep(long long n_max, Exec exec = Exec::Parallel,
                                     std::size_t max_steps = kDefaultMaxSteps);
std::vector<KernelRecord> kernel_sweep(long long n_max, Exec exec = Exec::Parallel,
                                         std::size_t max_steps = kDefaultMaxSteps);

}  // namespace quadunit
