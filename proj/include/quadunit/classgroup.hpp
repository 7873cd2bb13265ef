#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace quadunit {

// Integral binary quadratic form A x^2 + B x y + C y^2 of positive
// non-square discriminant B^2 - 4AC.
struct Form {
  long long A = 0, B = 0, C = 0;

  long long disc() const { return B * B - 4 * A * C; }
  std::string str() const;

  friend bool operator==(const Form& f, const Form& g) {
    return f.A == g.A && f.B == g.B && f.C == g.C;
  }
  friend bool operator!=(const Form& f, const Form& g) { return !(f == g); }
  friend bool operator<(const Form& f, const Form& g) {
    if (f.A != g.A) return f.A < g.A;
    if (f.B != g.B) return f.B < g.B;
    return f.C < g.C;
  }
};

struct ClassData {
  long long N = 0;
  long long h_plus_O = 0;   // narrow class number of disc N
  long long h_plus_A = 0;   // narrow class number of disc 4N
  int kernel_order = 0;     // h_plus_A / h_plus_O, in {1, 3}
  int predicted_e = 0;      // 1 if kernel_order = 3, else 3
};

// Reduced for positive non-square D = disc(f): with s = isqrt(D),
// 1 <= B <= s and 2|A| + B >= s + 1 and 2|A| - B <= s (integers only;
// equivalent to |sqrt(D) - 2|A|| < B < sqrt(D)).
bool is_reduced(const Form& f);

// All primitive reduced forms of discriminant D, sorted.
std::vector<Form> enumerate_reduced_forms(long long D);

// Reduction-step neighbor (C, B', *) with B' = s - ((s + B) mod 2|C|);
// a bijection on the reduced forms of D whose orbits are the classes.
Form rho(const Form& f);

// Number of rho-cycles = narrow class number h+(D).
long long narrow_class_number(long long D);

// h+(N) vs h+(4N) for square-free N = 5 mod 8; the kernel order of the
// extension map determines e, cross-checked against unit_index(N).
ClassData kernel_check(long long N, std::size_t max_steps_units = 1000000);

}  // namespace quadunit
