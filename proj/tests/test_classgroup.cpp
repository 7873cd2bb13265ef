#include <doctest.h>

#include <algorithm>
#include <set>

#include "quadunit/classgroup.hpp"
#include "quadunit/errors.hpp"

using namespace quadunit;

TEST_CASE("enumerate_reduced_forms pins small discriminants") {
  auto f20 = enumerate_reduced_forms(20);
  // the imprimitive (+-2, 2, -+2) must be excluded
  REQUIRE(f20.size() == 2);
  CHECK(f20[0] == Form{-1, 4, 1});
  CHECK(f20[1] == Form{1, 4, -1});

  auto f5 = enumerate_reduced_forms(5);
  REQUIRE(f5.size() == 2);
  CHECK(f5[0] == Form{-1, 1, 1});
  CHECK(f5[1] == Form{1, 1, -1});

  auto f404 = enumerate_reduced_forms(404);
  CHECK(f404.size() == 14);
}

TEST_CASE("every enumerated form is reduced and primitive; rho is a bijection") {
  for (long long D : {5LL, 20LL, 21LL, 29LL, 84LL, 101LL, 116LL, 125LL, 308LL, 404LL}) {
    auto forms = enumerate_reduced_forms(D);
    REQUIRE(!forms.empty());
    std::set<Form> all(forms.begin(), forms.end());
    std::set<Form> images;
    for (const Form& f : forms) {
      CHECK(is_reduced(f));
      CHECK(f.disc() == D);
      Form g = rho(f);
      CHECK(is_reduced(g));
      CHECK(g.disc() == D);
      CHECK(all.count(g) == 1);
      images.insert(g);
    }
    CHECK(images.size() == forms.size());
  }
}

TEST_CASE("rho examples") {
  CHECK(rho(Form{1, 4, -1}) == Form{-1, 4, 1});   // D = 20
  CHECK(rho(Form{1, 1, -1}) == Form{-1, 1, 1});   // D = 5
  CHECK_THROWS_AS(rho(Form{5, 1, -1}), DomainError);  // not reduced (D = 21)
}

TEST_CASE("narrow_class_number examples") {
  CHECK(narrow_class_number(5) == 1);
  CHECK(narrow_class_number(20) == 1);
  CHECK(narrow_class_number(29) == 1);
  CHECK(narrow_class_number(116) == 1);
  CHECK(narrow_class_number(101) == 1);
  CHECK(narrow_class_number(404) == 3);
  CHECK(narrow_class_number(21) == 2);
  CHECK(narrow_class_number(84) == 2);
  CHECK(narrow_class_number(77) == 2);
  CHECK(narrow_class_number(308) == 2);
  CHECK(narrow_class_number(13) == 1);
  CHECK(narrow_class_number(52) == 1);
}

TEST_CASE("kernel_check examples") {
  ClassData c101 = kernel_check(101);
  CHECK(c101.h_plus_O == 1);
  CHECK(c101.h_plus_A == 3);
  CHECK(c101.kernel_order == 3);
  CHECK(c101.predicted_e == 1);

  ClassData c29 = kernel_check(29);
  CHECK(c29.kernel_order == 1);
  CHECK(c29.predicted_e == 3);

  ClassData c21 = kernel_check(21);
  CHECK(c21.h_plus_O == 2);
  CHECK(c21.h_plus_A == 2);
  CHECK(c21.kernel_order == 1);
  CHECK(c21.predicted_e == 3);
}

TEST_CASE("kernel_check rejects bad N") {
  CHECK_THROWS_AS(kernel_check(17), DomainError);   // 1 mod 8
  CHECK_THROWS_AS(kernel_check(45), DomainError);   // not square-free
  CHECK_THROWS_AS(kernel_check(24), DomainError);
}

TEST_CASE("discriminant validation") {
  CHECK_THROWS_AS(enumerate_reduced_forms(-4), DomainError);
  CHECK_THROWS_AS(enumerate_reduced_forms(7), DomainError);    // 3 mod 4
  CHECK_THROWS_AS(enumerate_reduced_forms(16), DomainError);   // square
  CHECK_THROWS_AS(narrow_class_number(100), DomainError);      // square
}
