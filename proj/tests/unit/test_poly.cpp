#include <doctest.h>

#include <stdexcept>

#include "knotcert/poly.hpp"

using namespace knotcert;

TEST_SUITE("poly") {
  TEST_CASE("ring operations") {
    auto p = LaurentPoly::from_coeffs({1, 1});       // 1 + t
    auto q = LaurentPoly::from_coeffs({1, -1}, -1);  // t^-1 - 1
    CHECK((p * q).canonical() == "{-1:1, 1:-1}");
    CHECK((p - p).is_zero());
    CHECK(p.pow(3) == LaurentPoly::from_coeffs({1, 3, 3, 1}));
    CHECK(p.inverted() == LaurentPoly::from_coeffs({1, 1}, -1));
    CHECK(p.eval_at_one() == 2);
  }

  TEST_CASE("exact division") {
    auto num = LaurentPoly::from_coeffs({1, 0, 0, 1});  // 1 + t^3
    auto den = LaurentPoly::from_coeffs({1, 1});
    auto q = LaurentPoly::exact_div(num, den);
    REQUIRE(q);
    CHECK(*q == LaurentPoly::from_coeffs({1, -1, 1}));
    CHECK_FALSE(LaurentPoly::exact_div(LaurentPoly::from_coeffs({1, 0, 1}), den));
  }

  TEST_CASE("half-integral exponents evaluate at -1 through i") {
    // t^{1/2} + t^{-1/2} at t^{1/2} = i is 0.
    LaurentPoly p(1, 2);
    p.add_term(1, 0, 1);
    p.add_term(-1, 0, 1);
    CHECK(p.abs_eval_at_minus_one() == 0);
    CHECK(LaurentPoly::from_coeffs({2, -3, 2}, -1).abs_eval_at_minus_one() == 7);
  }

  TEST_CASE("alexander normalization") {
    auto p = LaurentPoly::from_coeffs({-2, 3, -2}, 4);
    CHECK(normalize_alexander(p) == LaurentPoly::from_coeffs({2, -3, 2}, -1));
    CHECK(equal_up_to_unit(p, LaurentPoly::from_coeffs({2, -3, 2})));
    CHECK_THROWS(normalize_alexander(LaurentPoly::from_coeffs({1, 2})));
  }

  TEST_CASE("printing") {
    CHECK(LaurentPoly::from_coeffs({2, -3, 2}, -1).str() == "2t^-1 - 3 + 2t");
    CHECK(LaurentPoly::monomial(1, 2, -1, 2).str({"a", "z"}) == "a^2z^-1");
  }
}
