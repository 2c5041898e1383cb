#include <doctest.h>

#include <stdexcept>

#include <random>

#include "knotcert/braid3.hpp"
#include "knotcert/sl2z.hpp"

using namespace knotcert;

TEST_SUITE("sl2z") {
  TEST_CASE("arithmetic") {
    Mat2 A{2, 1, 1, 1};
    CHECK(det(A) == 1);
    CHECK(trace(A) == 3);
    CHECK(A * inv(A) == Mat2::identity());
    CHECK(neg(A) == Mat2{-2, -1, -1, -1});
    CHECK(lower(3) == Mat2{1, 0, 3, 1});
    CHECK(upper(-2) == Mat2{1, -2, 0, 1});
    CHECK(lower(2) * lower(-5) == lower(-3));
  }

  TEST_CASE("overflow is reported") {
    Mat2 big{3000000000LL, 0, 0, 1};
    CHECK_THROWS_AS(big * big * big, std::overflow_error);
  }

  TEST_CASE("matrix_to_word rejects det != 1") {
    CHECK_THROWS_AS(matrix_to_word(Mat2{2, 0, 0, 1}), std::invalid_argument);
  }

  TEST_CASE("matrix_to_word on known matrices") {
    CHECK(matrix_to_word(Mat2::identity()).empty());
    CHECK(rho(matrix_to_word(Mat2{-1, 0, 0, -1})) == Mat2{-1, 0, 0, -1});
    CHECK(rho(matrix_to_word(Mat2{0, 1, -1, 0})) == Mat2{0, 1, -1, 0});
    CHECK(rho(matrix_to_word(Mat2{7, 11, 5, 8})) == Mat2{7, 11, 5, 8});
  }

  TEST_CASE("round trip on random matrices") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<long long> k(-6, 6);
    for (int i = 0; i < 300; ++i) {
      Mat2 M = Mat2::identity();
      for (int j = 0; j < 6; ++j) M = M * (j % 2 ? lower(k(rng)) : upper(k(rng)));
      if (i % 3 == 0) M = neg(M);
      BraidWord w = matrix_to_word(M);
      CHECK(rho(w) == M);
    }
  }
}
