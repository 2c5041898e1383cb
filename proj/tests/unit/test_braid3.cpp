#include <doctest.h>

#include <stdexcept>

#include <random>

#include "knotcert/braid3.hpp"

using namespace knotcert;

namespace {

BraidWord random_word(std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), pick(0, 3);
  const Letter a[] = {Letter::x, Letter::X, Letter::y, Letter::Y};
  std::vector<Letter> raw;
  for (int i = 0, n = len(rng); i < n; ++i) raw.push_back(a[pick(rng)]);
  return reduce(raw);
}

// Oracle: the 3x3 unreduced Burau matrices at t = -1, multiplied by hand.
using M3 = std::array<std::array<long long, 3>, 3>;
M3 mul3(const M3& A, const M3& B) {
  M3 C{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) C[i][j] += A[i][k] * B[k][j];
  return C;
}
M3 burau3(const BraidWord& w) {
  // sigma_i acts on rows i, i+1 by [[1-t, t],[1, 0]] at t = -1.
  M3 acc{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  for (Letter l : w.letters()) {
    int i = is_x(l) ? 0 : 1;
    M3 g{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    if (sign(l) > 0) {
      g[i][i] = 2, g[i][i + 1] = -1, g[i + 1][i] = 1, g[i + 1][i + 1] = 0;
    } else {
      g[i][i] = 0, g[i][i + 1] = 1, g[i + 1][i] = -1, g[i + 1][i + 1] = 2;
    }
    acc = mul3(acc, g);
  }
  return acc;
}

}  // namespace

TEST_SUITE("braid3") {
  TEST_CASE("parse and print") {
    CHECK(BraidWord::parse("xXyY").empty());
    CHECK(BraidWord::parse("1").empty());
    CHECK(BraidWord::parse("xxYxy").str() == "xxYxy");
    CHECK(BraidWord::parse("xyYx").str() == "xx");
    CHECK_THROWS(BraidWord::parse("xz"));
  }

  TEST_CASE("generator images") {
    CHECK(rho(Letter::x) == Mat2{1, 1, 0, 1});
    CHECK(rho(Letter::y) == Mat2{1, 0, -1, 1});
  }

  TEST_CASE("braid relation and the full twist") {
    CHECK(rho(BraidWord::parse("xyx")) == rho(BraidWord::parse("yxy")));
    CHECK(same_element(BraidWord::parse("xyx"), BraidWord::parse("yxy")));
    CHECK(rho(delta_power(2)) == Mat2{-1, 0, 0, -1});
    CHECK(rho(delta_power(4)) == Mat2::identity());
    CHECK(exponent_sum(delta_power(4)) == 12);
    for (long long d = -3; d <= 3; ++d) CHECK(kernel_power(delta_power(4 * d)) == d);
    CHECK_FALSE(kernel_power(delta_power(2)).has_value());
    CHECK_FALSE(kernel_power(BraidWord::parse("x")).has_value());
  }

  TEST_CASE("delta squared is central") {
    auto d2 = delta_power(2);
    for (const char* w : {"x", "y", "xxYxy", "XyXXy"}) {
      auto b = BraidWord::parse(w);
      CHECK(same_element(d2 * b, b * d2));
    }
  }

  TEST_CASE("rho is a homomorphism matching the 3x3 Burau oracle") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
      auto u = random_word(rng, 12), v = random_word(rng, 12);
      CHECK(rho(u * v) == rho(u) * rho(v));
      CHECK(rho(inverse(u)) == inv(rho(u)));
      // tr(reduced) = tr(unreduced) - 1 at t = -1.
      M3 B = burau3(u);
      CHECK(trace(rho(u)) == B[0][0] + B[1][1] + B[2][2] - 1);
    }
  }

  TEST_CASE("reverse, mirror, y-conjugation") {
    auto w = BraidWord::parse("xxYxy");
    CHECK(reverse(w).str() == "yxYxx");
    CHECK(mirror(w).str() == "XXyXY");
    CHECK(exponent_sum(mirror(w)) == -exponent_sum(w));
    CHECK(conjugate_by_y(w, 1).str() == "yxxYx");
    CHECK(trace(rho(conjugate_by_y(w, 3))) == trace(rho(w)));
    CHECK(trace(rho(reverse(w))) == trace(rho(w)));
  }

  TEST_CASE("power") {
    CHECK(power(Letter::x, 3).str() == "xxx");
    CHECK(power(Letter::x, -2).str() == "XX");
    CHECK(power(Letter::y, 0).empty());
  }
}
