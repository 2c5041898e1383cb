#include <doctest.h>

#include <stdexcept>

#include <numeric>

#include "knotcert/lens.hpp"

using namespace knotcert;

TEST_SUITE("lens") {
  TEST_CASE("normal form") {
    CHECK(ClosedManifold::lens(5, 4).str() == "L(5,4)");
    CHECK(ClosedManifold::lens(-5, 1).str() == "L(5,4)");
    CHECK(ClosedManifold::lens(5, 9).str() == "L(5,4)");
    CHECK(ClosedManifold::lens(1, 7).kind() == ClosedManifold::Kind::S3);
    CHECK(ClosedManifold::lens(0, 1).kind() == ClosedManifold::Kind::S1xS2);
    CHECK_THROWS(ClosedManifold::lens(6, 4));
  }

  TEST_CASE("slopes") {
    CHECK(Slope(4, -6).str() == "-2/3");
    CHECK(Slope(11, 2).str() == "11/2");
    CHECK(Slope(-3, 0) == Slope(1, 0));
    CHECK_THROWS(Slope(0, 0));
  }

  TEST_CASE("surgery on the unknot") {
    CHECK(surgery_on_unknot(Slope(1, 0)) == ClosedManifold::s3());
    CHECK(surgery_on_unknot(Slope(0, 1)) == ClosedManifold::s1xs2());
    CHECK(surgery_on_unknot(Slope(11, 8)) == ClosedManifold::lens(11, 8));
    CHECK(orientation_reverse(ClosedManifold::lens(11, 8)) == ClosedManifold::lens(11, 3));
  }

  TEST_CASE("mod inverse against a brute-force oracle") {
    for (long long p = 2; p < 60; ++p)
      for (long long q = -p; q < 2 * p; ++q) {
        if (std::gcd(p, q) != 1) continue;
        auto m = mod_inverse(q, p);
        long long brute = 0;
        while (((q % p + p) * brute) % p != 1 % p) ++brute;
        CHECK(m.qbar == brute);
        CHECK(q * m.qbar == m.r * p + 1);
      }
    CHECK_THROWS(mod_inverse(4, 6));
  }

  TEST_CASE("classification") {
    // 2 * 4 = 8 = 1 mod 7.
    CHECK(homeomorphic(ClosedManifold::lens(7, 2), ClosedManifold::lens(7, 4), true));
    CHECK_FALSE(homeomorphic(ClosedManifold::lens(5, 1), ClosedManifold::lens(5, 2), false));
    CHECK_FALSE(homeomorphic(ClosedManifold::lens(5, 1), ClosedManifold::lens(5, 4), true));
    CHECK(homeomorphic(ClosedManifold::lens(5, 1), ClosedManifold::lens(5, 4), false));
    auto a = ClosedManifold::conn_sum({ClosedManifold::lens(2, 1), ClosedManifold::lens(3, 1)});
    auto b = ClosedManifold::conn_sum({ClosedManifold::lens(3, 1), ClosedManifold::lens(2, 1)});
    CHECK(homeomorphic(a, b, true));
    CHECK(h1_order(a) == 6);
    CHECK(h1_order(ClosedManifold::s1xs2()) == 0);
    CHECK(h1_order(ClosedManifold::lens(39, 7)) == 39);
  }

  TEST_CASE("braid index criterion") {
    // s = 1 is a 2-bridge torus link closure.
    CHECK(murasugi_braid_index(5, 1) == 2);
    // (r, s) = (2cd+3c+3d+4, 2c+3) at c = d = 1.
    CHECK(murasugi_braid_index(12, 5) == 3);
    // (2cd+c+d+1, 2c+1) at c = 1, d = 2.
    CHECK(murasugi_braid_index(8, 3) == 3);
    CHECK(murasugi_braid_index(7, 5) == 4);
    CHECK(murasugi_divisibility(12, 5));
    CHECK_FALSE(murasugi_divisibility(19, 7));
    CHECK_FALSE(murasugi_divisibility_closed(19, 7));
    CHECK_THROWS(murasugi_braid_index(7, 4));
  }

  TEST_CASE("divisibility is implied by braid index 3") {
    for (long long r = 3; r < 80; ++r)
      for (long long s = 1; s < r; s += 2) {
        if (std::gcd(r, s) != 1) continue;
        if (murasugi_braid_index(r, s) <= 3) CHECK(murasugi_divisibility(r, s));
        if (murasugi_divisibility(r, s)) CHECK(murasugi_divisibility_closed(r, s));
      }
  }
}
