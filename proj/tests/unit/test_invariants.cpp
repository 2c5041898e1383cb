#include <doctest.h>

#include <stdexcept>

#include <random>

#include "knotcert/catalog.hpp"
#include "knotcert/invariants.hpp"

using namespace knotcert;

namespace {

// Polynomial in t^{1/2} from integral t-exponents.
LaurentPoly tpoly(std::initializer_list<std::pair<int, long long>> terms) {
  LaurentPoly p(1, 2);
  for (auto [e, c] : terms) p.add_term(2 * e, 0, c);
  return p;
}

LaurentPoly to_half(const LaurentPoly& p) {
  LaurentPoly out(1, 2);
  for (const auto& [e, c] : p.terms()) out.add_term(2 * e[0], 0, c);
  return out;
}

// V(T(2,k)) = t^{(k-1)/2} (1 - t^3 - t^{k+1} + t^{k+2}) / (1 - t^2), k > 0 odd.
LaurentPoly jones_t2k_oracle(int k) {
  int m = std::abs(k);
  LaurentPoly num;
  num.add_term(0, 0, 1);
  num.add_term(3, 0, -1);
  num.add_term(m + 1, 0, -1);
  num.add_term(m + 2, 0, 1);
  auto q = LaurentPoly::exact_div(num, LaurentPoly::from_coeffs({1, 0, -1}));
  LaurentPoly v = q->shifted((m - 1) / 2);
  return to_half(k > 0 ? v : v.inverted());
}

// Delta(T(2,k)) = sum_{i<|k|} (-t)^i, normalized.
LaurentPoly alexander_t2k_oracle(int k) {
  std::vector<long long> c;
  for (int i = 0; i < std::abs(k); ++i) c.push_back(i % 2 ? -1 : 1);
  return normalize_alexander(LaurentPoly::from_coeffs(c));
}

BraidWord random_word(std::mt19937& rng, int lo, int hi) {
  std::uniform_int_distribution<int> len(lo, hi), pick(0, 3);
  const Letter a[] = {Letter::x, Letter::X, Letter::y, Letter::Y};
  std::vector<Letter> raw;
  for (int i = 0, n = len(rng); i < n; ++i) raw.push_back(a[pick(rng)]);
  return reduce(raw);
}

}  // namespace

TEST_SUITE("invariants") {
  TEST_CASE("Jones of T(2,k) against the torus knot formula") {
    for (int k : {-9, -7, -5, -3, 3, 5, 7, 9}) {
      CAPTURE(k);
      CHECK(jones(torus_2(k)) == jones_t2k_oracle(k));
    }
    CHECK(jones(torus_2(3)) == tpoly({{1, 1}, {3, 1}, {4, -1}}));
  }

  TEST_CASE("Alexander of T(2,k) by PD and by Burau") {
    for (int k : {-7, -5, -3, 3, 5, 7, 9}) {
      CAPTURE(k);
      CHECK(alexander_pd(torus_2(k)) == alexander_t2k_oracle(k));
    }
    // xxxxxY closes to T(2,5).
    auto w = BraidWord::parse("xxxxxY");
    CHECK(alexander_closure(w).poly == alexander_t2k_oracle(5));
    CHECK(jones(braid_closure(w)) == jones_t2k_oracle(5));
    CHECK(determinant(braid_closure(w)) == 5);
  }

  TEST_CASE("unknot diagrams") {
    CHECK(jones(parse_pd("O")) == LaurentPoly::constant(1, 1, 2));
    CHECK(jones(braid_closure(BraidWord::parse("xY"))) == LaurentPoly::constant(1, 1, 2));
    CHECK(alexander_pd(braid_closure(BraidWord::parse("xY"))) == LaurentPoly::constant(1));
    CHECK(kauffman_bracket(parse_pd("O,O")) ==
          LaurentPoly::monomial(-1, 2) - LaurentPoly::monomial(1, -2));
  }

  TEST_CASE("Jones skein relation on braid closures") {
    // t^-1 V(L+) - t V(L-) = (t^{1/2} - t^{-1/2}) V(L0)
    std::mt19937 rng(11);
    LaurentPoly z(1, 2);
    z.add_term(1, 0, 1);
    z.add_term(-1, 0, -1);
    for (int i = 0; i < 60; ++i) {
      auto u = random_word(rng, 0, 5), v = random_word(rng, 0, 5);
      Letter g = i % 2 ? Letter::x : Letter::y;
      auto lp = braid_closure(u * BraidWord({g}) * v);
      auto lm = braid_closure(u * BraidWord({inverse(g)}) * v);
      auto l0 = braid_closure(u * v);
      if ((u * BraidWord({g}) * v).size() != u.size() + v.size() + 1) continue;
      LaurentPoly lhs = jones(lp).shifted(-2) - jones(lm).shifted(2);
      CHECK(lhs == z * jones(l0));
    }
  }

  TEST_CASE("HOMFLY skein relation and unlinks") {
    LaurentPoly a = LaurentPoly::monomial(1, 1, 0, 2);
    LaurentPoly ainv = LaurentPoly::monomial(1, -1, 0, 2);
    LaurentPoly z = LaurentPoly::monomial(1, 0, 1, 2);
    LaurentPoly delta = LaurentPoly::monomial(1, 1, -1, 2) - LaurentPoly::monomial(1, -1, -1, 2);
    CHECK(homfly(braid_closure(BraidWord::parse("x"))) == delta);
    CHECK(homfly(braid_closure(BraidWord())) == delta * delta);
    std::mt19937 rng(5);
    for (int i = 0; i < 40; ++i) {
      auto u = random_word(rng, 0, 4), v = random_word(rng, 0, 4);
      BraidWord plus = u * BraidWord({Letter::y}) * v;
      if (plus.size() != u.size() + v.size() + 1) continue;
      auto P = homfly(braid_closure(plus));
      auto M = homfly(braid_closure(u * BraidWord({Letter::Y}) * v));
      auto O = homfly(braid_closure(u * v));
      CHECK(a * P - ainv * M == z * O);
    }
  }

  TEST_CASE("HOMFLY specializations") {
    for (int k : {-5, 3, 7}) {
      auto P = homfly(torus_2(k));
      CHECK(homfly_to_jones(P) == jones_t2k_oracle(k));
      CHECK(equal_up_to_unit(homfly_to_alexander(P), alexander_t2k_oracle(k)));
    }
    // q form: z = q - q^-1 leaves the trefoil with no odd q powers.
    auto Pq = homfly_in_q(homfly(torus_2(3)));
    for (const auto& [e, c] : Pq.terms()) CHECK(e[1] % 2 == 0);
  }

  TEST_CASE("budgets") {
    PDCode big = catalog("Wh+T23_2");
    CHECK_THROWS_AS(jones(big, 10), BudgetExceeded);
    CHECK_THROWS_AS(homfly(big, 10), BudgetExceeded);
    CHECK_NOTHROW(alexander_pd(big));
  }

  TEST_CASE("values of the named knots") {
    CHECK(jones(catalog("5_2")) == tpoly({{1, 1}, {2, -1}, {3, 2}, {4, -1}, {5, 1}, {6, -1}}));
    CHECK(alexander_pd(catalog("5_2")) == LaurentPoly::from_coeffs({2, -3, 2}, -1));
    CHECK(determinant(catalog("6_1")) == 9);
    CHECK(alexander_pd(catalog("Wh+T23_2")) == LaurentPoly::from_coeffs({-2, 5, -2}, -1));
  }

  TEST_CASE("alexander_pd rejects links") {
    CHECK_THROWS_AS(alexander_pd(torus_2(4)), std::invalid_argument);
    CHECK(alexander_minor(braid_closure(BraidWord())).is_zero());
  }

  TEST_CASE("Burau at t = -1 is rho up to conjugation") {
    std::mt19937 rng(2);
    for (int i = 0; i < 50; ++i) {
      auto w = random_word(rng, 0, 10);
      Mat2 B = burau_at_minus_one(burau_reduced(w));
      CHECK(trace(B) == trace(rho(w)));
      CHECK(det(B) == 1);
    }
  }

  TEST_CASE("trace determinant bridge") {
    std::mt19937 rng(9);
    int n = 0;
    while (n < 80) {
      auto w = random_word(rng, 1, 12);
      PDCode pd = braid_closure(w);
      if (pd.components() != 1) continue;
      ++n;
      CHECK(h1_from_trace(w) == determinant(pd));
      CHECK(alexander_closure(w).poly == alexander_pd(pd));
    }
  }

  TEST_CASE("unknot certificates") {
    auto u = unknot_certificate(braid_closure(BraidWord::parse("xy")));
    CHECK(u.consistent);
    auto t = unknot_certificate(torus_2(3));
    CHECK_FALSE(t.consistent);
    CHECK(t.witness == "jones");
    auto l = unknot_certificate(torus_2(2));
    CHECK_FALSE(l.consistent);
    CHECK(l.witness == "components");
  }
}
