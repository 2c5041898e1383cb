#include <doctest.h>

#include <stdexcept>

#include <random>
#include <set>

#include "knotcert/classify.hpp"

using namespace knotcert;

namespace {

BraidWord W(const char* s) { return BraidWord::parse(s); }

}  // namespace

TEST_SUITE("classify") {
  TEST_CASE("class keys ignore reversal and y-conjugation") {
    std::mt19937 rng(4);
    std::uniform_int_distribution<int> len(0, 10), pick(0, 3), a(-5, 5);
    const Letter alpha[] = {Letter::x, Letter::X, Letter::y, Letter::Y};
    for (int i = 0; i < 200; ++i) {
      std::vector<Letter> raw;
      for (int j = 0, n = len(rng); j < n; ++j) raw.push_back(alpha[pick(rng)]);
      BraidWord w = reduce(raw);
      CHECK(class_key(w) == class_key(reverse(w)));
      CHECK(class_key(w) == class_key(conjugate_by_y(w, a(rng))));
      BraidWord c = canonical_word(w);
      CHECK(same_class(c, w));
      CHECK(canonical_word(c) == c);
      CHECK_FALSE(word_order_less(w, c));
    }
    CHECK_FALSE(same_class(W("x"), W("X")));
  }

  TEST_CASE("word order") {
    CHECK(word_order_less(W("Y"), W("xx")));
    CHECK(word_order_less(W("x"), W("X")));
    CHECK(word_order_less(W("X"), W("y")));
    CHECK(word_order_less(W("y"), W("Y")));
  }

  TEST_CASE("factor templates") {
    for (long long n = -6; n <= 6; ++n) {
      CaseRow row;
      row.p = 2 * n + 1, row.q = 2, row.qbar = n + 1, row.r = 1;
      for (int fam : {1, 2}) {
        FactorTemplate f = row.factor(fam);
        CHECK(det(f.core()) == 1);
        CHECK(rho(f.core_word()) == f.core());
        for (long long s = -3; s <= 3; ++s)
          for (int e : {0, 1})
            for (long long d = -1; d <= 1; ++d) {
              BraidWord b = f.conjugated_braid(s, e, d);
              CHECK(rho(b) == f.instantiate(0, s, e));
            }
        // k and l only enter through tr via k + l.
        CHECK(trace(f.instantiate(2, -5, 1)) == trace(f.instantiate(-1, -2, 1)));
      }
    }
  }

  TEST_CASE("trace solutions against a brute-force oracle") {
    for (const auto& row : possible_torus_knots(50)) {
      std::vector<TraceSolution> want;
      for (long long s = -200; s <= 200; ++s)
        for (int e : {0, 1}) {
          long long t = (e ? -1 : 1) * (row.base + row.modulus * s);
          if (t == 2 + row.n || t == 2 - row.n) want.push_back({s, e});
        }
      auto got = trace_solutions(row);
      std::sort(got.begin(), got.end());
      CHECK(got == want);
    }
  }

  TEST_CASE("closure lengths and d") {
    CHECK(torus_closure_lengths(5) == std::vector<long long>{4, 6});
    CHECK(torus_closure_lengths(-1) == std::vector<long long>{-2, 0, 2});
    CHECK(solve_d(-8, {4, 6}) == std::vector<long long>{1});
    CHECK(solve_d(1, {4, 6}).empty());
    // Case 2 of the unknot family: k+l = -1, e = 0 gives d = 0 for all n.
    for (long long n = -20; n <= 20; ++n) CHECK(pin_down_d(n, -1, 0) == std::vector<long long>{0});
  }

  TEST_CASE("unknot family identity") {
    CHECK(unknot_family_symbolic_check());
    for (long long n = -30; n <= 30; ++n) {
      BraidWord b = power(Letter::x, n) * W("Yxy");
      CHECK(trace(rho(b)) == 2 - n);
      CHECK(exponent_sum(b) == n + 1);
    }
    auto sp = unknot_sporadic_solutions();
    CHECK_FALSE(sp.empty());
    for (const auto& s : sp) CHECK(s.case_no != 2);
  }

  TEST_CASE("torus lens candidates") {
    auto c = torus_lens_candidates(50);
    std::set<Lens> got;
    for (const auto& t : c) got.insert(t.lens);
    CHECK(got == std::set<Lens>{{5, 4}, {7, 4}, {13, 9}, {19, 16}});
    CHECK(possible_torus_knots(50).size() == 8);
    CHECK(possible_torus_knots(3).size() <= 8);
  }

  TEST_CASE("enumerations") {
    auto u = enumerate_unknot_case(-3, 3);
    CHECK(u.cert.status == "consistent");
    std::set<ClassKey> want{class_key(W("X")), class_key(W("xy"))};
    for (long long n = -3; n <= 3; ++n) want.insert(class_key(power(Letter::x, n) * W("Yxy")));
    std::set<ClassKey> got;
    for (const auto& b : u.braids) got.insert(class_key(b));
    CHECK(got == want);

    auto t = enumerate_torus_case();
    CHECK(t.braids.size() == 2);
    CHECK(same_class(t.braids[0], W("XXXyXX")));
    CHECK(same_class(t.braids[1], W("xxxYxxy")));

    auto w = enumerate_whitehead_case();
    REQUIRE(w.braids.size() == 2);
    CHECK(w.braids[0] == W("x"));
    CHECK(w.braids[1] == W("X"));
    CHECK(w.cert.knots == std::vector<std::string>{"Wh+T23_2", "Wh-T23_2"});
  }

  TEST_CASE("certificates serialize and replay") {
    for (Certificate c : {enumerate_unknot_case(-2, 2).cert, enumerate_torus_case(20).cert,
                          enumerate_whitehead_case().cert}) {
      auto j = c.to_json();
      CHECK(j.at("schema") == Certificate::kSchema);
      Certificate back = Certificate::from_json(nlohmann::ordered_json::parse(j.dump()));
      CHECK(back.to_json() == j);
      CHECK(replay(back).to_json().dump() == j.dump());
      std::string md = c.markdown();
      for (const auto& s : c.steps) {
        CHECK(anchor_text(s.anchor) != nullptr);
        CHECK(md.find(anchor_text(s.anchor)) != std::string::npos);
      }
    }
  }

  TEST_CASE("anchors are unique") {
    std::set<std::string> ids;
    for (const auto& a : anchor_registry()) CHECK(ids.insert(a.id).second);
  }

  TEST_CASE("braid_to_knot") {
    CHECK(braid_to_knot(CaseKind::Unknot, W("X")) == "5_2");
    CHECK(braid_to_knot(CaseKind::Unknot, W("xy")) == "mirror(5_2)");
    CHECK(braid_to_knot(CaseKind::Unknot, W("XXXYxy")) == "P(-3,3,-5)");
    CHECK(braid_to_knot(CaseKind::Torus, W("xxxYxxy")) == "15n43522");
    CHECK(braid_to_knot(CaseKind::Torus, W("XXXyXX")) == "mirror(15n43522)");
    CHECK(braid_to_knot(CaseKind::Whitehead, W("x")) == "Wh+T23_2");
    CHECK(braid_to_knot(CaseKind::Whitehead, conjugate_by_y(W("X"), 3)) == "Wh-T23_2");
    CHECK_THROWS_AS(braid_to_knot(CaseKind::Whitehead, W("xy")), std::invalid_argument);
    CHECK_THROWS_AS(braid_to_knot(CaseKind::Unknot, W("xxxxxxxxxxxy")), std::invalid_argument);
  }
}
