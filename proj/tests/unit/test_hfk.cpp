#include <doctest.h>

#include <stdexcept>

#include <functional>

#include "knotcert/hfk.hpp"

using namespace knotcert;

namespace {

// Oracle: every symmetric positive tuple of odd length summing to total.
std::vector<std::vector<int>> all_symmetric(int total) {
  std::vector<std::vector<int>> out;
  for (int g = 0; 2 * g + 1 <= total; ++g) {
    std::vector<int> half(g + 1);
    std::function<void(int, int)> rec = [&](int i, int used) {
      if (i == g) {
        int mid = total - 2 * used;
        if (mid < 1) return;
        std::vector<int> v(half.begin(), half.begin() + g);
        v.push_back(mid);
        for (int j = g - 1; j >= 0; --j) v.push_back(half[j]);
        out.push_back(v);
        return;
      }
      for (int d = 1; 2 * (used + d) < total; ++d) {
        half[i] = d;
        rec(i + 1, used + d);
      }
    };
    rec(0, 0);
  }
  return out;
}

bool thin_ok(const std::vector<int>& v, bool fibered, bool strict) {
  int g = static_cast<int>(v.size()) / 2;
  if (g == 0) return fibered && v[0] == 1;
  int top = v[0], next = v[1];
  if (fibered ? top != 1 : top < 2) return false;
  if (top > next || (strict && top == next)) return false;
  long long alt = 0;
  for (int i = 0; i < static_cast<int>(v.size()); ++i) alt += ((i - g) % 2 ? -1 : 1) * v[i];
  return alt == 1 || alt == -1;
}

}  // namespace

TEST_SUITE("hfk") {
  TEST_CASE("stored table") {
    const auto& rows = hfk_rows();
    CHECK(rows.size() == 5);
    for (const auto& r : rows) {
      CAPTURE(r.knot);
      CHECK(r.table.total() >= r.det);
      if (validate_thin(r.table)) CHECK(r.table.total() == r.det);
      CHECK(genus(r.table) == 1);
      CHECK(is_nearly_fibered(r.table));
      CHECK_FALSE(is_fibered(r.table));
      CHECK(alexander_from_table(r.table).abs_eval_at_minus_one() == r.det);
      CHECK(alexander_from_table(r.table).eval_at_one() == 1);
    }
    CHECK(hfk_row("5_2").det == 7);
    CHECK_THROWS(hfk_row("4_1"));
  }

  TEST_CASE("thinness of the stored rows") {
    CHECK(validate_thin(hfk_row("5_2").table).has_value());
    CHECK(validate_thin(hfk_row("P(-3,3,2n+1)").table).has_value());
    CHECK_FALSE(validate_thin(hfk_row("15n43522").table).has_value());
    CHECK(validate_thin(hfk_row("5_2").table)->str() == "(2,3,2)");
  }

  TEST_CASE("mirror") {
    const auto& t = hfk_row("15n43522").table;
    auto m = mirror_table(t);
    CHECK(m.total() == t.total());
    CHECK(mirror_table(m) == t);
    CHECK(alexander_from_table(m) == alexander_from_table(t));
    CHECK(m.dims.count({-2, -1}) == t.dims.count({2, 1}));
  }

  TEST_CASE("genus of an empty table throws") {
    CHECK_THROWS_AS(genus(BigradedTable{}), std::invalid_argument);
  }

  TEST_CASE("profiles of the determinant-7 and -9 knots") {
    auto p7 = enumerate_thin_profiles(7, false);
    REQUIRE(p7.size() == 1);
    CHECK(p7[0].str() == "(2,3,2)");
    ThinQuery q{9, false, false, 1, true};
    auto p9 = enumerate_thin_profiles(q);
    REQUIRE(p9.size() == 1);
    CHECK(p9[0].str() == "(2,5,2)");
    q.alexander_filter = false;
    auto raw = enumerate_thin_profiles(q);
    REQUIRE(raw.size() == 2);
    CHECK(raw[1].str() == "(3,3,3)");
  }

  TEST_CASE("enumeration agrees with a brute-force oracle") {
    for (int total = 1; total <= 21; total += 2)
      for (bool fibered : {false, true})
        for (bool strict : {false, true}) {
          if (strict && !fibered) continue;
          ThinQuery q{total, fibered, strict, std::nullopt, true};
          std::vector<std::vector<int>> want;
          for (const auto& v : all_symmetric(total))
            if (thin_ok(v, fibered, strict)) want.push_back(v);
          std::vector<std::vector<int>> got;
          for (const auto& p : enumerate_thin_profiles(q)) {
            got.push_back(p.dims);
            CHECK(profile_satisfies(p, q));
          }
          std::sort(want.begin(), want.end(), [](const auto& a, const auto& b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
          });
          CAPTURE(total);
          CAPTURE(fibered);
          CHECK(got == want);
        }
  }

  TEST_CASE("bad totals") {
    CHECK_THROWS(enumerate_thin_profiles(8, false));
    CHECK_THROWS(enumerate_thin_profiles(-1, true));
  }

  TEST_CASE("parsing") {
    auto rows = parse_hfk_table(
        R"({"format":"knotcert-hfk-table","version":1,"rows":[{"knot":"k","det":3,"entries":[[0,1,1],[-1,0,1],[-2,-1,1]]}]})");
    REQUIRE(rows.size() == 1);
    CHECK(is_fibered(rows[0].table));
    CHECK(genus(rows[0].table) == 1);
    CHECK_THROWS(parse_hfk_table("[1,2"));
  }
}
