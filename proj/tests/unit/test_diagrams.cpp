#include <doctest.h>

#include <stdexcept>

#include "knotcert/diagrams.hpp"

using namespace knotcert;

TEST_SUITE("diagrams") {
  TEST_CASE("PD round trip") {
    const char* text = "X[1,5,2,4]+,X[3,1,4,6]+,X[5,3,6,2]+";
    PDCode pd = parse_pd(text);
    CHECK(pd.crossings.size() == 3);
    CHECK(emit_pd(pd) == text);
    CHECK(parse_pd(emit_pd(pd)) == pd);
    CHECK(pd.components() == 1);
  }

  TEST_CASE("signs are inferred when missing") {
    PDCode a = parse_pd("X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]");
    CHECK(writhe(a) == 3);
    CHECK(writhe(mirror(a)) == -3);
  }

  TEST_CASE("free loops") {
    PDCode pd = parse_pd("O,O");
    CHECK(pd.components() == 2);
    CHECK(pd.crossings.empty());
    CHECK(emit_pd(pd) == "O,O");
  }

  TEST_CASE("malformed codes") {
    CHECK_THROWS_AS(parse_pd("X[1,2,3]"), PDError);
    CHECK_THROWS_AS(parse_pd("X[1,5,2,4]+,X[3,1,4,6]+"), PDError);
    CHECK_THROWS_AS(parse_pd("Y[1,2,3,4]"), PDError);
  }

  TEST_CASE("braid closures") {
    PDCode pd = braid_closure(BraidWord::parse("xxxxxY"));
    CHECK(pd.crossings.size() == 6);
    CHECK(writhe(pd) == 4);
    CHECK(pd.components() == 1);
    CHECK(braid_closure(BraidWord::parse("x")).components() == 2);
    CHECK(braid_closure(BraidWord()).components() == 3);
    CHECK(braid_closure(BraidWord::parse("xy")).components() == 1);
    CHECK(braid_closure(BraidWord::parse("xxyy")).components() == 3);
  }

  TEST_CASE("relabel keeps consecutive labels along components") {
    PDCode pd = relabel(braid_closure(BraidWord::parse("xYxYxYxY")));
    auto cyc = component_cycles(pd);
    REQUIRE(cyc.size() == 1);
    for (std::size_t i = 0; i < cyc[0].size(); ++i) CHECK(cyc[0][i] == static_cast<int>(i) + 1);
  }

  TEST_CASE("generated families") {
    CHECK(torus_2(5).crossings.size() == 5);
    CHECK(torus_2(4).components() == 2);
    CHECK(writhe(torus_2(-3)) == -3);
    CHECK(pretzel(-3, 3, 1).crossings.size() == 7);
    CHECK(pretzel(-3, 3, 1).components() == 1);
    CHECK(pretzel(2, 2, 2).components() > 1);
  }

  TEST_CASE("sublinks") {
    PDCode L = braid_closure(BraidWord::parse("xxyy"));
    CHECK(sublink(L, {0}).components() == 1);
    CHECK(sublink(L, {0, 2}).components() == 2);
  }

  TEST_CASE("tau cables carry the extra component last") {
    for (const char* w : {"X", "xy", "xxYxy", "xxxYxxy"}) {
      PDCode t = tau_cable_unknot(BraidWord::parse(w));
      CHECK(t.components() == 2);
      CHECK(drop_last_cycle(t).components() == 1);
    }
    for (const char* w : {"x", "X"}) {
      PDCode t = tau_cable_trefoil(BraidWord::parse(w));
      CHECK(drop_last_cycle(t).components() == 1);
    }
  }

  TEST_CASE("orient_planar recovers a trefoil") {
    // Unoriented trefoil rings, slots 0 and 2 under.
    PDCode pd = orient_planar({{1, 5, 2, 4}, {3, 1, 4, 6}, {5, 3, 6, 2}}, 0);
    CHECK(pd.components() == 1);
    CHECK(std::abs(writhe(pd)) == 3);
  }
}
