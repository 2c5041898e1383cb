#include "knotcert/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "knotcert/braid3.hpp"
#include "knotcert/classify.hpp"
#include "knotcert/invariants.hpp"
#include "knotcert/surgery.hpp"

namespace knotcert {

std::string CheckResult::line() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3fs/%.0fs", seconds, limit_seconds);
  std::ostringstream os;
  os << (pass ? "[PASS] " : "[FAIL] ") << id << ". " << title << " (" << buf << ")";
  return os.str();
}

namespace {

using Details = std::vector<std::string>;

struct TraceRow {
  TorusKnot gamma;
  long long n, p, q, qbar, base, modulus;
};

// The trace table, row for row.
const std::vector<TraceRow>& trace_table() {
  static const std::vector<TraceRow> rows = {
      {{2, 3}, 5, 11, 8, 7, 15, 11},    {{-2, 3}, -6, 11, 3, 4, 7, 11},
      {{2, 3}, 6, 13, 8, 5, 13, 13},    {{-2, 3}, -7, 13, 5, 8, 13, 13},
      {{3, 4}, 12, 25, 18, 7, 25, 25},  {{-3, 4}, -13, 25, 7, 18, 25, 25},
      {{4, 5}, 19, 39, 32, 11, 43, 39}, {{-4, 5}, -20, 39, 7, 28, 35, 39},
  };
  return rows;
}

std::set<ClassKey> keys_of(const std::vector<BraidWord>& ws) {
  std::set<ClassKey> s;
  for (const auto& w : ws) s.insert(class_key(w));
  return s;
}

bool same_classes(const std::vector<BraidWord>& got, const std::vector<BraidWord>& want,
                  Details& d, const std::string& label) {
  auto g = keys_of(got), w = keys_of(want);
  std::string names;
  for (const auto& b : got) names += (names.empty() ? "" : " ") + b.str();
  d.push_back(label + ": " + std::to_string(got.size()) + " classes {" + names + "}");
  if (g == w) return true;
  d.push_back(label + ": expected " + std::to_string(w.size()) + " classes, got " +
              std::to_string(g.size()));
  return false;
}

bool check_rep(const AcceptanceConfig&, Details& d) {
  bool ok = true;
  auto xyx = BraidWord::parse("xyx"), yxy = BraidWord::parse("yxy");
  if (rho(xyx) != rho(yxy)) ok = false, d.push_back("rho(xyx) != rho(yxy)");
  if (rho(delta_power(2)) != Mat2{-1, 0, 0, -1}) ok = false, d.push_back("rho(Delta^2) != -I");
  for (long long k = -3; k <= 3; ++k) {
    auto kp = kernel_power(delta_power(4 * k));
    if (kp != k) ok = false, d.push_back("kernel_power(Delta^" + std::to_string(4 * k) + ") wrong");
  }
  d.push_back("rho(xyx) = " + rho(xyx).str() + ", rho(Delta^2) = " + rho(delta_power(2)).str());
  return ok;
}

bool check_trace_table(const AcceptanceConfig& cfg, Details& d) {
  auto rows = possible_torus_knots(cfg.q_bound);
  const auto& want = trace_table();
  if (rows.size() != want.size()) {
    d.push_back("expected 8 rows, got " + std::to_string(rows.size()));
    return false;
  }
  bool ok = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    const auto& w = want[i];
    auto lens = ClosedManifold::lens(w.p, w.q);
    bool row_ok = r.gamma && *r.gamma == w.gamma && r.n == w.n && r.lens == lens &&
                  r.p == w.p && r.q == w.q && r.qbar == w.qbar && r.base == w.base &&
                  r.modulus == w.modulus;
    auto sols = trace_solutions(r);
    std::vector<TraceSolution> want_sols;
    if (w.n == 5) want_sols = {{-2, 1}};
    if (w.n == -6) want_sols = {{-1, 0}};
    row_ok = row_ok && sols == want_sols;
    std::string s = r.gamma_str() + " n=" + std::to_string(r.n) + " " + r.lens.str() +
                    " p=" + std::to_string(r.p) + " q=" + std::to_string(r.q) +
                    " qbar=" + std::to_string(r.qbar) + " tr=(-1)^e(" + std::to_string(r.base) +
                    "+" + std::to_string(r.modulus) + "(k+l)) solutions:";
    for (const auto& t : sols) s += " (" + std::to_string(t.k_plus_l) + "," + std::to_string(t.e) + ")";
    if (!row_ok) s += "  MISMATCH";
    d.push_back(s);
    ok = ok && row_ok;
  }
  return ok;
}

bool check_torus_pairs(const AcceptanceConfig& cfg, Details& d) {
  std::map<std::string, std::set<long long>> got, want = {
      {"T(2,3)", {5, 6}},  {"T(-2,3)", {-6, -7}}, {"T(3,4)", {12}},
      {"T(-3,4)", {-13}},  {"T(4,5)", {19}},      {"T(-4,5)", {-20}},
  };
  for (const auto& r : possible_torus_knots(cfg.q_bound)) got[r.gamma_str()].insert(r.n);
  for (const auto& [g, ns] : got) {
    std::string s = g + ":";
    for (auto n : ns) s += " " + std::to_string(n);
    d.push_back(s);
  }
  std::set<Lens> lenses;
  for (const auto& c : torus_lens_candidates(cfg.q_bound)) lenses.insert(c.lens);
  std::set<Lens> want_lenses = {{5, 4}, {7, 4}, {13, 9}, {19, 16}};
  std::string ls = "lens candidates:";
  for (const auto& l : lenses) ls += " " + l.str();
  d.push_back(ls);
  return got == want && lenses == want_lenses;
}

bool check_classify(const AcceptanceConfig& cfg, Details& d) {
  bool ok = true;
  auto u = enumerate_unknot_case(cfg.n_window);
  std::vector<BraidWord> want_u = {BraidWord::parse("X"), BraidWord::parse("xy")};
  for (long long n = -cfg.n_window; n <= cfg.n_window; ++n)
    want_u.push_back(power(Letter::x, n) * BraidWord::parse("Yxy"));
  ok &= same_classes(u.braids, want_u, d, "unknot case");
  ok &= u.cert.status == "consistent";

  auto t = enumerate_torus_case(cfg.q_bound);
  ok &= same_classes(t.braids, {BraidWord::parse("xxxYxxy"), BraidWord::parse("XXXyXX")}, d,
                     "torus case");
  ok &= t.cert.status == "consistent";

  auto w = enumerate_whitehead_case();
  ok &= same_classes(w.braids, {BraidWord::parse("x"), BraidWord::parse("X")}, d,
                     "whitehead case");
  ok &= w.cert.status == "consistent";

  // Knot identifications.
  std::vector<std::pair<std::string, std::string>> got_names, want_names = {
      {"unknot X", "5_2"},           {"unknot xy", "mirror(5_2)"},
      {"unknot xxYxy", "P(-3,3,5)"}, {"torus xxxYxxy", "15n43522"},
      {"torus XXXyXX", "mirror(15n43522)"}, {"whitehead x", "Wh+T23_2"},
      {"whitehead X", "Wh-T23_2"},
  };
  for (const auto& [label, name] : want_names) {
    auto sp = label.find(' ');
    std::string c = label.substr(0, sp);
    CaseKind k = c == "unknot" ? CaseKind::Unknot : c == "torus" ? CaseKind::Torus : CaseKind::Whitehead;
    got_names.push_back({label, braid_to_knot(k, BraidWord::parse(label.substr(sp + 1)))});
  }
  std::string s = "knots:";
  for (const auto& [b, k] : got_names) s += " " + b + " -> " + k + ";";
  d.push_back(s);
  ok &= got_names == want_names;
  d.push_back("certified knots: torus " + nlohmann::json(t.cert.knots).dump() + ", whitehead " +
              nlohmann::json(w.cert.knots).dump());
  return ok;
}

int pretzel_span(const AcceptanceConfig& cfg) {
  return static_cast<int>(std::clamp<long long>(cfg.n_window, 0, 4));
}

bool check_det(const AcceptanceConfig& cfg, const Catalog& cat, Details& d) {
  std::vector<std::pair<std::string, long long>> want = {
      {"5_2", 7}, {"15n43522", 7}, {"Wh-T23_2", 7}, {"Wh+T23_2", 9}};
  int span = pretzel_span(cfg);
  for (int n = -span; n <= span; ++n)
    want.push_back({"P(-3,3," + std::to_string(2 * n + 1) + ")", 9});
  bool ok = true;
  for (const auto& [name, det] : want) {
    PDCode pd = cat.get(name);
    long long v = jones(pd, std::max<int>(cfg.crossing_budget, kBracketBudget))
                      .abs_eval_at_minus_one();
    long long a = alexander_pd(pd).abs_eval_at_minus_one();
    bool row = v == det && a == det;
    d.push_back(name + ": |V(-1)|=" + std::to_string(v) + " |A(-1)|=" + std::to_string(a) +
                (row ? "" : "  expected " + std::to_string(det)));
    ok &= row;
  }
  return ok;
}

bool check_alexander(const AcceptanceConfig& cfg, const Catalog& cat,
                     const std::vector<HfkRow>& hfk, Details& d) {
  auto find_row = [&](const std::string& k) -> const HfkRow* {
    for (const auto& r : hfk)
      if (r.knot == k) return &r;
    return nullptr;
  };
  const LaurentPoly pret = LaurentPoly::from_coeffs({-2, 5, -2}, -1);
  const LaurentPoly five2 = LaurentPoly::from_coeffs({2, -3, 2}, -1);
  bool ok = true;
  const HfkRow* pr = find_row("P(-3,3,2n+1)");
  const HfkRow* fr = find_row("5_2");
  if (!pr || !fr) {
    d.push_back("hfk table lacks P(-3,3,2n+1) or 5_2");
    return false;
  }
  bool euler = alexander_from_table(pr->table) == pret && alexander_from_table(fr->table) == five2;
  d.push_back("table Euler characteristics: P(-3,3,2n+1) " +
              alexander_from_table(pr->table).str() + ", 5_2 " +
              alexander_from_table(fr->table).str());
  ok &= euler;
  int span = pretzel_span(cfg);
  for (int n = -span; n <= span; ++n) {
    std::string name = "P(-3,3," + std::to_string(2 * n + 1) + ")";
    auto a = alexander_pd(cat.get(name));
    ok &= a == pret;
    d.push_back(name + ": " + a.str());
  }
  auto a52 = alexander_pd(cat.get("5_2"));
  ok &= a52 == five2;
  d.push_back("5_2: " + a52.str());
  return ok;
}

bool check_homfly(const AcceptanceConfig& cfg, const Catalog& cat, Details& d) {
  std::vector<std::string> names = cat.stored_names();
  for (const char* n : {"unknot", "T(2,3)", "T(2,-3)", "T(2,5)", "T(2,-7)", "P(-3,3,1)",
                        "P(-3,3,-3)", "mirror(5_2)"})
    names.push_back(n);
  bool ok = true;
  for (const auto& name : names) {
    PDCode pd = cat.get(name);
    if (static_cast<int>(pd.crossings.size()) > cfg.crossing_budget) {
      d.push_back(name + ": skipped, " + std::to_string(pd.crossings.size()) +
                  " crossings over budget");
      continue;
    }
    LaurentPoly P = homfly(pd, cfg.crossing_budget);
    LaurentPoly V = jones(pd, std::max<int>(cfg.crossing_budget, kBracketBudget));
    bool jv = homfly_to_jones(P) == V;
    bool av = equal_up_to_unit(homfly_to_alexander(P), alexander_pd(pd));
    d.push_back(name + ": P=" + P.str({"a", "z"}) + (jv ? "" : "  JONES MISMATCH") +
                (av ? "" : "  ALEXANDER MISMATCH"));
    ok &= jv && av;
  }
  return ok;
}

bool check_trace_det(const AcceptanceConfig& cfg, Details& d) {
  std::mt19937 rng(cfg.seed);
  std::uniform_int_distribution<int> len(1, 12), pick(0, 3);
  const Letter alphabet[] = {Letter::x, Letter::X, Letter::y, Letter::Y};
  int tested = 0, tries = 0, bad = 0;
  while (tested < 200 && tries < 100000) {
    ++tries;
    std::vector<Letter> raw;
    for (int i = 0, L = len(rng); i < L; ++i) raw.push_back(alphabet[pick(rng)]);
    BraidWord w = reduce(raw);
    PDCode pd = braid_closure(w);
    if (pd.components() != 1) continue;
    ++tested;
    long long h = h1_from_trace(w), det = determinant(pd);
    if (h != det) {
      if (++bad <= 5) d.push_back(w.str() + ": trace " + std::to_string(h) + " det " + std::to_string(det));
    }
  }
  d.push_back(std::to_string(tested) + " knotted closures tested, " + std::to_string(bad) +
              " mismatches");
  return tested == 200 && bad == 0;
}

bool check_thin(const AcceptanceConfig&, Details& d) {
  auto show = [](const std::vector<ThinProfile>& ps) {
    std::string s = "{";
    for (const auto& p : ps) s += (s.size() > 1 ? " " : "") + p.str();
    return s + "}";
  };
  auto a = enumerate_thin_profiles(ThinQuery{7, false, false, std::nullopt, true});
  ThinQuery q9{9, false, false, 1, true};
  auto b = enumerate_thin_profiles(q9);
  q9.alexander_filter = false;
  auto c = enumerate_thin_profiles(q9);
  d.push_back("(7, non-fibered) -> " + show(a));
  d.push_back("(9, non-fibered, g=1) -> " + show(b) + ", before filter " + show(c));
  auto prof = [](std::vector<int> v) { return ThinProfile{static_cast<int>(v.size()) / 2, v, 0}; };
  bool has333 = std::find(c.begin(), c.end(), prof({3, 3, 3})) != c.end();
  return a == std::vector<ThinProfile>{prof({2, 3, 2})} &&
         b == std::vector<ThinProfile>{prof({2, 5, 2})} && has333;
}

bool check_m2w(const AcceptanceConfig& cfg, Details& d) {
  std::mt19937 rng(cfg.seed + 1);
  std::uniform_int_distribution<int> len(0, 20), pick(0, 3);
  const Letter alphabet[] = {Letter::x, Letter::X, Letter::y, Letter::Y};
  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    std::vector<Letter> raw;
    for (int j = 0, L = len(rng); j < L; ++j) raw.push_back(alphabet[pick(rng)]);
    BraidWord w = reduce(raw);
    BraidWord m = matrix_to_word(rho(w));
    bool ok = rho(m) == rho(w) && kernel_power(inverse(m) * w).has_value();
    if (!ok && ++bad <= 5) d.push_back("round trip failed on " + w.str());
  }
  d.push_back("1000 words, " + std::to_string(bad) + " failures");
  return bad == 0;
}

bool check_certificates(const AcceptanceConfig& cfg, Details& d) {
  const LaurentPoly trefoil = LaurentPoly::monomial(1, 2, 0, 1, 2) +
                              LaurentPoly::monomial(1, 6, 0, 1, 2) -
                              LaurentPoly::monomial(1, 8, 0, 1, 2);
  bool ok = true;
  std::vector<BraidWord> unknot_side = enumerate_unknot_case(cfg.n_window).braids;
  for (const auto& b : enumerate_torus_case(cfg.q_bound).braids) unknot_side.push_back(b);
  int budget = std::max<int>(cfg.crossing_budget, kBracketBudget);
  int n_ok = 0;
  for (const auto& b : unknot_side) {
    auto c = unknot_certificate(drop_last_cycle(tau_cable_unknot(b)), budget);
    if (c.consistent) ++n_ok;
    else ok = false, d.push_back("tau u " + b.str() + " refuted by " + c.witness);
  }
  d.push_back(std::to_string(n_ok) + "/" + std::to_string(unknot_side.size()) +
              " first-tangle braids consistent");
  for (const char* s : {"x", "X"}) {
    auto c = unknot_certificate(drop_last_cycle(tau_cable_trefoil(BraidWord::parse(s))), budget);
    d.push_back(std::string("second tangle with ") + s + ": " +
                (c.consistent ? "consistent" : "refuted by " + c.witness));
    ok &= c.consistent;
  }
  for (const char* s : {"xY", "XY"}) {
    auto c = unknot_certificate(drop_last_cycle(tau_cable_unknot(BraidWord::parse(s))), budget);
    bool refuted = !c.consistent && c.witness == "jones" && c.jones == trefoil;
    d.push_back(std::string("tau u ") + s + ": " +
                (c.consistent ? "consistent" : "refuted by " + c.witness + ", V = " + c.jones.str()));
    ok &= refuted;
  }
  return ok;
}

}  // namespace

std::vector<CheckResult> run_acceptance(const AcceptanceConfig& cfg) {
  const Catalog& cat = cfg.catalog ? *cfg.catalog : Catalog::builtin();
  const std::vector<HfkRow>& hfk = cfg.hfk ? *cfg.hfk : hfk_rows();

  struct Spec {
    const char* title;
    double limit;
    std::function<bool(Details&)> run;
  };
  const std::vector<Spec> specs = {
      {"representation identities", 1, [&](Details& d) { return check_rep(cfg, d); }},
      {"trace table: 8 rows entrywise, two surviving rows", 1,
       [&](Details& d) { return check_trace_table(cfg, d); }},
      {"possible torus knots and n values", 5, [&](Details& d) { return check_torus_pairs(cfg, d); }},
      {"braid classifications and knot table", 10,
       [&](Details& d) { return check_classify(cfg, d); }},
      {"determinants 7 and 9 via Jones and Alexander", 30,
       [&](Details& d) { return check_det(cfg, cat, d); }},
      {"Alexander polynomials against HFK Euler characteristics", 10,
       [&](Details& d) { return check_alexander(cfg, cat, hfk, d); }},
      {"HOMFLY specializations on catalog knots", 60,
       [&](Details& d) { return check_homfly(cfg, cat, d); }},
      {"trace/determinant bridge on random 3-braids", 30,
       [&](Details& d) { return check_trace_det(cfg, d); }},
      {"thin profile enumerations", 1, [&](Details& d) { return check_thin(cfg, d); }},
      {"matrix_to_word round trip", 5, [&](Details& d) { return check_m2w(cfg, d); }},
      {"unknot certificates and trefoil refutations", 60,
       [&](Details& d) { return check_certificates(cfg, d); }},
  };

  std::vector<CheckResult> out;
  int id = 0;
  for (const auto& s : specs) {
    CheckResult r;
    r.id = ++id;
    r.title = s.title;
    r.limit_seconds = s.limit;
    auto t0 = std::chrono::steady_clock::now();
    try {
      r.pass = s.run(r.details);
    } catch (const std::exception& e) {
      r.pass = false;
      r.details.push_back(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.seconds > r.limit_seconds) {
      r.pass = false;
      r.details.push_back("over time limit");
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace knotcert
