#include "knotcert/classify.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "knotcert/diagrams.hpp"
#include "knotcert/invariants.hpp"

namespace knotcert {

namespace {

std::string word_text(const BraidWord& w) { return w.empty() ? "1" : w.str(); }

int letter_rank(Letter l) {
  switch (l) {
    case Letter::x: return 0;
    case Letter::X: return 1;
    case Letter::y: return 2;
    case Letter::Y: return 3;
  }
  return 4;
}

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Representative of M under conjugation by rho(y)^t: the top-right entry is
// fixed and the bottom-right one moves by multiples of it.
Mat2 conj_normal_form(const Mat2& M) {
  if (M.b == 0) return M;
  const long long m = std::llabs(M.b);
  // L_t M L_t^-1 with L_t = [[1,0],[t,1]] sends d to d + t b.
  long long t = floor_div(M.d, m) * (M.b > 0 ? -1 : 1);
  Mat2 L = lower(t);
  return L * M * inv(L);
}

constexpr std::size_t kTableLength = 10;

struct ClassTable {
  std::map<ClassKey, BraidWord> best;
};

const ClassTable& class_table() {
  static const ClassTable table = [] {
    ClassTable t;
    const Letter all[4] = {Letter::x, Letter::X, Letter::y, Letter::Y};
    // Breadth-first by length; each layer in x < X < y < Y order, so the
    // first word seen per class is the canonical one.
    std::vector<std::vector<Letter>> layer{{}};
    for (std::size_t len = 0; len <= kTableLength; ++len) {
      std::vector<std::vector<Letter>> next;
      for (const auto& raw : layer) {
        BraidWord w(raw);
        t.best.emplace(class_key(w), w);
        if (len == kTableLength) continue;
        for (Letter l : all) {
          if (!raw.empty() && raw.back() == inverse(l)) continue;
          auto ext = raw;
          ext.push_back(l);
          next.push_back(std::move(ext));
        }
      }
      layer = std::move(next);
    }
    return t;
  }();
  return table;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

std::vector<std::string> words_text(const std::vector<BraidWord>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(word_text(w));
  return out;
}

void sort_words(std::vector<BraidWord>& ws) {
  std::sort(ws.begin(), ws.end(), word_order_less);
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
}

void canonicalize(const std::vector<BraidWord>& raw, std::vector<BraidWord>& classes, CertStep& step) {
  for (const BraidWord& b : raw) {
    BraidWord c = canonical_word(b);
    step.survivors.push_back(word_text(b) + " -> " + word_text(c));
    classes.push_back(c);
  }
  sort_words(classes);
}

std::string sol_text(long long n, const TraceSolution& s) {
  return "n=" + std::to_string(n) + " k+l=" + std::to_string(s.k_plus_l) + " e=" + std::to_string(s.e);
}

}  // namespace

// ---------------------------------------------------------------- classes

ClassKey class_key(const BraidWord& w) {
  Mat2 a = conj_normal_form(rho(w));
  Mat2 b = conj_normal_form(rho(reverse(w)));
  return {exponent_sum(w), std::min(a, b)};
}

bool same_class(const BraidWord& u, const BraidWord& v) { return class_key(u) == class_key(v); }

bool word_order_less(const BraidWord& u, const BraidWord& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    int a = letter_rank(u.letters()[i]), b = letter_rank(v.letters()[i]);
    if (a != b) return a < b;
  }
  return false;
}

BraidWord canonical_word(const BraidWord& w) {
  const ClassKey key = class_key(w);
  const auto& t = class_table().best;
  if (auto it = t.find(key); it != t.end()) return it->second;
  const long long bound = static_cast<long long>(w.size()) + 2;
  BraidWord best = w;
  for (const BraidWord& base : {w, reverse(w)})
    for (long long a = -bound; a <= bound; ++a) {
      BraidWord c = conjugate_by_y(base, a);
      if (word_order_less(c, best)) best = c;
    }
  return best;
}

// ---------------------------------------------------------------- templates

Mat2 FactorTemplate::core() const {
  if (family == 1) return {qbar, p, r, q};
  return {q, p, r, qbar};
}

BraidWord FactorTemplate::core_word() const { return matrix_to_word(core()); }

Mat2 FactorTemplate::instantiate(long long k, long long l, int e) const {
  Mat2 m = lower(k) * core() * lower(l);
  return e ? neg(m) : m;
}

BraidWord FactorTemplate::conjugated_braid(long long k_plus_l, int e, long long d) const {
  return delta_power(4 * d + 2 * e) * core_word() * power(Letter::Y, k_plus_l);
}

std::string CaseRow::gamma_str() const { return gamma ? gamma->str() : "U"; }

FactorTemplate CaseRow::factor(int family) const { return {p, q, qbar, r, family}; }

std::vector<TraceSolution> trace_solutions_for(long long base, long long modulus,
                                               const std::vector<long long>& targets) {
  std::set<TraceSolution> out;
  for (int e = 0; e <= 1; ++e)
    for (long long t : targets) {
      long long rhs = (e ? -t : t) - base;
      if (modulus == 0) continue;
      if (rhs % modulus == 0) out.insert({rhs / modulus, e});
    }
  return {out.begin(), out.end()};
}

std::vector<TraceSolution> trace_solutions(const CaseRow& row) {
  return trace_solutions_for(row.base, row.modulus, {2 + row.n, 2 - row.n});
}

std::vector<long long> torus_closure_lengths(long long m) {
  if (m == 1 || m == -1) return {-2, 0, 2};
  return {m - 1, m + 1};
}

std::vector<long long> solve_d(long long offset, const std::vector<long long>& allowed) {
  std::set<long long> ds;
  for (long long v : allowed)
    if ((v - offset) % 12 == 0) ds.insert((v - offset) / 12);
  return {ds.begin(), ds.end()};
}

std::vector<long long> pin_down_d(long long n, long long k_plus_l, int e) {
  return solve_d(6 * e + n - k_plus_l, torus_closure_lengths(n));
}

// ---------------------------------------------------------------- anchors

const std::vector<Anchor>& anchor_registry() {
  static const std::vector<Anchor> reg = {
      {"rho-factorization", "rho(beta) factors through the lens-space data (p, q, qbar, r)"},
      {"trace-constraint", "trace of rho(beta) equals 2 +- |H_1| of the closure's double cover"},
      {"unknot-cases", "four sign cases of the trace equation when gamma is unknotted"},
      {"pin-down-d", "exponent sum of beta against the torus-link closure lengths"},
      {"reversal-duplicates", "second factorization family equals reversed first family up to y-conjugation"},
      {"trefoil-exclusion", "tau filled with the candidate braid must not be knotted"},
      {"family-symbolic", "linear-in-n matrix identity for x^n y^-1 x y"},
      {"torus-pairs", "coprime P = Q + 1 with braid-index divisibility by parity of P"},
      {"moser-lens", "half-integral and integral lens surgeries on torus knots"},
      {"trace-table", "lens space, p, q, qbar and trace formula per (gamma, n)"},
      {"resolution-length", "closure of beta or beta y^-1 is a 2-bridge torus knot; fixes d"},
      {"unlink-closure", "closure of beta is the 2-component unlink, trace 2, length +-1"},
      {"canonical-class", "canonical word up to reversal and y-conjugation"},
      {"unknot-certificate", "polynomial invariants of tau u beta consistent with the unknot"},
  };
  return reg;
}

const char* anchor_text(const std::string& id) {
  for (const Anchor& a : anchor_registry())
    if (id == a.id) return a.text;
  throw std::out_of_range("unknown anchor " + id);
}

// ---------------------------------------------------------------- certificates

nlohmann::ordered_json Certificate::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = kSchema;
  j["case"] = case_name;
  j["inputs"] = inputs;
  j["steps"] = nlohmann::ordered_json::array();
  for (const CertStep& s : steps)
    j["steps"].push_back({{"constraint", s.constraint}, {"anchor", s.anchor}, {"survivors", s.survivors}});
  j["braids"] = braids;
  j["knots"] = knots;
  j["status"] = status;
  return j;
}

Certificate Certificate::from_json(const nlohmann::ordered_json& j) {
  if (j.at("schema").get<std::string>() != kSchema) throw std::invalid_argument("certificate: unknown schema");
  Certificate c;
  c.case_name = j.at("case").get<std::string>();
  c.inputs = j.at("inputs");
  for (const auto& s : j.at("steps"))
    c.steps.push_back({s.at("constraint").get<std::string>(), s.at("anchor").get<std::string>(),
                       s.at("survivors").get<std::vector<std::string>>()});
  c.braids = j.at("braids").get<std::vector<std::string>>();
  c.knots = j.at("knots").get<std::vector<std::string>>();
  c.status = j.at("status").get<std::string>();
  return c;
}

std::string Certificate::markdown() const {
  std::ostringstream o;
  o << "# Case `" << case_name << "`\n\n";
  o << "Inputs: `" << inputs.dump() << "`\n\n";
  int i = 1;
  for (const CertStep& s : steps) {
    o << "## Step " << i++ << ": " << s.anchor << "\n\n";
    o << "_" << anchor_text(s.anchor) << "_\n\n";
    o << s.constraint << "\n\n";
    if (s.survivors.empty()) {
      o << "No survivors.\n\n";
    } else {
      for (const auto& v : s.survivors) o << "- `" << v << "`\n";
      o << "\n";
    }
  }
  o << "## Result\n\n| braid | knot |\n|---|---|\n";
  for (std::size_t k = 0; k < braids.size(); ++k)
    o << "| `" << braids[k] << "` | " << (k < knots.size() ? knots[k] : "") << " |\n";
  o << "\nStatus: **" << status << "**\n";
  return o.str();
}

Certificate replay(const Certificate& c) {
  if (c.case_name == "unknot")
    return enumerate_unknot_case(c.inputs.at("n_min").get<long long>(), c.inputs.at("n_max").get<long long>()).cert;
  if (c.case_name == "torus") return enumerate_torus_case(c.inputs.at("q_bound").get<long long>()).cert;
  if (c.case_name == "whitehead") return enumerate_whitehead_case().cert;
  throw std::invalid_argument("certificate: unknown case " + c.case_name);
}

// ---------------------------------------------------------------- knot names

std::string braid_to_knot(CaseKind c, const BraidWord& beta) {
  const ClassKey key = class_key(beta);
  if (c == CaseKind::Whitehead) {
    if (key == class_key(BraidWord::parse("x"))) return "Wh+T23_2";
    if (key == class_key(BraidWord::parse("X"))) return "Wh-T23_2";
    throw std::invalid_argument("braid_to_knot: " + word_text(beta) + " is not a certified whitehead-case braid");
  }
  auto direct = [](const BraidWord& b) -> std::optional<std::string> {
    const ClassKey k = class_key(b);
    if (k == class_key(BraidWord::parse("X"))) return "5_2";
    if (k == class_key(BraidWord::parse("xxxYxxy"))) return "15n43522";
    const long long n = k.exp - 1;
    if (k == class_key(power(Letter::x, n) * BraidWord::parse("Yxy")))
      return "P(-3,3," + std::to_string(2 * n + 1) + ")";
    return std::nullopt;
  };
  if (auto name = direct(beta)) return *name;
  // K for m(gamma) y is the mirror of K for gamma.
  if (auto name = direct(mirror(beta * BraidWord::parse("Y")))) return "mirror(" + *name + ")";
  throw std::invalid_argument("braid_to_knot: " + word_text(beta) + " is not a certified braid");
}

// ---------------------------------------------------------------- unknot case

std::vector<int> unknot_trace_cases(long long n, const TraceSolution& s) {
  const long long tr = (n + 3) + s.k_plus_l * (2 * n + 1);
  std::vector<int> out;
  if (s.e == 0 && tr == n + 2) out.push_back(1);
  if (s.e == 0 && tr == 2 - n) out.push_back(2);
  if (s.e == 1 && tr == n - 2) out.push_back(3);
  if (s.e == 1 && tr == -n - 2) out.push_back(4);
  return out;
}

std::vector<UnknotSporadic> unknot_sporadic_solutions() {
  // (k+l + shift)(2n+1) = c for cases 1, 3, 4.
  struct Eq {
    int case_no, e;
    long long shift, c;
  };
  const Eq eqs[] = {{1, 0, 0, -1}, {3, 1, 0, -5}, {4, 1, 1, -4}};
  std::vector<UnknotSporadic> out;
  for (const Eq& q : eqs)
    for (long long D = -std::llabs(q.c); D <= std::llabs(q.c); ++D) {
      if (D == 0 || D % 2 == 0 || q.c % D != 0) continue;
      out.push_back({q.case_no, (D - 1) / 2, q.c / D - q.shift, q.e});
    }
  return out;
}

namespace {

// Matrix with entries c0 + c1 n.
struct LinMat {
  std::array<std::array<long long, 2>, 4> m;
};

LinMat lin_mul(const LinMat& A, const Mat2& B) {
  auto comb = [](const std::array<long long, 2>& u, long long s, const std::array<long long, 2>& v, long long t) {
    return std::array<long long, 2>{u[0] * s + v[0] * t, u[1] * s + v[1] * t};
  };
  return {{comb(A.m[0], B.a, A.m[1], B.c), comb(A.m[0], B.b, A.m[1], B.d), comb(A.m[2], B.a, A.m[3], B.c),
           comb(A.m[2], B.b, A.m[3], B.d)}};
}

}  // namespace

bool unknot_family_symbolic_check() {
  // rho(x^n) = [[1, n], [0, 1]].
  LinMat xn{{{{1, 0}, {0, 1}, {0, 0}, {1, 0}}}};
  LinMat lhs = lin_mul(xn, rho(BraidWord::parse("Yxy")));
  // core(n) = [[n+1, 2n+1], [1, 2]], then y^{-(k+l)} with k+l = -1.
  LinMat core{{{{1, 1}, {1, 2}, {1, 0}, {2, 0}}}};
  LinMat rhs = lin_mul(core, lower(-1));
  if (lhs.m != rhs.m) return false;
  // trace 2 - n
  if (lhs.m[0][0] + lhs.m[3][0] != 2 || lhs.m[0][1] + lhs.m[3][1] != -1) return false;
  // exponent sum n + 1 lies in {n - 1, n + 1} for every n, and in
  // {-2, 0, 2} for n = +-1.
  for (long long n : {-1LL, 1LL}) {
    auto allowed = torus_closure_lengths(n);
    if (std::find(allowed.begin(), allowed.end(), n + 1) == allowed.end()) return false;
  }
  return true;
}

UnknotCaseResult enumerate_unknot_case(long long n_lo, long long n_hi) {
  if (n_lo > n_hi) throw std::invalid_argument("enumerate_unknot_case: empty window");
  UnknotCaseResult res;
  Certificate& c = res.cert;
  c.case_name = "unknot";
  c.inputs["n_min"] = n_lo;
  c.inputs["n_max"] = n_hi;

  CertStep factor{"(p,q,qbar,r) = (2n+1, 2, n+1, 1); W1 = word(core family 1), W2 = word(core family 2)",
                  "rho-factorization", {}};
  CertStep trace{"(-1)^e (n+3 + (k+l)(2n+1)) = 2 +- n", "trace-constraint", {}};
  CertStep pin{"12d + 6e + n - (k+l) in allowed lengths of T(2,n)", "pin-down-d", {}};
  CertStep fam2{"Delta^{4d+2e} W2 y^-(k+l) is a y-conjugate of reverse(Delta^{4d+2e} W1 y^-(k+l))",
                "reversal-duplicates", {}};
  std::vector<BraidWord> raw;

  for (long long n = n_lo; n <= n_hi; ++n) {
    CaseRow row;
    row.n = n;
    row.p = 2 * n + 1;
    row.q = 2;
    row.qbar = n + 1;
    row.r = 1;
    row.base = n + 3;
    row.modulus = 2 * n + 1;
    const FactorTemplate f1 = row.factor(1), f2 = row.factor(2);
    const BraidWord w1 = f1.core_word(), w2 = f2.core_word();
    factor.survivors.push_back("n=" + std::to_string(n) + " W1=" + word_text(w1) + " W2=" + word_text(w2));
    for (const TraceSolution& s : trace_solutions(row)) {
      std::vector<std::string> cases;
      for (int k : unknot_trace_cases(n, s)) cases.push_back(std::to_string(k));
      trace.survivors.push_back(sol_text(n, s) + " case " + join(cases, ","));
      for (long long d : pin_down_d(n, s.k_plus_l, s.e)) {
        BraidWord b1 = f1.conjugated_braid(s.k_plus_l, s.e, d);
        BraidWord b2 = f2.conjugated_braid(s.k_plus_l, s.e, d);
        if (rho(b1) != f1.instantiate(0, s.k_plus_l, s.e))
          throw std::logic_error("enumerate_unknot_case: template mismatch for " + word_text(b1));
        pin.survivors.push_back(sol_text(n, s) + " d=" + std::to_string(d) + " beta=" + word_text(b1));
        if (!same_class(b2, b1))
          throw std::logic_error("enumerate_unknot_case: second family not a reversal for n=" + std::to_string(n));
        fam2.survivors.push_back(word_text(b2) + " ~ " + word_text(b1));
        raw.push_back(b1);
      }
    }
  }

  std::vector<BraidWord> classes;
  CertStep canon{"canonical representative per class", "canonical-class", {}};
  canonicalize(raw, classes, canon);

  CertStep excl{"unknot_certificate on tau u beta; refuted classes are dropped", "trefoil-exclusion", {}};
  std::vector<std::string> refuted;
  for (const BraidWord& b : classes) {
    UnknotCertificate u = unknot_certificate(drop_last_cycle(tau_cable_unknot(b)));
    if (u.consistent) {
      res.braids.push_back(b);
      excl.survivors.push_back(word_text(b));
    } else {
      refuted.push_back(word_text(b) + " (" + u.witness + " = " + u.jones.canonical() + ")");
    }
  }
  if (!refuted.empty()) excl.constraint += "; refuted: " + join(refuted, ", ");

  CertStep sym{"rho(x^n y^-1 x y) = [[-n, 2n+1], [-1, 2]] = core(n) rho(y), trace 2-n, length n+1",
               "family-symbolic", {unknot_family_symbolic_check() ? "holds for all n" : "FAILED"}};

  c.steps = {factor, trace, pin, fam2, canon, excl, sym};
  c.braids = words_text(res.braids);
  for (const BraidWord& b : res.braids) c.knots.push_back(braid_to_knot(CaseKind::Unknot, b));
  c.status = sym.survivors[0] == "FAILED" ? "failed" : "consistent";
  return res;
}

// ---------------------------------------------------------------- torus case

std::vector<TorusCandidate> torus_lens_candidates(long long q_bound) {
  std::vector<TorusCandidate> out;
  for (long long Q = 2; Q <= q_bound; ++Q) {
    const long long P = Q + 1;
    for (int eps : {-1, 1}) {
      const long long r = P * Q + eps;
      bool ok;
      if (P % 2 == 1) {
        // -L(r, Q^2) = L(r, Q + eps), Q + eps odd.
        ok = murasugi_divisibility(r, Q + eps);
      } else {
        ok = murasugi_divisibility(r, Q * Q);
      }
      if (!ok) continue;
      const ClosedManifold L = ClosedManifold::lens(r, Q * Q);
      // eps = -1: lens at slope n; eps = +1: lens at slope n + 1 = PQ + 1.
      out.push_back({P, Q, eps, P % 2 == 1, L.parts().at(0), eps < 0 ? P * Q - 1 : P * Q});
    }
  }
  return out;
}

CaseRow torus_case_row(const TorusKnot& gamma, long long n) {
  CaseRow row;
  row.gamma = gamma;
  row.n = n;
  auto M = moser(gamma, Slope(2 * n + 1, 2));
  if (!M || M->kind() != ClosedManifold::Kind::Lens)
    throw std::invalid_argument("torus_case_row: (2n+1)/2 is not a lens slope on " + gamma.str());
  row.lens = *M;
  const Lens L = M->parts().at(0);
  row.p = L.p;
  row.q = L.q;
  const ModInverse mi = mod_inverse(L.q, L.p);
  row.qbar = mi.qbar;
  row.r = mi.r;
  row.base = row.q + row.qbar;
  row.modulus = row.p;
  return row;
}

std::vector<CaseRow> possible_torus_knots(long long q_bound) {
  std::vector<CaseRow> rows;
  for (const TorusCandidate& t : torus_lens_candidates(q_bound)) {
    const TorusKnot g(t.Q, t.P);
    rows.push_back(torus_case_row(g, t.n));
    const SurgeryProblem m = mirror_surgery({g, Slope(2 * t.n + 1, 2)});
    rows.push_back(torus_case_row(*m.torus, (m.slope.p - 1) / 2));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const CaseRow& a, const CaseRow& b) {
    return std::llabs(a.gamma->q) < std::llabs(b.gamma->q) ||
           (a.gamma->q == b.gamma->q && std::llabs(2 * a.n + 1) < std::llabs(2 * b.n + 1));
  });
  return rows;
}

namespace {

// T(2,m) whose double branched cover is the lens space L(P, Q).
std::optional<long long> two_bridge_torus_index(const Lens& L) {
  if (L.q == 1) return L.p;
  if (L.q == L.p - 1) return -L.p;
  return std::nullopt;
}

}  // namespace

TorusCaseResult enumerate_torus_case(long long q_bound) {
  TorusCaseResult res;
  Certificate& c = res.cert;
  c.case_name = "torus";
  c.inputs["q_bound"] = q_bound;

  CertStep pairs{"P = Q + 1; P odd: (Q+eps) | 2r +- 1; P even: Q^2 | 2r +- 1; r = PQ + eps", "torus-pairs", {}};
  for (const TorusCandidate& t : torus_lens_candidates(q_bound))
    pairs.survivors.push_back("P=" + std::to_string(t.P) + " Q=" + std::to_string(t.Q) + " eps=" +
                              std::to_string(t.eps) + " " + t.lens.str() + " n=" + std::to_string(t.n));

  res.rows = possible_torus_knots(q_bound);
  CertStep table{"lens = S^3_{(2n+1)/2}(gamma) = L(p,q), qbar = q^-1 mod p, trace (-1)^e (q+qbar + p(k+l))",
                 "trace-table", {}};
  CertStep trace{"(-1)^e (q+qbar + p(k+l)) = 2 +- n", "trace-constraint", {}};
  CertStep factor{"rho(y^k beta y^-k) = (-1)^e core [[1,0],[k+l,1]]; W = word(core)", "rho-factorization", {}};
  CertStep fam2{"family 2 braids are y-conjugates of reversed family 1 braids", "reversal-duplicates", {}};
  CertStep length{"closure of beta (slope n) or beta y^-1 (slope n+1) is T(2,m); its exponent sum is m +- 1",
                  "resolution-length", {}};
  std::vector<BraidWord> raw;

  for (const CaseRow& row : res.rows) {
    table.survivors.push_back(row.gamma_str() + " n=" + std::to_string(row.n) + " " + row.lens.str() +
                              " p=" + std::to_string(row.p) + " q=" + std::to_string(row.q) +
                              " qbar=" + std::to_string(row.qbar) + " tr=(-1)^e(" + std::to_string(row.base) +
                              "+" + std::to_string(row.modulus) + "(k+l))");
    const auto sols = trace_solutions(row);
    for (const TraceSolution& s : sols) {
      trace.survivors.push_back(row.gamma_str() + " " + sol_text(row.n, s));
      const FactorTemplate f1 = row.factor(1), f2 = row.factor(2);
      factor.survivors.push_back(row.gamma_str() + " W1=" + word_text(f1.core_word()) +
                                 " W2=" + word_text(f2.core_word()));
      for (long long m : {row.n, row.n + 1}) {
        auto M = moser(*row.gamma, Slope(m, 1));
        if (!M || M->kind() != ClosedManifold::Kind::Lens) continue;
        auto idx = two_bridge_torus_index(M->parts().at(0));
        if (!idx) continue;
        const long long shift = m == row.n ? 0 : -1;
        const long long offset = 6 * s.e + exponent_sum(f1.core_word()) - s.k_plus_l + shift;
        const auto allowed = torus_closure_lengths(*idx);
        for (long long d : solve_d(offset, allowed)) {
          BraidWord b1 = f1.conjugated_braid(s.k_plus_l, s.e, d);
          BraidWord b2 = f2.conjugated_braid(s.k_plus_l, s.e, d);
          if (rho(b1) != f1.instantiate(0, s.k_plus_l, s.e))
            throw std::logic_error("enumerate_torus_case: template mismatch");
          if (!same_class(b1, b2)) throw std::logic_error("enumerate_torus_case: family 2 not a reversal");
          fam2.survivors.push_back(word_text(b2) + " ~ " + word_text(b1));
          std::vector<std::string> lens_text;
          for (long long a : allowed) lens_text.push_back(std::to_string(a));
          length.survivors.push_back(row.gamma_str() + " slope " + std::to_string(m) + " -> " + M->str() +
                                     " = double cover of T(2," + std::to_string(*idx) + "); " +
                                     (shift ? "|beta y^-1|" : "|beta|") + " = 12d+" + std::to_string(offset) +
                                     " in {" + join(lens_text, ",") + "} -> d=" + std::to_string(d) +
                                     " beta=" + word_text(b1));
          raw.push_back(b1);
        }
      }
    }
  }
  std::vector<BraidWord> classes;
  CertStep canon{"canonical representative per class", "canonical-class", {}};
  canonicalize(raw, classes, canon);
  CertStep cert{"unknot_certificate on tau u beta", "unknot-certificate", {}};
  bool ok = true;
  for (const BraidWord& b : classes) {
    UnknotCertificate u = unknot_certificate(drop_last_cycle(tau_cable_unknot(b)));
    cert.survivors.push_back(word_text(b) + (u.consistent ? " consistent" : " refuted by " + u.witness));
    if (u.consistent) res.braids.push_back(b);
    ok = ok && u.consistent;
  }
  c.steps = {pairs, table, trace, factor, fam2, length, canon, cert};
  c.braids = words_text(res.braids);
  for (const BraidWord& b : res.braids) c.knots.push_back(braid_to_knot(CaseKind::Torus, b));
  c.status = ok ? "consistent" : "failed";
  return res;
}

// ---------------------------------------------------------------- whitehead case

WhiteheadCaseResult enumerate_whitehead_case() {
  WhiteheadCaseResult res;
  Certificate& c = res.cert;
  c.case_name = "whitehead";
  c.inputs = nlohmann::ordered_json::object();

  const FactorTemplate f{1, 1, 1, 0, 1};
  const BraidWord W = f.core_word();
  CertStep factor{"(p,q,qbar,r) = (1,1,1,0); both families coincide", "rho-factorization",
                  {"W=" + word_text(W)}};
  const auto sols = trace_solutions_for(f.q + f.qbar, f.p, {2});
  CertStep trace{"(-1)^e (k+l+2) = 2", "unlink-closure", {}};
  for (const TraceSolution& s : sols) trace.survivors.push_back(sol_text(0, s));
  CertStep pin{"closure is T(2,0): 12d + 6e + |W| - (k+l) in {-1, 1}", "pin-down-d", {}};
  std::vector<BraidWord> raw;
  for (const TraceSolution& s : sols)
    for (long long d : solve_d(6 * s.e + exponent_sum(W) - s.k_plus_l, torus_closure_lengths(0))) {
      BraidWord b = f.conjugated_braid(s.k_plus_l, s.e, d);
      if (rho(b) != f.instantiate(0, s.k_plus_l, s.e)) throw std::logic_error("enumerate_whitehead_case: template");
      pin.survivors.push_back("k+l=" + std::to_string(s.k_plus_l) + " e=" + std::to_string(s.e) +
                              " d=" + std::to_string(d) + " beta=" + word_text(b));
      raw.push_back(b);
    }
  std::vector<BraidWord> classes;
  CertStep canon{"canonical representative per class", "canonical-class", {}};
  canonicalize(raw, classes, canon);
  CertStep cert{"unknot_certificate on the second tangle filled with beta", "unknot-certificate", {}};
  bool ok = true;
  for (const BraidWord& b : classes) {
    UnknotCertificate u = unknot_certificate(drop_last_cycle(tau_cable_trefoil(b)));
    cert.survivors.push_back(word_text(b) + (u.consistent ? " consistent" : " refuted by " + u.witness));
    if (u.consistent) res.braids.push_back(b);
    ok = ok && u.consistent;
  }
  c.steps = {factor, trace, pin, canon, cert};
  c.braids = words_text(res.braids);
  for (const BraidWord& b : res.braids) c.knots.push_back(braid_to_knot(CaseKind::Whitehead, b));
  c.status = ok ? "consistent" : "failed";
  return res;
}

}  // namespace knotcert
