#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "knotcert/braid3.hpp"
#include "knotcert/lens.hpp"
#include "knotcert/surgery.hpp"

namespace knotcert {

// ---- braid classes up to reversal and conjugation by powers of y ----

struct ClassKey {
  long long exp = 0;
  Mat2 nf;
  auto operator<=>(const ClassKey&) const = default;
};
ClassKey class_key(const BraidWord& w);
bool same_class(const BraidWord& u, const BraidWord& v);
// Shortest member of the class, ties broken lexicographically with
// x < X < y < Y. Classes without a member of length <= 10 fall back to the
// best y-conjugate of w or reverse(w) found by a bounded search.
BraidWord canonical_word(const BraidWord& w);
// Length, then x < X < y < Y.
bool word_order_less(const BraidWord& u, const BraidWord& v);

// ---- factorization templates ----

// rho(beta) = (-1)^e [[1,0],[k,1]] M [[1,0],[l,1]] with M = [[qbar,p],[r,q]]
// (family 1) or [[q,p],[r,qbar]] (family 2), q*qbar = r*p + 1.
struct FactorTemplate {
  long long p = 1, q = 1, qbar = 1, r = 0;
  int family = 1;

  Mat2 core() const;
  BraidWord core_word() const;  // matrix_to_word(core())
  Mat2 instantiate(long long k, long long l, int e) const;
  // y^k beta y^-k = Delta^{4d+2e} W y^-(k+l).
  BraidWord conjugated_braid(long long k_plus_l, int e, long long d) const;
};

struct CaseRow {
  std::optional<TorusKnot> gamma;  // empty: unknot
  long long n = 0;
  ClosedManifold lens;
  long long p = 1, q = 1, qbar = 1, r = 0;
  // tr rho(beta) = (-1)^e (base + modulus (k+l))
  long long base = 0, modulus = 1;

  std::string gamma_str() const;
  FactorTemplate factor(int family) const;
  bool operator==(const CaseRow&) const = default;
};

struct TraceSolution {
  long long k_plus_l = 0;
  int e = 0;
  auto operator<=>(const TraceSolution&) const = default;
};
// Integer solutions of (-1)^e (base + modulus s) = 2 +- n.
std::vector<TraceSolution> trace_solutions(const CaseRow& row);
// Same equation against an explicit trace target set.
std::vector<TraceSolution> trace_solutions_for(long long base, long long modulus,
                                               const std::vector<long long>& targets);

// Exponent sums allowed for a 3-braid whose closure is the torus link
// T(2,m): {m-1, m+1}, or {-2,0,2} when m = +-1.
std::vector<long long> torus_closure_lengths(long long m);
// d with 12d + offset in allowed.
std::vector<long long> solve_d(long long offset, const std::vector<long long>& allowed);
// Unknot case: |beta| = 12d + 6e + n - (k+l) against T(2,n).
std::vector<long long> pin_down_d(long long n, long long k_plus_l, int e);

// ---- certificates ----

struct CertStep {
  std::string constraint;
  std::string anchor;
  std::vector<std::string> survivors;
};

struct Certificate {
  static constexpr const char* kSchema = "knotcert-certificate/1";

  std::string case_name;
  nlohmann::ordered_json inputs;
  std::vector<CertStep> steps;
  std::vector<std::string> braids;
  std::vector<std::string> knots;
  std::string status;

  nlohmann::ordered_json to_json() const;
  static Certificate from_json(const nlohmann::ordered_json& j);
  std::string markdown() const;
};

// Re-runs the case recorded in the certificate from its inputs.
Certificate replay(const Certificate& c);

// ---- the three cases ----

struct UnknotCaseResult {
  Certificate cert;
  std::vector<BraidWord> braids;  // canonical words
};
UnknotCaseResult enumerate_unknot_case(long long n_lo, long long n_hi);
inline UnknotCaseResult enumerate_unknot_case(long long window) {
  return enumerate_unknot_case(-window, window);
}

// Case numbers (1..4) met by a trace solution in the unknot case.
std::vector<int> unknot_trace_cases(long long n, const TraceSolution& s);
// All (n, k+l, e) for cases 1, 3, 4, which have finitely many n; case 2
// holds for every n with k+l = -1, e = 0.
struct UnknotSporadic {
  int case_no;
  long long n, k_plus_l;
  int e;
};
std::vector<UnknotSporadic> unknot_sporadic_solutions();
// rho(x^n y^-1 x y) with n symbolic equals core(n) * [[1,0],[-1,1]], has
// trace 2 - n and exponent sum n + 1 in the allowed set for T(2,n).
bool unknot_family_symbolic_check();

struct TorusCandidate {
  long long P, Q;
  int eps;
  bool odd_P;
  Lens lens;  // L(PQ + eps, Q^2)
  long long n;
};
// Lens spaces passing the braid-index divisibility tests, with P = Q + 1.
std::vector<TorusCandidate> torus_lens_candidates(long long q_bound);
// Table rows (gamma, n) including mirrors, ordered as the trace table.
std::vector<CaseRow> possible_torus_knots(long long q_bound);
CaseRow torus_case_row(const TorusKnot& gamma, long long n);

struct TorusCaseResult {
  Certificate cert;
  std::vector<BraidWord> braids;
  std::vector<CaseRow> rows;
};
TorusCaseResult enumerate_torus_case(long long q_bound = 50);

struct WhiteheadCaseResult {
  Certificate cert;
  std::vector<BraidWord> braids;
};
WhiteheadCaseResult enumerate_whitehead_case();

enum class CaseKind { Unknot, Torus, Whitehead };
// Knot name for a certified braid: unknot and torus cases share the first
// tangle, the whitehead case uses the second. Throws std::invalid_argument
// for braids outside the table.
std::string braid_to_knot(CaseKind c, const BraidWord& beta);

// Neutral anchor ids used in certificate steps.
struct Anchor {
  const char* id;
  const char* text;
};
const std::vector<Anchor>& anchor_registry();
const char* anchor_text(const std::string& id);

}  // namespace knotcert
