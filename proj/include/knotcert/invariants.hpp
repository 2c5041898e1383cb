#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "knotcert/braid3.hpp"
#include "knotcert/diagrams.hpp"
#include "knotcert/poly.hpp"

namespace knotcert {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InconsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

inline constexpr int kBracketBudget = 16;
inline constexpr int kHomflyBudget = 12;

// <D> in the variable A with <O> = 1.
LaurentPoly kauffman_bracket(const PDCode& pd, int budget = kBracketBudget);
// V(t) with t^{1/2} stored as exponent 1 (scale 2); V(unknot) = 1.
LaurentPoly jones(const PDCode& pd, int budget = kBracketBudget);

// Reduced Burau: x -> [[-t,1],[0,1]], y -> [[1,0],[t,-t]].
struct BurauMat {
  std::array<LaurentPoly, 4> m;  // row-major
};
BurauMat burau_reduced(const BraidWord& w);
Mat2 burau_at_minus_one(const BurauMat& B);

struct ClosureAlexander {
  LaurentPoly poly;
  int components = 1;
  bool knot = true;  // poly is normalized only when true
};
ClosureAlexander alexander_closure(const BraidWord& w);

// Alexander-matrix minor, defined up to +-t^k; zero for split diagrams.
LaurentPoly alexander_minor(const PDCode& pd);
// Symmetric, Delta(1) = 1. Knots only.
LaurentPoly alexander_pd(const PDCode& pd);

// |V(-1)| and |Delta(-1)|, which must agree.
long long determinant(const PDCode& pd, int budget = kBracketBudget);

// HOMFLY in (a, z) under a P+ - a^-1 P- = z P0, P(unknot) = 1. Links carry
// negative powers of z.
LaurentPoly homfly(const PDCode& pd, int budget = kHomflyBudget);
// z = q - q^-1; defined when no negative z powers occur (knots).
LaurentPoly homfly_in_q(const LaurentPoly& P);
// a = t^-1, z = t^{1/2} - t^{-1/2}.
LaurentPoly homfly_to_jones(const LaurentPoly& P);
// a = 1, z = t^{1/2} - t^{-1/2}; returned with integral exponents when possible.
LaurentPoly homfly_to_alexander(const LaurentPoly& P);

struct UnknotCertificate {
  bool consistent = true;
  std::string witness;  // "jones", "alexander" or "determinant" when refuted
  LaurentPoly jones{1, 2};
  LaurentPoly alexander;
  long long det = 1;
};
UnknotCertificate unknot_certificate(const PDCode& pd, int budget = kBracketBudget);

long long h1_from_trace(const BraidWord& w);

}  // namespace knotcert
