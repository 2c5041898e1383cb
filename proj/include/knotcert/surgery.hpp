#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotcert/lens.hpp"

namespace knotcert {

// T(p,q) with q > 0 and |p| < q; the sign of p records chirality.
struct TorusKnot {
  long long p = 2, q = 3;
  TorusKnot() = default;
  TorusKnot(long long a, long long b);
  bool operator==(const TorusKnot&) const = default;
  TorusKnot mirror() const { return TorusKnot(-p, q); }
  std::string str() const;
};

struct SurgeryProblem {
  std::optional<TorusKnot> torus;  // empty for the unknot
  Slope slope;
  bool operator==(const SurgeryProblem&) const = default;
};

// Lens space or reducible surgeries on torus knots; empty result for slopes
// outside pq, pq +- 1 and (2pq +- 1)/2.
std::optional<ClosedManifold> moser(const TorusKnot& K, const Slope& r);
std::optional<ClosedManifold> evaluate(const SurgeryProblem& P);

// S^3_{-r}(mirror K) = -S^3_r(K).
SurgeryProblem mirror_surgery(const SurgeryProblem& P);

struct MontesinosTriple {
  long long n;
  Slope half, zero_res, one_res;
};
MontesinosTriple montesinos_triple(long long n);

// The n with (2n+1)/2 a lens slope on K: {pq-1, pq}.
std::vector<long long> half_integral_lens_constraint(const TorusKnot& K);

}  // namespace knotcert
