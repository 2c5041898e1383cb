#include "knotcert/surgery.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace knotcert {

TorusKnot::TorusKnot(long long a, long long b) {
  if (std::gcd(a, b) != 1) throw std::invalid_argument("torus knot: indices must be coprime");
  if (std::llabs(a) < 2 || std::llabs(b) < 2) throw std::invalid_argument("torus knot: trivial indices");
  if (std::llabs(a) > std::llabs(b)) std::swap(a, b);
  if (b < 0) {
    a = -a;
    b = -b;
  }
  p = a;
  q = b;
}

std::string TorusKnot::str() const { return "T(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

// Uses the smaller index squared in the denominator; the larger one gives a
// homeomorphic lens space with q replaced by its inverse.
std::optional<ClosedManifold> moser(const TorusKnot& K, const Slope& r) {
  const long long pq = K.p * K.q, p2 = K.p * K.p;
  if (r.q == 1) {
    if (r.p == pq - 1 || r.p == pq + 1) return surgery_on_unknot(Slope(r.p, p2));
    if (r.p == pq)
      return ClosedManifold::conn_sum(
          {surgery_on_unknot(Slope(K.p, K.q)), surgery_on_unknot(Slope(K.q, K.p))});
  }
  if (r.q == 2 && (r.p == 2 * pq - 1 || r.p == 2 * pq + 1)) return surgery_on_unknot(Slope(r.p, 2 * p2));
  return std::nullopt;
}

std::optional<ClosedManifold> evaluate(const SurgeryProblem& P) {
  if (!P.torus) return surgery_on_unknot(P.slope);
  return moser(*P.torus, P.slope);
}

SurgeryProblem mirror_surgery(const SurgeryProblem& P) {
  SurgeryProblem out;
  if (P.torus) out.torus = P.torus->mirror();
  out.slope = -P.slope;
  return out;
}

MontesinosTriple montesinos_triple(long long n) {
  return {n, Slope(2 * n + 1, 2), Slope(n, 1), Slope(n + 1, 1)};
}

std::vector<long long> half_integral_lens_constraint(const TorusKnot& K) {
  const long long pq = K.p * K.q;
  return {pq - 1, pq};
}

}  // namespace knotcert
