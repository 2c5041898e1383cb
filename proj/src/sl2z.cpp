#include "knotcert/sl2z.hpp"

#include <stdexcept>
#include <vector>

#include "knotcert/braid3.hpp"

namespace knotcert {

namespace {

long long checked_mul(long long u, long long v) {
  long long r;
  if (__builtin_mul_overflow(u, v, &r)) throw std::overflow_error("Mat2: integer overflow");
  return r;
}

long long checked_add(long long u, long long v) {
  long long r;
  if (__builtin_add_overflow(u, v, &r)) throw std::overflow_error("Mat2: integer overflow");
  return r;
}

long long sgn(long long v) { return (v > 0) - (v < 0); }

}  // namespace

std::string Mat2::str() const {
  return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" + std::to_string(c) + "," +
         std::to_string(d) + "]]";
}

Mat2 mul(const Mat2& A, const Mat2& B) {
  return {checked_add(checked_mul(A.a, B.a), checked_mul(A.b, B.c)),
          checked_add(checked_mul(A.a, B.b), checked_mul(A.b, B.d)),
          checked_add(checked_mul(A.c, B.a), checked_mul(A.d, B.c)),
          checked_add(checked_mul(A.c, B.b), checked_mul(A.d, B.d))};
}

long long det(const Mat2& A) { return checked_add(checked_mul(A.a, A.d), -checked_mul(A.b, A.c)); }
long long trace(const Mat2& A) { return checked_add(A.a, A.d); }
Mat2 neg(const Mat2& A) { return {-A.a, -A.b, -A.c, -A.d}; }
Mat2 inv(const Mat2& A) { return {A.d, -A.b, -A.c, A.a}; }
Mat2 lower(long long k) { return {1, 0, k, 1}; }
Mat2 upper(long long k) { return {1, k, 0, 1}; }

// Column reduction. Left-multiplying by rho(x^-q) subtracts q*(row 2) from row 1,
// and rho(y^q) subtracts q*(row 1) from row 2, so the letters collected here
// spell M left to right. Quotients truncate toward zero; an exact x-step
// quotient (only possible when |c| = 1) is backed off so that a becomes 1.
BraidWord matrix_to_word(const Mat2& M) {
  if (det(M) != 1) throw std::invalid_argument("matrix_to_word: determinant is not 1");
  long long a = M.a, b = M.b, c = M.c, d = M.d;
  std::vector<Letter> out;
  auto emit = [&out](Letter l, long long k) {
    if (k < 0) {
      l = inverse(l);
      k = -k;
    }
    for (long long i = 0; i < k; ++i) out.push_back(l);
  };
  while (c != 0) {
    long long q = a / c;
    if (a - q * c == 0) q -= sgn(c);
    a -= q * c;
    b -= q * d;
    emit(Letter::x, q);
    q = c / a;
    c -= q * a;
    d -= q * b;
    emit(Letter::Y, q);
  }
  // Now [[a,b],[0,a]] with a = +-1; -I is rho(Delta^2).
  if (a == 1) {
    emit(Letter::x, b);
    return reduce(out);
  }
  emit(Letter::x, -b);
  return delta_power(2) * reduce(out);
}

}  // namespace knotcert
