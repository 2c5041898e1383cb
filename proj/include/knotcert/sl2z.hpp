#pragma once

#include <array>
#include <compare>
#include <string>

namespace knotcert {

class BraidWord;

// 2x2 integer matrix. Images of rho have determinant 1; arithmetic throws
// std::overflow_error rather than wrapping.
struct Mat2 {
  long long a = 1, b = 0, c = 0, d = 1;

  static Mat2 identity() { return {}; }
  auto operator<=>(const Mat2&) const = default;
  std::string str() const;
};

Mat2 mul(const Mat2& A, const Mat2& B);
inline Mat2 operator*(const Mat2& A, const Mat2& B) { return mul(A, B); }
long long det(const Mat2& A);
long long trace(const Mat2& A);
Mat2 neg(const Mat2& A);
// Inverse of a determinant-1 matrix.
Mat2 inv(const Mat2& A);

// [[1,0],[k,1]]
Mat2 lower(long long k);
// [[1,k],[0,1]]
Mat2 upper(long long k);

// Returns w with rho(w) == M. Throws std::invalid_argument if det(M) != 1.
BraidWord matrix_to_word(const Mat2& M);

}  // namespace knotcert
