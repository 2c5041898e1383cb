#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace knotcert {

// Exact Laurent polynomial in one or two variables with integer
// coefficients. When scale() == 2 the exponents of the first variable are
// stored doubled, so t^{1/2} has stored exponent 1.
class LaurentPoly {
 public:
  using Exp = std::array<int, 2>;

  explicit LaurentPoly(int nvars = 1, int scale = 1);
  static LaurentPoly constant(long long c, int nvars = 1, int scale = 1);
  // Exponents are in stored units.
  static LaurentPoly monomial(long long c, int e0, int e1 = 0, int nvars = 1, int scale = 1);
  // One-variable polynomial from dense coefficients starting at exponent lo.
  static LaurentPoly from_coeffs(const std::vector<long long>& coeffs, int lo = 0);

  int nvars() const { return nvars_; }
  int scale() const { return scale_; }
  const std::map<Exp, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long long coeff(int e0, int e1 = 0) const;
  void add_term(int e0, int e1, long long c);

  int min_exp(int var = 0) const;
  int max_exp(int var = 0) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly scaled(long long c) const;
  LaurentPoly shifted(int d0, int d1 = 0) const;
  LaurentPoly pow(int k) const;
  bool operator==(const LaurentPoly& o) const = default;

  // One variable, scale 1: substitute t -> t^{-1}.
  LaurentPoly inverted() const;
  // Sum of coefficients.
  long long eval_at_one() const;
  // |p(-1)|, with t^{1/2} -> i when scale() == 2.
  long long abs_eval_at_minus_one() const;
  // Converts a scale-2 polynomial with only even stored exponents to scale 1.
  LaurentPoly to_integral() const;

  // Readable form such as "2t^-1 - 3 + 2t" or "a^2z^-1 - z".
  std::string str(const std::vector<std::string>& names = {}) const;
  // Sorted exponent:coefficient pairs, e.g. "{-1:2, 0:-3, 1:2}".
  std::string canonical() const;

  // One variable; quotient when den divides num exactly.
  static std::optional<LaurentPoly> exact_div(const LaurentPoly& num, const LaurentPoly& den);

 private:
  int nvars_;
  int scale_;
  std::map<Exp, long long> terms_;
};

// Symmetric representative with positive value at 1. Throws if the input is
// not a unit multiple of a symmetric polynomial.
LaurentPoly normalize_alexander(const LaurentPoly& p);
// Equality up to multiplication by +-t^k.
bool equal_up_to_unit(const LaurentPoly& p, const LaurentPoly& q);

}  // namespace knotcert
