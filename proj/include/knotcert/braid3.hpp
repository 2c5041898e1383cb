#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knotcert/sl2z.hpp"

namespace knotcert {

// x = sigma_1 (top two strands), y = sigma_2. Negative values are inverses.
enum class Letter : std::int8_t { x = 1, X = -1, y = 2, Y = -2 };

inline Letter inverse(Letter l) { return static_cast<Letter>(-static_cast<int>(l)); }
inline int sign(Letter l) { return static_cast<int>(l) > 0 ? 1 : -1; }
inline bool is_x(Letter l) { return l == Letter::x || l == Letter::X; }
char to_char(Letter l);

// Freely reduced word in x, y and their inverses. Text form uses x X y Y.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(const std::vector<Letter>& raw);

  static BraidWord parse(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::string str() const;

  auto operator<=>(const BraidWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

BraidWord reduce(const std::vector<Letter>& raw);
BraidWord concat(const BraidWord& u, const BraidWord& v);
inline BraidWord operator*(const BraidWord& u, const BraidWord& v) { return concat(u, v); }
BraidWord inverse(const BraidWord& w);
BraidWord reverse(const BraidWord& w);
BraidWord mirror(const BraidWord& w);
BraidWord power(Letter l, long long k);
BraidWord conjugate_by_y(const BraidWord& w, long long a);
// Delta = xyx.
BraidWord delta_power(long long k);
long long exponent_sum(const BraidWord& w);

Mat2 rho(Letter l);
Mat2 rho(const BraidWord& w);

// d with w = Delta^{4d} when rho(w) is the identity.
std::optional<long long> kernel_power(const BraidWord& w);

// Equality in B_3: rho images and exponent sums agree.
bool same_element(const BraidWord& u, const BraidWord& v);

}  // namespace knotcert
