#include "knotcert/braid3.hpp"

#include <stdexcept>

namespace knotcert {

char to_char(Letter l) {
  switch (l) {
    case Letter::x: return 'x';
    case Letter::X: return 'X';
    case Letter::y: return 'y';
    case Letter::Y: return 'Y';
  }
  return '?';
}

BraidWord::BraidWord(const std::vector<Letter>& raw) {
  letters_.reserve(raw.size());
  for (Letter l : raw) {
    if (!letters_.empty() && letters_.back() == inverse(l))
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

BraidWord BraidWord::parse(std::string_view text) {
  std::vector<Letter> raw;
  if (text == "1") return {};
  for (char ch : text) {
    switch (ch) {
      case 'x': raw.push_back(Letter::x); break;
      case 'X': raw.push_back(Letter::X); break;
      case 'y': raw.push_back(Letter::y); break;
      case 'Y': raw.push_back(Letter::Y); break;
      case ' ': break;
      default:
        throw std::invalid_argument(std::string("braid word: unexpected character '") + ch + "'");
    }
  }
  return BraidWord(raw);
}

std::string BraidWord::str() const {
  std::string s;
  for (Letter l : letters_) s += to_char(l);
  return s;
}

BraidWord reduce(const std::vector<Letter>& raw) { return BraidWord(raw); }

BraidWord concat(const BraidWord& u, const BraidWord& v) {
  std::vector<Letter> raw = u.letters();
  raw.insert(raw.end(), v.letters().begin(), v.letters().end());
  return BraidWord(raw);
}

BraidWord inverse(const BraidWord& w) {
  std::vector<Letter> raw(w.letters().rbegin(), w.letters().rend());
  for (Letter& l : raw) l = inverse(l);
  return BraidWord(raw);
}

BraidWord reverse(const BraidWord& w) {
  return BraidWord(std::vector<Letter>(w.letters().rbegin(), w.letters().rend()));
}

BraidWord mirror(const BraidWord& w) {
  std::vector<Letter> raw = w.letters();
  for (Letter& l : raw) l = inverse(l);
  return BraidWord(raw);
}

BraidWord power(Letter l, long long k) {
  if (k < 0) {
    l = inverse(l);
    k = -k;
  }
  return BraidWord(std::vector<Letter>(static_cast<std::size_t>(k), l));
}

BraidWord conjugate_by_y(const BraidWord& w, long long a) {
  return power(Letter::y, a) * w * power(Letter::y, -a);
}

BraidWord delta_power(long long k) {
  std::vector<Letter> raw;
  const Letter cyc[3] = {Letter::x, Letter::y, Letter::x};
  long long n = k < 0 ? -k : k;
  for (long long i = 0; i < n; ++i)
    for (Letter l : cyc) raw.push_back(l);
  BraidWord w(raw);
  return k < 0 ? inverse(w) : w;
}

long long exponent_sum(const BraidWord& w) {
  long long s = 0;
  for (Letter l : w.letters()) s += sign(l);
  return s;
}

Mat2 rho(Letter l) {
  switch (l) {
    case Letter::x: return {1, 1, 0, 1};
    case Letter::X: return {1, -1, 0, 1};
    case Letter::y: return {1, 0, -1, 1};
    case Letter::Y: return {1, 0, 1, 1};
  }
  return {};
}

Mat2 rho(const BraidWord& w) {
  Mat2 M;
  for (Letter l : w.letters()) M = M * rho(l);
  return M;
}

std::optional<long long> kernel_power(const BraidWord& w) {
  if (rho(w) != Mat2::identity()) return std::nullopt;
  long long e = exponent_sum(w);
  if (e % 12 != 0) throw std::logic_error("kernel_power: rho(w) = I but exponent sum not divisible by 12");
  return e / 12;
}

bool same_element(const BraidWord& u, const BraidWord& v) {
  return exponent_sum(u) == exponent_sum(v) && rho(u) == rho(v);
}

}  // namespace knotcert
