#include "knotcert/poly.hpp"

#include <cmath>
#include <stdexcept>

namespace knotcert {

namespace {

long long add_ck(long long u, long long v) {
  long long r;
  if (__builtin_add_overflow(u, v, &r)) throw std::overflow_error("LaurentPoly: coefficient overflow");
  return r;
}

long long mul_ck(long long u, long long v) {
  long long r;
  if (__builtin_mul_overflow(u, v, &r)) throw std::overflow_error("LaurentPoly: coefficient overflow");
  return r;
}

void require_same(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars() != b.nvars() || a.scale() != b.scale())
    throw std::invalid_argument("LaurentPoly: mismatched variables or scale");
}

std::string exp_text(int e, int scale) {
  if (scale == 1 || e % 2 == 0) return std::to_string(e / scale);
  return std::to_string(e) + "/2";
}

}  // namespace

LaurentPoly::LaurentPoly(int nvars, int scale) : nvars_(nvars), scale_(scale) {
  if (nvars < 1 || nvars > 2 || (scale != 1 && scale != 2))
    throw std::invalid_argument("LaurentPoly: unsupported shape");
}

LaurentPoly LaurentPoly::constant(long long c, int nvars, int scale) {
  LaurentPoly p(nvars, scale);
  p.add_term(0, 0, c);
  return p;
}

LaurentPoly LaurentPoly::monomial(long long c, int e0, int e1, int nvars, int scale) {
  LaurentPoly p(nvars, scale);
  p.add_term(e0, nvars == 1 ? 0 : e1, c);
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(const std::vector<long long>& coeffs, int lo) {
  LaurentPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(lo + static_cast<int>(i), 0, coeffs[i]);
  return p;
}

long long LaurentPoly::coeff(int e0, int e1) const {
  auto it = terms_.find({e0, e1});
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(int e0, int e1, long long c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace({e0, e1}, c);
  if (!fresh) {
    it->second = add_ck(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

int LaurentPoly::min_exp(int var) const {
  if (terms_.empty()) throw std::domain_error("min_exp of zero polynomial");
  int m = terms_.begin()->first[var];
  for (const auto& [e, c] : terms_) m = std::min(m, e[var]);
  return m;
}

int LaurentPoly::max_exp(int var) const {
  if (terms_.empty()) throw std::domain_error("max_exp of zero polynomial");
  int m = terms_.begin()->first[var];
  for (const auto& [e, c] : terms_) m = std::max(m, e[var]);
  return m;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  require_same(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e[0], e[1], c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  require_same(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e[0], e[1], -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  require_same(a, b);
  LaurentPoly r(a.nvars_, a.scale_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea[0] + eb[0], ea[1] + eb[1], mul_ck(ca, cb));
  return r;
}

LaurentPoly LaurentPoly::scaled(long long k) const {
  LaurentPoly r(nvars_, scale_);
  for (const auto& [e, c] : terms_) r.add_term(e[0], e[1], mul_ck(c, k));
  return r;
}

LaurentPoly LaurentPoly::shifted(int d0, int d1) const {
  LaurentPoly r(nvars_, scale_);
  for (const auto& [e, c] : terms_) r.terms_[{e[0] + d0, e[1] + d1}] = c;
  return r;
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("LaurentPoly::pow: negative exponent");
  LaurentPoly r = constant(1, nvars_, scale_), base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly r(nvars_, scale_);
  for (const auto& [e, c] : terms_) r.add_term(-e[0], e[1], c);
  return r;
}

long long LaurentPoly::eval_at_one() const {
  long long s = 0;
  for (const auto& [e, c] : terms_) s = add_ck(s, c);
  return s;
}

long long LaurentPoly::abs_eval_at_minus_one() const {
  if (nvars_ != 1) throw std::invalid_argument("abs_eval_at_minus_one: one variable only");
  long long re = 0, im = 0;
  for (const auto& [e, c] : terms_) {
    // scale 1: t^e -> (-1)^e; scale 2: (t^{1/2})^e -> i^e.
    int k = scale_ == 1 ? ((e[0] % 2 + 2) % 2) * 2 : ((e[0] % 4) + 4) % 4;
    switch (k) {
      case 0: re = add_ck(re, c); break;
      case 1: im = add_ck(im, c); break;
      case 2: re = add_ck(re, -c); break;
      case 3: im = add_ck(im, -c); break;
    }
  }
  if (im == 0) return re < 0 ? -re : re;
  if (re == 0) return im < 0 ? -im : im;
  long long n2 = add_ck(mul_ck(re, re), mul_ck(im, im));
  auto r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(n2))));
  if (r * r != n2) throw std::domain_error("abs_eval_at_minus_one: value is not an integer");
  return r;
}

LaurentPoly LaurentPoly::to_integral() const {
  if (scale_ == 1) return *this;
  LaurentPoly r(nvars_, 1);
  for (const auto& [e, c] : terms_) {
    if (e[0] % 2 != 0) throw std::domain_error("to_integral: half-integer exponent present");
    r.add_term(e[0] / 2, e[1], c);
  }
  return r;
}

std::string LaurentPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::vector<std::string> nm = names;
  if (nm.empty()) nm = nvars_ == 1 ? std::vector<std::string>{"t"} : std::vector<std::string>{"a", "z"};
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    long long a = c < 0 ? -c : c;
    if (first)
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    first = false;
    std::string mono;
    for (int v = 0; v < nvars_; ++v) {
      int ev = e[v];
      if (ev == 0) continue;
      int sc = v == 0 ? scale_ : 1;
      mono += nm[v];
      if (!(sc == 1 && ev == 1) && !(sc == 2 && ev == 2)) {
        std::string x = exp_text(ev, sc);
        mono += (x.find('/') != std::string::npos) ? "^(" + x + ")" : "^" + x;
      }
    }
    if (mono.empty())
      s += std::to_string(a);
    else
      s += (a == 1 ? "" : std::to_string(a)) + mono;
  }
  return s;
}

std::string LaurentPoly::canonical() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) s += ", ";
    first = false;
    if (nvars_ == 1)
      s += exp_text(e[0], scale_);
    else
      s += "(" + exp_text(e[0], scale_) + "," + std::to_string(e[1]) + ")";
    s += ":" + std::to_string(c);
  }
  return s + "}";
}

std::optional<LaurentPoly> LaurentPoly::exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  if (num.nvars_ != 1 || den.nvars_ != 1 || num.scale_ != den.scale_)
    throw std::invalid_argument("exact_div: one-variable polynomials of equal scale only");
  if (den.is_zero()) throw std::domain_error("exact_div: division by zero");
  if (num.is_zero()) return LaurentPoly(1, num.scale_);
  int dlo = den.min_exp(), dhi = den.max_exp();
  long long lead = den.coeff(dhi);
  LaurentPoly rem = num, quo(1, num.scale_);
  while (!rem.is_zero()) {
    int rhi = rem.max_exp();
    if (rhi - rem.min_exp() < dhi - dlo) return std::nullopt;
    long long c = rem.coeff(rhi);
    if (c % lead != 0) return std::nullopt;
    LaurentPoly m = monomial(c / lead, rhi - dhi, 0, 1, num.scale_);
    quo += m;
    rem -= m * den;
  }
  return quo;
}

LaurentPoly normalize_alexander(const LaurentPoly& p) {
  if (p.nvars() != 1 || p.scale() != 1) throw std::invalid_argument("normalize_alexander: one variable");
  if (p.is_zero()) return p;
  int lo = p.min_exp(), hi = p.max_exp();
  if ((lo + hi) % 2 != 0) throw std::domain_error("normalize_alexander: odd span");
  LaurentPoly q = p.shifted(-(lo + hi) / 2);
  if (q.eval_at_one() < 0) q = -q;
  if (!(q.inverted() == q)) throw std::domain_error("normalize_alexander: not symmetric");
  return q;
}

bool equal_up_to_unit(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  int d = q.min_exp() - p.min_exp();
  LaurentPoly s = p.shifted(d);
  return s == q || -s == q;
}

}  // namespace knotcert
