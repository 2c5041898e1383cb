#include "knotcert/lens.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace knotcert {

namespace {

long long mod_pos(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

bool lens_equiv(const Lens& a, const Lens& b, bool oriented) {
  if (a.p != b.p) return false;
  long long p = a.p;
  long long qi = mod_inverse(a.q, p).qbar;
  if (b.q == a.q || b.q == qi) return true;
  if (oriented) return false;
  return b.q == mod_pos(-a.q, p) || b.q == mod_pos(-qi, p);
}

bool match_parts(const std::vector<Lens>& xs, std::vector<Lens> ys) {
  if (xs.size() != ys.size()) return false;
  // Few summands in practice; try every assignment.
  std::sort(ys.begin(), ys.end());
  do {
    bool ok = true;
    for (std::size_t i = 0; i < xs.size() && ok; ++i) ok = lens_equiv(xs[i], ys[i], true);
    if (ok) return true;
  } while (std::next_permutation(ys.begin(), ys.end()));
  return false;
}

}  // namespace

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

std::string Lens::str() const { return "L(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

ClosedManifold ClosedManifold::s1xs2() {
  ClosedManifold m;
  m.kind_ = Kind::S1xS2;
  return m;
}

ClosedManifold ClosedManifold::lens(long long p, long long q) {
  if (std::gcd(p, q) != 1 && !(p == 0 && (q == 1 || q == -1)))
    throw std::invalid_argument("lens: p and q must be coprime");
  if (p == 0) return s1xs2();
  if (p < 0) {
    p = -p;
    q = -q;
  }
  if (p == 1) return s3();
  ClosedManifold m;
  m.kind_ = Kind::Lens;
  m.parts_ = {Lens{p, mod_pos(q, p)}};
  return m;
}

ClosedManifold ClosedManifold::conn_sum(std::vector<ClosedManifold> summands) {
  std::vector<Lens> parts;
  for (const auto& s : summands) {
    if (s.kind_ == Kind::S1xS2) throw std::invalid_argument("conn_sum: only lens summands are supported");
    parts.insert(parts.end(), s.parts_.begin(), s.parts_.end());
  }
  std::sort(parts.begin(), parts.end());
  ClosedManifold m;
  if (parts.empty()) return m;
  m.kind_ = parts.size() == 1 ? Kind::Lens : Kind::ConnSum;
  m.parts_ = std::move(parts);
  return m;
}

std::string ClosedManifold::str() const {
  switch (kind_) {
    case Kind::S3: return "S3";
    case Kind::S1xS2: return "S1xS2";
    default: break;
  }
  std::string s;
  for (const auto& l : parts_) {
    if (!s.empty()) s += "#";
    s += l.str();
  }
  return s;
}

Slope::Slope(long long num, long long den) {
  if (num == 0 && den == 0) throw std::invalid_argument("slope 0/0");
  long long g = std::gcd(num, den);
  num /= g;
  den /= g;
  if (den < 0 || (den == 0 && num < 0)) {
    num = -num;
    den = -den;
  }
  p = num;
  q = den;
}

std::string Slope::str() const {
  if (q == 1) return std::to_string(p);
  return std::to_string(p) + "/" + std::to_string(q);
}

ClosedManifold surgery_on_unknot(const Slope& r) {
  if (r.q == 0) return ClosedManifold::s3();
  return ClosedManifold::lens(r.p, r.q);
}

ClosedManifold orientation_reverse(const ClosedManifold& M) {
  if (M.kind() == ClosedManifold::Kind::S3 || M.kind() == ClosedManifold::Kind::S1xS2) return M;
  std::vector<ClosedManifold> parts;
  for (const auto& l : M.parts()) parts.push_back(ClosedManifold::lens(l.p, -l.q));
  return ClosedManifold::conn_sum(parts);
}

ModInverse mod_inverse(long long q, long long p) {
  if (p < 1) throw std::invalid_argument("mod_inverse: p must be positive");
  if (std::gcd(q, p) != 1) throw std::invalid_argument("mod_inverse: q and p not coprime");
  // Extended Euclid on (q mod p, p).
  long long old_r = mod_pos(q, p), r = p, old_s = 1, s = 0;
  while (r != 0) {
    long long t = old_r / r;
    old_r -= t * r;
    std::swap(old_r, r);
    old_s -= t * s;
    std::swap(old_s, s);
  }
  long long qbar = p == 1 ? 0 : mod_pos(old_s, p);
  __int128 num = static_cast<__int128>(q) * qbar - 1;
  return {qbar, static_cast<long long>(num / p)};
}

bool homeomorphic(const ClosedManifold& M, const ClosedManifold& N, bool oriented) {
  if (M.kind() != N.kind()) return false;
  if (M.kind() == ClosedManifold::Kind::S3 || M.kind() == ClosedManifold::Kind::S1xS2) return true;
  if (match_parts(M.parts(), N.parts())) return true;
  if (oriented) return false;
  return match_parts(M.parts(), orientation_reverse(N).parts());
}

long long h1_order(const ClosedManifold& M) {
  switch (M.kind()) {
    case ClosedManifold::Kind::S3: return 1;
    case ClosedManifold::Kind::S1xS2: return 0;
    default: break;
  }
  long long n = 1;
  for (const auto& l : M.parts()) n *= l.p;
  return n;
}

namespace {

void check_rs(long long r, long long s) {
  if (s <= 0 || s >= r || s % 2 == 0) throw std::invalid_argument("murasugi: need 0 < s < r with s odd");
}

}  // namespace

int murasugi_braid_index(long long r, long long s) {
  check_rs(r, s);
  if (s == 1) return 2;
  // Family 1: s = 2c+3, r = d(2c+3) + 3c + 4.
  if (s >= 5) {
    long long c = (s - 3) / 2;
    long long rest = r - 3 * c - 4;
    if (rest > 0 && rest % s == 0) return 3;
  }
  // Family 2: s = 2c+1, r = d(2c+1) + c + 1.
  {
    long long c = (s - 1) / 2;
    long long rest = r - c - 1;
    if (rest > 0 && rest % s == 0) return 3;
  }
  return 4;
}

bool murasugi_divisibility(long long r, long long s) {
  check_rs(r, s);
  return (2 * r + 1) % s == 0 || (2 * r - 1) % s == 0;
}

namespace {

std::vector<long long> closed_candidates(long long r, long long s) {
  check_rs(r, s);
  std::vector<long long> out{s};
  if (std::gcd(r, s) == 1) {
    long long si = mod_inverse(s, r).qbar;
    if (si != s && si % 2 == 1 && si > 0) out.push_back(si);
  }
  return out;
}

}  // namespace

int murasugi_braid_index_closed(long long r, long long s) {
  int best = 4;
  for (long long c : closed_candidates(r, s)) best = std::min(best, murasugi_braid_index(r, c));
  return best;
}

bool murasugi_divisibility_closed(long long r, long long s) {
  for (long long c : closed_candidates(r, s))
    if (murasugi_divisibility(r, c)) return true;
  return false;
}

}  // namespace knotcert
