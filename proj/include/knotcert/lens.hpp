#pragma once

#include <compare>
#include <string>
#include <vector>

namespace knotcert {

// L(p,q) with 0 < q < p.
struct Lens {
  long long p = 2, q = 1;
  auto operator<=>(const Lens&) const = default;
  std::string str() const;
};

class ClosedManifold {
 public:
  enum class Kind { S3, S1xS2, Lens, ConnSum };

  ClosedManifold() = default;
  static ClosedManifold s3() { return {}; }
  static ClosedManifold s1xs2();
  // Any coprime (p, q); p = +-1 gives S3, p = 0 gives S1xS2.
  static ClosedManifold lens(long long p, long long q);
  static ClosedManifold conn_sum(std::vector<ClosedManifold> summands);

  Kind kind() const { return kind_; }
  // Prime lens summands; a single entry for Kind::Lens.
  const std::vector<Lens>& parts() const { return parts_; }
  std::string str() const;

  bool operator==(const ClosedManifold&) const = default;

 private:
  Kind kind_ = Kind::S3;
  std::vector<Lens> parts_;
};

// p/q with q >= 0 and gcd 1; 1/0 is the only slope with q = 0.
struct Slope {
  long long p = 1, q = 0;
  Slope() = default;
  Slope(long long num, long long den);
  bool operator==(const Slope&) const = default;
  Slope operator-() const { return Slope(-p, q); }
  std::string str() const;
};

long long gcd_ll(long long a, long long b);

ClosedManifold surgery_on_unknot(const Slope& r);
ClosedManifold orientation_reverse(const ClosedManifold& M);

struct ModInverse {
  long long qbar;
  long long r;  // q * qbar = r * p + 1
};
ModInverse mod_inverse(long long q, long long p);

bool homeomorphic(const ClosedManifold& M, const ClosedManifold& N, bool oriented);
long long h1_order(const ClosedManifold& M);

// 2, 3, or 4 meaning "more than 3".
int murasugi_braid_index(long long r, long long s);
bool murasugi_divisibility(long long r, long long s);
// Same queries minimized over s' in {s, s^-1 mod r} with s' odd.
int murasugi_braid_index_closed(long long r, long long s);
bool murasugi_divisibility_closed(long long r, long long s);

}  // namespace knotcert
