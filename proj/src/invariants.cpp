#include "knotcert/invariants.hpp"

#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace knotcert {

namespace {

void check_budget(const PDCode& pd, int budget, const char* what) {
  if (static_cast<int>(pd.crossings.size()) > budget)
    throw BudgetExceeded(std::string(what) + ": " + std::to_string(pd.crossings.size()) +
                         " crossings exceed the budget of " + std::to_string(budget));
}

int over_in_slot(const Crossing& c) { return c.sign > 0 ? 3 : 1; }
int over_out_slot(const Crossing& c) { return c.sign > 0 ? 1 : 3; }

}  // namespace

LaurentPoly kauffman_bracket(const PDCode& pd, int budget) {
  check_budget(pd, budget, "kauffman_bracket");
  const int n = static_cast<int>(pd.crossings.size());
  std::map<int, int> idx;
  for (const Crossing& c : pd.crossings)
    for (int a : c.arcs) idx.emplace(a, 0);
  int E = 0;
  for (auto& [a, i] : idx) i = E++;
  std::vector<std::array<int, 4>> cr;
  for (const Crossing& c : pd.crossings) cr.push_back({idx[c.arcs[0]], idx[c.arcs[1]], idx[c.arcs[2]], idx[c.arcs[3]]});

  // tally[na][loops]
  const int maxloops = E + pd.free_loops + 1;
  std::vector<long long> tally(static_cast<std::size_t>((n + 1) * (maxloops + 1)), 0);
  std::vector<int> parent(E);
  auto find = [&parent](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  const unsigned long long states = 1ULL << n;
  for (unsigned long long st = 0; st < states; ++st) {
    std::iota(parent.begin(), parent.end(), 0);
    int na = 0, merges = 0;
    auto join = [&](int u, int v) {
      u = find(u);
      v = find(v);
      if (u != v) {
        parent[u] = v;
        ++merges;
      }
    };
    for (int k = 0; k < n; ++k) {
      const auto& c = cr[k];
      if (((st >> k) & 1ULL) == 0) {
        ++na;
        join(c[0], c[1]);
        join(c[2], c[3]);
      } else {
        join(c[0], c[3]);
        join(c[1], c[2]);
      }
    }
    int loops = E - merges + pd.free_loops;
    ++tally[static_cast<std::size_t>(na * (maxloops + 1) + loops)];
  }
  // d = -A^2 - A^-2
  LaurentPoly d(1);
  d.add_term(2, 0, -1);
  d.add_term(-2, 0, -1);
  std::vector<LaurentPoly> dpow{LaurentPoly::constant(1)};
  LaurentPoly out(1);
  for (int na = 0; na <= n; ++na)
    for (int loops = 0; loops <= maxloops; ++loops) {
      long long cnt = tally[static_cast<std::size_t>(na * (maxloops + 1) + loops)];
      if (cnt == 0) continue;
      int k = std::max(loops - 1, 0);
      while (static_cast<int>(dpow.size()) <= k) dpow.push_back(dpow.back() * d);
      out += dpow[k].shifted(na - (n - na)).scaled(cnt);
    }
  return out;
}

LaurentPoly jones(const PDCode& pd, int budget) {
  LaurentPoly br = kauffman_bracket(pd, budget);
  const int w = writhe(pd);
  // (-A^3)^{-w} <D>, then A = t^{-1/4}: A^k -> stored exponent -k/2.
  LaurentPoly out(1, 2);
  const long long sgn = (w % 2 == 0) ? 1 : -1;
  for (const auto& [e, c] : br.terms()) {
    int k = e[0] - 3 * w;
    if (k % 2 != 0) throw InconsistencyError("jones: odd bracket exponent");
    out.add_term(-k / 2, 0, sgn * c);
  }
  return out;
}

BurauMat burau_reduced(const BraidWord& w) {
  const LaurentPoly one = LaurentPoly::constant(1), zero(1);
  const LaurentPoly t = LaurentPoly::monomial(1, 1), ti = LaurentPoly::monomial(1, -1);
  BurauMat B{{one, zero, zero, one}};
  for (Letter l : w.letters()) {
    BurauMat G;
    switch (l) {
      case Letter::x: G = {{-t, one, zero, one}}; break;
      case Letter::X: G = {{-ti, ti, zero, one}}; break;
      case Letter::y: G = {{one, zero, t, -t}}; break;
      case Letter::Y: G = {{one, zero, one, -ti}}; break;
    }
    const auto& m = B.m;
    const auto& g = G.m;
    B = {{m[0] * g[0] + m[1] * g[2], m[0] * g[1] + m[1] * g[3], m[2] * g[0] + m[3] * g[2],
          m[2] * g[1] + m[3] * g[3]}};
  }
  return B;
}

Mat2 burau_at_minus_one(const BurauMat& B) {
  long long v[4];
  for (int i = 0; i < 4; ++i) {
    long long s = 0;
    for (const auto& [e, c] : B.m[i].terms()) s += (e[0] % 2 == 0) ? c : -c;
    v[i] = s;
  }
  return {v[0], v[1], v[2], v[3]};
}

namespace {

int closure_components(const BraidWord& w) {
  int perm[3] = {0, 1, 2};
  for (Letter l : w.letters()) {
    int i = is_x(l) ? 0 : 1;
    std::swap(perm[i], perm[i + 1]);
  }
  int cycles = 0;
  bool seen[3] = {false, false, false};
  for (int s = 0; s < 3; ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (int j = s; !seen[j]; j = perm[j]) seen[j] = true;
  }
  return cycles;
}

}  // namespace

ClosureAlexander alexander_closure(const BraidWord& w) {
  BurauMat B = burau_reduced(w);
  const LaurentPoly one = LaurentPoly::constant(1);
  LaurentPoly det = (one - B.m[0]) * (one - B.m[3]) - B.m[1] * B.m[2];
  LaurentPoly cyc = LaurentPoly::from_coeffs({1, 1, 1});
  ClosureAlexander out;
  out.components = closure_components(w);
  out.knot = out.components == 1;
  auto q = LaurentPoly::exact_div(det, cyc);
  if (out.knot) {
    if (!q) throw InconsistencyError("alexander_closure: 1 + t + t^2 does not divide det(I - B)");
    out.poly = normalize_alexander(*q);
  } else {
    out.poly = q ? *q : det;
  }
  return out;
}

namespace {

// Dense polynomials in t with nonnegative exponents.
using Dense = std::vector<long long>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

long long ck_mul(long long u, long long v) {
  long long r;
  if (__builtin_mul_overflow(u, v, &r)) throw std::overflow_error("alexander: coefficient overflow");
  return r;
}

long long ck_add(long long u, long long v) {
  long long r;
  if (__builtin_add_overflow(u, v, &r)) throw std::overflow_error("alexander: coefficient overflow");
  return r;
}

Dense dmul(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = ck_add(r[i + j], ck_mul(a[i], b[j]));
  trim(r);
  return r;
}

Dense dsub(const Dense& a, const Dense& b) {
  Dense r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = ck_add(r[i], -b[i]);
  trim(r);
  return r;
}

Dense ddiv_exact(Dense num, const Dense& den) {
  if (num.empty()) return {};
  if (den.size() > num.size()) throw InconsistencyError("alexander: inexact Bareiss division");
  Dense q(num.size() - den.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    long long c = num[k + den.size() - 1];
    if (c % den.back() != 0) throw InconsistencyError("alexander: inexact Bareiss division");
    q[k] = c / den.back();
    for (std::size_t j = 0; j < den.size(); ++j) num[k + j] = ck_add(num[k + j], -ck_mul(q[k], den[j]));
  }
  trim(num);
  if (!num.empty()) throw InconsistencyError("alexander: inexact Bareiss division");
  trim(q);
  return q;
}

Dense bareiss(std::vector<std::vector<Dense>> M) {
  const std::size_t m = M.size();
  if (m == 0) return {1};
  Dense prev{1};
  long long sgn = 1;
  for (std::size_t k = 0; k + 1 < m; ++k) {
    if (M[k][k].empty()) {
      std::size_t r = k + 1;
      while (r < m && M[r][k].empty()) ++r;
      if (r == m) return {};
      std::swap(M[k], M[r]);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < m; ++j)
        M[i][j] = ddiv_exact(dsub(dmul(M[i][j], M[k][k]), dmul(M[i][k], M[k][j])), prev);
      M[i][k].clear();
    }
    prev = M[k][k];
  }
  Dense d = M[m - 1][m - 1];
  for (auto& c : d) c *= sgn;
  return d;
}

}  // namespace

LaurentPoly alexander_minor(const PDCode& pd) {
  const int n = static_cast<int>(pd.crossings.size());
  if (n == 0) return LaurentPoly::constant(pd.free_loops == 1 ? 1 : 0);
  if (pd.free_loops > 0) return LaurentPoly();
  std::map<int, int> parent;
  auto find = [&parent](int x) {
    parent.emplace(x, x);
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const Crossing& c : pd.crossings) {
    for (int a : c.arcs) find(a);
    parent[find(c.arcs[1])] = find(c.arcs[3]);
  }
  std::map<int, int> gen;
  for (auto& [a, p] : parent) gen.emplace(find(a), static_cast<int>(gen.size()));
  const int G = static_cast<int>(gen.size());
  if (n < G - 1) return LaurentPoly();

  std::vector<std::vector<Dense>> A(n, std::vector<Dense>(G));
  auto add = [&](int row, int arc, long long c0, long long c1) {
    Dense& e = A[row][gen[find(arc)]];
    e.resize(std::max<std::size_t>(e.size(), 2), 0);
    e[0] += c0;
    e[1] += c1;
    trim(e);
  };
  for (int r = 0; r < n; ++r) {
    const Crossing& c = pd.crossings[r];
    if (c.sign > 0) {
      add(r, c.arcs[0], 0, 1);
      add(r, c.arcs[1], 1, -1);
      add(r, c.arcs[2], -1, 0);
    } else {
      add(r, c.arcs[0], 1, 0);
      add(r, c.arcs[1], -1, 1);
      add(r, c.arcs[2], 0, -1);
    }
  }
  // Columns sum to zero, and one Wirtinger relation is redundant.
  for (auto& row : A) row.pop_back();
  if (n == G) A.pop_back();
  return LaurentPoly::from_coeffs(bareiss(A));
}

LaurentPoly alexander_pd(const PDCode& pd) {
  if (pd.components() != 1) throw std::invalid_argument("alexander_pd: diagram is not a knot");
  return normalize_alexander(alexander_minor(pd));
}

long long determinant(const PDCode& pd, int budget) {
  long long via_jones = jones(pd, budget).abs_eval_at_minus_one();
  long long via_alex = alexander_minor(pd).abs_eval_at_minus_one();
  if (via_jones != via_alex)
    throw InconsistencyError("determinant: |V(-1)| = " + std::to_string(via_jones) +
                             " but |Delta(-1)| = " + std::to_string(via_alex));
  return via_jones;
}

namespace {

class HomflySolver {
 public:
  HomflySolver() {
    a_ = LaurentPoly::monomial(1, 1, 0, 2);
    ai_ = LaurentPoly::monomial(1, -1, 0, 2);
    z_ = LaurentPoly::monomial(1, 0, 1, 2);
    delta_ = (a_ - ai_) * LaurentPoly::monomial(1, 0, -1, 2);
  }

  LaurentPoly eval(PDCode d) {
    remove_kinks(d);
    if (d.crossings.empty()) return unlink(d.free_loops);
    d = relabel(d);
    std::string key = emit_pd(d);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    LaurentPoly result(2);
    int bad = first_bad(d);
    if (bad < 0) {
      result = unlink(d.components());
    } else {
      const Crossing c = d.crossings[bad];
      PDCode switched = d;
      switched.crossings[bad] = flip(c);
      PDCode smoothed = smooth(d, bad);
      LaurentPoly ps = eval(switched), p0 = eval(smoothed);
      if (c.sign > 0)
        result = ai_ * ai_ * ps + ai_ * z_ * p0;  // P+ = a^-2 P- + a^-1 z P0
      else
        result = a_ * a_ * ps - a_ * z_ * p0;  // P- = a^2 P+ - a z P0
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  LaurentPoly a_{2}, ai_{2}, z_{2}, delta_{2};
  std::unordered_map<std::string, LaurentPoly> memo_;

  LaurentPoly unlink(int k) const {
    if (k <= 1) return LaurentPoly::constant(1, 2);
    return delta_.pow(k - 1);
  }

  static Crossing flip(const Crossing& c) {
    PDCode one;
    one.crossings = {c};
    return mirror(one).crossings[0];
  }

  static void rename(PDCode& d, int from, int to) {
    for (Crossing& c : d.crossings)
      for (int& a : c.arcs)
        if (a == from) a = to;
  }

  static void remove_kinks(PDCode& d) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < d.crossings.size() && !changed; ++i) {
        const Crossing c = d.crossings[i];
        for (int k = 0; k < 4; ++k) {
          if (c.arcs[k] != c.arcs[(k + 1) % 4]) continue;
          int s = (k + 2) % 4, t = (k + 3) % 4;
          bool s_in = s == 0 || s == over_in_slot(c);
          int in = s_in ? c.arcs[s] : c.arcs[t];
          int out = s_in ? c.arcs[t] : c.arcs[s];
          d.crossings.erase(d.crossings.begin() + static_cast<long>(i));
          if (in == out)
            ++d.free_loops;
          else
            rename(d, out, in);
          changed = true;
          break;
        }
      }
    }
  }

  // First crossing met from below, walking components from their base points.
  static int first_bad(const PDCode& d) {
    std::map<int, std::pair<int, int>> head;
    for (int i = 0; i < static_cast<int>(d.crossings.size()); ++i) {
      const Crossing& c = d.crossings[i];
      head[c.arcs[0]] = {i, 0};
      head[c.arcs[over_in_slot(c)]] = {i, over_in_slot(c)};
    }
    std::vector<bool> seen(d.crossings.size(), false);
    for (const auto& cyc : component_cycles(d))
      for (int a : cyc) {
        auto [i, slot] = head.at(a);
        if (seen[i]) continue;
        seen[i] = true;
        if (slot == 0) return i;
      }
    return -1;
  }

  static PDCode smooth(const PDCode& d, int i) {
    const Crossing c = d.crossings[i];
    PDCode out = d;
    out.crossings.erase(out.crossings.begin() + i);
    int in_u = c.arcs[0], out_u = c.arcs[2];
    int in_o = c.arcs[over_in_slot(c)], out_o = c.arcs[over_out_slot(c)];
    rename(out, out_o, in_u);
    if (out_u == in_u) out_u = in_u;
    rename(out, out_u, in_o);
    return out;
  }
};

LaurentPoly substitute_z(const LaurentPoly& P, bool jones_spec) {
  // a^j z^k -> t^{-j} (or 1) times (t^{1/2} - t^{-1/2})^k, clearing negative k first.
  int K = 0;
  for (const auto& [e, c] : P.terms()) K = std::max(K, -e[1]);
  LaurentPoly w(1, 2);
  w.add_term(1, 0, 1);
  w.add_term(-1, 0, -1);
  std::vector<LaurentPoly> wp{LaurentPoly::constant(1, 1, 2)};
  LaurentPoly acc(1, 2);
  for (const auto& [e, c] : P.terms()) {
    int k = e[1] + K;
    while (static_cast<int>(wp.size()) <= k) wp.push_back(wp.back() * w);
    acc += wp[k].shifted(jones_spec ? -2 * e[0] : 0).scaled(c);
  }
  if (K == 0) return acc;
  auto q = LaurentPoly::exact_div(acc, w.pow(K));
  if (!q) throw InconsistencyError("homfly specialization: inexact division");
  return *q;
}

}  // namespace

LaurentPoly homfly(const PDCode& pd, int budget) {
  check_budget(pd, budget, "homfly");
  HomflySolver solver;
  return solver.eval(pd);
}

LaurentPoly homfly_in_q(const LaurentPoly& P) {
  LaurentPoly w(2);
  w.add_term(0, 1, 1);
  w.add_term(0, -1, -1);
  LaurentPoly out(2);
  for (const auto& [e, c] : P.terms()) {
    if (e[1] < 0) throw std::domain_error("homfly_in_q: negative power of z");
    out += w.pow(e[1]).shifted(e[0], 0).scaled(c);
  }
  return out;
}

LaurentPoly homfly_to_jones(const LaurentPoly& P) { return substitute_z(P, true); }

LaurentPoly homfly_to_alexander(const LaurentPoly& P) {
  LaurentPoly r = substitute_z(P, false);
  for (const auto& [e, c] : r.terms())
    if (e[0] % 2 != 0) return r;
  return r.to_integral();
}

UnknotCertificate unknot_certificate(const PDCode& pd, int budget) {
  UnknotCertificate cert;
  if (pd.components() != 1) {
    cert.consistent = false;
    cert.witness = "components";
    return cert;
  }
  cert.jones = jones(pd, budget);
  cert.alexander = alexander_pd(pd);
  cert.det = determinant(pd, budget);
  if (cert.jones != LaurentPoly::constant(1, 1, 2)) {
    cert.consistent = false;
    cert.witness = "jones";
  } else if (cert.alexander != LaurentPoly::constant(1)) {
    cert.consistent = false;
    cert.witness = "alexander";
  } else if (cert.det != 1) {
    cert.consistent = false;
    cert.witness = "determinant";
  }
  return cert;
}

long long h1_from_trace(const BraidWord& w) {
  long long t = trace(rho(w));
  return t > 2 ? t - 2 : 2 - t;
}

}  // namespace knotcert
