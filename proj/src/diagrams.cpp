#include "knotcert/diagrams.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace knotcert {

namespace {

struct UnionFind {
  std::map<int, int> parent;
  int find(int x) {
    auto it = parent.find(x);
    if (it == parent.end()) {
      parent[x] = x;
      return x;
    }
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

int over_in_slot(const Crossing& c) { return c.sign > 0 ? 3 : 1; }
int over_out_slot(const Crossing& c) { return c.sign > 0 ? 1 : 3; }

// label -> (crossing, slot) where the arc enters a crossing.
std::map<int, std::pair<int, int>> heads(const PDCode& pd) {
  std::map<int, std::pair<int, int>> h;
  for (int i = 0; i < static_cast<int>(pd.crossings.size()); ++i) {
    const Crossing& c = pd.crossings[i];
    for (int s : {0, over_in_slot(c)}) {
      if (!h.emplace(c.arcs[s], std::make_pair(i, s)).second)
        throw PDError("PD: arc " + std::to_string(c.arcs[s]) + " enters two crossings");
    }
  }
  return h;
}

int next_arc(const PDCode& pd, const std::pair<int, int>& head) {
  const Crossing& c = pd.crossings[head.first];
  return head.second == 0 ? c.arcs[2] : c.arcs[over_out_slot(c)];
}

int infer_sign(const std::array<int, 4>& a) {
  int j = a[1], l = a[3];
  if (j - l == 1) return 1;
  if (l - j == 1) return -1;
  return l - j > 1 ? 1 : -1;
}

}  // namespace

int PDCode::components() const { return static_cast<int>(component_cycles(*this).size()) + free_loops; }

PDCode parse_pd(std::string_view text) {
  PDCode pd;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r')) ++i;
  };
  auto fail = [&](const std::string& what) {
    throw PDError("PD parse error at offset " + std::to_string(i) + ": " + what);
  };
  auto read_int = [&] {
    skip_ws();
    std::size_t start = i;
    if (i < text.size() && text[i] == '-') ++i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (start == i || (i == start + 1 && text[start] == '-')) fail("expected integer");
    return std::stoi(std::string(text.substr(start, i - start)));
  };
  std::vector<bool> has_sign;
  skip_ws();
  while (i < text.size()) {
    skip_ws();
    if (i < text.size() && text[i] == 'O') {
      ++i;
      ++pd.free_loops;
    } else if (i < text.size() && text[i] == 'X') {
      ++i;
      skip_ws();
      if (i >= text.size() || text[i] != '[') fail("expected '['");
      ++i;
      Crossing c;
      for (int k = 0; k < 4; ++k) {
        c.arcs[k] = read_int();
        skip_ws();
        if (k < 3) {
          if (i >= text.size() || text[i] != ',') fail("expected ','");
          ++i;
        }
      }
      if (i >= text.size() || text[i] != ']') fail("expected ']'");
      ++i;
      skip_ws();
      bool sgn = false;
      if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        c.sign = text[i] == '+' ? 1 : -1;
        sgn = true;
        ++i;
      }
      pd.crossings.push_back(c);
      has_sign.push_back(sgn);
    } else {
      fail("expected 'X[' or 'O'");
    }
    skip_ws();
    if (i < text.size()) {
      if (text[i] != ',') fail("expected ','");
      ++i;
      skip_ws();
      if (i >= text.size()) fail("trailing ','");
    }
  }
  for (std::size_t k = 0; k < pd.crossings.size(); ++k)
    if (!has_sign[k]) pd.crossings[k].sign = infer_sign(pd.crossings[k].arcs);
  validate(pd);
  return pd;
}

std::string emit_pd(const PDCode& pd) {
  std::string s;
  for (const Crossing& c : pd.crossings) {
    if (!s.empty()) s += ",";
    s += "X[" + std::to_string(c.arcs[0]) + "," + std::to_string(c.arcs[1]) + "," + std::to_string(c.arcs[2]) +
         "," + std::to_string(c.arcs[3]) + "]" + (c.sign > 0 ? "+" : "-");
  }
  for (int k = 0; k < pd.free_loops; ++k) s += s.empty() ? "O" : ",O";
  return s;
}

void validate(const PDCode& pd) {
  if (pd.free_loops < 0) throw PDError("PD: negative free loop count");
  std::map<int, int> count;
  for (const Crossing& c : pd.crossings) {
    if (c.sign != 1 && c.sign != -1) throw PDError("PD: crossing sign must be +1 or -1");
    for (int a : c.arcs) ++count[a];
  }
  for (const auto& [a, n] : count)
    if (n != 2) throw PDError("PD: arc " + std::to_string(a) + " appears " + std::to_string(n) + " times");
  auto h = heads(pd);
  if (h.size() != count.size()) throw PDError("PD: orientation is inconsistent");

  // Planarity: every connected piece must satisfy V - E + F = 2 with E = 2V.
  const int n = static_cast<int>(pd.crossings.size());
  if (n == 0) return;
  std::map<int, std::vector<int>> darts;
  for (int i = 0; i < n; ++i)
    for (int s = 0; s < 4; ++s) darts[pd.crossings[i].arcs[s]].push_back(4 * i + s);
  std::vector<int> partner(4 * n);
  UnionFind uf;
  for (const auto& [a, ds] : darts) {
    partner[ds[0]] = ds[1];
    partner[ds[1]] = ds[0];
    uf.unite(ds[0] / 4, ds[1] / 4);
  }
  std::set<int> pieces;
  for (int i = 0; i < n; ++i) pieces.insert(uf.find(i));
  std::vector<bool> seen(4 * n, false);
  int faces = 0;
  for (int d = 0; d < 4 * n; ++d) {
    if (seen[d]) continue;
    ++faces;
    int e = d;
    while (!seen[e]) {
      seen[e] = true;
      int o = partner[e];
      e = 4 * (o / 4) + (o % 4 + 1) % 4;
    }
  }
  if (faces != n + 2 * static_cast<int>(pieces.size())) throw PDError("PD: diagram is not planar");
}

int writhe(const PDCode& pd) {
  int w = 0;
  for (const Crossing& c : pd.crossings) w += c.sign;
  return w;
}

std::vector<std::vector<int>> component_cycles(const PDCode& pd) {
  auto h = heads(pd);
  std::set<int> seen;
  std::vector<std::vector<int>> out;
  for (const auto& [start, unused] : h) {
    if (seen.count(start)) continue;
    std::vector<int> cyc;
    int e = start;
    while (!seen.count(e)) {
      seen.insert(e);
      cyc.push_back(e);
      auto it = h.find(e);
      if (it == h.end()) throw PDError("PD: arc without head");
      e = next_arc(pd, it->second);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

PDCode relabel(const PDCode& pd) {
  std::map<int, int> fresh;
  int next = 1;
  for (const auto& cyc : component_cycles(pd))
    for (int a : cyc) fresh[a] = next++;
  PDCode out = pd;
  for (Crossing& c : out.crossings)
    for (int& a : c.arcs) a = fresh.at(a);
  return out;
}

PDCode mirror(const PDCode& pd) {
  PDCode out = pd;
  for (Crossing& c : out.crossings) {
    const auto a = c.arcs;
    if (c.sign > 0)
      c.arcs = {a[3], a[0], a[1], a[2]};
    else
      c.arcs = {a[1], a[2], a[3], a[0]};
    c.sign = -c.sign;
  }
  return out;
}

PDCode sublink(const PDCode& pd, const std::vector<int>& keep) {
  const auto cycles = component_cycles(pd);
  const int ncyc = static_cast<int>(cycles.size());
  std::set<int> kept(keep.begin(), keep.end());
  for (int k : kept)
    if (k < 0 || k >= ncyc + pd.free_loops) throw PDError("sublink: component index out of range");
  std::map<int, int> comp;
  for (int i = 0; i < ncyc; ++i)
    for (int a : cycles[i]) comp[a] = i;

  UnionFind uf;
  std::vector<Crossing> remaining;
  for (const Crossing& c : pd.crossings) {
    bool under = kept.count(comp[c.arcs[0]]) > 0;
    bool over = kept.count(comp[c.arcs[1]]) > 0;
    if (under && over)
      remaining.push_back(c);
    else if (under)
      uf.unite(c.arcs[2], c.arcs[0]);
    else if (over)
      uf.unite(c.arcs[over_out_slot(c)], c.arcs[over_in_slot(c)]);
  }
  PDCode out;
  std::set<int> used;
  for (Crossing c : remaining) {
    for (int& a : c.arcs) {
      a = uf.find(a);
      used.insert(a);
    }
    out.crossings.push_back(c);
  }
  for (int i = 0; i < ncyc; ++i) {
    if (!kept.count(i)) continue;
    bool touches = false;
    for (int a : cycles[i]) touches = touches || used.count(uf.find(a)) > 0;
    if (!touches) ++out.free_loops;
  }
  for (int k : kept)
    if (k >= ncyc) ++out.free_loops;
  return relabel(out);
}

PDCode drop_last_cycle(const PDCode& pd) {
  const int ncyc = static_cast<int>(component_cycles(pd).size());
  if (ncyc == 0) throw PDError("drop_last_cycle: no component with crossings");
  std::vector<int> keep;
  for (int i = 0; i < ncyc - 1 + pd.free_loops; ++i) keep.push_back(i < ncyc - 1 ? i : i + 1);
  return sublink(pd, keep);
}

PDCode orient_planar(const std::vector<std::array<int, 4>>& rings, int free_loops, const std::vector<int>& seeds) {
  std::map<int, std::vector<std::pair<int, int>>> pos;
  for (int i = 0; i < static_cast<int>(rings.size()); ++i)
    for (int s = 0; s < 4; ++s) pos[rings[i][s]].push_back({i, s});
  for (const auto& [a, v] : pos)
    if (v.size() != 2) throw PDError("orient: arc " + std::to_string(a) + " does not appear twice");

  std::vector<int> order = seeds;
  for (const auto& [a, v] : pos) order.push_back(a);

  // incoming[i][s]: the arc at slot s points into crossing i.
  std::vector<std::array<bool, 4>> incoming(rings.size(), {false, false, false, false});
  std::map<int, int> fresh;
  int next = 1;
  for (int e0 : order) {
    if (!pos.count(e0) || fresh.count(e0)) continue;
    int e = e0;
    std::pair<int, int> dep = pos[e0][0];
    while (!fresh.count(e)) {
      fresh[e] = next++;
      const auto& v = pos[e];
      std::pair<int, int> arr = v[0] == dep ? v[1] : v[0];
      incoming[arr.first][arr.second] = true;
      dep = {arr.first, (arr.second + 2) % 4};
      e = rings[arr.first][dep.second];
    }
  }

  PDCode pd;
  pd.free_loops = free_loops;
  for (int i = 0; i < static_cast<int>(rings.size()); ++i) {
    int s0 = incoming[i][0] ? 0 : 2;
    Crossing c;
    for (int k = 0; k < 4; ++k) c.arcs[k] = fresh.at(rings[i][(s0 + k) % 4]);
    c.sign = incoming[i][(s0 + 1) % 4] ? -1 : 1;
    pd.crossings.push_back(c);
  }
  validate(pd);
  return pd;
}

namespace {

// Horizontal braid on n strands read left to right; position 0 is the top
// strand. Returns oriented crossings plus the final arc at each position.
struct BraidPiece {
  std::vector<Crossing> crossings;
  std::vector<int> ends;
};

BraidPiece braid_piece(const std::vector<Letter>& letters, std::vector<int> e, int& next) {
  BraidPiece bp;
  for (Letter l : letters) {
    int i = is_x(l) ? 0 : 1;
    if (i + 1 >= static_cast<int>(e.size())) throw std::invalid_argument("braid letter outside strand range");
    int ni = next++, nj = next++;
    Crossing c;
    if (sign(l) > 0)
      c = {{e[i + 1], nj, ni, e[i]}, 1};  // SW, SE, NE, NW
    else
      c = {{e[i], e[i + 1], nj, ni}, -1};  // NW, SW, SE, NE
    bp.crossings.push_back(c);
    e[i] = ni;
    e[i + 1] = nj;
  }
  bp.ends = e;
  return bp;
}

PDCode closure_n(const std::vector<Letter>& letters, int strands) {
  std::vector<int> start(strands);
  std::iota(start.begin(), start.end(), 1);
  int next = strands + 1;
  BraidPiece bp = braid_piece(letters, start, next);
  PDCode pd;
  std::map<int, int> ren;
  for (int j = 0; j < strands; ++j) {
    if (bp.ends[j] == start[j])
      ++pd.free_loops;
    else
      ren[bp.ends[j]] = start[j];
  }
  for (Crossing c : bp.crossings) {
    for (int& a : c.arcs)
      if (auto it = ren.find(a); it != ren.end()) a = it->second;
    pd.crossings.push_back(c);
  }
  return relabel(pd);
}

}  // namespace

PDCode braid_closure(const BraidWord& w) { return closure_n(w.letters(), 3); }

PDCode torus_2(int k) {
  return closure_n(std::vector<Letter>(static_cast<std::size_t>(std::abs(k)), k >= 0 ? Letter::x : Letter::X), 2);
}

// Columns of vertical twists joined side by side, closed over the top and
// under the bottom. A positive twist has its over strand on the "/" diagonal.
PDCode pretzel(int p1, int p2, int p3) {
  const int ps[3] = {p1, p2, p3};
  std::vector<std::array<int, 4>> rings;
  int next = 1;
  int tl[3], tr[3], bl[3], br[3];
  UnionFind uf;
  for (int j = 0; j < 3; ++j) {
    tl[j] = next++;
    tr[j] = next++;
    int left = tl[j], right = tr[j];
    for (int k = 0; k < std::abs(ps[j]); ++k) {
      int nl = next++, nr = next++;
      // NW=left, NE=right, SW=nl, SE=nr
      if (ps[j] > 0)
        rings.push_back({left, nl, nr, right});
      else
        rings.push_back({right, left, nl, nr});
      left = nl;
      right = nr;
    }
    bl[j] = left;
    br[j] = right;
  }
  for (int j = 0; j < 3; ++j) {
    uf.unite(tr[j], tl[(j + 1) % 3]);
    uf.unite(br[j], bl[(j + 1) % 3]);
  }
  std::set<int> used;
  for (auto& r : rings)
    for (int& a : r) {
      a = uf.find(a);
      used.insert(a);
    }
  std::set<int> loose;
  for (int j = 0; j < 3; ++j)
    for (int a : {tl[j], tr[j], bl[j], br[j]})
      if (!used.count(uf.find(a))) loose.insert(uf.find(a));
  return relabel(orient_planar(rings, static_cast<int>(loose.size())));
}

namespace {

struct TauTemplate {
  std::vector<std::array<int, 4>> rings;
  int L[3], R[3];
  std::vector<int> kappa;
};

const TauTemplate& tau_unknot_template() {
  static const TauTemplate t{
      {{19, 3, 14, 2}, {14, 7, 15, 8}, {15, 13, 16, 12}, {11, 17, 12, 16},
       {9, 18, 8, 17}, {1, 19, 2, 18}, {10, 4, 9, 5}, {6, 10, 5, 11}},
      {1, 4, 6},
      {3, 7, 13},
      {14, 15, 16, 17, 18, 19}};
  return t;
}

const TauTemplate& tau_trefoil_template() {
  static const TauTemplate t{
      {{33, 12, 28, 13}, {28, 1, 29, 2}, {29, 11, 30, 10}, {9, 31, 10, 30}, {3, 32, 2, 31},
       {14, 33, 13, 32}, {16, 4, 15, 3}, {21, 5, 20, 4}, {5, 23, 6, 24}, {6, 18, 7, 19},
       {26, 8, 25, 7}, {8, 26, 9, 27}, {22, 17, 21, 16}, {17, 22, 18, 23}, {25, 20, 24, 19}},
      {14, 15, 27},
      {12, 1, 11},
      {28, 29, 30, 31, 32, 33}};
  return t;
}

std::vector<std::array<int, 4>> unoriented_braid(const std::vector<Letter>& letters, std::vector<int>& e, int& next) {
  std::vector<std::array<int, 4>> out;
  for (Letter l : letters) {
    int i = is_x(l) ? 0 : 1;
    int ni = next++, nj = next++;
    if (sign(l) > 0)
      out.push_back({e[i + 1], nj, ni, e[i]});
    else
      out.push_back({e[i], e[i + 1], nj, ni});
    e[i] = ni;
    e[i + 1] = nj;
  }
  return out;
}

PDCode splice(const TauTemplate& t, const BraidWord& beta) {
  std::vector<std::array<int, 4>> rings = t.rings;
  int next = 0;
  for (const auto& r : rings)
    for (int a : r) next = std::max(next, a + 1);
  std::vector<int> e{t.L[0], t.L[1], t.L[2]};
  auto braid = unoriented_braid(beta.letters(), e, next);
  rings.insert(rings.end(), braid.begin(), braid.end());
  UnionFind uf;
  for (int k = 0; k < 3; ++k) uf.unite(e[k], t.R[k]);
  std::set<int> used;
  for (auto& r : rings)
    for (int& a : r) {
      a = uf.find(a);
      used.insert(a);
    }
  std::set<int> port_classes;
  for (int k = 0; k < 3; ++k) {
    port_classes.insert(uf.find(t.L[k]));
    port_classes.insert(uf.find(t.R[k]));
  }
  int free_loops = 0;
  for (int c : port_classes)
    if (!used.count(c)) ++free_loops;
  std::set<int> kappa;
  for (int a : t.kappa) kappa.insert(uf.find(a));
  std::vector<int> seeds;
  for (int a : used)
    if (!kappa.count(a)) seeds.push_back(a);
  for (int a : kappa) seeds.push_back(a);
  // kappa is seeded last, so it gets the largest labels and stays the last
  // component with crossings.
  return orient_planar(rings, free_loops, seeds);
}

}  // namespace

PDCode tau_cable_unknot(const BraidWord& beta) { return splice(tau_unknot_template(), beta); }
PDCode tau_cable_trefoil(const BraidWord& beta) { return splice(tau_trefoil_template(), beta); }

}  // namespace knotcert
