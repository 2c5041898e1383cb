#include "knotcert/hfk.hpp"

#include <algorithm>
#include <functional>
#include <json.hpp>
#include <stdexcept>
#include <tuple>

#include "knotcert/embedded_data.hpp"

namespace knotcert {

void BigradedTable::add(int maslov, int alexander, int dim) {
  if (dim < 0) throw std::invalid_argument("BigradedTable: negative dimension");
  if (dim == 0) return;
  dims[{maslov, alexander}] += dim;
}

int BigradedTable::total() const {
  int s = 0;
  for (const auto& [k, d] : dims) s += d;
  return s;
}

int BigradedTable::dim_at_alexander(int a) const {
  int s = 0;
  for (const auto& [k, d] : dims)
    if (k.second == a) s += d;
  return s;
}

std::string ThinProfile::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
  return s + ")";
}

LaurentPoly alexander_from_table(const BigradedTable& T) {
  LaurentPoly p(1);
  for (const auto& [k, d] : T.dims) p.add_term(k.second, 0, (k.first % 2 == 0) ? d : -d);
  return p;
}

int genus(const BigradedTable& T) {
  if (T.dims.empty()) throw std::invalid_argument("genus: empty table");
  int g = 0;
  for (const auto& [k, d] : T.dims) g = std::max(g, k.second);
  return g;
}

bool is_fibered(const BigradedTable& T) { return T.dim_at_alexander(genus(T)) == 1; }

bool is_nearly_fibered(const BigradedTable& T) { return T.dim_at_alexander(genus(T)) == 2; }

BigradedTable mirror_table(const BigradedTable& T) {
  BigradedTable out;
  for (const auto& [k, d] : T.dims) out.add(-k.first, -k.second, d);
  return out;
}

std::optional<ThinProfile> validate_thin(const BigradedTable& T) {
  if (T.dims.empty()) return std::nullopt;
  const int delta = T.dims.begin()->first.first - T.dims.begin()->first.second;
  for (const auto& [k, d] : T.dims)
    if (k.first - k.second != delta) return std::nullopt;
  ThinProfile p;
  p.genus = genus(T);
  p.delta = delta;
  for (int a = -p.genus; a <= p.genus; ++a) p.dims.push_back(T.dim_at_alexander(a));
  return p;
}

bool profile_satisfies(const ThinProfile& p, const ThinQuery& q) {
  const int g = p.genus;
  if (g < 0 || static_cast<int>(p.dims.size()) != 2 * g + 1) return false;
  if (q.genus && *q.genus != g) return false;
  int sum = 0, alt = 0;
  for (int i = 0; i <= 2 * g; ++i) {
    if (p.dims[i] < 1 || p.dims[i] != p.dims[2 * g - i]) return false;
    sum += p.dims[i];
    alt += ((i - g) % 2 == 0) ? p.dims[i] : -p.dims[i];
  }
  if (sum != q.total_dim) return false;
  const int top = p.dims[2 * g];
  if (q.fibered ? top != 1 : top < 2) return false;
  if (g >= 1) {
    const int next = p.dims[2 * g - 1];
    if (top > next) return false;
    if (q.fibered && q.strict && top == next) return false;
  }
  if (q.alexander_filter && std::abs(alt) != 1) return false;
  return true;
}

std::vector<ThinProfile> enumerate_thin_profiles(const ThinQuery& q) {
  if (q.total_dim < 1 || q.total_dim % 2 == 0)
    throw std::invalid_argument("enumerate_thin_profiles: total dimension must be odd and positive");
  std::vector<ThinProfile> out;
  const int gmax = (q.total_dim - 1) / 2;
  for (int g = 0; g <= gmax; ++g) {
    if (q.genus && *q.genus != g) continue;
    // Choose d_0..d_g (the upper half); the rest is symmetric.
    std::vector<int> half(g + 1, 1);
    std::function<void(int, int)> rec = [&](int i, int remaining) {
      if (i > g) {
        if (remaining != 0) return;
        ThinProfile p;
        p.genus = g;
        for (int a = -g; a <= g; ++a) p.dims.push_back(half[std::abs(a)]);
        if (profile_satisfies(p, q)) out.push_back(p);
        return;
      }
      const int weight = i == 0 ? 1 : 2;
      for (int d = 1; d * weight <= remaining; ++d) {
        half[i] = d;
        rec(i + 1, remaining - d * weight);
      }
    };
    rec(0, q.total_dim);
  }
  std::sort(out.begin(), out.end(), [](const ThinProfile& a, const ThinProfile& b) {
    return std::tie(a.genus, a.dims) < std::tie(b.genus, b.dims);
  });
  return out;
}

std::vector<ThinProfile> enumerate_thin_profiles(int total_dim, bool fibered) {
  ThinQuery q;
  q.total_dim = total_dim;
  q.fibered = fibered;
  return enumerate_thin_profiles(q);
}

std::vector<HfkRow> parse_hfk_table(const std::string& json_text) {
  const auto j = nlohmann::json::parse(json_text);
  if (j.at("format").get<std::string>() != "knotcert-hfk-table")
    throw std::invalid_argument("hfk table: unexpected format tag");
  std::vector<HfkRow> rows;
  for (const auto& r : j.at("rows")) {
    HfkRow row;
    row.knot = r.at("knot").get<std::string>();
    row.det = r.at("det").get<int>();
    for (const auto& e : r.at("entries")) row.table.add(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>());
    rows.push_back(std::move(row));
  }
  return rows;
}

const std::vector<HfkRow>& hfk_rows() {
  static const std::vector<HfkRow> rows = parse_hfk_table(embedded::kHfkTableJson);
  return rows;
}

const HfkRow& hfk_row(const std::string& knot) {
  for (const HfkRow& r : hfk_rows())
    if (r.knot == knot) return r;
  throw std::out_of_range("hfk table: no row for " + knot);
}

}  // namespace knotcert
