#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knotcert/poly.hpp"

namespace knotcert {

// (maslov, alexander) -> dimension, zero entries never stored.
struct BigradedTable {
  std::map<std::pair<int, int>, int> dims;

  void add(int maslov, int alexander, int dim);
  int total() const;
  int dim_at_alexander(int a) const;
  bool operator==(const BigradedTable&) const = default;
};

struct ThinProfile {
  int genus = 0;
  std::vector<int> dims;  // alexander gradings -genus..genus
  int delta = 0;
  bool operator==(const ThinProfile&) const = default;
  std::string str() const;  // "(2,3,2)"
};

LaurentPoly alexander_from_table(const BigradedTable& T);
// Throw std::invalid_argument on an empty table.
int genus(const BigradedTable& T);
bool is_fibered(const BigradedTable& T);
bool is_nearly_fibered(const BigradedTable& T);
BigradedTable mirror_table(const BigradedTable& T);
std::optional<ThinProfile> validate_thin(const BigradedTable& T);

struct ThinQuery {
  int total_dim = 1;
  bool fibered = false;
  // Top inequality d_g <= d_{g-1} made strict (fibered knots only).
  bool strict = false;
  std::optional<int> genus;
  bool alexander_filter = true;  // |sum (-1)^a d_a| = 1
};
// Profiles sorted by genus, then lexicographically by dims. The delta field
// is left at 0: it is not constrained.
std::vector<ThinProfile> enumerate_thin_profiles(const ThinQuery& q);
std::vector<ThinProfile> enumerate_thin_profiles(int total_dim, bool fibered);
// Re-checks one profile against q.
bool profile_satisfies(const ThinProfile& p, const ThinQuery& q);

struct HfkRow {
  std::string knot;
  int det = 0;
  BigradedTable table;
};
// The stored table of genus-one nearly fibered knots.
const std::vector<HfkRow>& hfk_rows();
std::vector<HfkRow> parse_hfk_table(const std::string& json_text);
const HfkRow& hfk_row(const std::string& knot);

}  // namespace knotcert
