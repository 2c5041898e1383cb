#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "knotcert/diagrams.hpp"

namespace knotcert {

struct CatalogError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CatalogEntry {
  std::string name;
  std::string pd;
  std::string note;
};

// Stored PD codes plus generated names:
//   unknot, T(2,k), P(a,b,c), mirror(NAME).
class Catalog {
 public:
  static const Catalog& builtin();
  // Throws CatalogError on malformed JSON, bad PD text or duplicate names.
  static Catalog from_json(std::string_view text);
  static Catalog from_file(const std::string& path);

  int version() const { return version_; }
  std::vector<std::string> stored_names() const;
  const CatalogEntry* entry(std::string_view name) const;
  bool contains(std::string_view name) const;
  // Throws std::out_of_range for unknown names.
  PDCode get(std::string_view name) const;

 private:
  int version_ = 0;
  std::map<std::string, CatalogEntry, std::less<>> entries_;
};

inline PDCode catalog(std::string_view name) { return Catalog::builtin().get(name); }

}  // namespace knotcert
