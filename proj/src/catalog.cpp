#include "knotcert/catalog.hpp"

#include <fstream>
#include <json.hpp>
#include <regex>
#include <sstream>

#include "knotcert/embedded_data.hpp"

namespace knotcert {

const Catalog& Catalog::builtin() {
  static const Catalog c = from_json(embedded::kCatalogJson);
  return c;
}

Catalog Catalog::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw CatalogError(std::string("catalog: ") + e.what());
  }
  Catalog c;
  try {
    if (j.at("format").get<std::string>() != "knotcert-catalog")
      throw CatalogError("catalog: unexpected format tag");
    c.version_ = j.at("version").get<int>();
    for (const auto& k : j.at("knots")) {
      CatalogEntry e{k.at("name").get<std::string>(), k.at("pd").get<std::string>(),
                     k.value("note", std::string())};
      try {
        parse_pd(e.pd);
      } catch (const PDError& err) {
        throw CatalogError("catalog: entry " + e.name + ": " + err.what());
      }
      if (!c.entries_.emplace(e.name, e).second)
        throw CatalogError("catalog: duplicate entry " + e.name);
    }
  } catch (const nlohmann::json::exception& e) {
    throw CatalogError(std::string("catalog: ") + e.what());
  }
  return c;
}

Catalog Catalog::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("catalog: cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

std::vector<std::string> Catalog::stored_names() const {
  std::vector<std::string> out;
  for (const auto& [name, e] : entries_) out.push_back(name);
  return out;
}

const CatalogEntry* Catalog::entry(std::string_view name) const {
  auto it = entries_.find(name);
  return it == entries_.end() ? nullptr : &it->second;
}

bool Catalog::contains(std::string_view name) const {
  try {
    get(name);
    return true;
  } catch (const std::out_of_range&) {
    return false;
  }
}

PDCode Catalog::get(std::string_view name) const {
  if (const CatalogEntry* e = entry(name)) return parse_pd(e->pd);
  if (name == "unknot") {
    PDCode pd;
    pd.free_loops = 1;
    return pd;
  }
  static const std::regex torus(R"(T\(2,(-?\d+)\))");
  static const std::regex pretz(R"(P\((-?\d+),(-?\d+),(-?\d+)\))");
  std::string s(name);
  std::smatch m;
  if (std::regex_match(s, m, torus)) return torus_2(std::stoi(m[1]));
  if (std::regex_match(s, m, pretz)) return pretzel(std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]));
  if (s.size() > 8 && s.starts_with("mirror(") && s.back() == ')')
    return mirror(get(s.substr(7, s.size() - 8)));
  throw std::out_of_range("catalog: unknown knot " + s);
}

}  // namespace knotcert
