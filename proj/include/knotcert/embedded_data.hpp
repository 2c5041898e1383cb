#pragma once

namespace knotcert::embedded {

// Copies of data/catalog.json and data/hfk_genus_one.json baked in at build time.
extern const char* const kCatalogJson;
extern const char* const kHfkTableJson;

}  // namespace knotcert::embedded
