#pragma once

#include <map>
#include <string>
#include <vector>

#include "minsurf/surface.hpp"

namespace minsurf {

struct CatalogEntry {
  std::string name;
  std::string description;
  Surface surface;
  /// Reference values from closed forms, keyed by quantity ("R", "sup", ...).
  std::map<std::string, double> closed_forms;
};

/// Built-in surfaces, names unique.
const std::vector<CatalogEntry>& catalog();

/// nullptr when the name is unknown.
const CatalogEntry* find_catalog_entry(const std::string& name);

}  // namespace minsurf
