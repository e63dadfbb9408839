#include "minsurf/catalog.hpp"

#include <algorithm>
#include <numbers>

namespace minsurf {

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    constexpr Complex I{0.0, 1.0};
    std::vector<CatalogEntry> out;
    // lambda = 1 + |z|^2: l_r = 2 pi r (1 + r^2), R = 2, lambda(1-|z|^2) = 1 - |z|^4.
    out.push_back({"enneper",
                   "Enneper surface, p = 1, q = z",
                   Surface::from_pq(PowerSeries{1.0}, PowerSeries{0.0, 1.0}, "enneper"),
                   {{"R", 2.0}, {"sup", 1.0}, {"l_half", 1.25 * std::numbers::pi}}});
    // Identity embedding of the disk; attains the bound at 0.
    out.push_back({"planar",
                   "planar identity map, p = 1, q = 0",
                   Surface::from_pq(PowerSeries{1.0}, PowerSeries{0.0}, "planar"),
                   {{"R", 1.0}, {"sup", 1.0}}});
    // Constant data: lambda = |p0|(1 + |q0|^2) = 1.25 everywhere.
    out.push_back({"affine-tilt",
                   "tilted flat disk, p = 1, q = 0.5i",
                   Surface::from_pq(PowerSeries{1.0}, PowerSeries{0.5 * I}, "affine-tilt"),
                   {{"R", 1.25}, {"sup", 1.25}}});
    // Univalent non-affine planar map; no elementary closed form for R.
    out.push_back({"poly-demo",
                   "non-affine conformal planar map, p = 1 + 0.3z, q = 0",
                   Surface::from_pq(PowerSeries{1.0, 0.3}, PowerSeries{0.0}, "poly-demo"),
                   {}});
    return out;
  }();
  return entries;
}

const CatalogEntry* find_catalog_entry(const std::string& name) {
  const auto& entries = catalog();
  const auto it = std::find_if(entries.begin(), entries.end(),
                               [&](const CatalogEntry& e) { return e.name == name; });
  return it == entries.end() ? nullptr : &*it;
}

}  // namespace minsurf
