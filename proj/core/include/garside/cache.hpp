#ifndef GARSIDE_CACHE_HPP
#define GARSIDE_CACHE_HPP

#include <optional>
#include <string>

#include "garside/catalog.hpp"
#include "garside/parabolic.hpp"

namespace garside {

// Verification stamps carried by a structure cache.
struct CacheStamps {
  bool balanced = false;
  bool lattice = false;
  bool lcm_garside = false;
  bool support_preserving = false;
  std::string support_mode;
  unsigned long long support_seed = 0;
  int support_samples = 0;
  int support_length = 0;
  std::optional<bool> hypdual;
};

struct StructureCache {
  std::string catalog_name;
  CatalogEntry entry;
  CacheStamps stamps;
};

// canonical JSON document (sorted keys, deterministic tables)
std::string cache_to_json(const StructureCache& c);
void save_cache(const StructureCache& c, const std::string& path);

// Reloading rebuilds the structure from the recorded catalog name and checks
// that the canonical tables are identical to the stored ones.
StructureCache load_cache(const std::string& path, const CatalogOptions& opt = {});

// deterministic fingerprint of the structure tables
std::string structure_fingerprint(const GarsideStructure& gs);

}  // namespace garside

#endif
