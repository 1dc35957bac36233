#include "garside/cache.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "garside/element.hpp"

namespace garside {

std::string structure_fingerprint(const GarsideStructure& gs) {
  // FNV-1a over the canonical member list (words + lengths) and tau table
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](int v) {
    for (int i = 0; i < 4; ++i) {
      h ^= (std::uint64_t)((v >> (8 * i)) & 0xff);
      h *= 1099511628211ull;
    }
  };
  mix(gs.num_simples());
  mix(gs.num_atoms());
  for (int s = 0; s < gs.num_simples(); ++s) {
    mix(gs.length(s));
    for (int a : gs.word_of(s)) mix(a);
    mix(-1);
    mix(gs.tau(s));
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

std::string cache_to_json(const StructureCache& c) {
  const auto& gs = *c.entry.structure;
  nlohmann::json j;
  j["schema"] = "garside-cache-v1";
  j["catalog"] = c.catalog_name;
  j["group"] = {{"family", c.entry.kind}, {"order", gs.group().order()}};
  j["atom_names"] = nlohmann::json::array();
  for (int a = 0; a < gs.num_atoms(); ++a) j["atom_names"].push_back(gs.atom_name(a));
  j["apex"] = gs.delta_simple();
  nlohmann::json members = nlohmann::json::array();
  for (int s = 0; s < gs.num_simples(); ++s) {
    nlohmann::json m;
    m["len"] = gs.length(s);
    m["w"] = word_str(gs, gs.word_of(s));
    members.push_back(m);
  }
  j["members"] = members;
  nlohmann::json tau = nlohmann::json::array();
  for (int s = 0; s < gs.num_simples(); ++s) tau.push_back(gs.tau(s));
  j["tau"] = tau;
  j["stamps"] = {
      {"balanced", c.stamps.balanced},
      {"lattice", c.stamps.lattice},
      {"lcm_garside", c.stamps.lcm_garside},
      {"support_preserving", c.stamps.support_preserving},
      {"support_mode", c.stamps.support_mode},
      {"support_seed", c.stamps.support_seed},
      {"support_samples", c.stamps.support_samples},
      {"support_length", c.stamps.support_length},
  };
  if (c.stamps.hypdual) j["stamps"]["hypdual"] = *c.stamps.hypdual;
  j["fingerprint"] = structure_fingerprint(gs);
  return j.dump(2);
}

void save_cache(const StructureCache& c, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write cache: " + path);
  f << cache_to_json(c) << "\n";
}

StructureCache load_cache(const std::string& path, const CatalogOptions& opt) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open cache: " + path);
  nlohmann::json j;
  f >> j;
  if (j.value("schema", "") != "garside-cache-v1")
    throw std::runtime_error("unrecognized cache schema in " + path);
  StructureCache c;
  c.catalog_name = j.at("catalog").get<std::string>();
  c.entry = make_catalog(c.catalog_name, opt);
  if (j.at("fingerprint").get<std::string>() !=
      structure_fingerprint(*c.entry.structure))
    throw std::runtime_error(
        "cache tables differ from a fresh rebuild; refusing stale cache " +
        path);
  const auto& st = j.at("stamps");
  c.stamps.balanced = st.value("balanced", false);
  c.stamps.lattice = st.value("lattice", false);
  c.stamps.lcm_garside = st.value("lcm_garside", false);
  c.stamps.support_preserving = st.value("support_preserving", false);
  c.stamps.support_mode = st.value("support_mode", "");
  c.stamps.support_seed = st.value("support_seed", 0ull);
  c.stamps.support_samples = st.value("support_samples", 0);
  c.stamps.support_length = st.value("support_length", 0);
  if (st.contains("hypdual")) c.stamps.hypdual = st["hypdual"].get<bool>();
  return c;
}

}  // namespace garside
