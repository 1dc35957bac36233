#ifndef GARSIDE_CATALOG_HPP
#define GARSIDE_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "garside/structure.hpp"

namespace garside {

struct CatalogOptions {
  bool allow_large = false;  // opt-in gate for G33/G34-scale groups
  std::size_t element_cap = 1'000'000;
};

struct CatalogEntry {
  std::string name;  // canonical addressable name
  std::string kind;  // classical | artin | corran-picantin | dual-sym |
                     // dual-exceptional | rank2 | alias
  StructurePtr structure;

  struct Flags {
    bool order2_atoms = true;
    bool distinct_hyperplanes = true;
    bool homogeneous = true;
    bool squarefree = true;
  } flags;

  struct Expected {
    bool balanced = true;
    bool lattice = true;
    bool lcm_garside = true;
    bool support_preserving = true;
    std::optional<bool> hypdual;
    std::optional<int> simples;
    std::optional<int> atoms;
    std::optional<int> delta_len;
  } expected;

  std::string redirect;  // alias target, when kind == "alias"
  std::vector<std::string> parabolic_representatives;  // rank2 metadata
};

CatalogEntry classical_braid(int n, const CatalogOptions& opt = {});
// type in {A, B, D} with a rank suffix, or I2(m)
CatalogEntry artin(const std::string& coxeter_type,
                   const CatalogOptions& opt = {});
CatalogEntry corran_picantin(int e, int n, const CatalogOptions& opt = {});
CatalogEntry dual_sym(int n, const CatalogOptions& opt = {});
// name in {G24, G27, G29, G33, G34} (the last two behind allow_large),
// or a path to a .refl data file
CatalogEntry dual_exceptional(const std::string& name,
                              const CatalogOptions& opt = {});
CatalogEntry rank2(const std::string& name, const CatalogOptions& opt = {});
// G25 -> artin:A3, G26 -> artin:B3, G32 -> artin:A4, G(de,1,n) -> artin:Bn
std::string shephard_alias(const std::string& name);

// dispatcher over addressable names:
//   braid:N | artin:XN | artin:I2(M) | cp:E,N | dualsym:N | dual:NAME |
//   rank2:NAME | alias:NAME | <path>.refl
CatalogEntry make_catalog(const std::string& name,
                          const CatalogOptions& opt = {});

std::vector<std::string> catalog_names();

}  // namespace garside

#endif
