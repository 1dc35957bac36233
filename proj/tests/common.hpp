#ifndef GARSIDE_TESTS_COMMON_HPP
#define GARSIDE_TESTS_COMMON_HPP

#include <map>
#include <random>
#include <string>

#include "garside/catalog.hpp"
#include "garside/element.hpp"

namespace testutil {

// memoized catalog entries: structures are immutable, so tests share them
inline const garside::CatalogEntry& cat(const std::string& name) {
  static std::map<std::string, garside::CatalogEntry> pool;
  auto it = pool.find(name);
  if (it == pool.end()) it = pool.emplace(name, garside::make_catalog(name)).first;
  return it->second;
}

inline garside::Element random_positive(const garside::GarsideStructure& gs,
                                        std::mt19937_64& rng, int max_len) {
  int len = 1 + (int)(rng() % (unsigned)max_len);
  std::vector<int> w(len);
  for (int& a : w) a = (int)(rng() % (unsigned)gs.num_atoms());
  return garside::Element::from_atom_word(gs, w);
}

inline garside::Element random_signed(const garside::GarsideStructure& gs,
                                      std::mt19937_64& rng, int max_len) {
  int len = 1 + (int)(rng() % (unsigned)max_len);
  std::vector<garside::SignedLetter> w(len);
  for (auto& l : w) {
    l.atom = (int)(rng() % (unsigned)gs.num_atoms());
    l.sign = (rng() & 1) ? 1 : -1;
  }
  return garside::Element::from_signed_word(gs, w);
}

}  // namespace testutil

#endif
