#ifndef GARSIDE_DATA_FILE_HPP
#define GARSIDE_DATA_FILE_HPP

#include <optional>
#include <string>
#include <vector>

#include "garside/gelem.hpp"

namespace garside {

// Textual reflection-group data: exact generator matrices over a cyclotomic
// ring, the atom order, and the chosen Coxeter word. No floats anywhere.
struct ReflData {
  std::string name;
  int ring = 1;  // entries live in Q(zeta_ring)
  int dim = 0;
  int rank = 0;
  int apexlen = 0;  // expected atom-length of the apex; defaults to rank
  std::optional<std::size_t> order;
  std::vector<std::string> atom_names;
  std::vector<CycMatrix> atoms;
  std::vector<std::string> coxeter_word;  // atom names whose product is c
};

ReflData parse_refl_file(const std::string& path);
ReflData parse_refl_text(const std::string& text, const std::string& what);

// location of the shipped data directory (overridable by GARSIDE_DATA_DIR env)
std::string data_dir();

}  // namespace garside

#endif
