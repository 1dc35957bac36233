#ifndef GARSIDE_GROUP_HPP
#define GARSIDE_GROUP_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "garside/gelem.hpp"

namespace garside {

struct GroupSpec {
  std::string family;  // "symmetric" | "gdeen" | "coxeter" | "exceptional"
  std::vector<GroupElem> generators;
  std::vector<std::string> generator_names;
  std::size_t element_cap = 1'000'000;
  // monomial sanity constraint: phase sums must be 0 mod this (0 = skip)
  int phase_sum_mod = 0;
  std::optional<std::size_t> expected_order;
};

class group_build_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A fully enumerated finite group. Immutable once built; all queries const.
class FiniteGroup {
public:
  std::size_t order() const { return elems_.size(); }
  int identity() const { return 0; }
  const GroupElem& elem(int i) const { return elems_[i]; }
  const std::vector<int>& generators() const { return gens_; }
  const std::vector<std::string>& generator_names() const { return gen_names_; }

  int index_of(const GroupElem& e) const {
    auto it = index_.find(gelem_key(e));
    return it == index_.end() ? -1 : it->second;
  }
  int mul(int a, int b) const {
    auto prod = gelem_mul(elems_[a], elems_[b]);
    auto it = index_.find(gelem_key(prod));
    if (it == index_.end()) throw std::logic_error("product escaped the group");
    return it->second;
  }
  int inv(int a) const { return inv_[a]; }
  int conj(int x, int g) const { return mul(mul(inv(g), x), g); }
  int power(int a, long long k) const;
  int element_order(int a) const;

  // all indices of reflections (rank-1 fixed-hyperplane elements)
  std::vector<int> reflections() const;
  // closure of a set of element indices, capped by the group order
  std::vector<int> subgroup(const std::vector<int>& gens) const;
  std::size_t center_order(const std::vector<int>& subgroup_elems) const;

  friend FiniteGroup build_group(const GroupSpec& spec);

private:
  std::vector<GroupElem> elems_;
  std::unordered_map<std::string, int> index_;
  std::vector<int> inv_;
  std::vector<int> gens_;
  std::vector<std::string> gen_names_;
};

// Enumerates the group generated by spec.generators. Throws group_build_error
// if the cap is exceeded or an expected order does not match.
FiniteGroup build_group(const GroupSpec& spec);

}  // namespace garside

#endif
