#ifndef GARSIDE_STRUCTURE_HPP
#define GARSIDE_STRUCTURE_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "garside/bitset.hpp"
#include "garside/interval.hpp"

namespace garside {

class structure_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct StructureOptions {
  bool verify = true;            // balanced + lattice gate
  int tabulate_threshold = 512;  // full meet/join tables up to this many simples
};

// Garside structure tables over an interval [1,c]. Simples are interval
// members, indexed densely; atoms are the generators (all of which must be
// order-2 members of the interval). A mirror structure over [1,c^{-1}] backs
// every suffix-side computation through the word-reversal anti-isomorphism.
class GarsideStructure {
public:
  static std::shared_ptr<GarsideStructure> build(Interval I,
                                                 StructureOptions opt = {});

  const Interval& interval() const { return I_; }
  const FiniteGroup& group() const { return *I_.W; }
  int num_simples() const { return n_; }
  int identity_simple() const { return 0; }
  int delta_simple() const { return delta_; }
  int num_atoms() const { return (int)atoms_.size(); }
  int atom_simple(int atom_id) const { return atoms_[atom_id]; }
  int atom_id_of(int simple) const { return atom_of_member_[simple]; }
  const std::string& atom_name(int atom_id) const { return atom_names_[atom_id]; }
  int atom_by_name(const std::string& name) const;
  int tau_order() const { return E_; }

  int length(int s) const { return I_.length_of_member(s); }
  int group_of(int s) const { return I_.members[s]; }
  const std::vector<int>& word_of(int s) const { return I_.word[s]; }

  bool leq_pref(int a, int b) const { return dn_pref_[b].test(a); }
  bool leq_suff(int a, int b) const { return dn_suff_[b].test(a); }
  const DynBitset& divisors_pref(int s) const { return dn_pref_[s]; }
  const DynBitset& divisors_suff(int s) const { return dn_suff_[s]; }
  const DynBitset& multiples_pref(int s) const { return up_pref_[s]; }

  // simple * simple, or -1 when the product is not simple
  int mult(int a, int b) const;
  // a \ b for a prefix of b
  int lquot(int a, int b) const;
  // b / a for a suffix of b
  int rquot(int b, int a) const;

  int meet_pref(int a, int b) const;
  int join_pref(int a, int b) const;
  int meet_suff(int a, int b) const;
  int join_suff(int a, int b) const;

  int rcomp(int s) const { return rc_[s]; }  // s \ Delta
  int lcomp(int s) const { return lc_[s]; }  // Delta / s
  int tau(int s) const { return tau_[s]; }
  int tau_inv(int s) const { return tau_inv_[s]; }
  int tau_pow(int s, long long k) const;

  // maximal simple prefix of the product ab: a * (rcomp(a) meet b) = ab /\ Delta
  int head_pref(int a, int b) const;
  // maximal simple suffix of ab, through the mirror
  int head_suff(int a, int b) const;
  // right-complement a\b = a^{-1}(a \/ b) for arbitrary simples
  int complement(int a, int b) const { return lquot(a, join_pref(a, b)); }

  bool squarefree() const;

  const GarsideStructure& mirror() const { return *mirror_; }
  int to_mirror(int s) const { return to_mirror_[s]; }
  int from_mirror(int s) const { return from_mirror_[s]; }

private:
  GarsideStructure() = default;
  void build_tables(const StructureOptions& opt);
  int scan_extremum_len(const DynBitset& cand, bool maximal) const;
  static void link_mirror(std::shared_ptr<GarsideStructure> main,
                          const StructureOptions& opt);

  Interval I_;
  int n_ = 0, delta_ = -1, E_ = 1;
  std::vector<int> atoms_;
  std::vector<std::string> atom_names_;
  std::vector<int> atom_of_member_;
  std::vector<DynBitset> dn_pref_, up_pref_, dn_suff_, up_suff_;
  std::vector<int> rc_, lc_, tau_, tau_inv_;
  std::vector<std::int32_t> meet_tab_, join_tab_;
  std::vector<std::int32_t> mult_tab_, lq_tab_, rq_tab_;
  bool tabulated_ = false;

  std::shared_ptr<GarsideStructure> mirror_owned_;
  const GarsideStructure* mirror_ = nullptr;
  std::vector<int> to_mirror_, from_mirror_;
};

using StructurePtr = std::shared_ptr<GarsideStructure>;

}  // namespace garside

#endif
