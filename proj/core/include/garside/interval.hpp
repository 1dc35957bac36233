#ifndef GARSIDE_INTERVAL_HPP
#define GARSIDE_INTERVAL_HPP

#include <memory>
#include <string>
#include <vector>

#include "garside/group.hpp"

namespace garside {

// The divisibility interval [1, c] in a finite group W with respect to the
// word length over a generating set S, together with the length table on all
// of W. Members carry the lexicographically smallest reduced word over the
// declared generator order.
struct Interval {
  std::shared_ptr<const FiniteGroup> W;
  std::vector<int> S;                   // generator element indices (atom order)
  std::vector<std::string> S_names;
  int c = -1;                           // apex, group index
  std::vector<int> len;                 // ell_S on all of W
  std::vector<int> members;             // group indices, (length, lex) order
  std::vector<int> member_of;           // group index -> member index or -1
  std::vector<std::vector<int>> word;   // per member, letters as S-positions

  int size() const { return (int)members.size(); }
  int apex_member() const { return member_of[c]; }
  int length_of_member(int mem) const { return len[members[mem]]; }

  bool in_interval(int g) const {
    return len[g] + len[W->mul(W->inv(g), c)] == len[c];
  }
  // u prefix-divides v (both group indices, arbitrary in W)
  bool prefix_leq(int u, int v) const {
    return len[u] + len[W->mul(W->inv(u), v)] == len[v];
  }
  // u suffix-divides v: v = t*u with lengths adding
  bool suffix_leq(int u, int v) const {
    return len[W->mul(v, W->inv(u))] + len[u] == len[v];
  }
};

// BFS over right multiplication; requires S to generate W and c in W.
Interval length_and_interval(std::shared_ptr<const FiniteGroup> W,
                             const std::vector<int>& S,
                             const std::vector<std::string>& names, int c);

bool is_balanced(const Interval& I);
bool lattice_check(const Interval& I);

// Property: for every c0 in [1,c], the reflection subgroup W0 generated by
// the letters of a reduced word of c0 satisfies W0 cap [1,c] = [1,c0].
// Requires a dual-type interval (every generator an order-2 reflection).
bool check_hypdual(const Interval& I);

}  // namespace garside

#endif
