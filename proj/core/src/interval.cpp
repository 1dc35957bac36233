#include "garside/interval.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "garside/bitset.hpp"

namespace garside {

Interval length_and_interval(std::shared_ptr<const FiniteGroup> W,
                             const std::vector<int>& S,
                             const std::vector<std::string>& names, int c) {
  Interval I;
  I.W = W;
  I.S = S;
  I.S_names = names;
  I.c = c;
  I.len.assign(W->order(), -1);

  // FIFO within a length level preserves lexicographic word order, so the
  // first discovery of an element carries its lex-smallest reduced word.
  std::vector<std::vector<int>> wordw(W->order());
  std::deque<int> queue;
  I.len[W->identity()] = 0;
  queue.push_back(W->identity());
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (size_t si = 0; si < S.size(); ++si) {
      int y = W->mul(x, S[si]);
      if (I.len[y] < 0) {
        I.len[y] = I.len[x] + 1;
        wordw[y] = wordw[x];
        wordw[y].push_back((int)si);
        queue.push_back(y);
      }
    }
  }
  for (auto l : I.len)
    if (l < 0) throw std::invalid_argument("S does not generate W");

  I.member_of.assign(W->order(), -1);
  std::vector<int> order_idx(W->order());
  for (size_t i = 0; i < W->order(); ++i) order_idx[i] = (int)i;
  // BFS discovery order is (length, lex); re-derive it from stored words
  std::stable_sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
    if (I.len[a] != I.len[b]) return I.len[a] < I.len[b];
    return wordw[a] < wordw[b];
  });
  for (int g : order_idx) {
    if (!I.in_interval(g)) continue;
    I.member_of[g] = (int)I.members.size();
    I.members.push_back(g);
    I.word.push_back(wordw[g]);
  }
  return I;
}

bool is_balanced(const Interval& I) {
  // prefix set is I.members by construction; compare with the suffix set
  size_t suffix_count = 0;
  for (size_t g = 0; g < I.W->order(); ++g) {
    bool suf = I.suffix_leq((int)g, I.c);
    if (suf) {
      ++suffix_count;
      if (I.member_of[g] < 0) return false;
    }
  }
  return suffix_count == I.members.size();
}

namespace {

// unique minimal (resp. maximal) element check over a candidate bitset
bool unique_extremum(const Interval& I, const DynBitset& cand, bool minimal,
                     int* out) {
  int best = -1;
  cand.for_each([&](size_t mi) {
    if (best < 0) {
      best = (int)mi;
      return;
    }
    int lb = I.length_of_member(best), lc = I.length_of_member((int)mi);
    if (minimal ? lc < lb : lc > lb) best = (int)mi;
  });
  if (best < 0) return false;
  bool ok = true;
  int bg = I.members[best];
  cand.for_each([&](size_t mi) {
    if (!ok) return;
    int g = I.members[mi];
    ok = minimal ? I.prefix_leq(bg, g) : I.prefix_leq(g, bg);
  });
  if (ok && out) *out = best;
  return ok;
}

bool unique_extremum_suffix(const Interval& I, const DynBitset& cand,
                            bool minimal) {
  int best = -1;
  cand.for_each([&](size_t mi) {
    if (best < 0) {
      best = (int)mi;
      return;
    }
    int lb = I.length_of_member(best), lc = I.length_of_member((int)mi);
    if (minimal ? lc < lb : lc > lb) best = (int)mi;
  });
  if (best < 0) return false;
  bool ok = true;
  int bg = I.members[best];
  cand.for_each([&](size_t mi) {
    if (!ok) return;
    int g = I.members[mi];
    ok = minimal ? I.suffix_leq(bg, g) : I.suffix_leq(g, bg);
  });
  return ok;
}

}  // namespace

bool lattice_check(const Interval& I) {
  int n = I.size();
  // divisibility closure tables restricted to the interval
  std::vector<DynBitset> up_pref(n, DynBitset(n)), down_pref(n, DynBitset(n));
  std::vector<DynBitset> up_suff(n, DynBitset(n)), down_suff(n, DynBitset(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (I.prefix_leq(I.members[a], I.members[b])) {
        up_pref[a].set(b);
        down_pref[b].set(a);
      }
      if (I.suffix_leq(I.members[a], I.members[b])) {
        up_suff[a].set(b);
        down_suff[b].set(a);
      }
    }
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      if (!unique_extremum(I, up_pref[a] & up_pref[b], true, nullptr)) return false;
      if (!unique_extremum(I, down_pref[a] & down_pref[b], false, nullptr)) return false;
      if (!unique_extremum_suffix(I, up_suff[a] & up_suff[b], true)) return false;
      if (!unique_extremum_suffix(I, down_suff[a] & down_suff[b], false)) return false;
    }
  return true;
}

bool check_hypdual(const Interval& I) {
  const auto& W = *I.W;
  for (int mi = 0; mi < I.size(); ++mi) {
    // W0 = subgroup generated by the letters of a reduced word of c0
    std::vector<int> letters;
    for (int li : I.word[mi]) letters.push_back(I.S[li]);
    std::vector<char> in_w0(W.order(), 0);
    for (int g : W.subgroup(letters)) in_w0[g] = 1;
    int c0 = I.members[mi];
    // W0 cap [1,c] must equal [1,c0]
    for (int g : I.members)
      if (bool(in_w0[g]) != I.prefix_leq(g, c0)) return false;
  }
  return true;
}

}  // namespace garside
