#include "garside/structure.hpp"

#include <cassert>
#include <numeric>

namespace garside {

std::shared_ptr<GarsideStructure> GarsideStructure::build(Interval I,
                                                          StructureOptions opt) {
  if (opt.verify) {
    if (!is_balanced(I)) throw structure_error("interval apex is not balanced");
    if (!lattice_check(I)) throw structure_error("interval is not a lattice");
  }
  auto gs = std::shared_ptr<GarsideStructure>(new GarsideStructure());
  gs->I_ = std::move(I);
  gs->build_tables(opt);
  link_mirror(gs, opt);
  return gs;
}

void GarsideStructure::build_tables(const StructureOptions& opt) {
  n_ = I_.size();
  delta_ = I_.apex_member();
  const auto& W = *I_.W;

  atom_of_member_.assign(n_, -1);
  for (size_t si = 0; si < I_.S.size(); ++si) {
    int mem = I_.member_of[I_.S[si]];
    if (mem < 0 || I_.length_of_member(mem) != 1)
      throw structure_error("generator '" + I_.S_names[si] +
                            "' is not an atom of the interval");
    if (W.element_order(I_.S[si]) != 2)
      throw structure_error("atom '" + I_.S_names[si] + "' does not have order 2");
    atom_of_member_[mem] = (int)atoms_.size();
    atoms_.push_back(mem);
    atom_names_.push_back(I_.S_names[si]);
  }
  for (int mem = 0; mem < n_; ++mem)
    if (I_.length_of_member(mem) == 1 && atom_of_member_[mem] < 0)
      throw structure_error("interval has a length-1 member outside the atom set");

  dn_pref_.assign(n_, DynBitset(n_));
  up_pref_.assign(n_, DynBitset(n_));
  dn_suff_.assign(n_, DynBitset(n_));
  up_suff_.assign(n_, DynBitset(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      if (I_.prefix_leq(I_.members[a], I_.members[b])) {
        dn_pref_[b].set(a);
        up_pref_[a].set(b);
      }
      if (I_.suffix_leq(I_.members[a], I_.members[b])) {
        dn_suff_[b].set(a);
        up_suff_[a].set(b);
      }
    }

  rc_.resize(n_);
  lc_.resize(n_);
  tau_.resize(n_);
  tau_inv_.resize(n_);
  int cg = I_.c;
  for (int s = 0; s < n_; ++s) {
    int g = I_.members[s];
    rc_[s] = I_.member_of[W.mul(W.inv(g), cg)];
    lc_[s] = I_.member_of[W.mul(cg, W.inv(g))];
    int tg = W.mul(W.mul(W.inv(cg), g), cg);
    int ts = I_.member_of[tg];
    if (ts < 0) throw structure_error("conjugation by Delta leaves the interval");
    tau_[s] = ts;
  }
  for (int s = 0; s < n_; ++s) tau_inv_[tau_[s]] = s;
  // order of the permutation tau
  {
    std::vector<char> seen(n_, 0);
    long long e = 1;
    for (int s = 0; s < n_; ++s) {
      if (seen[s]) continue;
      int len = 0, t = s;
      do {
        seen[t] = 1;
        t = tau_[t];
        ++len;
      } while (t != s);
      e = std::lcm(e, (long long)len);
    }
    E_ = (int)e;
  }

  // eager lattice and product tables keep queries pure, lock-free and off
  // the group-arithmetic path afterwards
  if (n_ <= opt.tabulate_threshold) {
    meet_tab_.assign((size_t)n_ * n_, -1);
    join_tab_.assign((size_t)n_ * n_, -1);
    for (int a = 0; a < n_; ++a)
      for (int b = a; b < n_; ++b) {
        int m = scan_extremum_len(dn_pref_[a] & dn_pref_[b], true);
        int j = scan_extremum_len(up_pref_[a] & up_pref_[b], false);
        meet_tab_[(size_t)a * n_ + b] = meet_tab_[(size_t)b * n_ + a] = m;
        join_tab_[(size_t)a * n_ + b] = join_tab_[(size_t)b * n_ + a] = j;
      }
    mult_tab_.assign((size_t)n_ * n_, -1);
    lq_tab_.assign((size_t)n_ * n_, -1);
    rq_tab_.assign((size_t)n_ * n_, -1);
    for (int a = 0; a < n_; ++a) {
      int ga = I_.members[a], ia = W.inv(ga);
      for (int b = 0; b < n_; ++b) {
        int gb = I_.members[b];
        int pm = I_.member_of[W.mul(ga, gb)];
        if (pm >= 0 && I_.length_of_member(pm) == length(a) + length(b))
          mult_tab_[(size_t)a * n_ + b] = pm;
        lq_tab_[(size_t)a * n_ + b] = I_.member_of[W.mul(ia, gb)];
        rq_tab_[(size_t)a * n_ + b] = I_.member_of[W.mul(gb, ia)];
      }
    }
    tabulated_ = true;
  }
}

int GarsideStructure::scan_extremum_len(const DynBitset& cand,
                                        bool maximal) const {
  int best = -1, bl = maximal ? -1 : INT32_MAX;
  cand.for_each([&](size_t s) {
    int l = length((int)s);
    if (maximal ? l > bl : l < bl) {
      bl = l;
      best = (int)s;
    }
  });
  return best;
}

void GarsideStructure::link_mirror(std::shared_ptr<GarsideStructure> main,
                                   const StructureOptions& opt) {
  const auto& I = main->I_;
  const auto& W = *I.W;
  // interval over c^{-1}: anti-isomorphic through u -> u^{-1}, valid because
  // every atom has order 2 (checked above)
  Interval M = length_and_interval(I.W, I.S, I.S_names, W.inv(I.c));
  auto mir = std::shared_ptr<GarsideStructure>(new GarsideStructure());
  mir->I_ = std::move(M);
  StructureOptions mo = opt;
  mir->build_tables(mo);

  main->to_mirror_.resize(main->n_);
  main->from_mirror_.resize(main->n_);
  mir->to_mirror_.resize(mir->n_);
  mir->from_mirror_.resize(mir->n_);
  if (mir->n_ != main->n_)
    throw structure_error("mirror interval size mismatch");
  // index translation: main member s (element u) corresponds to the mirror
  // member carrying u^{-1}; from_mirror_ holds the inverse map, indexed by
  // members of the other structure
  for (int s = 0; s < main->n_; ++s) {
    int g = main->I_.members[s];
    int ms = mir->I_.member_of[W.inv(g)];
    if (ms < 0) throw structure_error("mirror interval member mismatch");
    main->to_mirror_[s] = ms;
    main->from_mirror_[ms] = s;
    mir->to_mirror_[ms] = s;
    mir->from_mirror_[s] = ms;
  }
  mir->mirror_ = main.get();
  main->mirror_owned_ = mir;
  main->mirror_ = mir.get();
}

int GarsideStructure::atom_by_name(const std::string& name) const {
  for (size_t i = 0; i < atom_names_.size(); ++i)
    if (atom_names_[i] == name) return (int)i;
  return -1;
}

int GarsideStructure::mult(int a, int b) const {
  if (tabulated_) return mult_tab_[(size_t)a * n_ + b];
  const auto& W = *I_.W;
  int g = W.mul(I_.members[a], I_.members[b]);
  int mem = I_.member_of[g];
  if (mem < 0) return -1;
  if (I_.length_of_member(mem) != length(a) + length(b)) return -1;
  return mem;
}

int GarsideStructure::lquot(int a, int b) const {
  if (tabulated_) {
    int mem = lq_tab_[(size_t)a * n_ + b];
    assert(mem >= 0);
    return mem;
  }
  const auto& W = *I_.W;
  int g = W.mul(W.inv(I_.members[a]), I_.members[b]);
  int mem = I_.member_of[g];
  assert(mem >= 0);
  return mem;
}

int GarsideStructure::rquot(int b, int a) const {
  if (tabulated_) {
    int mem = rq_tab_[(size_t)a * n_ + b];
    assert(mem >= 0);
    return mem;
  }
  const auto& W = *I_.W;
  int g = W.mul(I_.members[b], W.inv(I_.members[a]));
  int mem = I_.member_of[g];
  assert(mem >= 0);
  return mem;
}

int GarsideStructure::meet_pref(int a, int b) const {
  if (tabulated_) return meet_tab_[(size_t)a * n_ + b];
  return scan_extremum_len(dn_pref_[a] & dn_pref_[b], true);
}

int GarsideStructure::join_pref(int a, int b) const {
  if (tabulated_) return join_tab_[(size_t)a * n_ + b];
  return scan_extremum_len(up_pref_[a] & up_pref_[b], false);
}

int GarsideStructure::meet_suff(int a, int b) const {
  return scan_extremum_len(dn_suff_[a] & dn_suff_[b], true);
}

int GarsideStructure::join_suff(int a, int b) const {
  return scan_extremum_len(up_suff_[a] & up_suff_[b], false);
}

int GarsideStructure::tau_pow(int s, long long k) const {
  k %= E_;
  if (k < 0) k += E_;
  int t = s;
  for (long long i = 0; i < k; ++i) t = tau_[t];
  return t;
}

int GarsideStructure::head_pref(int a, int b) const {
  int t = meet_pref(rc_[a], b);
  int r = mult(a, t);
  assert(r >= 0);
  return r;
}

int GarsideStructure::head_suff(int a, int b) const {
  const auto& m = mirror();
  int r = m.head_pref(to_mirror_[b], to_mirror_[a]);
  return from_mirror_[r];
}

bool GarsideStructure::squarefree() const {
  for (int s = 0; s < n_; ++s) {
    const auto& w = word_of(s);
    for (size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] == w[i + 1]) return false;
  }
  return true;
}

}  // namespace garside
