#include "garside/parabolic.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace garside {

// ---- atom sets ---------------------------------------------------------------

int delta_of(const GarsideStructure& gs, const DynBitset& X) {
  int d = gs.identity_simple();
  X.for_each([&](size_t a) { d = gs.join_pref(d, gs.atom_simple((int)a)); });
  return d;
}

DynBitset closure(const GarsideStructure& gs, const DynBitset& X) {
  int d = delta_of(gs, X);
  DynBitset out((size_t)gs.num_atoms());
  const DynBitset& div = gs.divisors_pref(d);
  for (int a = 0; a < gs.num_atoms(); ++a)
    if (div.test(gs.atom_simple(a))) out.set(a);
  return out;
}

bool is_saturated(const GarsideStructure& gs, const DynBitset& X) {
  return closure(gs, X) == X;
}

std::vector<DynBitset> saturated_sets(const GarsideStructure& gs) {
  auto key = [](const DynBitset& b) {
    std::string s;
    b.for_each([&s](size_t i) {
      s += std::to_string(i);
      s += ',';
    });
    return s;
  };
  std::vector<DynBitset> out;
  std::set<std::string> seen;
  std::deque<DynBitset> queue;
  DynBitset empty((size_t)gs.num_atoms());
  queue.push_back(empty);
  seen.insert(key(empty));
  while (!queue.empty()) {
    DynBitset C = queue.front();
    queue.pop_front();
    out.push_back(C);
    for (int a = 0; a < gs.num_atoms(); ++a) {
      if (C.test(a)) continue;
      DynBitset D = C;
      D.set(a);
      D = closure(gs, D);
      auto k = key(D);
      if (seen.insert(std::move(k)).second) queue.push_back(D);
    }
  }
  std::sort(out.begin(), out.end(), [&key](const DynBitset& a, const DynBitset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return key(a) < key(b);
  });
  return out;
}

DynBitset atom_set(const GarsideStructure& gs,
                   const std::vector<std::string>& names) {
  DynBitset X((size_t)gs.num_atoms());
  for (const auto& n : names) {
    int a = gs.atom_by_name(n);
    if (a < 0) throw std::invalid_argument("unknown atom '" + n + "'");
    X.set(a);
  }
  return X;
}

std::string atom_set_str(const GarsideStructure& gs, const DynBitset& X) {
  std::string s = "{";
  bool first = true;
  X.for_each([&](size_t a) {
    if (!first) s += ",";
    s += gs.atom_name((int)a);
    first = false;
  });
  return s + "}";
}

// ---- Godelle criterion / LCM-Garside ------------------------------------------

GodelleOutcome godelle_check(const GarsideStructure& gs, int delta_simple) {
  if (!(gs.divisors_pref(delta_simple) == gs.divisors_suff(delta_simple)))
    return GodelleOutcome::not_balanced;
  const DynBitset& div = gs.divisors_pref(delta_simple);
  std::vector<int> members;
  div.for_each([&members](size_t s) { members.push_back((int)s); });
  for (int x : members)
    for (int y : members) {
      if (!div.test(gs.head_pref(x, y))) return GodelleOutcome::fail;
      if (!div.test(gs.head_suff(x, y))) return GodelleOutcome::fail;
    }
  return GodelleOutcome::pass;
}

LcmGarsideReport check_lcm_garside(const GarsideStructure& gs) {
  LcmGarsideReport rep;
  DynBitset all((size_t)gs.num_atoms());
  for (int a = 0; a < gs.num_atoms(); ++a) all.set(a);
  if (delta_of(gs, all) != gs.delta_simple()) {
    rep.pass = false;
    rep.delta_is_atom_join = false;
    rep.failures.push_back({all, "Delta is not the join of the atoms"});
  }
  // Delta_X = Delta_{closure(X)}, so saturated sets decide every subset
  for (const auto& X : saturated_sets(gs)) {
    int d = delta_of(gs, X);
    switch (godelle_check(gs, d)) {
      case GodelleOutcome::pass:
        break;
      case GodelleOutcome::not_balanced:
        rep.pass = false;
        rep.failures.push_back({X, "Delta_X is not balanced"});
        break;
      case GodelleOutcome::fail:
        rep.pass = false;
        rep.failures.push_back({X, "G_X fails the standard-parabolic criterion"});
        break;
    }
  }
  return rep;
}

// ---- support / ribbons ---------------------------------------------------------

DynBitset support(const Element& x) {
  const auto& gs = x.structure();
  auto fr = left_fraction(x);
  DynBitset letters((size_t)gs.num_atoms());
  for (int a : fr.denominator.atom_word()) letters.set(a);
  for (int a : fr.numerator.atom_word()) letters.set(a);
  return closure(gs, letters);
}

int ribbon(const GarsideStructure& gs, const DynBitset& X, int atom_u) {
  DynBitset Xu = X;
  Xu.set(atom_u);
  return gs.lquot(delta_of(gs, X), delta_of(gs, Xu));
}

// ---- chain certificate ----------------------------------------------------------

ChainCertificate chain_certificate(const GarsideStructure& gs,
                                   const DynBitset& X) {
  const int na = gs.num_atoms();
  int dX = delta_of(gs, X);

  DynBitset A((size_t)na);
  for (int a = 0; a < na; ++a)
    if (gs.mult(dX, gs.atom_simple(a)) >= 0) A.set(a);

  DynBitset B((size_t)na);
  for (int a = 0; a < na; ++a)
    if (!X.test(a) && !A.test(a)) B.set(a);

  struct Triple {
    int a, b;        // atom ids
    DynBitset V;     // atom set with Delta_V = b \ a
  };
  std::vector<Triple> D;
  B.for_each([&](size_t a) {
    X.for_each([&](size_t b) {
      int comp = gs.complement(gs.atom_simple((int)b), gs.atom_simple((int)a));
      DynBitset V((size_t)na);
      const DynBitset& div = gs.divisors_pref(comp);
      for (int t = 0; t < na; ++t)
        if (div.test(gs.atom_simple(t))) V.set(t);
      if (delta_of(gs, V) == comp) D.push_back({(int)a, (int)b, V});
    });
  });

  ChainCertificate cert;
  cert.layers.push_back(A);
  DynBitset N((size_t)na);
  bool first = true;
  do {
    if (!first) {
      A |= N;
      cert.layers.push_back(A);
    }
    first = false;
    // drop triples already witnessed by the current layer
    std::vector<Triple> keep;
    for (auto& t : D)
      if (!(t.V & A).any()) keep.push_back(std::move(t));
    D = std::move(keep);
    // drop all triples of an atom whose remaining obstructions are covered by
    // a proper saturated subset of X
    for (int a = 0; a < na; ++a) {
      bool all_self = true, any = false;
      DynBitset Bs((size_t)na);
      for (const auto& t : D)
        if (t.a == a) {
          any = true;
          if (!t.V.test(a)) all_self = false;
          Bs.set(t.b);
        }
      if (!any || !all_self) continue;
      DynBitset Xp = closure(gs, Bs);
      if (Xp.is_subset_of(X) && !(Xp == X)) {
        std::vector<Triple> kept;
        for (auto& t : D)
          if (t.a != a) kept.push_back(std::move(t));
        D = std::move(kept);
      }
    }
    N = DynBitset((size_t)na);
    B.for_each([&](size_t z) {
      if (A.test(z)) return;
      for (const auto& t : D)
        if (t.a == (int)z) return;
      N.set(z);
    });
  } while (N.any());
  cert.ok = D.empty();
  return cert;
}

// ---- support preservation ---------------------------------------------------------

namespace {

bool standard_membership(const Element& w, const GarsideStructure& gs,
                         const DynBitset& X) {
  auto fr = left_fraction(w);
  DynBitset letters((size_t)gs.num_atoms());
  for (int a : fr.denominator.atom_word()) letters.set(a);
  for (int a : fr.numerator.atom_word()) letters.set(a);
  return letters.is_subset_of(X);
}

bool conjugation_maps_parabolic(const GarsideStructure& gs, const DynBitset& X,
                                const DynBitset& Y, const Element& rho) {
  Element ri = rho.inverse();
  bool ok = true;
  X.for_each([&](size_t u) {
    if (!ok) return;
    Element img = Element::from_simple(gs, gs.atom_simple((int)u)).conjugate(rho);
    if (!standard_membership(img, gs, Y)) ok = false;
  });
  if (!ok) return false;
  Y.for_each([&](size_t v) {
    if (!ok) return;
    Element img = Element::from_simple(gs, gs.atom_simple((int)v)).conjugate(ri);
    if (!standard_membership(img, gs, X)) ok = false;
  });
  return ok;
}

}  // namespace

SupportCheckReport check_support_preserving(const GarsideStructure& gs,
                                            const SupportCheckOptions& opt) {
  SupportCheckReport rep;
  rep.mode = opt.mode;
  rep.seed = opt.seed;
  rep.samples = opt.samples;
  rep.max_length = opt.max_length;

  if (opt.mode == "certificate") {
    DynBitset all((size_t)gs.num_atoms());
    for (int a = 0; a < gs.num_atoms(); ++a) all.set(a);
    for (const auto& X : saturated_sets(gs)) {
      if (X == all) continue;
      auto cert = chain_certificate(gs, X);
      if (!cert.ok) {
        rep.pass = false;
        SupportCheckReport::Counterexample ce;
        ce.x = Element::identity(gs);
        ce.rho = -1;
        ce.supp_x = X;
        ce.supp_image = X;
        rep.counterexample = std::move(ce);
        return rep;
      }
    }
    return rep;
  }

  const int nthreads = std::max(1, opt.threads);
  std::vector<std::optional<SupportCheckReport::Counterexample>> found(nthreads);
  auto worker = [&](int tid) {
    std::mt19937_64 rng(opt.seed + (unsigned long long)tid * 0x9e3779b97f4a7c15ull);
    int from = (int)((long long)opt.samples * tid / nthreads);
    int to = (int)((long long)opt.samples * (tid + 1) / nthreads);
    for (int i = from; i < to && !found[tid]; ++i) {
      int len = 1 + (int)(rng() % (unsigned)opt.max_length);
      std::vector<int> w(len);
      for (int& a : w) a = (int)(rng() % (unsigned)gs.num_atoms());
      Element x = Element::from_atom_word(gs, w);
      DynBitset X = support(x);
      for (int r : minimal_positive_conjugators(x)) {
        Element rho_el = Element::from_simple(gs, r);
        Element y = x.conjugate(rho_el);
        DynBitset Y = support(y);
        if (!conjugation_maps_parabolic(gs, X, Y, rho_el)) {
          SupportCheckReport::Counterexample ce;
          ce.x = x;
          ce.rho = r;
          ce.supp_x = X;
          ce.supp_image = Y;
          found[tid] = std::move(ce);
          break;
        }
      }
    }
  };
  if (nthreads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  for (auto& f : found)
    if (f) {
      rep.pass = false;
      rep.counterexample = std::move(f);
      break;
    }
  return rep;
}

VerifiedStructure verify_for_parabolics(StructurePtr gs,
                                        const SupportCheckOptions& opt) {
  VerifiedStructure v;
  v.gs = std::move(gs);
  auto lr = check_lcm_garside(*v.gs);
  if (!lr.pass) throw structure_error("structure is not LCM-Garside");
  v.lcm_garside = true;
  auto sr = check_support_preserving(*v.gs, opt);
  if (!sr.pass) throw structure_error("structure failed the support-preserving check");
  v.support_preserving = true;
  return v;
}

VerifiedStructure override_verification(StructurePtr gs) {
  VerifiedStructure v;
  v.gs = std::move(gs);
  v.overridden = true;
  return v;
}

// ---- z-elements and handles ----------------------------------------------------

std::pair<Element, int> standard_z(const GarsideStructure& gs,
                                   const DynBitset& X) {
  if (!X.any()) throw std::domain_error("z-element of the trivial parabolic");
  const auto& W = gs.group();
  int d = delta_of(gs, X);
  int dg = gs.group_of(d);
  // permutation induced on the atoms of X by conjugation by Delta_X
  std::vector<int> atoms;
  X.for_each([&atoms](size_t a) { atoms.push_back((int)a); });
  std::vector<int> img(atoms.size());
  for (size_t i = 0; i < atoms.size(); ++i) {
    int g = W.mul(W.mul(W.inv(dg), gs.group_of(gs.atom_simple(atoms[i]))), dg);
    int mem = gs.interval().member_of[g];
    int aid = mem >= 0 ? gs.atom_id_of(mem) : -1;
    if (aid < 0 || !X.test(aid))
      throw std::logic_error("Delta_X does not permute the atoms of X");
    for (size_t j = 0; j < atoms.size(); ++j)
      if (atoms[j] == aid) img[i] = (int)j;
  }
  long long e = 1;
  std::vector<char> seen(atoms.size(), 0);
  for (size_t i = 0; i < atoms.size(); ++i) {
    if (seen[i]) continue;
    int l = 0;
    size_t t = i;
    do {
      seen[t] = 1;
      t = (size_t)img[t];
      ++l;
    } while (t != i);
    e = std::lcm(e, (long long)l);
  }
  return {Element::from_simple(gs, d).pow(e), (int)e};
}

ParabolicHandle ParabolicHandle::standard(const GarsideStructure& gs,
                                          const DynBitset& X) {
  return conjugated(gs, X, Element::identity(gs));
}

ParabolicHandle ParabolicHandle::conjugated(const GarsideStructure& gs,
                                            const DynBitset& X,
                                            const Element& g) {
  if (!is_saturated(gs, X))
    throw std::invalid_argument("handle atom set is not saturated");
  ParabolicHandle h;
  h.gs_ = &gs;
  h.X_ = X;
  h.g_ = g;
  if (X.any()) {
    auto [z, e] = standard_z(gs, X);
    h.z_ = z.conjugate(g);
    h.e_ = e;
    h.zkey_ = h.z_.canonical_key();
  } else {
    h.z_ = Element::identity(gs);
    h.e_ = 0;
    h.zkey_ = "trivial";
  }
  return h;
}

ParabolicHandle ParabolicHandle::trivial(const GarsideStructure& gs) {
  return conjugated(gs, DynBitset((size_t)gs.num_atoms()),
                    Element::identity(gs));
}

const Element& ParabolicHandle::z() const {
  if (is_trivial()) throw std::domain_error("z-element of the trivial parabolic");
  return z_;
}

std::string ParabolicHandle::str() const {
  std::ostringstream os;
  os << "(" << atom_set_str(*gs_, X_) << ")^[" << g_.str() << "]";
  return os.str();
}

ParabolicHandle parabolic_closure(const VerifiedStructure& v, const Element& x) {
  if (!v.usable())
    throw std::logic_error(
        "structure not verified support-preserving LCM-Garside (no override)");
  const auto& gs = *v.gs;
  SwapTrace tr = swap_orbit(x);
  const Element& y = tr.element_at(tr.preperiod);
  DynBitset X = support(y);
  // y = c x c^{-1}, so PC(x) = PC(y)^c = (G_X)^c
  ParabolicHandle h = ParabolicHandle::conjugated(gs, X, tr.to_recurrent);
  assert(h.is_trivial() ? x.is_identity() : membership(x, h));
  return h;
}

int varphi(const VerifiedStructure& v, const Element& x) {
  if (!v.usable())
    throw std::logic_error(
        "structure not verified support-preserving LCM-Garside (no override)");
  const auto& gs = *v.gs;
  SwapTrace tr = swap_orbit(x);
  DynBitset X = support(tr.element_at(tr.preperiod));
  return gs.length(delta_of(gs, X));
}

std::pair<Element, DynBitset> standardize(const ParabolicHandle& P) {
  const auto& gs = P.structure();
  if (P.is_trivial())
    return {Element::identity(gs), DynBitset((size_t)gs.num_atoms())};
  const Element& z = P.z();
  if (z.is_positive()) return {Element::identity(gs), support(z)};
  auto res = conjugate_to_positive(z);
  if (!res)
    throw std::logic_error("z-element of a parabolic must be positive-conjugate");
  // res->first = c with c z c^{-1} positive; P^{c^{-1}} is standard
  return {res->first.inverse(), support(res->second)};
}

bool membership(const Element& w, const ParabolicHandle& P) {
  const auto& gs = P.structure();
  if (P.is_trivial()) return w.is_identity();
  // w in (G_X)^g  <=>  g w g^{-1} in G_X
  Element wc = w.conjugate(P.conjugator().inverse());
  return standard_membership(wc, gs, P.standard_part());
}

IntersectResult intersect(const VerifiedStructure& v, const ParabolicHandle& P1,
                          const ParabolicHandle& P2, int bound) {
  const auto& gs = *v.gs;
  IntersectResult res;
  if (P1 == P2) {
    res.value = P1;
    res.exact = true;
    return res;
  }
  if (P1.is_trivial() || P2.is_trivial()) {
    res.value = ParabolicHandle::trivial(gs);
    res.exact = true;
    return res;
  }
  auto contained = [&gs](const ParabolicHandle& A, const ParabolicHandle& B) {
    bool ok = true;
    A.standard_part().for_each([&](size_t u) {
      if (!ok) return;
      Element gen = Element::from_simple(gs, gs.atom_simple((int)u))
                        .conjugate(A.conjugator());
      if (!membership(gen, B)) ok = false;
    });
    return ok;
  };
  if (contained(P1, P2)) {
    res.value = P1;
    res.exact = true;
    return res;
  }
  if (contained(P2, P1)) {
    res.value = P2;
    res.exact = true;
    return res;
  }
  // both standard (positive z): exact atom-set intersection
  if (P1.z().is_positive() && P2.z().is_positive()) {
    DynBitset X1 = support(P1.z());
    DynBitset X2 = support(P2.z());
    res.value = ParabolicHandle::standard(gs, X1 & X2);
    res.exact = true;
    return res;
  }
  // bounded witness search among conjugated z-powers
  std::vector<Element> witnesses;
  auto try_witness = [&](const Element& w) {
    if (w.is_identity()) return;
    if (membership(w, P1) && membership(w, P2)) witnesses.push_back(w);
  };
  std::vector<Element> conjugators{Element::identity(gs)};
  {
    std::deque<std::pair<Element, int>> queue{{Element::identity(gs), 0}};
    std::set<std::string> seen{Element::identity(gs).canonical_key()};
    while (!queue.empty()) {
      auto [w, len] = queue.front();
      queue.pop_front();
      if (len >= bound) continue;
      for (int a = 0; a < gs.num_atoms(); ++a) {
        Element nw = w * Element::from_simple(gs, gs.atom_simple(a));
        if (seen.insert(nw.canonical_key()).second) {
          conjugators.push_back(nw);
          queue.push_back({nw, len + 1});
        }
      }
    }
  }
  for (const auto& c : conjugators)
    for (int k = 1; k <= 2; ++k) {
      try_witness(P1.z().pow(k).conjugate(c));
      try_witness(P2.z().pow(k).conjugate(c));
      try_witness(P1.z().pow(-k).conjugate(c));
      try_witness(P2.z().pow(-k).conjugate(c));
    }
  if (witnesses.empty()) {
    res.value = ParabolicHandle::trivial(gs);
    res.exact = false;  // lower bound: nothing found within the search radius
    return res;
  }
  int best = 0, bphi = -1;
  for (size_t i = 0; i < witnesses.size(); ++i) {
    int ph = varphi(v, witnesses[i]);
    if (ph > bphi) {
      bphi = ph;
      best = (int)i;
    }
  }
  ParabolicHandle H = parabolic_closure(v, witnesses[best]);
  res.value = H;
  res.exact = (H == P1 || H == P2);
  return res;
}

bool adjacent(const ParabolicHandle& P1, const ParabolicHandle& P2) {
  if (!is_irreducible(P1) || !is_irreducible(P2))
    throw std::invalid_argument("adjacency is defined on irreducible parabolics");
  if (P1 == P2) return false;
  return P1.z() * P2.z() == P2.z() * P1.z();
}

bool conjugating_test(const ParabolicHandle& P1, const ParabolicHandle& P2,
                      const Element& g) {
  if (P1.is_trivial() || P2.is_trivial())
    return P1.is_trivial() && P2.is_trivial();
  return P1.z().conjugate(g) == P2.z();
}

bool is_irreducible(const GarsideStructure& gs, const DynBitset& X) {
  std::vector<int> atoms;
  X.for_each([&atoms](size_t a) { atoms.push_back((int)a); });
  if (atoms.empty()) return false;
  const auto& W = gs.group();
  // connectivity of the non-commutation graph of the atom images
  std::vector<char> vis(atoms.size(), 0);
  std::deque<size_t> queue{0};
  vis[0] = 1;
  size_t count = 1;
  while (!queue.empty()) {
    size_t i = queue.front();
    queue.pop_front();
    int gi = gs.group_of(gs.atom_simple(atoms[i]));
    for (size_t j = 0; j < atoms.size(); ++j) {
      if (vis[j]) continue;
      int gj = gs.group_of(gs.atom_simple(atoms[j]));
      if (W.mul(gi, gj) != W.mul(gj, gi)) {
        vis[j] = 1;
        ++count;
        queue.push_back(j);
      }
    }
  }
  return count == atoms.size();
}

bool is_irreducible(const ParabolicHandle& P) {
  return is_irreducible(P.structure(), P.standard_part());
}

// ---- curve graph ------------------------------------------------------------------

CurveGraph curve_graph(const VerifiedStructure& v, int conj_bound,
                       bool emit_cliques) {
  if (!v.usable())
    throw std::logic_error("curve graph requires a verified structure");
  const auto& gs = *v.gs;
  CurveGraph g;
  std::set<std::string> seen;

  std::vector<Element> conjugators{Element::identity(gs)};
  {
    std::deque<std::pair<Element, int>> queue{{Element::identity(gs), 0}};
    std::set<std::string> wseen{Element::identity(gs).canonical_key()};
    while (!queue.empty()) {
      auto [w, len] = queue.front();
      queue.pop_front();
      if (len >= conj_bound) continue;
      for (int a = 0; a < gs.num_atoms(); ++a) {
        Element nw = w * Element::from_simple(gs, gs.atom_simple(a));
        if (wseen.insert(nw.canonical_key()).second) {
          conjugators.push_back(nw);
          queue.push_back({nw, len + 1});
        }
      }
    }
  }
  for (const auto& X : saturated_sets(gs)) {
    if (!X.any() || !is_irreducible(gs, X)) continue;
    for (const auto& c : conjugators) {
      ParabolicHandle h = ParabolicHandle::conjugated(gs, X, c);
      if (seen.insert(h.z_key()).second) g.vertices.push_back(std::move(h));
    }
  }
  for (size_t i = 0; i < g.vertices.size(); ++i)
    for (size_t j = i + 1; j < g.vertices.size(); ++j)
      if (adjacent(g.vertices[i], g.vertices[j]))
        g.edges.push_back({(int)i, (int)j});

  if (emit_cliques) {
    // Bron-Kerbosch on the adjacency structure
    std::vector<DynBitset> adj(g.vertices.size(),
                               DynBitset(g.vertices.size()));
    for (auto [a, b] : g.edges) {
      adj[a].set(b);
      adj[b].set(a);
    }
    std::vector<int> R;
    DynBitset P(g.vertices.size()), Xs(g.vertices.size());
    for (size_t i = 0; i < g.vertices.size(); ++i) P.set(i);
    std::function<void(DynBitset, DynBitset)> bk = [&](DynBitset P1,
                                                       DynBitset X1) {
      if (!P1.any() && !X1.any()) {
        g.cliques.push_back(R);
        return;
      }
      std::vector<int> cand;
      P1.for_each([&cand](size_t i) { cand.push_back((int)i); });
      for (int u : cand) {
        R.push_back(u);
        bk(P1 & adj[u], X1 & adj[u]);
        R.pop_back();
        P1.reset(u);
        X1.set(u);
      }
    };
    bk(P, Xs);
  }
  return g;
}

std::string CurveGraph::dot() const {
  std::ostringstream os;
  os << "graph curves {\n";
  for (size_t i = 0; i < vertices.size(); ++i) {
    const auto& h = vertices[i];
    os << "  v" << i << " [label=\""
       << atom_set_str(h.structure(), h.standard_part());
    if (!h.conjugator().is_identity()) os << " ^ " << h.conjugator().str();
    os << "\"];\n";
  }
  for (auto [a, b] : edges) os << "  v" << a << " -- v" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string CurveGraph::json() const {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (const auto& h : vertices) {
    nlohmann::json v;
    v["atoms"] = atom_set_str(h.structure(), h.standard_part());
    v["z"] = h.is_trivial() ? "1" : h.z().str();
    v["rank"] = h.standard_part().count();
    v["irreducible"] = is_irreducible(h);
    j["vertices"].push_back(v);
  }
  j["edges"] = nlohmann::json::array();
  for (auto [a, b] : edges) j["edges"].push_back({a, b});
  if (!cliques.empty()) j["cliques"] = cliques;
  return j.dump(2);
}

// ---- rank-2 closures -----------------------------------------------------------------

namespace {

// search the positive-conjugates graph for a power of an atom; returns the
// conjugating element c with seed^c = atom^k
std::optional<std::pair<int, Element>> find_atom_power(const Element& seed,
                                                       long long k) {
  const auto& gs = seed.structure();
  std::vector<std::string> targets(gs.num_atoms());
  for (int a = 0; a < gs.num_atoms(); ++a)
    targets[a] =
        Element::from_simple(gs, gs.atom_simple(a)).pow(k).canonical_key();

  struct Node {
    Element x;
    Element path;  // seed^path = x
  };
  std::deque<Node> queue{{seed, Element::identity(gs)}};
  std::set<std::string> seen{seed.canonical_key()};
  std::size_t cap = 200000;
  while (!queue.empty()) {
    Node nd = queue.front();
    queue.pop_front();
    auto key = nd.x.canonical_key();
    for (int a = 0; a < gs.num_atoms(); ++a)
      if (key == targets[a]) return std::make_pair(a, nd.path);
    for (int r : minimal_positive_conjugators(nd.x)) {
      Element re = Element::from_simple(gs, r);
      Element y = nd.x.conjugate(re);
      if (seen.insert(y.canonical_key()).second) {
        if (seen.size() > cap)
          throw std::runtime_error("rank-2 conjugacy search cap exceeded");
        queue.push_back({y, nd.path * re});
      }
    }
  }
  return std::nullopt;
}

// x conjugate to atom^k (k != 0)? returns (atom, c) with x^c = atom^k
std::optional<std::pair<int, Element>> atom_power_conjugacy(const Element& x,
                                                            long long k) {
  const Element* base = &x;
  Element xi;
  long long kk = k;
  if (k < 0) {
    xi = x.inverse();
    base = &xi;
    kk = -k;
  }
  auto pos = conjugate_to_positive(*base);
  if (!pos) return std::nullopt;
  // base^(c^{-1}) = pos->second
  auto found = find_atom_power(pos->second, kk);
  if (!found) return std::nullopt;
  return std::make_pair(found->first, pos->first.inverse() * found->second);
}

}  // namespace

Rank2Closure pc_rank2(const GarsideStructure& gs, const Element& x,
                      const std::string& tag) {
  if (tag != "G12" && tag != "G22" && tag != "G13")
    throw std::invalid_argument("pc_rank2 tag must be G12, G22 or G13");
  Rank2Closure out;
  if (x.is_identity()) {
    out.kind = Rank2Closure::trivial_subgroup;
    return out;
  }
  auto sw = x.signed_word();

  if (tag == "G12" || tag == "G22") {
    long long k = 0;
    for (const auto& l : sw) k += l.sign;
    if (k != 0) {
      if (auto r = atom_power_conjugacy(x, k)) {
        out.kind = Rank2Closure::cyclic;
        out.generator = Element::from_simple(gs, gs.atom_simple(r->first));
        out.conjugator = r->second.inverse();
        return out;
      }
    }
    out.kind = Rank2Closure::whole_group;
    return out;
  }

  // G13 through the I2(6) model with atoms a, b: proper parabolics are the
  // conjugates of <b> and of <Delta a^-2>; their abelianization images are
  // Z(0,1) and Z(1,3), which separate the two kinds.
  int aa = gs.atom_by_name("a"), ab = gs.atom_by_name("b");
  if (aa < 0 || ab < 0)
    throw std::invalid_argument("G13 model requires atoms named a and b");
  long long ea = 0, eb = 0;
  for (const auto& l : sw) {
    if (l.atom == aa) ea += l.sign;
    if (l.atom == ab) eb += l.sign;
  }
  if (ea == 0 && eb != 0) {
    // candidate conjugate of b^eb
    if (auto r = atom_power_conjugacy(x, eb)) {
      if (r->first == ab) {
        out.kind = Rank2Closure::cyclic;
        out.generator = Element::from_simple(gs, gs.atom_simple(ab));
        out.conjugator = r->second.inverse();
        return out;
      }
    }
    out.kind = Rank2Closure::whole_group;
    return out;
  }
  if (ea != 0 && eb == 3 * ea) {
    // candidate conjugate of (Delta a^-2)^ea: test (Delta^-ea x)^{-1} ~ a^{2 ea}
    long long k = ea;
    Element y = (Element::delta_power(gs, -k) * x).inverse();
    if (auto r = atom_power_conjugacy(y, 2 * k)) {
      if (r->first == aa) {
        out.kind = Rank2Closure::cyclic;
        out.generator = Element::delta_power(gs, 1) *
                        Element::from_simple(gs, gs.atom_simple(aa)).pow(-2);
        out.conjugator = r->second.inverse();
        return out;
      }
    }
  }
  out.kind = Rank2Closure::whole_group;
  return out;
}

bool dmm_property_check(const GarsideStructure& gs, int max_len, int max_n,
                        unsigned long long seed, int sample_cap) {
  const int na = gs.num_atoms();
  std::vector<std::vector<int>> words;
  double total = 1;
  for (int l = 1; l <= max_len; ++l) total *= na;
  if (total <= (double)sample_cap) {
    // exhaustive enumeration of positive words up to max_len
    std::vector<std::vector<int>> level{{}};
    for (int l = 1; l <= max_len; ++l) {
      std::vector<std::vector<int>> next;
      for (const auto& w : level)
        for (int a = 0; a < na; ++a) {
          auto nw = w;
          nw.push_back(a);
          next.push_back(nw);
        }
      for (const auto& w : next) words.push_back(w);
      level = std::move(next);
    }
  } else {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < sample_cap; ++i) {
      int l = 1 + (int)(rng() % (unsigned)max_len);
      std::vector<int> w(l);
      for (int& a : w) a = (int)(rng() % (unsigned)na);
      words.push_back(std::move(w));
    }
  }
  for (const auto& w : words) {
    Element x = Element::from_atom_word(gs, w);
    Element xi = x.inverse();
    for (int r = 0; r < na; ++r) {
      Element re = Element::from_simple(gs, gs.atom_simple(r));
      for (int n = 1; n <= max_n; ++n) {
        Element y = xi * re.pow(n) * x;
        if (!y.is_positive()) continue;
        bool ok = false;
        for (int t = 0; t < na && !ok; ++t) {
          Element te = Element::from_simple(gs, gs.atom_simple(t));
          if (y == te.pow(n) && re * x == x * te) ok = true;
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

// ---- G(de,e,n) wrapper -------------------------------------------------------------

int gdeen_grade(const Element& x, int e) {
  const auto& gs = x.structure();
  int t = gs.atom_by_name("t");
  if (t < 0)
    throw std::invalid_argument("grading needs the type-B atom named t");
  long long s = 0;
  for (const auto& l : x.signed_word())
    if (l.atom == t) s += l.sign;
  int r = (int)(s % e);
  return r < 0 ? r + e : r;
}

GdeenHandle gdeen_wrap(const ParabolicHandle& ambient, int de, int e, int n) {
  if (e <= 1 || de % e != 0 || de / e <= 1)
    throw std::invalid_argument("wrapper needs e > 1 and d = de/e > 1");
  const auto& gs = ambient.structure();
  int t = gs.atom_by_name("t");
  if (t < 0)
    throw std::invalid_argument("ambient structure must be the type-B model");

  // images of the Artin generators in G(de,1,n)
  std::vector<GroupElem> gen_imgs;
  std::vector<std::string> names;
  gen_imgs.push_back(Monomial::diagonal(de, n, 0, 1));
  names.push_back("t");
  for (int i = 0; i + 1 < n; ++i) {
    gen_imgs.push_back(Monomial::transposition(de, n, i, i + 1));
    names.push_back("s" + std::to_string(i + 1));
  }
  GroupSpec spec;
  spec.family = "gdeen";
  spec.generators = gen_imgs;
  spec.generator_names = names;
  FiniteGroup What = build_group(spec);

  auto image_of = [&](const Element& x) {
    int g = What.identity();
    for (const auto& l : x.signed_word()) {
      int gi = What.index_of(gen_imgs[l.atom]);
      g = What.mul(g, l.sign > 0 ? gi : What.inv(gi));
    }
    return g;
  };

  // What_0 = image of the ambient parabolic's generators
  std::vector<int> sub_gens;
  ambient.standard_part().for_each([&](size_t u) {
    Element gen = Element::from_simple(gs, gs.atom_simple((int)u))
                      .conjugate(ambient.conjugator());
    sub_gens.push_back(image_of(gen));
  });
  std::vector<int> What0 = What.subgroup(sub_gens);

  // W_0 = What_0 restricted to phase sums divisible by e
  std::size_t zhat = What.center_order(What0);
  std::vector<int> W0;
  for (int g : What0) {
    const auto& mo = std::get<Monomial>(What.elem(g));
    if (mo.phase_sum() % e == 0) W0.push_back(g);
  }
  std::size_t zw = What.center_order(W0);
  if (zw == 0 || zhat % zw != 0)
    throw std::domain_error(
        "center ratio is not an integer: the wrapped parabolic is not of the "
        "expected kind");
  GdeenHandle h;
  h.ambient = ambient;
  h.de = de;
  h.e = e;
  h.n = n;
  h.m0 = (long long)(zhat / zw);
  h.z = ambient.z().pow(h.m0);
  return h;
}

}  // namespace garside
