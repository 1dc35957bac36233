#include "garside/conjugacy.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>

namespace garside {

SwapStep swap_step(const Element& x) {
  auto fr = left_fraction(x);
  Element phi = fr.numerator * fr.denominator.inverse();
  return {fr.denominator, phi};
}

SwapTrace swap_orbit(const Element& x) {
  SwapTrace tr;
  tr.start = x;
  std::unordered_map<std::string, int> seen;
  seen.emplace(x.canonical_key(), 0);
  Element cur = x;
  while (true) {
    SwapStep st = swap_step(cur);
    cur = st.image;
    tr.steps.push_back(std::move(st));
    auto key = cur.canonical_key();
    auto it = seen.find(key);
    if (it != seen.end()) {
      int n = (int)tr.steps.size();
      tr.preperiod = it->second;
      tr.period = n - it->second;
      break;
    }
    seen.emplace(std::move(key), (int)tr.steps.size());
  }
  tr.to_recurrent = Element::identity(x.structure());
  for (int i = 0; i < tr.preperiod; ++i)
    tr.to_recurrent = tr.steps[i].conjugator * tr.to_recurrent;
  return tr;
}

bool is_recurrent(const Element& x) {
  auto tr = swap_orbit(x);
  return tr.preperiod == 0;
}

Element transport(const Element& y, const Element& u) {
  if (!u.is_positive()) throw std::logic_error("transport needs positive u");
  auto fr = left_fraction(y);
  return meet_pos(fr.denominator * u, fr.numerator * u);
}

RhoResult rho(const GarsideStructure& gs, int atom_id, const Element& x) {
  if (!x.is_positive()) throw std::logic_error("rho needs positive x");
  std::vector<int> xw = x.atom_word();
  RhoResult res;
  int c = gs.atom_simple(atom_id);
  res.chain.push_back(c);
  while (true) {
    // carry a row of LCM squares across x to get x \ c
    int carry = c;
    for (int a : xw) {
      int top = gs.atom_simple(a);
      int j = gs.join_pref(top, carry);
      carry = gs.lquot(top, j);
    }
    int next = gs.join_pref(c, carry);
    if (next == c) break;
    c = next;
    res.chain.push_back(c);
  }
  res.rho = c;
  return res;
}

std::vector<int> minimal_positive_conjugators(const Element& x) {
  const auto& gs = x.structure();
  std::vector<int> rhos;
  for (int a = 0; a < gs.num_atoms(); ++a) {
    int r = rho(gs, a, x).rho;
    bool dup = false;
    for (int s : rhos)
      if (s == r) {
        dup = true;
        break;
      }
    if (!dup) rhos.push_back(r);
  }
  std::vector<int> out;
  for (int r : rhos) {
    bool minimal = true;
    for (int s : rhos)
      if (s != r && gs.leq_pref(s, r)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(r);
  }
  return out;
}

ConjGraph positive_conjugates_graph(const Element& x, std::size_t vertex_cap) {
  if (!x.is_positive())
    throw std::logic_error("positive_conjugates_graph needs a positive seed");
  const auto& gs = x.structure();
  ConjGraph g;
  g.vertices.push_back(x);
  g.index.emplace(x.canonical_key(), 0);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int vi = queue.front();
    queue.pop_front();
    Element v = g.vertices[vi];
    for (int r : minimal_positive_conjugators(v)) {
      Element w = v.conjugate(Element::from_simple(gs, r));
      auto key = w.canonical_key();
      auto it = g.index.find(key);
      int wi;
      if (it == g.index.end()) {
        if (g.vertices.size() >= vertex_cap) {
          g.capped = true;
          return g;
        }
        wi = (int)g.vertices.size();
        g.vertices.push_back(w);
        g.index.emplace(std::move(key), wi);
        queue.push_back(wi);
      } else {
        wi = it->second;
      }
      g.arrows.push_back({vi, wi, r});
    }
  }
  return g;
}

std::string ConjGraph::dot(const GarsideStructure& gs) const {
  std::ostringstream os;
  os << "digraph conjugates {\n";
  for (size_t i = 0; i < vertices.size(); ++i)
    os << "  v" << i << " [label=\""
       << word_str(gs, vertices[i].atom_word()) << "\"];\n";
  for (const auto& a : arrows)
    os << "  v" << a.from << " -> v" << a.to << " [label=\""
       << word_str(gs, gs.word_of(a.conjugator)) << "\"];\n";
  os << "}\n";
  return os.str();
}

std::optional<std::pair<Element, Element>> conjugate_to_positive(
    const Element& x) {
  if (x.is_positive()) return std::make_pair(Element::identity(x.structure()), x);
  Element conj = Element::identity(x.structure());
  Element cur = x;
  std::unordered_map<std::string, int> seen;
  seen.emplace(cur.canonical_key(), 0);
  while (true) {
    SwapStep st = swap_step(cur);
    conj = st.conjugator * conj;
    cur = st.image;
    if (cur.is_positive()) return std::make_pair(conj, cur);
    auto key = cur.canonical_key();
    if (seen.count(key)) return std::nullopt;  // orbit closed, no positive member
    seen.emplace(std::move(key), 1);
  }
}

std::vector<Element> r_m_set(const Element& x, int m, std::size_t cap) {
  const auto& gs = x.structure();
  auto within = [m](const Element& y) {
    auto fr = left_fraction(y);
    return fr.numerator.sup() <= m && fr.denominator.sup() <= m;
  };
  // find a recurrent seed inside the bound
  SwapTrace tr = swap_orbit(x);
  std::optional<Element> seed;
  for (int i = tr.preperiod; i < tr.preperiod + tr.period; ++i) {
    const Element& y = tr.element_at(i);
    if (within(y)) {
      seed = y;
      break;
    }
  }
  if (!seed) return {};

  std::vector<Element> out{*seed};
  std::unordered_map<std::string, int> seen;
  seen.emplace(seed->canonical_key(), 0);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int vi = queue.front();
    queue.pop_front();
    Element v = out[vi];
    for (int s = 1; s < gs.num_simples(); ++s) {
      Element w = v.conjugate(Element::from_simple(gs, s));
      auto key = w.canonical_key();
      if (seen.count(key)) continue;
      if (!within(w)) continue;
      if (!is_recurrent(w)) continue;
      if (out.size() >= cap) throw std::runtime_error("r_m_set cap exceeded");
      seen.emplace(std::move(key), (int)out.size());
      queue.push_back((int)out.size());
      out.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace garside
