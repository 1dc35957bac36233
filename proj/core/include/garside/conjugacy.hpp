#ifndef GARSIDE_CONJUGACY_HPP
#define GARSIDE_CONJUGACY_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "garside/element.hpp"

namespace garside {

// One swap step: phi(x) = b a^{-1} for the reduced left fraction x = a^{-1} b.
// The conjugating element is a: phi(x) = a x a^{-1}.
struct SwapStep {
  Element conjugator;  // a
  Element image;       // phi(x)
};
SwapStep swap_step(const Element& x);

// Orbit of x under iterated swap, up to the first repetition.
struct SwapTrace {
  Element start;
  std::vector<SwapStep> steps;  // steps[i]: phi^i(x) -> phi^{i+1}(x)
  int preperiod = 0;            // m: phi^m(x) = phi^n(x), first recurrence
  int period = 0;               // n - m
  // product a_{m-1} ... a_0: conjugates x to the first recurrent element
  Element to_recurrent;
  const Element& element_at(int i) const {
    return i == 0 ? start : steps[i - 1].image;
  }
};
SwapTrace swap_orbit(const Element& x);

bool is_recurrent(const Element& x);

// transport of a positive u at y (where y^u = z): u1 = au /\ bu for the
// reduced fraction y = a^{-1} b; then phi(y)^{u1} = phi(z).
Element transport(const Element& y, const Element& u);

// minimal positive element rho with atom a as prefix and x^rho positive,
// obtained through the converging-prefix chain.
struct RhoResult {
  int rho;                  // simple id
  std::vector<int> chain;   // converging prefixes c_0=a, ..., c_m=rho
};
RhoResult rho(const GarsideStructure& gs, int atom_id, const Element& x);

// arrow set at vertex x of the positive-conjugates graph
std::vector<int> minimal_positive_conjugators(const Element& x);

struct ConjGraph {
  std::vector<Element> vertices;
  struct Arrow {
    int from, to;
    int conjugator;  // simple id
  };
  std::vector<Arrow> arrows;
  std::unordered_map<std::string, int> index;  // canonical key -> vertex
  bool capped = false;

  bool contains(const Element& x) const {
    return index.count(x.canonical_key()) > 0;
  }
  std::string dot(const GarsideStructure& gs) const;
};
ConjGraph positive_conjugates_graph(const Element& x,
                                    std::size_t vertex_cap = 100000);

// If x has a positive conjugate, returns (c, y) with c the swap-product
// conjugator (minimal positive for the suffix order with c x c^{-1} = y
// positive); otherwise nullopt, certified by swap-orbit periodicity.
std::optional<std::pair<Element, Element>> conjugate_to_positive(
    const Element& x);

// The finite set R^m(x): recurrent conjugates with both fraction parts of
// supremum at most m, computed by closure under conjugation by simples.
std::vector<Element> r_m_set(const Element& x, int m,
                             std::size_t cap = 100000);

}  // namespace garside

#endif
