#ifndef GARSIDE_ELEMENT_HPP
#define GARSIDE_ELEMENT_HPP

#include <string>
#include <utility>
#include <vector>

#include "garside/structure.hpp"

namespace garside {

// A letter of a free signed word over the atoms.
struct SignedLetter {
  int atom;  // atom id
  int sign;  // +1 or -1
};

// Group element in left normal form: Delta^p x_1 ... x_r with every x_i a
// proper simple and x_i x_{i+1} /\ Delta = x_i. Value type; cheap to copy at
// desk scale.
class Element {
public:
  Element() : gs_(nullptr), p_(0) {}
  explicit Element(const GarsideStructure* gs) : gs_(gs), p_(0) {}

  static Element identity(const GarsideStructure& gs);
  static Element delta_power(const GarsideStructure& gs, long long p);
  static Element from_simple(const GarsideStructure& gs, int simple);
  static Element from_factors(const GarsideStructure& gs, long long p,
                              std::vector<int> factors);
  static Element from_signed_word(const GarsideStructure& gs,
                                  const std::vector<SignedLetter>& w);
  // positive word given by atom ids
  static Element from_atom_word(const GarsideStructure& gs,
                                const std::vector<int>& atoms);

  const GarsideStructure& structure() const { return *gs_; }
  long long inf() const { return p_; }
  long long sup() const { return p_ + (long long)f_.size(); }
  int canonical_length() const { return (int)f_.size(); }
  const std::vector<int>& factors() const { return f_; }
  bool is_identity() const { return p_ == 0 && f_.empty(); }
  bool is_positive() const { return p_ >= 0; }
  bool is_negative() const;

  // total atom length of a positive element
  long long positive_length() const;
  // atom-id word of a positive element (Delta expanded)
  std::vector<int> atom_word() const;
  std::vector<SignedLetter> signed_word() const;

  Element operator*(const Element& o) const;
  Element inverse() const;
  Element pow(long long k) const;
  Element conjugate(const Element& g) const;  // g^{-1} * this * g

  // image in the underlying finite group
  int group_image() const;

  // maximal simple prefix (this /\ Delta) for positive elements
  int head_simple() const;

  friend bool operator==(const Element& a, const Element& b) {
    return a.p_ == b.p_ && a.f_ == b.f_ && a.gs_ == b.gs_;
  }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  std::string canonical_key() const;
  std::string str() const;  // "D^p . w1 . w2" with simples as atom words

private:
  void normalize();

  const GarsideStructure* gs_;
  long long p_;
  std::vector<int> f_;
};

// lattice operations on positive elements
Element meet_pos(const Element& x, const Element& y);
// right-complement x \ y = x^{-1} (x \/ y)
Element complement_pos(const Element& x, const Element& y);
Element join_pos(const Element& x, const Element& y);

// mirror transfer: sigma(x) lives on gs.mirror(), reverses words
Element to_mirror(const Element& x);
Element from_mirror(const Element& x);

Element meet_pos_suff(const Element& x, const Element& y);
Element join_pos_suff(const Element& x, const Element& y);

// reduced fraction decompositions
struct FractionPair {
  Element denominator;  // a
  Element numerator;    // b
};
// x = a^{-1} b with a /\ b = 1
FractionPair left_fraction(const Element& x);
// x = u v^{-1} with u /\_suff v = 1; returns {denominator: v, numerator: u}
FractionPair right_fraction(const Element& x);

// (G, G^+, Delta^N) view: same positive monoid, rescaled Garside element
struct RescaledStructure {
  const GarsideStructure* base;
  int N;
  Element delta() const { return Element::delta_power(*base, N); }
  bool is_simple(const Element& x) const {
    return x.is_positive() && x.sup() <= N;
  }
};
RescaledStructure rescale(const GarsideStructure& gs, int N);

// parsing and printing against atom names
std::vector<SignedLetter> parse_word(const GarsideStructure& gs,
                                     const std::string& text);
std::string word_str(const GarsideStructure& gs,
                     const std::vector<int>& atom_word);

}  // namespace garside

#endif
