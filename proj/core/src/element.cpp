#include "garside/element.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace garside {

Element Element::identity(const GarsideStructure& gs) { return Element(&gs); }

Element Element::delta_power(const GarsideStructure& gs, long long p) {
  Element e(&gs);
  e.p_ = p;
  return e;
}

Element Element::from_simple(const GarsideStructure& gs, int simple) {
  Element e(&gs);
  if (simple == gs.delta_simple())
    e.p_ = 1;
  else if (simple != gs.identity_simple())
    e.f_.push_back(simple);
  return e;
}

Element Element::from_factors(const GarsideStructure& gs, long long p,
                              std::vector<int> factors) {
  Element e(&gs);
  e.p_ = p;
  e.f_ = std::move(factors);
  e.normalize();
  return e;
}

Element Element::from_atom_word(const GarsideStructure& gs,
                                const std::vector<int>& atoms) {
  std::vector<int> f;
  f.reserve(atoms.size());
  for (int a : atoms) f.push_back(gs.atom_simple(a));
  return from_factors(gs, 0, std::move(f));
}

Element Element::from_signed_word(const GarsideStructure& gs,
                                  const std::vector<SignedLetter>& w) {
  Element e = identity(gs);
  for (const auto& l : w) {
    int s = gs.atom_simple(l.atom);
    if (l.sign > 0) {
      e = e * from_simple(gs, s);
    } else {
      // s^{-1} = Delta^{-1} tau^{-1}(rcomp(s))
      Element inv_s(&gs);
      inv_s.p_ = -1;
      int t = gs.tau_inv(gs.rcomp(s));
      if (t != gs.identity_simple()) inv_s.f_.push_back(t);
      e = e * inv_s;
    }
  }
  return e;
}

// Iterated local left-weighting. Each pass pulls weight toward the front and
// extracts full Deltas into the exponent; terminates because the total
// leftward weight strictly increases.
void Element::normalize() {
  const auto& gs = *gs_;
  const int id = gs.identity_simple();
  const int delta = gs.delta_simple();

  std::vector<int>& f = f_;
  f.erase(std::remove(f.begin(), f.end(), id), f.end());
  // extract any literal deltas first
  for (size_t i = 0; i < f.size();) {
    if (f[i] == delta) {
      for (size_t j = 0; j < i; ++j) f[j] = gs.tau(f[j]);
      f.erase(f.begin() + i);
      ++p_;
    } else {
      ++i;
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < f.size(); ++i) {
      int a = f[i], b = f[i + 1];
      int t = gs.meet_pref(gs.rcomp(a), b);
      if (t == id) continue;
      changed = true;
      int h = gs.mult(a, t);
      int r = gs.lquot(t, b);
      assert(h >= 0);
      if (h == delta) {
        for (size_t j = 0; j < i; ++j) f[j] = gs.tau(f[j]);
        ++p_;
        if (r == id) {
          f.erase(f.begin() + i, f.begin() + i + 2);
        } else {
          f[i] = r;
          f.erase(f.begin() + i + 1);
        }
      } else if (r == id) {
        f[i] = h;
        f.erase(f.begin() + i + 1);
      } else {
        f[i] = h;
        f[i + 1] = r;
      }
      if (i > 0) --i;  // re-examine the previous pair after a local change
    }
  }
}

bool Element::is_negative() const { return sup() <= 0; }

long long Element::positive_length() const {
  if (!is_positive()) throw std::logic_error("positive_length on non-positive");
  long long n = p_ * (long long)gs_->length(gs_->delta_simple());
  for (int s : f_) n += gs_->length(s);
  return n;
}

std::vector<int> Element::atom_word() const {
  if (!is_positive()) throw std::logic_error("atom_word on non-positive element");
  std::vector<int> w;
  const auto& dword = gs_->word_of(gs_->delta_simple());
  for (long long i = 0; i < p_; ++i) w.insert(w.end(), dword.begin(), dword.end());
  for (int s : f_) {
    const auto& sw = gs_->word_of(s);
    w.insert(w.end(), sw.begin(), sw.end());
  }
  return w;
}

std::vector<SignedLetter> Element::signed_word() const {
  std::vector<SignedLetter> w;
  const auto& dword = gs_->word_of(gs_->delta_simple());
  if (p_ < 0) {
    for (long long i = 0; i < -p_; ++i)
      for (auto it = dword.rbegin(); it != dword.rend(); ++it)
        w.push_back({*it, -1});
  } else {
    for (long long i = 0; i < p_; ++i)
      for (int a : dword) w.push_back({a, +1});
  }
  for (int s : f_)
    for (int a : gs_->word_of(s)) w.push_back({a, +1});
  return w;
}

Element Element::operator*(const Element& o) const {
  if (gs_ != o.gs_)
    throw std::invalid_argument("elements live on different structures");
  Element r(gs_);
  r.p_ = p_ + o.p_;
  r.f_.reserve(f_.size() + o.f_.size());
  for (int s : f_) r.f_.push_back(gs_->tau_pow(s, o.p_));
  for (int s : o.f_) r.f_.push_back(s);
  r.normalize();
  return r;
}

Element Element::inverse() const {
  const auto& gs = *gs_;
  Element r = identity(gs);
  for (auto it = f_.rbegin(); it != f_.rend(); ++it) {
    Element inv_s(&gs);
    inv_s.p_ = -1;
    int t = gs.tau_inv(gs.rcomp(*it));
    if (t != gs.identity_simple()) inv_s.f_.push_back(t);
    r = r * inv_s;
  }
  return r * delta_power(gs, -p_);
}

Element Element::pow(long long k) const {
  if (k < 0) return inverse().pow(-k);
  Element r = identity(*gs_);
  Element base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

Element Element::conjugate(const Element& g) const {
  return g.inverse() * (*this) * g;
}

int Element::group_image() const {
  const auto& W = gs_->group();
  int g = W.power(gs_->group_of(gs_->delta_simple()), p_);
  for (int s : f_) g = W.mul(g, gs_->group_of(s));
  return g;
}

int Element::head_simple() const {
  if (!is_positive()) throw std::logic_error("head of non-positive element");
  if (p_ >= 1) return gs_->delta_simple();
  if (f_.empty()) return gs_->identity_simple();
  return f_[0];
}

std::string Element::canonical_key() const {
  std::string s = std::to_string(p_);
  for (int x : f_) {
    s += '.';
    s += std::to_string(x);
  }
  return s;
}

std::string Element::str() const {
  std::ostringstream os;
  os << "D^" << p_;
  for (int s : f_) os << " . " << word_str(*gs_, gs_->word_of(s));
  return os.str();
}

Element meet_pos(const Element& x, const Element& y) {
  const auto& gs = x.structure();
  if (!x.is_positive() || !y.is_positive())
    throw std::logic_error("meet_pos needs positive inputs");
  Element a = x, b = y;
  std::vector<int> parts;
  while (true) {
    int h = gs.meet_pref(a.head_simple(), b.head_simple());
    if (h == gs.identity_simple()) break;
    parts.push_back(h);
    Element hi = Element::from_simple(gs, h).inverse();
    a = hi * a;
    b = hi * b;
  }
  return Element::from_factors(gs, 0, std::move(parts));
}

Element complement_pos(const Element& x, const Element& y) {
  const auto& gs = x.structure();
  if (!x.is_positive() || !y.is_positive())
    throw std::logic_error("complement_pos needs positive inputs");
  // fold x's atoms over LCM-diagram rows across y's simple factors
  std::vector<int> cur;
  if (y.inf() > 0)
    cur.assign((size_t)y.inf(), gs.delta_simple());
  cur.insert(cur.end(), y.factors().begin(), y.factors().end());
  for (int a : x.atom_word()) {
    int left = gs.atom_simple(a);
    std::vector<int> bottom;
    bottom.reserve(cur.size());
    for (int top : cur) {
      int j = gs.join_pref(left, top);
      bottom.push_back(gs.lquot(left, j));
      left = gs.lquot(top, j);
    }
    cur = std::move(bottom);
  }
  return Element::from_factors(gs, 0, std::move(cur));
}

Element join_pos(const Element& x, const Element& y) {
  return x * complement_pos(x, y);
}

Element to_mirror(const Element& x) {
  const auto& m = x.structure().mirror();
  auto w = x.signed_word();
  std::reverse(w.begin(), w.end());
  return Element::from_signed_word(m, w);
}

Element from_mirror(const Element& x) {
  const auto& main = x.structure().mirror();  // mirror of the mirror
  auto w = x.signed_word();
  std::reverse(w.begin(), w.end());
  return Element::from_signed_word(main, w);
}

Element meet_pos_suff(const Element& x, const Element& y) {
  return from_mirror(meet_pos(to_mirror(x), to_mirror(y)));
}

Element join_pos_suff(const Element& x, const Element& y) {
  return from_mirror(join_pos(to_mirror(x), to_mirror(y)));
}

FractionPair left_fraction(const Element& x) {
  const auto& gs = x.structure();
  if (x.is_positive()) return {Element::identity(gs), x};
  long long q = -x.inf();
  Element c = Element::delta_power(gs, q);
  Element d = Element::from_factors(gs, 0, x.factors());
  Element alpha = meet_pos(c, d);
  Element ai = alpha.inverse();
  return {ai * c, ai * d};
}

FractionPair right_fraction(const Element& x) {
  auto lf = left_fraction(to_mirror(x));
  // sigma(x) = a^{-1} b  <=>  x = sigma^{-1}(b) sigma^{-1}(a)^{-1}
  return {from_mirror(lf.denominator), from_mirror(lf.numerator)};
}

RescaledStructure rescale(const GarsideStructure& gs, int N) {
  if (N < 1) throw std::invalid_argument("rescale exponent must be >= 1");
  return RescaledStructure{&gs, N};
}

std::vector<SignedLetter> parse_word(const GarsideStructure& gs,
                                     const std::string& text) {
  std::vector<SignedLetter> w;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    int sign = 1;
    if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
      sign = -1;
      tok = tok.substr(0, tok.size() - 3);
    }
    int a = gs.atom_by_name(tok);
    if (a < 0) throw std::invalid_argument("unknown atom '" + tok + "'");
    w.push_back({a, sign});
  }
  return w;
}

std::string word_str(const GarsideStructure& gs,
                     const std::vector<int>& atom_word) {
  std::string s;
  for (size_t i = 0; i < atom_word.size(); ++i) {
    if (i) s += ' ';
    s += gs.atom_name(atom_word[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace garside
