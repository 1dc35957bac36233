#ifndef GARSIDE_GELEM_HPP
#define GARSIDE_GELEM_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "garside/cyclotomic.hpp"

namespace garside {

// Monomial matrix over mu_m: e_j -> zeta_m^{phase[j]} e_{perm[j]}.
// Covers the infinite families G(de,e,n), symmetric groups (m = 1) and the
// Coxeter types A/B/D/I2 used by the catalog.
struct Monomial {
  int m = 1;
  std::vector<int> perm;   // images, 0-based
  std::vector<int> phase;  // residues mod m

  static Monomial identity(int m, int n);
  static Monomial transposition(int m, int n, int i, int j);
  // e_i -> zeta^k e_j, e_j -> zeta^{-k} e_i, identity elsewhere
  static Monomial reflected_transposition(int m, int n, int i, int j, int k);
  static Monomial diagonal(int m, int n, int i, int k);

  int dim() const { return (int)perm.size(); }
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  Monomial inverse() const;
  bool is_identity() const;
  // order-2 element fixing a hyperplane
  bool is_reflection() const;
  // exponent of the product of the nonzero entries, mod m
  int phase_sum() const;
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.m == b.m && a.perm == b.perm && a.phase == b.phase;
  }
  void append_key(std::string& out) const;
};

// Dense exact matrix over Q(zeta_m), for the exceptional groups.
struct CycMatrix {
  int m = 1;
  int n = 0;
  std::vector<Cyc> a;  // row-major, n*n

  static CycMatrix identity(int m, int n);
  const Cyc& at(int i, int j) const { return a[i * n + j]; }
  Cyc& at(int i, int j) { return a[i * n + j]; }
  friend CycMatrix operator*(const CycMatrix& x, const CycMatrix& y);
  bool is_identity() const;
  // rank(M - I) == 1 via vanishing of all 2x2 minors, plus M != I and M^2 = I
  // is NOT required here: any finite-order matrix with rank(M-I)=1 is a
  // (complex) reflection. Order-2 is checked separately where needed.
  bool is_reflection() const;
  bool has_order_two() const;
  friend bool operator==(const CycMatrix& x, const CycMatrix& y) {
    return x.m == y.m && x.n == y.n && x.a == y.a;
  }
  void append_key(std::string& out) const;
};

using GroupElem = std::variant<Monomial, CycMatrix>;

GroupElem gelem_mul(const GroupElem& a, const GroupElem& b);
GroupElem gelem_inverse(const GroupElem& a);
bool gelem_is_identity(const GroupElem& a);
bool gelem_is_reflection(const GroupElem& a);
bool gelem_has_order_two(const GroupElem& a);
std::string gelem_key(const GroupElem& a);

}  // namespace garside

#endif
