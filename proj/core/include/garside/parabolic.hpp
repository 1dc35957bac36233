#ifndef GARSIDE_PARABOLIC_HPP
#define GARSIDE_PARABOLIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "garside/conjugacy.hpp"
#include "garside/element.hpp"

namespace garside {

// ---- atom sets and standard-parabolic predicates --------------------------

// Join of the atoms in X; identity simple for the empty set.
int delta_of(const GarsideStructure& gs, const DynBitset& X);
// closure(X) = atoms dividing Delta_X
DynBitset closure(const GarsideStructure& gs, const DynBitset& X);
bool is_saturated(const GarsideStructure& gs, const DynBitset& X);
// all closed sets, generated as a closure system (small even for many atoms)
std::vector<DynBitset> saturated_sets(const GarsideStructure& gs);

DynBitset atom_set(const GarsideStructure& gs,
                   const std::vector<std::string>& names);
std::string atom_set_str(const GarsideStructure& gs, const DynBitset& X);

// Standard-parabolic criterion for a balanced simple delta: products of its
// divisors have their maximal simple prefix and suffix inside Div(delta).
enum class GodelleOutcome { pass, not_balanced, fail };
GodelleOutcome godelle_check(const GarsideStructure& gs, int delta_simple);

struct LcmGarsideReport {
  bool pass = true;
  bool delta_is_atom_join = true;
  struct Failure {
    DynBitset X;
    std::string reason;
  };
  std::vector<Failure> failures;
};
LcmGarsideReport check_lcm_garside(const GarsideStructure& gs);

// ---- supports and ribbons --------------------------------------------------

DynBitset support(const Element& x);

// r_{X,u} = Delta_X^{-1} Delta_{X+u}; trivial iff u is in the closure of X
int ribbon(const GarsideStructure& gs, const DynBitset& X, int atom_u);

struct ChainCertificate {
  bool ok = false;
  std::vector<DynBitset> layers;  // A_0 subset A_1 subset ... (atom sets)
};
ChainCertificate chain_certificate(const GarsideStructure& gs,
                                   const DynBitset& X);

struct SupportCheckOptions {
  std::string mode = "sampled";  // "sampled" | "certificate"
  unsigned long long seed = 1;
  int samples = 2000;
  int max_length = 8;
  int threads = 1;
};
struct SupportCheckReport {
  bool pass = true;
  std::string mode;
  unsigned long long seed = 0;
  int samples = 0;
  int max_length = 0;
  struct Counterexample {
    Element x;
    int rho;  // simple id
    DynBitset supp_x, supp_image;
  };
  std::optional<Counterexample> counterexample;
};
SupportCheckReport check_support_preserving(const GarsideStructure& gs,
                                            const SupportCheckOptions& opt);

// ---- verified-structure gate ----------------------------------------------

struct VerifiedStructure {
  StructurePtr gs;
  bool lcm_garside = false;
  bool support_preserving = false;
  bool overridden = false;
  bool usable() const {
    return overridden || (lcm_garside && support_preserving);
  }
};
// Runs check_lcm_garside then check_support_preserving; throws structure_error
// when either fails.
VerifiedStructure verify_for_parabolics(StructurePtr gs,
                                        const SupportCheckOptions& opt = {});
VerifiedStructure override_verification(StructurePtr gs);

// ---- parabolic handles ------------------------------------------------------

// (G_X)^g = g^{-1} G_X g for a saturated atom set X. Two handles denote the
// same subgroup exactly when their z-elements coincide.
class ParabolicHandle {
public:
  ParabolicHandle() = default;
  static ParabolicHandle standard(const GarsideStructure& gs,
                                  const DynBitset& X);
  static ParabolicHandle conjugated(const GarsideStructure& gs,
                                    const DynBitset& X, const Element& g);
  static ParabolicHandle trivial(const GarsideStructure& gs);

  const GarsideStructure& structure() const { return *gs_; }
  const DynBitset& standard_part() const { return X_; }
  const Element& conjugator() const { return g_; }
  bool is_trivial() const { return !X_.any(); }
  bool is_whole_group() const {
    return (int)X_.count() == gs_->num_atoms();
  }
  // z-element and the exponent e with z = (Delta_X)^e up to conjugation
  const Element& z() const;
  int exponent() const { return e_; }
  const std::string& z_key() const { return zkey_; }

  friend bool operator==(const ParabolicHandle& a, const ParabolicHandle& b) {
    return a.zkey_ == b.zkey_;
  }
  friend bool operator!=(const ParabolicHandle& a, const ParabolicHandle& b) {
    return !(a == b);
  }
  std::string str() const;

private:
  const GarsideStructure* gs_ = nullptr;
  DynBitset X_;
  Element g_;
  Element z_;
  int e_ = 0;
  std::string zkey_;
};

// z-element of the standard parabolic G_X, with its exponent.
std::pair<Element, int> standard_z(const GarsideStructure& gs,
                                   const DynBitset& X);

ParabolicHandle parabolic_closure(const VerifiedStructure& v, const Element& x);
int varphi(const VerifiedStructure& v, const Element& x);

// c with P^c standard; returns (c, X) where P^c = G_X
std::pair<Element, DynBitset> standardize(const ParabolicHandle& P);

bool membership(const Element& w, const ParabolicHandle& P);

struct IntersectResult {
  ParabolicHandle value;
  bool exact = false;  // otherwise a certified lower bound
};
IntersectResult intersect(const VerifiedStructure& v, const ParabolicHandle& P1,
                          const ParabolicHandle& P2, int bound = 3);

// requires both handles irreducible
bool adjacent(const ParabolicHandle& P1, const ParabolicHandle& P2);
bool conjugating_test(const ParabolicHandle& P1, const ParabolicHandle& P2,
                      const Element& g);

// connectivity of the non-commutation graph of the atom images in W; valid
// for structures whose atoms are order-2 reflections with distinct
// hyperplanes (all shipped catalogs)
bool is_irreducible(const GarsideStructure& gs, const DynBitset& X);
bool is_irreducible(const ParabolicHandle& P);

// ---- curve graph -------------------------------------------------------------

struct CurveGraph {
  std::vector<ParabolicHandle> vertices;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> cliques;  // maximal cliques when requested
  std::string dot() const;
  std::string json() const;
};
CurveGraph curve_graph(const VerifiedStructure& v, int conj_bound,
                       bool emit_cliques = false);

// ---- rank-2 exceptional closures -------------------------------------------

struct Rank2Closure {
  enum Kind { trivial_subgroup, whole_group, cyclic } kind = whole_group;
  // for cyclic: PC = conjugator^{-1} <generator> conjugator
  Element generator;
  Element conjugator;
};
// catalog_tag in {"G12", "G22", "G13"}; for G13 the structure must be the
// I2(6) model with atoms named a, b.
Rank2Closure pc_rank2(const GarsideStructure& gs, const Element& x,
                      const std::string& catalog_tag);

// bounded-scale check of the atom-power commutation property:
// r^n x = x y with y positive implies y = t^n for an atom t with r x = x t
bool dmm_property_check(const GarsideStructure& gs, int max_len, int max_n,
                        unsigned long long seed = 7, int sample_cap = 2000);

// ---- G(de,e,n) wrapper -------------------------------------------------------

// A parabolic of the braid group of G(de,e,n) (d = de/e > 1), represented as
// the kernel of the Z/e grading restricted to a parabolic of the G(de,1,n)
// braid group (modelled by the type-B Artin structure).
struct GdeenHandle {
  ParabolicHandle ambient;  // parabolic of the B-type structure
  int de = 0, e = 0, n = 0;
  long long m0 = 0;  // |Z(W-hat_0)| / |Z(W_0)|
  Element z;         // z = ambient.z^{m0}
};
// grading of an element: image in Z/e (t-exponent sum mod e)
int gdeen_grade(const Element& x, int e);
GdeenHandle gdeen_wrap(const ParabolicHandle& ambient, int de, int e, int n);

}  // namespace garside

#endif
