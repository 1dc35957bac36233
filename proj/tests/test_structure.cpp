#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "common.hpp"
#include "garside/element.hpp"

using namespace garside;
using testutil::cat;
using testutil::random_positive;
using testutil::random_signed;

namespace {

Element el(const GarsideStructure& gs, const std::string& w) {
  return Element::from_signed_word(gs, parse_word(gs, w));
}

// brute-force oracle: scan the whole simples table for the longest s whose
// quotient out of ab stays positive (the quotient goes through the global
// normal-form machinery, a code path disjoint from head_pref's local formula)
int head_oracle(const GarsideStructure& gs, int a, int b) {
  Element ab = Element::from_simple(gs, a) * Element::from_simple(gs, b);
  int best = gs.identity_simple();
  for (int s = 0; s < gs.num_simples(); ++s) {
    if (gs.length(s) <= gs.length(best)) continue;
    Element rest = Element::from_simple(gs, s).inverse() * ab;
    if (rest.is_positive()) best = s;
  }
  return best;
}

}  // namespace

TEST_CASE("structure tables: classical B_3") {
  const auto& gs = *cat("braid:3").structure;
  CHECK(gs.num_simples() == 6);
  CHECK(gs.num_atoms() == 2);
  CHECK(gs.length(gs.delta_simple()) == 3);
  CHECK(gs.tau_order() == 2);
  // dd(s) = tau^{-1}(s): rcomp twice
  for (int s = 0; s < gs.num_simples(); ++s)
    CHECK(gs.rcomp(gs.rcomp(s)) == gs.tau_inv(s));
}

TEST_CASE("structure tables: Corran-Picantin G(3,3,3)") {
  const auto& gs = *cat("cp:3,3").structure;
  CHECK(gs.num_atoms() == 4);
  CHECK(gs.length(gs.delta_simple()) == 6);
  // Delta = (t0 t1 s3)^2 as an element
  Element d = el(gs, "t0 t1 s3 t0 t1 s3");
  CHECK(d == Element::delta_power(gs, 1));
  // tau = conjugation by Delta is central on the t-atoms: Delta t_i = t_{i-n} Delta
  // with n = 3 = e, so tau fixes each t_i here
  for (int i = 0; i < 3; ++i) {
    int a = gs.atom_by_name("t" + std::to_string(i));
    CHECK(gs.tau(gs.atom_simple(a)) == gs.atom_simple(a));
  }
}

TEST_CASE("head of a pair of simples equals the brute-force oracle") {
  for (const char* name : {"braid:3", "braid:4", "cp:3,3", "dual:G24"}) {
    CAPTURE(name);
    const auto& gs = *cat(name).structure;
    REQUIRE(gs.num_simples() <= 200);
    for (int a = 0; a < gs.num_simples(); ++a)
      for (int b = 0; b < gs.num_simples(); ++b)
        CHECK(gs.head_pref(a, b) == head_oracle(gs, a, b));
  }
}

TEST_CASE("spec'd heads in B_3 and G24") {
  const auto& gs = *cat("braid:3").structure;
  int s1 = gs.atom_simple(0), s2 = gs.atom_simple(1);
  CHECK(gs.head_pref(s1, s2) == gs.mult(s1, s2));  // s1s2 is simple
  CHECK(gs.head_pref(s1, s1) == s1);               // rcomp(s1) /\ s1 = 1
  const auto& g24 = *cat("dual:G24").structure;
  int b1 = g24.atom_simple(g24.atom_by_name("b1"));
  int b2 = g24.atom_simple(g24.atom_by_name("b2"));
  CHECK(g24.head_pref(b1, b2) == g24.mult(b1, b2));
  CHECK(g24.length(g24.mult(b1, b2)) == 2);
}

TEST_CASE("normal forms: spec examples in B_3") {
  const auto& gs = *cat("braid:3").structure;
  Element x = el(gs, "s1 s2 s1 s2");
  CHECK(x.inf() == 1);
  CHECK(x.canonical_length() == 1);
  CHECK(x.factors()[0] == gs.atom_simple(1));
  CHECK(el(gs, "").is_identity());
  Element y = el(gs, "s1^-1 s2");
  CHECK(y.inf() == -1);
  CHECK(y.canonical_length() == 2);
  // left-weighted condition on every catalog structure below
}

TEST_CASE("normal form is left-weighted and preserves the group image") {
  std::mt19937_64 rng(101);
  for (const char* name : {"braid:4", "cp:3,3", "dual:G24", "artin:B3"}) {
    CAPTURE(name);
    const auto& gs = *cat(name).structure;
    const auto& W = gs.group();
    for (int t = 0; t < 150; ++t) {
      Element x = random_signed(gs, rng, 10);
      // group image equals the image of the generating word
      int g = W.identity();
      // rebuild the word the same way to compare
      // (from_signed_word already normalized; compare with a fresh product)
      Element y = Element::identity(gs);
      for (const auto& l : x.signed_word()) {
        Element a = Element::from_simple(gs, gs.atom_simple(l.atom));
        y = y * (l.sign > 0 ? a : a.inverse());
        int ga = gs.group_of(gs.atom_simple(l.atom));
        g = W.mul(g, l.sign > 0 ? ga : W.inv(ga));
      }
      CHECK(y == x);
      CHECK(x.group_image() == g);
      // left-weighted: every adjacent pair satisfies head(x_i x_{i+1}) = x_i
      const auto& f = x.factors();
      for (size_t i = 0; i + 1 < f.size(); ++i)
        CHECK(gs.meet_pref(gs.rcomp(f[i]), f[i + 1]) == gs.identity_simple());
    }
  }
}

TEST_CASE("normalization is a fixed point and insensitive to free insertions") {
  std::mt19937_64 rng(55);
  const auto& gs = *cat("braid:4").structure;
  for (int t = 0; t < 100; ++t) {
    Element x = random_signed(gs, rng, 8);
    auto w = x.signed_word();
    // insert a a^-1 at a random place
    int pos = (int)(rng() % (w.size() + 1));
    int a = (int)(rng() % (unsigned)gs.num_atoms());
    w.insert(w.begin() + pos, {a, -1});
    w.insert(w.begin() + pos, {a, +1});
    CHECK(Element::from_signed_word(gs, w) == x);
    CHECK(Element::from_factors(gs, x.inf(), x.factors()) == x);
  }
}

TEST_CASE("mul and inverse round-trip") {
  std::mt19937_64 rng(77);
  for (const char* name : {"braid:4", "dual:G24", "cp:3,3"}) {
    const auto& gs = *cat(name).structure;
    for (int t = 0; t < 80; ++t) {
      Element x = random_signed(gs, rng, 8);
      Element y = random_signed(gs, rng, 8);
      CHECK((x * y) * y.inverse() == x);
      CHECK((x * x.inverse()).is_identity());
      CHECK(Element::delta_power(gs, 1) * Element::delta_power(gs, -1) ==
            Element::identity(gs));
    }
  }
}

TEST_CASE("lattice laws on positive elements") {
  std::mt19937_64 rng(13);
  for (const char* name : {"braid:4", "cp:3,3", "dual:G24"}) {
    CAPTURE(name);
    const auto& gs = *cat(name).structure;
    for (int t = 0; t < 60; ++t) {
      Element a = random_positive(gs, rng, 8);
      Element b = random_positive(gs, rng, 8);
      Element c = random_positive(gs, rng, 8);
      Element m = meet_pos(a, b);
      Element j = join_pos(a, b);
      CHECK(meet_pos(b, a) == m);
      CHECK(join_pos(b, a) == j);
      CHECK(meet_pos(a, meet_pos(b, c)) == meet_pos(meet_pos(a, b), c));
      CHECK(join_pos(a, join_pos(b, c)) == join_pos(join_pos(a, b), c));
      CHECK(meet_pos(a, join_pos(a, b)) == a);  // absorption
      CHECK(join_pos(a, meet_pos(a, b)) == a);
      // m <= a <= j
      CHECK(meet_pos(m, a) == m);
      CHECK(meet_pos(a, j) == a);
    }
  }
}

TEST_CASE("published joins: G24 and G(3,3,3)") {
  const auto& g24 = *cat("dual:G24").structure;
  Element b6 = el(g24, "b6"), b10 = el(g24, "b10");
  Element j = join_pos(b6, b10);
  CHECK(j == el(g24, "b6 b13"));
  CHECK(j == el(g24, "b10 b1"));
  const auto& cp = *cat("cp:3,3").structure;
  Element t0 = el(cp, "t0"), t2 = el(cp, "t2");
  CHECK(join_pos(t0, t2) == el(cp, "t0 t1"));
  CHECK(join_pos(el(cp, "t1"), t2) == el(cp, "t0 t1"));
}

TEST_CASE("fractions: uniqueness and spec values") {
  const auto& gs = *cat("braid:3").structure;
  auto fr = left_fraction(el(gs, "s1^-1 s2"));
  CHECK(fr.denominator == el(gs, "s1"));
  CHECK(fr.numerator == el(gs, "s2"));
  auto fr2 = left_fraction(el(gs, "s1 s2"));
  CHECK(fr2.denominator.is_identity());
  Element v = Element::delta_power(gs, -1) * el(gs, "s1 s1 s2");
  auto fr3 = left_fraction(v);
  CHECK(fr3.denominator == el(gs, "s2 s1"));
  CHECK(fr3.numerator == el(gs, "s1 s2"));
  // reduced: a /\ b = 1 and a^-1 b = x on random elements
  std::mt19937_64 rng(31);
  for (const char* name : {"braid:4", "dual:G24"}) {
    const auto& g = *cat(name).structure;
    for (int t = 0; t < 60; ++t) {
      Element x = random_signed(g, rng, 8);
      auto f = left_fraction(x);
      CHECK(meet_pos(f.denominator, f.numerator).is_identity());
      CHECK(f.denominator.inverse() * f.numerator == x);
      auto rf = right_fraction(x);
      CHECK(rf.numerator * rf.denominator.inverse() == x);
      CHECK(meet_pos_suff(rf.numerator, rf.denominator).is_identity());
    }
  }
}

TEST_CASE("suffix-side heads agree with a brute-force oracle") {
  for (const char* name : {"braid:4", "dual:G24"}) {
    CAPTURE(name);
    const auto& gs = *cat(name).structure;
    for (int a = 0; a < gs.num_simples(); ++a)
      for (int b = 0; b < gs.num_simples(); ++b) {
        Element ab = Element::from_simple(gs, a) * Element::from_simple(gs, b);
        int best = gs.identity_simple();
        for (int s = 0; s < gs.num_simples(); ++s) {
          if (gs.length(s) <= gs.length(best)) continue;
          Element rest = ab * Element::from_simple(gs, s).inverse();
          if (rest.is_positive()) best = s;
        }
        CHECK(gs.head_suff(a, b) == best);
      }
  }
}

TEST_CASE("rescale views") {
  const auto& gs = *cat("braid:3").structure;
  auto r1 = rescale(gs, 1);
  CHECK(r1.delta() == Element::delta_power(gs, 1));
  auto r2 = rescale(gs, 2);
  Element x = el(gs, "s1 s2 s1 s2");
  CHECK(!r1.is_simple(x));
  CHECK(r2.is_simple(x));
  // an element whose denominator has sup 2 becomes simple-denominator
  Element y = el(gs, "s1^-1 s1^-1 s2 s2");
  auto fr = left_fraction(y);
  CHECK(fr.denominator.sup() == 2);
  CHECK(!r1.is_simple(fr.denominator));
  CHECK(r2.is_simple(fr.denominator));
  CHECK_THROWS(rescale(gs, 0));
}

TEST_CASE("square-freeness of simples across the catalog") {
  for (const char* name :
       {"braid:4", "cp:3,3", "cp:4,3", "dual:G24", "artin:B3", "artin:I2(6)",
        "dualsym:5", "rank2:G12", "rank2:G22"})
    CHECK(cat(name).structure->squarefree());
}

TEST_CASE("tau preserves meets and joins") {
  std::mt19937_64 rng(3);
  for (const char* name : {"braid:4", "dual:G24", "cp:3,3"}) {
    const auto& gs = *cat(name).structure;
    for (int t = 0; t < 300; ++t) {
      int a = (int)(rng() % gs.num_simples());
      int b = (int)(rng() % gs.num_simples());
      CHECK(gs.tau(gs.meet_pref(a, b)) == gs.meet_pref(gs.tau(a), gs.tau(b)));
      CHECK(gs.tau(gs.join_pref(a, b)) == gs.join_pref(gs.tau(a), gs.tau(b)));
    }
  }
}

TEST_CASE("normal form uniqueness: equal group images in the positive monoid") {
  // homogeneous structures: two positive words with the same image and the
  // same length represent the same monoid element exactly when the interval
  // machinery says so; normal forms of rewrites agree
  const auto& gs = *cat("dual:G24").structure;
  std::mt19937_64 rng(9);
  for (int t = 0; t < 60; ++t) {
    Element x = random_positive(gs, rng, 6);
    // rewrite: push through a join square somewhere
    auto w = x.atom_word();
    if (w.size() < 2) continue;
    size_t i = rng() % (w.size() - 1);
    int a = gs.atom_simple(w[i]), b = gs.atom_simple(w[i + 1]);
    int m = gs.mult(a, b);
    if (m < 0) continue;
    // find another factorization u v = m
    for (int u = 1; u < gs.num_simples(); ++u) {
      if (gs.length(u) != 1 || !gs.leq_pref(u, m)) continue;
      int v = gs.lquot(u, m);
      if (gs.length(v) != 1) continue;
      auto w2 = w;
      w2[i] = gs.atom_id_of(u);
      w2[i + 1] = gs.atom_id_of(v);
      CHECK(Element::from_atom_word(gs, w2) == x);
    }
  }
}

namespace {

// word builders for the regenerated LCM-diagram fixtures
std::vector<int> braid_run(const GarsideStructure& gs, int j, int k) {
  // S_{j,k} = s_j s_{j+1} ... s_k (1-based atom names s1..sn)
  std::vector<int> w;
  for (int i = j; i <= k; ++i) w.push_back(gs.atom_by_name("s" + std::to_string(i)));
  return w;
}

Element word_el(const GarsideStructure& gs, const std::vector<int>& atoms) {
  return Element::from_atom_word(gs, atoms);
}

std::vector<int> operator+(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// G(e,e,n) helpers over atoms t0..t_{e-1}, s3..sn
std::vector<int> cp_S2k(const GarsideStructure& gs, int e, int a, int k) {
  // S^{(a)}_{2,k} = t_a s3 ... sk
  std::vector<int> w{gs.atom_by_name("t" + std::to_string(((a % e) + e) % e))};
  for (int i = 3; i <= k; ++i) w.push_back(gs.atom_by_name("s" + std::to_string(i)));
  return w;
}

std::vector<int> cp_lambda(const GarsideStructure& gs, int i, int k) {
  // Lambda_{i,k} = s_i ... s_3 t0 t1 s_3 ... s_k  (tau = t0 t1)
  std::vector<int> w;
  for (int q = i; q >= 3; --q) w.push_back(gs.atom_by_name("s" + std::to_string(q)));
  w.push_back(gs.atom_by_name("t0"));
  w.push_back(gs.atom_by_name("t1"));
  for (int q = 3; q <= k; ++q) w.push_back(gs.atom_by_name("s" + std::to_string(q)));
  return w;
}

}  // namespace

TEST_CASE("regenerated fixtures: atom joins against runs in classical braids") {
  const auto& gs = *cat("braid:5").structure;  // n = 4 atoms s1..s4
  auto atom = [&](int i) {
    return std::vector<int>{gs.atom_by_name("s" + std::to_string(i))};
  };
  for (int j = 1; j <= 4; ++j)
    for (int k = j; k <= 4; ++k) {
      Element Sjk = word_el(gs, braid_run(gs, j, k));
      // commuting atoms pass through
      for (int i = 1; i <= 4; ++i) {
        if (i >= j - 1 && i <= k + 1) continue;
        CHECK(join_pos(word_el(gs, atom(i)), Sjk) ==
              word_el(gs, atom(i) + braid_run(gs, j, k)));
      }
      // interior atoms shift by one
      for (int m = j + 1; m <= k; ++m)
        CHECK(join_pos(word_el(gs, atom(m)), Sjk) ==
              word_el(gs, braid_run(gs, j, k) + atom(m - 1)));
      // the leading atom is already a prefix
      CHECK(join_pos(word_el(gs, atom(j)), Sjk) == Sjk);
      // left neighbour: join = S_{j,k} S_{j-1,k-1} extended
      if (j >= 2)
        CHECK(join_pos(word_el(gs, atom(j - 1)), Sjk) ==
              word_el(gs, atom(j - 1) + braid_run(gs, j, k) +
                              braid_run(gs, j - 1, k - 1)));
      // right neighbour
      if (k + 1 <= 4)
        CHECK(join_pos(word_el(gs, atom(k + 1)), Sjk) ==
              word_el(gs, braid_run(gs, j, k) + atom(k + 1) + atom(k)));
    }
}

TEST_CASE("regenerated fixtures: Corran-Picantin identities") {
  for (auto [e, n] : std::vector<std::pair<int, int>>{{3, 3}, {4, 3}, {3, 4}}) {
    CAPTURE(e);
    CAPTURE(n);
    const auto& gs = *cat("cp:" + std::to_string(e) + "," + std::to_string(n))
                          .structure;
    // Delta = Lambda_2 Lambda_3 ... Lambda_n with Lambda_k = Lambda_{k,k}
    std::vector<int> w;
    for (int k = 2; k <= n; ++k) w = w + cp_lambda(gs, k, k);
    CHECK(word_el(gs, w) == Element::delta_power(gs, 1));
    // Lambda_k t_i = t_{i-1} Lambda_k for k > 2
    for (int k = 3; k <= n; ++k)
      for (int i = 0; i < e; ++i) {
        auto lam = cp_lambda(gs, k, k);
        auto ti = std::vector<int>{gs.atom_by_name("t" + std::to_string(i))};
        auto tim = std::vector<int>{
            gs.atom_by_name("t" + std::to_string(((i - 1) % e + e) % e))};
        CHECK(word_el(gs, lam + ti) == word_el(gs, tim + lam));
      }
    // tau = t_i t_{i+1} for every i, and tau = t_i \/ t_j for i != j
    Element tau01 = word_el(gs, {gs.atom_by_name("t0"), gs.atom_by_name("t1")});
    for (int i = 0; i < e; ++i) {
      int a = gs.atom_by_name("t" + std::to_string(i));
      int b = gs.atom_by_name("t" + std::to_string((i + 1) % e));
      CHECK(word_el(gs, {a, b}) == tau01);
    }
    for (int i = 0; i < e; ++i)
      for (int j = 0; j < e; ++j) {
        if (i == j) continue;
        int a = gs.atom_by_name("t" + std::to_string(i));
        int b = gs.atom_by_name("t" + std::to_string(j));
        CHECK(join_pos(word_el(gs, {a}), word_el(gs, {b})) == tau01);
      }
  }
}

TEST_CASE("regenerated fixtures: sigma joins a t-atom through Lambda-bars") {
  for (auto [e, n] : std::vector<std::pair<int, int>>{{3, 3}, {4, 3}, {3, 4}}) {
    CAPTURE(e);
    CAPTURE(n);
    const auto& gs = *cat("cp:" + std::to_string(e) + "," + std::to_string(n))
                          .structure;
    for (int j = 3; j <= n; ++j)
      for (int k = j; k <= n; ++k)
        for (int a = 0; a < e; ++a)
          for (int b = 0; b < e; ++b) {
            if (a == b) continue;
            // sigma^{(a)}_{2,j,k} = S_{j,k} S_{j-1,k-1} ... S^{(a)}_{2,k-j+2}
            std::vector<int> sigma;
            for (int r = j; r >= 3; --r)
              sigma = sigma + [&] {
                std::vector<int> run;
                for (int i = r; i <= k - j + r; ++i)
                  run.push_back(gs.atom_by_name("s" + std::to_string(i)));
                return run;
              }();
            sigma = sigma + cp_S2k(gs, e, a, k - j + 2);
            // Lambda-bar_{3,j,k} = Lambda_{j,3} Lambda_{j+1,3} ... Lambda_{k,3}
            std::vector<int> lbar;
            for (int r = j; r <= k; ++r) lbar = lbar + cp_lambda(gs, r, 3);
            // Omega^{(a,b)}_{k-j+3} = S^{(a+1)}_{2,k-j+3}? built per its shape
            int p = k - j + 3;
            std::vector<int> omega;
            for (int idx = 0; idx < p - 2; ++idx)
              omega = omega + cp_S2k(gs, e, a + 1 + idx, p - idx);
            omega = omega + cp_S2k(gs, e, b + p - 2, 2);
            Element sig = word_el(gs, sigma);
            Element tb = word_el(gs, {gs.atom_by_name("t" + std::to_string(b))});
            Element join = join_pos(tb, sig);
            CHECK(join == word_el(gs, std::vector<int>{gs.atom_by_name(
                                          "t" + std::to_string(b))} + lbar));
            CHECK(join == word_el(gs, sigma + omega));
            // and sigma divides Lambda-bar
            CHECK(meet_pos(sig, word_el(gs, lbar)) == sig);
          }
  }
}

TEST_CASE("mirror translation round-trips and fixes simple suffix heads") {
  for (const char* name : {"braid:4", "cp:3,3", "cp:3,4", "dual:G24",
                           "dual:G27", "dualsym:5", "artin:B3"}) {
    CAPTURE(name);
    const auto& gs = *cat(name).structure;
    for (int s = 0; s < gs.num_simples(); ++s) {
      CHECK(gs.from_mirror(gs.to_mirror(s)) == s);
      // a simple is its own maximal simple prefix and suffix
      CHECK(gs.head_pref(gs.identity_simple(), s) == s);
      CHECK(gs.head_suff(gs.identity_simple(), s) == s);
      CHECK(gs.head_suff(s, gs.identity_simple()) == s);
    }
  }
}
