#include "garside/catalog.hpp"

#include <algorithm>
#include <stdexcept>

#include "garside/data_file.hpp"
#include "garside/parabolic.hpp"

namespace garside {

namespace {

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long long catalan(int n) {
  // number of noncrossing partitions of an n-set
  long long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

// apex = unique element of maximal length (Coxeter-type intervals)
int longest_element(const FiniteGroup& W, const std::vector<int>& S) {
  // cheap BFS for lengths only
  std::vector<int> len(W.order(), -1);
  std::vector<int> queue{W.identity()};
  len[W.identity()] = 0;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int x = queue[qi];
    for (int s : S) {
      int y = W.mul(x, s);
      if (len[y] < 0) {
        len[y] = len[x] + 1;
        queue.push_back(y);
      }
    }
  }
  int best = W.identity(), count = 0;
  for (size_t g = 0; g < W.order(); ++g)
    if (len[g] > len[best]) best = (int)g;
  for (size_t g = 0; g < W.order(); ++g)
    if (len[g] == len[best]) ++count;
  if (count != 1)
    throw structure_error("longest element is not unique");
  return best;
}

StructurePtr interval_structure(std::shared_ptr<const FiniteGroup> W,
                                const std::vector<int>& S,
                                const std::vector<std::string>& names, int c) {
  Interval I = length_and_interval(std::move(W), S, names, c);
  return GarsideStructure::build(std::move(I));
}

// t_k of the standard G(e,e,n) presentation: e_0 <-> e_1 with phases -k, k
Monomial cp_t(int e, int n, int k) {
  Monomial r = Monomial::identity(e, n);
  r.perm[0] = 1;
  r.perm[1] = 0;
  r.phase[0] = ((-k) % e + e) % e;
  r.phase[1] = ((k % e) + e) % e;
  return r;
}

}  // namespace

CatalogEntry classical_braid(int n, const CatalogOptions& opt) {
  if (n < 2) throw std::invalid_argument("braid index must be at least 2");
  GroupSpec spec;
  spec.family = "symmetric";
  spec.element_cap = opt.element_cap;
  spec.expected_order = (std::size_t)factorial(n);
  for (int i = 0; i + 1 < n; ++i) {
    spec.generators.push_back(Monomial::transposition(1, n, i, i + 1));
    spec.generator_names.push_back("s" + std::to_string(i + 1));
  }
  auto W = std::make_shared<FiniteGroup>(build_group(spec));
  std::vector<int> S = W->generators();
  int c = longest_element(*W, S);
  CatalogEntry e;
  e.name = "braid:" + std::to_string(n);
  e.kind = "classical";
  e.structure = interval_structure(W, S, spec.generator_names, c);
  e.expected.simples = (int)factorial(n);
  e.expected.atoms = n - 1;
  e.expected.delta_len = n * (n - 1) / 2;
  return e;
}

CatalogEntry artin(const std::string& type, const CatalogOptions& opt) {
  CatalogEntry e;
  e.kind = "artin";
  e.name = "artin:" + type;
  if (type.size() >= 2 && (type[0] == 'A' || type[0] == 'B' || type[0] == 'D') &&
      std::isdigit((unsigned char)type[1])) {
    int k = std::stoi(type.substr(1));
    if (type[0] == 'A') {
      CatalogEntry base = classical_braid(k + 1, opt);
      e.structure = base.structure;
      e.expected = base.expected;
      return e;
    }
    if (type[0] == 'D') {
      if (k < 3) throw std::invalid_argument("type D needs rank >= 3");
      CatalogEntry base = corran_picantin(2, k, opt);
      e.structure = base.structure;
      e.expected = base.expected;
      return e;
    }
    // type B_k as G(2,1,k)
    GroupSpec spec;
    spec.family = "coxeter";
    spec.element_cap = opt.element_cap;
    spec.expected_order = (std::size_t)(factorial(k) << k);
    spec.generators.push_back(Monomial::diagonal(2, k, 0, 1));
    spec.generator_names.push_back("t");
    for (int i = 0; i + 1 < k; ++i) {
      spec.generators.push_back(Monomial::transposition(2, k, i, i + 1));
      spec.generator_names.push_back("s" + std::to_string(i + 1));
    }
    auto W = std::make_shared<FiniteGroup>(build_group(spec));
    int c = longest_element(*W, W->generators());
    e.structure =
        interval_structure(W, W->generators(), spec.generator_names, c);
    e.expected.simples = (int)(factorial(k) << k);
    e.expected.atoms = k;
    e.expected.delta_len = k * k;
    return e;
  }
  if (type.rfind("I2(", 0) == 0 && type.back() == ')') {
    int m = std::stoi(type.substr(3, type.size() - 4));
    if (m < 3) throw std::invalid_argument("I2(m) needs m >= 3");
    GroupSpec spec;
    spec.family = "coxeter";
    spec.element_cap = opt.element_cap;
    spec.expected_order = (std::size_t)(2 * m);
    spec.generators.push_back(cp_t(m, 2, 0));
    spec.generator_names.push_back("a");
    spec.generators.push_back(cp_t(m, 2, 1));
    spec.generator_names.push_back("b");
    spec.phase_sum_mod = m;
    auto W = std::make_shared<FiniteGroup>(build_group(spec));
    int c = longest_element(*W, W->generators());
    e.structure =
        interval_structure(W, W->generators(), spec.generator_names, c);
    e.expected.simples = 2 * m;
    e.expected.atoms = 2;
    e.expected.delta_len = m;
    return e;
  }
  throw std::invalid_argument("unknown Coxeter type '" + type + "'");
}

// Atom order t0 < ... < t_{e-1} < s3 < ... < sn. The t-indexing follows the
// convention in which Delta t_i Delta^{-1} = t_{i-n mod e} (pinned by the
// catalog tests through the tau tables); t_k acts as the monomial block
// swapping the first two coordinates with phases -k, k.
CatalogEntry corran_picantin(int e, int n, const CatalogOptions& opt) {
  if (e < 1 || n < 2) throw std::invalid_argument("corran_picantin needs e>=1, n>=2");
  GroupSpec spec;
  spec.family = "gdeen";
  spec.element_cap = opt.element_cap;
  long long order = factorial(n);
  for (int i = 0; i + 1 < n; ++i) order *= e;
  spec.expected_order = (std::size_t)order;
  spec.phase_sum_mod = e;
  for (int i = 0; i < e; ++i) {
    spec.generators.push_back(cp_t(e, n, i));
    spec.generator_names.push_back("t" + std::to_string(i));
  }
  for (int k = 3; k <= n; ++k) {
    spec.generators.push_back(Monomial::transposition(e, n, k - 2, k - 1));
    spec.generator_names.push_back("s" + std::to_string(k));
  }
  auto W = std::make_shared<FiniteGroup>(build_group(spec));
  int c;
  if (e == 1) {
    // the presentation degenerates to the type A_{n-1} Artin presentation
    c = longest_element(*W, W->generators());
  } else {
    // c = image of (t0 t1 s3 ... sn)^(n-1)
    int factor = W->mul(W->generators()[0], W->generators()[1]);
    for (int k = 3; k <= n; ++k)
      factor = W->mul(factor, W->generators()[e + k - 3]);
    c = W->power(factor, n - 1);
  }
  CatalogEntry entry;
  entry.name = "cp:" + std::to_string(e) + "," + std::to_string(n);
  entry.kind = "corran-picantin";
  entry.structure = interval_structure(W, W->generators(), spec.generator_names, c);
  entry.expected.atoms = e + n - 2;
  entry.expected.delta_len = e == 1 ? n * (n - 1) / 2 : n * (n - 1);
  return entry;
}

CatalogEntry dual_sym(int n, const CatalogOptions& opt) {
  if (n < 2 || n > 12) throw std::invalid_argument("dual_sym supports 2 <= n <= 12");
  if (n > 7 && !opt.allow_large)
    throw std::invalid_argument("dual_sym beyond n=7 requires allow_large");
  GroupSpec spec;
  spec.family = "symmetric";
  spec.element_cap = opt.element_cap;
  spec.expected_order = (std::size_t)factorial(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      spec.generators.push_back(Monomial::transposition(1, n, i, j));
      spec.generator_names.push_back("r" + std::to_string(i + 1) +
                                     std::to_string(j + 1));
    }
  auto W = std::make_shared<FiniteGroup>(build_group(spec));
  Monomial cyc = Monomial::identity(1, n);
  for (int i = 0; i < n; ++i) cyc.perm[i] = (i + 1) % n;
  int c = W->index_of(cyc);
  CatalogEntry e;
  e.name = "dualsym:" + std::to_string(n);
  e.kind = "dual-sym";
  e.structure = interval_structure(W, W->generators(), spec.generator_names, c);
  e.expected.simples = (int)catalan(n);
  e.expected.atoms = n * (n - 1) / 2;
  e.expected.delta_len = n - 1;
  e.expected.hypdual = true;
  return e;
}

namespace {

CatalogEntry entry_from_refl(const ReflData& d, const std::string& kind,
                             const std::string& name,
                             const CatalogOptions& opt) {
  GroupSpec spec;
  spec.family = "exceptional";
  spec.element_cap = opt.element_cap;
  spec.expected_order = d.order;
  for (size_t i = 0; i < d.atoms.size(); ++i) {
    if (!d.atoms[i].is_reflection())
      throw std::runtime_error("data atom '" + d.atom_names[i] +
                               "' is not a reflection");
    if (!d.atoms[i].has_order_two())
      throw std::runtime_error("data atom '" + d.atom_names[i] +
                               "' does not have order 2");
    spec.generators.push_back(d.atoms[i]);
    spec.generator_names.push_back(d.atom_names[i]);
  }
  auto W = std::make_shared<FiniteGroup>(build_group(spec));
  int c = W->identity();
  for (const auto& an : d.coxeter_word) {
    auto it = std::find(d.atom_names.begin(), d.atom_names.end(), an);
    int gi = W->generators()[it - d.atom_names.begin()];
    c = W->mul(c, gi);
  }
  CatalogEntry e;
  e.name = name;
  e.kind = kind;
  e.structure = interval_structure(W, W->generators(), spec.generator_names, c);
  // the engine re-verifies the declared apex length
  if (d.apexlen > 0 &&
      e.structure->length(e.structure->delta_simple()) != d.apexlen)
    throw std::runtime_error("data coxeter word length does not match apexlen");
  e.expected.atoms = (int)d.atoms.size();
  e.expected.delta_len = d.apexlen;
  return e;
}

}  // namespace

CatalogEntry dual_exceptional(const std::string& name,
                              const CatalogOptions& opt) {
  std::string path;
  if (name.size() > 5 && name.substr(name.size() - 5) == ".refl") {
    path = name;
  } else {
    std::string low = name;
    std::transform(low.begin(), low.end(), low.begin(), ::tolower);
    if (low != "g24" && low != "g27" && low != "g29" && low != "g33" &&
        low != "g34")
      throw std::invalid_argument("unknown dual exceptional '" + name + "'");
    if ((low == "g33" || low == "g34") && !opt.allow_large)
      throw std::invalid_argument(
          "group order exceeds desk scale; pass the opt-in flag to build " +
          name);
    path = data_dir() + "/" + low + ".refl";
  }
  ReflData d = parse_refl_file(path);
  CatalogEntry e =
      entry_from_refl(d, "dual-exceptional", "dual:" + d.name, opt);
  e.expected.hypdual = true;
  if (d.name == "G24") e.expected.simples = 30;
  if (d.name == "G27") e.expected.simples = 42;
  if (d.name == "G29") e.expected.simples = 112;
  return e;
}

CatalogEntry rank2(const std::string& name, const CatalogOptions& opt) {
  std::string low = name;
  std::transform(low.begin(), low.end(), low.begin(), ::tolower);
  if (low == "g13") {
    // modelled on the Artin group of type I2(6); the braided-reflection
    // classes correspond to <b^-1> and <Delta a^-2>
    CatalogEntry base = artin("I2(6)", opt);
    base.name = "rank2:G13";
    base.kind = "rank2";
    base.parabolic_representatives = {"<b^-1>", "<Delta a^-2>"};
    return base;
  }
  if (low != "g12" && low != "g22")
    throw std::invalid_argument("unknown rank-2 entry '" + name + "'");
  ReflData d = parse_refl_file(data_dir() + "/" + low + ".refl");
  CatalogEntry e = entry_from_refl(d, "rank2", "rank2:" + d.name, opt);
  e.parabolic_representatives = {"<s>"};
  e.expected.delta_len = (low == "g12") ? 4 : 5;
  e.expected.atoms = 3;
  return e;
}

std::string shephard_alias(const std::string& name) {
  if (name == "G25") return "artin:A3";
  if (name == "G26") return "artin:B3";
  if (name == "G32") return "artin:A4";
  // G(de,1,n) family: same discriminant as type B_n
  if (name.rfind("G(", 0) == 0 && name.back() == ')') {
    std::string body = name.substr(2, name.size() - 3);
    int c1 = (int)body.find(',');
    int c2 = (int)body.rfind(',');
    if (c1 > 0 && c2 > c1) {
      int e = std::stoi(body.substr(c1 + 1, c2 - c1 - 1));
      int n = std::stoi(body.substr(c2 + 1));
      if (e == 1 && n >= 2) return "artin:B" + std::to_string(n);
    }
  }
  throw std::invalid_argument("no Shephard alias for '" + name + "'");
}

CatalogEntry make_catalog(const std::string& name, const CatalogOptions& opt) {
  auto colon = name.find(':');
  if (name.size() > 5 && name.substr(name.size() - 5) == ".refl")
    return dual_exceptional(name, opt);
  if (colon == std::string::npos)
    throw std::invalid_argument("unknown catalog name '" + name + "'");
  std::string head = name.substr(0, colon), tail = name.substr(colon + 1);
  if (head == "braid") return classical_braid(std::stoi(tail), opt);
  if (head == "artin") return artin(tail, opt);
  if (head == "cp") {
    auto comma = tail.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("cp needs the form cp:e,n");
    return corran_picantin(std::stoi(tail.substr(0, comma)),
                           std::stoi(tail.substr(comma + 1)), opt);
  }
  if (head == "dualsym") return dual_sym(std::stoi(tail), opt);
  if (head == "dual") return dual_exceptional(tail, opt);
  if (head == "rank2") return rank2(tail, opt);
  if (head == "alias") {
    CatalogEntry e = make_catalog(shephard_alias(tail), opt);
    e.redirect = e.name;
    e.name = "alias:" + tail;
    e.kind = "alias";
    return e;
  }
  throw std::invalid_argument("unknown catalog name '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"braid:N",    "artin:AN",  "artin:BN",   "artin:DN", "artin:I2(M)",
          "cp:E,N",     "dualsym:N", "dual:G24",   "dual:G27", "dual:G29",
          "dual:G33",   "dual:G34",  "rank2:G12",  "rank2:G22", "rank2:G13",
          "alias:G25",  "alias:G26", "alias:G32",  "alias:G(de,1,n)"};
}

}  // namespace garside
